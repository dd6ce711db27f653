#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gsslat/bigint.hpp"
#include "gsslat/dual_graph.hpp"
#include "gsslat/sequence.hpp"

namespace gsslat {

// Everything computed for one word, with the cross-checks between the
// matrix path, the tiling path and the dual-graph path.
struct InvariantReport {
    SigmaWord word;  // canonical rotation
    int n = 0;
    int big_n = 0;  // number of singular blocks
    int rho = 0;
    long long sigma = 0;
    SurfaceClass cls{};
    Int det;
    std::optional<Int> index;        // P_A(k); absent when N = 0
    std::optional<Int> delta_value;  // P_A(k) + 1; absent when N = 0
    std::vector<Int> branch_dets;
    std::vector<Int> cycle_dets;
    std::string poly_text;  // empty when N = 0
    std::vector<std::pair<std::string, bool>> checks;

    bool all_checks_pass() const;
    std::string json() const;
    std::string text() const;
};

Int discriminant(const SigmaWord& w);  // det_exact(build_form(w))

// P_{A(w)}(k_0,..,k_{N-1}); its square is the discriminant.  Requires N >= 1.
Int lattice_index(const SigmaWord& w);

// Product of the branch determinants; equals delta(w).  Intermediate only.
Int twisting_coefficient(const SigmaWord& w);

InvariantReport analyze(const SigmaWord& w);

// analyze() restricted to words with at least one singular block.
InvariantReport verify_main_theorem(const SigmaWord& w);

// True iff the discriminant is unchanged when the regular lengths are
// replaced by alt_lengths (one entry per regular block, in word order).
bool verify_reduction(const SigmaWord& w, std::span<const int> alt_lengths);

// Every valid word with n <= max_n, one representative per rotation class,
// in deterministic order (by n, then canonical block list).
std::vector<SigmaWord> enumerate_words(int max_n);

// One row per canonical word.  CSV header:
// word,n,N,rho,sigma_n,class,det,index,delta,branch_dets,poly
std::string atlas_csv(int max_n);
std::string atlas_jsonl(int max_n);

}  // namespace gsslat
