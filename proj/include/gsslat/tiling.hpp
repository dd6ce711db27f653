#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gsslat/bigint.hpp"
#include "gsslat/sequence.hpp"

namespace gsslat {

// Subsets of Z/NZ are bit sets: bit j is residue j.  N is capped at 24;
// everything downstream enumerates 2^N masks.
inline constexpr int kMaxMarkModulus = 24;

// The marked residues A of Z/NZ.  For a word, mark j iff the j-th singular
// block is cyclically followed by a regular block.
class MarkSet {
public:
    MarkSet(int modulus, std::uint32_t bits);

    int modulus() const { return n_; }
    std::uint32_t bits() const { return bits_; }
    bool contains(int j) const { return (bits_ >> j) & 1u; }
    std::vector<int> members() const;

    MarkSet rotated(int shift) const;  // A + shift

    friend bool operator==(const MarkSet&, const MarkSet&) = default;

private:
    int n_;
    std::uint32_t bits_;
};

MarkSet mark_set(const SigmaWord& w);  // requires at least one singular block

// Generating subsets relative to A: the singletons {a}, a in A, and the
// adjacent pairs {k, k+1 mod N} with k not in A (a pair must have two
// distinct elements and be a proper subset, so pairs need N >= 3).
// A subset is *allowed* when it is proper and partitions into disjoint
// generating subsets; each allowed subset contributes one monomial.
std::vector<std::uint32_t> generating_subsets(const MarkSet& a);

bool is_allowed(std::uint32_t b, const MarkSet& a);

// P_A as the set of its allowed subsets; tile B stands for the monomial
// prod_{i not in B} X_i with coefficient 1.  Tiles are kept sorted by mask.
class TilePolynomial {
public:
    TilePolynomial(int variables, std::vector<std::uint32_t> tiles);

    int variables() const { return n_; }
    const std::vector<std::uint32_t>& tiles() const { return tiles_; }

    // Canonical text, e.g. "X0*X1*X2 + X1*X2 + X0 + X1": tiles ordered by
    // cardinality, then by the numeric value of the monomial's index set.
    std::string str() const;

    friend bool operator==(const TilePolynomial&, const TilePolynomial&) = default;

private:
    int n_;
    std::vector<std::uint32_t> tiles_;
};

TilePolynomial poly(const MarkSet& a);

Int eval_poly(const TilePolynomial& p, std::span<const long long> k);

// The unique decomposition of an allowed subset: maximal runs ending at a
// mark (each with its spring, the residue just before the run), plus
// even-length runs avoiding the marks.
struct FixedRun {
    std::vector<int> run;  // cyclic order, last element is a mark
    int spring;            // not in B
};

struct CanonicalTiling {
    std::vector<FixedRun> fixed;
    std::vector<std::vector<int>> wandering;
};

CanonicalTiling canonical_tiling(std::uint32_t b, const MarkSet& a);

// Setting X_i = 0 for i in an allowed subset B maps P_A to P_{A'} on
// N - |B| variables: A' collects the surviving marks and the springs of B,
// relabelled along the complement of B in increasing order.
MarkSet specialize_zero(const MarkSet& a, std::uint32_t b);

// The polynomial P'P'' + P' + P'' on variables() + variables() indeterminates.
TilePolynomial compose(const TilePolynomial& p1, const TilePolynomial& p2);

// Twisting coefficient of the word: P_{A(w)}(k_0,..,k_{N-1}) + 1.
Int delta(const SigmaWord& w);

// {"N":..,"A":[..],"tiles":[[..],..]} with tiles in canonical text order.
std::string poly_json(const MarkSet& a, const TilePolynomial& p);

}  // namespace gsslat
