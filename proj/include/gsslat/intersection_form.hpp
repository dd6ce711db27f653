#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gsslat/bigint.hpp"
#include "gsslat/sequence.hpp"

namespace gsslat {

// The symmetric matrix M(sigma), positive convention; the surface matrix
// is its negation.  Off-diagonal entries are in {0, -1, -2}, the diagonal
// is a_i minus twice the number of self-edges at i.
class IntersectionForm {
public:
    explicit IntersectionForm(int n);

    int order() const { return n_; }
    long long entry(int i, int j) const { return m_[idx(i, j)]; }
    void set(int i, int j, long long v);          // keeps the matrix symmetric
    void add(int i, int j, long long v);

    const std::vector<long long>& data() const { return m_; }

private:
    std::size_t idx(int i, int j) const;

    int n_;
    std::vector<long long> m_;  // row-major
};

// One edge per index i: {i, (i + k_i + 1) mod n} with k_i = a_i - 2.
// Pairs are normalized (first <= second) and returned in index order.
std::vector<std::pair<int, int>> jump_edges(const SigmaWord& w);

IntersectionForm build_form(const SigmaWord& w);

// Exact determinant, fraction-free (Bareiss) elimination over arbitrary
// precision integers.  Never rounds.
Int det_exact(const IntersectionForm& m);

// Sylvester criterion with exact arithmetic: true iff every leading
// principal minor is > 0.
bool is_positive_definite(const IntersectionForm& m);

// Determinant of the tridiagonal matrix diag(weights) with -1 off the
// diagonal, by the three-term recurrence d_j = w_j d_{j-1} - d_{j-2}.
Int chain_det(std::span<const int> weights);

// Cyclic variant.  Degenerate conventions: a length-1 cycle is a single
// vertex with a self-loop (value w - 2); a length-2 cycle carries a double
// edge (off-diagonal -2).
Int cycle_det(std::span<const int> weights);

// Exporters.  surface_sign selects M(S) = -M(sigma).
std::string matrix_json(const IntersectionForm& m, bool surface_sign);
std::string matrix_csv(const IntersectionForm& m, bool surface_sign);
std::string matrix_latex(const IntersectionForm& m, bool surface_sign);

}  // namespace gsslat
