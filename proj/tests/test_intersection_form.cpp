#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "gsslat/intersection_form.hpp"
#include "gsslat/invariants.hpp"
#include "gsslat/sequence.hpp"
#include "oracles.hpp"

using namespace gsslat;

namespace {

SigmaWord W(const char* text) { return SigmaWord::parse(text); }

std::vector<std::vector<long long>> rows(const IntersectionForm& m) {
    std::vector<std::vector<long long>> out(m.order(), std::vector<long long>(m.order()));
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j) out[i][j] = m.entry(i, j);
    return out;
}

// The banded matrix of s_1 r_{n-1} in the positive convention, written
// directly from the jump edges {0,2},{1,2},{2,3},..,{n-1,0}.
IntersectionForm expected_s1_chain(int n) {
    IntersectionForm m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 2);
    m.set(0, 0, 3);
    m.add(0, 2 % n, -1);
    for (int i = 1; i < n; ++i) m.add(i, (i + 1) % n, -1);
    return m;
}

IntersectionForm cyclic_matrix(const std::vector<int>& weights) {
    const int n = static_cast<int>(weights.size());
    IntersectionForm m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, weights[i]);
    for (int i = 0; i < n; ++i) m.add(i, (i + 1) % n, -1);
    return m;
}

IntersectionForm chain_matrix(const std::vector<int>& weights) {
    const int n = static_cast<int>(weights.size());
    IntersectionForm m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, weights[i]);
    for (int i = 0; i + 1 < n; ++i) m.set(i, i + 1, -1);
    return m;
}

}  // namespace

TEST_CASE("matrices of the basis words") {
    CHECK(rows(build_form(W("s1"))) == std::vector<std::vector<long long>>{{1}});
    CHECK(rows(build_form(W("s1 r1"))) ==
          std::vector<std::vector<long long>>{{1, -1}, {-1, 2}});
    CHECK(rows(build_form(W("s1 s1"))) ==
          std::vector<std::vector<long long>>{{1, 0}, {0, 1}});
    for (int n = 3; n <= 8; ++n) {
        const SigmaWord w = concat(W("s1"), SigmaWord({{PartKind::Regular, n - 1}}));
        CHECK(rows(build_form(w)) == rows(expected_s1_chain(n)));
    }
}

TEST_CASE("heavy-vertex and double-edge words") {
    CHECK(rows(build_form(W("s2"))) ==
          std::vector<std::vector<long long>>{{4, -2}, {-2, 2}});
    // a_0 = n+1 forces a self-edge: the diagonal drops to n-1.
    CHECK(rows(build_form(W("s2 r1"))) ==
          std::vector<std::vector<long long>>{{2, 0, -1}, {0, 2, -1}, {-1, -1, 2}});
    CHECK(det_exact(build_form(W("s2"))) == 4);
}

TEST_CASE("edge multiset shape") {
    for (const SigmaWord& w : enumerate_words(9)) {
        const auto edges = jump_edges(w);
        CHECK(static_cast<int>(edges.size()) == w.total_length());
        // multiplicity <= 2 for distinct pairs, <= 1 for self-pairs
        for (std::size_t i = 0; i < edges.size(); ++i) {
            int mult = 0;
            for (std::size_t j = 0; j < edges.size(); ++j)
                if (edges[i] == edges[j]) ++mult;
            CHECK(mult <= (edges[i].first == edges[i].second ? 1 : 2));
        }
        const IntersectionForm m = build_form(w);
        for (int i = 0; i < m.order(); ++i) {
            CHECK(m.entry(i, i) >= 0);
            for (int j = 0; j < m.order(); ++j) {
                CHECK(m.entry(i, j) == m.entry(j, i));
                if (i != j) {
                    CHECK(m.entry(i, j) <= 0);
                    CHECK(m.entry(i, j) >= -2);
                }
            }
        }
    }
}

TEST_CASE("determinants of the one-block words") {
    for (int k = 1; k <= 6; ++k) {
        const SigmaWord w({{PartKind::Singular, k}});
        CHECK(det_exact(build_form(w)) == Int(k) * k);
    }
    for (int n = 1; n <= 10; ++n) {
        const SigmaWord w({{PartKind::Regular, n}});
        const IntersectionForm m = build_form(w);
        CHECK(det_exact(m) == 0);
        for (int i = 0; i < n; ++i) {
            long long row_sum = 0;
            for (int j = 0; j < n; ++j) row_sum += m.entry(i, j);
            CHECK(row_sum == 0);
        }
    }
}

TEST_CASE("det_exact agrees with cofactor expansion, n <= 7") {
    for (const SigmaWord& w : enumerate_words(7)) {
        const IntersectionForm m = build_form(w);
        CHECK(det_exact(m) == oracle::naive_det(m));
    }
    // Matrices that need a pivot swap inside the elimination.
    IntersectionForm swap2(2);
    swap2.set(0, 1, 1);
    CHECK(det_exact(swap2) == -1);
    IntersectionForm swap3(3);
    swap3.set(0, 1, 2);
    swap3.set(1, 2, 1);
    swap3.set(2, 2, 5);
    CHECK(det_exact(swap3) == oracle::naive_det(swap3));
}

TEST_CASE("positive definiteness") {
    CHECK(is_positive_definite(build_form(W("s1 r1"))));
    CHECK(is_positive_definite(build_form(W("s2 s2"))));
    CHECK(!is_positive_definite(build_form(W("r3"))));
    for (const SigmaWord& w : enumerate_words(10)) {
        const bool expect = w.singular_count() >= 1;
        CHECK(is_positive_definite(build_form(w)) == expect);
        if (expect) {
            const Int d = det_exact(build_form(w));
            CHECK(d >= 1);
            const Int r = boost::multiprecision::sqrt(d);
            CHECK(r * r == d);  // always a perfect square
        }
    }
}

TEST_CASE("chain determinants") {
    CHECK(chain_det(std::vector<int>{2, 2, 2}) == 4);
    CHECK(chain_det(std::vector<int>{3, 2}) == 5);
    CHECK(chain_det(std::vector<int>{2, 3, 2}) == 8);
    for (int m = 1; m <= 50; ++m)
        CHECK(chain_det(std::vector<int>(m, 2)) == m + 1);
    for (int m = 1; m <= 9; ++m)
        CHECK(det_exact(chain_matrix(std::vector<int>(m, 2))) == m + 1);
    // against the straight matrix determinant
    for (const std::vector<int>& w :
         {std::vector<int>{5}, {2, 7}, {3, 2, 2, 4}, {2, 2, 3, 2, 2, 6}})
        CHECK(chain_det(w) == det_exact(chain_matrix(w)));
}

TEST_CASE("cycle determinants") {
    CHECK(cycle_det(std::vector<int>{2, 2, 2, 2}) == 0);
    CHECK(cycle_det(std::vector<int>{3, 2}) == 2);   // double edge
    CHECK(cycle_det(std::vector<int>{4}) == 2);      // self-loop vertex
    for (int m = 1; m <= 50; ++m)
        CHECK(cycle_det(std::vector<int>(m, 2)) == 0);
    for (const std::vector<int>& w :
         {std::vector<int>{5, 2, 2}, {3, 3, 3}, {2, 4, 2, 3}, {6, 2, 2, 2, 3}})
        CHECK(cycle_det(w) == det_exact(cyclic_matrix(w)));
}

TEST_CASE("matrix exporters") {
    const IntersectionForm m = build_form(W("s1 r1"));
    CHECK(matrix_json(m, false) == "[[1,-1],[-1,2]]");
    CHECK(matrix_json(m, true) == "[[-1,1],[1,-2]]");
    CHECK(matrix_csv(m, false) == "1,-1\n-1,2\n");
    CHECK(matrix_latex(m, true) ==
          "\\begin{pmatrix}\n-1 & 1 \\\\\n1 & -2\n\\end{pmatrix}\n");
}
