#include "gsslat/intersection_form.hpp"

#include <stdexcept>

namespace gsslat {

IntersectionForm::IntersectionForm(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("matrix order must be >= 1");
    m_.assign(static_cast<std::size_t>(n) * n, 0);
}

std::size_t IntersectionForm::idx(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(i) * n_ + j;
}

void IntersectionForm::set(int i, int j, long long v) {
    m_[idx(i, j)] = v;
    m_[idx(j, i)] = v;
}

void IntersectionForm::add(int i, int j, long long v) {
    m_[idx(i, j)] += v;
    if (i != j) m_[idx(j, i)] += v;
}

std::vector<std::pair<int, int>> jump_edges(const SigmaWord& w) {
    const AWord a = expand(w);
    const int n = static_cast<int>(a.size());
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) {
        const int k = a[i] - 2;
        const int t = static_cast<int>((static_cast<long long>(i) + k + 1) % n);
        edges.emplace_back(std::min(i, t), std::max(i, t));
    }
    return edges;
}

IntersectionForm build_form(const SigmaWord& w) {
    const AWord a = expand(w);
    const int n = static_cast<int>(a.size());
    IntersectionForm m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, a[i]);
    for (const auto& [u, v] : jump_edges(w)) {
        if (u == v)
            m.add(u, u, -2);  // a curve meeting itself
        else
            m.add(u, v, -1);
    }
    return m;
}

namespace {

// Fraction-free elimination; returns the pivots, which are the leading
// principal minors d_1..d_n when no row swap occurs.  Stops early if
// `stop_nonpositive` and a pivot is <= 0.
struct BareissResult {
    Int det;
    bool all_leading_positive;
};

BareissResult bareiss(const IntersectionForm& m, bool stop_nonpositive) {
    const int n = m.order();
    std::vector<Int> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.entry(i, j);

    auto at = [&](int i, int j) -> Int& { return a[static_cast<std::size_t>(i) * n + j]; };

    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        if (at(k, k) == 0) {
            if (stop_nonpositive) return {0, false};  // zero leading minor
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (at(r, k) != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return {0, true};  // structurally singular
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
            sign = -sign;
        }
        if (stop_nonpositive && at(k, k) < 0) return {0, false};
        if (k == n - 1) break;
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int v = at(k, k) * at(i, j) - at(i, k) * at(k, j);
                at(i, j) = v / prev;  // exact by the Bareiss identity
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return {sign * at(n - 1, n - 1), true};
}

}  // namespace

Int det_exact(const IntersectionForm& m) { return bareiss(m, false).det; }

bool is_positive_definite(const IntersectionForm& m) {
    BareissResult r = bareiss(m, true);
    return r.all_leading_positive && r.det > 0;
}

Int chain_det(std::span<const int> weights) {
    if (weights.empty()) throw std::invalid_argument("chain_det: empty weight list");
    Int prev2 = 0;  // d_{-1}
    Int prev1 = 1;  // d_0, the empty chain
    for (int w : weights) {
        Int cur = w * prev1 - prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

Int cycle_det(std::span<const int> weights) {
    const std::size_t m = weights.size();
    if (m == 0) throw std::invalid_argument("cycle_det: empty weight list");
    if (m == 1) return Int(weights[0]) - 2;
    if (m == 2) return Int(weights[0]) * weights[1] - 4;
    // det(cycle) = det(chain) - det(interior chain) - 2
    Int interior = chain_det(weights.subspan(1, m - 2));
    return chain_det(weights) - interior - 2;
}

namespace {

long long signed_entry(const IntersectionForm& m, int i, int j, bool surface_sign) {
    return surface_sign ? -m.entry(i, j) : m.entry(i, j);
}

}  // namespace

std::string matrix_json(const IntersectionForm& m, bool surface_sign) {
    std::string out = "[";
    for (int i = 0; i < m.order(); ++i) {
        if (i) out += ',';
        out += '[';
        for (int j = 0; j < m.order(); ++j) {
            if (j) out += ',';
            out += std::to_string(signed_entry(m, i, j, surface_sign));
        }
        out += ']';
    }
    out += "]";
    return out;
}

std::string matrix_csv(const IntersectionForm& m, bool surface_sign) {
    std::string out;
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            if (j) out += ',';
            out += std::to_string(signed_entry(m, i, j, surface_sign));
        }
        out += '\n';
    }
    return out;
}

std::string matrix_latex(const IntersectionForm& m, bool surface_sign) {
    std::string out = "\\begin{pmatrix}\n";
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            if (j) out += " & ";
            out += std::to_string(signed_entry(m, i, j, surface_sign));
        }
        if (i + 1 < m.order()) out += " \\\\";
        out += '\n';
    }
    out += "\\end{pmatrix}\n";
    return out;
}

}  // namespace gsslat
