#include "gsslat/tiling.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gsslat {

namespace {

std::uint32_t full_mask(int n) { return (n >= 32) ? ~0u : ((1u << n) - 1u); }

// Maximal cyclic runs of a proper subset, each in cyclic order.  Scanning
// starts just past a non-member, so no run is split at the seam.
std::vector<std::vector<int>> cyclic_runs(std::uint32_t b, int n) {
    std::vector<std::vector<int>> runs;
    if (b == 0) return runs;
    int anchor = 0;
    while ((b >> anchor) & 1u) ++anchor;
    std::vector<int>* cur = nullptr;
    for (int off = 1; off <= n; ++off) {
        const int pos = (anchor + off) % n;
        if ((b >> pos) & 1u) {
            if (!cur) {
                runs.emplace_back();
                cur = &runs.back();
            }
            cur->push_back(pos);
        } else {
            cur = nullptr;
        }
    }
    return runs;
}

}  // namespace

MarkSet::MarkSet(int modulus, std::uint32_t bits) : n_(modulus), bits_(bits) {
    if (modulus < 1 || modulus > kMaxMarkModulus)
        throw std::invalid_argument("mark set modulus out of range");
    if (bits & ~full_mask(modulus))
        throw std::invalid_argument("mark set member out of range");
}

std::vector<int> MarkSet::members() const {
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
        if (contains(j)) out.push_back(j);
    return out;
}

MarkSet MarkSet::rotated(int shift) const {
    shift = ((shift % n_) + n_) % n_;
    const std::uint32_t full = full_mask(n_);
    const std::uint32_t b = ((bits_ << shift) | (bits_ >> (n_ - shift))) & full;
    return MarkSet(n_, shift == 0 ? bits_ : b);
}

MarkSet mark_set(const SigmaWord& w) {
    const int big_n = w.singular_count();
    if (big_n == 0) throw std::invalid_argument("mark set needs at least one singular block");
    const auto& parts = w.parts();
    const int count = static_cast<int>(parts.size());
    std::uint32_t bits = 0;
    int j = 0;
    for (int i = 0; i < count; ++i) {
        if (parts[i].kind != PartKind::Singular) continue;
        if (parts[(i + 1) % count].kind == PartKind::Regular) bits |= 1u << j;
        ++j;
    }
    return MarkSet(big_n, bits);
}

std::vector<std::uint32_t> generating_subsets(const MarkSet& a) {
    const int n = a.modulus();
    std::vector<std::uint32_t> out;
    for (int j = 0; j < n; ++j)
        if (a.contains(j)) out.push_back(1u << j);
    if (n >= 3) {
        for (int k = 0; k < n; ++k) {
            if (a.contains(k)) continue;  // a pair may not cross a mark
            out.push_back((1u << k) | (1u << ((k + 1) % n)));
        }
    }
    return out;
}

bool is_allowed(std::uint32_t b, const MarkSet& a) {
    const int n = a.modulus();
    if (b & ~full_mask(n)) throw std::invalid_argument("subset out of range");
    if (b == full_mask(n)) return false;  // allowed subsets are proper
    if (b == 0) return true;

    // Tile each run left to right with singletons at marks and pairs
    // {k, k+1} whose left element is not a mark.
    for (const auto& run : cyclic_runs(b, n)) {
        const int len = static_cast<int>(run.size());
        std::vector<char> dp(len + 1, 0);
        dp[0] = 1;
        for (int t = 0; t < len; ++t) {
            if (!dp[t]) continue;
            if (a.contains(run[t])) dp[t + 1] = 1;
            if (t + 1 < len && !a.contains(run[t])) dp[t + 2] = 1;
        }
        if (!dp[len]) return false;
    }
    return true;
}

TilePolynomial::TilePolynomial(int variables, std::vector<std::uint32_t> tiles)
    : n_(variables), tiles_(std::move(tiles)) {
    if (variables < 0 || variables > kMaxMarkModulus)
        throw std::invalid_argument("variable count out of range");
    std::sort(tiles_.begin(), tiles_.end());
    tiles_.erase(std::unique(tiles_.begin(), tiles_.end()), tiles_.end());
    for (std::uint32_t t : tiles_)
        if (t & ~full_mask(n_) || (n_ > 0 && t == full_mask(n_)))
            throw std::invalid_argument("tile is not a proper subset");
    if (n_ >= 1 && (tiles_.empty() || tiles_.front() != 0))
        throw std::invalid_argument("missing top monomial (empty tile)");
}

std::string TilePolynomial::str() const {
    if (tiles_.empty()) return "0";
    std::vector<std::uint32_t> order = tiles_;
    const std::uint32_t full = full_mask(n_);
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        const int px = std::popcount(x), py = std::popcount(y);
        if (px != py) return px < py;
        return (full & ~x) < (full & ~y);  // by the monomial's index set
    });
    std::string out;
    for (std::uint32_t b : order) {
        if (!out.empty()) out += " + ";
        bool first = true;
        for (int i = 0; i < n_; ++i) {
            if ((b >> i) & 1u) continue;
            if (!first) out += '*';
            out += 'X' + std::to_string(i);
            first = false;
        }
    }
    return out;
}

TilePolynomial poly(const MarkSet& a) {
    const int n = a.modulus();
    std::vector<std::uint32_t> tiles;
    for (std::uint32_t b = 0; b < full_mask(n); ++b)
        if (is_allowed(b, a)) tiles.push_back(b);
    return TilePolynomial(n, std::move(tiles));
}

Int eval_poly(const TilePolynomial& p, std::span<const long long> k) {
    if (static_cast<int>(k.size()) != p.variables())
        throw std::invalid_argument("evaluation vector has wrong length");
    Int total = 0;
    for (std::uint32_t b : p.tiles()) {
        Int term = 1;
        for (int i = 0; i < p.variables(); ++i)
            if (!((b >> i) & 1u)) term *= k[i];
        total += term;
    }
    return total;
}

CanonicalTiling canonical_tiling(std::uint32_t b, const MarkSet& a) {
    if (!is_allowed(b, a)) throw std::invalid_argument("subset is not allowed");
    CanonicalTiling out;
    if (b == 0) return out;
    const int n = a.modulus();

    // In each run: the prefix up to the last mark is the maximal fixed
    // subset (spring = the residue before the run); the rest has no marks
    // and is a single wandering subset of even length.
    for (const auto& run : cyclic_runs(b, n)) {
        int last_mark = -1;
        for (int t = 0; t < static_cast<int>(run.size()); ++t)
            if (a.contains(run[t])) last_mark = t;
        if (last_mark >= 0) {
            FixedRun f;
            f.run.assign(run.begin(), run.begin() + last_mark + 1);
            f.spring = (run.front() - 1 + n) % n;
            out.fixed.push_back(std::move(f));
        }
        if (last_mark + 1 < static_cast<int>(run.size()))
            out.wandering.emplace_back(run.begin() + last_mark + 1, run.end());
    }
    return out;
}

MarkSet specialize_zero(const MarkSet& a, std::uint32_t b) {
    const CanonicalTiling tiling = canonical_tiling(b, a);
    const int n = a.modulus();
    std::uint32_t springs = 0;
    for (const auto& f : tiling.fixed) springs |= 1u << f.spring;

    // Relabel the complement of B in increasing order.
    std::uint32_t out_bits = 0;
    int next = 0;
    for (int i = 0; i < n; ++i) {
        if ((b >> i) & 1u) continue;
        if (a.contains(i) || ((springs >> i) & 1u)) out_bits |= 1u << next;
        ++next;
    }
    return MarkSet(next, out_bits);
}

TilePolynomial compose(const TilePolynomial& p1, const TilePolynomial& p2) {
    const int n1 = p1.variables();
    const int n2 = p2.variables();
    const std::uint32_t full1 = full_mask(n1);
    const std::uint32_t full2 = full_mask(n2);
    std::vector<std::uint32_t> tiles;
    for (std::uint32_t b1 : p1.tiles())
        for (std::uint32_t b2 : p2.tiles()) tiles.push_back(b1 | (b2 << n1));
    for (std::uint32_t b1 : p1.tiles()) tiles.push_back(b1 | (full2 << n1));  // P' term
    for (std::uint32_t b2 : p2.tiles()) tiles.push_back(full1 | (b2 << n1));  // P'' term
    return TilePolynomial(n1 + n2, std::move(tiles));
}

Int delta(const SigmaWord& w) {
    const MarkSet a = mark_set(w);
    const std::vector<int> lengths = w.singular_lengths();
    std::vector<long long> k(lengths.begin(), lengths.end());
    return eval_poly(poly(a), k) + 1;
}

std::string poly_json(const MarkSet& a, const TilePolynomial& p) {
    std::string out = "{\"N\":" + std::to_string(a.modulus()) + ",\"A\":[";
    const std::vector<int> members = a.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(members[i]);
    }
    out += "],\"tiles\":[";
    for (std::size_t t = 0; t < p.tiles().size(); ++t) {
        if (t) out += ',';
        out += '[';
        bool first = true;
        for (int i = 0; i < p.variables(); ++i) {
            if (!((p.tiles()[t] >> i) & 1u)) continue;
            if (!first) out += ',';
            out += std::to_string(i);
            first = false;
        }
        out += ']';
    }
    out += "],\"text\":\"" + p.str() + "\"}";
    return out;
}

}  // namespace gsslat
