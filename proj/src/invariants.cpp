#include "gsslat/invariants.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gsslat/intersection_form.hpp"
#include "gsslat/tiling.hpp"

namespace gsslat {

bool InvariantReport::all_checks_pass() const {
    for (const auto& [name, ok] : checks)
        if (!ok) return false;
    return true;
}

Int discriminant(const SigmaWord& w) { return det_exact(build_form(w)); }

Int lattice_index(const SigmaWord& w) {
    if (w.singular_count() == 0)
        throw std::invalid_argument("lattice index undefined for words without singular blocks");
    const std::vector<int> lengths = w.singular_lengths();
    std::vector<long long> k(lengths.begin(), lengths.end());
    return eval_poly(poly(mark_set(w)), k);
}

Int twisting_coefficient(const SigmaWord& w) {
    if (classify(w).tag != SurfaceClassTag::Intermediate)
        throw std::invalid_argument("twisting coefficient needs an intermediate word");
    Int product = 1;
    for (const Int& d : branch_determinants(build_dual_graph(w))) product *= d;
    return product;
}

InvariantReport analyze(const SigmaWord& w) {
    InvariantReport r{w.canonical()};
    r.n = r.word.total_length();
    r.big_n = r.word.singular_count();
    r.rho = r.word.regular_count();
    r.sigma = sigma_n(r.word);
    r.cls = classify(r.word);

    const IntersectionForm m = build_form(r.word);
    r.det = det_exact(m);
    const DualGraph g = build_dual_graph(r.word);
    r.branch_dets = branch_determinants(g);
    r.cycle_dets = cycle_determinants(g);

    if (r.big_n == 0) {
        r.checks.emplace_back("det_is_zero", r.det == 0);
        r.checks.emplace_back("not_positive_definite", !is_positive_definite(m));
        return r;
    }

    const TilePolynomial p = poly(mark_set(r.word));
    const std::vector<int> lengths = r.word.singular_lengths();
    std::vector<long long> k(lengths.begin(), lengths.end());
    const Int index = eval_poly(p, k);
    r.index = index;
    r.delta_value = index + 1;
    r.poly_text = p.str();

    // The matrix path (det), the tiling path (index) and the graph path
    // (branch/cycle determinants) are independent computations.
    r.checks.emplace_back("det_equals_index_squared", r.det == index * index);
    r.checks.emplace_back("delta_equals_index_plus_one", *r.delta_value == index + 1);
    r.checks.emplace_back("det_equals_delta_minus_one_squared",
                          r.det == (*r.delta_value - 1) * (*r.delta_value - 1));
    r.checks.emplace_back("positive_definite", is_positive_definite(m));
    r.checks.emplace_back("index_at_least_one", index >= 1);
    if (r.cls.tag == SurfaceClassTag::Intermediate) {
        Int product = 1;
        for (const Int& d : r.branch_dets) product *= d;
        r.checks.emplace_back("branch_product_equals_delta", product == *r.delta_value);
        r.checks.emplace_back("twisting_at_least_two", product >= 2);
    } else {
        Int product = 1;
        for (const Int& d : r.cycle_dets) product *= d;
        r.checks.emplace_back("cycle_product_equals_det", product == r.det);
        if (r.cls.tag == SurfaceClassTag::EvenInoueHirzebruch)
            r.checks.emplace_back("cycle_dets_equal", r.cycle_dets[0] == r.cycle_dets[1]);
    }
    return r;
}

InvariantReport verify_main_theorem(const SigmaWord& w) {
    if (w.singular_count() == 0)
        throw std::invalid_argument("main theorem needs at least one singular block");
    return analyze(w);
}

bool verify_reduction(const SigmaWord& w, std::span<const int> alt_lengths) {
    if (w.regular_count() == 0)
        throw std::invalid_argument("reduction needs at least one regular block");
    if (static_cast<int>(alt_lengths.size()) != w.regular_count())
        throw std::invalid_argument("need one replacement length per regular block");
    std::vector<SequencePart> parts = w.parts();
    std::size_t j = 0;
    for (auto& p : parts)
        if (p.kind == PartKind::Regular) p.length = alt_lengths[j++];
    const SigmaWord replaced(std::move(parts));
    return discriminant(w) == discriminant(replaced);
}

namespace {

bool valid_parts(const std::vector<SequencePart>& parts) {
    int singulars = 0;
    for (const auto& p : parts)
        if (p.kind == PartKind::Singular) ++singulars;
    if (singulars == 0) return parts.size() == 1;
    const int count = static_cast<int>(parts.size());
    for (int i = 0; i < count; ++i)
        if (parts[i].kind == PartKind::Regular &&
            parts[(i + 1) % count].kind == PartKind::Regular)
            return false;
    return true;
}

void enumerate_rec(int remaining, std::vector<SequencePart>& cur,
                   std::set<std::string>& seen, std::vector<SigmaWord>& out) {
    if (remaining == 0) {
        if (!valid_parts(cur)) return;
        SigmaWord word = SigmaWord(cur).canonical();
        if (seen.insert(word.str()).second) out.push_back(std::move(word));
        return;
    }
    for (int len = 1; len <= remaining; ++len) {
        for (PartKind kind : {PartKind::Singular, PartKind::Regular}) {
            if (kind == PartKind::Regular && !cur.empty() &&
                cur.back().kind == PartKind::Regular)
                continue;  // adjacent regulars can never become valid
            cur.push_back({kind, len});
            enumerate_rec(remaining - len, cur, seen, out);
            cur.pop_back();
        }
    }
}

}  // namespace

std::vector<SigmaWord> enumerate_words(int max_n) {
    if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
    std::vector<SigmaWord> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<SigmaWord> level;
        std::set<std::string> seen;
        std::vector<SequencePart> cur;
        enumerate_rec(n, cur, seen, level);
        std::sort(level.begin(), level.end(), word_less);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

namespace {

std::string csv_row(const InvariantReport& r) {
    std::string row = r.word.str();
    row += ',' + std::to_string(r.n);
    row += ',' + std::to_string(r.big_n);
    row += ',' + std::to_string(r.rho);
    row += ',' + std::to_string(r.sigma);
    row += ',';
    row += to_string(r.cls.tag);
    row += ',' + r.det.str();
    row += ',';
    if (r.index) row += r.index->str();
    row += ',';
    if (r.delta_value) row += r.delta_value->str();
    row += ',';
    for (std::size_t i = 0; i < r.branch_dets.size(); ++i) {
        if (i) row += ';';
        row += r.branch_dets[i].str();
    }
    row += ',' + r.poly_text;
    return row;
}

}  // namespace

std::string atlas_csv(int max_n) {
    std::string out = "word,n,N,rho,sigma_n,class,det,index,delta,branch_dets,poly\n";
    for (const SigmaWord& w : enumerate_words(max_n)) out += csv_row(analyze(w)) + '\n';
    return out;
}

std::string InvariantReport::json() const {
    std::string out = "{\"word\":\"" + word.str() + "\"";
    out += ",\"n\":" + std::to_string(n);
    out += ",\"N\":" + std::to_string(big_n);
    out += ",\"rho\":" + std::to_string(rho);
    out += ",\"sigma_n\":" + std::to_string(sigma);
    out += ",\"class\":\"";
    out += to_string(cls.tag);
    out += "\",\"cycles\":" + std::to_string(cls.cycles);
    out += ",\"branches\":" + std::to_string(cls.branches);
    out += ",\"det\":" + det.str();
    out += ",\"index\":" + (index ? index->str() : "null");
    out += ",\"delta\":" + (delta_value ? delta_value->str() : "null");
    out += ",\"branch_dets\":[";
    for (std::size_t i = 0; i < branch_dets.size(); ++i) {
        if (i) out += ',';
        out += branch_dets[i].str();
    }
    out += "],\"cycle_dets\":[";
    for (std::size_t i = 0; i < cycle_dets.size(); ++i) {
        if (i) out += ',';
        out += cycle_dets[i].str();
    }
    out += "],\"poly\":";
    out += poly_text.empty() ? "null" : "\"" + poly_text + "\"";
    out += ",\"checks\":{";
    for (std::size_t i = 0; i < checks.size(); ++i) {
        if (i) out += ',';
        out += "\"" + checks[i].first + "\":" + (checks[i].second ? "true" : "false");
    }
    out += "},\"ok\":";
    out += all_checks_pass() ? "true" : "false";
    out += "}";
    return out;
}

std::string InvariantReport::text() const {
    std::string out;
    out += "word:        " + word.str() + "\n";
    out += "n, N, rho:   " + std::to_string(n) + ", " + std::to_string(big_n) + ", " +
           std::to_string(rho) + "\n";
    out += "sigma_n:     " + std::to_string(sigma) + "\n";
    out += "class:       ";
    out += to_string(cls.tag);
    out += "\n";
    out += "det:         " + det.str() + "\n";
    if (index) out += "index:       " + index->str() + "\n";
    if (delta_value) out += "delta:       " + delta_value->str() + "\n";
    if (!branch_dets.empty()) {
        out += "branch dets:";
        for (const Int& d : branch_dets) out += ' ' + d.str();
        out += "\n";
    }
    out += "cycle dets:";
    for (const Int& d : cycle_dets) out += ' ' + d.str();
    out += "\n";
    if (!poly_text.empty()) out += "polynomial:  " + poly_text + "\n";
    for (const auto& [name, ok] : checks)
        out += std::string(ok ? "[ok]   " : "[FAIL] ") + name + "\n";
    return out;
}

std::string atlas_jsonl(int max_n) {
    std::string out;
    for (const SigmaWord& w : enumerate_words(max_n)) {
        const InvariantReport r = analyze(w);
        out += "{\"word\":\"" + r.word.str() + "\",\"n\":" + std::to_string(r.n) +
               ",\"N\":" + std::to_string(r.big_n) + ",\"rho\":" + std::to_string(r.rho) +
               ",\"sigma_n\":" + std::to_string(r.sigma) + ",\"class\":\"" +
               to_string(r.cls.tag) + "\",\"det\":" + r.det.str() +
               ",\"index\":" + (r.index ? r.index->str() : "null") +
               ",\"delta\":" + (r.delta_value ? r.delta_value->str() : "null") +
               ",\"branch_dets\":[";
        for (std::size_t i = 0; i < r.branch_dets.size(); ++i) {
            if (i) out += ',';
            out += r.branch_dets[i].str();
        }
        out += "],\"poly\":";
        out += r.poly_text.empty() ? "null" : "\"" + r.poly_text + "\"";
        out += "}\n";
    }
    return out;
}

}  // namespace gsslat
