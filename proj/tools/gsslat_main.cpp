// gsslat: exact invariants of cyclic singular/regular curve words.
//
// Subcommands: analyze, verify, atlas, matrix, graph, poly.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsslat/dual_graph.hpp"
#include "gsslat/intersection_form.hpp"
#include "gsslat/invariants.hpp"
#include "gsslat/sequence.hpp"
#include "gsslat/tiling.hpp"

namespace {

int write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "gsslat: cannot open output file: " << path << "\n";
        return 2;
    }
    out << content;
    if (!out) {
        std::cerr << "gsslat: write failed: " << path << "\n";
        return 2;
    }
    return 0;
}

// Small deterministic generator so verify runs are reproducible everywhere.
struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int uniform(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

int run_analyze(const std::string& sigma, const std::string& format, const std::string& out_path) {
    const gsslat::SigmaWord w = gsslat::SigmaWord::parse(sigma);
    const gsslat::InvariantReport r = gsslat::analyze(w);
    const std::string body = (format == "text") ? r.text() : r.json() + "\n";
    const int rc = write_output(out_path, body);
    if (rc != 0) return rc;
    return r.all_checks_pass() ? 0 : 1;
}

int run_verify(int max_n, int samples, std::uint64_t seed, bool inject_fault) {
    if (max_n > gsslat::kMaxMarkModulus)
        throw std::invalid_argument("--max-n above the N <= " +
                                    std::to_string(gsslat::kMaxMarkModulus) + " tiling cap");
    const std::vector<gsslat::SigmaWord> words = gsslat::enumerate_words(max_n);
    long long failures = 0;
    std::vector<gsslat::SigmaWord> reducible;
    for (const auto& w : words) {
        gsslat::InvariantReport r = gsslat::analyze(w);
        bool ok = r.all_checks_pass();
        if (inject_fault && r.index) {
            // Corrupt the tiling-path value to exercise the failure path.
            const gsslat::Int bad = *r.index + 1;
            ok = ok && (r.det == bad * bad);
        }
        if (!ok) {
            ++failures;
            std::cout << "FAIL " << r.word.str() << "\n";
        }
        if (w.regular_count() >= 1) reducible.push_back(w);
    }

    SplitMix rng{seed};
    long long reduction_failures = 0;
    int done = 0;
    for (int i = 0; !reducible.empty() && done < samples; ++i, ++done) {
        const gsslat::SigmaWord& w = reducible[i % reducible.size()];
        std::vector<int> alt(w.regular_count());
        for (int& m : alt) m = rng.uniform(1, 6);
        if (!gsslat::verify_reduction(w, alt)) {
            ++reduction_failures;
            std::cout << "FAIL reduction " << w.str() << "\n";
        }
    }
    failures += reduction_failures;
    std::cout << words.size() << " words checked (n <= " << max_n << "), " << done
              << " reduction samples, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

int run_atlas(int max_n, const std::string& format, const std::string& out_path) {
    if (max_n > gsslat::kMaxMarkModulus)
        throw std::invalid_argument("--max-n above the N <= " +
                                    std::to_string(gsslat::kMaxMarkModulus) + " tiling cap");
    const std::string body =
        (format == "jsonl") ? gsslat::atlas_jsonl(max_n) : gsslat::atlas_csv(max_n);
    return write_output(out_path, body);
}

int run_matrix(const std::string& sigma, const std::string& format, const std::string& sign,
               const std::string& out_path) {
    const gsslat::SigmaWord w = gsslat::SigmaWord::parse(sigma);
    const gsslat::IntersectionForm m = gsslat::build_form(w);
    const bool surface = (sign == "surface");
    std::string body;
    if (format == "csv")
        body = gsslat::matrix_csv(m, surface);
    else if (format == "latex")
        body = gsslat::matrix_latex(m, surface);
    else
        body = gsslat::matrix_json(m, surface) + "\n";
    return write_output(out_path, body);
}

int run_graph(const std::string& sigma, const std::string& format, const std::string& out_path) {
    const gsslat::SigmaWord w = gsslat::SigmaWord::parse(sigma);
    const gsslat::DualGraph g = gsslat::build_dual_graph(w);
    const std::string body = (format == "dot") ? gsslat::to_dot(g) : gsslat::graph_json(g) + "\n";
    return write_output(out_path, body);
}

int run_poly(const std::string& sigma, int big_n, const std::string& marks_csv,
             const std::string& format, const std::string& out_path) {
    std::uint32_t bits = 0;
    int n = 0;
    if (!sigma.empty()) {
        const gsslat::MarkSet a = gsslat::mark_set(gsslat::SigmaWord::parse(sigma));
        bits = a.bits();
        n = a.modulus();
    } else if (big_n >= 1) {
        n = big_n;
        if (!marks_csv.empty()) {
            std::size_t pos = 0;
            while (pos < marks_csv.size()) {
                std::size_t comma = marks_csv.find(',', pos);
                if (comma == std::string::npos) comma = marks_csv.size();
                const int v = std::stoi(marks_csv.substr(pos, comma - pos));
                if (v < 0 || v >= n) throw std::invalid_argument("mark out of range: --A");
                bits |= 1u << v;
                pos = comma + 1;
            }
        }
    } else {
        throw std::invalid_argument("poly needs a sigma word or --N (with optional --A)");
    }
    const gsslat::MarkSet a(n, bits);
    const gsslat::TilePolynomial p = gsslat::poly(a);
    const std::string body =
        (format == "json") ? gsslat::poly_json(a, p) + "\n" : p.str() + "\n";
    return write_output(out_path, body);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact discriminants, dual graphs and tile polynomials of cyclic "
                 "singular/regular curve words"};
    app.require_subcommand(1);

    std::string sigma, sign = "form", out_path, marks_csv;
    std::string analyze_format = "json", atlas_format = "csv", matrix_format = "json";
    std::string graph_format = "json", poly_format = "text";
    int max_n = 8, samples = 500;
    std::uint64_t seed = 20071215;
    int big_n = 0;
    bool dot = false, inject_fault = false;

    auto* c_analyze = app.add_subcommand("analyze", "invariant report for one word");
    c_analyze->add_option("sigma", sigma, "word, e.g. \"s3 r2 s1\"")->required();
    c_analyze->add_option("--format", analyze_format, "json|text");
    c_analyze->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* c_verify = app.add_subcommand("verify", "exhaustive identity checks up to n");
    c_verify->add_option("--max-n", max_n, "largest word length")->required();
    c_verify->add_option("--samples", samples, "reduction substitutions");
    c_verify->add_option("--seed", seed, "seed for the substitution sampler");
    c_verify->add_flag("--inject-fault", inject_fault)->group("");  // testing only

    auto* c_atlas = app.add_subcommand("atlas", "one row per canonical word");
    c_atlas->add_option("--max-n", max_n, "largest word length")->required();
    c_atlas->add_option("--format", atlas_format, "csv|jsonl");
    c_atlas->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* c_matrix = app.add_subcommand("matrix", "intersection matrix of a word");
    c_matrix->add_option("sigma", sigma)->required();
    c_matrix->add_option("--format", matrix_format, "json|csv|latex");
    c_matrix->add_option("--sign", sign, "form (M(sigma)) | surface (-M(sigma))")
        ->check(CLI::IsMember({"form", "surface"}));
    c_matrix->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* c_graph = app.add_subcommand("graph", "weighted dual graph of a word");
    c_graph->add_option("sigma", sigma)->required();
    c_graph->add_option("--format", graph_format, "json|dot");
    c_graph->add_flag("--dot", dot, "shorthand for --format dot");
    c_graph->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* c_poly = app.add_subcommand("poly", "tile polynomial of a word or mark set");
    c_poly->add_option("sigma", sigma, "word (marks derived from it)");
    c_poly->add_option("--N", big_n, "number of residues");
    c_poly->add_option("--A", marks_csv, "marked residues, e.g. 0,2 (empty = no marks)");
    c_poly->add_option("--format", poly_format, "text|json");
    c_poly->add_option("-o,--output", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_analyze->parsed()) return run_analyze(sigma, analyze_format, out_path);
        if (c_verify->parsed()) return run_verify(max_n, samples, seed, inject_fault);
        if (c_atlas->parsed()) return run_atlas(max_n, atlas_format, out_path);
        if (c_matrix->parsed()) return run_matrix(sigma, matrix_format, sign, out_path);
        if (c_graph->parsed()) return run_graph(sigma, dot ? "dot" : graph_format, out_path);
        if (c_poly->parsed()) return run_poly(sigma, big_n, marks_csv, poly_format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "gsslat: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
