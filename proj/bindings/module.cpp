#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "gsslat/dual_graph.hpp"
#include "gsslat/intersection_form.hpp"
#include "gsslat/invariants.hpp"
#include "gsslat/sequence.hpp"
#include "gsslat/tiling.hpp"

namespace py = pybind11;
using namespace gsslat;

namespace {

// cpp_int -> arbitrary precision python int, via the decimal string.
py::int_ to_py(const Int& v) {
    const std::string s = v.str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list to_py(const std::vector<Int>& vs) {
    py::list out;
    for (const Int& v : vs) out.append(to_py(v));
    return out;
}

SigmaWord word_of(const std::string& sigma) { return SigmaWord::parse(sigma); }

std::vector<std::vector<long long>> matrix_rows(const IntersectionForm& m) {
    std::vector<std::vector<long long>> rows(m.order(), std::vector<long long>(m.order()));
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j) rows[i][j] = m.entry(i, j);
    return rows;
}

py::dict graph_dict(const DualGraph& g) {
    py::dict out;
    out["class"] = std::string(to_string(g.cls.tag));
    py::list cycles;
    for (const auto& c : g.cycles) cycles.append(py::cast(c));
    out["cycles"] = cycles;
    py::list branches;
    for (const auto& b : g.branches) {
        py::dict bd;
        bd["weights"] = py::cast(b.weights);
        bd["root"] = b.root;
        branches.append(bd);
    }
    out["branches"] = branches;
    return out;
}

py::dict report_dict(const InvariantReport& r) {
    py::dict out;
    out["word"] = r.word.str();
    out["n"] = r.n;
    out["N"] = r.big_n;
    out["rho"] = r.rho;
    out["sigma_n"] = r.sigma;
    out["class"] = std::string(to_string(r.cls.tag));
    out["det"] = to_py(r.det);
    out["index"] = r.index ? py::object(to_py(*r.index)) : py::none();
    out["delta"] = r.delta_value ? py::object(to_py(*r.delta_value)) : py::none();
    out["branch_dets"] = to_py(r.branch_dets);
    out["cycle_dets"] = to_py(r.cycle_dets);
    out["poly"] = r.poly_text;
    py::dict checks;
    for (const auto& [name, ok] : r.checks) checks[py::str(name)] = ok;
    out["checks"] = checks;
    out["ok"] = r.all_checks_pass();
    return out;
}

}  // namespace

PYBIND11_MODULE(_gsslat, m) {
    m.doc() = "exact discriminants, dual graphs and tile polynomials of cyclic "
              "singular/regular curve words";

    m.def("parse", [](const std::string& s) { return word_of(s).str(); },
          "validate a word and return its printed form");
    m.def("canonical", [](const std::string& s) { return word_of(s).canonical().str(); });
    m.def("expand", [](const std::string& s) { return expand(word_of(s)); });
    m.def("factor_aword", [](const std::vector<int>& a) { return factor_aword(a).str(); });
    m.def("concat", [](const std::string& s1, const std::string& s2) {
        return concat(word_of(s1), word_of(s2)).str();
    });
    m.def("split_simple", [](const std::string& s) {
        std::vector<std::string> out;
        for (const auto& f : split_simple(word_of(s))) out.push_back(f.str());
        return out;
    });
    m.def("classify", [](const std::string& s) { return std::string(to_string(classify(word_of(s)).tag)); });
    m.def("sigma_n", [](const std::string& s) { return sigma_n(word_of(s)); });

    m.def("intersection_form", [](const std::string& s, bool surface) {
        auto rows = matrix_rows(build_form(word_of(s)));
        if (surface)
            for (auto& row : rows)
                for (auto& v : row) v = -v;
        return rows;
    }, py::arg("sigma"), py::arg("surface") = false);
    m.def("det", [](const std::string& s) { return to_py(discriminant(word_of(s))); });
    m.def("is_positive_definite",
          [](const std::string& s) { return is_positive_definite(build_form(word_of(s))); });
    m.def("chain_det", [](const std::vector<int>& w) { return to_py(chain_det(w)); });
    m.def("cycle_det", [](const std::vector<int>& w) { return to_py(cycle_det(w)); });

    m.def("dual_graph", [](const std::string& s) { return graph_dict(build_dual_graph(word_of(s))); });
    m.def("branch_determinants", [](const std::string& s) {
        return to_py(branch_determinants(build_dual_graph(word_of(s))));
    });
    m.def("to_dot", [](const std::string& s) { return to_dot(build_dual_graph(word_of(s))); });

    m.def("mark_set", [](const std::string& s) { return mark_set(word_of(s)).members(); });
    m.def("poly_text", [](const std::string& s) { return poly(mark_set(word_of(s))).str(); });
    m.def("poly_text_of_marks", [](int n, const std::vector<int>& marks) {
        std::uint32_t bits = 0;
        for (int v : marks) bits |= 1u << v;
        return poly(MarkSet(n, bits)).str();
    });
    m.def("eval_poly", [](int n, const std::vector<int>& marks, const std::vector<long long>& k) {
        std::uint32_t bits = 0;
        for (int v : marks) bits |= 1u << v;
        return to_py(eval_poly(poly(MarkSet(n, bits)), k));
    });
    m.def("delta", [](const std::string& s) { return to_py(delta(word_of(s))); });
    m.def("lattice_index", [](const std::string& s) { return to_py(lattice_index(word_of(s))); });
    m.def("twisting_coefficient",
          [](const std::string& s) { return to_py(twisting_coefficient(word_of(s))); });

    m.def("analyze", [](const std::string& s) { return report_dict(analyze(word_of(s))); });
    m.def("enumerate_words", [](int max_n) {
        std::vector<std::string> out;
        for (const auto& w : enumerate_words(max_n)) out.push_back(w.str());
        return out;
    });
    m.def("verify_reduction", [](const std::string& s, const std::vector<int>& alt) {
        return verify_reduction(word_of(s), alt);
    });
    m.def("atlas_csv", &atlas_csv);
}
