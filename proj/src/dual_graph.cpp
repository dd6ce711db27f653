#include "gsslat/dual_graph.hpp"

#include <stdexcept>

#include "gsslat/intersection_form.hpp"

namespace gsslat {

int DualGraph::vertex_count() const {
    int total = 0;
    for (const auto& c : cycles) total += static_cast<int>(c.size());
    for (const auto& b : branches) total += static_cast<int>(b.weights.size());
    return total;
}

namespace {

void emit_twos(std::vector<int>& out, int count) { out.insert(out.end(), count, 2); }

// One regular block followed by its run of singular blocks, in cyclic order.
struct BlockGroup {
    int regular_length;
    std::vector<int> singular_lengths;  // k_1..k_p, p >= 1
};

// Branch/cycle-piece split of one group.  The parity of p decides which of
// the two alternating weight patterns ends the branch and which ends the
// cycle piece.
void split_group(const BlockGroup& g, std::vector<int>& branch, std::vector<int>& piece) {
    const auto& k = g.singular_lengths;
    const int p = static_cast<int>(k.size());
    branch.clear();
    piece.clear();
    for (int j = 0; j < p; ++j) {
        if (j % 2 == 0)
            emit_twos(branch, k[j] - 1);
        else
            branch.push_back(k[j] + 2);
    }
    if (p % 2 == 1) branch.push_back(2);

    emit_twos(piece, g.regular_length - 1);
    for (int j = 0; j < p; ++j) {
        if (j % 2 == 0)
            piece.push_back(k[j] + 2);
        else
            emit_twos(piece, k[j] - 1);
    }
    if (p % 2 == 0) piece.push_back(2);
}

}  // namespace

DualGraph build_dual_graph(const SigmaWord& w) {
    DualGraph g;
    g.cls = classify(w.canonical());
    const SigmaWord word = w.canonical();
    const int n = word.total_length();

    if (g.cls.tag == SurfaceClassTag::Enoki) {
        g.cycles.push_back(std::vector<int>(n, 2));
        return g;
    }

    if (g.cls.tag == SurfaceClassTag::OddInoueHirzebruch ||
        g.cls.tag == SurfaceClassTag::EvenInoueHirzebruch) {
        const std::vector<int> k = word.singular_lengths();
        const int big_n = static_cast<int>(k.size());
        if (big_n % 2 == 1) {
            // One cycle, visiting the blocks with step 2 around the odd cycle.
            std::vector<int> cycle;
            int idx = 0;
            for (int step = 0; step < big_n; ++step) {
                cycle.push_back(k[idx] + 2);
                emit_twos(cycle, k[(idx + 1) % big_n] - 1);
                idx = (idx + 2) % big_n;
            }
            g.cycles.push_back(std::move(cycle));
        } else {
            std::vector<int> gamma, gamma_prime;
            for (int j = 0; j < big_n; j += 2) {
                gamma.push_back(k[j] + 2);
                emit_twos(gamma, k[j + 1] - 1);
                emit_twos(gamma_prime, k[j] - 1);
                gamma_prime.push_back(k[j + 1] + 2);
            }
            g.cycles.push_back(std::move(gamma));
            g.cycles.push_back(std::move(gamma_prime));
        }
        return g;
    }

    // Intermediate: group the blocks starting from the first regular block
    // of the canonical rotation.
    int first_regular = 0;
    while (word.parts()[first_regular].kind != PartKind::Regular) ++first_regular;
    const SigmaWord rot = word.rotated(first_regular);

    std::vector<BlockGroup> groups;
    for (const auto& p : rot.parts()) {
        if (p.kind == PartKind::Regular)
            groups.push_back({p.length, {}});
        else
            groups.back().singular_lengths.push_back(p.length);
    }

    const int rho = static_cast<int>(groups.size());
    std::vector<std::vector<int>> branches(rho), pieces(rho);
    std::vector<int> piece_offset(rho, 0);
    std::vector<int> cycle;
    for (int s = 0; s < rho; ++s) {
        split_group(groups[s], branches[s], pieces[s]);
        piece_offset[s] = static_cast<int>(cycle.size());
        cycle.insert(cycle.end(), pieces[s].begin(), pieces[s].end());
    }
    g.cycles.push_back(std::move(cycle));
    for (int s = 0; s < rho; ++s) {
        // Root of the s-th branch: first vertex of the next cycle piece.
        g.branches.push_back({std::move(branches[s]), piece_offset[(s + 1) % rho]});
    }
    if (g.vertex_count() != n) throw std::logic_error("dual graph lost vertices");
    return g;
}

std::vector<Int> branch_determinants(const DualGraph& g) {
    std::vector<Int> out;
    out.reserve(g.branches.size());
    for (const auto& b : g.branches) out.push_back(chain_det(b.weights));
    return out;
}

std::vector<Int> cycle_determinants(const DualGraph& g) {
    std::vector<Int> out;
    out.reserve(g.cycles.size());
    for (const auto& c : g.cycles) out.push_back(cycle_det(c));
    return out;
}

std::string to_dot(const DualGraph& g) {
    std::string out = "graph dual {\n  node [shape=circle];\n";
    for (std::size_t c = 0; c < g.cycles.size(); ++c)
        for (std::size_t v = 0; v < g.cycles[c].size(); ++v)
            out += "  c" + std::to_string(c) + "_" + std::to_string(v) + " [label=\"" +
                   std::to_string(g.cycles[c][v]) + "\"];\n";
    for (std::size_t b = 0; b < g.branches.size(); ++b)
        for (std::size_t v = 0; v < g.branches[b].weights.size(); ++v)
            out += "  b" + std::to_string(b) + "_" + std::to_string(v) + " [label=\"" +
                   std::to_string(g.branches[b].weights[v]) + "\"];\n";

    auto cyc = [](std::size_t c, std::size_t v) {
        return "c" + std::to_string(c) + "_" + std::to_string(v);
    };
    for (std::size_t c = 0; c < g.cycles.size(); ++c) {
        const std::size_t len = g.cycles[c].size();
        if (len == 1) {
            out += "  " + cyc(c, 0) + " -- " + cyc(c, 0) + ";\n";
        } else if (len == 2) {
            out += "  " + cyc(c, 0) + " -- " + cyc(c, 1) + ";\n";
            out += "  " + cyc(c, 0) + " -- " + cyc(c, 1) + ";\n";
        } else {
            for (std::size_t v = 0; v < len; ++v)
                out += "  " + cyc(c, v) + " -- " + cyc(c, (v + 1) % len) + ";\n";
        }
    }
    for (std::size_t b = 0; b < g.branches.size(); ++b) {
        const auto& weights = g.branches[b].weights;
        for (std::size_t v = 0; v + 1 < weights.size(); ++v)
            out += "  b" + std::to_string(b) + "_" + std::to_string(v) + " -- b" +
                   std::to_string(b) + "_" + std::to_string(v + 1) + ";\n";
        out += "  b" + std::to_string(b) + "_" + std::to_string(weights.size() - 1) + " -- " +
               cyc(0, static_cast<std::size_t>(g.branches[b].root)) + ";\n";
    }
    out += "}\n";
    return out;
}

std::string graph_json(const DualGraph& g) {
    std::string out = "{\"class\":\"";
    out += to_string(g.cls.tag);
    out += "\",\"cycles\":[";
    for (std::size_t c = 0; c < g.cycles.size(); ++c) {
        if (c) out += ',';
        out += '[';
        for (std::size_t v = 0; v < g.cycles[c].size(); ++v) {
            if (v) out += ',';
            out += std::to_string(g.cycles[c][v]);
        }
        out += ']';
    }
    out += "],\"branches\":[";
    for (std::size_t b = 0; b < g.branches.size(); ++b) {
        if (b) out += ',';
        out += "{\"weights\":[";
        for (std::size_t v = 0; v < g.branches[b].weights.size(); ++v) {
            if (v) out += ',';
            out += std::to_string(g.branches[b].weights[v]);
        }
        out += "],\"root\":" + std::to_string(g.branches[b].root) + "}";
    }
    out += "]}";
    return out;
}

}  // namespace gsslat
