#pragma once

#include <string>
#include <vector>

#include "gsslat/bigint.hpp"
#include "gsslat/sequence.hpp"

namespace gsslat {

// A chain hanging off the cycle.  weights run from the top (free end) down
// to the vertex adjacent to the attachment; root is the index of the cycle
// vertex the bottom attaches to.
struct Branch {
    std::vector<int> weights;
    int root;

    friend bool operator==(const Branch&, const Branch&) = default;
};

// Weighted dual graph of the curve configuration: one cycle (two for even
// Inoue-Hirzebruch words) plus the branches.  A length-1 cycle carries a
// self-loop, a length-2 cycle a double edge.
struct DualGraph {
    SurfaceClass cls;
    std::vector<std::vector<int>> cycles;
    std::vector<Branch> branches;

    int vertex_count() const;
};

// Depends only on the rotation class of w; pieces are assembled in block
// order starting from the first regular block of the canonical rotation.
DualGraph build_dual_graph(const SigmaWord& w);

// chain_det of each branch, in branch order; empty for words without
// regular blocks.
std::vector<Int> branch_determinants(const DualGraph& g);

std::vector<Int> cycle_determinants(const DualGraph& g);

// Deterministic DOT text; byte-identical across runs for equal inputs.
std::string to_dot(const DualGraph& g);

std::string graph_json(const DualGraph& g);

}  // namespace gsslat
