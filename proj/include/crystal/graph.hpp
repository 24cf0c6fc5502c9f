#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "crystal/iso.hpp"

namespace crystal {

enum class GraphKind { ls, monomial };

struct GraphNode {
    int id = 0;
    std::string label;
    ClWeight weight;
    int depth = 0;

    bool operator==(const GraphNode&) const = default;
};

struct GraphEdge {
    int src = 0;
    int dst = 0;
    int k = 1;

    bool operator==(const GraphEdge&) const = default;
};

// Crystal graph truncated at depth_bound: nodes are canonical labels sorted
// by (depth, label) with id equal to position, edges sorted by (src, dst, k).
// Node identity is label identity, and the root is the unique depth-0 node.
struct CrystalGraph {
    GraphKind kind = GraphKind::ls;
    long long a = 0;
    long long b = 0;
    int i = 1;
    long long shift = 0;
    int depth_bound = 0;
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
    int root = 0;

    bool operator==(const CrystalGraph&) const = default;
};

// BFS closure under the lowering operators from the highest-weight element,
// deduplicated by canonical label.
CrystalGraph generate(GraphKind kind, const CartanData& cd, int i, long long shift, int depth_bound);

struct VerifyFailure {
    std::string check;
    std::string witness;
};

// Outcome of the end-to-end isomorphism verification; empty failure list
// means every check passed.
struct VerifyReport {
    long long a = 0;
    long long b = 0;
    int i = 1;
    long long shift = 0;
    int depth_bound = 0;
    std::size_t ls_nodes = 0;
    std::size_t mono_nodes = 0;
    std::size_t ls_edges = 0;
    std::size_t mono_edges = 0;
    std::vector<std::pair<std::string, std::size_t>> check_counts;
    std::vector<VerifyFailure> failures;

    bool verified() const { return failures.empty(); }
    std::string to_text() const;
};

// Generates both crystals to depth_bound and checks: the map is a per-depth
// bijection, commutes with f and e inside the truncation, preserves
// wt/eps/phi, inverts exactly, every path is a member, and the crystal
// axioms hold on both sides. Failures are reported, never thrown.
VerifyReport verify_isomorphism(const CartanData& cd, int i, long long shift, int depth_bound);

std::string export_dot(const CrystalGraph& g);
std::string export_json(const CrystalGraph& g);
CrystalGraph parse_graph_json(const std::string& text);

}  // namespace crystal
