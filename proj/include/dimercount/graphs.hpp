#ifndef DIMERCOUNT_GRAPHS_HPP
#define DIMERCOUNT_GRAPHS_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <dimercount/family.hpp>
#include <dimercount/numeric.hpp>

namespace dimercount {

inline constexpr int kDefaultBuildCap = 8;

// Closed-form size metadata, valid for any stage (no instance required).
struct GraphFamilyMeta {
    GraphFamily family;
    int stage;
    BigInt vertexCount;
    BigInt edgeCount;
    std::pair<int, int> vertexOverEdgeLimit;  // lim v/e as a reduced fraction
};

// Explicit instance with deterministic canonical labels. A label is the copy
// path from the root (digits 0/1/2) followed by a local corner id 0/1/2, or
// 'h' for a hub vertex. Vertices are sorted; edges are index pairs (u < v)
// sorted lexicographically.
struct GraphInstance {
    GraphFamily family = GraphFamily::Hanoi;
    int stage = 0;
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> edges;
    std::array<int, 3> outmost{};  // indices into `vertices`, corner order 0,1,2

    const std::string& label(int v) const { return vertices.at(static_cast<size_t>(v)); }
    int index_of(const std::string& lbl) const;
    std::vector<int> degrees() const;

    // "family n |V| |E|" header, then one "u v" line per edge.
    std::string to_edge_list() const;
    nlohmann::ordered_json to_json() const;
};

GraphFamilyMeta family_meta(GraphFamily family, int stage);

// Pure, deterministic construction. Stages above the cap are refused since
// instances are materialized explicitly.
GraphInstance build(GraphFamily family, int stage, int build_cap = kDefaultBuildCap);

// Inverse of to_edge_list(); corner labels are reconstructed from family/stage.
GraphInstance parse_edge_list(std::istream& in);
GraphInstance parse_edge_list(const std::string& text);

}  // namespace dimercount

#endif
