#include <dimercount/graphs.hpp>

#include <dimercount/errors.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace dimercount {

namespace {

struct RawGraph {
    std::vector<std::pair<std::string, std::string>> edges;
    std::array<std::string, 3> corners;  // corner i of this block
};

// Three sub-blocks glued corner-to-corner: block i's corner j meets block j's
// corner i. SierpX additionally gets one hub vertex adjacent to all six inner
// corners.
RawGraph build_block(GraphFamily family, int stage, const std::string& prefix) {
    if (stage == 0) {
        RawGraph g;
        for (int i = 0; i < 3; ++i) g.corners[i] = prefix + static_cast<char>('0' + i);
        g.edges = {{g.corners[0], g.corners[1]},
                   {g.corners[0], g.corners[2]},
                   {g.corners[1], g.corners[2]}};
        return g;
    }
    std::array<RawGraph, 3> sub;
    RawGraph g;
    for (int i = 0; i < 3; ++i) {
        sub[i] = build_block(family, stage - 1, prefix + static_cast<char>('0' + i));
        g.edges.insert(g.edges.end(), sub[i].edges.begin(), sub[i].edges.end());
        g.corners[i] = sub[i].corners[i];
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            g.edges.emplace_back(sub[i].corners[j], sub[j].corners[i]);
    if (family == GraphFamily::SierpX) {
        const std::string hub = prefix + 'h';
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) g.edges.emplace_back(hub, sub[i].corners[j]);
    }
    return g;
}

BigInt pow3(int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= 3;
    return r;
}

}  // namespace

GraphFamilyMeta family_meta(GraphFamily family, int stage) {
    if (stage < 0) throw DomainError("stage must be nonnegative");
    GraphFamilyMeta m;
    m.family = family;
    m.stage = stage;
    if (family == GraphFamily::Hanoi) {
        m.vertexCount = pow3(stage + 1);
        m.edgeCount = (pow3(stage + 2) - 3) / 2;
        m.vertexOverEdgeLimit = {2, 3};
    } else {
        m.vertexCount = (7 * pow3(stage) - 1) / 2;
        m.edgeCount = (5 * pow3(stage + 1) - 9) / 2;
        m.vertexOverEdgeLimit = {7, 15};
    }
    return m;
}

GraphInstance build(GraphFamily family, int stage, int build_cap) {
    if (stage < 0) throw DomainError("stage must be nonnegative");
    if (stage > build_cap)
        throw ResourceLimitError("stage " + std::to_string(stage) +
                                 " exceeds the explicit build cap (" + std::to_string(build_cap) +
                                 ")");
    RawGraph raw = build_block(family, stage, "");

    GraphInstance g;
    g.family = family;
    g.stage = stage;
    std::map<std::string, int> index;
    for (const auto& [u, v] : raw.edges) {
        index.emplace(u, 0);
        index.emplace(v, 0);
    }
    g.vertices.reserve(index.size());
    for (auto& [lbl, idx] : index) {
        idx = static_cast<int>(g.vertices.size());
        g.vertices.push_back(lbl);
    }
    g.edges.reserve(raw.edges.size());
    for (const auto& [u, v] : raw.edges) {
        int a = index.at(u), b = index.at(v);
        if (a > b) std::swap(a, b);
        g.edges.emplace_back(a, b);
    }
    std::sort(g.edges.begin(), g.edges.end());
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
        throw ConsistencyError("duplicate edge produced by construction");
    for (int i = 0; i < 3; ++i) g.outmost[static_cast<size_t>(i)] = index.at(raw.corners[i]);
    return g;
}

int GraphInstance::index_of(const std::string& lbl) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), lbl);
    if (it == vertices.end() || *it != lbl) throw DomainError("unknown vertex label: " + lbl);
    return static_cast<int>(it - vertices.begin());
}

std::vector<int> GraphInstance::degrees() const {
    std::vector<int> deg(vertices.size(), 0);
    for (const auto& [u, v] : edges) {
        ++deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(v)];
    }
    return deg;
}

std::string GraphInstance::to_edge_list() const {
    std::ostringstream out;
    out << family_name(family) << ' ' << stage << ' ' << vertices.size() << ' ' << edges.size()
        << '\n';
    for (const auto& [u, v] : edges) out << label(u) << ' ' << label(v) << '\n';
    return out.str();
}

nlohmann::ordered_json GraphInstance::to_json() const {
    nlohmann::ordered_json j;
    j["family"] = family_name(family);
    j["stage"] = stage;
    j["vertices"] = vertices;
    auto edges_json = nlohmann::ordered_json::array();
    for (const auto& [u, v] : edges) edges_json.push_back({label(u), label(v)});
    j["edges"] = std::move(edges_json);
    auto outmost_json = nlohmann::ordered_json::array();
    for (int v : outmost) outmost_json.push_back(label(v));
    j["outmost"] = std::move(outmost_json);
    return j;
}

GraphInstance parse_edge_list(std::istream& in) {
    std::string fam_str;
    int stage = 0;
    size_t nv = 0, ne = 0;
    if (!(in >> fam_str >> stage >> nv >> ne)) throw DomainError("malformed edge-list header");
    GraphInstance g;
    g.family = parse_family(fam_str);
    g.stage = stage;

    std::vector<std::pair<std::string, std::string>> raw;
    raw.reserve(ne);
    std::string u, v;
    while (in >> u >> v) raw.emplace_back(u, v);
    if (raw.size() != ne)
        throw DomainError("edge-list body has " + std::to_string(raw.size()) +
                          " edges, header says " + std::to_string(ne));

    std::map<std::string, int> index;
    for (const auto& [a, b] : raw) {
        index.emplace(a, 0);
        index.emplace(b, 0);
    }
    if (index.size() != nv)
        throw DomainError("edge-list mentions " + std::to_string(index.size()) +
                          " vertices, header says " + std::to_string(nv));
    for (auto& [lbl, idx] : index) {
        idx = static_cast<int>(g.vertices.size());
        g.vertices.push_back(lbl);
    }
    for (const auto& [a, b] : raw) {
        int i = index.at(a), j = index.at(b);
        if (i == j) throw DomainError("loop edge at vertex " + a);
        if (i > j) std::swap(i, j);
        g.edges.emplace_back(i, j);
    }
    std::sort(g.edges.begin(), g.edges.end());
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
        throw DomainError("duplicate edge in edge list");

    // Corner labels are canonical: repeated corner digit along the copy path.
    for (int i = 0; i < 3; ++i) {
        std::string lbl(static_cast<size_t>(stage + 1), static_cast<char>('0' + i));
        g.outmost[static_cast<size_t>(i)] = g.index_of(lbl);
    }
    return g;
}

GraphInstance parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

}  // namespace dimercount
