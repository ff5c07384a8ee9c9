#include "blockcodes/codes.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace blockcodes {

const char* kind_name(CodeKind kind) {
    switch (kind) {
        case CodeKind::ID: return "ID";
        case CodeKind::LD: return "LD";
        case CodeKind::OLD: return "OLD";
    }
    return "?";
}

CodeKind parse_kind(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (lower == "id") return CodeKind::ID;
    if (lower == "ld") return CodeKind::LD;
    if (lower == "old") return CodeKind::OLD;
    throw std::invalid_argument("unknown code kind: " + std::string(name));
}

VertexSet signature(const Graph& g, const Code& c, Vertex u) {
    return (c.kind == CodeKind::ID ? closed_neighborhood(g, u) : open_neighborhood(g, u)) & c.members;
}

std::optional<Violation> validate(const Graph& g, const Code& c) {
    // Domination: closed neighborhoods for ID and LD, open for OLD.
    for (Vertex u = 0; u < g.n(); ++u) {
        VertexSet dom = (c.kind == CodeKind::OLD ? open_neighborhood(g, u) : closed_neighborhood(g, u)) & c.members;
        if (dom.empty()) return Violation{c.kind, WitnessType::Undominated, {u}, {dom}};
    }
    std::vector<VertexSet> sig(static_cast<std::size_t>(g.n()));
    for (Vertex u = 0; u < g.n(); ++u) sig[u] = signature(g, c, u);
    for (Vertex u = 0; u < g.n(); ++u) {
        if (c.kind == CodeKind::LD && c.members.contains(u)) continue;
        for (Vertex v = u + 1; v < g.n(); ++v) {
            if (c.kind == CodeKind::LD && c.members.contains(v)) continue;
            if (sig[u] == sig[v]) return Violation{c.kind, WitnessType::UnseparatedPair, {u, v}, {sig[u], sig[v]}};
        }
    }
    return std::nullopt;
}

namespace {

struct DisjointSets {
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
    std::vector<int> parent;
};

}  // namespace

CodeDecomposition decompose(const Graph& g, const Code& c) {
    if (auto violation = validate(g, c)) {
        throw InvalidCode(*violation, std::string("decompose: not a valid ") + kind_name(c.kind) + "-code");
    }
    CodeDecomposition d;
    d.kind = c.kind;
    d.v1 = c.members;
    d.components = connected_components(g, c.members);
    d.k = static_cast<int>(d.components.size());
    for (Vertex u : c.members) {
        const int deg = (g.adjacency(u) & c.members).size();
        d.n0 += deg == 0 ? 1 : 0;
        d.n1 += deg == 1 ? 1 : 0;
    }

    // H: nodes 0..k-1 stand for the components, k.. for the V3 vertices.
    std::vector<Vertex> v3_list;
    for (Vertex x = 0; x < g.n(); ++x) {
        if (c.members.contains(x)) continue;
        const VertexSet code_nbrs = g.adjacency(x) & c.members;
        if (code_nbrs.size() == 1) {
            d.v2.insert(x);
            continue;
        }
        int touched = 0;
        for (VertexSet comp : d.components) touched += comp.intersects(code_nbrs) ? 1 : 0;
        if (touched >= 2) {
            d.v3.insert(x);
            v3_list.push_back(x);
        } else {
            d.v4.insert(x);
        }
    }

    const int h_nodes = d.k + static_cast<int>(v3_list.size());
    DisjointSets dsu(h_nodes);
    int merges = 0;
    for (std::size_t j = 0; j < v3_list.size(); ++j) {
        const VertexSet code_nbrs = g.adjacency(v3_list[j]) & c.members;
        for (int i = 0; i < d.k; ++i) {
            if (!d.components[i].intersects(code_nbrs)) continue;
            ++d.forest_edges;
            if (dsu.unite(i, d.k + static_cast<int>(j))) ++merges;
        }
    }
    d.forest_components = h_nodes - merges;
    d.forest_acyclic = merges == d.forest_edges;
    return d;
}

ClaimCheck check_claims(const CodeDecomposition& d, CodeKind kind) {
    const int c = d.v1.size();
    const int v2 = d.v2.size();
    const int v3 = d.v3.size();
    const int v4 = d.v4.size();
    ClaimCheck r;
    r.v2_basic = v2 <= c;
    r.v3 = v3 <= d.k - 1;
    r.v4_basic = v4 <= c - d.k;
    r.forest = d.forest_acyclic;
    switch (kind) {
        case CodeKind::ID:
            r.v2_refined = v2 <= c - d.n0;
            r.v4_refined = v4 <= c - 3 * d.k + 2 * d.n0;
            break;
        case CodeKind::OLD:
            r.v2_refined = v2 <= c - d.n1;
            r.v4_refined = v4 <= c - 3 * d.k + d.n1;
            break;
        case CodeKind::LD:
            r.v2_refined = r.v2_basic;
            r.v4_refined = v4 <= c - 3 * d.k + d.n1 + 2 * d.n0;
            break;
    }
    return r;
}

std::vector<std::string> ClaimCheck::failures() const {
    std::vector<std::string> out;
    if (!v2_basic) out.emplace_back("v2_basic");
    if (!v2_refined) out.emplace_back("v2_refined");
    if (!v3) out.emplace_back("v3");
    if (!v4_basic) out.emplace_back("v4_basic");
    if (!v4_refined) out.emplace_back("v4_refined");
    if (!forest) out.emplace_back("forest");
    return out;
}

}  // namespace blockcodes
