#pragma once

#include <utility>
#include <vector>

#include "blockcodes/vertex_set.hpp"

namespace blockcodes {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one VertexSet per vertex; it is symmetric and
/// irreflexive by construction. Construction rejects self-loops, duplicate
/// edges and out-of-range endpoints with std::invalid_argument.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    /// Builds from per-vertex neighbor masks; the masks must already be symmetric.
    static Graph from_adjacency(std::vector<VertexSet> adj);

    int n() const { return static_cast<int>(adj_.size()); }
    VertexSet vertices() const { return VertexSet::range(n()); }
    VertexSet adjacency(Vertex u) const;
    bool has_edge(Vertex u, Vertex v) const { return adjacency(u).contains(v); }
    int degree(Vertex u) const { return adjacency(u).size(); }
    int edge_count() const;
    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<VertexSet> adj_;
};

struct BlockDecomposition {
    std::vector<VertexSet> blocks;  // sorted lexicographically by element lists
    VertexSet articulation_vertices;
};

struct TwinReport {
    std::vector<Edge> true_twin_pairs;
    std::vector<Edge> false_twin_pairs;
    VertexSet isolated_vertices;
};

VertexSet open_neighborhood(const Graph& g, Vertex u);
VertexSet closed_neighborhood(const Graph& g, Vertex u);

bool is_clique(const Graph& g, VertexSet s);
bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
/// Components of the subgraph induced by `within`.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet within);

/// Subgraph induced by `keep`, relabelled in increasing order. `original`
/// (if non-null) receives the old index of each new vertex.
Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<Vertex>* original = nullptr);
/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

BlockDecomposition blocks(const Graph& g);

/// Every block induces a clique.
bool is_block_graph(const Graph& g);
/// Independent characterization: chordal and no induced diamond.
bool is_chordal(const Graph& g);
bool is_diamond_free(const Graph& g);
bool is_chordal_diamond_free(const Graph& g);

/// All maximal cliques by pivoting Bron-Kerbosch, sorted lexicographically.
/// Isolated vertices appear as singleton cliques.
std::vector<VertexSet> maximal_cliques(const Graph& g);
/// n_Q. Shortcuts to the block count for block graphs.
int count_maximal_cliques(const Graph& g);

TwinReport twin_report(const Graph& g);
bool is_identifiable(const Graph& g);
bool is_old_admissible(const Graph& g);

}  // namespace blockcodes
