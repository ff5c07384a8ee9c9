#include "blockcodes/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace blockcodes {

namespace {

void check_vertex(const Graph& g, Vertex u) {
    if (u < 0 || u >= g.n()) {
        throw std::out_of_range("vertex " + std::to_string(u) + " out of range for graph of order " +
                                std::to_string(g.n()));
    }
}

void sort_sets(std::vector<VertexSet>& sets) {
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) { return lex_less(a, b); });
}

}  // namespace

Graph::Graph(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, " +
                                    std::to_string(kMaxVertices) + "]");
    }
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        }
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (adj_[u].contains(v)) {
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        }
        adj_[u].insert(v);
        adj_[v].insert(u);
    }
}

Graph Graph::from_adjacency(std::vector<VertexSet> adj) {
    Graph g(static_cast<int>(adj.size()));
    const VertexSet all = g.vertices();
    for (Vertex u = 0; u < g.n(); ++u) {
        if (adj[u].contains(u)) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (!adj[u].subset_of(all)) throw std::invalid_argument("neighbor index out of range");
        for (Vertex v : adj[u]) {
            if (!adj[v].contains(u)) throw std::invalid_argument("adjacency is not symmetric");
        }
    }
    g.adj_ = std::move(adj);
    return g;
}

VertexSet Graph::adjacency(Vertex u) const {
    check_vertex(*this, u);
    return adj_[u];
}

int Graph::edge_count() const {
    int twice = 0;
    for (VertexSet s : adj_) twice += s.size();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

VertexSet open_neighborhood(const Graph& g, Vertex u) { return g.adjacency(u); }

VertexSet closed_neighborhood(const Graph& g, Vertex u) {
    VertexSet s = g.adjacency(u);
    s.insert(u);
    return s;
}

bool is_clique(const Graph& g, VertexSet s) {
    for (Vertex u : s) {
        if (!(s - VertexSet::singleton(u)).subset_of(g.adjacency(u))) return false;
    }
    return true;
}

std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (!left.empty()) {
        VertexSet comp = VertexSet::singleton(left.front());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex u : frontier) next |= g.adjacency(u);
            next = (next & within) - comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) { return connected_components(g, g.vertices()); }

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<Vertex>* original) {
    std::vector<Vertex> old = (keep & g.vertices()).to_vector();
    std::vector<Vertex> index(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < old.size(); ++i) index[old[i]] = static_cast<Vertex>(i);
    std::vector<VertexSet> adj(old.size());
    for (std::size_t i = 0; i < old.size(); ++i) {
        for (Vertex w : g.adjacency(old[i]) & keep) adj[i].insert(index[w]);
    }
    if (original) *original = old;
    return Graph::from_adjacency(std::move(adj));
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    if (static_cast<int>(perm.size()) != g.n()) throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<VertexSet> adj(perm.size());
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex v : g.adjacency(u)) adj[perm[u]].insert(perm[v]);
    }
    return Graph::from_adjacency(std::move(adj));
}

BlockDecomposition blocks(const Graph& g) {
    const int n = g.n();
    std::vector<int> disc(n, -1);
    std::vector<int> low(n, 0);
    std::vector<Edge> stack;
    BlockDecomposition out;
    int timer = 0;

    std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (Vertex v : g.adjacency(u)) {
            if (disc[v] == -1) {
                ++children;
                stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent != -1 || children > 1) out.articulation_vertices.insert(u);
                    VertexSet block;
                    for (;;) {
                        Edge e = stack.back();
                        stack.pop_back();
                        block.insert(e.first);
                        block.insert(e.second);
                        if (e == Edge{u, v}) break;
                    }
                    out.blocks.push_back(block);
                }
            } else if (v != parent && disc[v] < disc[u]) {
                stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };

    for (Vertex u = 0; u < n; ++u) {
        if (disc[u] == -1) dfs(u, -1);
    }
    sort_sets(out.blocks);
    return out;
}

bool is_block_graph(const Graph& g) {
    for (VertexSet b : blocks(g).blocks) {
        if (!is_clique(g, b)) return false;
    }
    return true;
}

bool is_chordal(const Graph& g) {
    // Maximum cardinality search; the reverse visit order is a perfect
    // elimination ordering iff the graph is chordal.
    const int n = g.n();
    std::vector<int> weight(n, 0);
    std::vector<Vertex> visit;
    VertexSet unvisited = g.vertices();
    while (!unvisited.empty()) {
        Vertex best = unvisited.front();
        for (Vertex v : unvisited) {
            if (weight[v] > weight[best]) best = v;
        }
        visit.push_back(best);
        unvisited.erase(best);
        for (Vertex w : g.adjacency(best) & unvisited) ++weight[w];
    }
    // Eliminating visit[n-1] first: the earlier-visited neighbors of each
    // vertex must form a clique.
    VertexSet earlier;
    for (Vertex v : visit) {
        if (!is_clique(g, g.adjacency(v) & earlier)) return false;
        earlier.insert(v);
    }
    return true;
}

bool is_diamond_free(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        if (!is_clique(g, g.adjacency(u) & g.adjacency(v))) return false;
    }
    return true;
}

bool is_chordal_diamond_free(const Graph& g) { return is_chordal(g) && is_diamond_free(g); }

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    std::function<void(VertexSet, VertexSet, VertexSet)> expand = [&](VertexSet r, VertexSet p, VertexSet x) {
        if (p.empty()) {
            if (x.empty()) out.push_back(r);
            return;
        }
        Vertex pivot = (p | x).front();
        int best = -1;
        for (Vertex u : p | x) {
            int c = (p & g.adjacency(u)).size();
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        for (Vertex v : p - g.adjacency(pivot)) {
            expand(r | VertexSet::singleton(v), p & g.adjacency(v), x & g.adjacency(v));
            p.erase(v);
            x.insert(v);
        }
    };
    expand(VertexSet{}, g.vertices(), VertexSet{});
    sort_sets(out);
    return out;
}

int count_maximal_cliques(const Graph& g) {
    if (is_block_graph(g)) {
        int isolated = 0;
        for (Vertex u = 0; u < g.n(); ++u) isolated += g.degree(u) == 0 ? 1 : 0;
        return static_cast<int>(blocks(g).blocks.size()) + isolated;
    }
    return static_cast<int>(maximal_cliques(g).size());
}

TwinReport twin_report(const Graph& g) {
    TwinReport r;
    for (Vertex u = 0; u < g.n(); ++u) {
        if (g.degree(u) == 0) r.isolated_vertices.insert(u);
        for (Vertex v = u + 1; v < g.n(); ++v) {
            if (closed_neighborhood(g, u) == closed_neighborhood(g, v)) r.true_twin_pairs.emplace_back(u, v);
            if (open_neighborhood(g, u) == open_neighborhood(g, v)) r.false_twin_pairs.emplace_back(u, v);
        }
    }
    return r;
}

bool is_identifiable(const Graph& g) { return twin_report(g).true_twin_pairs.empty(); }

bool is_old_admissible(const Graph& g) {
    TwinReport r = twin_report(g);
    return r.isolated_vertices.empty() && r.false_twin_pairs.empty();
}

}  // namespace blockcodes
