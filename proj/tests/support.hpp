#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "blockcodes/graph.hpp"
#include "blockcodes/graph_io.hpp"

namespace testing {

using namespace blockcodes;

inline Graph g6(const std::string& text) { return parse_graph(text, GraphFormat::Graph6); }

// a=0, b=1, c=2
inline Graph p3() { return Graph(3, {{0, 1}, {1, 2}}); }
inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }
inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

/// Labelled graph on n vertices whose edge slots (0,1),(0,2),(1,2),(0,3),...
/// are read from the bits of mask.
inline Graph from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> e;
    int b = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++b) {
            if (mask >> b & 1U) e.emplace_back(i, j);
        }
    }
    return Graph(n, e);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            if (coin(rng)) e.emplace_back(i, j);
        }
    }
    return Graph(n, e);
}

inline std::vector<Vertex> random_perm(int n, std::mt19937_64& rng) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

/// Maximal cliques by checking every vertex subset.
inline std::vector<VertexSet> brute_maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    const std::uint64_t all = std::uint64_t{1} << g.n();
    for (std::uint64_t m = 1; m < all; ++m) {
        VertexSet s(m);
        if (!is_clique(g, s)) continue;
        bool maximal = true;
        for (Vertex v = 0; v < g.n() && maximal; ++v) {
            if (!s.contains(v) && (s - open_neighborhood(g, v)).empty()) maximal = false;
        }
        if (maximal) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    return out;
}

/// Minimum adjacency string over all n! labelings.
inline std::string brute_canonical(const Graph& g) {
    std::vector<Vertex> perm(static_cast<std::size_t>(g.n()));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s;
        for (Vertex j = 1; j < g.n(); ++j) {
            for (Vertex i = 0; i < j; ++i) s.push_back(g.has_edge(perm[i], perm[j]) ? '1' : '0');
        }
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace testing
