#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "blockcodes/graph.hpp"

namespace blockcodes {

/// Minimum, over degree-sorted vertex orderings, of the upper-triangle
/// adjacency string in graph6 bit order (column j lists x(0,j)..x(j-1,j)).
/// Equal forms iff isomorphic graphs.
struct CanonicalForm {
    int n = 0;
    std::string bits;  // '0'/'1', length n(n-1)/2

    auto operator<=>(const CanonicalForm&) const = default;
};

inline constexpr int kCanonicalLimit = 10;

/// Throws SizeLimitExceeded (solver.hpp) for n > 10.
CanonicalForm canonical_form(const Graph& g);
/// g relabelled so that its adjacency string is the canonical form.
Graph canonical_graph(const Graph& g);
/// graph6 text of canonical_graph(g).
std::string canonical_id(const Graph& g);

/// One canonically labelled representative per isomorphism class of
/// connected block graphs on n vertices (1 <= n <= 9), sorted by canonical
/// form. Built by repeatedly gluing a clique at one vertex of a smaller
/// connected block graph.
std::vector<Graph> enumerate_connected_block_graphs(int n);

/// Brute force over all labelled graphs on n <= 6 vertices, keeping the
/// connected block graphs. Same output convention as above.
std::vector<Graph> oracle_enumerate(int n);

/// All connected graphs on n <= 6 vertices up to isomorphism.
std::vector<Graph> enumerate_connected_graphs(int n);

inline constexpr int kEnumerateLimit = 9;
inline constexpr int kOracleLimit = 6;

}  // namespace blockcodes
