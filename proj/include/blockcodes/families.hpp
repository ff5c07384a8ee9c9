#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blockcodes/graph.hpp"

namespace blockcodes {

// Generators throw std::invalid_argument on parameters outside their range.
// Labelings are fixed so certificates can be pinned in tests.

/// K_{1,n}: center 0, leaves 1..n.
Graph star(int n);
/// P_n on 0..n-1 in path order.
Graph path(int n);
Graph clique(int n);

/// Thin headless spider S_n, n >= 3: clique c_i = i-1, legs s_i = n+i-1, c_i ~ s_i.
Graph thin_spider(int n);

/// p-th power of P_n: i ~ j iff 0 < |i - j| <= p. Requires n >= 2, 1 <= p < n.
Graph path_power(int n, int p);

// Lower-bound extremal graphs on a code path u_1..u_k. Vertices: path
// u_i = i-1, then pendants in increasing attachment index, then pair
// vertices w_i adjacent to u_i and u_{i+1}.

/// Pendant at every u_i, pair vertices for 2 <= i <= k-2. k >= 4, n = 3k-3.
Graph extremal_id(int k);
/// Pendants at u_1, u_k and u_i for 3 <= i <= k-2, pair vertices for all
/// 1 <= i <= k-1. k >= 5, n = 3k-3.
Graph extremal_old(int k);
/// Pendant at every u_i, pair vertices for all 1 <= i <= k-1. k >= 2, n = 3k-1.
Graph extremal_ld(int k);

/// Split graph: clique v_1..v_k (0..k-1) and an independent u_X for every
/// nonempty X ⊆ {1..k}, u_X ~ v_i iff i ∈ X. u_X has index k + mask(X) - 1.
/// 2 <= k <= 5.
Graph split_hypercube(int k);

/// Random tree of cliques. Block i (i >= 1) has uniform size in
/// [2, max_block_size] and is glued at a uniformly chosen vertex of a
/// uniformly chosen earlier block. Deterministic for a fixed seed.
Graph random_block_graph(int num_blocks, int max_block_size, std::uint64_t seed);

struct FamilySpec {
    std::string name;
    int k = 0;
    std::optional<int> p;
    std::optional<std::uint64_t> seed;

    /// e.g. "extremal_id(5)" or "path_power(6,2)".
    std::string label() const;
};

/// Dispatch by name. Accepted names: star, path, clique, spider
/// (thin_spider), path_power (uses p), extremal_id, extremal_old,
/// extremal_ld, split_hypercube, random_block (k blocks, p max block size,
/// seed).
Graph generate(const FamilySpec& spec);

std::vector<std::string> family_names();

}  // namespace blockcodes
