#include "blockcodes/families.hpp"

#include <random>
#include <stdexcept>

namespace blockcodes {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph star(int n) {
    require(n >= 1 && n + 1 <= kMaxVertices, "star: n out of range");
    std::vector<Edge> e;
    for (Vertex i = 1; i <= n; ++i) e.emplace_back(0, i);
    return Graph(n + 1, e);
}

Graph path(int n) {
    require(n >= 1 && n <= kMaxVertices, "path: n out of range");
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph clique(int n) {
    require(n >= 1 && n <= kMaxVertices, "clique: n out of range");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    }
    return Graph(n, e);
}

Graph thin_spider(int n) {
    require(n >= 3 && 2 * n <= kMaxVertices, "thin_spider: n must be >= 3");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
        e.emplace_back(i, n + i);
    }
    return Graph(2 * n, e);
}

Graph path_power(int n, int p) {
    require(n >= 2 && n <= kMaxVertices && p >= 1 && p < n, "path_power: need n >= 2 and 1 <= p < n");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n && j - i <= p; ++j) e.emplace_back(i, j);
    }
    return Graph(n, e);
}

namespace {

/// Path u_1..u_k plus pendants at the listed 1-based indices and pair
/// vertices on {u_i, u_{i+1}} for the listed 1-based i.
Graph code_path_graph(int k, const std::vector<int>& pendants, const std::vector<int>& pairs) {
    const int n = k + static_cast<int>(pendants.size() + pairs.size());
    require(n <= kMaxVertices, "extremal graph too large");
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    Vertex next = k;
    for (int i : pendants) e.emplace_back(i - 1, next++);
    for (int i : pairs) {
        e.emplace_back(i - 1, next);
        e.emplace_back(i, next);
        ++next;
    }
    return Graph(n, e);
}

std::vector<int> iota_range(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

}  // namespace

Graph extremal_id(int k) {
    require(k >= 4, "extremal_id: k must be >= 4");
    return code_path_graph(k, iota_range(1, k), iota_range(2, k - 2));
}

Graph extremal_old(int k) {
    require(k >= 5, "extremal_old: k must be >= 5");
    std::vector<int> pendants{1};
    for (int i = 3; i <= k - 2; ++i) pendants.push_back(i);
    pendants.push_back(k);
    return code_path_graph(k, pendants, iota_range(1, k - 1));
}

Graph extremal_ld(int k) {
    require(k >= 2, "extremal_ld: k must be >= 2");
    return code_path_graph(k, iota_range(1, k), iota_range(1, k - 1));
}

Graph split_hypercube(int k) {
    require(k >= 2 && k <= 5, "split_hypercube: k must be in [2, 5]");
    const int n = k + (1 << k) - 1;
    std::vector<Edge> e;
    for (Vertex i = 0; i < k; ++i) {
        for (Vertex j = i + 1; j < k; ++j) e.emplace_back(i, j);
    }
    for (int mask = 1; mask < (1 << k); ++mask) {
        for (Vertex i = 0; i < k; ++i) {
            if (mask & (1 << i)) e.emplace_back(i, k + mask - 1);
        }
    }
    return Graph(n, e);
}

Graph random_block_graph(int num_blocks, int max_block_size, std::uint64_t seed) {
    require(num_blocks >= 1 && max_block_size >= 2, "random_block_graph: need num_blocks >= 1, max_block_size >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(2, max_block_size);
    std::vector<std::vector<Vertex>> block_list;
    std::vector<Edge> e;
    int n = 0;
    for (int b = 0; b < num_blocks; ++b) {
        const int size = size_dist(rng);
        std::vector<Vertex> members;
        if (b == 0) {
            members.push_back(n++);
        } else {
            std::uniform_int_distribution<std::size_t> pick_block(0, block_list.size() - 1);
            const auto& host = block_list[pick_block(rng)];
            std::uniform_int_distribution<std::size_t> pick_vertex(0, host.size() - 1);
            members.push_back(host[pick_vertex(rng)]);
        }
        while (static_cast<int>(members.size()) < size) members.push_back(n++);
        require(n <= kMaxVertices, "random_block_graph: too many vertices");
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) e.emplace_back(members[i], members[j]);
        }
        block_list.push_back(std::move(members));
    }
    return Graph(n, e);
}

std::string FamilySpec::label() const {
    std::string s = name + "(" + std::to_string(k);
    if (p) s += "," + std::to_string(*p);
    if (seed) s += ",seed=" + std::to_string(*seed);
    return s + ")";
}

Graph generate(const FamilySpec& spec) {
    const std::string& f = spec.name;
    auto need_p = [&]() {
        if (!spec.p) throw std::invalid_argument(f + ": missing parameter p");
        return *spec.p;
    };
    if (f == "star") return star(spec.k);
    if (f == "path") return path(spec.k);
    if (f == "clique") return clique(spec.k);
    if (f == "spider" || f == "thin_spider") return thin_spider(spec.k);
    if (f == "path_power") return path_power(spec.k, need_p());
    if (f == "extremal_id") return extremal_id(spec.k);
    if (f == "extremal_old") return extremal_old(spec.k);
    if (f == "extremal_ld") return extremal_ld(spec.k);
    if (f == "split_hypercube") return split_hypercube(spec.k);
    if (f == "random_block") return random_block_graph(spec.k, need_p(), spec.seed.value_or(0));
    throw std::invalid_argument("unknown family: " + f);
}

std::vector<std::string> family_names() {
    return {"star",         "path",        "clique",          "spider",      "path_power",
            "extremal_id", "extremal_old", "extremal_ld", "split_hypercube", "random_block"};
}

}  // namespace blockcodes
