#include "blockcodes/enumerate.hpp"

#include <algorithm>
#include <map>

#include "blockcodes/graph_io.hpp"
#include "blockcodes/solver.hpp"

namespace blockcodes {

namespace {

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.n()) {
        for (Vertex v = 0; v < n_; ++v) degrees_.push_back(g.degree(v));
        slot_degree_ = degrees_;
        std::sort(slot_degree_.begin(), slot_degree_.end());
        twin_rep_.assign(static_cast<std::size_t>(n_), -1);
        for (Vertex v = 0; v < n_; ++v) {
            twin_rep_[v] = v;
            for (Vertex u = 0; u < v; ++u) {
                if (closed_neighborhood(g, u) == closed_neighborhood(g, v) ||
                    open_neighborhood(g, u) == open_neighborhood(g, v)) {
                    twin_rep_[v] = twin_rep_[u];
                    break;
                }
            }
        }
    }

    void run() {
        order_.clear();
        columns_.clear();
        have_best_ = false;
        dfs(VertexSet{});
    }

    const std::vector<std::uint64_t>& best_columns() const { return best_; }
    const std::vector<Vertex>& best_order() const { return best_order_; }

private:
    std::uint64_t column(Vertex c) const {
        std::uint64_t col = 0;
        const int j = static_cast<int>(order_.size());
        for (int i = 0; i < j; ++i) {
            if (g_.has_edge(order_[i], c)) col |= std::uint64_t{1} << (j - 1 - i);
        }
        return col;
    }

    bool prefix_worse() const {
        return std::lexicographical_compare(best_.begin(), best_.begin() + static_cast<long>(columns_.size()),
                                            columns_.begin(), columns_.end());
    }

    void dfs(VertexSet placed) {
        const int j = static_cast<int>(order_.size());
        if (j == n_) {
            if (!have_best_ || columns_ < best_) {
                best_ = columns_;
                best_order_ = order_;
                have_best_ = true;
            }
            return;
        }
        // Candidates: unplaced vertices of the slot's degree, one per twin
        // class (swapping twins is an automorphism fixing the prefix).
        std::vector<Vertex> cands;
        VertexSet seen_classes;
        for (Vertex v = 0; v < n_; ++v) {
            if (placed.contains(v) || degrees_[v] != slot_degree_[j]) continue;
            if (seen_classes.contains(twin_rep_[v])) continue;
            seen_classes.insert(twin_rep_[v]);
            cands.push_back(v);
        }
        std::uint64_t min_col = ~std::uint64_t{0};
        for (Vertex c : cands) min_col = std::min(min_col, column(c));
        columns_.push_back(min_col);
        for (Vertex c : cands) {
            if (have_best_ && prefix_worse()) break;
            if (column(c) != min_col) continue;
            order_.push_back(c);
            VertexSet next = placed;
            next.insert(c);
            dfs(next);
            order_.pop_back();
        }
        columns_.pop_back();
    }

    const Graph& g_;
    int n_;
    std::vector<int> degrees_;
    std::vector<int> slot_degree_;
    std::vector<Vertex> twin_rep_;
    std::vector<Vertex> order_;
    std::vector<std::uint64_t> columns_;
    std::vector<std::uint64_t> best_;
    std::vector<Vertex> best_order_;
    bool have_best_ = false;
};

struct Canonical {
    CanonicalForm form;
    std::vector<Vertex> order;  // order[new] = old
};

Canonical canonicalize(const Graph& g) {
    if (g.n() > kCanonicalLimit) {
        throw SizeLimitExceeded("canonical_form: n = " + std::to_string(g.n()) + " exceeds " +
                                std::to_string(kCanonicalLimit));
    }
    CanonicalSearch search(g);
    search.run();
    Canonical c;
    c.form.n = g.n();
    const auto& cols = search.best_columns();
    for (int j = 1; j < g.n(); ++j) {
        for (int i = 0; i < j; ++i) c.form.bits.push_back(((cols[j] >> (j - 1 - i)) & 1U) ? '1' : '0');
    }
    c.order = search.best_order();
    return c;
}

Graph apply_order(const Graph& g, const std::vector<Vertex>& order) {
    std::vector<Vertex> perm(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) perm[order[i]] = static_cast<Vertex>(i);
    return relabel(g, perm);
}

/// Canonical representatives keyed (and hence sorted) by form.
using ClassMap = std::map<CanonicalForm, Graph>;

void insert_class(ClassMap& classes, const Graph& g) {
    Canonical c = canonicalize(g);
    if (classes.find(c.form) == classes.end()) classes.emplace(c.form, apply_order(g, c.order));
}

std::vector<Graph> values(const ClassMap& classes) {
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (const auto& [form, g] : classes) out.push_back(g);
    return out;
}

/// Glues a clique on `size` vertices at `at`; size - 1 vertices are new.
Graph attach_block(const Graph& g, Vertex at, int size) {
    std::vector<VertexSet> adj(static_cast<std::size_t>(g.n() + size - 1));
    for (Vertex u = 0; u < g.n(); ++u) adj[u] = g.adjacency(u);
    VertexSet block = VertexSet::singleton(at);
    for (Vertex v = g.n(); v < g.n() + size - 1; ++v) block.insert(v);
    for (Vertex u : block) adj[u] |= block - VertexSet::singleton(u);
    return Graph::from_adjacency(std::move(adj));
}

template <typename Keep>
std::vector<Graph> all_labelled(int n, Keep keep) {
    if (n < 1 || n > kOracleLimit) throw SizeLimitExceeded("oracle enumeration supports 1 <= n <= 6");
    std::vector<Edge> slots;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);
    }
    ClassMap classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<Edge> e;
        for (std::size_t b = 0; b < slots.size(); ++b) {
            if (mask >> b & 1U) e.push_back(slots[b]);
        }
        Graph g(n, e);
        if (keep(g)) insert_class(classes, g);
    }
    return values(classes);
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return canonicalize(g).form; }

Graph canonical_graph(const Graph& g) { return apply_order(g, canonicalize(g).order); }

std::string canonical_id(const Graph& g) { return emit_graph(canonical_graph(g), GraphFormat::Graph6); }

std::vector<Graph> enumerate_connected_block_graphs(int n) {
    if (n < 1 || n > kEnumerateLimit) throw SizeLimitExceeded("enumerate: n must be in [1, 9]");
    std::vector<std::vector<Graph>> level(static_cast<std::size_t>(n + 1));
    level[1] = {Graph(1)};
    for (int m = 2; m <= n; ++m) {
        ClassMap classes;
        for (int smaller = 1; smaller < m; ++smaller) {
            for (const Graph& base : level[smaller]) {
                for (Vertex v = 0; v < base.n(); ++v) insert_class(classes, attach_block(base, v, m - smaller + 1));
            }
        }
        level[m] = values(classes);
    }
    return level[n];
}

std::vector<Graph> oracle_enumerate(int n) {
    return all_labelled(n, [](const Graph& g) { return is_connected(g) && is_block_graph(g); });
}

std::vector<Graph> enumerate_connected_graphs(int n) {
    return all_labelled(n, [](const Graph& g) { return is_connected(g); });
}

}  // namespace blockcodes
