#include "blockcodes/solver.hpp"

#include <algorithm>
#include <chrono>

namespace blockcodes {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

std::string describe(CodeKind kind, InadmissibleReason reason, const std::vector<Vertex>& w) {
    std::string s = std::string(kind_name(kind)) + "-code impossible: ";
    switch (reason) {
        case InadmissibleReason::TrueTwins: s += "true twins"; break;
        case InadmissibleReason::FalseTwins: s += "false twins"; break;
        case InadmissibleReason::IsolatedVertex: s += "isolated vertex"; break;
    }
    for (Vertex v : w) s += " " + std::to_string(v);
    return s;
}

/// Drops constraints that strictly contain another one; hitting sets are unchanged.
std::vector<VertexSet> minimal_constraints(std::vector<VertexSet> cons) {
    std::sort(cons.begin(), cons.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
    });
    cons.erase(std::unique(cons.begin(), cons.end()), cons.end());
    std::vector<VertexSet> out;
    for (VertexSet c : cons) {
        bool dominated = false;
        for (VertexSet kept : out) {
            if (kept.subset_of(c)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(c);
    }
    return out;
}

class BranchAndBound {
public:
    explicit BranchAndBound(std::vector<VertexSet> constraints) : cons_(std::move(constraints)) {}

    /// Smallest hitting set H with forced ⊆ H and H - forced ⊆ allowed, of
    /// size < limit; returns limit if there is none. With first_only the
    /// search stops at the first such H.
    int solve(VertexSet forced, VertexSet allowed, int limit, bool first_only) {
        best_size_ = limit;
        first_only_ = first_only;
        done_ = false;
        dfs(forced, VertexSet(~allowed.bits()));
        return best_size_;
    }

    VertexSet best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void dfs(VertexSet chosen, VertexSet excluded) {
        if (done_) return;
        ++nodes_;
        std::vector<VertexSet> open;
        for (VertexSet c : cons_) {
            if (c.intersects(chosen)) continue;
            VertexSet r = c - excluded;
            if (r.empty()) return;
            open.push_back(r);
        }
        const int size = chosen.size();
        if (open.empty()) {
            if (size < best_size_) {
                best_size_ = size;
                best_ = chosen;
                if (first_only_) done_ = true;
            }
            return;
        }
        std::sort(open.begin(), open.end(), [](VertexSet a, VertexSet b) {
            return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
        });
        int bound = 0;
        VertexSet used;
        for (VertexSet r : open) {
            if (!r.intersects(used)) {
                ++bound;
                used |= r;
            }
        }
        if (size + bound >= best_size_) return;

        VertexSet skipped;
        for (Vertex v : open.front()) {
            VertexSet next = chosen;
            next.insert(v);
            dfs(next, excluded | skipped);
            if (done_) return;
            skipped.insert(v);
        }
    }

    std::vector<VertexSet> cons_;
    std::uint64_t nodes_ = 0;
    int best_size_ = 0;
    VertexSet best_;
    bool first_only_ = false;
    bool done_ = false;
};

}  // namespace

Inadmissible::Inadmissible(CodeKind kind, InadmissibleReason reason, std::vector<Vertex> witness)
    : std::invalid_argument(describe(kind, reason, witness)), kind_(kind), reason_(reason), witness_(std::move(witness)) {}

void require_admissible(const Graph& g, CodeKind kind) {
    if (kind == CodeKind::LD) return;
    TwinReport t = twin_report(g);
    if (kind == CodeKind::ID) {
        if (!t.true_twin_pairs.empty()) {
            auto [u, v] = t.true_twin_pairs.front();
            throw Inadmissible(kind, InadmissibleReason::TrueTwins, {u, v});
        }
        return;
    }
    if (!t.isolated_vertices.empty()) {
        throw Inadmissible(kind, InadmissibleReason::IsolatedVertex, {t.isolated_vertices.front()});
    }
    if (!t.false_twin_pairs.empty()) {
        auto [u, v] = t.false_twin_pairs.front();
        throw Inadmissible(kind, InadmissibleReason::FalseTwins, {u, v});
    }
}

bool is_admissible(const Graph& g, CodeKind kind) {
    switch (kind) {
        case CodeKind::ID: return is_identifiable(g);
        case CodeKind::OLD: return is_old_admissible(g);
        case CodeKind::LD: return true;
    }
    return false;
}

HittingInstance build_instance(const Graph& g, CodeKind kind) {
    require_admissible(g, kind);
    HittingInstance inst;
    inst.universe = g.n();
    auto nbhd = [&](Vertex u) {
        return kind == CodeKind::OLD ? open_neighborhood(g, u) : closed_neighborhood(g, u);
    };
    for (Vertex u = 0; u < g.n(); ++u) inst.constraints.push_back(nbhd(u));
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex v = u + 1; v < g.n(); ++v) {
            if (kind == CodeKind::LD) {
                inst.constraints.push_back(VertexSet{u, v} | (open_neighborhood(g, u) ^ open_neighborhood(g, v)));
            } else {
                inst.constraints.push_back(nbhd(u) ^ nbhd(v));
            }
        }
    }
    std::sort(inst.constraints.begin(), inst.constraints.end(),
              [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    inst.constraints.erase(std::unique(inst.constraints.begin(), inst.constraints.end()), inst.constraints.end());
    return inst;
}

HittingSolution min_hitting_set(const HittingInstance& inst) {
    const auto start = Clock::now();
    const VertexSet universe = VertexSet::range(inst.universe);
    for (VertexSet c : inst.constraints) {
        if (c.empty()) throw InfeasibleInstance("hitting set instance has an empty constraint");
        if (!c.subset_of(universe)) throw std::invalid_argument("constraint outside the universe");
    }
    BranchAndBound bnb(minimal_constraints(inst.constraints));
    const int gamma = bnb.solve(VertexSet{}, universe, inst.universe + 1, false);

    // Lexicographically least optimum: fix elements one at a time, taking the
    // smallest vertex that still admits a completion from larger vertices.
    VertexSet chosen;
    Vertex last = -1;
    for (int pos = 0; pos < gamma; ++pos) {
        bool placed = false;
        for (Vertex v = last + 1; v < inst.universe && !placed; ++v) {
            VertexSet trial = chosen;
            trial.insert(v);
            const VertexSet above = universe - VertexSet::range(v + 1);
            if (bnb.solve(trial, above, gamma + 1, true) <= gamma) {
                chosen = trial;
                last = v;
                placed = true;
            }
        }
        if (!placed) throw std::logic_error("min_hitting_set: lexicographic extraction failed");
    }
    return HittingSolution{gamma, chosen, bnb.nodes(), micros_since(start)};
}

SolveResult gamma(const Graph& g, CodeKind kind) {
    const auto start = Clock::now();
    HittingSolution sol = min_hitting_set(build_instance(g, kind));
    SolveResult r{kind, sol.size, Code{kind, sol.members}, sol.nodes, 0};
    if (auto v = validate(g, r.certificate)) {
        throw std::logic_error(std::string("solver certificate failed validation for ") + kind_name(kind));
    }
    r.micros = micros_since(start);
    return r;
}

SolveResult brute_force_gamma(const Graph& g, CodeKind kind) {
    const auto start = Clock::now();
    const int n = g.n();
    if (n > kBruteForceLimit) {
        throw SizeLimitExceeded("brute_force_gamma: n = " + std::to_string(n) + " exceeds " +
                                std::to_string(kBruteForceLimit));
    }
    require_admissible(g, kind);
    std::uint64_t tested = 0;
    for (int size = 0; size <= n; ++size) {
        std::vector<Vertex> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            ++tested;
            Code c{kind, VertexSet::from_vector(idx)};
            if (is_valid(g, c)) return SolveResult{kind, size, c, tested, micros_since(start)};
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw std::logic_error("brute_force_gamma: no valid code on an admissible graph");
}

}  // namespace blockcodes
