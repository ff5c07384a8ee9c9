#include "blockcodes/construct.hpp"

#include <algorithm>

#include "blockcodes/solver.hpp"

namespace blockcodes {

const char* case_name(ConstructCase c) {
    switch (c) {
        case ConstructCase::Base: return "base";
        case ConstructCase::LeafAdded: return "leaf_added";
        case ConstructCase::LeafAddedYCovered: return "leaf_added_y_covered";
        case ConstructCase::NeighborAdded: return "neighbor_added";
        case ConstructCase::TwinLeafAdded: return "twin_leaf_added";
        case ConstructCase::TwinSwapped: return "twin_swapped";
    }
    return "?";
}

namespace {

VertexSet lift(VertexSet sub, const std::vector<Vertex>& original) {
    VertexSet out;
    for (Vertex v : sub) out.insert(original[v]);
    return out;
}

class Builder {
public:
    std::vector<ConstructStep> trace;

    /// Code of h in h's own labels; `label` maps h's vertices to the input graph.
    VertexSet build(const Graph& h, const std::vector<Vertex>& label, int depth) {
        const std::size_t slot = trace.size();
        trace.emplace_back();
        trace[slot].depth = depth;

        if (h.n() <= 3) {
            VertexSet code = brute_force_gamma(h, CodeKind::ID).certificate.members;
            trace[slot].added = lift(code, label).to_vector();
            trace[slot].code_size = code.size();
            return code;
        }

        Vertex x = -1;
        for (Vertex u = 0; u < h.n(); ++u) {
            if (h.degree(u) == 1) {
                x = u;
                break;
            }
        }
        if (x < 0) throw InternalContradiction("no degree-1 vertex in a twin-free block graph on >= 4 vertices");
        const Vertex y = h.adjacency(x).front();

        std::vector<Vertex> sub_of;  // G' index -> h index
        const Graph g1 = induced_subgraph(h, h.vertices() - VertexSet::singleton(x), &sub_of);
        const TwinReport twins = twin_report(g1);

        ConstructStep step;
        step.depth = depth;
        step.removed = label[x];
        step.neighbor = label[y];
        VertexSet code;

        if (twins.true_twin_pairs.empty()) {
            std::vector<Vertex> next_label(sub_of.size());
            for (std::size_t i = 0; i < sub_of.size(); ++i) next_label[i] = label[sub_of[i]];
            const VertexSet c1 = lift(build(g1, next_label, depth + 1), sub_of);
            if (!c1.contains(y)) {
                step.which = ConstructCase::LeafAdded;
                code = c1 | VertexSet::singleton(x);
                step.added = {label[x]};
            } else if (!(h.adjacency(y) & c1).empty()) {
                step.which = ConstructCase::LeafAddedYCovered;
                code = c1 | VertexSet::singleton(x);
                step.added = {label[x]};
            } else {
                if ((closed_neighborhood(h, y) & c1) != VertexSet::singleton(y)) {
                    throw InternalContradiction("expected N[y] ∩ C' = {y}");
                }
                const VertexSet candidates = h.adjacency(y) - VertexSet::singleton(x);
                if (candidates.empty()) throw InternalContradiction("y has no neighbor other than x");
                const Vertex z = candidates.front();
                step.which = ConstructCase::NeighborAdded;
                code = c1 | VertexSet::singleton(z);
                step.added = {label[z]};
            }
        } else {
            // Twins of G' must be y and a unique partner v.
            Vertex v = -1;
            const Vertex y1 = static_cast<Vertex>(std::find(sub_of.begin(), sub_of.end(), y) - sub_of.begin());
            for (auto [a, b] : twins.true_twin_pairs) {
                if (a != y1 && b != y1) throw InternalContradiction("twins of G - x do not involve y");
                const Vertex partner = a == y1 ? b : a;
                if (v >= 0 && v != partner) throw InternalContradiction("twin of y in G - x is not unique");
                v = partner;
            }
            const Vertex v_h = sub_of[v];
            std::vector<Vertex> sub2;  // G'' index -> h index
            const Graph g2 = induced_subgraph(h, h.vertices() - VertexSet{x, v_h}, &sub2);
            std::vector<Vertex> next_label(sub2.size());
            for (std::size_t i = 0; i < sub2.size(); ++i) next_label[i] = label[sub2[i]];
            const VertexSet c2 = lift(build(g2, next_label, depth + 1), sub2);
            step.twin = label[v_h];
            if (!c2.contains(y)) {
                step.which = ConstructCase::TwinLeafAdded;
                code = c2 | VertexSet::singleton(x);
                step.added = {label[x]};
            } else {
                step.which = ConstructCase::TwinSwapped;
                code = (c2 - VertexSet::singleton(y)) | VertexSet{x, v_h};
                step.added = {label[x], label[v_h]};
            }
        }

        if (auto violation = validate(h, Code{CodeKind::ID, code})) {
            throw InternalContradiction(std::string("construct: case ") + case_name(step.which) +
                                        " produced an invalid identifying code");
        }
        step.code_size = code.size();
        trace[slot] = step;
        return code;
    }
};

}  // namespace

ConstructResult id_code_at_most_nq(const Graph& g) {
    auto comps = connected_components(g);
    if (comps.size() != 1) {
        std::vector<Vertex> witness;
        if (comps.size() > 1) witness = {comps[0].front(), comps[1].front()};
        throw ConstructPreconditionError(ConstructPrecondition::Disconnected, witness, "construct: graph is not connected");
    }
    for (VertexSet b : blocks(g).blocks) {
        for (Vertex u : b) {
            VertexSet missing = b - g.adjacency(u) - VertexSet::singleton(u);
            if (!missing.empty()) {
                throw ConstructPreconditionError(ConstructPrecondition::NotBlockGraph, {u, missing.front()},
                                                 "construct: a block is not a clique");
            }
        }
    }
    TwinReport twins = twin_report(g);
    if (!twins.true_twin_pairs.empty()) {
        auto [u, v] = twins.true_twin_pairs.front();
        throw ConstructPreconditionError(ConstructPrecondition::NotIdentifiable, {u, v}, "construct: graph has true twins");
    }

    std::vector<Vertex> identity(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) identity[v] = v;
    Builder b;
    VertexSet code = b.build(g, identity, 0);
    return ConstructResult{Code{CodeKind::ID, code}, std::move(b.trace)};
}

}  // namespace blockcodes
