#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockcodes/codes.hpp"
#include "blockcodes/graph.hpp"

namespace blockcodes {

/// Family of vertex subsets that must each be hit. Constraints are sorted by
/// mask value and free of duplicates.
struct HittingInstance {
    int universe = 0;
    std::vector<VertexSet> constraints;
};

enum class InadmissibleReason { TrueTwins, FalseTwins, IsolatedVertex };

/// The graph admits no code of the requested kind. `witness` is the twin
/// pair or the isolated vertex.
class Inadmissible : public std::invalid_argument {
public:
    Inadmissible(CodeKind kind, InadmissibleReason reason, std::vector<Vertex> witness);
    CodeKind kind() const { return kind_; }
    InadmissibleReason reason() const { return reason_; }
    const std::vector<Vertex>& witness() const { return witness_; }

private:
    CodeKind kind_;
    InadmissibleReason reason_;
    std::vector<Vertex> witness_;
};

class InfeasibleInstance : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SizeLimitExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct HittingSolution {
    int size = 0;
    VertexSet members;
    std::uint64_t nodes = 0;
    std::int64_t micros = 0;
};

struct SolveResult {
    CodeKind kind = CodeKind::ID;
    int gamma = 0;
    Code certificate;
    std::uint64_t nodes = 0;
    std::int64_t micros = 0;
};

/// Throws Inadmissible if the graph has no code of this kind.
void require_admissible(const Graph& g, CodeKind kind);
bool is_admissible(const Graph& g, CodeKind kind);

/// Constraint family whose hitting sets are exactly the codes of `kind`:
///   ID   N[u] for all u, N[u] Δ N[v] for all pairs
///   OLD  N(u) for all u, N(u) Δ N(v) for all pairs
///   LD   N[u] for all u, {u, v} ∪ (N(u) Δ N(v)) for all pairs
HittingInstance build_instance(const Graph& g, CodeKind kind);

/// Exact minimum hitting set by branch and bound. Branches on a smallest
/// unhit constraint and bounds with a greedy family of pairwise disjoint
/// unhit constraints. Among all minimum solutions the lexicographically
/// least one is returned. Throws InfeasibleInstance on an empty constraint.
HittingSolution min_hitting_set(const HittingInstance& inst);

/// γ for `kind` with a certificate that has been re-validated.
SolveResult gamma(const Graph& g, CodeKind kind);

/// Subset enumeration by increasing size, lexicographic within a size;
/// returns the first valid code. Limited to n <= 20.
SolveResult brute_force_gamma(const Graph& g, CodeKind kind);

inline constexpr int kBruteForceLimit = 20;

}  // namespace blockcodes
