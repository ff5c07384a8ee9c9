#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "blockcodes/graph.hpp"

namespace blockcodes {

enum class CodeKind { ID, LD, OLD };

inline constexpr CodeKind kAllKinds[] = {CodeKind::ID, CodeKind::LD, CodeKind::OLD};

const char* kind_name(CodeKind kind);
/// Accepts "id", "ld", "old" in either case.
CodeKind parse_kind(std::string_view name);

struct Code {
    CodeKind kind = CodeKind::ID;
    VertexSet members;

    bool operator==(const Code&) const = default;
};

/// N[u] ∩ C for identifying codes, N(u) ∩ C for LD and OLD codes.
VertexSet signature(const Graph& g, const Code& c, Vertex u);

enum class WitnessType { Undominated, UnseparatedPair };

/// Why a vertex set fails to be a code of its kind. `traces` holds the
/// recomputable evidence: the empty dominating trace of the undominated
/// vertex, or the two equal signatures of the unseparated pair.
struct Violation {
    CodeKind kind = CodeKind::ID;
    WitnessType type = WitnessType::Undominated;
    std::vector<Vertex> vertices;
    std::vector<VertexSet> traces;

    bool operator==(const Violation&) const = default;
};

/// nullopt when `c` is a valid code of its kind. Undominated vertices are
/// reported before unseparated pairs, least witness first.
std::optional<Violation> validate(const Graph& g, const Code& c);
inline bool is_valid(const Graph& g, const Code& c) { return !validate(g, c).has_value(); }

class InvalidCode : public std::invalid_argument {
public:
    InvalidCode(Violation v, const std::string& what) : std::invalid_argument(what), violation_(std::move(v)) {}
    const Violation& violation() const { return violation_; }

private:
    Violation violation_;
};

/// Partition of V relative to a code C used by the vertex-count lower bound
/// argument:
///   v1  the code itself,
///   v2  non-code vertices with exactly one code neighbor,
///   v3  non-code vertices with code neighbors in two or more components of G[C],
///   v4  everything else.
/// For non-code vertices N[x] ∩ C = N(x) ∩ C, so v2 does not depend on the
/// kind's closed/open convention.
///
/// The auxiliary graph H has vertex set v3 plus one node per component of
/// G[C], with x ~ u_i when x has a neighbor in component i.
struct CodeDecomposition {
    CodeKind kind = CodeKind::ID;
    VertexSet v1, v2, v3, v4;
    std::vector<VertexSet> components;  // components of G[C], lexicographic
    int k = 0;                          // number of components of G[C]
    int n0 = 0;                         // degree-0 vertices of G[C]
    int n1 = 0;                         // degree-1 vertices of G[C]
    int forest_edges = 0;               // |E(H)|
    int forest_components = 0;          // components of H (ℓ)
    bool forest_acyclic = true;
};

/// Throws InvalidCode when `c` is not a valid code of its kind.
CodeDecomposition decompose(const Graph& g, const Code& c);

/// Inequalities evaluated by check_claims. `*_refined` use the kind-specific
/// sharpening; for LD the V2 refinement is the basic bound itself.
struct ClaimCheck {
    bool v2_basic = false;    // |V2| <= |C|
    bool v2_refined = false;  // ID: |C| - n0, OLD: |C| - n1, LD: |C|
    bool v3 = false;          // |V3| <= k - 1
    bool v4_basic = false;    // |V4| <= |C| - k
    bool v4_refined = false;  // ID: |C|-3k+2n0, OLD: |C|-3k+n1, LD: |C|-3k+n1+2n0
    bool forest = false;      // H is acyclic

    bool all() const { return v2_basic && v2_refined && v3 && v4_basic && v4_refined && forest; }
    /// Names of the failed inequalities, in declaration order.
    std::vector<std::string> failures() const;
};

ClaimCheck check_claims(const CodeDecomposition& d, CodeKind kind);

}  // namespace blockcodes
