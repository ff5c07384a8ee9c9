#pragma once

#include <json.hpp>

#include "blockcodes/codes.hpp"
#include "blockcodes/construct.hpp"
#include "blockcodes/solver.hpp"

namespace blockcodes {

using Json = nlohmann::ordered_json;

Json vertex_list(VertexSet s);

/// {kind, witness_type, vertices, sets}
Json to_json(const Violation& v);
/// {kind, sets: {v1..v4}, components, k, n0, n1, forest_edges, forest_components, forest_acyclic}
Json to_json(const CodeDecomposition& d);
Json to_json(const ClaimCheck& c);
/// {kind, gamma, certificate, nodes, micros}
Json to_json(const SolveResult& r);
/// {code, size, trace: [{depth, case, removed, neighbor, twin, added, code_size}]}
Json to_json(const ConstructResult& r);

}  // namespace blockcodes
