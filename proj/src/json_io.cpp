#include "blockcodes/json_io.hpp"

namespace blockcodes {

Json vertex_list(VertexSet s) { return Json(s.to_vector()); }

Json to_json(const Violation& v) {
    Json sets = Json::array();
    for (VertexSet s : v.traces) sets.push_back(vertex_list(s));
    return Json{{"kind", kind_name(v.kind)},
                {"witness_type", v.type == WitnessType::Undominated ? "undominated" : "unseparated_pair"},
                {"vertices", v.vertices},
                {"sets", sets}};
}

Json to_json(const CodeDecomposition& d) {
    Json comps = Json::array();
    for (VertexSet c : d.components) comps.push_back(vertex_list(c));
    return Json{{"kind", kind_name(d.kind)},
                {"sets", Json{{"v1", vertex_list(d.v1)},
                              {"v2", vertex_list(d.v2)},
                              {"v3", vertex_list(d.v3)},
                              {"v4", vertex_list(d.v4)}}},
                {"components", comps},
                {"k", d.k},
                {"n0", d.n0},
                {"n1", d.n1},
                {"forest_edges", d.forest_edges},
                {"forest_components", d.forest_components},
                {"forest_acyclic", d.forest_acyclic}};
}

Json to_json(const ClaimCheck& c) {
    return Json{{"v2_basic", c.v2_basic}, {"v2_refined", c.v2_refined}, {"v3", c.v3},
                {"v4_basic", c.v4_basic}, {"v4_refined", c.v4_refined}, {"forest", c.forest}};
}

Json to_json(const SolveResult& r) {
    return Json{{"kind", kind_name(r.kind)},
                {"gamma", r.gamma},
                {"certificate", vertex_list(r.certificate.members)},
                {"nodes", r.nodes},
                {"micros", r.micros}};
}

Json to_json(const ConstructResult& r) {
    Json steps = Json::array();
    for (const ConstructStep& s : r.trace) {
        Json step{{"depth", s.depth}, {"case", case_name(s.which)}};
        step["removed"] = s.removed >= 0 ? Json(s.removed) : Json(nullptr);
        step["neighbor"] = s.neighbor >= 0 ? Json(s.neighbor) : Json(nullptr);
        step["twin"] = s.twin >= 0 ? Json(s.twin) : Json(nullptr);
        step["added"] = s.added;
        step["code_size"] = s.code_size;
        steps.push_back(std::move(step));
    }
    return Json{{"code", vertex_list(r.code.members)}, {"size", r.code.members.size()}, {"trace", steps}};
}

}  // namespace blockcodes
