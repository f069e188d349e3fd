#include "cbn/records.hpp"

namespace cbn {

using nlohmann::json;

json to_json(const ControllabilityVerdict& verdict, const DependencyGraph& g) {
    json witness = nullptr;
    if (verdict.reason == VerdictReason::NotDag) {
        witness = json::array();
        for (NodeId v : verdict.cycle) witness.push_back(g.node_name(v));
    } else if (verdict.reason == VerdictReason::PropertyPViolation) {
        witness = g.node_name(*verdict.violating_node);
    }
    return {{"controllable", verdict.controllable},
            {"reason", to_string(verdict.reason)},
            {"witness", witness}};
}

json to_json(const PathDecomposition& paths, const DependencyGraph& g) {
    json out = json::array();
    for (const auto& p : paths) {
        json names = json::array();
        for (NodeId v : p.nodes) names.push_back(g.node_name(v));
        out.push_back(names);
    }
    return out;
}

json to_json(const MinControlResult& result, bool with_timing) {
    json indices = json::array();
    for (VarIndex i : result.control_set) indices.push_back(var_name(i));
    json out = {{"indices", indices},
                {"cardinality", result.cardinality()},
                {"exact", result.exact},
                {"tested_count", result.tested_count}};
    if (with_timing) out["elapsed"] = result.elapsed_seconds;
    return out;
}

json to_json(const ReductionResult& result, const ReductionInstance& instance) {
    json y = json::array();
    for (Vertex v : result.dominating_set) y.push_back(vertex_name(v));
    json controls = json::array();
    for (VarIndex i : result.control_set) controls.push_back(instance.node_label(i));
    json out = {{"Y", y},
                {"gamma", result.gamma},
                {"total_controls", result.total_controls},
                {"controls", controls},
                {"decision", nullptr}};
    if (result.decision) out["decision"] = *result.decision;
    return out;
}

json to_json(const DominatingSetResult& result) {
    json d = json::array();
    for (Vertex v : result.vertices) d.push_back(vertex_name(v));
    json out = {{"D", d}, {"gamma", result.gamma}, {"decision", nullptr}};
    if (result.decision) out["decision"] = *result.decision;
    return out;
}

} // namespace cbn
