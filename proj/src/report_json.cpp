#include "rmconv/report_json.hpp"

#include "rmconv/harness.hpp"

namespace rmconv {
namespace {

Json bits_json(const std::vector<LabeledBit>& bits) {
    Json j = Json::object();
    for (const auto& b : bits) j[b.label] = b.value ? 1 : 0;
    return j;
}

Json opt_qubit(const std::optional<std::size_t>& q) { return q ? Json(*q) : Json(nullptr); }

}  // namespace

Json json_document(std::string_view kind) {
    Json j;
    j["schema"] = json_schema;
    j["kind"] = kind;
    return j;
}

Json to_json(const PauliOperator& p) { return p.to_string(); }

Json to_json(const CssCode& code) {
    Json j;
    j["label"] = code.label;
    j["n"] = code.n;
    Json xs = Json::array(), zs = Json::array();
    for (const auto& s : code.x_stabs) xs.push_back({{"name", s.origin.label()}, {"operator", s.op.to_string()}});
    for (const auto& s : code.z_stabs) zs.push_back({{"name", s.origin.label()}, {"operator", s.op.to_string()}});
    j["x_stabilizers"] = xs;
    j["z_stabilizers"] = zs;
    j["logical_x"] = code.logical_x.to_string();
    j["logical_z"] = code.logical_z.to_string();
    return j;
}

Json to_json(const SyndromePlan& plan) {
    Json j;
    j["direction"] = to_string(plan.direction);
    j["mode"] = to_string(plan.mode);
    j["m"] = plan.m;
    j["split"] = plan.split;
    Json ms = Json::array();
    for (const auto& pm : plan.measurements())
        ms.push_back({{"label", pm.label},
                      {"operator", pm.op.to_string()},
                      {"weight", pm.op.weight()},
                      {"role", to_string(pm.role)},
                      {"stands_for", pm.stands_for}});
    j["measurements"] = ms;
    const auto all = plan.measurements();
    Json rules = Json::array();
    for (const auto& r : plan.combination_rules) {
        Json members = Json::array();
        for (auto i : r.members) members.push_back(all[i].label);
        rules.push_back({{"target", r.target}, {"operator", r.target_op.to_string()}, {"xor_of", members}});
    }
    j["combination_rules"] = rules;
    j["measurement_count"] = plan.measurement_count();
    j["total_weight"] = plan.total_weight();
    return j;
}

Json to_json(const ConversionReport& r) {
    Json j;
    j["direction"] = to_string(r.direction);
    j["mode"] = to_string(r.mode);
    j["m"] = r.m;
    j["injected_error"] = error_label(r.injected_error);
    std::string branch;
    for (bool b : r.branch_outcomes) branch += b ? '1' : '0';
    j["branch_outcomes"] = branch;
    Json ms = Json::array();
    for (std::size_t i = 0; i < r.measurements.size(); ++i)
        ms.push_back({{"label", r.measurements[i].label},
                      {"operator", r.measurements[i].op.to_string()},
                      {"outcome", r.raw_syndromes[i].value ? 1 : 0},
                      {"deterministic", static_cast<bool>(r.deterministic[i])}});
    j["measurements"] = ms;
    j["raw_syndromes"] = bits_json(r.raw_syndromes);
    j["combined_syndromes"] = bits_json(r.combined_syndromes);
    j["fixed_syndromes"] = bits_json(r.fixed_syndromes);
    j["diagnosis"] = {{"x_error_qubit", opt_qubit(r.diagnosis.x_error_qubit)},
                      {"z_error_qubit", opt_qubit(r.diagnosis.z_error_qubit)}};
    j["fixing_operation"] = r.fixing_operation.to_string();
    j["correction"] = r.correction.to_string();
    Json syn = Json::array();
    for (bool b : r.target_syndrome) syn.push_back(b ? 1 : 0);
    j["target_syndrome"] = syn;
    j["target_syndrome_zero"] = r.target_syndrome_zero;
    if (r.direction == Direction::backward) j["ancilla_block_restored"] = r.ancilla_block_restored;
    j["residual_error"] = r.residual_error.to_string();
    j["logical_preserved"] = r.logical_preserved;
    j["uncorrectable"] = r.uncorrectable;
    j["measurement_count"] = r.measurement_count;
    j["total_weight"] = r.total_weight;
    j["passed"] = r.passed();
    return j;
}

Json to_json(const SweepResult& s) {
    Json j;
    j["m"] = s.m;
    j["direction"] = to_string(s.direction);
    j["mode"] = to_string(s.mode);
    j["errors"] = s.error_count;
    j["branches"] = s.branch_count;
    j["total"] = s.cases.size();
    j["passed"] = s.passed;
    j["failed"] = s.failed;
    j["identity_fix_branches"] = s.identity_fix_branches;
    Json cases = Json::array();
    for (const auto& c : s.cases)
        cases.push_back({{"error", error_label(c.error)},
                         {"branch", bits_string(c.branch)},
                         {"passed", c.passed},
                         {"correction", c.report.correction.to_string()},
                         {"residual", c.report.residual_error.to_string()}});
    j["cases"] = cases;
    return j;
}

Json to_json(const CrossValidation& cv) {
    Json j;
    j["trials"] = cv.trials;
    j["passed"] = cv.passed;
    j["min_fidelity"] = cv.min_fidelity;
    j["outcome_mismatches"] = cv.outcome_mismatches;
    j["forced_outcomes"] = cv.forced_outcomes;
    j["free_outcomes"] = cv.free_outcomes;
    j["failures"] = cv.failures;
    j["ok"] = cv.ok();
    return j;
}

Json to_json(const TransversalReport& t) {
    Json j;
    j["hadamard_min_fidelity"] = t.hadamard_min_fidelity;
    j["hadamard_is_logical_h"] = t.hadamard_ok;
    j["t_zero_fidelity"] = t.t_zero_fidelity;
    j["t_logical"] = t.t_logical;
    j["t_min_fidelity"] = t.t_min_fidelity;
    j["t_stable"] = t.t_stable;
    j["ok"] = t.ok();
    return j;
}

Json to_json(const CostBreakdown& b) {
    Json j;
    j["method"] = b.method;
    Json items = Json::array();
    for (const auto& li : b.line_items)
        items.push_back({{"label", li.label}, {"formula", li.formula}, {"explanation", li.explanation}, {"value", li.value}});
    j["line_items"] = items;
    j["total"] = b.total;
    return j;
}

}  // namespace rmconv
