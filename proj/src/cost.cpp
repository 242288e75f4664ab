#include "rmconv/cost.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

namespace rmconv {
namespace {

using nlohmann::ordered_json;

bool same_epsilon(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b)); }

double epsilon_key(const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(fmt::format("cost config: '{}' is not an epsilon value", key));
    }
}

// A plain number, or an object keyed by epsilon.
double resolve(const ordered_json& v, std::optional<double> eps, std::string_view what) {
    if (v.is_number()) return v.get<double>();
    if (!v.is_object()) throw std::invalid_argument(fmt::format("cost config: '{}' must be a number or object", what));
    if (!eps) throw std::invalid_argument(fmt::format("cost config: '{}' depends on epsilon but none was given", what));
    for (const auto& [key, val] : v.items()) {
        if (!same_epsilon(epsilon_key(key), *eps)) continue;
        if (!val.is_number()) throw std::invalid_argument(fmt::format("cost config: '{}' at {} is not a number", what, key));
        return val.get<double>();
    }
    throw std::invalid_argument(fmt::format("cost config: '{}' has no entry for epsilon {}", what, *eps));
}

}  // namespace

CostModel CostModel::unit() {
    CostModel m;
    for (auto name : cost_primitive_names) m.primitives[std::string(name)] = 1;
    m.primitives["entangle_s"] = 0;
    return m;
}

double CostModel::get(std::string_view name) const {
    const auto it = primitives.find(std::string(name));
    if (it == primitives.end()) throw std::invalid_argument(fmt::format("cost model: missing primitive '{}'", name));
    return it->second;
}

void CostModel::validate() const {
    for (const auto& [k, v] : primitives)
        if (!(v >= 0)) throw std::invalid_argument(fmt::format("cost model: primitive '{}' is negative", k));
    if (epsilon && !(*epsilon > 0 && *epsilon < 1)) throw std::invalid_argument("cost model: epsilon must be in (0,1)");
    if (primitives.count("avg_s8") && primitives.count("avg_s4") && get("avg_s8") < get("avg_s4"))
        throw std::invalid_argument("cost model: avg_s8 must not be below avg_s4");
}

CostModel parse_cost_model(std::string_view json_text, std::optional<double> epsilon) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const ordered_json::parse_error& e) {
        throw std::invalid_argument(fmt::format("cost config: {}", e.what()));
    }
    if (!j.is_object()) throw std::invalid_argument("cost config: top level must be an object");

    CostModel m;
    if (epsilon) {
        m.epsilon = epsilon;
    } else if (j.contains("epsilon")) {
        if (!j["epsilon"].is_number()) throw std::invalid_argument("cost config: 'epsilon' must be a number");
        m.epsilon = j["epsilon"].get<double>();
    }
    if (!j.contains("primitives") || !j["primitives"].is_object())
        throw std::invalid_argument("cost config: missing 'primitives' object");
    for (const auto& [key, val] : j["primitives"].items()) {
        bool known = false;
        for (auto name : cost_primitive_names) known = known || key == name;
        if (!known) throw std::invalid_argument(fmt::format("cost config: unknown primitive '{}'", key));
        m.primitives[key] = resolve(val, m.epsilon, key);
    }
    if (j.contains("standard_method")) m.standard_method = resolve(j["standard_method"], m.epsilon, "standard_method");
    if (j.contains("reference") && m.epsilon) {
        for (const auto& [key, val] : j["reference"].items()) {
            if (!same_epsilon(epsilon_key(key), *m.epsilon)) continue;
            m.reference = ReferenceTotals{val.at("standard").get<double>(), val.at("adp14").get<double>(),
                                          val.at("ours").get<double>()};
        }
    }
    m.validate();
    return m;
}

CostModel load_cost_model(const std::string& path, std::optional<double> epsilon) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(fmt::format("cannot open cost config '{}'", path));
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_cost_model(ss.str(), epsilon);
}

namespace {

CostLineItem item(std::string label, std::string formula, std::string explanation, double value) {
    return {std::move(label), std::move(formula), std::move(explanation), value};
}

// Shared tail: fix operations and the transversal gate.
void add_fixed_items(CostBreakdown& b, const CostModel& model, bool forward_fix) {
    if (forward_fix)
        b.line_items.push_back(item("Cost(fix operation)", "0.875*4*Cost(X)", "forward fix operation",
                                    0.875 * 4 * model.get("x")));
    else
        b.line_items.push_back(item("Cost(fix operation)", "0.75*4*Cost(Z) + 0.125*8*Cost(Z)", "backward fix operation",
                                    (0.75 * 4 + 0.125 * 8) * model.get("z")));
}

void sum(CostBreakdown& b) {
    b.total = 0;
    for (const auto& li : b.line_items) b.total += li.value;
}

}  // namespace

CostBreakdown cost_adp14(const CostModel& model) {
    model.validate();
    CostBreakdown b;
    b.method = "adp14";
    const double qec = 8 * model.get("avg_s8") + 6 * model.get("avg_s4");
    b.line_items.push_back(item("Cost(ancillary)", "Cost(entangleS)", "cost for the input", model.get("entangle_s")));
    b.line_items.push_back(
        item("Cost(QEC_RM)", "8*AvgCost(S_i,8) + 6*AvgCost(S_i,4)", "14 stabilizer measurements", qec));
    add_fixed_items(b, model, true);
    b.line_items.push_back(item("Cost(T)", "15*Cost(T)", "transversal T on RM code", 15 * model.get("t")));
    b.line_items.push_back(
        item("Cost(QEC_RM)", "8*AvgCost(S_i,8) + 6*AvgCost(S_i,4)", "14 stabilizer measurements", qec));
    add_fixed_items(b, model, false);
    sum(b);
    return b;
}

CostBreakdown cost_ours(const CostModel& model) {
    model.validate();
    CostBreakdown b;
    b.method = "ours";
    const double s4 = model.get("avg_s4");
    b.line_items.push_back(item("Cost(ancillary)", "Cost(entangleS)", "cost for the input", model.get("entangle_s")));
    b.line_items.push_back(item("Cost(QEC_RM)", "8*AvgCost(S_i,4)", "8 stabilizer measurements", 8 * s4));
    add_fixed_items(b, model, true);
    b.line_items.push_back(item("Cost(T)", "15*Cost(T)", "transversal T on RM code", 15 * model.get("t")));
    b.line_items.push_back(item("Cost(QEC_RM)", "7*AvgCost(S_i,4)", "7 stabilizer measurements", 7 * s4));
    add_fixed_items(b, model, false);
    sum(b);
    return b;
}

ResourceCount count_resources(const SyndromePlan& plan) { return {plan.measurement_count(), plan.total_weight()}; }

}  // namespace rmconv
