#pragma once

// Average-cost accounting for one fault-tolerant logical T by conversion:
// Steane → RM(1,4), transversal T, RM(1,4) → Steane. The primitive costs are
// inputs; the formulas fix how they combine.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rmconv/conversion.hpp"

namespace rmconv {

/// Primitive names: entangle_s, avg_s8, avg_s4, x, z, t.
inline constexpr std::string_view cost_primitive_names[] = {"entangle_s", "avg_s8", "avg_s4", "x", "z", "t"};

struct ReferenceTotals {
    double standard = 0;
    double adp14 = 0;
    double ours = 0;
};

struct CostModel {
    std::map<std::string, double> primitives;
    std::optional<double> epsilon;
    /// User-supplied comparison figure for the standard method.
    std::optional<double> standard_method;
    /// Published totals to compare against, when the config carries them.
    std::optional<ReferenceTotals> reference;

    /// All primitives 1 except entangle_s = 0.
    static CostModel unit();

    /// Throws std::invalid_argument naming a missing primitive.
    double get(std::string_view name) const;
    /// Throws std::invalid_argument on negative costs or avg_s8 < avg_s4.
    void validate() const;
};

/// JSON config: {"epsilon": E, "primitives": {name: value | {"<eps>": value}},
/// "standard_method": value | {...}, "reference": {"<eps>": {"standard", "adp14", "ours"}}}.
/// Epsilon-keyed maps are resolved at `epsilon` (falling back to the config's
/// own "epsilon"). Throws std::invalid_argument on malformed input.
CostModel parse_cost_model(std::string_view json_text, std::optional<double> epsilon = std::nullopt);
CostModel load_cost_model(const std::string& path, std::optional<double> epsilon = std::nullopt);

struct CostLineItem {
    std::string label;
    std::string formula;
    std::string explanation;
    double value = 0;
};

struct CostBreakdown {
    std::string method;
    std::vector<CostLineItem> line_items;
    double total = 0;
};

CostBreakdown cost_adp14(const CostModel& model);
CostBreakdown cost_ours(const CostModel& model);

struct ResourceCount {
    std::size_t measurements = 0;
    std::size_t total_weight = 0;
};

ResourceCount count_resources(const SyndromePlan& plan);

/// Note printed with every cost report.
inline constexpr std::string_view cost_reference_note =
    "absolute reference totals depend on external primitive cost tables (AvgCost, entangleS) that are inputs "
    "here; only the formula structure and the ours < adp14 dominance are reproduced";

}  // namespace rmconv
