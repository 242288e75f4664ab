#pragma once

// JSON documents for reports. Keys keep insertion order so identical inputs
// give byte-identical output. Qubit indices are 1-based.

#include <string_view>

#include <json.hpp>

#include "rmconv/conversion.hpp"
#include "rmconv/cost.hpp"
#include "rmconv/harness.hpp"
#include "rmconv/rm_codes.hpp"

namespace rmconv {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view json_schema = "rmconv/1";

/// {"schema": "rmconv/1", "kind": kind}
Json json_document(std::string_view kind);

Json to_json(const PauliOperator& p);
Json to_json(const CssCode& code);
Json to_json(const SyndromePlan& plan);
Json to_json(const ConversionReport& report);
/// Per-case entries are compact (error, branch, pass, correction, residual).
Json to_json(const SweepResult& result);
Json to_json(const CrossValidation& cv);
Json to_json(const TransversalReport& t);
Json to_json(const CostBreakdown& b);

}  // namespace rmconv
