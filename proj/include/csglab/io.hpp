#pragma once

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>

#include "csglab/analysis.hpp"
#include "csglab/dynamics.hpp"
#include "csglab/game.hpp"

namespace csglab::io {

using nlohmann::json;

inline constexpr int kDocumentVersion = 1;

json to_json(const Rational& r);
/// "num/den" string (or bare integer string). Throws ParseError.
Rational rational_from_json(const json& j);

/// Instance document. Schemes equal to p/x are written as "ordinary",
/// everything else as an explicit table; rationals are always reduced.
json instance_to_json(const GameInstance& instance);
/// Throws ParseError on malformed documents; scheme and feasibility failures
/// propagate from GameInstance.
GameInstance instance_from_json(const json& doc);

json profile_to_json(const StrategyProfile& profile);
/// Accepts either a bare list of edge-id lists or {"paths": [...]}.
StrategyProfile profile_from_json(const GameInstance& instance, const json& doc);

json trace_to_json(const GameInstance& instance, const DynamicsTrace& trace);
json constructive_to_json(const ConstructiveResult& result);

struct ReportOptions {
  bool sum_cost = true;
  bool max_cost = true;
};

json report_to_json(const AnalysisReport& report, const ReportOptions& options = {});

/// Reads a whole file, or standard input for "-".
std::string read_text(const std::string& path);
json parse_json(std::string_view text);

}  // namespace csglab::io
