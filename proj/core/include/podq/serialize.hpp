#pragma once

// Stable text encodings for the public value types.  Series travel as one
// JSON object with decimal-string coefficients (exact regardless of
// magnitude), check reports as JSON lines, statistic tables as CSV or JSON
// lines.  The JSON library stays an implementation detail of this module.

#include <string>
#include <string_view>

#include "podq/check_report.hpp"
#include "podq/enumeration.hpp"
#include "podq/series.hpp"

namespace podq {

// {"order": N, "modulus": m or null, "coeffs": ["1", "-2", ...]}
std::string series_to_json(const Series& s);
Series series_from_json(std::string_view text);

// One line, no trailing newline:
// {"check": ..., "order": ..., "pass": ..., "counterexample": {...} | null,
//  "ms": ...}
std::string check_report_to_json_line(const CheckReport& rep);

// Header "stat,m,n,count", one row per nonzero table entry, ordered by
// weight then statistic value.
std::string stat_table_to_csv(const StatTable& table);

// The same rows as JSON lines.
std::string stat_table_to_json_lines(const StatTable& table);

}  // namespace podq
