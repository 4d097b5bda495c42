#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wentropy/distribution.hpp"
#include "wentropy/gof.hpp"
#include "wentropy/sample.hpp"

namespace wentropy {

// ---- Distribution text form ------------------------------------------------
//
//   exp(rate)            pareto(shape,scale)     uniform(lower,upper)
//   power(shape,upper)   rayleigh(rate)          weibull(shape[,scale])
//   gamma(shape[,scale]) affine(<dist>,scale,shift)
//
// Names are case-insensitive; "exponential" is accepted for "exp".
// Whitespace is ignored. Throws ParseError or InvalidParameter.
Distribution parse_distribution(std::string_view text);

/// Sample sizes such as "4:30", "5:30:5", "10,20,50" or a mix "4:30,35:50:5".
std::vector<int> parse_size_list(std::string_view text);
/// Comma-separated reals, e.g. "0.01,0.05,0.10".
std::vector<double> parse_real_list(std::string_view text);

// ---- Samples ---------------------------------------------------------------

/// One value per line; blank lines and lines starting with '#' are skipped.
Sample read_sample_text(const std::filesystem::path& path);
/// CSV with a header row; values are taken from the named column.
Sample read_sample_csv(const std::filesystem::path& path, const std::string& column);
/// CSV when column is set or the file ends in ".csv", plain text otherwise.
Sample read_sample(const std::filesystem::path& path, const std::optional<std::string>& column);

// ---- Critical tables -------------------------------------------------------
//
// JSON: {"schema": 1, "provenance": {...}, "entries": [{"n":..,"level":..,"value":..}]}
// CSV:  "# schema: 1" and "# provenance: key=value ..." comment lines, then
//       a "n,level,value" header and one row per entry.

constexpr int kTableSchema = 1;

std::string critical_table_to_json(const CriticalTable& table);
std::string critical_table_to_csv(const CriticalTable& table);
CriticalTable critical_table_from_json(std::string_view text);
CriticalTable critical_table_from_csv(std::string_view text);

void write_critical_table(const CriticalTable& table, const std::filesystem::path& path);
/// Format chosen by extension (.csv, anything else is JSON).
CriticalTable read_critical_table(const std::filesystem::path& path);

/// Shortest decimal text that round-trips to the same double.
std::string format_real(double v);

}  // namespace wentropy
