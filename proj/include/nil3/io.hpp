#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace nil3 {

/// Shortest decimal string that parses back to exactly the same double
/// (std::to_chars); at most 17 significant digits. Keeps every emitted
/// artifact byte-deterministic across runs.
std::string format_double(double value);

/// Rectangular numeric table for CSV emission.
struct FieldTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_row(std::initializer_list<double> values);
};

/// Header line, then one comma-separated row per entry, '\n' terminated.
/// Throws std::invalid_argument if a row width disagrees with the header.
void emit_csv(const FieldTable& table, std::ostream& os);

/// Ordered key/value pairs rendered as "key: value" lines.
using Report = std::vector<std::pair<std::string, std::string>>;

void emit_report(const Report& report, std::ostream& os);

/// Convenience append helpers keeping numeric formatting uniform.
void report_add(Report& report, const std::string& key, double value);
void report_add(Report& report, const std::string& key, const std::string& value);

}  // namespace nil3
