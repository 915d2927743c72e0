#include "nil3/io.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace nil3 {

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

void FieldTable::add_row(std::initializer_list<double> values) {
    rows.emplace_back(values);
}

void emit_csv(const FieldTable& table, std::ostream& os) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) os << ',';
        os << table.columns[i];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            throw std::invalid_argument("emit_csv: row width disagrees with header");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << format_double(row[i]);
        }
        os << '\n';
    }
}

void emit_report(const Report& report, std::ostream& os) {
    for (const auto& [key, value] : report) os << key << ": " << value << '\n';
}

void report_add(Report& report, const std::string& key, double value) {
    report.emplace_back(key, format_double(value));
}

void report_add(Report& report, const std::string& key, const std::string& value) {
    report.emplace_back(key, value);
}

}  // namespace nil3
