// csv.hpp: result tables and their CSV form.
//
// Layout: '#'-prefixed provenance lines, one header row, then data rows.
// Numbers use 17 significant digits in scientific notation; NaN is the
// sentinel for "no value" and is written as an empty field.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace chiralpb {

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> provenance;  // header lines, without the '#'

    // Throws ShapeError when the row length differs from the column count.
    void add_row(std::vector<double> row);

    // Throws ShapeError for an unknown column.
    std::size_t column_index(std::string_view name) const;
    std::vector<double> column(std::string_view name) const;

};

// Locale-independent, round-trips exactly; empty for NaN.
std::string format_double(double value);

std::string to_csv(const ResultTable& table);
// Throws IoError when the file cannot be written.
void write_csv(const ResultTable& table, const std::string& path);

// Inverse of to_csv. Empty fields come back as NaN.
ResultTable parse_csv(std::string_view text);
ResultTable read_csv(const std::string& path);

} // namespace chiralpb
