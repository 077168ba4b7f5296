// csv.cpp: ResultTable serialization.

#include "chiralpb/csv.hpp"

#include "chiralpb/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace chiralpb {

void ResultTable::add_row(std::vector<double> row)
{
    if (row.size() != columns.size()) {
        throw ShapeError("ResultTable: row has " + std::to_string(row.size()) + " values for " +
                         std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

std::size_t ResultTable::column_index(std::string_view name) const
{
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) {
            return i;
        }
    }
    throw ShapeError("ResultTable: no column '" + std::string(name) + "'");
}

std::vector<double> ResultTable::column(std::string_view name) const
{
    const std::size_t k = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        out.push_back(row[k]);
    }
    return out;
}

std::string format_double(double value)
{
    if (std::isnan(value)) {
        return {};
    }
    std::array<char, 64> buf{};
    const auto [end, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::scientific, 16);
    if (ec != std::errc()) {
        throw IoError("format_double: conversion failed");
    }
    return std::string(buf.data(), end);
}

std::string to_csv(const ResultTable& table)
{
    std::string out;
    for (const std::string& line : table.provenance) {
        out += "# ";
        out += line;
        out += '\n';
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const ResultTable& table, const std::string& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    const std::string text = to_csv(table);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.close();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

namespace {

std::vector<std::string_view> split_row(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            return fields;
        }
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

double parse_field(std::string_view field)
{
    if (field.empty()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    double value = 0.0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || end != field.data() + field.size()) {
        throw IoError("parse_csv: bad number '" + std::string(field) + "'");
    }
    return value;
}

} // namespace

ResultTable parse_csv(std::string_view text)
{
    ResultTable table;
    bool have_header = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() : nl + 1;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (!have_header && line.starts_with('#')) {
            line.remove_prefix(1);
            if (line.starts_with(' ')) line.remove_prefix(1);
            table.provenance.emplace_back(line);
            continue;
        }
        if (!have_header) {
            for (std::string_view name : split_row(line)) {
                table.columns.emplace_back(name);
            }
            have_header = true;
            continue;
        }
        std::vector<double> row;
        for (std::string_view field : split_row(line)) {
            row.push_back(parse_field(field));
        }
        try {
            table.add_row(std::move(row));
        } catch (const ShapeError& e) {
            throw IoError(std::string("parse_csv: ") + e.what());
        }
    }
    if (!have_header) {
        throw IoError("parse_csv: missing header row");
    }
    return table;
}

ResultTable read_csv(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str());
}

} // namespace chiralpb
