// config.cpp: key = value parser and canonical writer for RunSpec.

#include "chiralpb/config.hpp"

#include "chiralpb/csv.hpp"
#include "chiralpb/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#ifndef CHIRALPB_VERSION
#define CHIRALPB_VERSION "unknown"
#endif

namespace chiralpb {

namespace {

std::string_view trim(std::string_view s)
{
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_commas(std::string_view s)
{
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = s.find(',', pos);
        parts.push_back(trim(s.substr(pos, comma == std::string_view::npos ? s.npos : comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return parts;
}

double parse_number(std::string_view text, std::size_t line)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
        throw ConfigError("expected a number, got '" + std::string(text) + "'", line);
    }
    if (!std::isfinite(value)) {
        throw ConfigError("value must be finite", line);
    }
    return value;
}

std::size_t parse_count(std::string_view text, std::size_t line)
{
    text = trim(text);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
        throw ConfigError("expected a non-negative integer, got '" + std::string(text) + "'", line);
    }
    return value;
}

bool parse_bool(std::string_view text, std::size_t line)
{
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw ConfigError("expected true or false, got '" + std::string(text) + "'", line);
}

Method parse_method(std::string_view text, std::size_t line)
{
    if (text == "analytic") return Method::analytic;
    if (text == "master") return Method::master;
    if (text == "both") return Method::both;
    throw ConfigError("method must be analytic, master or both, got '" + std::string(text) + "'",
                      line);
}

std::vector<Mode> parse_modes(std::string_view text, std::size_t line)
{
    std::vector<Mode> modes;
    for (std::string_view part : split_commas(text)) {
        if (part == "a") modes.push_back(Mode::a);
        else if (part == "b") modes.push_back(Mode::b);
        else throw ConfigError("modes must list a and/or b, got '" + std::string(part) + "'", line);
    }
    return modes;
}

// Fields written by each key; aliases cover a pair.
std::vector<std::string_view> fields_of(std::string_view name)
{
    if (name == "kappa_c") return {"kappa_a", "kappa_b"};
    if (name == "e") return {"e_l", "e_r"};
    return {name};
}

bool is_sweepable(std::string_view name)
{
    return SystemParams::is_field(name) && name != "kappa_m" && name != "unit_scale_mhz";
}

bool touches(const SweepAxis& axis, std::string_view field)
{
    const auto fields = fields_of(axis.name);
    return std::find(fields.begin(), fields.end(), field) != fields.end();
}

} // namespace

std::string_view to_string(Method method) noexcept
{
    switch (method) {
    case Method::analytic: return "analytic";
    case Method::master: return "master";
    case Method::both: return "both";
    }
    return "?";
}

std::string_view library_version() noexcept { return CHIRALPB_VERSION; }

double SweepAxis::value(std::size_t i) const
{
    if (count < 2) {
        return start;
    }
    if (i + 1 == count) {
        return stop;
    }
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    return start + (stop - start) * t;
}

std::size_t RunSpec::point_count() const
{
    std::size_t n = 1;
    for (const SweepAxis& axis : axes) {
        n *= axis.count;
    }
    return n;
}

void RunSpec::validate() const
{
    try {
        base.validate();
    } catch (const InvalidParameterError& e) {
        throw ConfigError(e.what());
    }
    if (axes.size() > 2) {
        throw ConfigError("at most two sweep axes are supported");
    }
    std::set<std::string_view> swept;
    for (const SweepAxis& axis : axes) {
        if (!is_sweepable(axis.name)) {
            throw ConfigError("cannot sweep unknown or fixed parameter '" + axis.name + "'");
        }
        if (axis.count < 2) {
            throw ConfigError("sweep over '" + axis.name + "' needs at least 2 points");
        }
        if (!std::isfinite(axis.start) || !std::isfinite(axis.stop)) {
            throw ConfigError("sweep over '" + axis.name + "' has a non-finite bound");
        }
        for (std::string_view field : fields_of(axis.name)) {
            if (!swept.insert(field).second) {
                throw ConfigError("parameter '" + std::string(field) + "' is swept twice");
            }
        }
        for (double v : {axis.start, axis.stop}) {
            SystemParams probe = base;
            probe.set(axis.name, v);
            try {
                probe.validate();
            } catch (const InvalidParameterError& e) {
                throw ConfigError("sweep over '" + axis.name + "': " + e.what());
            }
        }
    }
    if (modes.empty()) {
        throw ConfigError("modes must not be empty");
    }
    for (std::size_t i = 0; i < modes.size(); ++i) {
        if (modes[i] == Mode::m) {
            throw ConfigError("modes must list a and/or b");
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (modes[k] == modes[i]) {
                throw ConfigError("mode listed twice");
            }
        }
    }
    if (truncation != 2 && truncation != 3) {
        throw ConfigError("truncation must be 2 or 3");
    }
    if (use_optimal_phase && !use_optimal_drive) {
        throw ConfigError("use_optimal_phase requires use_optimal_drive");
    }
    for (const SweepAxis& axis : axes) {
        if (use_optimal_drive && (touches(axis, "e_l") || touches(axis, "e_r"))) {
            throw ConfigError("cannot sweep the drive amplitude with use_optimal_drive");
        }
        if (use_optimal_phase && axis.name == "phi") {
            throw ConfigError("cannot sweep phi with use_optimal_phase");
        }
    }
}

RunSpec RunSpec::normalized() const
{
    RunSpec out = *this;
    const double k = base.kappa_m;
    out.base = base.normalized();
    for (SweepAxis& axis : out.axes) {
        if (axis.name != "phi") {
            axis.start /= k;
            axis.stop /= k;
        }
    }
    return out;
}

SystemParams RunSpec::effective_params() const
{
    const SystemParams p = base.normalized();
    return reverse_field ? p.swapped_ab() : p;
}

RunSpec parse_config(std::string_view text)
{
    RunSpec spec;
    std::set<std::string> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;

    auto claim = [&](const std::string& key, std::size_t line) {
        if (!seen.insert(key).second) {
            throw ConfigError("duplicate key '" + key + "'", line);
        }
    };

    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("expected 'key = value'", line_no);
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("missing key", line_no);
        }
        if (value.empty()) {
            throw ConfigError("missing value for '" + key + "'", line_no);
        }

        if (SystemParams::is_field(key)) {
            for (std::string_view field : fields_of(key)) {
                claim(std::string(field), line_no);
            }
            spec.base.set(key, parse_number(value, line_no));
        } else if (key.starts_with("sweep.")) {
            const std::size_t index = parse_count(std::string_view(key).substr(6), line_no);
            if (index != spec.axes.size() + 1) {
                throw ConfigError("sweep axes must be numbered 1, 2 in order", line_no);
            }
            const auto parts = split_commas(value);
            if (parts.size() != 4) {
                throw ConfigError("sweep axis expects 'name, start, stop, count'", line_no);
            }
            SweepAxis axis;
            axis.name = std::string(parts[0]);
            if (!is_sweepable(axis.name)) {
                throw ConfigError("cannot sweep unknown or fixed parameter '" + axis.name + "'",
                                  line_no);
            }
            axis.start = parse_number(parts[1], line_no);
            axis.stop = parse_number(parts[2], line_no);
            axis.count = parse_count(parts[3], line_no);
            spec.axes.push_back(std::move(axis));
        } else if (key == "method") {
            claim(key, line_no);
            spec.method = parse_method(value, line_no);
        } else if (key == "modes") {
            claim(key, line_no);
            spec.modes = parse_modes(value, line_no);
        } else if (key == "use_optimal_drive") {
            claim(key, line_no);
            spec.use_optimal_drive = parse_bool(value, line_no);
        } else if (key == "use_optimal_phase") {
            claim(key, line_no);
            spec.use_optimal_phase = parse_bool(value, line_no);
        } else if (key == "reverse_field") {
            claim(key, line_no);
            spec.reverse_field = parse_bool(value, line_no);
        } else if (key == "truncation") {
            claim(key, line_no);
            spec.truncation = parse_count(value, line_no);
        } else if (key == "output") {
            claim(key, line_no);
            spec.output = std::string(value);
        } else {
            throw ConfigError("unknown key '" + key + "'", line_no);
        }
    }

    spec.validate();
    return spec;
}

RunSpec load_config(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string to_config(const RunSpec& spec)
{
    std::string out;
    auto put = [&](std::string_view key, std::string_view value) {
        out.append(key).append(" = ").append(value).push_back('\n');
    };
    for (std::string_view name : SystemParams::field_names()) {
        if (name == "kappa_c" || name == "e") {
            continue;
        }
        if (name == "unit_scale_mhz") {
            if (spec.base.unit_scale_mhz) {
                put(name, format_double(*spec.base.unit_scale_mhz));
            }
            continue;
        }
        put(name, format_double(spec.base.get(name)));
    }
    put("method", to_string(spec.method));
    std::string modes;
    for (Mode mode : spec.modes) {
        if (!modes.empty()) modes += ", ";
        modes += to_string(mode);
    }
    put("modes", modes);
    put("use_optimal_drive", spec.use_optimal_drive ? "true" : "false");
    put("use_optimal_phase", spec.use_optimal_phase ? "true" : "false");
    put("reverse_field", spec.reverse_field ? "true" : "false");
    put("truncation", std::to_string(spec.truncation));
    if (!spec.output.empty()) {
        put("output", spec.output);
    }
    for (std::size_t i = 0; i < spec.axes.size(); ++i) {
        const SweepAxis& axis = spec.axes[i];
        put("sweep." + std::to_string(i + 1), axis.name + ", " + format_double(axis.start) + ", " +
                                                  format_double(axis.stop) + ", " +
                                                  std::to_string(axis.count));
    }
    return out;
}

} // namespace chiralpb
