#include "phtun/sweep.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace phtun {

std::string format_double(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (result.ec != std::errc()) {
        throw std::runtime_error("double formatting failed");
    }
    return std::string(buffer, result.ptr);
}

namespace {

double parse_double(std::string_view text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc() || result.ptr != end) {
        throw std::runtime_error("malformed number in CSV: '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string> split_comma(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

}  // namespace

void write_csv(std::ostream& out, const SweepResult& result) {
    for (const auto& line : result.meta) {
        out << "# " << line << '\n';
    }
    out << result.x_label;
    for (const auto& label : result.series_labels) {
        out << ',' << label;
    }
    out << '\n';
    for (size_t row = 0; row < result.x.size(); ++row) {
        out << format_double(result.x[row]);
        for (const auto& series : result.series) {
            out << ',' << format_double(series[row]);
        }
        out << '\n';
    }
}

SweepResult parse_csv(std::istream& in) {
    SweepResult result;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            size_t start = 1;
            if (start < line.size() && line[start] == ' ') {
                ++start;
            }
            result.meta.push_back(line.substr(start));
            continue;
        }
        const auto fields = split_comma(line);
        if (fields.empty()) {
            continue;
        }
        if (!have_header) {
            result.x_label = fields.front();
            result.series_labels.assign(fields.begin() + 1, fields.end());
            result.series.resize(result.series_labels.size());
            have_header = true;
            continue;
        }
        if (fields.size() != result.series_labels.size() + 1) {
            throw std::runtime_error("CSV row has wrong field count");
        }
        result.x.push_back(parse_double(fields.front()));
        for (size_t j = 0; j < result.series.size(); ++j) {
            result.series[j].push_back(parse_double(fields[j + 1]));
        }
    }
    if (!have_header) {
        throw std::runtime_error("CSV input has no header row");
    }
    return result;
}

std::vector<double> linspace(double lo, double hi, int steps) {
    if (steps < 1 || !(hi > lo)) {
        throw std::invalid_argument("grid needs steps >= 1 and hi > lo");
    }
    std::vector<double> points(steps + 1);
    for (int i = 0; i <= steps; ++i) {
        points[i] = lo + (hi - lo) * i / steps;
    }
    points.front() = lo;
    points.back() = hi;  // exact endpoints regardless of rounding
    return points;
}

TunnelingConfig physical_config(double coupling_per_mm, double detuning_per_mm,
                                double length_mm) {
    if (!(coupling_per_mm > 0.0)) {
        throw std::invalid_argument("coupling must be positive");
    }
    if (length_mm < 0.0) {
        throw std::invalid_argument("length must be non-negative");
    }
    return {detuning_per_mm / coupling_per_mm, coupling_per_mm * length_mm};
}

}  // namespace phtun
