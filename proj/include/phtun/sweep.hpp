#ifndef PHTUN_SWEEP_HPP
#define PHTUN_SWEEP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "phtun/core.hpp"

// Tabulated sweep results and their CSV form: '#'-prefixed metadata lines,
// one header row naming the series, then data rows at full double precision
// (shortest round-trip formatting). Data rows are deterministic; anything
// run-dependent (timestamps) belongs in the metadata.

namespace phtun {

struct SweepResult {
    std::vector<std::string> meta;        // "key: value" lines, no '#' prefix
    std::string x_label;
    std::vector<std::string> series_labels;
    std::vector<double> x;                // ascending
    std::vector<std::vector<double>> series;  // series[j].size() == x.size()
};

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

void write_csv(std::ostream& out, const SweepResult& result);

// Inverse of write_csv; throws std::runtime_error on malformed input.
SweepResult parse_csv(std::istream& in);

// steps + 1 evenly spaced points with exact endpoints; steps >= 1.
std::vector<double> linspace(double lo, double hi, int steps);

// Conversion from physical waveguide parameters (coupling and detuning in
// 1/mm, propagation length in mm; length plays the role of time).
// Throws std::invalid_argument on nonpositive coupling or negative length.
TunnelingConfig physical_config(double coupling_per_mm, double detuning_per_mm,
                                double length_mm);

}  // namespace phtun

#endif  // PHTUN_SWEEP_HPP
