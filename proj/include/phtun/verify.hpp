#ifndef PHTUN_VERIFY_HPP
#define PHTUN_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "phtun/closedform.hpp"

// Cross-path verification: closed forms vs the combinatorial engine vs the
// eigendecomposition oracle vs ensemble sums, plus the structural invariants
// (unitarity, normalization, periodicity, reversibility, spectrum symmetry).

namespace phtun {

struct CheckResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string worst_case;  // where the max deviation occurred
};

struct VerifyOptions {
    // > 0 replaces every per-check tolerance (useful to demonstrate the
    // failure report); <= 0 keeps the documented defaults.
    double tolerance_override = 0.0;
    SeriesPolicy policy{};
};

std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

// One aligned line per check: status, name, max deviation, tolerance, and
// the worst-case location.
void print_report(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace phtun

#endif  // PHTUN_VERIFY_HPP
