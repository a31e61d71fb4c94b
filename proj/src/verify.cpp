#include "phtun/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "phtun/core.hpp"
#include "phtun/ensembles.hpp"
#include "phtun/figures.hpp"
#include "phtun/oracle.hpp"
#include "phtun/sweep.hpp"

namespace phtun {

namespace {

constexpr double kPi = 3.14159265358979323846;

const std::vector<double> kGammaGrid{0.0, 0.5, 1.0, 2.0, 7.0710678118654755};  // last: sqrt(50)

// Accumulates the worst deviation seen and where it happened.
class Checker {
  public:
    Checker(std::string name, double tolerance)
        : result_{std::move(name), 0.0, tolerance, false, {}} {}

    void observe(double deviation, const std::string& where) {
        if (deviation > result_.max_deviation) {
            result_.max_deviation = deviation;
            result_.worst_case = where;
        }
    }

    CheckResult finish() {
        result_.passed = result_.max_deviation <= result_.tolerance;
        return result_;
    }

  private:
    CheckResult result_;
};

std::string at(std::initializer_list<std::pair<const char*, double>> kv) {
    std::string text;
    for (const auto& [key, value] : kv) {
        if (!text.empty()) {
            text += ' ';
        }
        text += key;
        text += '=';
        text += format_double(value);
    }
    return text;
}

CheckResult check_transfer_unitarity(double tol) {
    Checker checker("transfer_unitarity", tol);
    for (double gamma : kGammaGrid) {
        const double period = kPi / std::sqrt(1.0 + gamma * gamma);
        for (double tau : linspace(0.0, 2.0 * period, 101)) {
            const TransferMatrix m = transfer_matrix({gamma, tau});
            checker.observe(std::abs(std::norm(m.u) + std::norm(m.v) - 1.0),
                            at({{"gamma", gamma}, {"tau", tau}}));
        }
    }
    return checker.finish();
}

CheckResult check_transfer_vs_base_probability(double tol) {
    Checker checker("transfer_vs_base_p", tol);
    for (double gamma : kGammaGrid) {
        const double period = kPi / std::sqrt(1.0 + gamma * gamma);
        for (double tau : linspace(0.0, 2.0 * period, 101)) {
            const TunnelingConfig config{gamma, tau};
            checker.observe(std::abs(std::norm(transfer_matrix(config).v) -
                                     base_probability(config)),
                            at({{"gamma", gamma}, {"tau", tau}}));
        }
    }
    return checker.finish();
}

CheckResult check_periodicity(double tol) {
    Checker checker("base_p_periodicity", tol);
    for (double gamma : kGammaGrid) {
        const double period = kPi / std::sqrt(1.0 + gamma * gamma);
        for (double tau : linspace(0.0, 3.0 * period, 61)) {
            checker.observe(std::abs(base_probability({gamma, tau + period}) -
                                     base_probability({gamma, tau})),
                            at({{"gamma", gamma}, {"tau", tau}}));
        }
    }
    return checker.finish();
}

const std::vector<int>& norm_check_sectors() {
    static const std::vector<int> sectors{1, 2, 3, 5, 8, 13, 21, 34, 48, 60};
    return sectors;
}

TwoModeFockState uniform_state(int total) {
    TwoModeFockState state;
    state.total_photons = total;
    const double amp = 1.0 / std::sqrt(double(total + 1));
    state.amplitudes.assign(total + 1, {amp, 0.0});
    return state;
}

CheckResult check_evolve_normalization(double tol) {
    Checker checker("evolve_normalization", tol);
    for (int total : norm_check_sectors()) {
        for (double gamma : {0.0, 0.5, 2.0}) {
            const double period = kPi / std::sqrt(1.0 + gamma * gamma);
            for (double tau : linspace(period / 8.0, period, 8)) {
                const TransferMatrix m = transfer_matrix({gamma, tau});
                for (int n = 0; n <= total; ++n) {
                    const auto evolved = evolve_fock(TwoModeFockState::basis(n, total - n), m);
                    checker.observe(
                        std::abs(state_norm(evolved) - 1.0),
                        at({{"N", double(total)}, {"n", double(n)}, {"gamma", gamma},
                            {"tau", tau}}));
                }
                const auto evolved = evolve_fock(uniform_state(total), m);
                checker.observe(std::abs(state_norm(evolved) - 1.0),
                                at({{"N", double(total)}, {"gamma", gamma}, {"tau", tau}}));
            }
        }
    }
    return checker.finish();
}

CheckResult check_reversibility(double tol) {
    Checker checker("evolve_reversibility", tol);
    for (int total : {1, 2, 5, 13, 34, 60}) {
        for (double gamma : {0.0, 0.5, 2.0}) {
            const double period = kPi / std::sqrt(1.0 + gamma * gamma);
            for (double tau : linspace(period / 8.0, period, 8)) {
                const TransferMatrix forward = transfer_matrix({gamma, tau});
                const TransferMatrix backward{std::conj(forward.u), std::conj(forward.v)};
                const auto initial = uniform_state(total);
                const auto round_trip = evolve_fock(evolve_fock(initial, forward), backward);
                double worst = 0.0;
                for (int k = 0; k <= total; ++k) {
                    worst = std::max(worst, std::abs(round_trip.amplitudes[k] -
                                                     initial.amplitudes[k]));
                }
                checker.observe(worst,
                                at({{"N", double(total)}, {"gamma", gamma}, {"tau", tau}}));
            }
        }
    }
    return checker.finish();
}

CheckResult check_multi_vs_oracle(double tol) {
    Checker checker("multi_vs_oracle", tol);
    for (double gamma : kGammaGrid) {
        const double period = kPi / std::sqrt(1.0 + gamma * gamma);
        for (int n2 = 1; n2 <= 5; ++n2) {
            for (int n = 0; n <= 10; ++n) {
                const auto eig = diagonalize(build_sector(n2 + n, gamma));
                const auto initial = TwoModeFockState::basis(n2, n);
                for (int j = 0; j <= 20; ++j) {
                    const double tau = period * j / 20.0;
                    const auto evolved = apply_propagator(eig, initial, tau);
                    const double oracle_p = std::norm(evolved.amplitudes[0]);
                    const double closed = prob_multi(n2, n, base_probability({gamma, tau}));
                    checker.observe(std::abs(closed - oracle_p),
                                    at({{"n2", double(n2)}, {"n", double(n)},
                                        {"gamma", gamma}, {"tau", tau}}));
                }
            }
        }
    }
    return checker.finish();
}

CheckResult check_evolve_vs_oracle(double tol) {
    Checker checker("evolve_vs_oracle", tol);
    const std::vector<int> sectors{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 20, 25, 30, 35, 40};
    for (int total : sectors) {
        for (double gamma : {0.0, 0.5, 2.0}) {
            const double period = kPi / std::sqrt(1.0 + gamma * gamma);
            const auto eig = diagonalize(build_sector(total, gamma));
            for (int j = 1; j <= 20; ++j) {
                const double tau = period * j / 20.0;
                const TransferMatrix m = transfer_matrix({gamma, tau});
                for (int n = 0; n <= total; ++n) {
                    const auto initial = TwoModeFockState::basis(n, total - n);
                    const auto direct = evolve_fock(initial, m);
                    const auto reference = apply_propagator(eig, initial, tau);
                    for (int k = 0; k <= total; ++k) {
                        checker.observe(std::abs(std::norm(direct.amplitudes[k]) -
                                                 std::norm(reference.amplitudes[k])),
                                        at({{"N", double(total)}, {"n", double(n)},
                                            {"k", double(k)}, {"gamma", gamma},
                                            {"tau", tau}}));
                    }
                }
            }
        }
    }
    return checker.finish();
}

CheckResult check_energy_conservation(double tol) {
    Checker checker("energy_conservation", tol);
    for (int total : {1, 3, 10, 25, 40}) {
        for (double gamma : {0.0, 0.5, 2.0}) {
            const auto h = build_sector(total, gamma);
            const auto eig = diagonalize(h);
            const auto initial = uniform_state(total);
            const double initial_energy = sector_energy(h, initial);
            const double period = kPi / std::sqrt(1.0 + gamma * gamma);
            for (double tau : linspace(0.0, 5.0 * period, 25)) {
                const auto evolved = apply_propagator(eig, initial, tau);
                checker.observe(std::abs(sector_energy(h, evolved) - initial_energy),
                                at({{"N", double(total)}, {"gamma", gamma}, {"tau", tau}}));
            }
        }
    }
    return checker.finish();
}

CheckResult check_long_time_norm(double tol) {
    Checker checker("long_time_norm", tol);
    for (int total : {1, 10, 40}) {
        for (double gamma : {0.0, 2.0}) {
            const double period = kPi / std::sqrt(1.0 + gamma * gamma);
            const auto eig = diagonalize(build_sector(total, gamma));
            const auto initial = uniform_state(total);
            for (double tau : {10.0 * period, 50.0 * period, 100.0 * period}) {
                checker.observe(std::abs(state_norm(apply_propagator(eig, initial, tau)) - 1.0),
                                at({{"N", double(total)}, {"gamma", gamma}, {"tau", tau}}));
                const auto direct = evolve_fock(initial, transfer_matrix({gamma, tau}));
                checker.observe(std::abs(state_norm(direct) - 1.0),
                                at({{"N", double(total)}, {"gamma", gamma}, {"tau", tau}}));
            }
        }
    }
    return checker.finish();
}

CheckResult check_spectrum_symmetry(double tol) {
    Checker checker("spectrum_symmetry", tol);
    for (int total : {1, 2, 3, 5, 10, 20, 40}) {
        for (double gamma : kGammaGrid) {
            const auto eig = diagonalize(build_sector(total, gamma));
            const int dim = total + 1;
            for (int j = 0; j < dim; ++j) {
                checker.observe(std::abs(eig.eigenvalues[j] + eig.eigenvalues[dim - 1 - j]),
                                at({{"N", double(total)}, {"gamma", gamma}, {"j", double(j)}}));
            }
        }
    }
    return checker.finish();
}

CheckResult check_series_identities(double tol, const SeriesPolicy& policy) {
    Checker checker("series_identities", tol);
    for (double z : linspace(0.0, 30.0, 30)) {
        checker.observe(std::abs(hyp1f1(1.0, 1.0, z, policy) / std::exp(z) - 1.0),
                        at({{"z", z}}) + " [1F1(1,1,z) vs exp]");
        checker.observe(
            std::abs(hyp1f1(2.0, 1.0, z, policy) / ((1.0 + z) * std::exp(z)) - 1.0),
            at({{"z", z}}) + " [1F1(2,1,z) vs (1+z)exp]");
    }
    for (double z : linspace(0.0, 0.95, 19)) {
        checker.observe(std::abs(hyp2f1(1.0, 1.0, 1.0, z, policy) * (1.0 - z) - 1.0),
                        at({{"z", z}}) + " [2F1(1,1,1,z) vs geometric]");
        checker.observe(std::abs(hyp2f1(0.5, 1.0, 1.0, z, policy) * std::sqrt(1.0 - z) - 1.0),
                        at({{"z", z}}) + " [2F1(1/2,1,1,z) vs binomial]");
    }
    return checker.finish();
}

CheckResult check_coherent_closure(double tol, const SeriesPolicy& policy) {
    Checker checker("coherent_closure", tol);
    for (double nbar : {0.1, 1.0, 10.0, 50.0}) {
        const auto pmf = coherent_pmf(nbar);
        for (int n2 : {1, 2, 5, 10}) {
            for (double p : linspace(0.0, 1.0, 100)) {
                checker.observe(std::abs(prob_coherent(n2, nbar, p, policy) -
                                         weighted_sum(pmf, n2, p)),
                                at({{"nbar", nbar}, {"n2", double(n2)}, {"p", p}}));
            }
        }
    }
    return checker.finish();
}

CheckResult check_squeezed_closure(double tol, const SeriesPolicy& policy) {
    Checker checker("squeezed_closure", tol);
    for (double nbar : {0.5, 10.0, 50.0}) {
        const auto pmf = squeezed_pmf(nbar);
        for (int n2 : {1, 2, 10}) {
            for (double p : linspace(0.0, 1.0, 100)) {
                checker.observe(std::abs(prob_squeezed(n2, nbar, p, policy) -
                                         weighted_sum(pmf, n2, p)),
                                at({{"nbar", nbar}, {"n2", double(n2)}, {"p", p}}));
            }
        }
    }
    return checker.finish();
}

CheckResult check_coherent_single_identity(double tol, const SeriesPolicy& policy) {
    Checker checker("coherent_n2_1_identity", tol);
    for (double nbar : {0.0, 0.5, 1.0, 5.0, 10.0, 25.0, 50.0, 100.0}) {
        for (double p : linspace(0.0, 1.0, 100)) {
            const double explicit_form = std::exp(-nbar * p) * (1.0 + nbar * (1.0 - p)) * p;
            checker.observe(std::abs(prob_coherent(1, nbar, p, policy) - explicit_form),
                            at({{"nbar", nbar}, {"p", p}}));
        }
    }
    return checker.finish();
}

CheckResult check_pmf_normalization(double tol) {
    Checker checker("pmf_normalization", tol);
    for (double nbar : {0.0, 0.1, 1.0, 10.0, 50.0, 100.0}) {
        for (bool squeezed : {false, true}) {
            const auto pmf = squeezed ? squeezed_pmf(nbar) : coherent_pmf(nbar);
            double total_weight = 0.0;
            for (const auto& [n, w] : pmf.weights) {
                total_weight += w;
            }
            checker.observe(std::abs(total_weight - 1.0),
                            at({{"nbar", nbar}}) + (squeezed ? " [squeezed]" : " [coherent]"));
        }
    }
    return checker.finish();
}

CheckResult check_pmf_mean(double tol) {
    Checker checker("pmf_mean", tol);
    for (double nbar : {0.0, 0.1, 1.0, 10.0, 50.0, 100.0}) {
        for (bool squeezed : {false, true}) {
            const auto pmf = squeezed ? squeezed_pmf(nbar) : coherent_pmf(nbar);
            double mean = 0.0;
            for (const auto& [n, w] : pmf.weights) {
                mean += n * w;
            }
            checker.observe(std::abs(mean - pmf.mean) / (1.0 + pmf.mean),
                            at({{"nbar", nbar}}) + (squeezed ? " [squeezed]" : " [coherent]"));
        }
    }
    return checker.finish();
}

CheckResult check_peak_dominance(double tol) {
    Checker checker("peak_dominance", tol);
    for (int n2 = 1; n2 <= 10; ++n2) {
        for (int n : {0, 1, 2, 5, 10, 20, 35, 50}) {
            const PeakPoint peak = peak_multi(n2, n);
            checker.observe(std::abs(peak.value - prob_multi(n2, n, peak.p_star)),
                            at({{"n2", double(n2)}, {"n", double(n)}}) + " [value at p*]");
            for (double p : linspace(0.0, 1.0, 2000)) {
                const double excess = prob_multi(n2, n, p) - peak.value;
                if (excess > 0.0) {
                    checker.observe(excess,
                                    at({{"n2", double(n2)}, {"n", double(n)}, {"p", p}}));
                }
            }
        }
    }
    return checker.finish();
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    const auto tol = [&](double fallback) {
        return options.tolerance_override > 0.0 ? options.tolerance_override : fallback;
    };
    const SeriesPolicy& policy = options.policy;

    std::vector<CheckResult> results;
    results.push_back(check_transfer_unitarity(tol(1e-12)));
    results.push_back(check_transfer_vs_base_probability(tol(1e-14)));
    results.push_back(check_periodicity(tol(1e-12)));
    results.push_back(check_evolve_normalization(tol(1e-10)));
    results.push_back(check_reversibility(tol(1e-9)));
    results.push_back(check_multi_vs_oracle(tol(1e-9)));
    results.push_back(check_evolve_vs_oracle(tol(1e-9)));
    results.push_back(check_energy_conservation(tol(1e-9)));
    results.push_back(check_long_time_norm(tol(1e-10)));
    results.push_back(check_spectrum_symmetry(tol(1e-10)));
    // The stopping rule leaves a geometric tail of order rel_tol * z / (1 - z),
    // a factor 20 at the z = 0.95 edge of the identity grid.
    results.push_back(check_series_identities(tol(policy.rel_tol * 100.0), policy));
    results.push_back(check_coherent_closure(tol(1e-10), policy));
    results.push_back(check_squeezed_closure(tol(1e-8), policy));
    results.push_back(check_coherent_single_identity(tol(1e-12), policy));
    results.push_back(check_pmf_normalization(tol(1e-10)));
    results.push_back(check_pmf_mean(tol(1e-6)));
    results.push_back(check_peak_dominance(tol(1e-12)));
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

void print_report(std::ostream& out, const std::vector<CheckResult>& results) {
    for (const auto& result : results) {
        out << (result.passed ? "[PASS] " : "[FAIL] ") << std::left << std::setw(24)
            << result.name << " max_dev=" << format_double(result.max_deviation)
            << " tol=" << format_double(result.tolerance);
        if (!result.passed && !result.worst_case.empty()) {
            out << "  worst at " << result.worst_case;
        }
        out << '\n';
    }
}

}  // namespace phtun
