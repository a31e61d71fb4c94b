#ifndef PHTUN_FIGURES_HPP
#define PHTUN_FIGURES_HPP

#include <string>
#include <vector>

#include "phtun/closedform.hpp"
#include "phtun/ensembles.hpp"
#include "phtun/sweep.hpp"

// Sweep builders shared by the CLI and the test suites, plus the canned
// figure datasets (fig1..fig4).

namespace phtun {

// One background series request: a Fock state with n photons, or a
// coherent/squeezed field of mean photon number nbar, initially in mode B.
struct Background {
    DistributionKind kind = DistributionKind::fock;
    int n = 0;
    double nbar = 0.0;

    static Background fock(int n);
    static Background coherent(double nbar);
    static Background squeezed(double nbar);
};

std::string background_label(const Background& background);

// Full-transfer probability of n2 photons against this background at
// single-photon transfer probability p.
double background_probability(const Background& background, int n2, double p,
                              const SeriesPolicy& policy);

// Probability curves vs p. Every result carries the empty-mode baseline
// p^n2 as its first series, then one series per background.
SweepResult sweep_p(int n2, const std::vector<Background>& backgrounds, double p_min,
                    double p_max, int steps, const SeriesPolicy& policy = {});

// Probability curves vs scaled time, x = Q*tau/pi. Baseline series is the
// single-photon probability P(tau); each background series evaluates its
// closed form at p = P(tau).
SweepResult sweep_time(double gamma, double tau_max, int steps, int n2,
                       const std::vector<Background>& backgrounds,
                       const SeriesPolicy& policy = {});

struct FigurePanel {
    std::string figure;  // "fig1".."fig4"
    std::string panel;   // "a".."d", or "" for single-panel figures
    SweepResult data;
};

struct FigureOptions {
    std::string panels;             // subset of the figure's panels; empty = all
    int p_steps = 500;              // intervals for p sweeps
    int steps_per_period = 1000;    // intervals per period for time sweeps
    double periods = 2.0;           // time-sweep extent in units of pi/Q
    double gamma = -1.0;            // < 0: per-panel defaults
    std::vector<int> fock_ns;       // override Fock photon numbers
    std::vector<double> nbars;      // override coherent/squeezed means
    SeriesPolicy policy{};
};

// Canned datasets:
//   fig1: single photon vs one background photon; (a) vs p, (b)-(d) vs time
//         at gamma = 2, 1, 0.5.
//   fig2: single photon vs n background photons; (a) vs p for
//         n = 0, 5, 10, 50, (b)-(d) vs time with n = 50 at
//         gamma = sqrt(50), 5, 0.5.
//   fig3: multiphoton transfer, n2 = 2, 3, 5, 10 against 10 background
//         photons vs p, paired with the empty-mode p^n2 curves.
//   fig4: coherent vs Fock background; (a) n2 = 1 with mean 10 and 50
//         pairs plus squeezed mean 10, (b) n2 = 10 with mean 10 pair plus
//         squeezed mean 10.
// Throws std::invalid_argument for unknown figure names or panels.
std::vector<FigurePanel> make_figure(const std::string& name, const FigureOptions& options = {});

}  // namespace phtun

#endif  // PHTUN_FIGURES_HPP
