#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "phtun/figures.hpp"
#include "phtun/sweep.hpp"
#include "phtun/verify.hpp"

// Exit codes: 0 success, 1 invariant/computation failure, 2 usage error.

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm parts{};
    gmtime_r(&now, &parts);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &parts);
    return buffer;
}

// Runtime metadata goes in front so data-generation metadata stays
// contiguous; the timestamp line is the only non-deterministic output.
void prepend_run_meta(phtun::SweepResult& result, const std::string& command_line) {
    std::vector<std::string> head{"command: " + command_line,
                                  "generated: " + utc_timestamp()};
    result.meta.insert(result.meta.begin(), head.begin(), head.end());
}

void emit(const phtun::SweepResult& result, const std::string& out_path) {
    if (out_path.empty()) {
        phtun::write_csv(std::cout, result);
        return;
    }
    std::ofstream file(out_path);
    if (!file) {
        throw std::runtime_error("cannot open output file '" + out_path + "'");
    }
    phtun::write_csv(file, result);
    if (!file.good()) {
        throw std::runtime_error("writing '" + out_path + "' failed");
    }
}

// fig2_b.csv style names when one --out has to hold several panels.
std::string panel_path(const std::string& out_path, const std::string& panel) {
    if (panel.empty()) {
        return out_path;
    }
    const size_t dot = out_path.find_last_of('.');
    const size_t slash = out_path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return out_path + "_" + panel;
    }
    return out_path.substr(0, dot) + "_" + panel + out_path.substr(dot);
}

struct CommonFlags {
    std::string out_path;
    double rel_tol = phtun::SeriesPolicy{}.rel_tol;
    long max_terms = phtun::SeriesPolicy{}.max_terms;
    unsigned long seed = 0;  // reserved; nothing is randomized yet

    phtun::SeriesPolicy policy() const { return {rel_tol, max_terms}; }
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--out", flags.out_path, "Output CSV path (default: stdout)");
    cmd->add_option("--tol", flags.rel_tol, "Relative tolerance for series evaluation");
    cmd->add_option("--max-terms", flags.max_terms, "Series term budget");
    cmd->add_option("--seed", flags.seed, "Reserved; no randomness in this version")
        ->group("");  // hidden
}

std::vector<phtun::Background> collect_backgrounds(const std::vector<int>& fock_ns,
                                                   const std::vector<double>& coherent_nbars,
                                                   const std::vector<double>& squeezed_nbars) {
    std::vector<phtun::Background> backgrounds;
    for (int n : fock_ns) {
        backgrounds.push_back(phtun::Background::fock(n));
    }
    for (double nbar : coherent_nbars) {
        backgrounds.push_back(phtun::Background::coherent(nbar));
    }
    for (double nbar : squeezed_nbars) {
        backgrounds.push_back(phtun::Background::squeezed(nbar));
    }
    return backgrounds;
}

}  // namespace

int main(int argc, char** argv) {
    std::string command_line;
    for (int i = 0; i < argc; ++i) {
        if (i) {
            command_line += ' ';
        }
        command_line += argv[i];
    }

    CLI::App app{"Exact photon tunneling probabilities between two coupled modes"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    // sweep-p
    auto* sweep_p_cmd = app.add_subcommand(
        "sweep-p", "Transfer probabilities vs the single-photon probability p");
    CommonFlags sweep_p_flags;
    int sp_n2 = 1;
    std::vector<int> sp_fock;
    std::vector<double> sp_coherent, sp_squeezed;
    double sp_pmin = 0.0, sp_pmax = 1.0;
    int sp_steps = 500;
    sweep_p_cmd->add_option("--n2", sp_n2, "Photons transferring out of mode A");
    sweep_p_cmd->add_option("--n", sp_fock, "Fock background photon number (repeatable)");
    sweep_p_cmd->add_option("--coherent", sp_coherent,
                            "Coherent background mean photon number (repeatable)");
    sweep_p_cmd->add_option("--squeezed", sp_squeezed,
                            "Squeezed background mean photon number (repeatable)");
    sweep_p_cmd->add_option("--p-min", sp_pmin, "Grid start");
    sweep_p_cmd->add_option("--p-max", sp_pmax, "Grid end");
    sweep_p_cmd->add_option("--steps", sp_steps, "Grid intervals (points = steps + 1)");
    add_common_flags(sweep_p_cmd, sweep_p_flags);

    // sweep-time
    auto* sweep_time_cmd = app.add_subcommand(
        "sweep-time", "Transfer probabilities vs scaled time (x axis: Q*tau/pi)");
    CommonFlags sweep_time_flags;
    int st_n2 = 1;
    std::vector<int> st_fock;
    std::vector<double> st_coherent, st_squeezed;
    double st_gamma = 0.0;
    double st_tau_max = 0.0;
    int st_steps = 0;
    sweep_time_cmd->add_option("--n2", st_n2, "Photons transferring out of mode A");
    sweep_time_cmd->add_option("--n", st_fock, "Fock background photon number (repeatable)");
    sweep_time_cmd->add_option("--coherent", st_coherent,
                               "Coherent background mean photon number (repeatable)");
    sweep_time_cmd->add_option("--squeezed", st_squeezed,
                               "Squeezed background mean photon number (repeatable)");
    sweep_time_cmd->add_option("--gamma", st_gamma, "Detuning-to-coupling ratio");
    sweep_time_cmd->add_option("--tau-max", st_tau_max,
                               "Scaled-time extent (default: two periods, 2*pi/Q)");
    sweep_time_cmd->add_option("--steps", st_steps,
                               "Grid intervals (default: 1000 per period)");
    add_common_flags(sweep_time_cmd, sweep_time_flags);

    // figure
    auto* figure_cmd =
        app.add_subcommand("figure", "Canned datasets fig1..fig4 (see README)");
    CommonFlags figure_flags;
    std::string figure_name;
    phtun::FigureOptions figure_options;
    double figure_gamma = -1.0;
    figure_cmd->add_option("name", figure_name, "One of fig1, fig2, fig3, fig4")->required();
    figure_cmd->add_option("--panel", figure_options.panels,
                           "Panel letters to emit, e.g. 'a' or 'bd' (default: all)");
    figure_cmd->add_option("--steps", figure_options.p_steps, "Intervals for p sweeps");
    figure_cmd->add_option("--gamma", figure_gamma, "Override gamma of the time panels");
    figure_cmd->add_option("--n", figure_options.fock_ns,
                           "Override Fock photon numbers (fig2: n list, fig3: n2 list)");
    figure_cmd->add_option("--nbar", figure_options.nbars,
                           "Override coherent/squeezed means (fig4)");
    add_common_flags(figure_cmd, figure_flags);

    // verify
    auto* verify_cmd = app.add_subcommand(
        "verify", "Cross-path verification suite; nonzero exit on any violation");
    double verify_tol = 0.0;
    long verify_max_terms = phtun::SeriesPolicy{}.max_terms;
    verify_cmd->add_option("--tol", verify_tol,
                           "Override every check tolerance (default: per-check values)");
    verify_cmd->add_option("--max-terms", verify_max_terms, "Series term budget");

    // physical
    auto* physical_cmd = app.add_subcommand(
        "physical", "Convert waveguide parameters to the dimensionless configuration");
    CommonFlags physical_flags;
    double coupling = 0.0, detuning = 0.0, length = 0.0;
    physical_cmd->add_option("--coupling", coupling, "Coupling strength in 1/mm")->required();
    physical_cmd->add_option("--detuning", detuning, "Detuning in 1/mm");
    physical_cmd->add_option("--length", length, "Propagation length in mm")->required();
    add_common_flags(physical_cmd, physical_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sweep_p_cmd->parsed()) {
            auto result = phtun::sweep_p(
                sp_n2, collect_backgrounds(sp_fock, sp_coherent, sp_squeezed), sp_pmin,
                sp_pmax, sp_steps, sweep_p_flags.policy());
            prepend_run_meta(result, command_line);
            emit(result, sweep_p_flags.out_path);
        } else if (sweep_time_cmd->parsed()) {
            const double q = std::sqrt(1.0 + st_gamma * st_gamma);
            const double period = kPi / q;
            const double tau_max = st_tau_max > 0.0 ? st_tau_max : 2.0 * period;
            const int steps =
                st_steps > 0 ? st_steps
                             : std::max(2, static_cast<int>(std::lround(1000.0 * tau_max / period)));
            auto result = phtun::sweep_time(
                st_gamma, tau_max, steps, st_n2,
                collect_backgrounds(st_fock, st_coherent, st_squeezed),
                sweep_time_flags.policy());
            prepend_run_meta(result, command_line);
            emit(result, sweep_time_flags.out_path);
        } else if (figure_cmd->parsed()) {
            figure_options.gamma = figure_gamma;
            figure_options.policy = figure_flags.policy();
            auto panels = phtun::make_figure(figure_name, figure_options);
            for (auto& panel : panels) {
                prepend_run_meta(panel.data, command_line);
                if (figure_flags.out_path.empty()) {
                    if (&panel != &panels.front()) {
                        std::cout << '\n';
                    }
                    phtun::write_csv(std::cout, panel.data);
                } else {
                    emit(panel.data,
                         panels.size() == 1 ? figure_flags.out_path
                                            : panel_path(figure_flags.out_path, panel.panel));
                }
            }
        } else if (verify_cmd->parsed()) {
            phtun::VerifyOptions options;
            options.tolerance_override = verify_tol;
            options.policy.max_terms = verify_max_terms;
            const auto results = phtun::run_verification(options);
            phtun::print_report(std::cout, results);
            if (!phtun::all_passed(results)) {
                std::cout << "verification FAILED\n";
                return 1;
            }
            std::cout << "verification passed\n";
        } else if (physical_cmd->parsed()) {
            const phtun::TunnelingConfig config = phtun::physical_config(coupling, detuning, length);
            phtun::SweepResult result;
            result.meta = {"tool: phtun " + std::string(phtun::kVersion),
                           "generator: physical",
                           "coupling-per-mm: " + phtun::format_double(coupling),
                           "detuning-per-mm: " + phtun::format_double(detuning),
                           "length-mm: " + phtun::format_double(length)};
            result.x_label = "gamma";
            result.series_labels = {"tau", "q", "p0", "p"};
            const double q = phtun::q_factor(config);
            result.x = {config.gamma};
            result.series = {{config.tau}, {q}, {1.0 / (q * q)}, {phtun::base_probability(config)}};
            prepend_run_meta(result, command_line);
            emit(result, physical_flags.out_path);
        }
    } catch (const phtun::series_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
