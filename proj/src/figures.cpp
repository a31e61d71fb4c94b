#include "phtun/figures.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace phtun {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string meta_kv(const std::string& key, const std::string& value) {
    return key + ": " + value;
}

std::string meta_kv(const std::string& key, double value) {
    return meta_kv(key, format_double(value));
}

std::string joined_labels(const std::vector<Background>& backgrounds) {
    std::string joined;
    for (const auto& background : backgrounds) {
        if (!joined.empty()) {
            joined += ' ';
        }
        joined += background_label(background);
    }
    return joined.empty() ? "none" : joined;
}

void append_policy_meta(SweepResult& result, const SeriesPolicy& policy) {
    result.meta.push_back(meta_kv("rel-tol", policy.rel_tol));
    result.meta.push_back("max-terms: " + std::to_string(policy.max_terms));
}

}  // namespace

Background Background::fock(int n) {
    if (n < 0) {
        throw std::invalid_argument("photon number must be non-negative");
    }
    Background background;
    background.kind = DistributionKind::fock;
    background.n = n;
    return background;
}

Background Background::coherent(double nbar) {
    Background background;
    background.kind = DistributionKind::coherent;
    background.nbar = nbar;
    return background;
}

Background Background::squeezed(double nbar) {
    Background background;
    background.kind = DistributionKind::squeezed;
    background.nbar = nbar;
    return background;
}

std::string background_label(const Background& background) {
    switch (background.kind) {
        case DistributionKind::fock:
            return "fock_n" + std::to_string(background.n);
        case DistributionKind::coherent:
            return "coherent_nbar" + format_double(background.nbar);
        case DistributionKind::squeezed:
            return "squeezed_nbar" + format_double(background.nbar);
    }
    throw std::invalid_argument("unknown background kind");
}

double background_probability(const Background& background, int n2, double p,
                              const SeriesPolicy& policy) {
    switch (background.kind) {
        case DistributionKind::fock:
            return prob_multi(n2, background.n, p);
        case DistributionKind::coherent:
            return prob_coherent(n2, background.nbar, p, policy);
        case DistributionKind::squeezed:
            return prob_squeezed(n2, background.nbar, p, policy);
    }
    throw std::invalid_argument("unknown background kind");
}

SweepResult sweep_p(int n2, const std::vector<Background>& backgrounds, double p_min,
                    double p_max, int steps, const SeriesPolicy& policy) {
    if (!(p_min >= 0.0 && p_max <= 1.0 && p_min < p_max)) {
        throw std::invalid_argument("p grid must satisfy 0 <= p_min < p_max <= 1");
    }
    SweepResult result;
    result.meta.push_back(meta_kv("tool", std::string("phtun ") + kVersion));
    result.meta.push_back(meta_kv("generator", "sweep-p"));
    result.meta.push_back(meta_kv("n2", double(n2)));
    result.meta.push_back(meta_kv("backgrounds", joined_labels(backgrounds)));
    result.meta.push_back(meta_kv("p-min", p_min));
    result.meta.push_back(meta_kv("p-max", p_max));
    result.meta.push_back(meta_kv("steps", double(steps)));
    append_policy_meta(result, policy);

    result.x_label = "p";
    result.x = linspace(p_min, p_max, steps);
    result.series_labels.push_back("vacuum");
    for (const auto& background : backgrounds) {
        result.series_labels.push_back(background_label(background));
    }
    result.series.resize(result.series_labels.size());
    for (double p : result.x) {
        result.series[0].push_back(prob_multi(n2, 0, p));
        for (size_t j = 0; j < backgrounds.size(); ++j) {
            result.series[j + 1].push_back(background_probability(backgrounds[j], n2, p, policy));
        }
    }
    return result;
}

SweepResult sweep_time(double gamma, double tau_max, int steps, int n2,
                       const std::vector<Background>& backgrounds,
                       const SeriesPolicy& policy) {
    if (!(tau_max > 0.0)) {
        throw std::invalid_argument("tau_max must be positive");
    }
    const double q = q_factor({gamma, 0.0});
    SweepResult result;
    result.meta.push_back(meta_kv("tool", std::string("phtun ") + kVersion));
    result.meta.push_back(meta_kv("generator", "sweep-time"));
    result.meta.push_back(meta_kv("n2", double(n2)));
    result.meta.push_back(meta_kv("backgrounds", joined_labels(backgrounds)));
    result.meta.push_back(meta_kv("gamma", gamma));
    result.meta.push_back(meta_kv("tau-max", tau_max));
    result.meta.push_back(meta_kv("steps", double(steps)));
    append_policy_meta(result, policy);

    result.x_label = "q_tau_over_pi";
    const std::vector<double> taus = linspace(0.0, tau_max, steps);
    result.series_labels.push_back("vacuum");
    for (const auto& background : backgrounds) {
        result.series_labels.push_back(background_label(background));
    }
    result.series.resize(result.series_labels.size());
    result.x.reserve(taus.size());
    for (double tau : taus) {
        result.x.push_back(q * tau / kPi);
        const double p = base_probability({gamma, tau});
        result.series[0].push_back(prob_multi(n2, 0, p));
        for (size_t j = 0; j < backgrounds.size(); ++j) {
            result.series[j + 1].push_back(background_probability(backgrounds[j], n2, p, policy));
        }
    }
    return result;
}

namespace {

SweepResult time_panel(double gamma, int n2, const std::vector<Background>& backgrounds,
                       const FigureOptions& options) {
    const double q = std::sqrt(1.0 + gamma * gamma);
    const double tau_max = options.periods * kPi / q;
    const int steps = static_cast<int>(options.periods * options.steps_per_period);
    return sweep_time(gamma, tau_max, steps, n2, backgrounds, options.policy);
}

// fig3 interleaves per-n2 pairs, which sweep_p's fixed-n2 shape cannot hold.
SweepResult multi_n2_sweep(const std::vector<int>& n2_list, int n, const FigureOptions& options) {
    SweepResult result;
    result.meta.push_back(meta_kv("tool", std::string("phtun ") + kVersion));
    result.meta.push_back(meta_kv("generator", "sweep-p"));
    result.meta.push_back(meta_kv("background-n", double(n)));
    result.meta.push_back(meta_kv("steps", double(options.p_steps)));
    result.x_label = "p";
    result.x = linspace(0.0, 1.0, options.p_steps);
    for (int n2 : n2_list) {
        const std::string suffix = "_n2_" + std::to_string(n2);
        result.series_labels.push_back("fock_n" + std::to_string(n) + suffix);
        result.series_labels.push_back("vacuum" + suffix);
        std::vector<double> with_photons;
        std::vector<double> vacuum;
        with_photons.reserve(result.x.size());
        vacuum.reserve(result.x.size());
        for (double p : result.x) {
            with_photons.push_back(prob_multi(n2, n, p));
            vacuum.push_back(prob_multi(n2, 0, p));
        }
        result.series.push_back(std::move(with_photons));
        result.series.push_back(std::move(vacuum));
    }
    return result;
}

bool panel_selected(const FigureOptions& options, char panel) {
    return options.panels.empty() || options.panels.find(panel) != std::string::npos;
}

double panel_gamma(const FigureOptions& options, double fallback) {
    return options.gamma >= 0.0 ? options.gamma : fallback;
}

}  // namespace

std::vector<FigurePanel> make_figure(const std::string& name, const FigureOptions& options) {
    std::vector<FigurePanel> panels;
    const auto add = [&](const std::string& panel, SweepResult data) {
        data.meta.push_back(meta_kv("figure", panel.empty() ? name : name + " panel " + panel));
        panels.push_back({name, panel, std::move(data)});
    };

    if (name == "fig1") {
        if (panel_selected(options, 'a')) {
            add("a", sweep_p(1, {Background::fock(1)}, 0.0, 1.0, options.p_steps,
                             options.policy));
        }
        const double gammas[3] = {panel_gamma(options, 2.0), panel_gamma(options, 1.0),
                                  panel_gamma(options, 0.5)};
        const char letters[3] = {'b', 'c', 'd'};
        for (int i = 0; i < 3; ++i) {
            if (panel_selected(options, letters[i])) {
                add(std::string(1, letters[i]),
                    time_panel(gammas[i], 1, {Background::fock(1)}, options));
            }
        }
    } else if (name == "fig2") {
        std::vector<int> ns = options.fock_ns.empty() ? std::vector<int>{5, 10, 50}
                                                      : options.fock_ns;
        if (panel_selected(options, 'a')) {
            std::vector<Background> backgrounds;
            for (int n : ns) {
                backgrounds.push_back(Background::fock(n));
            }
            add("a", sweep_p(1, backgrounds, 0.0, 1.0, options.p_steps, options.policy));
        }
        const int n_time = options.fock_ns.empty() ? 50 : options.fock_ns.back();
        const double gammas[3] = {panel_gamma(options, std::sqrt(50.0)),
                                  panel_gamma(options, 5.0), panel_gamma(options, 0.5)};
        const char letters[3] = {'b', 'c', 'd'};
        for (int i = 0; i < 3; ++i) {
            if (panel_selected(options, letters[i])) {
                add(std::string(1, letters[i]),
                    time_panel(gammas[i], 1, {Background::fock(n_time)}, options));
            }
        }
    } else if (name == "fig3") {
        const std::vector<int> n2_list =
            options.fock_ns.empty() ? std::vector<int>{2, 3, 5, 10} : options.fock_ns;
        add("", multi_n2_sweep(n2_list, 10, options));
    } else if (name == "fig4") {
        const std::vector<double> default_a{10.0, 50.0};
        const std::vector<double> default_b{10.0};
        if (panel_selected(options, 'a')) {
            const auto& nbars = options.nbars.empty() ? default_a : options.nbars;
            std::vector<Background> backgrounds;
            for (double nbar : nbars) {
                backgrounds.push_back(Background::coherent(nbar));
                backgrounds.push_back(Background::fock(static_cast<int>(std::lround(nbar))));
            }
            backgrounds.push_back(Background::squeezed(nbars.front()));
            add("a", sweep_p(1, backgrounds, 0.0, 1.0, options.p_steps, options.policy));
        }
        if (panel_selected(options, 'b')) {
            const auto& nbars = options.nbars.empty() ? default_b : options.nbars;
            std::vector<Background> backgrounds;
            for (double nbar : nbars) {
                backgrounds.push_back(Background::coherent(nbar));
                backgrounds.push_back(Background::fock(static_cast<int>(std::lround(nbar))));
            }
            backgrounds.push_back(Background::squeezed(nbars.front()));
            add("b", sweep_p(10, backgrounds, 0.0, 1.0, options.p_steps, options.policy));
        }
    } else {
        throw std::invalid_argument("unknown figure '" + name + "' (expected fig1..fig4)");
    }

    if (panels.empty()) {
        throw std::invalid_argument("no panel of " + name + " matches '" + options.panels + "'");
    }
    return panels;
}

}  // namespace phtun
