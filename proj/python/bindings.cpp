#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phtun/closedform.hpp"
#include "phtun/core.hpp"
#include "phtun/ensembles.hpp"
#include "phtun/figures.hpp"
#include "phtun/oracle.hpp"
#include "phtun/sweep.hpp"
#include "phtun/verify.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_phtun, m) {
    m.doc() = "Exact photon tunneling probabilities between two coupled modes";
    m.attr("__version__") = phtun::kVersion;

    py::register_exception<phtun::series_error>(m, "SeriesError");

    py::class_<phtun::TunnelingConfig>(m, "TunnelingConfig")
        .def(py::init<>())
        .def(py::init([](double gamma, double tau) {
                 return phtun::TunnelingConfig{gamma, tau};
             }),
             py::arg("gamma"), py::arg("tau"))
        .def_readwrite("gamma", &phtun::TunnelingConfig::gamma)
        .def_readwrite("tau", &phtun::TunnelingConfig::tau);

    py::class_<phtun::TransferMatrix>(m, "TransferMatrix")
        .def_readonly("u", &phtun::TransferMatrix::u)
        .def_readonly("v", &phtun::TransferMatrix::v);

    py::class_<phtun::TwoModeFockState>(m, "TwoModeFockState")
        .def_static("basis", &phtun::TwoModeFockState::basis, py::arg("photons_a"),
                    py::arg("photons_b"))
        .def_readonly("total_photons", &phtun::TwoModeFockState::total_photons)
        .def_readonly("amplitudes", &phtun::TwoModeFockState::amplitudes);

    m.def("q_factor", &phtun::q_factor, py::arg("config"));
    m.def("base_probability", &phtun::base_probability, py::arg("config"));
    m.def("transfer_matrix", &phtun::transfer_matrix, py::arg("config"));
    m.def("state_norm", &phtun::state_norm, py::arg("state"));
    m.def("evolve_fock", &phtun::evolve_fock, py::arg("state"), py::arg("transfer"),
          py::arg("sector_cap") = phtun::kDefaultSectorCap);
    m.def("outcome_probability", &phtun::outcome_probability, py::arg("state"),
          py::arg("transfer"), py::arg("photons_a_final"),
          py::arg("sector_cap") = phtun::kDefaultSectorCap);

    py::class_<phtun::SeriesPolicy>(m, "SeriesPolicy")
        .def(py::init<>())
        .def(py::init([](double rel_tol, long max_terms) {
                 return phtun::SeriesPolicy{rel_tol, max_terms};
             }),
             py::arg("rel_tol"), py::arg("max_terms"))
        .def_readwrite("rel_tol", &phtun::SeriesPolicy::rel_tol)
        .def_readwrite("max_terms", &phtun::SeriesPolicy::max_terms);

    py::class_<phtun::PeakPoint>(m, "PeakPoint")
        .def_readonly("p_star", &phtun::PeakPoint::p_star)
        .def_readonly("value", &phtun::PeakPoint::value);

    m.def("hyp1f1", &phtun::hyp1f1, py::arg("a"), py::arg("b"), py::arg("z"),
          py::arg("policy") = phtun::SeriesPolicy{});
    m.def("hyp2f1", &phtun::hyp2f1, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"),
          py::arg("policy") = phtun::SeriesPolicy{});
    m.def("prob_one_photon", &phtun::prob_one_photon, py::arg("n"), py::arg("p"));
    m.def("prob_multi", &phtun::prob_multi, py::arg("n2"), py::arg("n"), py::arg("p"));
    m.def("peak_multi", &phtun::peak_multi, py::arg("n2"), py::arg("n"));
    m.def("prob_coherent", &phtun::prob_coherent, py::arg("n2"), py::arg("nbar"), py::arg("p"),
          py::arg("policy") = phtun::SeriesPolicy{});
    m.def("prob_coherent_single_max", &phtun::prob_coherent_single_max, py::arg("nbar"));
    m.def("prob_squeezed", &phtun::prob_squeezed, py::arg("n2"), py::arg("nbar"), py::arg("p"),
          py::arg("policy") = phtun::SeriesPolicy{});

    py::enum_<phtun::DistributionKind>(m, "DistributionKind")
        .value("fock", phtun::DistributionKind::fock)
        .value("coherent", phtun::DistributionKind::coherent)
        .value("squeezed", phtun::DistributionKind::squeezed);

    py::class_<phtun::PhotonNumberDistribution>(m, "PhotonNumberDistribution")
        .def_readonly("kind", &phtun::PhotonNumberDistribution::kind)
        .def_readonly("mean", &phtun::PhotonNumberDistribution::mean)
        .def_readonly("weights", &phtun::PhotonNumberDistribution::weights);

    m.def("fock_pmf", &phtun::fock_pmf, py::arg("n"));
    m.def("coherent_pmf", &phtun::coherent_pmf, py::arg("nbar"),
          py::arg("trunc_tol") = phtun::kDefaultTruncTol);
    m.def("squeezed_pmf", &phtun::squeezed_pmf, py::arg("nbar"),
          py::arg("trunc_tol") = phtun::kDefaultTruncTol);
    m.def("weighted_sum", &phtun::weighted_sum, py::arg("distribution"), py::arg("n2"),
          py::arg("p"));

    m.def(
        "oracle_distribution",
        [](const phtun::TwoModeFockState& state, double gamma, double tau, int sector_cap) {
            const auto sector = phtun::build_sector(state.total_photons, gamma, sector_cap);
            return phtun::oracle_distribution(sector, state, tau);
        },
        py::arg("state"), py::arg("gamma"), py::arg("tau"),
        py::arg("sector_cap") = phtun::kDefaultSectorCap);

    py::class_<phtun::CheckResult>(m, "CheckResult")
        .def_readonly("name", &phtun::CheckResult::name)
        .def_readonly("max_deviation", &phtun::CheckResult::max_deviation)
        .def_readonly("tolerance", &phtun::CheckResult::tolerance)
        .def_readonly("passed", &phtun::CheckResult::passed)
        .def_readonly("worst_case", &phtun::CheckResult::worst_case);

    m.def(
        "run_verification",
        [](double tolerance_override) {
            phtun::VerifyOptions options;
            options.tolerance_override = tolerance_override;
            return phtun::run_verification(options);
        },
        py::arg("tolerance_override") = 0.0);
}
