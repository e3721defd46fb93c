#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mollowsim/core.hpp"
#include "mollowsim/dynamics.hpp"
#include "mollowsim/observables.hpp"
#include "mollowsim/oracle.hpp"
#include "mollowsim/reservoir.hpp"

namespace py = pybind11;
using namespace mollowsim;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spatial interference of strongly driven two-level emitters in "
              "a structured electromagnetic reservoir";

    py::enum_<BandId>(m, "BandId")
        .value("CB", BandId::CB)
        .value("LB", BandId::LB)
        .value("RB", BandId::RB);

    py::enum_<CouplingModel>(m, "CouplingModel")
        .value("Off", CouplingModel::Off)
        .value("ScalarSinc", CouplingModel::ScalarSinc);

    py::enum_<PhotonStatistics>(m, "PhotonStatistics")
        .value("SubPoissonian", PhotonStatistics::SubPoissonian)
        .value("Poissonian", PhotonStatistics::Poissonian)
        .value("SuperPoissonian", PhotonStatistics::SuperPoissonian);

    py::class_<DriveParams>(m, "DriveParams")
        .def(py::init<double, double, double>(), py::arg("rabi"),
             py::arg("detuning") = 0.0, py::arg("carrier") = 1e8)
        .def_readwrite("rabi", &DriveParams::rabi)
        .def_readwrite("detuning", &DriveParams::detuning)
        .def_readwrite("carrier", &DriveParams::carrier);

    py::class_<DressedFrame>(m, "DressedFrame")
        .def_readonly("theta", &DressedFrame::theta)
        .def_readonly("tilde_omega", &DressedFrame::tilde_omega)
        .def_readonly("omega_plus", &DressedFrame::omega_plus)
        .def_readonly("omega_minus", &DressedFrame::omega_minus)
        .def_property_readonly("carrier", &DressedFrame::carrier);

    py::class_<Geometry>(m, "Geometry")
        .def(py::init<double, int, double, double>(), py::arg("k_r"),
             py::arg("n_atoms") = 2, py::arg("alpha_1") = pi / 2,
             py::arg("alpha_2") = pi / 2)
        .def_readwrite("k_r", &Geometry::k_r)
        .def_readwrite("n_atoms", &Geometry::n_atoms)
        .def_readwrite("alpha_1", &Geometry::alpha_1)
        .def_readwrite("alpha_2", &Geometry::alpha_2);

    py::class_<BlochState>(m, "BlochState")
        .def(py::init<double, double, double>(), py::arg("x") = 0.0,
             py::arg("y") = 0.0, py::arg("z") = 0.0)
        .def_readwrite("x", &BlochState::x)
        .def_readwrite("y", &BlochState::y)
        .def_readwrite("z", &BlochState::z)
        .def("__repr__", [](const BlochState& s) {
            return "BlochState(x=" + std::to_string(s.x) +
                   ", y=" + std::to_string(s.y) +
                   ", z=" + std::to_string(s.z) + ")";
        });

    py::class_<CollectivePopulations>(m, "CollectivePopulations")
        .def(py::init<double, double, double, double>(), py::arg("ee"),
             py::arg("ss"), py::arg("aa"), py::arg("gg"))
        .def_readwrite("ee", &CollectivePopulations::ee)
        .def_readwrite("ss", &CollectivePopulations::ss)
        .def_readwrite("aa", &CollectivePopulations::aa)
        .def_readwrite("gg", &CollectivePopulations::gg);

    py::class_<ReservoirProfile>(m, "ReservoirProfile")
        .def_static("flat", &ReservoirProfile::flat, py::arg("gamma0") = 1.0)
        .def_static("lorentzian_cavity", &ReservoirProfile::lorentzian_cavity,
                    py::arg("gamma0"), py::arg("coupling"), py::arg("center"),
                    py::arg("width"))
        .def_static("band_gap_step", &ReservoirProfile::band_gap_step,
                    py::arg("gamma_low"), py::arg("gamma_high"),
                    py::arg("edge"))
        .def_static("tabulated", &ReservoirProfile::tabulated,
                    py::arg("omega"), py::arg("gamma"))
        .def("gamma_at", &ReservoirProfile::gamma_at, py::arg("omega"));

    py::class_<CollectiveCoupling>(m, "CollectiveCoupling")
        .def_readonly("chi", &CollectiveCoupling::chi)
        .def_readonly("omega_shift", &CollectiveCoupling::omega_shift);

    py::class_<BlochCoefficients>(m, "BlochCoefficients")
        .def_readonly("xi_plus", &BlochCoefficients::xi_plus)
        .def_readonly("xi_minus", &BlochCoefficients::xi_minus)
        .def_readonly("zeta_plus", &BlochCoefficients::zeta_plus)
        .def_readonly("zeta_minus", &BlochCoefficients::zeta_minus)
        .def_readonly("c0", &BlochCoefficients::c0);

    py::class_<ValidityReport>(m, "ValidityReport")
        .def_readonly("strong_field_ok", &ValidityReport::strong_field_ok)
        .def_readonly("dipole_dipole_warning",
                      &ValidityReport::dipole_dipole_warning)
        .def_readonly("ratios", &ValidityReport::ratios);

    py::class_<VisibilitySet>(m, "VisibilitySet")
        .def_readonly("cb", &VisibilitySet::cb)
        .def_readonly("lb", &VisibilitySet::lb)
        .def_readonly("rb", &VisibilitySet::rb);

    py::class_<oracle::FringeScan>(m, "FringeScan")
        .def_readonly("i_max", &oracle::FringeScan::i_max)
        .def_readonly("i_min", &oracle::FringeScan::i_min)
        .def_readonly("arg_max", &oracle::FringeScan::arg_max)
        .def_readonly("arg_min", &oracle::FringeScan::arg_min)
        .def_readonly("visibility", &oracle::FringeScan::visibility);

    m.def("dressed_frame", &dressed_frame, py::arg("drive"));
    m.def("band_frequency", &band_frequency, py::arg("frame"),
          py::arg("band"));
    m.def("detection_phase", &detection_phase, py::arg("geometry"),
          py::arg("band"), py::arg("frame"), py::arg("detector"));
    m.def("detection_phase_at", &detection_phase_at, py::arg("geometry"),
          py::arg("band"), py::arg("frame"), py::arg("alpha"));
    m.def("populations_from_xyz", &populations_from_xyz, py::arg("state"));
    m.def("xyz_from_populations", &xyz_from_populations, py::arg("pops"));

    m.def("eta", &eta, py::arg("profile"), py::arg("frame"));
    m.def("collective_chi", &collective_chi, py::arg("model"),
          py::arg("omega"), py::arg("k_r"), py::arg("carrier"));

    m.def("coefficients", &coefficients, py::arg("frame"), py::arg("profile"),
          py::arg("coupling"), py::arg("geometry"));
    m.def("coefficients_from_rates", &coefficients_from_rates,
          py::arg("gamma_minus"), py::arg("gamma_plus"),
          py::arg("gamma_center"), py::arg("chi_minus"), py::arg("chi_plus"),
          py::arg("chi_center"), py::arg("theta"));
    m.def("default_step", &default_step, py::arg("coeffs"));
    m.def(
        "evolve",
        [](const BlochState& s, const BlochCoefficients& c, double t,
           double dt) { return dt > 0.0 ? evolve(s, c, t, dt) : evolve(s, c, t); },
        py::arg("state0"), py::arg("coeffs"), py::arg("t"), py::arg("dt") = 0.0);
    m.def("steady_state", &steady_state, py::arg("coeffs"));
    m.def("steady_state_closed_form", &steady_state_closed_form,
          py::arg("coeffs"));
    m.def("validity_check", &validity_check, py::arg("frame"),
          py::arg("profile"), py::arg("coupling"), py::arg("geometry"),
          py::arg("threshold") = 50.0);

    m.def("band_intensity_two_atom", &band_intensity_two_atom, py::arg("band"),
          py::arg("pops"), py::arg("frame"), py::arg("geometry"),
          py::arg("alpha"));
    m.def("visibilities", &visibilities, py::arg("pops"));
    m.def("eta_visibility_closed_form", &eta_visibility_closed_form,
          py::arg("eta"));
    m.def("g2_band", &g2_band, py::arg("band"), py::arg("pops"),
          py::arg("vis"), py::arg("delta1"), py::arg("delta2"));
    m.def("g2_weak_field", &g2_weak_field, py::arg("omega_over_gamma"),
          py::arg("delta"));
    m.def("array_factor", &array_factor, py::arg("n_atoms"), py::arg("delta"));
    m.def("chain_intensity", &chain_intensity, py::arg("n_atoms"),
          py::arg("z"), py::arg("delta"));
    m.def("photon_statistics_class", &photon_statistics_class,
          py::arg("g2_value"));

    m.def("expm_propagate", &oracle::expm_propagate, py::arg("state0"),
          py::arg("coeffs"), py::arg("t"));
    m.def("brute_force_chain", &oracle::brute_force_chain, py::arg("n_atoms"),
          py::arg("z"), py::arg("delta"));
    m.def("fringe_scan", &oracle::fringe_scan, py::arg("curve"),
          py::arg("grid") = 4096, py::arg("lo") = 0.0, py::arg("hi") = pi);

#ifdef MOLLOWSIM_VERSION
    m.attr("__version__") = MOLLOWSIM_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
