#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uavloc/channel.hpp"
#include "uavloc/errors.hpp"
#include "uavloc/experiment.hpp"
#include "uavloc/geometry.hpp"
#include "uavloc/localizability.hpp"
#include "uavloc/sinr.hpp"
#include "uavloc/version.hpp"

namespace py = pybind11;
using namespace uavloc;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Monte Carlo estimation of the localizability of cellular-connected UAVs";
    m.attr("__version__") = UAVLOC_VERSION;

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<Site>(m, "Site")
        .def_readonly("x_m", &Site::x_m)
        .def_readonly("y_m", &Site::y_m)
        .def_readonly("height_m", &Site::height_m)
        .def("__repr__", [](const Site& s) {
            return "Site(x_m=" + format_double(s.x_m) + ", y_m=" + format_double(s.y_m) +
                   ", height_m=" + format_double(s.height_m) + ")";
        });

    py::class_<NetworkLayout>(m, "NetworkLayout")
        .def_readonly("sites", &NetworkLayout::sites)
        .def_readonly("isd_m", &NetworkLayout::isd_m)
        .def_readonly("tiers", &NetworkLayout::tiers)
        .def("site_count", &NetworkLayout::site_count);

    m.def("build_hex_layout", &build_hex_layout, py::arg("isd_m"), py::arg("tiers"),
          py::arg("bs_height_m"),
          "Two-tier hexagonal deployment; 1, 7 or 19 sites for tiers 0, 1, 2.");

    py::class_<ChannelParams>(m, "ChannelParams")
        .def(py::init<>())
        .def_readwrite("fc_ghz", &ChannelParams::fc_ghz)
        .def_readwrite("los_shadow_a_db", &ChannelParams::los_shadow_a_db)
        .def_readwrite("los_shadow_b_per_m", &ChannelParams::los_shadow_b_per_m)
        .def_readwrite("nlos_shadow_std_db", &ChannelParams::nlos_shadow_std_db);

    m.def("los_probability", &los_probability, py::arg("d2d_m"), py::arg("h_ut_m"));
    m.def("path_loss_los_db", &path_loss_los_db, py::arg("d3d_m"), py::arg("fc_ghz"));
    m.def("path_loss_nlos_db", &path_loss_nlos_db, py::arg("d3d_m"), py::arg("h_ut_m"),
          py::arg("fc_ghz"));
    m.def("shadowing_std_db", &shadowing_std_db, py::arg("h_ut_m"), py::arg("los"),
          py::arg("params") = ChannelParams{});
    m.def("noise_power_dbm", &noise_power_dbm, py::arg("bandwidth_hz"),
          py::arg("noise_figure_db"));
    m.def("wilson_interval", &wilson_interval, py::arg("successes"), py::arg("n"),
          "95% Wilson score interval as a (low, high) pair.");

    py::class_<RadioParams>(m, "RadioParams")
        .def(py::init<>())
        .def_readwrite("tx_power_dbm", &RadioParams::tx_power_dbm)
        .def_readwrite("bandwidth_hz", &RadioParams::bandwidth_hz)
        .def_readwrite("noise_figure_db", &RadioParams::noise_figure_db)
        .def("noise_power_dbm", &RadioParams::noise_power_dbm);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("isd_m", &SimConfig::isd_m)
        .def_readwrite("tiers", &SimConfig::tiers)
        .def_readwrite("bs_height_m", &SimConfig::bs_height_m)
        .def_readwrite("channel", &SimConfig::channel)
        .def_readwrite("radio", &SimConfig::radio)
        .def_readwrite("h_ut_m", &SimConfig::h_ut_m)
        .def_readwrite("alpha_db", &SimConfig::alpha_db)
        .def_readwrite("beta_db", &SimConfig::beta_db)
        .def_readwrite("p", &SimConfig::p)
        .def_readwrite("q", &SimConfig::q)
        .def_readwrite("b_max", &SimConfig::b_max)
        .def_readwrite("n_snapshots", &SimConfig::n_snapshots)
        .def_readwrite("seed", &SimConfig::seed)
        .def("site_count", &SimConfig::site_count)
        .def("validate", &SimConfig::validate);

    py::class_<PbEstimate>(m, "PbEstimate")
        .def_readonly("pb", &PbEstimate::pb)
        .def_readonly("ci_low", &PbEstimate::ci_low)
        .def_readonly("ci_high", &PbEstimate::ci_high)
        .def_readonly("successes", &PbEstimate::successes)
        .def("half_width", &PbEstimate::half_width)
        .def("__repr__", [](const PbEstimate& e) {
            return "PbEstimate(pb=" + format_double(e.pb) + ", ci_low=" +
                   format_double(e.ci_low) + ", ci_high=" + format_double(e.ci_high) + ")";
        });

    py::class_<PbGrid>(m, "PbGrid")
        .def_readonly("alphas_db", &PbGrid::alphas_db)
        .def_readonly("b_values", &PbGrid::b_values)
        .def_readonly("at", &PbGrid::at)
        .def_readonly("n_snapshots", &PbGrid::n_snapshots)
        .def_readonly("seed", &PbGrid::seed);

    m.def(
        "estimate_pb",
        [](const SimConfig& cfg, const std::vector<int>& b_values, int workers) {
            return estimate_pb(cfg, b_values, workers);
        },
        py::arg("config"), py::arg("b_values"), py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>(),
        "P_B = Pr(psi >= B) at config.alpha_db for every requested B.");

    m.def(
        "estimate_pb_grid",
        [](const SimConfig& cfg, const std::vector<double>& alphas_db,
           const std::vector<int>& b_values, int workers) {
            return estimate_pb_grid(cfg, alphas_db, b_values, workers);
        },
        py::arg("config"), py::arg("alphas_db"), py::arg("b_values"), py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>(),
        "P_B over an (alpha, B) grid from one shared snapshot set.");

    py::class_<GainResult>(m, "GainResult")
        .def_readonly("found", &GainResult::found)
        .def_readonly("alpha_star_db", &GainResult::alpha_star_db)
        .def_readonly("gamma_db", &GainResult::gamma_db)
        .def_readonly("pb_low", &GainResult::pb_low)
        .def_readonly("pb_high", &GainResult::pb_high);

    m.def("required_processing_gain", &required_processing_gain, py::arg("config"),
          py::arg("beta_db"), py::arg("target_pb"), py::arg("b"), py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>(),
          "Processing gain (dB) needed to reach target_pb, via bisection on alpha.");
}
