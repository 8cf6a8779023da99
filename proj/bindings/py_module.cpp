#include <limits>
#include <optional>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ris/commands.hpp"
#include "ris/config.hpp"
#include "ris/controller.hpp"
#include "ris/core.hpp"
#include "ris/fields.hpp"
#include "ris/link.hpp"
#include "ris/switch_model.hpp"
#include "ris/synthesis.hpp"
#include "ris/unitcell.hpp"

namespace py = pybind11;

PYBIND11_MODULE(riskit, m) {
    m.doc() = "1-bit column-biased reflective surface design toolkit";

    py::register_exception<ris::ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ris::DomainError>(m, "DomainError", PyExc_ValueError);

    m.attr("C0") = ris::c0;

    // --- core ---------------------------------------------------------
    m.def("wavenumber", &ris::wavenumber, py::arg("f_hz"));
    m.def("wavelength", &ris::wavelength, py::arg("f_hz"));

    py::class_<ris::Vec3>(m, "Vec3")
        .def(py::init([](double x, double y, double z) {
                 return ris::Vec3{x, y, z};
             }),
             py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("x", &ris::Vec3::x)
        .def_readwrite("y", &ris::Vec3::y)
        .def_readwrite("z", &ris::Vec3::z)
        .def("norm", &ris::Vec3::norm)
        .def("dot", &ris::Vec3::dot);

    py::class_<ris::ArrayLayout>(m, "ArrayLayout")
        .def_readonly("n_rows", &ris::ArrayLayout::n_rows)
        .def_readonly("n_cols", &ris::ArrayLayout::n_cols)
        .def_readonly("period_x", &ris::ArrayLayout::period_x)
        .def_readonly("period_y", &ris::ArrayLayout::period_y)
        .def("position", &ris::ArrayLayout::position, py::arg("i"), py::arg("j"))
        .def("aperture_x", &ris::ArrayLayout::aperture_x)
        .def("aperture_y", &ris::ArrayLayout::aperture_y);
    m.def("make_layout", &ris::make_layout, py::arg("n_rows"), py::arg("n_cols"),
          py::arg("period_x"), py::arg("period_y"));
    m.def("electrical_size", &ris::electrical_size, py::arg("layout"),
          py::arg("f_hz"));
    m.def("element_distances", &ris::element_distances, py::arg("layout"),
          py::arg("point"));

    py::enum_<ris::SwitchState>(m, "SwitchState")
        .value("OFF", ris::SwitchState::Off)
        .value("ON", ris::SwitchState::On);

    py::class_<ris::PatternMask>(m, "PatternMask")
        .def(py::init([](const std::vector<std::uint8_t>& cols) {
                 ris::PatternMask mask;
                 mask.column_states = cols;
                 return mask;
             }),
             py::arg("column_states"))
        .def_readwrite("column_states", &ris::PatternMask::column_states)
        .def_property_readonly(
            "cell_states",
            [](const ris::PatternMask& mask)
                -> std::optional<std::vector<std::vector<std::uint8_t>>> {
                return mask.cell_states;
            })
        .def("n_cols", &ris::PatternMask::n_cols);
    m.def("mask_to_bits", &ris::mask_to_bits, py::arg("mask"));
    m.def("mask_from_bits", &ris::mask_from_bits, py::arg("bits"));
    m.def("mask_to_json", &ris::mask_to_json, py::arg("mask"));
    m.def("mask_from_json", &ris::mask_from_json, py::arg("text"));

    py::class_<ris::Terminal>(m, "Terminal")
        .def_static("position", &ris::Terminal::position, py::arg("p"))
        .def_static("direction", &ris::Terminal::direction, py::arg("u"))
        .def_readonly("v", &ris::Terminal::v)
        .def_property_readonly("is_position", [](const ris::Terminal& t) {
            return t.kind == ris::Terminal::Kind::Position;
        });

    py::class_<ris::Scene>(m, "Scene")
        .def_readwrite("tx", &ris::Scene::tx)
        .def_readwrite("rx", &ris::Scene::rx)
        .def_readwrite("frequency", &ris::Scene::frequency);
    m.def("make_scene", &ris::make_scene, py::arg("tx"), py::arg("rx"),
          py::arg("f_hz"), py::arg("pol_tx") = ris::Vec3{1.0, 0.0, 0.0},
          py::arg("pol_rx") = ris::Vec3{1.0, 0.0, 0.0});

    // --- unit cell ------------------------------------------------------
    py::class_<ris::UnitCellResponse>(m, "UnitCellResponse")
        .def_readwrite("f_hz", &ris::UnitCellResponse::f_hz)
        .def_readwrite("mag_on", &ris::UnitCellResponse::mag_on)
        .def_readwrite("phase_on", &ris::UnitCellResponse::phase_on)
        .def_readwrite("mag_off", &ris::UnitCellResponse::mag_off)
        .def_readwrite("phase_off", &ris::UnitCellResponse::phase_off)
        .def("validate", &ris::UnitCellResponse::validate)
        .def("f_min", &ris::UnitCellResponse::f_min)
        .def("f_max", &ris::UnitCellResponse::f_max);
    m.def("default_response", &ris::default_response);
    m.def("reflection", &ris::reflection, py::arg("resp"), py::arg("state"),
          py::arg("f_hz"));
    m.def("phase_difference", &ris::phase_difference, py::arg("resp"),
          py::arg("f_hz"));
    m.def("sensitivity_acceptable", &ris::sensitivity_acceptable,
          py::arg("r_on_ohm"), py::arg("r_off_ohm"));
    m.def("response_from_csv", &ris::response_from_csv, py::arg("path"));

    // --- switch ---------------------------------------------------------
    py::class_<ris::SwitchParams>(m, "SwitchParams")
        .def(py::init<>())
        .def_readwrite("r_on", &ris::SwitchParams::r_on)
        .def_readwrite("r_off", &ris::SwitchParams::r_off)
        .def_readwrite("c_shunt", &ris::SwitchParams::c_shunt)
        .def_readwrite("l_series", &ris::SwitchParams::l_series)
        .def_readwrite("z0", &ris::SwitchParams::z0);
    m.def("shunt_impedance", &ris::shunt_impedance, py::arg("params"),
          py::arg("state"), py::arg("f_hz"));
    m.def("shunt_s21", &ris::shunt_s21, py::arg("params"), py::arg("state"),
          py::arg("f_hz"));
    m.def("to_db", &ris::to_db, py::arg("linear_magnitude"));

    py::class_<ris::SwitchMeasurement>(m, "SwitchMeasurement")
        .def(py::init([](double f_hz, ris::SwitchState state, double s21_db) {
                 return ris::SwitchMeasurement{f_hz, state, s21_db};
             }),
             py::arg("f_hz"), py::arg("state"), py::arg("s21_db"))
        .def_readwrite("f_hz", &ris::SwitchMeasurement::f_hz)
        .def_readwrite("state", &ris::SwitchMeasurement::state)
        .def_readwrite("s21_db", &ris::SwitchMeasurement::s21_db);

    py::class_<ris::FitResult>(m, "FitResult")
        .def_readonly("params", &ris::FitResult::params)
        .def_readonly("residuals_db", &ris::FitResult::residuals_db)
        .def_readonly("max_abs_residual_db", &ris::FitResult::max_abs_residual_db)
        .def_readonly("converged", &ris::FitResult::converged);
    m.def("fit_switch_params", &ris::fit_switch_params, py::arg("measurements"),
          py::arg("initial") = ris::SwitchParams{});

    py::class_<ris::IVModel>(m, "IVModel")
        .def(py::init<>())
        .def_readwrite("r_off_branch", &ris::IVModel::r_off_branch)
        .def_readwrite("v_threshold", &ris::IVModel::v_threshold)
        .def_readwrite("i_hold", &ris::IVModel::i_hold)
        .def_readwrite("r_on_branch", &ris::IVModel::r_on_branch);
    py::enum_<ris::IVBranch>(m, "IVBranch")
        .value("OFF", ris::IVBranch::Off)
        .value("TRANSITION", ris::IVBranch::Transition)
        .value("ON", ris::IVBranch::On);
    py::class_<ris::OperatingPoint>(m, "OperatingPoint")
        .def_readonly("v", &ris::OperatingPoint::v)
        .def_readonly("i", &ris::OperatingPoint::i)
        .def_readonly("branch", &ris::OperatingPoint::branch);
    py::enum_<ris::BiasKind>(m, "BiasKind")
        .value("VOLTAGE", ris::BiasKind::Voltage)
        .value("CURRENT", ris::BiasKind::Current);
    m.def("operating_points", &ris::operating_points, py::arg("iv"),
          py::arg("bias"), py::arg("value"),
          py::arg("source_resistance") =
              std::numeric_limits<double>::infinity());
    py::enum_<ris::ThermalPhase>(m, "ThermalPhase")
        .value("INSULATING", ris::ThermalPhase::Insulating)
        .value("METALLIC", ris::ThermalPhase::Metallic);
    m.def("thermal_phase", &ris::thermal_phase, py::arg("trajectory_degc"),
          py::arg("initial") = std::nullopt,
          py::arg("heat_threshold_degc") = 67.0,
          py::arg("cool_threshold_degc") = 56.0);
    m.def("switch_params_to_text", &ris::switch_params_to_text, py::arg("params"));
    m.def("switch_params_from_text", &ris::switch_params_from_text,
          py::arg("text"));

    // --- fields ----------------------------------------------------------
    py::class_<ris::FieldOptions>(m, "FieldOptions")
        .def(py::init<>())
        .def_readwrite("q_element", &ris::FieldOptions::q_element)
        .def_readwrite("q_horn", &ris::FieldOptions::q_horn);
    m.def("horn_directivity", &ris::horn_directivity, py::arg("q_horn"));
    py::class_<ris::FieldResult>(m, "FieldResult")
        .def_readonly("amplitude", &ris::FieldResult::amplitude)
        .def_readonly("f_hz", &ris::FieldResult::f_hz);
    m.def("terminal_weight", &ris::terminal_weight, py::arg("terminal"),
          py::arg("element"), py::arg("k"), py::arg("q"));
    m.def("column_sums", &ris::column_sums, py::arg("layout"), py::arg("scene"),
          py::arg("f_hz"), py::arg("opts") = ris::FieldOptions{});
    m.def("scattered_field", &ris::scattered_field, py::arg("layout"),
          py::arg("mask"), py::arg("resp"), py::arg("scene"), py::arg("f_hz"),
          py::arg("opts") = ris::FieldOptions{});
    py::class_<ris::Enhancement>(m, "Enhancement")
        .def_readonly("db", &ris::Enhancement::db)
        .def_readonly("reference_zero", &ris::Enhancement::reference_zero);
    m.def("gain_enhancement", &ris::gain_enhancement, py::arg("layout"),
          py::arg("mask"), py::arg("resp"), py::arg("scene"), py::arg("f_hz"),
          py::arg("opts") = ris::FieldOptions{});
    py::class_<ris::PatternCut>(m, "PatternCut")
        .def_readonly("angle_deg", &ris::PatternCut::angle_deg)
        .def_readonly("value_db", &ris::PatternCut::value_db);
    m.def("pattern_cut", &ris::pattern_cut, py::arg("layout"), py::arg("mask"),
          py::arg("resp"), py::arg("incidence"), py::arg("f_hz"),
          py::arg("start_deg"), py::arg("stop_deg"), py::arg("step_deg"),
          py::arg("opts") = ris::FieldOptions{});
    m.def("rcs", &ris::rcs, py::arg("layout"), py::arg("mask"), py::arg("resp"),
          py::arg("inc_dir"), py::arg("obs_dir"), py::arg("f_hz"),
          py::arg("opts") = ris::FieldOptions{});

    // --- synthesis --------------------------------------------------------
    m.def("wrap_phase", &ris::wrap_phase, py::arg("phi"));
    m.def("phase_profile", &ris::phase_profile, py::arg("layout"), py::arg("feed"),
          py::arg("target_dir"), py::arg("f_hz"));
    m.def("quantize_1bit", &ris::quantize_1bit, py::arg("profile"),
          py::arg("layout"), py::arg("resp"), py::arg("f_hz"));
    m.def("collapse_columns", &ris::collapse_columns, py::arg("cells"));
    py::class_<ris::ColumnContributions>(m, "ColumnContributions")
        .def_readonly("c_on", &ris::ColumnContributions::c_on)
        .def_readonly("c_off", &ris::ColumnContributions::c_off)
        .def_readonly("f_hz", &ris::ColumnContributions::f_hz)
        .def("n_cols", &ris::ColumnContributions::n_cols);
    m.def("column_contributions", &ris::column_contributions, py::arg("layout"),
          py::arg("resp"), py::arg("scene"), py::arg("f_hz"),
          py::arg("opts") = ris::FieldOptions{});
    m.def("optimize_exhaustive", &ris::optimize_exhaustive, py::arg("contrib"));
    m.def("optimize_greedy", &ris::optimize_greedy, py::arg("contrib"),
          py::arg("initial") = std::nullopt);
    m.def("mask_field_magnitude", &ris::mask_field_magnitude, py::arg("contrib"),
          py::arg("mask"));

    // --- link --------------------------------------------------------------
    py::class_<ris::RadarLinkParams>(m, "RadarLinkParams")
        .def(py::init<>())
        .def_readwrite("efficiency_tx", &ris::RadarLinkParams::efficiency_tx)
        .def_readwrite("efficiency_rx", &ris::RadarLinkParams::efficiency_rx)
        .def_readwrite("mismatch_tx", &ris::RadarLinkParams::mismatch_tx)
        .def_readwrite("mismatch_rx", &ris::RadarLinkParams::mismatch_rx)
        .def_readwrite("directivity_tx", &ris::RadarLinkParams::directivity_tx)
        .def_readwrite("directivity_rx", &ris::RadarLinkParams::directivity_rx)
        .def_readwrite("wavelength_m", &ris::RadarLinkParams::wavelength_m)
        .def_readwrite("r1_m", &ris::RadarLinkParams::r1_m)
        .def_readwrite("r2_m", &ris::RadarLinkParams::r2_m)
        .def_readwrite("polarization_match",
                       &ris::RadarLinkParams::polarization_match)
        .def_readwrite("sigma_m2", &ris::RadarLinkParams::sigma_m2);
    m.def("radar_received_ratio", &ris::radar_received_ratio, py::arg("params"));
    m.def("radar_received_ratio_db", &ris::radar_received_ratio_db,
          py::arg("params"));
    m.def("far_field_distance", &ris::far_field_distance, py::arg("layout"),
          py::arg("f_hz"));
    m.def("enhancement_far", &ris::enhancement_far, py::arg("layout"),
          py::arg("mask"), py::arg("resp"), py::arg("incidence_deg"),
          py::arg("f_hz"), py::arg("opts") = ris::FieldOptions{});

    // --- controller ---------------------------------------------------------
    py::class_<ris::BiasChainSpec>(m, "BiasChainSpec")
        .def(py::init<>())
        .def_readwrite("n_columns", &ris::BiasChainSpec::n_columns)
        .def_readwrite("n_series_per_column",
                       &ris::BiasChainSpec::n_series_per_column)
        .def_readwrite("i_hold_a", &ris::BiasChainSpec::i_hold_a)
        .def_readwrite("v_supply_v", &ris::BiasChainSpec::v_supply_v)
        .def_readwrite("r_feedback_ohm", &ris::BiasChainSpec::r_feedback_ohm)
        .def_readwrite("r_on_per_switch_ohm",
                       &ris::BiasChainSpec::r_on_per_switch_ohm);
    m.def("encode_mask", &ris::encode_mask, py::arg("mask"));
    m.def("decode_mask", &ris::decode_mask, py::arg("payload"),
          py::arg("n_columns"));
    py::class_<ris::CommandFrame>(m, "CommandFrame")
        .def_readonly("bytes", &ris::CommandFrame::bytes);
    m.def("frame_command", &ris::frame_command, py::arg("mask"));
    m.def("verify_frame", &ris::verify_frame, py::arg("bytes"));
    m.def("decode_frame", &ris::decode_frame, py::arg("frame"),
          py::arg("n_columns"));
    m.def("transition_feasible", &ris::transition_feasible, py::arg("spec"),
          py::arg("v_threshold_per_switch_v"));
    py::class_<ris::PowerBreakdown>(m, "PowerBreakdown")
        .def_readonly("per_column_switch_w", &ris::PowerBreakdown::per_column_switch_w)
        .def_readonly("per_column_supply_w", &ris::PowerBreakdown::per_column_supply_w)
        .def_readonly("total_switch_w", &ris::PowerBreakdown::total_switch_w)
        .def_readonly("total_supply_w", &ris::PowerBreakdown::total_supply_w)
        .def_readonly("n_on", &ris::PowerBreakdown::n_on);
    m.def("bias_power", &ris::bias_power, py::arg("spec"), py::arg("mask"));
    m.def("bytes_to_hex", &ris::bytes_to_hex, py::arg("bytes"));

    // --- scenario pipeline ----------------------------------------------------
    py::class_<ris::ScenarioConfig>(m, "ScenarioConfig")
        .def_readonly("rows", &ris::ScenarioConfig::rows)
        .def_readonly("cols", &ris::ScenarioConfig::cols)
        .def_readonly("design_f_hz", &ris::ScenarioConfig::design_f_hz)
        .def("layout", &ris::ScenarioConfig::layout)
        .def("response", &ris::ScenarioConfig::response)
        .def("scene_at", &ris::ScenarioConfig::scene_at, py::arg("f_hz"));
    m.def("load_scenario", &ris::load_scenario, py::arg("path"));
    py::class_<ris::SynthesisOutcome>(m, "SynthesisOutcome")
        .def_readonly("quantized", &ris::SynthesisOutcome::quantized)
        .def_readonly("mask", &ris::SynthesisOutcome::mask)
        .def_readonly("contrib", &ris::SynthesisOutcome::contrib);
    m.def("run_synthesis", &ris::run_synthesis, py::arg("config"),
          py::arg("f_hz"));
}
