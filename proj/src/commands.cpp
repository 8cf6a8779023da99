#include "ris/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "ris/controller.hpp"
#include "ris/link.hpp"
#include "ris/switch_model.hpp"

namespace ris {

namespace {

std::vector<double> linspace(double start, double stop, int n) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    if (n == 1) {
        out.push_back(start);
        return out;
    }
    for (int i = 0; i < n; ++i)
        out.push_back(start + (stop - start) * i / (n - 1));
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Route output to a file when a path is set, else to the fallback stream.
class OutputTarget {
  public:
    OutputTarget(const std::string& path, std::ostream& fallback)
        : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw ConfigError("cannot write file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

  private:
    std::ofstream file_;
    std::ostream& fallback_;
};

std::string describe_terminal(const TerminalConfig& t) {
    std::ostringstream s;
    if (t.kind == TerminalConfig::Kind::Position)
        s << "position " << format_number(t.angle_deg) << " deg at "
          << format_number(t.distance_m * 100.0) << " cm";
    else
        s << "direction " << format_number(t.angle_deg) << " deg";
    return s.str();
}

PatternMask all_off_mask(int n_cols) {
    PatternMask mask;
    mask.column_states.assign(static_cast<std::size_t>(n_cols), 0);
    return mask;
}

}  // namespace

SynthesisOutcome run_synthesis(const ScenarioConfig& cfg, double f_hz) {
    const ArrayLayout layout = cfg.layout();
    const UnitCellResponse resp = cfg.response();
    const Scene scene = cfg.scene_at(f_hz);

    const std::vector<double> profile =
        phase_profile(layout, scene.tx, cfg.target_direction(), f_hz);
    const auto cells = quantize_1bit(profile, layout, resp, f_hz);

    SynthesisOutcome outcome;
    outcome.quantized = collapse_columns(cells);
    outcome.contrib =
        column_contributions(layout, resp, scene, f_hz, cfg.field_options());

    switch (cfg.optimizer) {
        case ScenarioConfig::Optimizer::Quantized:
            outcome.mask = outcome.quantized;
            break;
        case ScenarioConfig::Optimizer::Greedy:
            outcome.mask = optimize_greedy(outcome.contrib, outcome.quantized);
            break;
        case ScenarioConfig::Optimizer::Exhaustive:
            outcome.mask = optimize_exhaustive(outcome.contrib);
            break;
    }
    return outcome;
}

int cmd_synthesize(const ScenarioConfig& cfg, std::ostream& out) {
    const SynthesisOutcome outcome = run_synthesis(cfg, cfg.design_f_hz);
    const Enhancement enh =
        gain_enhancement(cfg.layout(), outcome.mask, cfg.response(),
                         cfg.scene_at(cfg.design_f_hz), cfg.design_f_hz,
                         cfg.field_options());

    {
        OutputTarget mask_out(cfg.out_mask, out);
        mask_out.stream() << mask_to_json(outcome.mask) << "\n";
    }

    std::ostringstream summary;
    summary << "array: " << cfg.rows << " x " << cfg.cols << ", period "
            << format_number(cfg.period_x_m * 1e3) << " mm x "
            << format_number(cfg.period_y_m * 1e3) << " mm\n";
    summary << "frequency_ghz: " << format_number(cfg.design_f_hz / 1e9) << "\n";
    summary << "feed: " << describe_terminal(cfg.tx) << "\n";
    summary << "target: " << describe_terminal(cfg.rx) << "\n";
    const char* opt_name =
        cfg.optimizer == ScenarioConfig::Optimizer::Quantized    ? "quantized"
        : cfg.optimizer == ScenarioConfig::Optimizer::Greedy     ? "greedy"
                                                                 : "exhaustive";
    summary << "optimizer: " << opt_name << "\n";
    summary << "mask: " << mask_to_bits(outcome.mask) << "\n";
    summary << "field_magnitude: "
            << format_number(mask_field_magnitude(outcome.contrib, outcome.mask))
            << "\n";
    summary << "enhancement_db: "
            << (enh.reference_zero ? std::string("inf")
                                   : format_number(enh.db))
            << "\n";

    out << summary.str();
    if (!cfg.out_summary.empty()) {
        OutputTarget summary_out(cfg.out_summary, out);
        summary_out.stream() << summary.str();
    }
    return 0;
}

int cmd_sweep(const ScenarioConfig& cfg, std::ostream& out) {
    const ArrayLayout layout = cfg.layout();
    const UnitCellResponse resp = cfg.response();
    const std::vector<double> freqs =
        linspace(cfg.band_start_hz, cfg.band_stop_hz, cfg.band_points);

    PatternMask fixed;
    if (!cfg.sweep_reoptimize)
        fixed = run_synthesis(cfg, cfg.design_f_hz).mask;

    OutputTarget csv(cfg.out_csv, out);
    csv.stream() << "freq_hz,value_db\n";
    for (double f : freqs) {
        const PatternMask mask =
            cfg.sweep_reoptimize ? run_synthesis(cfg, f).mask : fixed;
        const Enhancement enh = gain_enhancement(layout, mask, resp,
                                                 cfg.scene_at(f), f,
                                                 cfg.field_options());
        csv.stream() << format_number(f) << ","
                     << (enh.reference_zero ? std::string("inf")
                                            : format_number(enh.db))
                     << "\n";
    }
    return 0;
}

int cmd_cut(const ScenarioConfig& cfg, std::ostream& out) {
    const ArrayLayout layout = cfg.layout();
    const UnitCellResponse resp = cfg.response();

    PatternMask mask;
    if (cfg.cut_mask == "optimized")
        mask = run_synthesis(cfg, cfg.design_f_hz).mask;
    else if (cfg.cut_mask == "all-off")
        mask = all_off_mask(cfg.cols);
    else
        mask = mask_from_json(read_text_file(cfg.cut_mask));

    const PatternCut cut =
        pattern_cut(layout, mask, resp, cfg.tx.to_terminal(), cfg.design_f_hz,
                    cfg.cut_start_deg, cfg.cut_stop_deg, cfg.cut_step_deg,
                    cfg.field_options());

    OutputTarget csv(cfg.out_csv, out);
    csv.stream() << "angle_deg,value_db\n";
    for (std::size_t i = 0; i < cut.angle_deg.size(); ++i)
        csv.stream() << format_number(cut.angle_deg[i]) << ","
                     << format_number(cut.value_db[i]) << "\n";
    return 0;
}

int cmd_link(const ScenarioConfig& cfg, std::ostream& out) {
    const ArrayLayout layout = cfg.layout();
    const UnitCellResponse resp = cfg.response();
    const PatternMask mask = run_synthesis(cfg, cfg.design_f_hz).mask;
    const std::string mask_id = mask_to_bits(mask);
    const std::vector<double> freqs =
        linspace(cfg.band_start_hz, cfg.band_stop_hz, cfg.band_points);

    const double inc_rad = cfg.tx.angle_deg * pi / 180.0;
    const Vec3 inc{std::sin(inc_rad), 0.0, std::cos(inc_rad)};
    const double obs_rad = cfg.rx.angle_deg * pi / 180.0;
    const Vec3 obs{std::sin(obs_rad), 0.0, std::cos(obs_rad)};

    OutputTarget csv(cfg.out_csv, out);
    csv.stream() << "f_hz,inc_deg,mask_id,pr_over_pt_db,enh_db\n";
    for (double f : freqs) {
        const double sigma =
            rcs(layout, mask, resp, inc, obs, f, cfg.field_options());

        RadarLinkParams p;
        p.directivity_tx = horn_directivity(cfg.horn_q);
        p.directivity_rx = p.directivity_tx;
        p.wavelength_m = wavelength(f);
        p.r1_m = cfg.tx.kind == TerminalConfig::Kind::Position
                     ? cfg.tx.distance_m
                     : far_field_distance(layout, f);
        p.r2_m = cfg.rx.kind == TerminalConfig::Kind::Position
                     ? cfg.rx.distance_m
                     : far_field_distance(layout, f);
        p.sigma_m2 = sigma;
        const double pr_db = radar_received_ratio_db(p);

        const double enh = enhancement_far(layout, mask, resp, cfg.tx.angle_deg,
                                           f, cfg.field_options());

        csv.stream() << format_number(f) << ","
                     << format_number(cfg.tx.angle_deg) << "," << mask_id << ","
                     << format_number(pr_db) << "," << format_number(enh)
                     << "\n";
    }
    return 0;
}

int cmd_encode(const std::string& mask_path, const std::string& device_path,
               std::ostream& out) {
    const PatternMask mask = mask_from_json(read_text_file(mask_path));
    const CommandFrame frame = frame_command(mask);
    if (device_path.empty()) {
        out << bytes_to_hex(frame.bytes) << "\n";
        return 0;
    }
    std::ofstream dev(device_path, std::ios::binary);
    if (!dev) throw ConfigError("cannot write device '" + device_path + "'");
    dev.write(reinterpret_cast<const char*>(frame.bytes.data()),
              static_cast<std::streamsize>(frame.bytes.size()));
    if (!dev) throw ConfigError("failed writing frame to '" + device_path + "'");
    out << "wrote " << frame.bytes.size() << " bytes to " << device_path << "\n";
    return 0;
}

namespace {

std::vector<SwitchMeasurement> parse_measurement_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open measurement file '" + path + "'");
    std::string line;
    if (!std::getline(in, line))
        throw ConfigError("measurement file '" + path + "' is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "state,f_ghz,s21_db")
        throw ConfigError("measurement header must be 'state,f_ghz,s21_db'");

    std::vector<SwitchMeasurement> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream cells(line);
        std::string state_s, f_s, s21_s;
        if (!std::getline(cells, state_s, ',') || !std::getline(cells, f_s, ',') ||
            !std::getline(cells, s21_s))
            throw ConfigError("measurement line " + std::to_string(line_no) +
                              ": expected state,f_ghz,s21_db");
        SwitchMeasurement m;
        if (state_s == "on")
            m.state = SwitchState::On;
        else if (state_s == "off")
            m.state = SwitchState::Off;
        else
            throw ConfigError("measurement line " + std::to_string(line_no) +
                              ": state must be on or off");
        try {
            m.f_hz = std::stod(f_s) * 1e9;
            m.s21_db = std::stod(s21_s);
        } catch (const std::exception&) {
            throw ConfigError("measurement line " + std::to_string(line_no) +
                              ": non-numeric value");
        }
        if (!(m.f_hz > 0.0))
            throw ConfigError("measurement line " + std::to_string(line_no) +
                              ": frequency must be > 0");
        rows.push_back(m);
    }
    return rows;
}

}  // namespace

int cmd_switch_fit(const std::string& csv_path, const std::string& initial_path,
                   const std::string& params_out_path, std::ostream& out) {
    const std::vector<SwitchMeasurement> rows = parse_measurement_csv(csv_path);

    SwitchParams initial;
    if (!initial_path.empty())
        initial = switch_params_from_text(read_text_file(initial_path));

    const FitResult fit = fit_switch_params(rows, initial);

    const std::string params_text = switch_params_to_text(fit.params);
    out << params_text;
    out << "max_abs_residual_db: " << format_number(fit.max_abs_residual_db)
        << "\n";
    out << "converged: " << (fit.converged ? "true" : "false") << "\n";

    std::size_t on_index = 0;
    for (const SwitchMeasurement& m : rows) {
        const double model_db =
            to_db(std::abs(shunt_s21(fit.params, m.state, m.f_hz)));
        if (m.state == SwitchState::On) {
            out << "on " << format_number(m.f_hz / 1e9) << " GHz: model "
                << format_number(model_db) << " dB, measured "
                << format_number(m.s21_db) << " dB, residual "
                << format_number(fit.residuals_db[on_index]) << " dB\n";
            ++on_index;
        } else {
            // The bare model omits board loss, so it must not predict more
            // loss than was measured.
            const bool ok = model_db >= m.s21_db - 1e-9;
            out << "off " << format_number(m.f_hz / 1e9) << " GHz: model "
                << format_number(model_db) << " dB, measured "
                << format_number(m.s21_db) << " dB, bound "
                << (ok ? "ok" : "exceeded") << "\n";
        }
    }

    if (!params_out_path.empty()) {
        std::ofstream pf(params_out_path, std::ios::binary);
        if (!pf)
            throw ConfigError("cannot write params file '" + params_out_path + "'");
        pf << params_text;
    }
    return 0;
}

}  // namespace ris
