#include "ris/switch_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace ris {

void SwitchParams::validate() const {
    if (!(r_on > 0.0)) throw ConfigError("r_on must be positive");
    if (!(r_off > r_on)) throw ConfigError("r_off must exceed r_on");
    if (c_shunt < 0.0 || l_series < 0.0)
        throw ConfigError("c_shunt and l_series must be non-negative");
    if (!(z0 > 0.0)) throw ConfigError("z0 must be positive");
}

std::complex<double> shunt_impedance(const SwitchParams& p, SwitchState state,
                                     double f_hz) {
    p.validate();
    if (!(f_hz > 0.0)) throw DomainError("frequency must be positive");
    const double r = (state == SwitchState::On) ? p.r_on : p.r_off;
    const double w = 2.0 * pi * f_hz;
    // R in parallel with C: R / (1 + j*w*R*C), then series L.
    const std::complex<double> rc = r / std::complex<double>(1.0, w * r * p.c_shunt);
    return rc + std::complex<double>(0.0, w * p.l_series);
}

std::complex<double> shunt_s21(const SwitchParams& p, SwitchState state,
                               double f_hz) {
    const std::complex<double> z = shunt_impedance(p, state, f_hz);
    return 2.0 * z / (2.0 * z + p.z0);
}

double to_db(double linear_magnitude) {
    if (linear_magnitude == 0.0) return -std::numeric_limits<double>::infinity();
    return 20.0 * std::log10(std::abs(linear_magnitude));
}

namespace {

double fit_objective(const SwitchParams& p,
                     const std::vector<SwitchMeasurement>& on_rows) {
    double sum = 0.0;
    for (const auto& m : on_rows) {
        const double model_db = to_db(std::abs(shunt_s21(p, SwitchState::On, m.f_hz)));
        const double r = model_db - m.s21_db;
        sum += r * r;
    }
    return sum;
}

// Tie-break metric: parameter vector norm on (ohm, pF, pH) scales.
double scaled_norm(const SwitchParams& p) {
    const double a = p.r_on;
    const double b = p.c_shunt * 1e12;
    const double c = p.l_series * 1e12;
    return std::sqrt(a * a + b * b + c * c);
}

}  // namespace

FitResult fit_switch_params(const std::vector<SwitchMeasurement>& measurements,
                            const SwitchParams& initial) {
    initial.validate();
    std::vector<SwitchMeasurement> on_rows;
    std::vector<double> freqs;
    for (const auto& m : measurements) {
        if (!(m.f_hz > 0.0)) throw ConfigError("measurement frequency must be positive");
        if (m.state == SwitchState::On) {
            on_rows.push_back(m);
            if (std::find(freqs.begin(), freqs.end(), m.f_hz) == freqs.end())
                freqs.push_back(m.f_hz);
        }
    }
    if (on_rows.size() < 2 || freqs.size() < 2)
        throw ConfigError("fit needs at least two ON measurements at two frequencies");

    auto result_for = [&](const SwitchParams& p, bool converged) {
        FitResult r;
        r.params = p;
        r.converged = converged;
        for (const auto& m : on_rows) {
            const double model_db =
                to_db(std::abs(shunt_s21(p, SwitchState::On, m.f_hz)));
            r.residuals_db.push_back(model_db - m.s21_db);
            r.max_abs_residual_db =
                std::max(r.max_abs_residual_db, std::abs(model_db - m.s21_db));
        }
        return r;
    };

    // An initial guess that already reproduces every target is the answer;
    // this keeps single-measurement-style round trips exact.
    if (fit_objective(initial, on_rows) < 1e-18) return result_for(initial, true);

    const double r_lo = 0.1, r_hi = 100.0;
    const double c_lo = 0.0, c_hi = 20e-12;
    const double l_lo = 0.0, l_hi = 1e-9;

    SwitchParams best = initial;
    double best_obj = fit_objective(best, on_rows);

    auto consider = [&](SwitchParams cand) {
        cand.r_on = std::clamp(cand.r_on, r_lo, r_hi);
        cand.c_shunt = std::clamp(cand.c_shunt, c_lo, c_hi);
        cand.l_series = std::clamp(cand.l_series, l_lo, l_hi);
        const double obj = fit_objective(cand, on_rows);
        if (obj < best_obj ||
            (obj == best_obj && scaled_norm(cand) < scaled_norm(best))) {
            best = cand;
            best_obj = obj;
            return true;
        }
        return false;
    };

    // Coarse deterministic grid.
    for (double r = 1.0; r <= 10.0 + 1e-9; r += 0.25)
        for (double c = 0.0; c <= 5e-12 + 1e-21; c += 0.125e-12)
            for (double l = 0.0; l <= 100e-12 + 1e-21; l += 2.5e-12) {
                SwitchParams cand = initial;
                cand.r_on = r;
                cand.c_shunt = c;
                cand.l_series = l;
                consider(cand);
            }

    // Coordinate descent with shrinking steps.
    double step_r = 0.25, step_c = 0.125e-12, step_l = 2.5e-12;
    bool converged = false;
    for (int iter = 0; iter < 20000; ++iter) {
        bool moved = false;
        for (int axis = 0; axis < 3; ++axis) {
            for (double sign : {+1.0, -1.0}) {
                SwitchParams cand = best;
                if (axis == 0) cand.r_on += sign * step_r;
                if (axis == 1) cand.c_shunt += sign * step_c;
                if (axis == 2) cand.l_series += sign * step_l;
                moved |= consider(cand);
            }
        }
        if (!moved) {
            step_r *= 0.5;
            step_c *= 0.5;
            step_l *= 0.5;
            if (step_r < 1e-9 && step_c < 1e-21 && step_l < 1e-21) {
                converged = true;
                break;
            }
        }
    }
    return result_for(best, converged);
}

void IVModel::validate() const {
    if (!(r_off_branch > 0.0) || !(r_on_branch > 0.0))
        throw ConfigError("branch resistances must be positive");
    if (!(v_threshold > 0.0) || !(i_hold > 0.0))
        throw ConfigError("v_threshold and i_hold must be positive");
    // Transition runs from (v_threshold, v_threshold/r_off) down to
    // (i_hold*r_on, i_hold); a negative slope needs both a voltage drop and
    // a current rise across it.
    if (!(i_hold * r_on_branch < v_threshold))
        throw ConfigError("transition segment must drop in voltage");
    if (!(v_threshold / r_off_branch < i_hold))
        throw ConfigError("transition segment must rise in current");
}

std::vector<OperatingPoint> operating_points(const IVModel& iv, BiasKind bias,
                                             double value,
                                             double source_resistance) {
    iv.validate();
    if (value < 0.0) throw DomainError("bias value must be non-negative");
    if (source_resistance < 0.0)
        throw DomainError("source resistance must be non-negative");

    // Load line as a*V + b*I = c.
    double a, b, c;
    if (bias == BiasKind::Voltage) {
        a = 1.0;
        b = std::isinf(source_resistance) ? 0.0 : source_resistance;
        if (std::isinf(source_resistance))
            throw DomainError("voltage bias needs finite source resistance");
        c = value;
    } else if (std::isinf(source_resistance)) {
        a = 0.0;
        b = 1.0;
        c = value;  // ideal current source: horizontal load line I = value
    } else {
        if (source_resistance == 0.0)
            throw DomainError("current bias needs nonzero source resistance");
        a = 1.0 / source_resistance;
        b = 1.0;
        c = value;
    }

    std::vector<OperatingPoint> pts;
    const double i_off_end = iv.v_threshold / iv.r_off_branch;
    const double v_on_start = iv.i_hold * iv.r_on_branch;

    // Resistive branch V = R*I over [i_min, i_max] (i_max < 0 meaning open).
    auto resistive = [&](double r, double i_min, double i_max, IVBranch br) {
        const double denom = a * r + b;
        if (denom == 0.0) return;
        const double i = c / denom;
        if (i < i_min - 1e-15) return;
        if (i_max >= 0.0 && i > i_max + 1e-15) return;
        pts.push_back({r * i, i, br});
    };
    resistive(iv.r_off_branch, 0.0, i_off_end, IVBranch::Off);

    {  // Transition segment, parametric in t over [0, 1].
        const double dv = v_on_start - iv.v_threshold;
        const double di = iv.i_hold - i_off_end;
        const double denom = a * dv + b * di;
        if (denom != 0.0) {
            const double t = (c - a * iv.v_threshold - b * i_off_end) / denom;
            if (t >= -1e-12 && t <= 1.0 + 1e-12) {
                pts.push_back({iv.v_threshold + t * dv, i_off_end + t * di,
                               IVBranch::Transition});
            }
        }
    }
    resistive(iv.r_on_branch, iv.i_hold, -1.0, IVBranch::On);

    // Branch endpoints coincide by construction; collapse duplicates,
    // keeping the earliest branch label.
    std::vector<OperatingPoint> unique_pts;
    for (const auto& p : pts) {
        const bool dup = std::any_of(
            unique_pts.begin(), unique_pts.end(), [&](const OperatingPoint& q) {
                const double scale = std::max({1.0, std::abs(p.v), std::abs(p.i)});
                return std::abs(p.v - q.v) <= 1e-9 * scale &&
                       std::abs(p.i - q.i) <= 1e-9 * scale;
            });
        if (!dup) unique_pts.push_back(p);
    }
    return unique_pts;
}

std::vector<ThermalPhase> thermal_phase(const std::vector<double>& trajectory_degc,
                                        std::optional<ThermalPhase> initial,
                                        double heat_threshold_degc,
                                        double cool_threshold_degc) {
    if (trajectory_degc.empty()) throw DomainError("empty temperature trajectory");
    if (!(heat_threshold_degc > cool_threshold_degc))
        throw DomainError("heating threshold must exceed cooling threshold");

    ThermalPhase phase;
    const double t0 = trajectory_degc.front();
    if (initial.has_value()) {
        phase = *initial;
    } else if (t0 < cool_threshold_degc) {
        phase = ThermalPhase::Insulating;
    } else if (t0 > heat_threshold_degc) {
        phase = ThermalPhase::Metallic;
    } else {
        throw DomainError(
            "initial temperature inside the hysteresis band needs an explicit phase");
    }

    std::vector<ThermalPhase> out;
    out.reserve(trajectory_degc.size());
    for (double t : trajectory_degc) {
        if (phase == ThermalPhase::Insulating && t >= heat_threshold_degc)
            phase = ThermalPhase::Metallic;
        else if (phase == ThermalPhase::Metallic && t <= cool_threshold_degc)
            phase = ThermalPhase::Insulating;
        out.push_back(phase);
    }
    return out;
}

std::string switch_params_to_text(const SwitchParams& p) {
    char buf[256];
    std::string out;
    auto line = [&](const char* key, double v) {
        std::snprintf(buf, sizeof buf, "%s = %.17g\n", key, v);
        out += buf;
    };
    line("r_on_ohm", p.r_on);
    line("r_off_ohm", p.r_off);
    line("c_shunt_f", p.c_shunt);
    line("l_series_h", p.l_series);
    line("z0_ohm", p.z0);
    return out;
}

SwitchParams switch_params_from_text(const std::string& text) {
    SwitchParams p;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string stripped = trim(raw);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("switch params line " + std::to_string(lineno) +
                              ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string val = trim(stripped.substr(eq + 1));
        double num;
        try {
            std::size_t used = 0;
            num = std::stod(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
        } catch (const std::exception&) {
            throw ConfigError("switch params line " + std::to_string(lineno) +
                              ": bad number '" + val + "'");
        }
        if (key == "r_on_ohm") p.r_on = num;
        else if (key == "r_off_ohm") p.r_off = num;
        else if (key == "c_shunt_f") p.c_shunt = num;
        else if (key == "l_series_h") p.l_series = num;
        else if (key == "z0_ohm") p.z0 = num;
        else throw ConfigError("switch params: unknown key '" + key + "'");
    }
    p.validate();
    return p;
}

}  // namespace ris
