#include "ris/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace ris {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t consumed = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &consumed);
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "' has a non-numeric value '" + value + "'");
    }
    if (consumed != value.size())
        throw ConfigError("key '" + key + "' has trailing junk in value '" + value + "'");
    return out;
}

int parse_int(const std::string& key, const std::string& value) {
    const double d = parse_double(key, value);
    const double r = std::round(d);
    if (std::abs(d - r) > 1e-9 || std::abs(r) > 1e9)
        throw ConfigError("key '" + key + "' must be an integer, got '" + value + "'");
    return static_cast<int>(r);
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "yes" || value == "1") return true;
    if (value == "false" || value == "no" || value == "0") return false;
    throw ConfigError("key '" + key + "' must be a boolean, got '" + value + "'");
}

}  // namespace

std::map<std::string, std::string> parse_key_values(std::istream& in) {
    std::map<std::string, std::string> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) +
                              ": expected 'key = value'");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        if (!out.emplace(key, value).second)
            throw ConfigError("duplicate key '" + key + "'");
    }
    return out;
}

Terminal TerminalConfig::to_terminal() const {
    const double rad = angle_deg * pi / 180.0;
    const Vec3 u{std::sin(rad), 0.0, std::cos(rad)};
    if (kind == Kind::Direction) return Terminal::direction(u);
    return Terminal::position({u.x * distance_m, u.y * distance_m, u.z * distance_m});
}

ArrayLayout ScenarioConfig::layout() const {
    return make_layout(rows, cols, period_x_m, period_y_m);
}

UnitCellResponse ScenarioConfig::response() const {
    if (unitcell_table.empty()) return default_response();
    return response_from_csv(unitcell_table);
}

Scene ScenarioConfig::scene_at(double f_hz) const {
    return make_scene(tx.to_terminal(), rx.to_terminal(), f_hz);
}

Vec3 ScenarioConfig::target_direction() const {
    const double rad = rx.angle_deg * pi / 180.0;
    return Vec3{std::sin(rad), 0.0, std::cos(rad)};
}

FieldOptions ScenarioConfig::field_options() const {
    FieldOptions opts;
    opts.q_element = q_element;
    opts.q_horn = horn_q;
    return opts;
}

namespace {

class KeyReader {
  public:
    explicit KeyReader(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

    bool has(const std::string& key) {
        seen_.insert(key);
        return kv_.count(key) != 0;
    }
    std::string str(const std::string& key, const std::string& fallback) {
        seen_.insert(key);
        const auto it = kv_.find(key);
        return it == kv_.end() ? fallback : it->second;
    }
    double num(const std::string& key, double fallback) {
        seen_.insert(key);
        const auto it = kv_.find(key);
        return it == kv_.end() ? fallback : parse_double(key, it->second);
    }
    int integer(const std::string& key, int fallback) {
        seen_.insert(key);
        const auto it = kv_.find(key);
        return it == kv_.end() ? fallback : parse_int(key, it->second);
    }
    bool boolean(const std::string& key, bool fallback) {
        seen_.insert(key);
        const auto it = kv_.find(key);
        return it == kv_.end() ? fallback : parse_bool(key, it->second);
    }
    void reject_unknown() const {
        for (const auto& [key, value] : kv_) {
            (void)value;
            if (seen_.count(key) == 0)
                throw ConfigError("unknown config key '" + key + "'");
        }
    }

  private:
    std::map<std::string, std::string> kv_;
    std::set<std::string> seen_;
};

TerminalConfig read_terminal(KeyReader& r, const std::string& prefix,
                             const TerminalConfig& defaults) {
    TerminalConfig t = defaults;
    const std::string kind = r.str(prefix + ".kind",
                                   defaults.kind == TerminalConfig::Kind::Position
                                       ? "position"
                                       : "direction");
    if (kind == "position")
        t.kind = TerminalConfig::Kind::Position;
    else if (kind == "direction")
        t.kind = TerminalConfig::Kind::Direction;
    else
        throw ConfigError("key '" + prefix + ".kind' must be position or direction");
    t.angle_deg = r.num(prefix + ".angle_deg", defaults.angle_deg);
    t.distance_m = r.num(prefix + ".distance_cm", defaults.distance_m * 100.0) / 100.0;
    if (t.angle_deg < -90.0 || t.angle_deg > 90.0)
        throw ConfigError("key '" + prefix + ".angle_deg' must lie within [-90, 90]");
    if (t.kind == TerminalConfig::Kind::Position && !(t.distance_m > 0.0))
        throw ConfigError("key '" + prefix + ".distance_cm' must be > 0");
    return t;
}

}  // namespace

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    KeyReader r(parse_key_values(in));

    ScenarioConfig cfg;
    cfg.tx.kind = TerminalConfig::Kind::Position;
    cfg.tx.angle_deg = 45.0;
    cfg.tx.distance_m = 0.2;
    cfg.rx.kind = TerminalConfig::Kind::Direction;
    cfg.rx.angle_deg = 0.0;

    cfg.rows = r.integer("array.rows", cfg.rows);
    cfg.cols = r.integer("array.cols", cfg.cols);
    const double period_cm = r.num("array.period_cm", 0.235);
    cfg.period_x_m = r.num("array.period_x_cm", period_cm) / 100.0;
    cfg.period_y_m = r.num("array.period_y_cm", period_cm) / 100.0;

    cfg.design_f_hz = r.num("design.f_ghz", 27.5) * 1e9;
    cfg.band_start_hz = r.num("band.f_start_ghz", 23.5) * 1e9;
    cfg.band_stop_hz = r.num("band.f_stop_ghz", 29.5) * 1e9;
    cfg.band_points = r.integer("band.n_points", 13);

    cfg.tx = read_terminal(r, "scene.tx", cfg.tx);
    cfg.rx = read_terminal(r, "scene.rx", cfg.rx);

    cfg.unitcell_table = r.str("unitcell.table", "");

    const std::string opt = r.str("optimizer", "exhaustive");
    if (opt == "quantized")
        cfg.optimizer = ScenarioConfig::Optimizer::Quantized;
    else if (opt == "greedy")
        cfg.optimizer = ScenarioConfig::Optimizer::Greedy;
    else if (opt == "exhaustive")
        cfg.optimizer = ScenarioConfig::Optimizer::Exhaustive;
    else
        throw ConfigError("key 'optimizer' must be quantized, greedy, or exhaustive");

    cfg.sweep_reoptimize = r.boolean("sweep.reoptimize", true);

    cfg.cut_start_deg = r.num("cut.start_deg", -90.0);
    cfg.cut_stop_deg = r.num("cut.stop_deg", 90.0);
    cfg.cut_step_deg = r.num("cut.step_deg", 0.25);
    cfg.cut_mask = r.str("cut.mask", "optimized");

    cfg.q_element = r.num("fields.q_element", 1.0);
    cfg.horn_q = r.num("link.horn_q", 49.0);

    cfg.out_mask = r.str("output.mask", "");
    cfg.out_summary = r.str("output.summary", "");
    cfg.out_csv = r.str("output.csv", "");

    r.reject_unknown();

    if (cfg.rows < 1 || cfg.cols < 1)
        throw ConfigError("array dimensions must be at least 1x1");
    if (!(cfg.period_x_m > 0.0) || !(cfg.period_y_m > 0.0))
        throw ConfigError("array period must be > 0");
    if (!(cfg.design_f_hz > 0.0)) throw ConfigError("design frequency must be > 0");
    if (!(cfg.band_start_hz < cfg.band_stop_hz))
        throw ConfigError("band start must be below band stop");
    if (cfg.band_points < 1) throw ConfigError("band must have at least one point");
    if (!(cfg.cut_step_deg > 0.0)) throw ConfigError("cut step must be > 0");
    if (cfg.cut_stop_deg < cfg.cut_start_deg)
        throw ConfigError("cut stop must be >= cut start");
    if (cfg.q_element < 0.0 || cfg.horn_q < 0.0)
        throw ConfigError("pattern exponents must be >= 0");

    return cfg;
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace ris
