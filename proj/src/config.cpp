#include "nrdcsk/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace nrdcsk::cli {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Shortest round-trip formatting so axis values stay readable ("0.3").
std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

double num_or_inf(const json& v, const std::string& path) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  throw ConfigError(path + ": expected a number or \"inf\"/\"-inf\"");
}

double get_num(const json& section, const std::string& section_name,
               const char* key, double fallback) {
  if (!section.contains(key)) return fallback;
  const auto& v = section[key];
  if (!v.is_number()) {
    throw ConfigError(section_name + "." + key + ": expected a number");
  }
  return v.get<double>();
}

std::int64_t get_int(const json& section, const std::string& section_name,
                     const char* key, std::int64_t fallback) {
  if (!section.contains(key)) return fallback;
  const auto& v = section[key];
  if (!v.is_number_integer()) {
    throw ConfigError(section_name + "." + key + ": expected an integer");
  }
  return v.get<std::int64_t>();
}

std::vector<double> get_num_list(const json& section,
                                 const std::string& section_name,
                                 const char* key) {
  std::vector<double> out;
  if (!section.contains(key)) return out;
  const auto& v = section[key];
  if (!v.is_array()) {
    throw ConfigError(section_name + "." + key + ": expected an array");
  }
  for (const auto& e : v) {
    if (!e.is_number()) {
      throw ConfigError(section_name + "." + key + ": expected numbers");
    }
    out.push_back(e.get<double>());
  }
  return out;
}

SweepAxis parse_axis(const json& node, const std::string& path) {
  SweepAxis axis;
  if (!node.is_object() || !node.contains("axis") ||
      !node["axis"].is_string()) {
    throw ConfigError(path + ".axis: expected a string");
  }
  axis.axis = node["axis"].get<std::string>();
  if (!engine::is_sweep_axis(axis.axis)) {
    throw ConfigError(path + ".axis: unknown axis \"" + axis.axis + "\"");
  }
  axis.values = get_num_list(node, path, "values");
  if (!node.contains("values")) {
    throw ConfigError(path + ".values: required");
  }
  return axis;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("config: top level must be an object");
  }

  RunConfig cfg;
  auto& sc = cfg.base;

  const json modem = doc.value("modem", json::object());
  sc.modem.beta = static_cast<int>(get_int(modem, "modem", "beta", 200));
  sc.modem.p = static_cast<int>(get_int(modem, "modem", "p", 1));
  if (sc.modem.beta < 1 || sc.modem.p < 1) {
    throw ConfigError("modem: beta and p must be positive");
  }
  if (sc.modem.beta % sc.modem.p != 0) {
    throw ConfigError("modem: beta mod p must be 0 (beta=" +
                      std::to_string(sc.modem.beta) +
                      ", p=" + std::to_string(sc.modem.p) + ")");
  }

  const json jam = doc.value("jammer", json::object());
  const std::string kind_name =
      jam.contains("kind") ? jam["kind"].get<std::string>() : "none";
  try {
    sc.jammer.kind = jammer_kind_from_string(kind_name);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("jammer.kind: ") + e.what());
  }
  sc.jammer.rho = get_num(jam, "jammer", "rho", 1.0);
  sc.jammer.m = static_cast<int>(get_int(jam, "jammer", "m", 1));
  sc.jammer.normalized_tone_freqs =
      get_num_list(jam, "jammer", "normalized_tone_freqs");
  sc.jammer.tone_phases = get_num_list(jam, "jammer", "tone_phases");
  sc.jammer.f_start_norm = get_num(jam, "jammer", "f_start_norm", 0.0);
  sc.jammer.f_stop_norm = get_num(jam, "jammer", "f_stop_norm", 0.0);
  sc.jammer.sweep_time_ratio = get_num(jam, "jammer", "sweep_time_ratio", 1.0);
  sc.jammer.sweep_phase = get_num(jam, "jammer", "sweep_phase", 0.0);
  if (sc.jammer.kind == JammerKind::tj &&
      sc.jammer.normalized_tone_freqs.empty()) {
    throw ConfigError("jammer.normalized_tone_freqs: required for kind tj");
  }
  try {
    sc.jammer.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("jammer: ") + e.what());
  }

  const json chan = doc.value("channel", json::object());
  sc.ebn0_db = chan.contains("ebn0_db")
                   ? num_or_inf(chan["ebn0_db"], "channel.ebn0_db")
                   : 10.0;
  sc.jsr_db = chan.contains("jsr_db")
                  ? num_or_inf(chan["jsr_db"], "channel.jsr_db")
                  : 0.0;

  if (doc.contains("sweep") && !doc["sweep"].is_null()) {
    const json& sw = doc["sweep"];
    if (sw.is_array()) {
      for (std::size_t i = 0; i < sw.size(); ++i) {
        cfg.sweeps.push_back(
            parse_axis(sw[i], "sweep[" + std::to_string(i) + "]"));
      }
    } else {
      cfg.sweeps.push_back(parse_axis(sw, "sweep"));
    }
  }

  const json run = doc.value("run", json::object());
  sc.seed = static_cast<std::uint64_t>(get_int(run, "run", "seed", 1));
  sc.stop.target_errors = get_int(run, "run", "target_errors", 100);
  sc.stop.max_bits = get_int(run, "run", "max_bits", 100'000'000);
  cfg.workers = static_cast<int>(get_int(run, "run", "workers", 0));
  if (run.contains("out")) {
    if (!run["out"].is_string()) {
      throw ConfigError("run.out: expected a string");
    }
    cfg.out = run["out"].get<std::string>();
  }
  if (run.contains("analysis_overlay")) {
    if (!run["analysis_overlay"].is_boolean()) {
      throw ConfigError("run.analysis_overlay: expected a boolean");
    }
    cfg.analysis_overlay = run["analysis_overlay"].get<bool>();
  }
  try {
    sc.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }

  // Every sweep cell must itself validate; catch bad values up front.
  for (const auto& tagged : expand_plan(cfg)) {
    try {
      tagged.scenario.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError("sweep cell " + tagged.scenario_id + ": " + e.what());
    }
  }
  return cfg;
}

std::string canonical_config(const RunConfig& cfg) {
  ordered_json doc;
  const auto& sc = cfg.base;
  doc["modem"] = {{"beta", sc.modem.beta}, {"p", sc.modem.p}};

  ordered_json jam;
  jam["kind"] = to_string(sc.jammer.kind);
  switch (sc.jammer.kind) {
    case JammerKind::ptj:
      jam["rho"] = sc.jammer.rho;
      break;
    case JammerKind::tj:
      jam["m"] = sc.jammer.m;
      jam["normalized_tone_freqs"] = sc.jammer.normalized_tone_freqs;
      if (!sc.jammer.tone_phases.empty()) {
        jam["tone_phases"] = sc.jammer.tone_phases;
      }
      break;
    case JammerKind::swj:
      jam["f_start_norm"] = sc.jammer.f_start_norm;
      jam["f_stop_norm"] = sc.jammer.f_stop_norm;
      jam["sweep_time_ratio"] = sc.jammer.sweep_time_ratio;
      jam["sweep_phase"] = sc.jammer.sweep_phase;
      break;
    default:
      break;
  }
  doc["jammer"] = jam;

  ordered_json chan;
  if (std::isinf(sc.ebn0_db)) {
    chan["ebn0_db"] = fmt(sc.ebn0_db);
  } else {
    chan["ebn0_db"] = sc.ebn0_db;
  }
  if (sc.jammer.kind != JammerKind::none) {
    if (std::isinf(sc.jsr_db)) {
      chan["jsr_db"] = fmt(sc.jsr_db);
    } else {
      chan["jsr_db"] = sc.jsr_db;
    }
  }
  doc["channel"] = chan;

  if (!cfg.sweeps.empty()) {
    ordered_json axes = ordered_json::array();
    for (const auto& s : cfg.sweeps) {
      axes.push_back({{"axis", s.axis}, {"values", s.values}});
    }
    doc["sweep"] = axes;
  }

  doc["run"] = {{"seed", sc.seed},
                {"target_errors", sc.stop.target_errors},
                {"max_bits", sc.stop.max_bits},
                {"workers", cfg.workers},
                {"out", cfg.out},
                {"analysis_overlay", cfg.analysis_overlay}};
  return doc.dump(2) + "\n";
}

std::vector<TaggedScenario> expand_plan(const RunConfig& cfg) {
  std::vector<TaggedScenario> plan;
  if (cfg.sweeps.empty()) {
    plan.push_back({"single", cfg.base});
    return plan;
  }
  std::size_t cells = 1;
  for (const auto& s : cfg.sweeps) cells *= s.values.size();
  plan.reserve(cells);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    engine::Scenario sc = cfg.base;
    std::string id;
    // row-major: the last axis varies fastest
    std::size_t rem = cell;
    std::vector<std::size_t> idx(cfg.sweeps.size());
    for (std::size_t a = cfg.sweeps.size(); a-- > 0;) {
      idx[a] = rem % cfg.sweeps[a].values.size();
      rem /= cfg.sweeps[a].values.size();
    }
    for (std::size_t a = 0; a < cfg.sweeps.size(); ++a) {
      const double v = cfg.sweeps[a].values[idx[a]];
      sc = engine::apply_axis(sc, cfg.sweeps[a].axis, v);
      if (!id.empty()) id += ";";
      id += cfg.sweeps[a].axis + "=" + fmt(v);
    }
    sc.seed = derive_key(cfg.base.seed, cell, Draw::sweep_point);
    plan.push_back({std::move(id), std::move(sc)});
  }
  return plan;
}

std::string csv_string(const std::vector<ResultRow>& rows,
                       bool analysis_overlay) {
  std::ostringstream out;
  out << "scenario_id,jammer_kind,beta,p,ebn0_db,jsr_db,rho,m_tones,"
         "f_start_norm,f_stop_norm,sweep_time_ratio,bits,errors,ber,"
         "ci_low,ci_high,analytic_ber\n";
  for (const auto& row : rows) {
    const auto& sc = row.tag.scenario;
    const auto& est = row.estimate;
    const auto kind = sc.jammer.kind;
    out << row.tag.scenario_id << ',' << to_string(kind) << ','
        << sc.modem.beta << ',' << sc.modem.p << ',' << fmt(sc.ebn0_db) << ',';
    if (kind != JammerKind::none) out << fmt(sc.jsr_db);
    out << ',';
    if (kind == JammerKind::ptj) out << fmt(sc.jammer.rho);
    out << ',';
    if (kind == JammerKind::tj) out << sc.jammer.m;
    out << ',';
    if (kind == JammerKind::swj) out << fmt(sc.jammer.f_start_norm);
    out << ',';
    if (kind == JammerKind::swj) out << fmt(sc.jammer.f_stop_norm);
    out << ',';
    if (kind == JammerKind::swj) out << fmt(sc.jammer.sweep_time_ratio);
    out << ',';
    if (est.bits > 0) {
      out << est.bits << ',' << est.errors << ',' << fmt(est.ber) << ','
          << fmt(est.ci_low) << ',' << fmt(est.ci_high);
    } else {
      out << ",,,,";
    }
    out << ',';
    if (analysis_overlay && est.analytic_ref) {
      out << fmt(*est.analytic_ref);
    }
    out << '\n';
  }
  return out.str();
}

void emit_csv(const std::vector<ResultRow>& rows, const std::string& path,
              bool analysis_overlay) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("emit_csv: cannot open " + path);
  }
  file << csv_string(rows, analysis_overlay);
  if (!file) {
    throw std::runtime_error("emit_csv: write failed for " + path);
  }
}

}  // namespace nrdcsk::cli
