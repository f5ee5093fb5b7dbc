#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "nrdcsk/analysis.hpp"
#include "nrdcsk/config.hpp"
#include "nrdcsk/engine.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitRuntimeError = 3;

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw nrdcsk::cli::ConfigError("cannot open config file: " + path);
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void attach_analytic(nrdcsk::cli::ResultRow& row) {
  using nrdcsk::JammerKind;
  const auto& sc = row.tag.scenario;
  if (sc.jammer.kind != JammerKind::none &&
      sc.jammer.kind != JammerKind::bbj &&
      sc.jammer.kind != JammerKind::ptj) {
    return;
  }
  nrdcsk::analysis::AnalysisPoint pt;
  pt.ebn0_db = sc.ebn0_db;
  pt.jsr_db = sc.jammer.kind == JammerKind::none
                  ? -std::numeric_limits<double>::infinity()
                  : sc.jsr_db;
  pt.beta = sc.modem.beta;
  pt.p = sc.modem.p;
  pt.rho = sc.jammer.kind == JammerKind::ptj ? sc.jammer.rho : 1.0;
  row.estimate.analytic_ref = nrdcsk::analysis::ber_ptj(pt);
}

int do_run(const std::string& config_path, std::optional<std::uint64_t> seed,
           std::optional<int> workers, std::optional<std::string> out,
           bool simulate) {
  auto cfg = nrdcsk::cli::parse_config(read_file(config_path));
  if (seed) cfg.base.seed = *seed;
  if (workers) cfg.workers = *workers;
  if (out) cfg.out = *out;

  const auto plan = nrdcsk::cli::expand_plan(cfg);
  std::vector<nrdcsk::cli::ResultRow> rows;
  rows.reserve(plan.size());
  for (const auto& tagged : plan) {
    nrdcsk::cli::ResultRow row{tagged, {}};
    if (simulate) {
      row.estimate = nrdcsk::engine::run(tagged.scenario, cfg.workers);
    } else {
      attach_analytic(row);
    }
    rows.push_back(std::move(row));
    const auto& est = rows.back().estimate;
    if (simulate) {
      std::printf("%-40s bits=%lld errors=%lld ber=%.6g ci=[%.6g, %.6g]",
                  tagged.scenario_id.c_str(),
                  static_cast<long long>(est.bits),
                  static_cast<long long>(est.errors), est.ber, est.ci_low,
                  est.ci_high);
      if (est.analytic_ref && cfg.analysis_overlay) {
        std::printf(" analytic=%.6g", *est.analytic_ref);
      }
      std::printf("\n");
    } else if (est.analytic_ref) {
      std::printf("%-40s analytic=%.6g\n", tagged.scenario_id.c_str(),
                  *est.analytic_ref);
    } else {
      std::printf("%-40s analytic=n/a (Monte-Carlo only)\n",
                  tagged.scenario_id.c_str());
    }
  }
  nrdcsk::cli::emit_csv(rows, cfg.out, cfg.analysis_overlay);
  std::printf("wrote %zu rows to %s\n", rows.size(), cfg.out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NR-DCSK anti-jamming BER simulator and analyzer"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::optional<std::string> out;

  auto* run_cmd = app.add_subcommand("run", "simulate a config file");
  run_cmd->add_option("config", config_path, "JSON config file")->required();
  run_cmd->add_option("--seed", seed, "override the master seed");
  run_cmd->add_option("--workers", workers, "worker thread count");
  run_cmd->add_option("--out", out, "output CSV path");

  auto* analyze_cmd =
      app.add_subcommand("analyze", "closed-form BER only, no simulation");
  analyze_cmd->add_option("config", config_path, "JSON config file")
      ->required();
  analyze_cmd->add_option("--out", out, "output CSV path");

  double ebn0 = 15.0, jsr = 10.0;
  int beta = 200, p = 20;
  auto* opt_cmd =
      app.add_subcommand("optimal-rho", "jammer-optimal duty factor");
  opt_cmd->add_option("--ebn0", ebn0, "Eb/N0 in dB")->required();
  opt_cmd->add_option("--jsr", jsr, "JSR in dB")->required();
  opt_cmd->add_option("--beta", beta, "spreading factor")->required();
  opt_cmd->add_option("--p", p, "repetition count")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      return do_run(config_path, seed, workers, out, true);
    }
    if (analyze_cmd->parsed()) {
      return do_run(config_path, std::nullopt, std::nullopt, out, false);
    }
    const auto result = nrdcsk::analysis::optimal_rho(ebn0, jsr, beta, p);
    std::printf("rho_star=%.6f ber_star=%.8g\n", result.rho_star,
                result.ber_star);
    return 0;
  } catch (const nrdcsk::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
}
