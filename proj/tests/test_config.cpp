#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "nrdcsk/config.hpp"
#include "nrdcsk/engine.hpp"

using namespace nrdcsk;
using cli::parse_config;

TEST_CASE("minimal document fills defaults") {
  const auto cfg = parse_config(R"({
    "modem": {"beta": 200, "p": 10},
    "sweep": {"axis": "ebn0_db", "values": [5, 10, 15]}
  })");
  CHECK(cfg.base.modem.beta == 200);
  CHECK(cfg.base.modem.p == 10);
  CHECK(cfg.base.jammer.kind == JammerKind::none);
  CHECK(cfg.base.seed == 1);
  CHECK(cfg.base.stop.target_errors == 100);
  CHECK(cfg.base.stop.max_bits == 100'000'000);
  CHECK(cfg.workers == 0);
  CHECK(cfg.analysis_overlay);
  REQUIRE(cfg.sweeps.size() == 1);
  CHECK(cfg.sweeps[0].values == std::vector<double>{5, 10, 15});
}

TEST_CASE("beta mod p violations are named") {
  const std::string doc = R"({"modem": {"beta": 200, "p": 7}})";
  CHECK_THROWS_WITH_AS(parse_config(doc),
                       doctest::Contains("beta mod p"), cli::ConfigError);
}

TEST_CASE("malformed JSON and bad values give config errors") {
  CHECK_THROWS_AS(parse_config("{"), cli::ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"modem": {"beta": "x"}})"),
                  cli::ConfigError);
  CHECK_THROWS_AS(
      parse_config(R"({"jammer": {"kind": "laser"}})"), cli::ConfigError);
  CHECK_THROWS_AS(
      parse_config(R"({"jammer": {"kind": "ptj", "rho": 0.0}})"),
      cli::ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"jammer": {"kind": "tj"}})"),
                  cli::ConfigError);
  CHECK_THROWS_AS(
      parse_config(R"({"sweep": {"axis": "nope", "values": [1]}})"),
      cli::ConfigError);
}

TEST_CASE("two-axis sweep expands to the full grid") {
  // the rho x P plan of the PTJ experiment: 3 x 3 = 9 cells
  const auto cfg = parse_config(R"({
    "modem": {"beta": 200, "p": 1},
    "jammer": {"kind": "ptj", "rho": 1.0},
    "channel": {"ebn0_db": 10, "jsr_db": 5},
    "sweep": [
      {"axis": "rho", "values": [0.3, 0.5, 1.0]},
      {"axis": "p", "values": [1, 5, 20]}
    ]
  })");
  const auto plan = cli::expand_plan(cfg);
  REQUIRE(plan.size() == 9);
  CHECK(plan[0].scenario_id == "rho=0.3;p=1");
  CHECK(plan[0].scenario.jammer.rho == 0.3);
  CHECK(plan[0].scenario.modem.p == 1);
  CHECK(plan[8].scenario_id == "rho=1;p=20");
  CHECK(plan[8].scenario.modem.p == 20);
  // every cell has its own sub-seed
  CHECK(plan[0].scenario.seed != plan[1].scenario.seed);
}

TEST_CASE("infinite Eb/N0 round-trips through the canonical form") {
  const auto cfg = parse_config(R"({"channel": {"ebn0_db": "inf"}})");
  CHECK(std::isinf(cfg.base.ebn0_db));
  const auto again = parse_config(cli::canonical_config(cfg));
  CHECK(std::isinf(again.base.ebn0_db));
}

TEST_CASE("canonical config round-trips") {
  const auto cfg = parse_config(R"({
    "modem": {"beta": 120, "p": 6},
    "jammer": {"kind": "swj", "f_start_norm": 1.5, "f_stop_norm": 12,
               "sweep_time_ratio": 0.5, "sweep_phase": 0.25},
    "channel": {"ebn0_db": 12, "jsr_db": 0},
    "sweep": {"axis": "sweep_time_ratio", "values": [0.125, 0.5, 4, 8]},
    "run": {"seed": 99, "target_errors": 250, "max_bits": 1000000,
            "workers": 4, "out": "swj.csv", "analysis_overlay": false}
  })");
  const std::string canon = cli::canonical_config(cfg);
  const auto cfg2 = parse_config(canon);
  CHECK(cli::canonical_config(cfg2) == canon);
  CHECK(cfg2.base.jammer.f_start_norm == 1.5);
  CHECK(cfg2.base.seed == 99);
  CHECK(cfg2.workers == 4);
  CHECK_FALSE(cfg2.analysis_overlay);
}

TEST_CASE("csv layout: header, ordering, and inapplicable fields") {
  const auto cfg = parse_config(R"({
    "modem": {"beta": 40, "p": 4},
    "jammer": {"kind": "bbj"},
    "channel": {"ebn0_db": 8, "jsr_db": 5},
    "sweep": {"axis": "ebn0_db", "values": [6, 8, 10]},
    "run": {"seed": 3, "target_errors": 20, "max_bits": 50000}
  })");
  const auto plan = cli::expand_plan(cfg);
  std::vector<cli::ResultRow> rows;
  for (const auto& tagged : plan) {
    rows.push_back({tagged, engine::run(tagged.scenario, 2)});
  }
  const std::string csv = cli::csv_string(rows, true);

  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "scenario_id,jammer_kind,beta,p,ebn0_db,jsr_db,rho,m_tones,"
        "f_start_norm,f_stop_norm,sweep_time_ratio,bits,errors,ber,"
        "ci_low,ci_high,analytic_ber");
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    ++n;
    CHECK(line.find("bbj") != std::string::npos);
    // rho, m_tones, and the swj columns must be empty
    CHECK(line.find(",,,") != std::string::npos);
    // analytic overlay is populated for bbj
    CHECK(line.back() != ',');
  }
  CHECK(n == 3);
  CHECK(csv.find("ebn0_db=6,") == csv.find("ebn0_db=6"));  // axis order kept
  CHECK(csv.find("ebn0_db=6") < csv.find("ebn0_db=8"));
  CHECK(csv.find("ebn0_db=8") < csv.find("ebn0_db=10"));
}

TEST_CASE("tj rows leave analytic_ber empty") {
  const auto cfg = parse_config(R"({
    "modem": {"beta": 40, "p": 4},
    "jammer": {"kind": "tj", "m": 1, "normalized_tone_freqs": [1.7]},
    "channel": {"ebn0_db": 10, "jsr_db": 5}
  })");
  const auto plan = cli::expand_plan(cfg);
  REQUIRE(plan.size() == 1);
  cli::ResultRow row{plan[0], engine::run(plan[0].scenario, 2)};
  CHECK_FALSE(row.estimate.analytic_ref.has_value());
  const std::string csv = cli::csv_string({row}, true);
  const auto last_line = csv.substr(csv.find('\n') + 1);
  CHECK(last_line.find("tj") != std::string::npos);
  CHECK(last_line[last_line.size() - 2] == ',');  // trailing empty column
}

TEST_CASE("identical config and seed give byte-identical csv files") {
  const auto cfg = parse_config(R"({
    "modem": {"beta": 40, "p": 4},
    "jammer": {"kind": "bbj"},
    "channel": {"ebn0_db": 8, "jsr_db": 5},
    "run": {"seed": 11, "target_errors": 20, "max_bits": 50000}
  })");
  std::string csvs[2];
  for (auto& csv : csvs) {
    const auto plan = cli::expand_plan(cfg);
    std::vector<cli::ResultRow> rows;
    for (const auto& tagged : plan) {
      rows.push_back({tagged, engine::run(tagged.scenario, 4)});
    }
    csv = cli::csv_string(rows, true);
  }
  CHECK(csvs[0] == csvs[1]);
}
