#include "nrdcsk/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "nrdcsk/analysis.hpp"
#include "nrdcsk/chaos.hpp"

namespace nrdcsk::engine {

void Scenario::validate() const {
  modem.validate();
  jammer.validate();
  if (stop.target_errors < 1 || stop.max_bits < 1) {
    throw std::invalid_argument("StopRule: target_errors and max_bits >= 1");
  }
}

std::pair<double, double> wilson_interval(std::int64_t errors,
                                          std::int64_t bits, double z) {
  if (bits <= 0) return {0.0, 1.0};
  const double n = static_cast<double>(bits);
  const double phat = static_cast<double>(errors) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = phat + z2 / (2.0 * n);
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  return {std::max(0.0, (center - half) / denom),
          std::min(1.0, (center + half) / denom)};
}

namespace {

// Fully resolved per-run context: calibrated powers and fixed tone phases.
struct RunContext {
  ModemParams modem;
  JammerSpec jammer;
  LinkBudget budget;
  std::uint64_t seed = 0;
};

RunContext make_context(const Scenario& scenario) {
  RunContext ctx;
  ctx.modem = scenario.modem;
  ctx.jammer = scenario.jammer;
  ctx.seed = scenario.seed;
  const double jsr = scenario.jammer.kind == JammerKind::none
                         ? -std::numeric_limits<double>::infinity()
                         : scenario.jsr_db;
  ctx.budget = calibrate(scenario.ebn0_db, jsr, scenario.modem.beta);
  ctx.jammer.p_j = ctx.budget.p_j;
  if (ctx.jammer.kind == JammerKind::tj && ctx.jammer.tone_phases.empty()) {
    // Phases are held constant for the whole run; one draw per tone.
    Rng rng(derive_key(ctx.seed, ~0ull, Draw::tone_phase));
    ctx.jammer.tone_phases.resize(ctx.jammer.m);
    for (auto& th : ctx.jammer.tone_phases) {
      th = M_PI * rng.uniform_symmetric();
    }
  }
  return ctx;
}

bool simulate_bit(const RunContext& ctx, std::uint64_t bit_index) {
  Rng bit_rng(derive_key(ctx.seed, bit_index, Draw::bit_value));
  const int bit = bit_rng.uniform() < 0.5 ? +1 : -1;

  Rng chaos_rng(derive_key(ctx.seed, bit_index, Draw::chaos_seed));
  const auto seq = chaos::generate(chaos::draw_seed(chaos_rng),
                                   ctx.modem.distinct());
  const NrDcskFrame frame = modulate(bit, seq.samples, ctx.modem);

  const std::size_t frame_len = frame.samples.size();
  std::vector<double> jam;
  switch (ctx.jammer.kind) {
    case JammerKind::none:
      jam.assign(frame_len, 0.0);
      break;
    case JammerKind::bbj: {
      Rng rng(derive_key(ctx.seed, bit_index, Draw::jam_noise));
      jam = bbj_samples(ctx.jammer.p_j, frame_len, rng);
      break;
    }
    case JammerKind::ptj: {
      Rng rng(derive_key(ctx.seed, bit_index, Draw::jam_noise));
      jam = ptj_bit_samples(ctx.jammer.p_j, ctx.jammer.rho, frame_len, rng)
                .samples;
      break;
    }
    case JammerKind::tj:
      jam = tj_samples(ctx.jammer, bit_index * frame_len, frame_len,
                       ctx.modem.beta);
      break;
    case JammerKind::swj:
      // Global sample index keeps the sweep phase continuous across bits
      // and independent of worker partitioning.
      jam = swj_samples(ctx.jammer, bit_index * frame_len, frame_len,
                        ctx.modem.beta);
      break;
  }

  Rng noise_rng(derive_key(ctx.seed, bit_index, Draw::awgn));
  const auto received = apply_channel(frame.samples, jam, ctx.budget, noise_rng);
  return demodulate(received, ctx.modem).decoded_bit != bit;
}

// Bits are processed in fixed-size rounds over global bit-index ranges so
// the stopping decision (and hence the result) is worker-count invariant.
// Small enough that a stop target of a few hundred errors is not heavily
// overshot even at BERs near 1/2, large enough to amortize thread spawns.
constexpr std::int64_t kRoundBits = 1024;

std::int64_t run_round(const RunContext& ctx, std::uint64_t first,
                       std::int64_t count, int workers) {
  if (workers <= 1 || count < 2 * workers) {
    std::int64_t errors = 0;
    for (std::int64_t i = 0; i < count; ++i) {
      errors += simulate_bit(ctx, first + i) ? 1 : 0;
    }
    return errors;
  }
  std::vector<std::int64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const std::int64_t lo = count * w / workers;
    const std::int64_t hi = count * (w + 1) / workers;
    pool.emplace_back([&, w, lo, hi] {
      std::int64_t e = 0;
      for (std::int64_t i = lo; i < hi; ++i) {
        e += simulate_bit(ctx, first + i) ? 1 : 0;
      }
      partial[w] = e;
    });
  }
  for (auto& t : pool) t.join();
  std::int64_t errors = 0;
  for (auto e : partial) errors += e;
  return errors;
}

}  // namespace

BerEstimate run(const Scenario& scenario, int workers) {
  scenario.validate();
  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
  }
  const RunContext ctx = make_context(scenario);

  std::int64_t bits = 0;
  std::int64_t errors = 0;
  while (errors < scenario.stop.target_errors &&
         bits < scenario.stop.max_bits) {
    const std::int64_t round =
        std::min(kRoundBits, scenario.stop.max_bits - bits);
    errors += run_round(ctx, static_cast<std::uint64_t>(bits), round, workers);
    bits += round;
  }

  BerEstimate est;
  est.bits = bits;
  est.errors = errors;
  est.ber = static_cast<double>(errors) / static_cast<double>(bits);
  constexpr double kZ95 = 1.959963984540054;
  std::tie(est.ci_low, est.ci_high) = wilson_interval(errors, bits, kZ95);
  if (scenario.jammer.kind == JammerKind::none ||
      scenario.jammer.kind == JammerKind::bbj ||
      scenario.jammer.kind == JammerKind::ptj) {
    analysis::AnalysisPoint pt;
    pt.ebn0_db = scenario.ebn0_db;
    pt.jsr_db = scenario.jammer.kind == JammerKind::none
                    ? -std::numeric_limits<double>::infinity()
                    : scenario.jsr_db;
    pt.beta = scenario.modem.beta;
    pt.p = scenario.modem.p;
    pt.rho = scenario.jammer.kind == JammerKind::ptj ? scenario.jammer.rho : 1.0;
    est.analytic_ref = analysis::ber_ptj(pt);
  }
  return est;
}

bool is_sweep_axis(const std::string& name) {
  static const char* axes[] = {"ebn0_db", "jsr_db", "rho", "p", "m",
                               "f_start_norm", "sweep_time_ratio", "p_j"};
  return std::find_if(std::begin(axes), std::end(axes), [&](const char* a) {
           return name == a;
         }) != std::end(axes);
}

Scenario apply_axis(const Scenario& base, const std::string& axis,
                    double value) {
  Scenario s = base;
  if (axis == "ebn0_db") {
    s.ebn0_db = value;
  } else if (axis == "jsr_db") {
    s.jsr_db = value;
  } else if (axis == "rho") {
    s.jammer.rho = value;
  } else if (axis == "p") {
    s.modem.p = static_cast<int>(std::llround(value));
  } else if (axis == "m") {
    const int m = static_cast<int>(std::llround(value));
    if (static_cast<int>(base.jammer.normalized_tone_freqs.size()) < m) {
      throw std::invalid_argument("sweep: not enough tone frequencies for m");
    }
    s.jammer.m = m;
    s.jammer.normalized_tone_freqs.assign(
        base.jammer.normalized_tone_freqs.begin(),
        base.jammer.normalized_tone_freqs.begin() + m);
    if (!base.jammer.tone_phases.empty()) {
      if (static_cast<int>(base.jammer.tone_phases.size()) < m) {
        throw std::invalid_argument("sweep: not enough tone phases for m");
      }
      s.jammer.tone_phases.assign(base.jammer.tone_phases.begin(),
                                  base.jammer.tone_phases.begin() + m);
    }
  } else if (axis == "f_start_norm") {
    s.jammer.f_start_norm = value;
  } else if (axis == "sweep_time_ratio") {
    s.jammer.sweep_time_ratio = value;
  } else if (axis == "p_j") {
    // P_s = 1, so JSR in dB is just the jamming power in dB
    s.jsr_db = value > 0.0 ? 10.0 * std::log10(value)
                           : -std::numeric_limits<double>::infinity();
  } else {
    throw std::invalid_argument("sweep: unknown axis " + axis);
  }
  return s;
}

std::vector<BerEstimate> sweep(const Scenario& base, const std::string& axis,
                               const std::vector<double>& values,
                               int workers) {
  std::vector<BerEstimate> results;
  results.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    Scenario s = apply_axis(base, axis, values[i]);
    s.seed = derive_key(base.seed, i, Draw::sweep_point);
    results.push_back(run(s, workers));
  }
  return results;
}

}  // namespace nrdcsk::engine
