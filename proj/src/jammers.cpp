#include "nrdcsk/jammers.hpp"

#include <cmath>
#include <stdexcept>

namespace nrdcsk {

std::string to_string(JammerKind kind) {
  switch (kind) {
    case JammerKind::none: return "none";
    case JammerKind::bbj: return "bbj";
    case JammerKind::ptj: return "ptj";
    case JammerKind::tj: return "tj";
    case JammerKind::swj: return "swj";
  }
  return "none";
}

JammerKind jammer_kind_from_string(const std::string& name) {
  if (name == "none") return JammerKind::none;
  if (name == "bbj") return JammerKind::bbj;
  if (name == "ptj") return JammerKind::ptj;
  if (name == "tj") return JammerKind::tj;
  if (name == "swj") return JammerKind::swj;
  throw std::invalid_argument("unknown jammer kind: " + name);
}

std::int64_t JammerSpec::sweep_period_samples(int beta) const {
  return std::llround(2.0 * beta * sweep_time_ratio);
}

void JammerSpec::validate() const {
  if (p_j < 0.0) {
    throw std::invalid_argument("jammer: p_j must be nonnegative");
  }
  switch (kind) {
    case JammerKind::none:
    case JammerKind::bbj:
      break;
    case JammerKind::ptj:
      if (!(rho > 0.0 && rho <= 1.0)) {
        throw std::invalid_argument("jammer: rho must be in (0, 1]");
      }
      break;
    case JammerKind::tj:
      if (m < 1) {
        throw std::invalid_argument("jammer: m must be >= 1");
      }
      if (static_cast<int>(normalized_tone_freqs.size()) != m) {
        throw std::invalid_argument(
            "jammer: normalized_tone_freqs must have m entries");
      }
      if (!tone_phases.empty() &&
          static_cast<int>(tone_phases.size()) != m) {
        throw std::invalid_argument(
            "jammer: tone_phases must be empty or have m entries");
      }
      break;
    case JammerKind::swj:
      if (!(sweep_time_ratio > 0.0)) {
        throw std::invalid_argument("jammer: sweep_time_ratio must be > 0");
      }
      break;
  }
}

std::vector<double> bbj_samples(double p_j, std::size_t count, Rng& rng) {
  if (p_j < 0.0) {
    throw std::invalid_argument("bbj_samples: p_j must be nonnegative");
  }
  std::vector<double> out(count);
  const double sigma = std::sqrt(p_j);
  for (auto& v : out) v = sigma * rng.gaussian();
  return out;
}

PtjBit ptj_bit_samples(double p_j, double rho, std::size_t frame_len,
                       Rng& rng) {
  if (!(rho > 0.0 && rho <= 1.0)) {
    throw std::invalid_argument("ptj_bit_samples: rho must be in (0, 1]");
  }
  PtjBit bit;
  bit.jammed = rng.uniform() < rho;
  if (bit.jammed) {
    bit.samples = bbj_samples(p_j / rho, frame_len, rng);
  } else {
    bit.samples.assign(frame_len, 0.0);
  }
  return bit;
}

std::vector<double> tj_samples(const JammerSpec& spec, std::uint64_t k_begin,
                               std::size_t count, int beta) {
  if (spec.kind != JammerKind::tj) {
    throw std::invalid_argument("tj_samples: spec is not a tone jammer");
  }
  spec.validate();
  if (static_cast<int>(spec.tone_phases.size()) != spec.m) {
    throw std::invalid_argument("tj_samples: tone phases unresolved");
  }
  const double amp = std::sqrt(2.0 * spec.p_j / spec.m);
  std::vector<double> out(count, 0.0);
  for (int mi = 0; mi < spec.m; ++mi) {
    const double w = M_PI * spec.normalized_tone_freqs[mi] / beta;
    const double phase = spec.tone_phases[mi];
    for (std::size_t i = 0; i < count; ++i) {
      const double k = static_cast<double>(k_begin + i);
      out[i] += amp * std::sin(w * k + phase);
    }
  }
  return out;
}

std::vector<double> swj_samples(const JammerSpec& spec, std::uint64_t k_begin,
                                std::size_t count, int beta) {
  if (spec.kind != JammerKind::swj) {
    throw std::invalid_argument("swj_samples: spec is not a sweep jammer");
  }
  spec.validate();
  const double amp = std::sqrt(2.0 * spec.p_j);
  const double w = M_PI * spec.f_start_norm / beta;
  const double q = M_PI * spec.sweep_rate() / (4.0 * beta * beta);
  const std::int64_t period = spec.sweep_period_samples(beta);
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double k =
        static_cast<double>((k_begin + i) % static_cast<std::uint64_t>(period));
    out[i] = amp * std::sin(w * k + q * k * k + spec.sweep_phase);
  }
  return out;
}

}  // namespace nrdcsk
