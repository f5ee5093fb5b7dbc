#pragma once

#include <cmath>
#include <cstdint>

namespace nrdcsk {

// splitmix64 finalizer; used both as a hash and as the stream function.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Purpose tags for the seeding contract: every random draw in a simulation
// is keyed by (master seed, bit index, purpose), so results do not depend
// on worker count or scheduling.
enum class Draw : std::uint64_t {
  bit_value = 1,
  chaos_seed = 2,
  jam_noise = 3,
  awgn = 4,
  tone_phase = 5,
  sweep_point = 6,
};

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

constexpr std::uint64_t derive_key(std::uint64_t master, std::uint64_t index,
                                   Draw purpose) {
  std::uint64_t h = mix64(master + kGolden);
  h = mix64(h ^ mix64(index + kGolden));
  return mix64(h ^ mix64(static_cast<std::uint64_t>(purpose) * kGolden));
}

// Counter-based generator: output i is a hash of (key, i). Cheap to seed,
// so one instance per (bit, purpose) is the normal usage.
class Rng {
 public:
  explicit Rng(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGolden); }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in (-1, 1)
  double uniform_symmetric() { return 2.0 * uniform() - 1.0; }

  // standard normal via Box-Muller; pairs are cached
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] so the log is finite
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace nrdcsk
