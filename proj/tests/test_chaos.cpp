#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "nrdcsk/chaos.hpp"

using namespace nrdcsk;

TEST_CASE("logistic_next maps the defining values") {
  CHECK(chaos::logistic_next(0.0) == 1.0);
  CHECK(chaos::logistic_next(1.0) == -1.0);
  CHECK(chaos::logistic_next(-1.0) == -1.0);
  CHECK(chaos::logistic_next(0.3) == doctest::Approx(0.82).epsilon(1e-15));
}

TEST_CASE("logistic_next rejects inputs outside [-1, 1]") {
  CHECK_THROWS_AS(chaos::logistic_next(1.0001), std::domain_error);
  CHECK_THROWS_AS(chaos::logistic_next(-2.0), std::domain_error);
}

TEST_CASE("generate with burn_in 0 starts at the scaled seed") {
  const auto seq = chaos::generate(0.1, 10, 0);
  CHECK(seq.samples.size() == 10);
  CHECK(seq.samples[0] == doctest::Approx(chaos::kNormScale * 0.1));
  CHECK(seq.normalized);
  // trajectory follows the map
  double x = 0.1;
  for (const double s : seq.samples) {
    CHECK(s == doctest::Approx(chaos::kNormScale * x).epsilon(1e-14));
    x = chaos::logistic_next(x);
  }
}

TEST_CASE("generate rejects invalid seeds") {
  CHECK_THROWS_AS(chaos::generate(1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(chaos::generate(-1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(chaos::generate(1.5, 10), std::invalid_argument);
  CHECK_THROWS_AS(chaos::generate(0.5, 10), std::invalid_argument);
}

TEST_CASE("generate is deterministic") {
  const auto a = chaos::generate(0.1234, 1000, 50);
  const auto b = chaos::generate(0.1234, 1000, 50);
  CHECK(a.samples == b.samples);
}

TEST_CASE("normalized samples stay within [-sqrt(2), sqrt(2)]") {
  const auto seq = chaos::generate(0.37, 100000);
  for (const double s : seq.samples) {
    CHECK(std::abs(s) <= chaos::kNormScale + 1e-12);
  }
}

TEST_CASE("moment statistics at 1e6 samples") {
  const std::size_t n = 1'000'000;
  const auto seq = chaos::generate(0.1, n);
  double sum = 0.0, sum2 = 0.0, sum4 = 0.0;
  for (const double s : seq.samples) {
    sum += s;
    sum2 += s * s;
    sum4 += s * s * s * s;
  }
  const double mean = sum / n;
  const double m2 = sum2 / n;
  const double var_x2 = sum4 / n - m2 * m2;
  CHECK(std::abs(mean) < 0.01);
  CHECK(std::abs(m2 - 1.0) < 0.01);
  CHECK(std::abs(var_x2 - 0.5) < 0.02);
}

TEST_CASE("draw_seed respects the guard bands") {
  Rng rng(42);
  for (int i = 0; i < 10000; ++i) {
    const double s = chaos::draw_seed(rng);
    CHECK(std::abs(s) < 1.0);
    CHECK(std::abs(s - 0.5) >= 1e-6);
    CHECK(std::abs(s) >= 1e-6);
    CHECK_NOTHROW(chaos::generate(s, 1, 0));
  }
}
