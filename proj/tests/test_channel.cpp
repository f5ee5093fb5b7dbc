#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <limits>
#include <vector>

#include "nrdcsk/channel.hpp"

using namespace nrdcsk;

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST_CASE("calibrate fixes e_b = 2*beta and derives n0, p_j") {
  const auto lb = calibrate(0.0, 5.0, 100);
  CHECK(lb.signal_power == 1.0);
  CHECK(lb.e_b == 200.0);
  CHECK(lb.n0 == doctest::Approx(200.0));
  CHECK(lb.n0 / 2.0 == doctest::Approx(100.0));
  CHECK(lb.p_j == doctest::Approx(std::pow(10.0, 0.5)).epsilon(1e-12));
}

TEST_CASE("calibrate limits: infinite SNR and jammer off") {
  const auto lb = calibrate(kInf, -kInf, 100);
  CHECK(lb.n0 == 0.0);
  CHECK(lb.p_j == 0.0);
  CHECK_THROWS_AS(calibrate(10.0, 0.0, 0), std::invalid_argument);
}

TEST_CASE("apply_channel is the identity with no noise and no jamming") {
  const auto lb = calibrate(kInf, -kInf, 2);
  const std::vector<double> frame{1.0, -2.0, 0.5, 0.0};
  const std::vector<double> zeros(4, 0.0);
  Rng rng(1);
  CHECK(apply_channel(frame, zeros, lb, rng) == frame);
}

TEST_CASE("apply_channel adds the jamming exactly when noiseless") {
  const auto lb = calibrate(kInf, 0.0, 2);
  const std::vector<double> frame{1.0, -2.0, 0.5, 0.0};
  const std::vector<double> jam{0.1, 0.2, -0.3, 4.0};
  Rng rng(2);
  const auto out = apply_channel(frame, jam, lb, rng);
  for (int i = 0; i < 4; ++i) {
    CHECK(out[i] - frame[i] == doctest::Approx(jam[i]));
  }
}

TEST_CASE("apply_channel rejects mismatched lengths") {
  const auto lb = calibrate(10.0, 0.0, 2);
  Rng rng(3);
  CHECK_THROWS_AS(
      apply_channel(std::vector<double>(4), std::vector<double>(3), lb, rng),
      std::invalid_argument);
}

TEST_CASE("noise variance is n0/2") {
  LinkBudget lb;
  lb.n0 = 2.0;
  const std::size_t n = 1'000'000;
  const std::vector<double> zeros(n, 0.0);
  Rng rng(4);
  const auto out = apply_channel(zeros, zeros, lb, rng);
  double sum2 = 0.0;
  for (const double x : out) sum2 += x * x;
  CHECK(sum2 / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("reference-half and information-half noise are independent") {
  LinkBudget lb;
  lb.n0 = 2.0;
  const std::size_t beta = 1'000'000;
  const std::vector<double> zeros(2 * beta, 0.0);
  Rng rng(5);
  const auto out = apply_channel(zeros, zeros, lb, rng);
  double corr = 0.0;
  for (std::size_t i = 0; i < beta; ++i) corr += out[i] * out[i + beta];
  corr /= beta;  // both halves have unit variance
  CHECK(std::abs(corr) < 0.01);
}
