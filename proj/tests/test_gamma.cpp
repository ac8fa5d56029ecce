#include <cmath>
#include <utility>

#include "doctest.h"
#include "oracle.hpp"
#include "rpq/error.hpp"
#include "rpq/gamma.hpp"
#include "rpq/kernel.hpp"
#include "rpq/numbers.hpp"
#include "rpq/random.hpp"

using namespace rpq;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected rpq::Error");
  return ErrorCode::ConfigError;
}

KernelSpec inverse_minus_v(double p, double q) { return KernelSpec::laurent(p, q, {{-1, 0, 1}, {0, 1, -1}}); }

}  // namespace

TEST_CASE("gamma_log examples") {
  const auto diff = build_context(KernelSpec::difference(1.0, 0.5), 16);
  const GammaConfig cfg{diff};
  CHECK(gamma_log(cfg, 1.0) == 0.0);
  CHECK(gamma_log(cfg, 4.0) == doctest::Approx(std::log(0.328125)).epsilon(1e-14));

  const auto inv_number = [](oracle::Real x) {
    return oracle::laurent(oracle::inverse_minus_v(), std::pow(0.8L, x), std::pow(0.5L, x));
  };
  const std::pair<KernelSpec, oracle::Real> cases[] = {
      {KernelSpec::difference(1.0, 0.5), oracle::difference_number(1.0L, 0.5L, 2.5L)},
      {KernelSpec::jagannathan_srinivasa(0.9, 0.4), oracle::js_number(0.9L, 0.4L, 2.5L)},
      {inverse_minus_v(0.8, 0.5), inv_number(2.5L)},
  };
  for (const auto& [spec, lattice] : cases) {
    const auto ctx = build_context(spec, 16);
    const GammaConfig c{ctx};
    const double step = gamma_log(c, 3.5) - gamma_log(c, 2.5);
    CHECK(std::abs(step - static_cast<double>(std::log(lattice))) <= 1e-12);
  }
}

TEST_CASE("gamma_log against the product construction") {
  // x = n + d: log Gamma = d log [1] + sum_{j=0}^{n-2} log R(p^{1+d+j}, q^{1+d+j}).
  const oracle::Real p = 0.9L;
  const oracle::Real q = 0.4L;
  const auto ctx = build_context(KernelSpec::jagannathan_srinivasa(0.9, 0.4), 16);
  const GammaConfig cfg{ctx};
  for (const double x : {1.3, 2.75, 5.5, 9.01}) {
    const int n = static_cast<int>(std::floor(x));
    const oracle::Real d = x - n;
    oracle::Real expected = d * std::log(oracle::js_number(p, q, 1));
    for (int j = 0; j <= n - 2; ++j) {
      expected += std::log(oracle::js_number(p, q, 1 + d + j));
    }
    CHECK(gamma_log(cfg, x) == doctest::Approx(static_cast<double>(expected)).epsilon(1e-13));
  }
  // (0,1): one downward step from (1,2).
  const double x = 0.3;
  const double expected = static_cast<double>(0.3L * std::log(oracle::js_number(p, q, 1)) -
                                              std::log(oracle::js_number(p, q, 0.3L)));
  CHECK(gamma_log(cfg, x) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("gamma_log errors") {
  const auto ctx = build_context(KernelSpec::difference(1.0, 0.5), 8);
  CHECK(code_of([&] { gamma_log(GammaConfig{ctx}, 0.0); }) == ErrorCode::DomainError);
  CHECK(code_of([&] { gamma_log(GammaConfig{ctx}, -1.5); }) == ErrorCode::DomainError);
  CHECK(code_of([&] { gamma_log(GammaConfig{ctx}, 10.0); }) == ErrorCode::OutOfRange);
  const GammaConfig integer_only{ctx, GammaBaseMode::IntegerOnly};
  CHECK(gamma_log(integer_only, 3.0) == ctx.log_factorial(2));
  CHECK(code_of([&] { gamma_log(integer_only, 2.5); }) == ErrorCode::NonIntegerUnsupported);

  const auto synthetic = DeformedContext::from_log_numbers(KernelSpec::difference(1.0, 0.5), {0.1, 0.2, 0.3});
  CHECK(gamma_log(GammaConfig{synthetic}, 3.0) == doctest::Approx(0.3));
  CHECK(code_of([&] { gamma_log(GammaConfig{synthetic}, 2.5); }) == ErrorCode::NonIntegerUnsupported);

  // (1 - v)(v - 0.3)(v - 0.4) at p = 1, q = 0.5 is positive at v = 0.5^n but
  // negative at v = 0.5^1.5, which gamma_log(2.5) needs.
  const auto dipping = build_context(
      KernelSpec::laurent(1.0, 0.5, {{0, 3, -1.0}, {0, 2, 1.7}, {0, 1, -0.82}, {0, 0, 0.12}}), 8);
  CHECK_NOTHROW(gamma_log(GammaConfig{dipping}, 0.5));
  CHECK_NOTHROW(gamma_log(GammaConfig{dipping}, 5.0));
  CHECK(code_of([&] { gamma_log(GammaConfig{dipping}, 2.5); }) == ErrorCode::NonPositiveShiftedLattice);
}

TEST_CASE("recurrence_check examples") {
  const auto diff = build_context(KernelSpec::difference(1.0, 0.5), 16);
  CHECK(recurrence_check(GammaConfig{diff}, 1.0) <= 1e-12);
  CHECK(recurrence_check(GammaConfig{diff}, 0.25) <= 1e-12);
  const auto js = build_context(KernelSpec::jagannathan_srinivasa(0.9, 0.4), 16);
  CHECK(recurrence_check(GammaConfig{js}, 7.0) <= 1e-12);
}

TEST_CASE("integer consistency is bit-identical") {
  const auto ctx = build_context(inverse_minus_v(0.8, 0.5), 64);
  for (int n = 0; n <= 63; ++n) {
    CHECK(gamma_log(GammaConfig{ctx}, n + 1.0) == deformed_factorial(ctx, n).log_value());
  }
}

TEST_CASE("recurrence on random arguments") {
  for (const auto& spec : {KernelSpec::difference(1.0, 0.5), KernelSpec::jagannathan_srinivasa(0.9, 0.4),
                           inverse_minus_v(0.8, 0.5)}) {
    const auto ctx = build_context(spec, 64);
    SeededRng rng(29);
    for (int i = 0; i < 200; ++i) {
      const double x = rng.uniform(1e-9, 63.0);
      CHECK(recurrence_check(GammaConfig{ctx}, x) <= 1e-10);
    }
  }
}

TEST_CASE("gamma_log is nondecreasing on integers when [n] >= 1") {
  const auto ctx = build_context(KernelSpec::jagannathan_srinivasa(1.0, 0.5), 32);
  for (int n = 2; n <= 32; ++n) {
    CHECK(gamma_log(GammaConfig{ctx}, n + 1.0) >= gamma_log(GammaConfig{ctx}, static_cast<double>(n)));
  }
}

TEST_CASE("stirling_diagnostic") {
  const auto inv = build_context(inverse_minus_v(0.8, 0.5), 64);
  const GammaConfig cfg{inv};

  const auto single = stirling_diagnostic(cfg, 1.0, 1.0, {10, 10});
  CHECK(single.residuals.size() == 1);
  CHECK(single.stabilized);

  const auto diag = stirling_diagnostic(cfg, 1.0, 1.0, {10, 40});
  REQUIRE(diag.residuals.size() == 31);
  CHECK(diag.z.size() == 31);
  for (int k = 10; k <= 40; ++k) {
    // z_k = k + 1 is an integer, so log Gamma(z_k) = log [k]!.
    const auto number = [](oracle::Real x) {
      return oracle::laurent(oracle::inverse_minus_v(), std::pow(0.8L, x), std::pow(0.5L, x));
    };
    const oracle::Real z = k + 1;
    const oracle::Real log_lattice = std::log(number(k));
    const oracle::Real expected = oracle::log_factorial(number, k) - ((z - 0.5L) * log_lattice - z);
    CHECK(diag.residuals[k - 10] == doctest::Approx(static_cast<double>(expected)).epsilon(1e-11));
  }
  // The flag follows the stated rule on the upper half of the window.
  double lo = diag.residuals[15];
  double hi = lo;
  double max_abs = 0.0;
  double mean = 0.0;
  for (std::size_t i = 15; i < diag.residuals.size(); ++i) {
    lo = std::min(lo, diag.residuals[i]);
    hi = std::max(hi, diag.residuals[i]);
    max_abs = std::max(max_abs, std::abs(diag.residuals[i]));
    mean += diag.residuals[i];
  }
  mean /= 16.0;
  CHECK(diag.stabilized == (hi - lo <= 0.05 * (max_abs + 1.0)));
  CHECK(diag.c_estimate == doctest::Approx(std::exp(mean)).epsilon(1e-12));

  const auto diff = build_context(KernelSpec::difference(1.0, 0.5), 64);
  const auto collapsed = stirling_diagnostic(GammaConfig{diff}, 1.0, 1.0, {10, 40});
  CHECK_FALSE(collapsed.stabilized);

  CHECK(code_of([&] { stirling_diagnostic(cfg, 1.0, 1.0, {10, 70}); }) == ErrorCode::OutOfRange);
}
