#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "rpq/error.hpp"
#include "rpq/kernel.hpp"
#include "rpq/norms.hpp"
#include "rpq/random.hpp"
#include "rpq/series.hpp"

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

std::vector<Complex> coeffs_of(const TruncatedSeries& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

/// sum_{n>=1} |a_n| [n] r^n for the difference kernel, in long double.
double oracle_norm_difference(const TruncatedSeries& f, double p, double q, double r) {
  oracle::Real sum = 0;
  for (int n = 1; n <= f.order(); ++n) {
    sum += std::abs(f[n]) * oracle::difference_number(p, q, n) * std::pow(static_cast<oracle::Real>(r), n);
  }
  return static_cast<double>(sum);
}

}  // namespace

TEST_CASE("weighted_norm examples") {
  const auto ctx = build_context(KernelSpec::difference(1.0, 0.5), 64);
  CHECK(weighted_norm(ctx, TruncatedSeries({1.0}), 1.0) == 0.0);
  CHECK(weighted_norm(ctx, TruncatedSeries::monomial(1), 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(weighted_norm(ctx, TruncatedSeries({0.0, 1.0, 1.0}), 1.0) == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(code_of([&] { weighted_norm(ctx, TruncatedSeries::monomial(1), 0.0); }) == ErrorCode::DomainError);
  CHECK(code_of([&] { weighted_norm(ctx, TruncatedSeries::monomial(65), 1.0); }) == ErrorCode::OutOfRange);

  SeededRng rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto f = random_polynomial(rng, 40);
    CHECK(weighted_norm(ctx, f, 0.9) == doctest::Approx(oracle_norm_difference(f, 1.0, 0.5, 0.9)).epsilon(1e-13));
  }
}

TEST_CASE("weighted norm axioms modulo constants") {
  const auto ctx = build_context(KernelSpec::jagannathan_srinivasa(0.9, 0.3), 32);
  CHECK(weighted_norm(ctx, TruncatedSeries({3.0, 0.0, 0.0}), 1.0) == 0.0);
  CHECK(weighted_norm(ctx, TruncatedSeries({3.0, 0.0, 1e-30}), 1.0) > 0.0);
  SeededRng rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto f = random_polynomial(rng, 32);
    const auto g = random_polynomial(rng, 20);
    const Complex s(rng.uniform(-3, 3), rng.uniform(-3, 3));
    const double nf = weighted_norm(ctx, f, 0.7);
    CHECK(weighted_norm(ctx, s * f, 0.7) == doctest::Approx(std::abs(s) * nf).epsilon(1e-12));
    CHECK(weighted_norm(ctx, f + g, 0.7) <= (nf + weighted_norm(ctx, g, 0.7)) * (1 + 1e-12));
    CHECK(weighted_norm(ctx, f, 0.5) <= weighted_norm(ctx, f, 0.7));
    CHECK(nf > 0.0);
  }
}

TEST_CASE("coefficient_bound_check") {
  const auto ctx = build_context(KernelSpec::difference(1.0, 0.5), 32);
  for (int n = 1; n <= 5; ++n) {
    const auto report = coefficient_bound_check(ctx, TruncatedSeries::monomial(n, {0.3, -0.4}), 1.3);
    CHECK(report.passed());
    CHECK(std::abs(report.worst_margin) <= 1e-15);
  }
  const auto zero = coefficient_bound_check(ctx, TruncatedSeries::zero(5), 1.0);
  CHECK(zero.passed());
  CHECK(zero.worst_margin == 0.0);

  SeededRng rng(7);
  BoundCheckReport total;
  for (int t = 0; t < 500; ++t) {
    merge_into(total, coefficient_bound_check(ctx, random_polynomial(rng, rng.uniform_int(1, 32)), 1.0));
  }
  CHECK(total.passed());
  CHECK(total.trials == 500);
  // Equality cases may round to a margin of a few ulps below zero.
  CHECK(total.worst_margin >= -kCoefficientBoundRelTol);
}

TEST_CASE("derivative estimate m! |a_m| <= m! ||f|| / ([m] r^m)") {
  const auto ctx = build_context(KernelSpec::difference(1.0, 0.5), 16);
  SeededRng rng(8);
  for (int t = 0; t < 50; ++t) {
    const auto f = random_polynomial(rng, 16);
    const double r = 0.8;
    const double norm = weighted_norm(ctx, f, r);
    CHECK(coefficient_bound_check(ctx, f, r).passed());
    for (int m = 1; m <= 16; ++m) {
      const double m_fact = std::tgamma(m + 1.0);
      const double bound = m_fact * norm / (static_cast<double>(oracle::difference_number(1.0L, 0.5L, m)) *
                                            std::pow(r, m));
      CHECK(m_fact * std::abs(f[m]) <= bound * (1 + 1e-12));
    }
  }
}

TEST_CASE("sup_disk_bound_check") {
  const auto ctx = build_context(KernelSpec::difference(1.0, 0.5), 32);
  const auto single = sup_disk_bound_check(ctx, TruncatedSeries::monomial(1), 1.0, 0.5, 256);
  CHECK(single.passed());
  // Observed sup 0.5; bound = ||z|| * sum_n (0.5)^n / [n] with ||z|| = 0.5.
  oracle::Real series = 0;
  for (int n = 1; n <= 32; ++n) {
    series += std::pow(0.5L, n) / oracle::difference_number(1.0L, 0.5L, n);
  }
  CHECK(single.worst_margin == doctest::Approx(static_cast<double>(0.5L * series - 0.5L)).epsilon(1e-12));
  CHECK(single.worst_margin >= 0.0);

  const auto zero = sup_disk_bound_check(ctx, TruncatedSeries::zero(4), 1.0, 0.5, 64);
  CHECK(zero.passed());
  CHECK(zero.worst_margin == 0.0);

  SeededRng rng(9);
  BoundCheckReport total;
  for (int t = 0; t < 200; ++t) {
    const auto f = random_polynomial(rng, rng.uniform_int(1, 16));
    const auto report = sup_disk_bound_check(ctx, f, 1.0, 0.5, 256);
    // The sampled sup agrees with a brute-force circle maximum.
    const double observed = oracle::circle_max(coeffs_of(f), 0.5, 256);
    CHECK(sampled_circle_sup(f, 0.5, 256) == doctest::Approx(observed).epsilon(1e-12));
    merge_into(total, report);
  }
  CHECK(total.passed());

  CHECK(code_of([&] { sup_disk_bound_check(ctx, TruncatedSeries::monomial(1), 1.0, 1.5, 64); }) ==
        ErrorCode::PreconditionViolated);
  CHECK(code_of([&] { sup_disk_bound_check(ctx, TruncatedSeries::monomial(1), 1.0, 0.5, 4); }) ==
        ErrorCode::PreconditionViolated);
}

TEST_CASE("cauchy_hadamard_radius") {
  const auto js = build_context(KernelSpec::jagannathan_srinivasa(1.0, 0.5), 200);
  const TruncatedSeries ones(std::vector<Complex>(201, 1.0));
  const double paper = cauchy_hadamard_radius(js, ones, RadiusMode::Paper, 32);
  CHECK(paper >= 1.9);
  CHECK(paper <= 2.1);
  // Oracle: 1 / max_{k in tail} ([k]!)^{-1/k}.
  oracle::Real worst = 0;
  for (int k = 169; k <= 200; ++k) {
    const auto lf = oracle::log_factorial([](oracle::Real x) { return oracle::js_number(1.0L, 0.5L, x); }, k);
    worst = std::max(worst, std::exp(-lf / k));
  }
  CHECK(paper == doctest::Approx(static_cast<double>(1 / worst)).epsilon(1e-12));

  CHECK(cauchy_hadamard_radius(js, ones, RadiusMode::Classical, 32) == doctest::Approx(1.0).epsilon(0.01));
  CHECK(std::isinf(cauchy_hadamard_radius(js, TruncatedSeries({1.0, 2.0, 0.0, 0.0, 0.0, 0.0}), RadiusMode::Paper, 4)));

  std::vector<Complex> exp_coeffs(201);
  for (int k = 0; k <= 200; ++k) {
    exp_coeffs[static_cast<std::size_t>(k)] = std::exp(-std::lgamma(k + 1.0));
  }
  CHECK(cauchy_hadamard_radius(js, TruncatedSeries(exp_coeffs), RadiusMode::Classical, 32) >= 20.0);

  CHECK(code_of([&] { cauchy_hadamard_radius(js, ones, RadiusMode::Paper, 3); }) == ErrorCode::WindowTooSmall);
  CHECK(code_of([&] { cauchy_hadamard_radius(js, TruncatedSeries::monomial(5), RadiusMode::Paper, 8); }) ==
        ErrorCode::WindowTooSmall);
}

TEST_CASE("seminorm") {
  const SeminormFamily fam{{1.0, 1.0}, {1.0, 0.5}};
  CHECK(seminorm(fam, 1, TruncatedSeries({1.0})) == 1.0);
  CHECK(seminorm(fam, 2, TruncatedSeries::monomial(2)) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  CHECK(seminorm(fam, 1, TruncatedSeries::zero(6)) == 0.0);
  CHECK_THROWS_AS(seminorm(fam, 0, TruncatedSeries({1.0})), Error);
  CHECK_THROWS_AS(seminorm(fam, 3, TruncatedSeries({1.0})), Error);
}

TEST_CASE("difference-kernel operator-norm bound") {
  CHECK(difference_kernel_operator_bound(1.0, 0.4, 0.8) == doctest::Approx(2.5).epsilon(1e-15));
  const auto ctx = build_context(KernelSpec::difference(1.0, 0.5), 16);

  // f = z: ||d z||_r = p - q = 0.5 against 2.5 rho = 2.
  const auto single = operator_norm_inequality_single(ctx, TruncatedSeries::monomial(1), 0.4, 0.8);
  CHECK(single.passed());
  CHECK(single.worst_margin == doctest::Approx(2.5 * 0.8 - 0.5).epsilon(1e-12));

  const auto report = operator_norm_inequality_check(ctx, 0.4, 0.8, 200, 16, 0);
  CHECK(report.passed());
  CHECK(report.trials == 200);
  CHECK(report.worst_margin > 0.0);

  // One random polynomial against brute-force sampled norms.
  SeededRng rng(42);
  const auto f = random_polynomial(rng, 16);
  const auto df = r_derivative(ctx, f, DerivativeMode::Composite);
  const double lhs = oracle::circle_max(coeffs_of(df), 0.4, 256);
  const double rhs = 2.5 * oracle::circle_max(coeffs_of(f), 0.8, 256);
  const auto one = operator_norm_inequality_single(ctx, f, 0.4, 0.8, 256);
  CHECK(one.worst_margin == doctest::Approx(rhs - lhs).epsilon(1e-9));

  CHECK(code_of([&] { operator_norm_inequality_check(ctx, 0.8, 0.8, 5, 8, 0); }) ==
        ErrorCode::PreconditionViolated);
  const auto js = build_context(KernelSpec::jagannathan_srinivasa(1.0, 0.5), 16);
  CHECK(code_of([&] { operator_norm_inequality_check(js, 0.4, 0.8, 5, 8, 0); }) ==
        ErrorCode::PreconditionViolated);
}

TEST_CASE("seeded checks are reproducible") {
  const auto ctx = build_context(KernelSpec::difference(1.0, 0.5), 16);
  const auto a = operator_norm_inequality_check(ctx, 0.4, 0.8, 50, 16, 1234);
  const auto b = operator_norm_inequality_check(ctx, 0.4, 0.8, 50, 16, 1234);
  CHECK(a.worst_margin == b.worst_margin);
  CHECK(a.witness == b.witness);
}
