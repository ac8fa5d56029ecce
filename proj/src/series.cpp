#include "rpq/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rpq/error.hpp"

namespace rpq {

namespace {

constexpr double kSubspaceTolerance = 1e-14;

void require_within_cache(const DeformedContext& ctx, const TruncatedSeries& f) {
  if (f.order() > ctx.order_cap()) {
    throw Error(ErrorCode::OutOfRange, "series order " + std::to_string(f.order()) +
                                           " exceeds cache " + std::to_string(ctx.order_cap()));
  }
}

template <class Op>
TruncatedSeries combine(const TruncatedSeries& a, const TruncatedSeries& b, Op op) {
  const int order = std::max(a.order(), b.order());
  std::vector<Complex> out(static_cast<std::size_t>(order + 1));
  for (int n = 0; n <= order; ++n) {
    const Complex x = n <= a.order() ? a[n] : Complex{};
    const Complex y = n <= b.order() ? b[n] : Complex{};
    out[static_cast<std::size_t>(n)] = op(x, y);
  }
  return TruncatedSeries(std::move(out));
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::DomainError, "series needs at least the constant coefficient");
  }
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorCode::DomainError, "series coefficient is not finite");
    }
  }
}

TruncatedSeries TruncatedSeries::zero(int order) {
  return TruncatedSeries(std::vector<Complex>(static_cast<std::size_t>(std::max(order, 0) + 1)));
}

TruncatedSeries TruncatedSeries::monomial(int n, Complex c) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(n + 1));
  coeffs.back() = c;
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return combine(a, b, [](Complex x, Complex y) { return x + y; });
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return combine(a, b, [](Complex x, Complex y) { return x - y; });
}

TruncatedSeries operator*(Complex s, const TruncatedSeries& f) {
  std::vector<Complex> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : out) {
    c *= s;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries scale_op(const TruncatedSeries& f, double base) {
  if (!(base > 0.0 && base <= 1.0)) {
    throw Error(ErrorCode::DomainError, "dilation base must lie in (0, 1]");
  }
  std::vector<Complex> out(f.coeffs().begin(), f.coeffs().end());
  for (int n = 0; n <= f.order(); ++n) {
    out[static_cast<std::size_t>(n)] *= std::pow(base, n);
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries pq_derivative(const TruncatedSeries& f, double p, double q) {
  if (p == q) {
    throw Error(ErrorCode::DegenerateParameters, "p and q coincide");
  }
  if (f.order() == 0) {
    return TruncatedSeries::zero(0);
  }
  std::vector<Complex> out(static_cast<std::size_t>(f.order()));
  for (int n = 1; n <= f.order(); ++n) {
    const double jackson = (std::pow(p, n) - std::pow(q, n)) / (p - q);
    out[static_cast<std::size_t>(n - 1)] = f[n] * jackson;
  }
  return TruncatedSeries(std::move(out));
}

double composite_multiplier(const DeformedContext& ctx, int n) {
  if (n < 1 || n > ctx.order_cap()) {
    throw Error(ErrorCode::OutOfRange, "composite multiplier index " + std::to_string(n));
  }
  if (n == 1) {
    return std::exp(ctx.log_number(1));
  }
  const double p = ctx.spec().p;
  const double q = ctx.spec().q;
  const double ratio = (std::pow(p, n) - std::pow(q, n)) / (std::pow(p, n - 1) - std::pow(q, n - 1));
  return std::exp(ctx.log_number(n - 1)) * ratio;
}

TruncatedSeries r_derivative(const DeformedContext& ctx, const TruncatedSeries& f, DerivativeMode mode) {
  require_within_cache(ctx, f);
  if (f.order() == 0) {
    return TruncatedSeries::zero(0);
  }
  std::vector<Complex> out(static_cast<std::size_t>(f.order()));
  for (int n = 1; n <= f.order(); ++n) {
    const double multiplier =
        mode == DerivativeMode::Composite ? composite_multiplier(ctx, n) : std::exp(ctx.log_number(n));
    out[static_cast<std::size_t>(n - 1)] = f[n] * multiplier;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries invert_P_minus_Q(const DeformedContext& ctx, const TruncatedSeries& f) {
  if (std::abs(f[0]) > kSubspaceTolerance) {
    throw Error(ErrorCode::NotInSubspace, "P - Q is only invertible on series with f(0) = 0");
  }
  const double p = ctx.spec().p;
  const double q = ctx.spec().q;
  std::vector<Complex> out(static_cast<std::size_t>(f.order() + 1));
  for (int n = 1; n <= f.order(); ++n) {
    out[static_cast<std::size_t>(n)] = f[n] / (std::pow(p, n) - std::pow(q, n));
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries r_multiplier_op(const DeformedContext& ctx, const TruncatedSeries& f) {
  require_within_cache(ctx, f);
  std::vector<Complex> out(static_cast<std::size_t>(f.order() + 1));
  for (int n = 1; n <= f.order(); ++n) {
    out[static_cast<std::size_t>(n)] = f[n] * std::exp(ctx.log_number(n));
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries deformed_exponential(const DeformedContext& ctx, int order) {
  if (order < 0 || order > ctx.order_cap()) {
    throw Error(ErrorCode::OutOfRange, "exponential order " + std::to_string(order));
  }
  std::vector<Complex> out(static_cast<std::size_t>(order + 1));
  for (int n = 0; n <= order; ++n) {
    out[static_cast<std::size_t>(n)] = std::exp(-ctx.log_factorial(n));
  }
  return TruncatedSeries(std::move(out));
}

std::pair<double, double> algebra_diagnostic(const DeformedContext& ctx, int n) {
  return {composite_multiplier(ctx, n), std::exp(ctx.log_number(n))};
}

Complex eval_series(const TruncatedSeries& f, Complex z) {
  Complex acc{};
  for (int n = f.order(); n >= 0; --n) {
    acc = acc * z + f[n];
  }
  return acc;
}

}  // namespace rpq
