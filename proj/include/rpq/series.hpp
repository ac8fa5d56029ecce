#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "rpq/kernel.hpp"

namespace rpq {

using Complex = std::complex<double>;

/// f(z) = a_0 + a_1 z + ... + a_N z^N with complex Taylor coefficients.
class TruncatedSeries {
 public:
  /// Throws DomainError on an empty or non-finite coefficient vector.
  explicit TruncatedSeries(std::vector<Complex> coeffs);

  static TruncatedSeries zero(int order);
  static TruncatedSeries monomial(int n, Complex c = 1.0);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(Complex s, const TruncatedSeries& f);

 private:
  std::vector<Complex> coeffs_;
};

enum class DerivativeMode {
  /// z^n -> R(p^{n-1}, q^{n-1}) (p^n - q^n)/(p^{n-1} - q^{n-1}) z^{n-1}
  Composite,
  /// z^n -> [n] z^{n-1}
  Canonical,
};

/// Dilation f(z) -> f(base z); P and Q are scale_op(., p) and scale_op(., q).
TruncatedSeries scale_op(const TruncatedSeries& f, double base);

/// Jagannathan-Srinivasa divided difference: z^n -> (p^n - q^n)/(p - q) z^{n-1}.
TruncatedSeries pq_derivative(const TruncatedSeries& f, double p, double q);

/// Monomial multiplier of the composite derivative. The n = 1 value is the
/// 0/0 case of the closed form and is taken as [1] = R(p, q).
double composite_multiplier(const DeformedContext& ctx, int n);

TruncatedSeries r_derivative(const DeformedContext& ctx, const TruncatedSeries& f, DerivativeMode mode);

/// (P - Q)^{-1} on series vanishing at the origin: a_n -> a_n / (p^n - q^n).
TruncatedSeries invert_P_minus_Q(const DeformedContext& ctx, const TruncatedSeries& f);

/// R(P, Q): a_n -> R(p^n, q^n) a_n; the constant term is annihilated.
TruncatedSeries r_multiplier_op(const DeformedContext& ctx, const TruncatedSeries& f);

/// sum_{n <= order} z^n / [n]!
TruncatedSeries deformed_exponential(const DeformedContext& ctx, int order);

/// (composite multiplier m_n, canonical value [n]). Equal pairs mean the
/// composite operator realizes A^dag A = [N] at level n.
std::pair<double, double> algebra_diagnostic(const DeformedContext& ctx, int n);

Complex eval_series(const TruncatedSeries& f, Complex z);

}  // namespace rpq
