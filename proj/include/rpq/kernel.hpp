#pragma once

#include <span>
#include <utility>
#include <vector>

namespace rpq {

enum class KernelKind {
  Difference,             // R(u,v) = u - v
  JagannathanSrinivasa,   // R(u,v) = (u - v) / (p - q)
  QNumber,                // JS kernel at p = 1, lattice values are q-numbers
  CustomLaurent,          // finite sum of c * u^s * v^t
};

struct LaurentTerm {
  int s = 0;
  int t = 0;
  double c = 0.0;
};

/// Deformation kernel R(u,v) together with the base pair (p, q).
///
/// Only finitely many Laurent coefficients are representable; the builtin
/// kinds are closed forms. Structural validity (0 < q < p <= 1, R(1,1) = 0)
/// is checked by build_context, not by the constructors.
struct KernelSpec {
  double p = 1.0;
  double q = 0.5;
  KernelKind kind = KernelKind::Difference;
  std::vector<LaurentTerm> laurent_terms;

  static KernelSpec difference(double p, double q);
  static KernelSpec jagannathan_srinivasa(double p, double q);
  static KernelSpec q_number(double q);
  static KernelSpec laurent(double p, double q, std::vector<LaurentTerm> terms);

  /// Maximal negative Laurent order l (0 for builtins).
  int ell() const;

  /// R(u, v) by direct substitution.
  double evaluate(double u, double v) const;

  /// R(p^x, q^x) for real x; at integer x this is the deformed number [x].
  double lattice(double x) const;
};

/// Throws ParameterDomain unless 0 < q < p <= 1 (and p = 1 for QNumber).
void validate_parameters(const KernelSpec& spec);

inline constexpr double kKernelOriginTolerance = 1e-12;

/// Validated kernel plus log-domain caches of [n] and [n]!.
///
/// Immutable after construction. log_number(n) is defined for 1 <= n <= N;
/// log_factorial(n) for 0 <= n <= N with log_factorial(0) == 0.
class DeformedContext {
 public:
  const KernelSpec& spec() const noexcept { return spec_; }
  int order_cap() const noexcept { return order_cap_; }

  /// True for contexts built from injected log values rather than a kernel.
  bool synthetic() const noexcept { return synthetic_; }

  double log_number(int n) const;
  double log_factorial(int n) const;

  /// Entry n-1 holds log [n].
  std::span<const double> log_numbers() const noexcept { return log_numbers_; }
  /// Entry n holds log [n]!.
  std::span<const double> log_factorials() const noexcept { return log_factorials_; }

  /// Builds a context whose lattice values are given directly: entry n-1 of
  /// `log_numbers` is taken as log [n]. Used to exercise growth regimes that
  /// no finite Laurent kernel reaches.
  static DeformedContext from_log_numbers(KernelSpec spec, std::vector<double> log_numbers);

 private:
  friend DeformedContext build_context(const KernelSpec& spec, int order_cap);

  DeformedContext(KernelSpec spec, std::vector<double> log_numbers, bool synthetic);

  KernelSpec spec_;
  int order_cap_ = 0;
  bool synthetic_ = false;
  std::vector<double> log_numbers_;
  std::vector<double> log_factorials_;
};

DeformedContext build_context(const KernelSpec& spec, int order_cap);

/// log R(p^n, q^n) exactly as cached; n = 0 is OutOfRange since [0] = 0.
double lattice_log_value(const DeformedContext& ctx, int n);

/// Finite-data surrogate for the bidisk convergence radius, with R1 = R2.
///
/// Each represented total degree K = s + t >= 1 contributes the constraint
/// |r_st|^(1/K) * R <= 1; the result is the largest R meeting all of them.
/// Only finitely many coefficients exist, so this is a heuristic rather than
/// the true limsup. Builtins return (+inf, +inf).
std::pair<double, double> bidisk_radius_estimate(const KernelSpec& spec);

}  // namespace rpq
