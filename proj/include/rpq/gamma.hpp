#pragma once

#include <vector>

#include "rpq/kernel.hpp"

namespace rpq {

enum class GammaBaseMode { Interpolated, IntegerOnly };

struct GammaConfig {
  const DeformedContext& context;
  GammaBaseMode base_mode = GammaBaseMode::Interpolated;
};

/// log Gamma_R(x) for real x > 0.
///
/// Integer arguments return the cached log [x-1]! unchanged. For x = n + d
/// with d in (0,1), the value on [1,2) is the log-linear interpolation
/// d * log [1], continued upward by multiplying shifted lattice values
/// R(p^{1+d+j}, q^{1+d+j}) and downward onto (0,1) by one division.
/// Only the recurrence and the integer identity are contractual; the shape
/// on [1,2) is a modelling choice.
double gamma_log(const GammaConfig& cfg, double x);

/// |log Gamma_R(x+1) - log Gamma_R(x) - log R(p^x, q^x)|.
double recurrence_check(const GammaConfig& cfg, double x);

struct KWindow {
  int first = 1;
  int last = 1;

  int size() const noexcept { return last - first + 1; }
};

struct StirlingDiagnostic {
  double alpha_i = 1.0;
  double beta_i = 1.0;
  KWindow k_window;
  std::vector<double> z;             // z_k = alpha_i k + beta_i
  std::vector<double> gamma_logs;    // log Gamma_R(z_k)
  std::vector<double> log_lattice;   // log R(p^k, q^k)
  std::vector<double> residuals;     // D_k
  bool stabilized = false;
  double c_estimate = 0.0;
};

/// Residuals D_k = log Gamma_R(z_k) - [(z_k - 1/2) log R(p^k,q^k) - z_k] over
/// the window. `stabilized` holds when the spread of D_k over the upper half
/// of the window is at most 0.05 * (max |D_k| + 1); c_estimate is exp of the
/// upper-half mean.
StirlingDiagnostic stirling_diagnostic(const GammaConfig& cfg, double alpha_i, double beta_i, KWindow window);

}  // namespace rpq
