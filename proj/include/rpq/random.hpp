#pragma once

#include <cstdint>
#include <random>

#include "rpq/series.hpp"

namespace rpq {

/// mt19937_64 with a fixed bits-to-double mapping, so a seed reproduces the
/// same values on every standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

/// Coefficients with real and imaginary parts uniform in [-1, 1).
TruncatedSeries random_polynomial(SeededRng& rng, int order, bool vanish_at_origin = false);

}  // namespace rpq
