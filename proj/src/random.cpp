#include "rpq/random.hpp"

#include <vector>

namespace rpq {

double SeededRng::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

int SeededRng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

TruncatedSeries random_polynomial(SeededRng& rng, int order, bool vanish_at_origin) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(order + 1));
  for (auto& c : coeffs) {
    const double re = rng.uniform(-1.0, 1.0);
    const double im = rng.uniform(-1.0, 1.0);
    c = Complex(re, im);
  }
  if (vanish_at_origin) {
    coeffs.front() = 0.0;
  }
  return TruncatedSeries(std::move(coeffs));
}

}  // namespace rpq
