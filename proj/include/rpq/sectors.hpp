#pragma once

#include <span>

#include "rpq/kernel.hpp"
#include "rpq/report.hpp"
#include "rpq/series.hpp"

namespace rpq {

/// ||z||_R = sup_{n>=1} (|z| / R(p^n,q^n))^{1/n}.
///
/// The sup runs over the cached indices plus the n -> infinity limit, which
/// is read off the fitted tail growth: exp(-beta_hat) when log [n] is
/// asymptotically linear, 0 when it is superlinear, +inf when it decays
/// superlinearly. Depends on z only through |z| and is nondecreasing in it.
class DeformedPseudonorm {
 public:
  /// Throws OutOfRange when the cache is too short for the tail fit.
  explicit DeformedPseudonorm(const DeformedContext& ctx);

  double operator()(Complex z) const;
  double tail_limit() const noexcept { return tail_limit_; }

  /// Sup of |z| over the deformed disc {||z||_R < radius}: min_n [n] radius^n
  /// when radius exceeds the tail limit, 0 otherwise.
  double disc_euclidean_radius(double radius) const;

 private:
  const DeformedContext* ctx_;
  double tail_limit_ = 0.0;
};

double deformed_pseudonorm(const DeformedContext& ctx, Complex z);
bool in_deformed_disc(const DeformedContext& ctx, Complex z, double radius);

inline constexpr double kBorelAbsTol = 1e-9;
inline constexpr double kBorelInconclusiveBand = 0.01;

struct PolarGrid {
  int radial = 64;
  int angular = 64;
  double max_radius = 1.0;  // ignored where the region fixes its own extent
};

/// Samples Re f over the deformed disc of radius big_r on a polar grid to get
/// M_R, then tests
///   |f(z)| <= 2r/(R-r) M_R + (R+r)/(R-r) |f(0)|
/// at every grid point of the deformed disc of radius r. M_R is a sampled
/// under-estimate, so excesses within 1% of |M_R| are inconclusive.
BoundCheckReport borel_caratheodory_check(const DeformedContext& ctx, const TruncatedSeries& f, double big_r,
                                          double r, PolarGrid grid = {});

enum class RhoMode {
  PerIndex,    // opening theta * rho(ceil |z|)
  Sup,         // opening theta * max_k rho(k)
  FixedOmega,  // opening pi / (2 omega)
};

struct SectorSpec {
  double theta = 1.0;
  RhoMode rho_mode = RhoMode::Sup;
  double omega = 1.0;
};

/// rho(k) = log R(p^k, q^k) / k.
double log_rate(const DeformedContext& ctx, int k);
double sup_log_rate(const DeformedContext& ctx);

struct SectorMembership {
  bool inside = false;
  /// False when rho <= 0 makes the sector empty at this radius.
  bool rate_positive = true;
  double half_opening = 0.0;
};

SectorMembership sector_membership(const DeformedContext& ctx, const SectorSpec& spec, Complex z);

struct GrowthEnvelope {
  double c = 1.0;
  double a = 1.0;
  double exponent = 1.0;
};

inline constexpr double kPhragmenLindelofRelTol = 1e-6;

/// Max of |f| over the boundary samples of the sector truncated at
/// grid.max_radius: both rays at the grid radii and the outer arc.
double sampled_sector_boundary_max(const DeformedContext& ctx, const SectorSpec& spec, const TruncatedSeries& f,
                                   PolarGrid grid);

/// Checks |f| <= M (1 + 1e-6) at interior grid points of the truncated
/// sector. Inconclusive, without asserting, when the growth gate
/// (exponent < pi / (2 theta sup rho), or exponent < omega for fixed-omega
/// sectors), the boundary premise, or the growth envelope fails.
BoundCheckReport pl_interior_check(const DeformedContext& ctx, const SectorSpec& spec, const TruncatedSeries& f,
                                   const GrowthEnvelope& envelope, double bound_m, PolarGrid grid);

/// max_i (1 / alpha_i + lambda).
double anisotropic_order(std::span<const double> alphas, double lambda);

}  // namespace rpq
