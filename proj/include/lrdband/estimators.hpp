#pragma once

#include <cstddef>
#include <span>

namespace lrdband::estimators {

struct LrvEstimate {
  double value = 0.0;      // sigma^2 hat, >= 0 after truncation
  int bandwidth = 1;
  int max_lag = 0;         // largest lag with nonzero kernel weight
  bool truncated = false;  // true when a negative total was clipped to 0
};

/// Biased (divisor N) sample autocovariance at the given lag; symmetric in
/// the lag sign. Requires N >= 2 and |lag| < N.
double sample_autocovariance(std::span<const double> series, long lag);

/// Bartlett-kernel long-run variance
/// sigma^2 = sum_{|j| < b} (1 - |j|/b) gamma_hat(j); negative totals are
/// truncated to 0 and flagged. Requires 1 <= bandwidth <= N-1.
LrvEstimate bartlett_lrv(std::span<const double> series, int bandwidth);

/// max(1, floor(N^{1/3})); requires N >= 8.
int default_bandwidth(std::size_t length);

/// Rescaled-range Hurst estimate: per-block R/S over a dyadic grid of block
/// sizes 16, 32, ..., <= N/2, averaged across blocks, slope of
/// log(avg R/S) on log(m) by least squares, clamped to (0.01, 0.99).
/// Blocks with zero standard deviation are skipped; fewer than two usable
/// block sizes raise an estimation error. Requires N >= 32.
double rs_hurst(std::span<const double> series);

}  // namespace lrdband::estimators
