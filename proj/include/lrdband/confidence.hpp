#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lrdband/gaussgen.hpp"

namespace lrdband::confidence {

enum class Method { asymptotic, hoa };
enum class RegionKind { band, quantile_interval };

const char* method_name(Method m);

struct InputsDigest {
  std::size_t length = 0;
  double hurst = 0.0;
  bool hurst_estimated = false;
  std::vector<double> sigma;  // per-x LRV-based sigma(x) (hoa only)
};

/// A pointwise confidence band over x_grid or a single quantile interval
/// (then x_grid/lower/upper/center hold one entry and x_grid[0] = p).
struct ConfidenceRegion {
  RegionKind kind = RegionKind::band;
  Method method = Method::asymptotic;
  double level = 0.0;  // 1 - alpha
  std::vector<double> x_grid;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> center;
  InputsDigest digest;
};

/// Band from the limiting distribution of the empirical process:
/// F_N(x) -+ (d_N/N) |c_1(x)| z_{1-a/2} with d_N = asymptotic_dn, clamped
/// to [0, 1].
ConfidenceRegion asymptotic_band(const gaussgen::TimeSeries& series, double hurst,
                                 double alpha, std::vector<double> x_grid);

/// Band from the higher-order approximation: centered at F_N(x) minus the
/// slow-block mean, with sqrt(N)-scale Gaussian critical values. `sigma`
/// holds sigma(x) (standard-deviation scale) per grid point and must be
/// positive everywhere.
ConfidenceRegion hoa_band(const gaussgen::TimeSeries& series, const gaussgen::LrdModel& model,
                          double alpha, std::vector<double> x_grid,
                          std::span<const double> sigma);

/// Quantile interval from the delta method applied to the asymptotic
/// distribution; for Gaussian marginals the density ratio is 1.
ConfidenceRegion asymptotic_quantile_ci(const gaussgen::TimeSeries& series, double hurst,
                                        double alpha, double p);

/// Quantile interval from the higher-order approximation; sigma_at_q is
/// sigma evaluated at the true quantile (standard-deviation scale).
ConfidenceRegion hoa_quantile_ci(const gaussgen::TimeSeries& series,
                                 const gaussgen::LrdModel& model, double alpha, double p,
                                 double sigma_at_q);

/// Bartlett-kernel sigma(x) estimates from the residual series of
/// higher_order_residuals, one per grid point (sqrt of the LRV, 0 when the
/// estimate was truncated).
std::vector<double> estimate_band_sigma(const gaussgen::TimeSeries& series,
                                        const gaussgen::LrdModel& model,
                                        std::span<const double> x_grid, int bandwidth);

/// Same estimate at the true quantile F^{-1}(p).
double estimate_sigma_at_quantile(const gaussgen::TimeSeries& series,
                                  const gaussgen::LrdModel& model, double p, int bandwidth);

}  // namespace lrdband::confidence
