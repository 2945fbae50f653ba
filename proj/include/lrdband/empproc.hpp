#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lrdband/gaussgen.hpp"

namespace lrdband::empproc {

/// Split of the centered indicators 1{X_n <= x} - F(x) at one point x into
/// the slow Hermite block (orders 1..truncation) and the residual series
/// handed to the long-run variance estimator. Residuals are defined by
/// subtraction, so indicator - F - L - residual == 0 holds exactly per n.
struct HermiteDecomposition {
  double x = 0.0;
  double lower_mean = 0.0;          // (1/N) sum_n L_n(x)
  std::vector<double> residuals;    // S_n(x) with the series tail folded in
  int truncation = 0;               // highest order inside L
  double hurst = 0.0;
  double d_param = 0.0;             // 2 - 2 hurst
};

/// F_N(x) = (1/N) #{n : X_n <= x}; right-continuous.
double empirical_cdf(const gaussgen::TimeSeries& series, double x);

/// Left-continuous generalized inverse of F_N: the ceil(pN)-th order
/// statistic, p in (0, 1).
double empirical_quantile(const gaussgen::TimeSeries& series, double p);

/// sum_{n <= floor(Nt)} (1{X_n <= x} - F(x)) for t in [0, 1].
double sequential_empirical_process(const gaussgen::TimeSeries& series,
                                    const std::function<double(double)>& cdf,
                                    double t, double x);

/// The latent Gaussian driver of a series: as recorded, or recovered
/// through the transform inverse (identity: the values themselves).
std::vector<double> recover_driver(const gaussgen::TimeSeries& series,
                                   const gaussgen::LrdModel& model);

/// (1/N) sum_n sum_{l=1..lower_order_count(H)} c_l(x)/l! H_l(xi_n) with
/// closed-form coefficients taken from the model's transform.
double lower_order_mean(std::span<const double> driver,
                        const gaussgen::LrdModel& model, double x);

/// Builds the decomposition at x. The driver is taken from the series or
/// recovered through the transform inverse (identity: driver = values).
HermiteDecomposition higher_order_residuals(const gaussgen::TimeSeries& series,
                                            const gaussgen::LrdModel& model, double x);

/// reps independent draws of (N/d_N) (F_N(x) - F(x)) / |c_1(x)| with the
/// exact normalizer d_N = N^H; approaches a standard normal for small H.
/// Replication r uses seed ^ r; output order is by replication index.
std::vector<double> sampling_distribution_samples(const gaussgen::LrdModel& model,
                                                  std::size_t length, std::size_t reps,
                                                  double x, std::uint64_t seed,
                                                  int threads = 0);

}  // namespace lrdband::empproc
