#include "lrdband/empproc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lrdband/errors.hpp"
#include "lrdband/hermite.hpp"
#include "parallel.hpp"

namespace lrdband::empproc {

namespace {

// Weights c_l(x) / l! of the slow Hermite block, l = 1..lower_order_count.
std::vector<double> lower_block_weights(const gaussgen::LrdModel& model, double x) {
  const int count = hermite::lower_order_count(model.hurst);
  std::vector<double> weights(static_cast<std::size_t>(count));
  double factorial = 1.0;
  for (int l = 1; l <= count; ++l) {
    factorial *= static_cast<double>(l);
    weights[static_cast<std::size_t>(l - 1)] =
        hermite::hermite_coeff_closed(model.transform, l, x) / factorial;
  }
  return weights;
}

// sum_l weights[l-1] H_l(u) by the three-term recurrence.
double weighted_hermite_sum(double u, std::span<const double> weights) {
  double acc = 0.0;
  double prev = 1.0;  // H_0
  double cur = u;     // H_1
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i] * cur;
    const double next = u * cur - static_cast<double>(i + 1) * prev;
    prev = cur;
    cur = next;
  }
  return acc;
}

}  // namespace

std::vector<double> recover_driver(const gaussgen::TimeSeries& series,
                                   const gaussgen::LrdModel& model) {
  if (series.has_driver()) return series.driver;
  if (model.transform.is_identity()) return series.values;
  if (!model.transform.inverse) {
    throw std::invalid_argument("series has no driver and the transform has no inverse");
  }
  std::vector<double> driver(series.values.size());
  std::transform(series.values.begin(), series.values.end(), driver.begin(),
                 model.transform.inverse);
  return driver;
}

double empirical_cdf(const gaussgen::TimeSeries& series, double x) {
  const std::size_t n = series.size();
  if (n == 0) throw std::invalid_argument("empirical_cdf: series is empty");
  std::size_t count = 0;
  for (double v : series.values) count += (v <= x) ? 1 : 0;
  return static_cast<double>(count) / static_cast<double>(n);
}

double empirical_quantile(const gaussgen::TimeSeries& series, double p) {
  const std::size_t n = series.size();
  if (n == 0) throw std::invalid_argument("empirical_quantile: series is empty");
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("empirical_quantile: p must lie in (0, 1)");
  }
  const double pn = p * static_cast<double>(n);
  auto k = static_cast<std::size_t>(std::ceil(pn - 1e-9));
  k = std::clamp<std::size_t>(k, 1, n);
  std::vector<double> copy(series.values);
  std::nth_element(copy.begin(), copy.begin() + static_cast<std::ptrdiff_t>(k - 1), copy.end());
  return copy[k - 1];
}

double sequential_empirical_process(const gaussgen::TimeSeries& series,
                                    const std::function<double(double)>& cdf,
                                    double t, double x) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("sequential_empirical_process: t must lie in [0, 1]");
  }
  if (!cdf) throw std::invalid_argument("sequential_empirical_process: cdf is not callable");
  const auto upto =
      static_cast<std::size_t>(std::floor(t * static_cast<double>(series.size())));
  const double f = cdf(x);
  double acc = 0.0;
  for (std::size_t n = 0; n < upto; ++n) {
    acc += (series.values[n] <= x ? 1.0 : 0.0) - f;
  }
  return acc;
}

double lower_order_mean(std::span<const double> driver, const gaussgen::LrdModel& model,
                        double x) {
  if (driver.empty()) throw std::invalid_argument("lower_order_mean: driver is empty");
  const auto weights = lower_block_weights(model, x);
  double acc = 0.0;
  for (double u : driver) acc += weighted_hermite_sum(u, weights);
  return acc / static_cast<double>(driver.size());
}

HermiteDecomposition higher_order_residuals(const gaussgen::TimeSeries& series,
                                            const gaussgen::LrdModel& model, double x) {
  if (series.size() == 0) {
    throw std::invalid_argument("higher_order_residuals: series is empty");
  }
  const std::vector<double> driver = recover_driver(series, model);
  const auto weights = lower_block_weights(model, x);
  const double f = model.marginal_cdf(x);

  HermiteDecomposition decomp;
  decomp.x = x;
  decomp.truncation = static_cast<int>(weights.size());
  decomp.hurst = model.hurst;
  decomp.d_param = model.memory_d();
  decomp.residuals.resize(series.size());

  double lower_acc = 0.0;
  for (std::size_t n = 0; n < series.size(); ++n) {
    const double slow = weighted_hermite_sum(driver[n], weights);
    lower_acc += slow;
    decomp.residuals[n] = (series.values[n] <= x ? 1.0 : 0.0) - f - slow;
  }
  decomp.lower_mean = lower_acc / static_cast<double>(series.size());
  return decomp;
}

std::vector<double> sampling_distribution_samples(const gaussgen::LrdModel& model,
                                                  std::size_t length, std::size_t reps,
                                                  double x, std::uint64_t seed, int threads) {
  if (reps == 0) throw std::invalid_argument("sampling_distribution_samples: reps must be >= 1");
  model.validate();
  const double c1 = std::abs(hermite::hermite_coeff_closed(model.transform, 1, x));
  if (c1 == 0.0) {
    throw std::invalid_argument("sampling_distribution_samples: c_1(x) vanishes at this x");
  }
  const double f = model.marginal_cdf(x);
  const double scale = static_cast<double>(length) / gaussgen::exact_dn(model.hurst, length);
  const bool identity = model.transform.is_identity();

  std::vector<double> out(reps);
  detail::parallel_for(reps, threads, [&](std::size_t r) {
    gaussgen::TimeSeries series =
        gaussgen::generate_fgn(model.hurst, length, seed ^ static_cast<std::uint64_t>(r));
    std::size_t count = 0;
    if (identity) {
      for (double v : series.values) count += (v <= x) ? 1 : 0;
    } else {
      for (double u : series.driver) count += (model.transform.forward(u) <= x) ? 1 : 0;
    }
    const double fn = static_cast<double>(count) / static_cast<double>(length);
    out[r] = scale * (fn - f) / c1;
  });
  return out;
}

}  // namespace lrdband::empproc
