#include "lrdband/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lrdband/errors.hpp"

namespace lrdband::estimators {

namespace {

double mean_of(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Centered autocovariance at lag j >= 0 given the precomputed mean.
double autocov_at(std::span<const double> v, std::size_t j, double mean) {
  const std::size_t n = v.size();
  double acc = 0.0;
  for (std::size_t i = 0; i + j < n; ++i) acc += (v[i] - mean) * (v[i + j] - mean);
  return acc / static_cast<double>(n);
}

}  // namespace

double sample_autocovariance(std::span<const double> series, long lag) {
  const std::size_t n = series.size();
  if (n < 2) throw std::invalid_argument("sample_autocovariance: need at least 2 observations");
  const auto j = static_cast<std::size_t>(lag < 0 ? -lag : lag);
  if (j >= n) throw std::invalid_argument("sample_autocovariance: |lag| must be < N");
  return autocov_at(series, j, mean_of(series));
}

LrvEstimate bartlett_lrv(std::span<const double> series, int bandwidth) {
  const std::size_t n = series.size();
  if (n < 2) throw std::invalid_argument("bartlett_lrv: need at least 2 observations");
  if (bandwidth < 1 || static_cast<std::size_t>(bandwidth) > n - 1) {
    throw std::invalid_argument("bartlett_lrv: bandwidth must lie in [1, N-1]");
  }
  const double mean = mean_of(series);
  const double b = static_cast<double>(bandwidth);
  double total = autocov_at(series, 0, mean);
  int max_lag = 0;
  for (int j = 1; j < bandwidth; ++j) {
    total += 2.0 * (1.0 - static_cast<double>(j) / b) * autocov_at(series, static_cast<std::size_t>(j), mean);
    max_lag = j;
  }
  LrvEstimate estimate;
  estimate.bandwidth = bandwidth;
  estimate.max_lag = max_lag;
  estimate.truncated = total < 0.0;
  estimate.value = std::max(total, 0.0);
  return estimate;
}

int default_bandwidth(std::size_t length) {
  if (length < 8) throw std::invalid_argument("default_bandwidth: length must be >= 8");
  const int b = static_cast<int>(std::floor(std::cbrt(static_cast<double>(length)) + 1e-9));
  return std::max(1, b);
}

double rs_hurst(std::span<const double> series) {
  const std::size_t n = series.size();
  if (n < 32) throw std::invalid_argument("rs_hurst: need at least 32 observations");

  std::vector<double> log_m;
  std::vector<double> log_rs;
  for (std::size_t m = 16; m <= n / 2; m *= 2) {
    const std::size_t blocks = n / m;
    double acc = 0.0;
    std::size_t used = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::span<const double> block = series.subspan(b * m, m);
      const double mu = mean_of(block);
      double ss = 0.0;
      for (double v : block) ss += (v - mu) * (v - mu);
      const double sd = std::sqrt(ss / static_cast<double>(m));
      if (sd == 0.0) continue;  // constant block carries no range information
      double cum = 0.0, lo = 0.0, hi = 0.0;
      bool first = true;
      for (double v : block) {
        cum += v - mu;
        if (first) {
          lo = hi = cum;
          first = false;
        } else {
          lo = std::min(lo, cum);
          hi = std::max(hi, cum);
        }
      }
      acc += (hi - lo) / sd;
      ++used;
    }
    if (used > 0) {
      log_m.push_back(std::log(static_cast<double>(m)));
      log_rs.push_back(std::log(acc / static_cast<double>(used)));
    }
  }

  if (log_m.size() < 2) {
    throw estimation_error("rs_hurst: fewer than two usable block sizes");
  }

  const double mx = mean_of(log_m);
  const double my = mean_of(log_rs);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < log_m.size(); ++i) {
    sxy += (log_m[i] - mx) * (log_rs[i] - my);
    sxx += (log_m[i] - mx) * (log_m[i] - mx);
  }
  return std::clamp(sxy / sxx, 0.01, 0.99);
}

}  // namespace lrdband::estimators
