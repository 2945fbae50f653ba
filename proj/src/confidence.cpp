#include "lrdband/confidence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lrdband/empproc.hpp"
#include "lrdband/errors.hpp"
#include "lrdband/estimators.hpp"
#include "lrdband/hermite.hpp"
#include "lrdband/normal.hpp"

namespace lrdband::confidence {

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
}

// Model used for coefficients/marginals: the series' transform (identity
// when none was recorded) with the caller-supplied Hurst parameter.
gaussgen::LrdModel series_model(const gaussgen::TimeSeries& series, double hurst) {
  if (series.model.has_value()) {
    gaussgen::LrdModel m = *series.model;
    m.hurst = hurst;
    return m;
  }
  return gaussgen::LrdModel::gaussian(hurst);
}

}  // namespace

const char* method_name(Method m) {
  return m == Method::asymptotic ? "asymptotic" : "hoa";
}

ConfidenceRegion asymptotic_band(const gaussgen::TimeSeries& series, double hurst,
                                 double alpha, std::vector<double> x_grid) {
  require_alpha(alpha);
  if (x_grid.empty()) throw std::invalid_argument("asymptotic_band: empty x grid");
  const std::size_t n = series.size();
  const double z = norm_quantile(1.0 - alpha / 2.0);
  const double dn_over_n = gaussgen::asymptotic_dn(hurst, n) / static_cast<double>(n);
  const gaussgen::LrdModel model = series_model(series, hurst);

  ConfidenceRegion region;
  region.kind = RegionKind::band;
  region.method = Method::asymptotic;
  region.level = 1.0 - alpha;
  region.x_grid = std::move(x_grid);
  region.digest.length = n;
  region.digest.hurst = hurst;
  region.lower.reserve(region.x_grid.size());
  region.upper.reserve(region.x_grid.size());
  region.center.reserve(region.x_grid.size());
  for (double x : region.x_grid) {
    const double c1 = std::abs(hermite::hermite_coeff_closed(model.transform, 1, x));
    const double fn = empproc::empirical_cdf(series, x);
    const double half = dn_over_n * c1 * z;
    region.center.push_back(fn);
    region.lower.push_back(std::clamp(fn - half, 0.0, 1.0));
    region.upper.push_back(std::clamp(fn + half, 0.0, 1.0));
  }
  return region;
}

ConfidenceRegion hoa_band(const gaussgen::TimeSeries& series, const gaussgen::LrdModel& model,
                          double alpha, std::vector<double> x_grid,
                          std::span<const double> sigma) {
  require_alpha(alpha);
  if (x_grid.empty()) throw std::invalid_argument("hoa_band: empty x grid");
  if (sigma.size() != x_grid.size()) {
    throw std::invalid_argument("hoa_band: sigma must have one entry per grid point");
  }
  const std::size_t n = series.size();
  if (n == 0) throw std::invalid_argument("hoa_band: series is empty");
  const double z = norm_quantile(1.0 - alpha / 2.0);
  const double root_n = std::sqrt(static_cast<double>(n));
  const std::vector<double> driver = empproc::recover_driver(series, model);

  ConfidenceRegion region;
  region.kind = RegionKind::band;
  region.method = Method::hoa;
  region.level = 1.0 - alpha;
  region.x_grid = std::move(x_grid);
  region.digest.length = n;
  region.digest.hurst = model.hurst;
  region.digest.sigma.assign(sigma.begin(), sigma.end());
  for (std::size_t i = 0; i < region.x_grid.size(); ++i) {
    const double x = region.x_grid[i];
    if (!(sigma[i] > 0.0)) {
      std::ostringstream msg;
      msg << "hoa_band: sigma(x) <= 0 at grid point x = " << x;
      throw estimation_error(msg.str());
    }
    const double fn = empproc::empirical_cdf(series, x);
    const double center = fn - empproc::lower_order_mean(driver, model, x);
    const double half = sigma[i] * z / root_n;
    region.center.push_back(center);
    region.lower.push_back(std::clamp(center - half, 0.0, 1.0));
    region.upper.push_back(std::clamp(center + half, 0.0, 1.0));
  }
  return region;
}

ConfidenceRegion asymptotic_quantile_ci(const gaussgen::TimeSeries& series, double hurst,
                                        double alpha, double p) {
  require_alpha(alpha);
  const std::size_t n = series.size();
  const gaussgen::LrdModel model = series_model(series, hurst);
  const double q_true = model.marginal_quantile(p);
  const double density = model.density(q_true);
  const double c1 = std::abs(hermite::hermite_coeff_closed(model.transform, 1, q_true));
  const double z = norm_quantile(1.0 - alpha / 2.0);
  const double q_hat = empproc::empirical_quantile(series, p);
  const double offset =
      gaussgen::asymptotic_dn(hurst, n) / static_cast<double>(n) * (c1 / density) * z;

  ConfidenceRegion region;
  region.kind = RegionKind::quantile_interval;
  region.method = Method::asymptotic;
  region.level = 1.0 - alpha;
  region.x_grid = {p};
  region.center = {q_hat};
  region.lower = {q_hat - offset};
  region.upper = {q_hat + offset};
  if (region.lower[0] > region.upper[0]) std::swap(region.lower[0], region.upper[0]);
  region.digest.length = n;
  region.digest.hurst = hurst;
  return region;
}

ConfidenceRegion hoa_quantile_ci(const gaussgen::TimeSeries& series,
                                 const gaussgen::LrdModel& model, double alpha, double p,
                                 double sigma_at_q) {
  require_alpha(alpha);
  if (!(sigma_at_q > 0.0)) {
    throw estimation_error("hoa_quantile_ci: sigma at the quantile must be positive");
  }
  const std::size_t n = series.size();
  if (n == 0) throw std::invalid_argument("hoa_quantile_ci: series is empty");
  const double q_true = model.marginal_quantile(p);
  const double density = model.density(q_true);
  const std::vector<double> driver = empproc::recover_driver(series, model);
  const double slow_mean = empproc::lower_order_mean(driver, model, q_true);
  const double q_hat = empproc::empirical_quantile(series, p);
  const double z = norm_quantile(1.0 - alpha / 2.0);
  const double center = q_hat + slow_mean / density;
  const double half = sigma_at_q * z / (density * std::sqrt(static_cast<double>(n)));

  ConfidenceRegion region;
  region.kind = RegionKind::quantile_interval;
  region.method = Method::hoa;
  region.level = 1.0 - alpha;
  region.x_grid = {p};
  region.center = {center};
  region.lower = {center - half};
  region.upper = {center + half};
  region.digest.length = n;
  region.digest.hurst = model.hurst;
  region.digest.sigma = {sigma_at_q};
  return region;
}

std::vector<double> estimate_band_sigma(const gaussgen::TimeSeries& series,
                                        const gaussgen::LrdModel& model,
                                        std::span<const double> x_grid, int bandwidth) {
  std::vector<double> sigma;
  sigma.reserve(x_grid.size());
  for (double x : x_grid) {
    const auto decomp = empproc::higher_order_residuals(series, model, x);
    const auto lrv = estimators::bartlett_lrv(decomp.residuals, bandwidth);
    sigma.push_back(std::sqrt(lrv.value));
  }
  return sigma;
}

double estimate_sigma_at_quantile(const gaussgen::TimeSeries& series,
                                  const gaussgen::LrdModel& model, double p, int bandwidth) {
  const double q_true = model.marginal_quantile(p);
  const auto decomp = empproc::higher_order_residuals(series, model, q_true);
  const auto lrv = estimators::bartlett_lrv(decomp.residuals, bandwidth);
  return std::sqrt(lrv.value);
}

}  // namespace lrdband::confidence
