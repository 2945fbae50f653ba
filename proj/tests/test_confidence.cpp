#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lrdband/confidence.hpp"
#include "lrdband/empproc.hpp"
#include "lrdband/errors.hpp"
#include "lrdband/estimators.hpp"
#include "lrdband/gaussgen.hpp"
#include "lrdband/normal.hpp"

using namespace lrdband;
using namespace lrdband::confidence;
using gaussgen::LrdModel;
using gaussgen::TimeSeries;

namespace {

constexpr double kZ975 = 1.959963984540054;

TimeSeries fixture_series(double hurst = 0.8, std::size_t n = 200, std::uint64_t seed = 5) {
  return gaussgen::generate_fgn(hurst, n, seed);
}

double band_width_at(const ConfidenceRegion& region, std::size_t i) {
  return region.upper[i] - region.lower[i];
}

}  // namespace

TEST_CASE("asymptotic band width formula") {
  const auto series = fixture_series(0.55, 200, 17);

  const auto region = asymptotic_band(series, 0.55, 0.05, {0.0});
  const double expected_full_width =
      2.0 * kZ975 * std::sqrt(0.055) * std::pow(200.0, -0.45) * norm_pdf(0.0);
  CHECK(expected_full_width == doctest::Approx(0.0338).epsilon(2e-3));
  // Width must match the independent arithmetic exactly (no clamping at x=0 here).
  CHECK(band_width_at(region, 0) == doctest::Approx(expected_full_width).epsilon(1e-12));
  CHECK(region.center[0] == doctest::Approx(empproc::empirical_cdf(series, 0.0)).epsilon(1e-15));

  SUBCASE("alpha near 1 collapses the band") {
    const auto tight = asymptotic_band(series, 0.55, 0.9999, {0.0, 1.0});
    for (std::size_t i = 0; i < tight.x_grid.size(); ++i) {
      CHECK(band_width_at(tight, i) < 1e-4);
    }
  }
  SUBCASE("density tail pins the band near zero") {
    const auto tail = asymptotic_band(series, 0.55, 0.05, {-8.0});
    CHECK(tail.lower[0] == 0.0);
    CHECK(tail.upper[0] < 1e-5);
  }
  SUBCASE("bands are clamped to the unit interval") {
    const auto wide = asymptotic_band(series, 0.95, 0.05, {-0.5, 0.0, 0.5});
    for (std::size_t i = 0; i < wide.x_grid.size(); ++i) {
      CHECK(wide.lower[i] >= 0.0);
      CHECK(wide.upper[i] <= 1.0);
      CHECK(wide.lower[i] <= wide.upper[i]);
    }
  }
  SUBCASE("alpha domain") {
    CHECK_THROWS_AS(asymptotic_band(series, 0.55, 0.0, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_band(series, 0.55, 1.0, {0.0}), std::invalid_argument);
  }
}

TEST_CASE("hoa band width formula") {
  const auto series = fixture_series(0.7, 400, 23);
  const auto model = LrdModel::gaussian(0.7);
  const std::vector<double> sigma = {0.5};

  const auto region = hoa_band(series, model, 0.05, {0.0}, sigma);
  CHECK(band_width_at(region, 0) == doctest::Approx(2.0 * 0.5 * kZ975 / 20.0).epsilon(1e-12));
  CHECK(band_width_at(region, 0) == doctest::Approx(0.098).epsilon(1e-3));

  SUBCASE("alpha near 1 collapses the band") {
    const auto tight = hoa_band(series, model, 0.9999, {0.0}, sigma);
    CHECK(band_width_at(tight, 0) < 1e-4);
  }
  SUBCASE("nonpositive sigma names the grid point") {
    const std::vector<double> bad = {0.0};
    CHECK_THROWS_WITH_AS(hoa_band(series, model, 0.05, {0.25}, bad),
                         doctest::Contains("0.25"), estimation_error);
  }
  SUBCASE("sigma size must match the grid") {
    CHECK_THROWS_AS(hoa_band(series, model, 0.05, {0.0, 1.0}, sigma), std::invalid_argument);
  }
}

TEST_CASE("hoa band width is robust in H while asymptotic width is not") {
  // Same seed bank, H = 0.55 vs H = 0.95.
  const std::size_t n = 200;
  const int seeds = 50;
  double asym_mean[2] = {0.0, 0.0};
  double hoa_mean[2] = {0.0, 0.0};
  const double hursts[2] = {0.55, 0.95};
  for (int which = 0; which < 2; ++which) {
    const auto model = LrdModel::gaussian(hursts[which]);
    for (int s = 0; s < seeds; ++s) {
      const auto series = gaussgen::generate_fgn(hursts[which], n, 60000 + static_cast<std::uint64_t>(s));
      const auto asym = asymptotic_band(series, hursts[which], 0.05, {0.0});
      asym_mean[which] += band_width_at(asym, 0);
      const auto sigma = estimate_band_sigma(series, model, std::vector<double>{0.0},
                                             estimators::default_bandwidth(n));
      const auto hoa = hoa_band(series, model, 0.05, {0.0}, sigma);
      hoa_mean[which] += band_width_at(hoa, 0);
    }
    asym_mean[which] /= seeds;
    hoa_mean[which] /= seeds;
  }
  const double hoa_change = std::abs(hoa_mean[1] - hoa_mean[0]) / hoa_mean[0];
  const double asym_change = std::abs(asym_mean[1] - asym_mean[0]) / asym_mean[0];
  CHECK(hoa_change < 0.5);
  CHECK(asym_change > 10.0);
}

TEST_CASE("asymptotic quantile interval") {
  const auto series = fixture_series(0.75, 100, 29);
  const auto region = asymptotic_quantile_ci(series, 0.75, 0.05, 0.5);
  const double q_hat = empproc::empirical_quantile(series, 0.5);
  const double expected_half = std::sqrt(0.375) * std::pow(100.0, -0.25) * kZ975;
  CHECK(expected_half == doctest::Approx(0.3795).epsilon(1e-3));
  CHECK(region.lower[0] == doctest::Approx(q_hat - expected_half).epsilon(1e-12));
  CHECK(region.upper[0] == doctest::Approx(q_hat + expected_half).epsilon(1e-12));
  CHECK(region.center[0] == q_hat);
  CHECK(region.kind == RegionKind::quantile_interval);

  SUBCASE("alpha near 1 collapses to the empirical quantile") {
    const auto tight = asymptotic_quantile_ci(series, 0.75, 0.9999, 0.5);
    CHECK(tight.upper[0] - tight.lower[0] < 1e-4);
    CHECK(tight.center[0] == q_hat);
  }
  SUBCASE("interval length grows sharply in H") {
    const auto narrow = asymptotic_quantile_ci(series, 0.55, 0.05, 0.5);
    const auto wide = asymptotic_quantile_ci(series, 0.95, 0.05, 0.5);
    const double ratio =
        (wide.upper[0] - wide.lower[0]) / (narrow.upper[0] - narrow.lower[0]);
    CHECK(ratio > 10.0);
  }
}

TEST_CASE("hoa quantile interval") {
  const auto series = fixture_series(0.7, 400, 31);
  const auto model = LrdModel::gaussian(0.7);

  const auto region = hoa_quantile_ci(series, model, 0.05, 0.5, 0.5);
  const double expected_half = (1.0 / norm_pdf(0.0)) * 0.5 * kZ975 / 20.0;
  CHECK(expected_half == doctest::Approx(0.1228).epsilon(1e-3));
  CHECK(region.upper[0] - region.lower[0] == doctest::Approx(2 * expected_half).epsilon(1e-12));

  SUBCASE("alpha near 1 degenerates at the bias-corrected point") {
    const double q_hat = empproc::empirical_quantile(series, 0.5);
    const double slow = empproc::lower_order_mean(series.driver, model, 0.0);
    const auto tight = hoa_quantile_ci(series, model, 0.9999, 0.5, 0.5);
    CHECK(tight.center[0] == doctest::Approx(q_hat + slow / norm_pdf(0.0)).epsilon(1e-12));
    CHECK(tight.upper[0] - tight.lower[0] < 1e-3);
  }
  SUBCASE("sigma must be positive") {
    CHECK_THROWS_AS(hoa_quantile_ci(series, model, 0.05, 0.5, 0.0), estimation_error);
  }
}

TEST_CASE("regions are ordered and nested across levels") {
  const auto series = fixture_series(0.8, 300, 37);
  const auto model = LrdModel::gaussian(0.8);
  const std::vector<double> grid = {-1.5, -0.5, 0.0, 0.5, 1.5};
  const auto sigma =
      estimate_band_sigma(series, model, grid, estimators::default_bandwidth(series.size()));

  for (double alpha : {0.01, 0.05, 0.2}) {
    const auto asym = asymptotic_band(series, 0.8, alpha, grid);
    const auto hoa = hoa_band(series, model, alpha, grid, sigma);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(asym.lower[i] <= asym.upper[i]);
      CHECK(hoa.lower[i] <= hoa.upper[i]);
    }
  }

  const auto wide = asymptotic_band(series, 0.8, 0.01, grid);
  const auto narrow = asymptotic_band(series, 0.8, 0.10, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(wide.lower[i] <= narrow.lower[i]);
    CHECK(wide.upper[i] >= narrow.upper[i]);
  }

  const auto qi_wide = hoa_quantile_ci(series, model, 0.01, 0.5, 0.4);
  const auto qi_narrow = hoa_quantile_ci(series, model, 0.10, 0.5, 0.4);
  CHECK(qi_wide.lower[0] <= qi_narrow.lower[0]);
  CHECK(qi_wide.upper[0] >= qi_narrow.upper[0]);
}

TEST_CASE("asymptotic band width is strictly increasing in H") {
  const auto series = fixture_series(0.7, 200, 41);
  double previous = 0.0;
  for (double hurst = 0.55; hurst < 0.96; hurst += 0.05) {
    const auto region = asymptotic_band(series, hurst, 0.05, {0.4});
    const double width = band_width_at(region, 0);
    CHECK(width > previous);
    previous = width;
  }
}

TEST_CASE("sigma estimation helpers") {
  const auto series = fixture_series(0.85, 256, 43);
  const auto model = LrdModel::gaussian(0.85);
  const std::vector<double> grid = {-0.5, 0.0, 0.5};
  const auto sigma = estimate_band_sigma(series, model, grid, 6);
  REQUIRE(sigma.size() == grid.size());
  for (double s : sigma) CHECK(s > 0.0);

  const double sq = estimate_sigma_at_quantile(series, model, 0.5, 6);
  CHECK(sq == doctest::Approx(sigma[1]).epsilon(1e-12));  // median of a Gaussian model is x = 0
}
