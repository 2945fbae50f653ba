#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lrdband/errors.hpp"
#include "lrdband/montecarlo.hpp"
#include "lrdband/normal.hpp"

using namespace lrdband;
using namespace lrdband::montecarlo;

namespace {

ExperimentConfig quantile_config() {
  ExperimentConfig config;
  config.hurst_grid = {0.7};
  config.lengths = {128};
  config.reps = 60;
  config.alpha = 0.05;
  config.target = TargetKind::quantile;
  config.p = 0.5;
  config.base_seed = 314159;
  return config;
}

}  // namespace

TEST_CASE("true quantile") {
  CHECK(true_quantile(gaussgen::LrdModel::gaussian(0.7), 0.5) == 0.0);
  CHECK(true_quantile(gaussgen::LrdModel::gaussian(0.7), 0.975) ==
        doctest::Approx(1.959964).epsilon(1e-6));
  const gaussgen::LrdModel exp_model(0.7, gaussgen::Transform::exponential());
  CHECK(true_quantile(exp_model, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("config validation") {
  ExperimentConfig config = quantile_config();
  config.hurst_grid = {};
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = quantile_config();
  config.hurst_grid = {0.4};
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = quantile_config();
  config.reps = 0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = quantile_config();
  config.alpha = 1.0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = quantile_config();
  config.run_asymptotic = false;
  config.run_hoa = false;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = quantile_config();
  config.target = TargetKind::band;
  config.x_grid = {};
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("single replication yields a Bernoulli coverage") {
  ExperimentConfig config = quantile_config();
  config.reps = 1;
  const auto report = run_coverage_experiment(config);
  REQUIRE(report.cells.size() == 2);
  for (const auto& cell : report.cells) {
    CHECK((cell.coverage == 0.0 || cell.coverage == 1.0));
    CHECK(cell.reps_used + cell.reps_failed == 1);
  }
}

TEST_CASE("report layout covers the configured grid") {
  ExperimentConfig config = quantile_config();
  config.hurst_grid = {0.6, 0.8};
  config.lengths = {64, 128};
  config.reps = 10;
  const auto report = run_coverage_experiment(config);
  // 2 hurst x 2 lengths x 2 methods x 1 point
  CHECK(report.cells.size() == 8);

  config.target = TargetKind::band;
  config.x_grid = {-1.0, 0.0, 1.0};
  const auto band_report = run_coverage_experiment(config);
  CHECK(band_report.cells.size() == 24);
  CHECK(band_report.cells[0].point == -1.0);
  CHECK(band_report.cells[1].point == 0.0);
}

TEST_CASE("shard stability: thread count never changes the report") {
  ExperimentConfig config = quantile_config();
  config.reps = 40;
  config.threads = 1;
  const auto serial = run_coverage_experiment(config);
  config.threads = 4;
  const auto parallel = run_coverage_experiment(config);
  REQUIRE(serial.cells.size() == parallel.cells.size());
  for (std::size_t i = 0; i < serial.cells.size(); ++i) {
    CHECK(serial.cells[i].coverage == parallel.cells[i].coverage);
    CHECK(serial.cells[i].mean_width == parallel.cells[i].mean_width);
    CHECK(serial.cells[i].reps_failed == parallel.cells[i].reps_failed);
  }
}

TEST_CASE("coverage is monotone in the confidence level") {
  ExperimentConfig config = quantile_config();
  config.reps = 120;
  config.alpha = 0.10;
  const auto loose = run_coverage_experiment(config);
  config.alpha = 0.01;
  const auto strict = run_coverage_experiment(config);
  for (std::size_t i = 0; i < loose.cells.size(); ++i) {
    CHECK(strict.cells[i].coverage >= loose.cells[i].coverage);
  }
}

TEST_CASE("estimated mode counts failed replications") {
  ExperimentConfig config = quantile_config();
  config.hurst_grid = {0.55};
  config.lengths = {200};
  config.reps = 120;
  config.hurst_mode = HurstMode::estimated;
  const auto report = run_coverage_experiment(config);
  for (const auto& cell : report.cells) {
    CHECK(cell.hurst_mode == HurstMode::estimated);
    CHECK(cell.reps_used + cell.reps_failed == config.reps);
    const double failure_rate =
        static_cast<double>(cell.reps_failed) / static_cast<double>(config.reps);
    CHECK(cell.unreliable == (failure_rate >= 0.05));
  }
}

TEST_CASE("band target records pointwise containment of the true cdf") {
  ExperimentConfig config = quantile_config();
  config.target = TargetKind::band;
  config.x_grid = {0.0};
  config.hurst_grid = {0.6};
  config.lengths = {256};
  config.reps = 150;
  const auto report = run_coverage_experiment(config);
  REQUIRE(report.cells.size() == 2);
  // The hoa band should have reasonable coverage in this easy regime.
  const auto& hoa_cell = report.cells[1];
  CHECK(hoa_cell.method == confidence::Method::hoa);
  CHECK(hoa_cell.coverage > 0.75);
  CHECK(hoa_cell.mean_width > 0.0);
  CHECK(hoa_cell.mean_width < 0.5);
}
