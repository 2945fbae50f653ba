#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lrdband/confidence.hpp"
#include "lrdband/gaussgen.hpp"

namespace lrdband::montecarlo {

enum class HurstMode { known, estimated };
enum class TargetKind { band, quantile };

const char* hurst_mode_name(HurstMode m);

/// Configuration of a coverage study over a (hurst, length) grid with
/// Gaussian marginals. Replication r draws its stream from base_seed ^ r,
/// so results are independent of the execution schedule and of sharding.
struct ExperimentConfig {
  std::vector<double> hurst_grid;
  std::vector<std::size_t> lengths;
  std::size_t reps = 500;
  double alpha = 0.05;
  TargetKind target = TargetKind::band;
  std::vector<double> x_grid = {0.0};  // evaluation points for bands
  double p = 0.5;                      // quantile level for intervals
  HurstMode hurst_mode = HurstMode::known;
  std::uint64_t base_seed = 0;
  bool run_asymptotic = true;
  bool run_hoa = true;
  int bandwidth = 0;  // 0 = default_bandwidth(length)
  int threads = 0;    // 0 = hardware concurrency

  void validate() const;
};

/// One (hurst, length, method, point) cell of the report.
struct CoverageCell {
  double hurst = 0.0;
  std::size_t length = 0;
  confidence::Method method = confidence::Method::asymptotic;
  HurstMode hurst_mode = HurstMode::known;
  double point = 0.0;  // grid x for bands, p for intervals
  double coverage = 0.0;
  double mean_width = 0.0;
  std::size_t reps_failed = 0;
  std::size_t reps_used = 0;
  bool unreliable = false;  // reps_failed / reps >= 5%
};

struct CoverageReport {
  std::vector<CoverageCell> cells;
};

/// Runs the full study: per replication, generate a series, optionally
/// estimate the Hurst parameter, build the requested regions and record
/// containment of the analytic truth plus widths. Failed replications
/// (R/S failure, estimate outside (1/2,1), sigma <= 0) are excluded and
/// counted. Deterministic given base_seed, for any thread count.
CoverageReport run_coverage_experiment(const ExperimentConfig& config);

/// Analytic quantile of the model's marginal distribution.
double true_quantile(const gaussgen::LrdModel& model, double p);

}  // namespace lrdband::montecarlo
