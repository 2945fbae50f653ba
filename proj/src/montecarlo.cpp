#include "lrdband/montecarlo.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "lrdband/empproc.hpp"
#include "lrdband/errors.hpp"
#include "lrdband/estimators.hpp"
#include "lrdband/hermite.hpp"
#include "parallel.hpp"

namespace lrdband::montecarlo {

namespace {

constexpr std::int8_t kFailed = -1;

// Per-replication outcome slots, written independently by workers and
// reduced serially in replication order afterwards.
struct MethodSlots {
  std::vector<std::int8_t> covered;  // reps * points, kFailed when unusable
  std::vector<double> width;

  MethodSlots(std::size_t reps, std::size_t points)
      : covered(reps * points, kFailed), width(reps * points, 0.0) {}
};

}  // namespace

const char* hurst_mode_name(HurstMode m) {
  return m == HurstMode::known ? "known" : "estimated";
}

void ExperimentConfig::validate() const {
  if (hurst_grid.empty()) throw std::invalid_argument("config: empty hurst grid");
  for (double h : hurst_grid) {
    if (!(h > 0.5 && h < 1.0)) {
      throw std::invalid_argument("config: hurst values must lie in (1/2, 1)");
    }
  }
  if (lengths.empty()) throw std::invalid_argument("config: empty length list");
  for (std::size_t n : lengths) {
    if (n < 8) throw std::invalid_argument("config: lengths must be >= 8");
  }
  if (reps == 0) throw std::invalid_argument("config: reps must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("config: alpha must lie in (0, 1)");
  if (target == TargetKind::band && x_grid.empty()) {
    throw std::invalid_argument("config: band target needs a non-empty x grid");
  }
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("config: p must lie in (0, 1)");
  if (!run_asymptotic && !run_hoa) throw std::invalid_argument("config: no method enabled");
  if (bandwidth < 0 || threads < 0) {
    throw std::invalid_argument("config: bandwidth and threads must be >= 0");
  }
}

double true_quantile(const gaussgen::LrdModel& model, double p) {
  return model.marginal_quantile(p);
}

CoverageReport run_coverage_experiment(const ExperimentConfig& config) {
  config.validate();

  const bool band = config.target == TargetKind::band;
  const std::vector<double> points = band ? config.x_grid : std::vector<double>{config.p};
  const std::size_t n_points = points.size();

  CoverageReport report;
  for (double hurst : config.hurst_grid) {
    for (std::size_t length : config.lengths) {
      const gaussgen::LrdModel cell_model = gaussgen::LrdModel::gaussian(hurst);
      const int bandwidth =
          config.bandwidth > 0 ? config.bandwidth : estimators::default_bandwidth(length);

      std::vector<double> truths(n_points);
      for (std::size_t i = 0; i < n_points; ++i) {
        truths[i] = band ? cell_model.marginal_cdf(points[i])
                         : true_quantile(cell_model, config.p);
      }

      MethodSlots asym(config.reps, n_points);
      MethodSlots hoa(config.reps, n_points);

      detail::parallel_for(config.reps, config.threads, [&](std::size_t r) {
        const std::uint64_t rep_seed = config.base_seed ^ static_cast<std::uint64_t>(r);
        gaussgen::TimeSeries series;
        double hurst_used = hurst;
        try {
          series = gaussgen::generate_fgn(hurst, length, rep_seed);
          if (config.hurst_mode == HurstMode::estimated) {
            hurst_used = estimators::rs_hurst(series.values);
            if (!(hurst_used > 0.5 && hurst_used < 1.0)) return;  // replication excluded
          }
        } catch (const generation_error&) {
          return;
        } catch (const estimation_error&) {
          return;
        }

        const std::size_t base = r * n_points;
        if (config.run_asymptotic) {
          if (band) {
            const auto region = confidence::asymptotic_band(series, hurst_used, config.alpha,
                                                            std::vector<double>(points));
            for (std::size_t i = 0; i < n_points; ++i) {
              asym.covered[base + i] =
                  (region.lower[i] <= truths[i] && truths[i] <= region.upper[i]) ? 1 : 0;
              asym.width[base + i] = region.upper[i] - region.lower[i];
            }
          } else {
            const auto region =
                confidence::asymptotic_quantile_ci(series, hurst_used, config.alpha, config.p);
            asym.covered[base] =
                (region.lower[0] <= truths[0] && truths[0] <= region.upper[0]) ? 1 : 0;
            asym.width[base] = region.upper[0] - region.lower[0];
          }
        }

        if (config.run_hoa) {
          const gaussgen::LrdModel model_used = gaussgen::LrdModel::gaussian(hurst_used);
          for (std::size_t i = 0; i < n_points; ++i) {
            const double x = band ? points[i] : model_used.marginal_quantile(config.p);
            const auto decomp = empproc::higher_order_residuals(series, model_used, x);
            const auto lrv = estimators::bartlett_lrv(decomp.residuals, bandwidth);
            if (!(lrv.value > 0.0)) continue;  // sigma <= 0: point excluded and counted
            const double sigma = std::sqrt(lrv.value);
            const double sigma_arr[1] = {sigma};
            confidence::ConfidenceRegion region;
            if (band) {
              region = confidence::hoa_band(series, model_used, config.alpha, {x}, sigma_arr);
            } else {
              region =
                  confidence::hoa_quantile_ci(series, model_used, config.alpha, config.p, sigma);
            }
            hoa.covered[base + i] =
                (region.lower[0] <= truths[i] && truths[i] <= region.upper[0]) ? 1 : 0;
            hoa.width[base + i] = region.upper[0] - region.lower[0];
          }
        }
      });

      auto reduce = [&](const MethodSlots& slots, confidence::Method method) {
        for (std::size_t i = 0; i < n_points; ++i) {
          CoverageCell cell;
          cell.hurst = hurst;
          cell.length = length;
          cell.method = method;
          cell.hurst_mode = config.hurst_mode;
          cell.point = points[i];
          std::size_t used = 0, covered = 0;
          double width_sum = 0.0;
          for (std::size_t r = 0; r < config.reps; ++r) {
            const std::int8_t c = slots.covered[r * n_points + i];
            if (c == kFailed) continue;
            ++used;
            covered += static_cast<std::size_t>(c);
            width_sum += slots.width[r * n_points + i];
          }
          if (used == 0) {
            std::ostringstream msg;
            msg << "coverage experiment: no usable replication in cell (hurst " << hurst
                << ", N " << length << ", " << confidence::method_name(method) << ")";
            throw estimation_error(msg.str());
          }
          cell.reps_used = used;
          cell.reps_failed = config.reps - used;
          cell.coverage = static_cast<double>(covered) / static_cast<double>(used);
          cell.mean_width = width_sum / static_cast<double>(used);
          cell.unreliable =
              static_cast<double>(cell.reps_failed) >= 0.05 * static_cast<double>(config.reps);
          report.cells.push_back(cell);
        }
      };
      if (config.run_asymptotic) reduce(asym, confidence::Method::asymptotic);
      if (config.run_hoa) reduce(hoa, confidence::Method::hoa);
    }
  }
  return report;
}

}  // namespace lrdband::montecarlo
