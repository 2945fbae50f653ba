// Command-line front end: series generation, parameter estimation,
// confidence regions, coverage studies and sampling-distribution exports,
// all as plot-ready CSV files.
//
// Exit codes: 0 success, 1 usage error, 2 numeric/estimation error.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lrdband/confidence.hpp"
#include "lrdband/csv.hpp"
#include "lrdband/empproc.hpp"
#include "lrdband/errors.hpp"
#include "lrdband/estimators.hpp"
#include "lrdband/gaussgen.hpp"
#include "lrdband/montecarlo.hpp"

namespace {

using namespace lrdband;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "start:stop:step", endpoints inclusive within half a step; a plain
// number denotes a single-point grid.
std::vector<double> parse_grid(const std::string& text) {
  const auto first = text.find(':');
  if (first == std::string::npos) return {std::stod(text)};
  const auto second = text.find(':', first + 1);
  if (second == std::string::npos) {
    throw usage_error("grid must be start:stop:step (got '" + text + "')");
  }
  const double start = std::stod(text.substr(0, first));
  const double stop = std::stod(text.substr(first + 1, second - first - 1));
  const double step = std::stod(text.substr(second + 1));
  if (!(step > 0.0) || stop < start) {
    throw usage_error("grid needs step > 0 and stop >= start");
  }
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 0.5)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = start + static_cast<double>(i) * step;
  return grid;
}

gaussgen::Transform transform_by_name(const std::string& name) {
  if (name == "identity") return gaussgen::Transform::identity();
  if (name == "exp") return gaussgen::Transform::exponential();
  if (name == "negation") return gaussgen::Transform::negation();
  throw usage_error("unknown transform '" + name + "'");
}

double resolve_hurst(const gaussgen::TimeSeries& series, double hurst_flag, bool estimate) {
  if (estimate == (hurst_flag > 0.0)) {
    throw usage_error("exactly one of --hurst and --estimate-hurst is required");
  }
  return estimate ? estimators::rs_hurst(series.values) : hurst_flag;
}

int resolve_bandwidth(const gaussgen::TimeSeries& series, int bandwidth_flag) {
  return bandwidth_flag > 0 ? bandwidth_flag : estimators::default_bandwidth(series.size());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Confidence bands and quantile intervals for long-range dependent time series"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Generate a fractional Gaussian noise series");
  double g_hurst = 0.0;
  std::size_t g_length = 0;
  std::uint64_t g_seed = 0;
  std::string g_out, g_transform = "identity";
  generate->add_option("--hurst", g_hurst, "Hurst parameter in (1/2, 1)")
      ->required()
      ->check(CLI::Range(0.5, 1.0));
  generate->add_option("--length", g_length, "Series length (>= 2)")->required();
  generate->add_option("--seed", g_seed, "RNG seed (64-bit)")->required();
  generate->add_option("--out", g_out, "Output series CSV")->required();
  generate->add_option("--transform", g_transform,
                       "Marginal transform: identity, exp or negation");

  // hurst
  auto* hurst_cmd = app.add_subcommand("hurst", "R/S Hurst estimate of a series");
  std::string h_input;
  hurst_cmd->add_option("--input", h_input, "Series CSV")->required();

  // lrv
  auto* lrv_cmd = app.add_subcommand("lrv", "Bartlett long-run variance of a series");
  std::string v_input;
  int v_bandwidth = 0;
  lrv_cmd->add_option("--input", v_input, "Series CSV")->required();
  lrv_cmd->add_option("--bandwidth", v_bandwidth, "Bartlett bandwidth (default floor(N^(1/3)))");

  // band
  auto* band_cmd = app.add_subcommand("band", "Confidence band for the marginal distribution");
  std::string b_input, b_method = "asymptotic", b_grid, b_out;
  double b_alpha = 0.05, b_hurst = 0.0;
  bool b_estimate = false;
  int b_bandwidth = 0;
  band_cmd->add_option("--input", b_input, "Series CSV")->required();
  band_cmd->add_option("--method", b_method, "asymptotic or hoa")
      ->check(CLI::IsMember({"asymptotic", "hoa"}));
  band_cmd->add_option("--alpha", b_alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
  band_cmd->add_option("--grid", b_grid, "Evaluation grid start:stop:step")->required();
  band_cmd->add_option("--hurst", b_hurst, "Known Hurst parameter")->check(CLI::Range(0.5, 1.0));
  band_cmd->add_flag("--estimate-hurst", b_estimate, "Estimate the Hurst parameter via R/S");
  band_cmd->add_option("--bandwidth", b_bandwidth, "Bartlett bandwidth for the hoa method");
  band_cmd->add_option("--out", b_out, "Output region CSV")->required();

  // quantile-ci
  auto* qci_cmd = app.add_subcommand("quantile-ci", "Confidence interval for a marginal quantile");
  std::string q_input, q_method = "asymptotic", q_out;
  double q_alpha = 0.05, q_p = 0.5, q_hurst = 0.0;
  bool q_estimate = false;
  int q_bandwidth = 0;
  qci_cmd->add_option("--input", q_input, "Series CSV")->required();
  qci_cmd->add_option("--method", q_method, "asymptotic or hoa")
      ->check(CLI::IsMember({"asymptotic", "hoa"}));
  qci_cmd->add_option("--alpha", q_alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
  qci_cmd->add_option("--p", q_p, "Quantile level in (0, 1)")->check(CLI::Range(0.0, 1.0));
  qci_cmd->add_option("--hurst", q_hurst, "Known Hurst parameter")->check(CLI::Range(0.5, 1.0));
  qci_cmd->add_flag("--estimate-hurst", q_estimate, "Estimate the Hurst parameter via R/S");
  qci_cmd->add_option("--bandwidth", q_bandwidth, "Bartlett bandwidth for the hoa method");
  qci_cmd->add_option("--out", q_out, "Output region CSV")->required();

  // coverage
  auto* cov_cmd = app.add_subcommand("coverage", "Monte Carlo coverage study");
  std::string c_hgrid, c_xgrid, c_mode = "known", c_out;
  std::vector<std::size_t> c_lengths;
  std::size_t c_reps = 500;
  double c_alpha = 0.05, c_p = 0.5;
  std::uint64_t c_seed = 0;
  int c_threads = 0, c_bandwidth = 0;
  cov_cmd->add_option("--hurst-grid", c_hgrid, "Hurst grid start:stop:step")->required();
  cov_cmd->add_option("--length", c_lengths, "Series length(s), comma separated")
      ->required()
      ->delimiter(',');
  cov_cmd->add_option("--reps", c_reps, "Replications per cell");
  cov_cmd->add_option("--alpha", c_alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
  auto* p_opt = cov_cmd->add_option("--p", c_p, "Quantile target: level in (0, 1)");
  auto* x_opt = cov_cmd->add_option("--grid", c_xgrid, "Band target: x grid start:stop:step");
  p_opt->excludes(x_opt);
  cov_cmd->add_option("--hurst-mode", c_mode, "known or estimated")
      ->check(CLI::IsMember({"known", "estimated"}));
  cov_cmd->add_option("--seed", c_seed, "Base seed; replication r uses seed XOR r")->required();
  cov_cmd->add_option("--threads", c_threads, "Worker threads (0 = all cores)");
  cov_cmd->add_option("--bandwidth", c_bandwidth, "Bartlett bandwidth override");
  cov_cmd->add_option("--out", c_out, "Output report CSV")->required();

  // histogram
  auto* hist_cmd = app.add_subcommand(
      "histogram", "Standardized sampling-distribution draws of F_N(x) - F(x)");
  double hi_hurst = 0.0, hi_x = 0.0;
  std::size_t hi_length = 0, hi_reps = 0;
  std::uint64_t hi_seed = 0;
  int hi_threads = 0;
  std::string hi_out;
  hist_cmd->add_option("--hurst", hi_hurst, "Hurst parameter")->required()->check(CLI::Range(0.5, 1.0));
  hist_cmd->add_option("--length", hi_length, "Series length")->required();
  hist_cmd->add_option("--reps", hi_reps, "Number of draws")->required();
  hist_cmd->add_option("--x", hi_x, "Evaluation point (default 0)");
  hist_cmd->add_option("--seed", hi_seed, "Base seed; replication r uses seed XOR r")->required();
  hist_cmd->add_option("--threads", hi_threads, "Worker threads (0 = all cores)");
  hist_cmd->add_option("--out", hi_out, "Output histogram CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (generate->parsed()) {
      auto series = gaussgen::generate_fgn(g_hurst, g_length, g_seed);
      if (g_transform != "identity") {
        series = gaussgen::subordinate(series, gaussgen::LrdModel(g_hurst, transform_by_name(g_transform)));
      }
      csv::write_series_file(g_out, series);
    } else if (hurst_cmd->parsed()) {
      const auto series = csv::read_series_file(h_input);
      std::cout << "hurst\n" << csv::format_double(estimators::rs_hurst(series.values)) << "\n";
    } else if (lrv_cmd->parsed()) {
      const auto series = csv::read_series_file(v_input);
      const auto estimate =
          estimators::bartlett_lrv(series.values, resolve_bandwidth(series, v_bandwidth));
      std::cout << "sigma2,bandwidth,truncated\n"
                << csv::format_double(estimate.value) << ',' << estimate.bandwidth << ','
                << (estimate.truncated ? 1 : 0) << "\n";
    } else if (band_cmd->parsed()) {
      const auto series = csv::read_series_file(b_input);
      const auto grid = parse_grid(b_grid);
      const double hurst = resolve_hurst(series, b_hurst, b_estimate);
      confidence::ConfidenceRegion region;
      if (b_method == "asymptotic") {
        region = confidence::asymptotic_band(series, hurst, b_alpha, grid);
      } else {
        const auto model = gaussgen::LrdModel::gaussian(hurst);
        const auto sigma = confidence::estimate_band_sigma(series, model, grid,
                                                           resolve_bandwidth(series, b_bandwidth));
        region = confidence::hoa_band(series, model, b_alpha, grid, sigma);
      }
      region.digest.hurst_estimated = b_estimate;
      csv::write_region_file(b_out, region);
    } else if (qci_cmd->parsed()) {
      const auto series = csv::read_series_file(q_input);
      const double hurst = resolve_hurst(series, q_hurst, q_estimate);
      confidence::ConfidenceRegion region;
      if (q_method == "asymptotic") {
        region = confidence::asymptotic_quantile_ci(series, hurst, q_alpha, q_p);
      } else {
        const auto model = gaussgen::LrdModel::gaussian(hurst);
        const double sigma = confidence::estimate_sigma_at_quantile(
            series, model, q_p, resolve_bandwidth(series, q_bandwidth));
        region = confidence::hoa_quantile_ci(series, model, q_alpha, q_p, sigma);
      }
      region.digest.hurst_estimated = q_estimate;
      csv::write_region_file(q_out, region);
    } else if (cov_cmd->parsed()) {
      montecarlo::ExperimentConfig config;
      config.hurst_grid = parse_grid(c_hgrid);
      config.lengths = c_lengths;
      config.reps = c_reps;
      config.alpha = c_alpha;
      if (!c_xgrid.empty()) {
        config.target = montecarlo::TargetKind::band;
        config.x_grid = parse_grid(c_xgrid);
      } else {
        config.target = montecarlo::TargetKind::quantile;
        config.p = c_p;
      }
      config.hurst_mode =
          c_mode == "known" ? montecarlo::HurstMode::known : montecarlo::HurstMode::estimated;
      config.base_seed = c_seed;
      config.threads = c_threads;
      config.bandwidth = c_bandwidth;
      csv::write_report_file(c_out, montecarlo::run_coverage_experiment(config));
    } else if (hist_cmd->parsed()) {
      const auto samples = empproc::sampling_distribution_samples(
          gaussgen::LrdModel::gaussian(hi_hurst), hi_length, hi_reps, hi_x, hi_seed, hi_threads);
      csv::write_histogram_file(hi_out, samples);
    }
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
