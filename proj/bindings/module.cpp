#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lrdband/confidence.hpp"
#include "lrdband/csv.hpp"
#include "lrdband/empproc.hpp"
#include "lrdband/errors.hpp"
#include "lrdband/estimators.hpp"
#include "lrdband/gaussgen.hpp"
#include "lrdband/hermite.hpp"
#include "lrdband/montecarlo.hpp"
#include "lrdband/normal.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace lrdband;

PYBIND11_MODULE(_lrdband, m) {
  m.doc() = "Confidence bands and quantile intervals for long-range dependent time series";

  py::register_exception<numeric_error>(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception<estimation_error>(m, "EstimationError", PyExc_RuntimeError);
  py::register_exception<generation_error>(m, "GenerationError", PyExc_RuntimeError);

  // ---- gaussgen ---------------------------------------------------------
  py::enum_<gaussgen::Monotonicity>(m, "Monotonicity")
      .value("increasing", gaussgen::Monotonicity::increasing)
      .value("decreasing", gaussgen::Monotonicity::decreasing);

  py::class_<gaussgen::Transform>(m, "Transform")
      .def_static("identity", &gaussgen::Transform::identity)
      .def_static("exponential", &gaussgen::Transform::exponential)
      .def_static("negation", &gaussgen::Transform::negation)
      .def_readonly("monotonicity", &gaussgen::Transform::monotonicity)
      .def("forward", [](const gaussgen::Transform& t, double y) { return t.forward(y); }, "y"_a)
      .def("inverse", [](const gaussgen::Transform& t, double x) { return t.inverse(x); }, "x"_a);

  py::class_<gaussgen::LrdModel>(m, "LrdModel")
      .def(py::init<double, gaussgen::Transform>(), "hurst"_a,
           "transform"_a = gaussgen::Transform::identity())
      .def_static("gaussian", &gaussgen::LrdModel::gaussian, "hurst"_a)
      .def_readwrite("hurst", &gaussgen::LrdModel::hurst)
      .def_property_readonly("memory_d", &gaussgen::LrdModel::memory_d)
      .def("marginal_cdf", &gaussgen::LrdModel::marginal_cdf, "x"_a)
      .def("marginal_quantile", &gaussgen::LrdModel::marginal_quantile, "p"_a)
      .def("density", &gaussgen::LrdModel::density, "x"_a)
      .def("validate", &gaussgen::LrdModel::validate);

  py::class_<gaussgen::TimeSeries>(m, "TimeSeries")
      .def(py::init<>())
      .def_readwrite("values", &gaussgen::TimeSeries::values)
      .def_readwrite("driver", &gaussgen::TimeSeries::driver)
      .def_readwrite("model", &gaussgen::TimeSeries::model)
      .def_readwrite("seed", &gaussgen::TimeSeries::seed)
      .def("__len__", &gaussgen::TimeSeries::size);

  m.def("fgn_autocovariance", &gaussgen::fgn_autocovariance, "hurst"_a, "lag"_a);
  m.def("generate_fgn", &gaussgen::generate_fgn, "hurst"_a, "length"_a, "seed"_a,
        py::call_guard<py::gil_scoped_release>());
  m.def("subordinate", &gaussgen::subordinate, "series"_a, "model"_a);
  m.def("exact_dn", &gaussgen::exact_dn, "hurst"_a, "length"_a);
  m.def("asymptotic_dn", &gaussgen::asymptotic_dn, "hurst"_a, "length"_a);

  m.def("norm_pdf", &norm_pdf, "x"_a);
  m.def("norm_cdf", &norm_cdf, "x"_a);
  m.def("norm_quantile", &norm_quantile, "p"_a);

  // ---- hermite ----------------------------------------------------------
  m.def("hermite_poly", &hermite::hermite_poly, "order"_a, "x"_a);
  m.def("hermite_coeff_closed",
        py::overload_cast<const gaussgen::Transform&, int, double>(&hermite::hermite_coeff_closed),
        "transform"_a, "order"_a, "x"_a);
  m.def("hermite_coeff_quadrature", &hermite::hermite_coeff_quadrature, "transform"_a, "order"_a,
        "x"_a);
  m.def("lower_order_count", &hermite::lower_order_count, "hurst"_a);

  // ---- empproc ----------------------------------------------------------
  py::class_<empproc::HermiteDecomposition>(m, "HermiteDecomposition")
      .def_readonly("x", &empproc::HermiteDecomposition::x)
      .def_readonly("lower_mean", &empproc::HermiteDecomposition::lower_mean)
      .def_readonly("residuals", &empproc::HermiteDecomposition::residuals)
      .def_readonly("truncation", &empproc::HermiteDecomposition::truncation)
      .def_readonly("hurst", &empproc::HermiteDecomposition::hurst)
      .def_readonly("d_param", &empproc::HermiteDecomposition::d_param);

  m.def("empirical_cdf", &empproc::empirical_cdf, "series"_a, "x"_a);
  m.def("empirical_quantile", &empproc::empirical_quantile, "series"_a, "p"_a);
  m.def("sequential_empirical_process", &empproc::sequential_empirical_process, "series"_a,
        "cdf"_a, "t"_a, "x"_a);
  m.def(
      "lower_order_mean",
      [](const std::vector<double>& driver, const gaussgen::LrdModel& model, double x) {
        return empproc::lower_order_mean(driver, model, x);
      },
      "driver"_a, "model"_a, "x"_a);
  m.def("higher_order_residuals", &empproc::higher_order_residuals, "series"_a, "model"_a, "x"_a);
  m.def("sampling_distribution_samples", &empproc::sampling_distribution_samples, "model"_a,
        "length"_a, "reps"_a, "x"_a, "seed"_a, "threads"_a = 0,
        py::call_guard<py::gil_scoped_release>());

  // ---- estimators -------------------------------------------------------
  py::class_<estimators::LrvEstimate>(m, "LrvEstimate")
      .def_readonly("value", &estimators::LrvEstimate::value)
      .def_readonly("bandwidth", &estimators::LrvEstimate::bandwidth)
      .def_readonly("max_lag", &estimators::LrvEstimate::max_lag)
      .def_readonly("truncated", &estimators::LrvEstimate::truncated);

  m.def(
      "sample_autocovariance",
      [](const std::vector<double>& series, long lag) {
        return estimators::sample_autocovariance(series, lag);
      },
      "series"_a, "lag"_a);
  m.def(
      "bartlett_lrv",
      [](const std::vector<double>& series, int bandwidth) {
        return estimators::bartlett_lrv(series, bandwidth);
      },
      "series"_a, "bandwidth"_a);
  m.def("default_bandwidth", &estimators::default_bandwidth, "length"_a);
  m.def(
      "rs_hurst",
      [](const std::vector<double>& series) { return estimators::rs_hurst(series); },
      "series"_a);

  // ---- confidence -------------------------------------------------------
  py::enum_<confidence::Method>(m, "Method")
      .value("asymptotic", confidence::Method::asymptotic)
      .value("hoa", confidence::Method::hoa);
  py::enum_<confidence::RegionKind>(m, "RegionKind")
      .value("band", confidence::RegionKind::band)
      .value("quantile_interval", confidence::RegionKind::quantile_interval);

  py::class_<confidence::InputsDigest>(m, "InputsDigest")
      .def_readonly("length", &confidence::InputsDigest::length)
      .def_readonly("hurst", &confidence::InputsDigest::hurst)
      .def_readonly("hurst_estimated", &confidence::InputsDigest::hurst_estimated)
      .def_readonly("sigma", &confidence::InputsDigest::sigma);

  py::class_<confidence::ConfidenceRegion>(m, "ConfidenceRegion")
      .def_readonly("kind", &confidence::ConfidenceRegion::kind)
      .def_readonly("method", &confidence::ConfidenceRegion::method)
      .def_readonly("level", &confidence::ConfidenceRegion::level)
      .def_readonly("x_grid", &confidence::ConfidenceRegion::x_grid)
      .def_readonly("lower", &confidence::ConfidenceRegion::lower)
      .def_readonly("upper", &confidence::ConfidenceRegion::upper)
      .def_readonly("center", &confidence::ConfidenceRegion::center)
      .def_readonly("digest", &confidence::ConfidenceRegion::digest);

  m.def("asymptotic_band", &confidence::asymptotic_band, "series"_a, "hurst"_a, "alpha"_a,
        "x_grid"_a);
  m.def(
      "hoa_band",
      [](const gaussgen::TimeSeries& series, const gaussgen::LrdModel& model, double alpha,
         std::vector<double> x_grid, const std::vector<double>& sigma) {
        return confidence::hoa_band(series, model, alpha, std::move(x_grid), sigma);
      },
      "series"_a, "model"_a, "alpha"_a, "x_grid"_a, "sigma"_a);
  m.def("asymptotic_quantile_ci", &confidence::asymptotic_quantile_ci, "series"_a, "hurst"_a,
        "alpha"_a, "p"_a);
  m.def("hoa_quantile_ci", &confidence::hoa_quantile_ci, "series"_a, "model"_a, "alpha"_a, "p"_a,
        "sigma_at_q"_a);
  m.def(
      "estimate_band_sigma",
      [](const gaussgen::TimeSeries& series, const gaussgen::LrdModel& model,
         const std::vector<double>& x_grid, int bandwidth) {
        return confidence::estimate_band_sigma(series, model, x_grid, bandwidth);
      },
      "series"_a, "model"_a, "x_grid"_a, "bandwidth"_a);
  m.def("estimate_sigma_at_quantile", &confidence::estimate_sigma_at_quantile, "series"_a,
        "model"_a, "p"_a, "bandwidth"_a);

  // ---- montecarlo -------------------------------------------------------
  py::enum_<montecarlo::HurstMode>(m, "HurstMode")
      .value("known", montecarlo::HurstMode::known)
      .value("estimated", montecarlo::HurstMode::estimated);
  py::enum_<montecarlo::TargetKind>(m, "TargetKind")
      .value("band", montecarlo::TargetKind::band)
      .value("quantile", montecarlo::TargetKind::quantile);

  py::class_<montecarlo::ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("hurst_grid", &montecarlo::ExperimentConfig::hurst_grid)
      .def_readwrite("lengths", &montecarlo::ExperimentConfig::lengths)
      .def_readwrite("reps", &montecarlo::ExperimentConfig::reps)
      .def_readwrite("alpha", &montecarlo::ExperimentConfig::alpha)
      .def_readwrite("target", &montecarlo::ExperimentConfig::target)
      .def_readwrite("x_grid", &montecarlo::ExperimentConfig::x_grid)
      .def_readwrite("p", &montecarlo::ExperimentConfig::p)
      .def_readwrite("hurst_mode", &montecarlo::ExperimentConfig::hurst_mode)
      .def_readwrite("base_seed", &montecarlo::ExperimentConfig::base_seed)
      .def_readwrite("run_asymptotic", &montecarlo::ExperimentConfig::run_asymptotic)
      .def_readwrite("run_hoa", &montecarlo::ExperimentConfig::run_hoa)
      .def_readwrite("bandwidth", &montecarlo::ExperimentConfig::bandwidth)
      .def_readwrite("threads", &montecarlo::ExperimentConfig::threads);

  py::class_<montecarlo::CoverageCell>(m, "CoverageCell")
      .def_readonly("hurst", &montecarlo::CoverageCell::hurst)
      .def_readonly("length", &montecarlo::CoverageCell::length)
      .def_readonly("method", &montecarlo::CoverageCell::method)
      .def_readonly("hurst_mode", &montecarlo::CoverageCell::hurst_mode)
      .def_readonly("point", &montecarlo::CoverageCell::point)
      .def_readonly("coverage", &montecarlo::CoverageCell::coverage)
      .def_readonly("mean_width", &montecarlo::CoverageCell::mean_width)
      .def_readonly("reps_failed", &montecarlo::CoverageCell::reps_failed)
      .def_readonly("reps_used", &montecarlo::CoverageCell::reps_used)
      .def_readonly("unreliable", &montecarlo::CoverageCell::unreliable);

  py::class_<montecarlo::CoverageReport>(m, "CoverageReport")
      .def_readonly("cells", &montecarlo::CoverageReport::cells);

  m.def("run_coverage_experiment", &montecarlo::run_coverage_experiment, "config"_a,
        py::call_guard<py::gil_scoped_release>());
  m.def("true_quantile", &montecarlo::true_quantile, "model"_a, "p"_a);

  // ---- csv --------------------------------------------------------------
  m.def("write_series_csv", &csv::write_series_file, "path"_a, "series"_a);
  m.def("read_series_csv", &csv::read_series_file, "path"_a);
  m.def("write_region_csv", &csv::write_region_file, "path"_a, "region"_a);
  m.def("write_report_csv", &csv::write_report_file, "path"_a, "report"_a);
  m.def(
      "write_histogram_csv",
      [](const std::string& path, const std::vector<double>& values) {
        csv::write_histogram_file(path, values);
      },
      "path"_a, "values"_a);

  m.attr("__version__") = "0.1.0";
}
