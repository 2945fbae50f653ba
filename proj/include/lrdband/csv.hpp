#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "lrdband/confidence.hpp"
#include "lrdband/gaussgen.hpp"
#include "lrdband/montecarlo.hpp"

namespace lrdband::csv {

// All writers print 17 significant digits so numeric round trips are exact.
// Series files: header "index,value[,driver]", one row per observation.

std::string format_double(double v);

void write_series(std::ostream& out, const gaussgen::TimeSeries& series);
void write_series_file(const std::string& path, const gaussgen::TimeSeries& series);

gaussgen::TimeSeries read_series(std::istream& in);
gaussgen::TimeSeries read_series_file(const std::string& path);

// Region files: "x,lower,upper,center,method,level"; quantile intervals are
// a single row with x = p.
void write_region(std::ostream& out, const confidence::ConfidenceRegion& region);
void write_region_file(const std::string& path, const confidence::ConfidenceRegion& region);

// Report files: "hurst,N,method,hurst_mode,point,coverage,mean_width,reps_failed".
void write_report(std::ostream& out, const montecarlo::CoverageReport& report);
void write_report_file(const std::string& path, const montecarlo::CoverageReport& report);

// Histogram files: "rep,value".
void write_histogram(std::ostream& out, std::span<const double> values);
void write_histogram_file(const std::string& path, std::span<const double> values);

}  // namespace lrdband::csv
