#include "lrdband/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace lrdband::csv {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_double(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::runtime_error("series csv: bad numeric field on line " + std::to_string(line_no));
  }
  return value;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_series(std::ostream& out, const gaussgen::TimeSeries& series) {
  const bool with_driver = series.has_driver();
  out << (with_driver ? "index,value,driver\n" : "index,value\n");
  for (std::size_t i = 0; i < series.values.size(); ++i) {
    out << i << ',' << format_double(series.values[i]);
    if (with_driver) out << ',' << format_double(series.driver[i]);
    out << '\n';
  }
}

void write_series_file(const std::string& path, const gaussgen::TimeSeries& series) {
  auto out = open_out(path);
  write_series(out, series);
}

gaussgen::TimeSeries read_series(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("series csv: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  bool with_driver = false;
  if (line == "index,value,driver") {
    with_driver = true;
  } else if (line != "index,value") {
    throw std::runtime_error("series csv: unrecognized header '" + line + "'");
  }

  gaussgen::TimeSeries series;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != (with_driver ? 3u : 2u)) {
      throw std::runtime_error("series csv: wrong field count on line " + std::to_string(line_no));
    }
    series.values.push_back(parse_double(fields[1], line_no));
    if (with_driver) series.driver.push_back(parse_double(fields[2], line_no));
  }
  if (series.values.empty()) throw std::runtime_error("series csv: no observations");
  return series;
}

gaussgen::TimeSeries read_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return read_series(in);
}

void write_region(std::ostream& out, const confidence::ConfidenceRegion& region) {
  out << "x,lower,upper,center,method,level\n";
  for (std::size_t i = 0; i < region.x_grid.size(); ++i) {
    out << format_double(region.x_grid[i]) << ',' << format_double(region.lower[i]) << ','
        << format_double(region.upper[i]) << ',' << format_double(region.center[i]) << ','
        << confidence::method_name(region.method) << ',' << format_double(region.level) << '\n';
  }
}

void write_region_file(const std::string& path, const confidence::ConfidenceRegion& region) {
  auto out = open_out(path);
  write_region(out, region);
}

void write_report(std::ostream& out, const montecarlo::CoverageReport& report) {
  out << "hurst,N,method,hurst_mode,point,coverage,mean_width,reps_failed\n";
  for (const auto& cell : report.cells) {
    out << format_double(cell.hurst) << ',' << cell.length << ','
        << confidence::method_name(cell.method) << ',' << montecarlo::hurst_mode_name(cell.hurst_mode)
        << ',' << format_double(cell.point) << ',' << format_double(cell.coverage) << ','
        << format_double(cell.mean_width) << ',' << cell.reps_failed << '\n';
  }
}

void write_report_file(const std::string& path, const montecarlo::CoverageReport& report) {
  auto out = open_out(path);
  write_report(out, report);
}

void write_histogram(std::ostream& out, std::span<const double> values) {
  out << "rep,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << i << ',' << format_double(values[i]) << '\n';
  }
}

void write_histogram_file(const std::string& path, std::span<const double> values) {
  auto out = open_out(path);
  write_histogram(out, values);
}

}  // namespace lrdband::csv
