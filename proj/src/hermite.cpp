#include "lrdband/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "lrdband/errors.hpp"
#include "lrdband/normal.hpp"

namespace lrdband::hermite {

namespace {

constexpr double kWindow = 10.0;       // integration window for the quadrature oracle
constexpr double kQuadAbsTol = 1e-8;   // contract on the absolute error
constexpr unsigned kQuadMaxDepth = 12;

using Quad = boost::math::quadrature::gauss_kronrod<double, 31>;

double integrate_hl_phi(int order, double lo, double hi) {
  if (hi <= lo) return 0.0;
  auto integrand = [order](double y) { return hermite_poly(order, y) * norm_pdf(y); };
  double error = 0.0;
  const double value = Quad::integrate(integrand, lo, hi, kQuadMaxDepth, 1e-12, &error);
  if (!(error <= kQuadAbsTol)) {
    std::ostringstream msg;
    msg << "hermite_coeff_quadrature: refinement stalled (error estimate " << error << ")";
    throw numeric_error(msg.str());
  }
  return value;
}

// Splits [-window, window] at the boundary of {y : G(y) <= x} for a
// strictly monotone G by bisection. Returns the sub-interval on which the
// indicator equals 1 (possibly empty).
std::pair<double, double> indicator_interval(const gaussgen::Transform& transform, double x) {
  const auto& g = transform.forward;
  const bool increasing = g(-kWindow) < g(kWindow);
  auto inside = [&](double y) { return g(y) <= x; };

  if (increasing) {
    if (!inside(-kWindow)) return {0.0, 0.0};
    if (inside(kWindow)) return {-kWindow, kWindow};
    double lo = -kWindow, hi = kWindow;  // inside(lo), !inside(hi)
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (inside(mid) ? lo : hi) = mid;
    }
    return {-kWindow, lo};
  }
  if (!inside(kWindow)) return {0.0, 0.0};
  if (inside(-kWindow)) return {-kWindow, kWindow};
  double lo = -kWindow, hi = kWindow;  // !inside(lo), inside(hi)
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (inside(mid) ? hi : lo) = mid;
  }
  return {hi, kWindow};
}

}  // namespace

double hermite_poly(int order, double x) {
  if (order < 0) throw std::invalid_argument("hermite_poly: order must be >= 0");
  if (order > kMaxOrder) {
    throw std::out_of_range("hermite_poly: order exceeds the supported maximum of 64");
  }
  if (order == 0) return 1.0;
  double prev = 1.0;  // H_0
  double cur = x;     // H_1
  for (int n = 1; n < order; ++n) {
    const double next = x * cur - static_cast<double>(n) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_coeff_closed(const std::function<double(double)>& transform_inverse,
                            gaussgen::Monotonicity monotonicity, int order, double x) {
  if (order < 1) throw std::invalid_argument("hermite_coeff_closed: order must be >= 1");
  const double u = transform_inverse(x);
  const double pdf = std::isfinite(u) ? norm_pdf(u) : 0.0;
  if (pdf == 0.0) return 0.0;  // avoids inf * 0 at the tails
  const double value = hermite_poly(order - 1, u) * pdf;
  return monotonicity == gaussgen::Monotonicity::increasing ? -value : value;
}

double hermite_coeff_closed(const gaussgen::Transform& transform, int order, double x) {
  return hermite_coeff_closed(transform.inverse, transform.monotonicity, order, x);
}

double hermite_coeff_quadrature(const gaussgen::Transform& transform, int order, double x) {
  if (order < 1) throw std::invalid_argument("hermite_coeff_quadrature: order must be >= 1");
  const auto [lo, hi] = indicator_interval(transform, x);
  return integrate_hl_phi(order, lo, hi);
}

int lower_order_count(double hurst) {
  if (!(hurst > 0.5 && hurst < 1.0)) {
    throw std::invalid_argument("lower_order_count: hurst must lie in (1/2, 1)");
  }
  const double inv_d = 1.0 / (2.0 - 2.0 * hurst);
  // The nudge keeps exact boundaries (1/D integer, e.g. H = 0.75) in the
  // slow block when rounding lands just below the integer.
  return static_cast<int>(std::floor(inv_d + 1e-9));
}

double HermiteCoefficientTable::coeff(int order, std::size_t grid_index) const {
  if (order < 1 || order > max_order) throw std::out_of_range("coeff: order out of table range");
  return coeffs[static_cast<std::size_t>(order - 1)].at(grid_index);
}

HermiteCoefficientTable HermiteCoefficientTable::build(const gaussgen::LrdModel& model,
                                                       std::vector<double> x_grid,
                                                       int max_order) {
  if (max_order < 1) throw std::invalid_argument("table: max_order must be >= 1");
  if (x_grid.empty()) throw std::invalid_argument("table: x_grid must be non-empty");
  std::sort(x_grid.begin(), x_grid.end());

  HermiteCoefficientTable table;
  table.x_grid = std::move(x_grid);
  table.max_order = max_order;
  table.monotonicity = model.transform.monotonicity;
  table.coeffs.assign(static_cast<std::size_t>(max_order),
                      std::vector<double>(table.x_grid.size(), 0.0));
  for (std::size_t i = 0; i < table.x_grid.size(); ++i) {
    const double x = table.x_grid[i];
    double bessel = 0.0;
    double factorial = 1.0;
    for (int l = 1; l <= max_order; ++l) {
      factorial *= static_cast<double>(l);
      const double c = hermite_coeff_closed(model.transform, l, x);
      table.coeffs[static_cast<std::size_t>(l - 1)][i] = c;
      bessel += c * c / factorial;
    }
    const double f = model.marginal_cdf(x);
    if (bessel > f * (1.0 - f) + 1e-8) {
      std::ostringstream msg;
      msg << "table: Bessel bound violated at x = " << x;
      throw numeric_error(msg.str());
    }
  }
  return table;
}

}  // namespace lrdband::hermite
