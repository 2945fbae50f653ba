#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "lrdband/gaussgen.hpp"

namespace lrdband::hermite {

/// Orders beyond this overflow double range on moderate arguments.
inline constexpr int kMaxOrder = 64;

/// Probabilists' Hermite polynomial H_n(x) by forward recurrence,
/// H_0 = 1, H_1 = x, H_{n+1}(x) = x H_n(x) - n H_{n-1}(x).
double hermite_poly(int order, double x);

/// Closed-form Hermite coefficient of the centered indicator of {G(xi) <= x}:
/// -H_{l-1}(G^{-1}(x)) phi(G^{-1}(x)) for increasing G, + for decreasing.
double hermite_coeff_closed(const std::function<double(double)>& transform_inverse,
                            gaussgen::Monotonicity monotonicity, int order, double x);
double hermite_coeff_closed(const gaussgen::Transform& transform, int order, double x);

/// The same coefficient by adaptive quadrature of H_l(y) phi(y) over
/// {y : G(y) <= x} within [-10, 10], absolute error <= 1e-8. Orientation is
/// detected from the transform's values at the window ends and the set
/// boundary located by bisection, so the evaluation is independent of the
/// closed form above (it serves as its oracle).
double hermite_coeff_quadrature(const gaussgen::Transform& transform, int order, double x);

/// Number of Hermite orders in the slow block: floor(1 / (2 - 2 hurst)).
/// Orders at an exact boundary 1/D are kept in the slow block. Always >= 1
/// for hurst in (1/2, 1).
int lower_order_count(double hurst);

/// Closed-form coefficients tabulated over a grid, orders 1..max_order.
/// Construction validates the Bessel bound
/// sum_l c_l(x)^2 / l! <= F(x)(1 - F(x)) + 1e-8.
struct HermiteCoefficientTable {
  std::vector<double> x_grid;  // sorted
  int max_order = 0;
  gaussgen::Monotonicity monotonicity = gaussgen::Monotonicity::increasing;
  std::vector<std::vector<double>> coeffs;  // coeffs[l-1][i] = c_l(x_grid[i])

  double coeff(int order, std::size_t grid_index) const;

  static HermiteCoefficientTable build(const gaussgen::LrdModel& model,
                                       std::vector<double> x_grid, int max_order);
};

}  // namespace lrdband::hermite
