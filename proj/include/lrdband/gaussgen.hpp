#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace lrdband::gaussgen {

enum class Monotonicity { increasing, decreasing };

/// A strictly monotone bijection G together with its inverse. Built-in
/// transforms extend the inverse to all of R by mapping values outside
/// the range of G to -inf/+inf according to the monotonicity; custom
/// transforms should follow the same convention.
struct Transform {
  std::function<double(double)> forward;
  std::function<double(double)> inverse;
  Monotonicity monotonicity = Monotonicity::increasing;

  static Transform identity();
  static Transform exponential();  // G(y) = exp(y), marginal lognormal
  static Transform negation();     // G(y) = -y, decreasing

  bool is_identity() const { return identity_tag_; }

 private:
  bool identity_tag_ = false;
  friend struct LrdModel;
};

/// Generative model: a standardized long-range dependent Gaussian driver
/// with Hurst parameter in (1/2, 1), pushed through a monotone transform.
/// The slowly varying factor of the autocovariance is fixed to 1.
struct LrdModel {
  double hurst = 0.75;
  Transform transform = Transform::identity();
  /// Density of the marginal of G(xi). Filled in automatically for the
  /// identity transform; optional otherwise (falls back to a central
  /// difference of the marginal distribution function).
  std::function<double(double)> marginal_density;

  LrdModel() = default;
  explicit LrdModel(double hurst_param, Transform t = Transform::identity());

  /// Memory parameter D = 2 - 2H in (0, 1).
  double memory_d() const { return 2.0 - 2.0 * hurst; }

  /// Marginal distribution function of X = G(xi).
  double marginal_cdf(double x) const;

  /// Marginal quantile function (true quantiles, used as simulation truth).
  double marginal_quantile(double p) const;

  /// Marginal density at x; throws std::invalid_argument when unavailable.
  double density(double x) const;

  /// Checks hurst in (1/2, 1) and probes transform/inverse consistency on a
  /// grid (forward(inverse(y)) == y within 1e-10). Throws on violation.
  void validate() const;

  /// Gaussian-marginal model (identity transform).
  static LrdModel gaussian(double hurst_param) { return LrdModel(hurst_param); }
};

/// A finite realization, optionally carrying the latent Gaussian driver
/// (values[n] = G(driver[n])) and the seed it was generated from.
struct TimeSeries {
  std::vector<double> values;
  std::vector<double> driver;  // empty when unknown
  std::optional<LrdModel> model;
  std::uint64_t seed = 0;

  std::size_t size() const { return values.size(); }
  bool has_driver() const { return !driver.empty(); }
};

/// Autocovariance of standardized fractional Gaussian noise,
/// gamma(k) = (|k+1|^{2H} - 2|k|^{2H} + |k-1|^{2H}) / 2. Requires H in (0,1).
double fgn_autocovariance(double hurst, long lag);

/// Exact fractional Gaussian noise of the requested length by circulant
/// embedding (Davies-Harte): the covariance of the output is exactly
/// fgn_autocovariance. Pure function of (hurst, length, seed); requires
/// hurst in (1/2, 1) and length >= 2. The driver equals the values.
TimeSeries generate_fgn(double hurst, std::size_t length, std::uint64_t seed);

/// Applies model.transform to the driver of `series`.
TimeSeries subordinate(const TimeSeries& series, const LrdModel& model);

/// sqrt(Var(xi_1 + ... + xi_N)) for an fGn driver, evaluated from the
/// autocovariance sum N + 2 sum_{k<N} (N-k) gamma(k). Equals N^H.
double exact_dn(double hurst, std::size_t length);

/// The asymptotic normalizer sqrt(H(2H-1)) * N^H used by the asymptotic
/// confidence regions. Requires hurst in (1/2, 1).
double asymptotic_dn(double hurst, std::size_t length);

}  // namespace lrdband::gaussgen
