#include "lrdband/gaussgen.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <mutex>
#include <new>
#include <sstream>
#include <stdexcept>

#include <fftw3.h>

#include "lrdband/errors.hpp"
#include "lrdband/normal.hpp"
#include "lrdband/rng.hpp"

namespace lrdband::gaussgen {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_hurst_open_unit(double hurst) {
  if (!(hurst > 0.0 && hurst < 1.0)) {
    throw std::invalid_argument("hurst must lie in (0, 1)");
  }
}

void require_hurst_lrd(double hurst) {
  if (!(hurst > 0.5 && hurst < 1.0)) {
    throw std::invalid_argument("hurst must lie in (1/2, 1)");
  }
}

// FFTW plan creation/destruction is not thread safe; executions on
// distinct plans are.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  explicit FftwBuffer(std::size_t n)
      : data(static_cast<fftw_complex*>(fftw_malloc(n * sizeof(fftw_complex)))) {
    if (data == nullptr) throw std::bad_alloc();
  }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  ~FftwBuffer() { fftw_free(data); }

  fftw_complex* data;
};

struct FftwPlan {
  FftwPlan(std::size_t n, fftw_complex* buf) {
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  FftwPlan(const FftwPlan&) = delete;
  FftwPlan& operator=(const FftwPlan&) = delete;
  ~FftwPlan() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
  }
  void execute() const { fftw_execute(plan); }

  fftw_plan plan;
};

}  // namespace

Transform Transform::identity() {
  Transform t;
  t.forward = [](double y) { return y; };
  t.inverse = [](double x) { return x; };
  t.monotonicity = Monotonicity::increasing;
  t.identity_tag_ = true;
  return t;
}

Transform Transform::exponential() {
  Transform t;
  t.forward = [](double y) { return std::exp(y); };
  t.inverse = [](double x) { return x > 0.0 ? std::log(x) : -kInf; };
  t.monotonicity = Monotonicity::increasing;
  return t;
}

Transform Transform::negation() {
  Transform t;
  t.forward = [](double y) { return -y; };
  t.inverse = [](double x) { return -x; };
  t.monotonicity = Monotonicity::decreasing;
  return t;
}

LrdModel::LrdModel(double hurst_param, Transform t) : hurst(hurst_param), transform(std::move(t)) {
  if (transform.is_identity()) {
    marginal_density = [](double x) { return norm_pdf(x); };
  }
}

double LrdModel::marginal_cdf(double x) const {
  const double u = transform.inverse(x);
  if (transform.monotonicity == Monotonicity::increasing) {
    return u == -kInf ? 0.0 : (u == kInf ? 1.0 : norm_cdf(u));
  }
  return u == -kInf ? 1.0 : (u == kInf ? 0.0 : 1.0 - norm_cdf(u));
}

double LrdModel::marginal_quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("marginal_quantile: p must lie in (0, 1)");
  }
  const double q = transform.monotonicity == Monotonicity::increasing
                       ? norm_quantile(p)
                       : norm_quantile(1.0 - p);
  return transform.forward(q);
}

double LrdModel::density(double x) const {
  double f;
  if (marginal_density) {
    f = marginal_density(x);
  } else {
    const double h = 1e-5 * std::max(1.0, std::abs(x));
    f = (marginal_cdf(x + h) - marginal_cdf(x - h)) / (2.0 * h);
  }
  if (!std::isfinite(f) || f <= 0.0) {
    throw std::invalid_argument("marginal density vanishes or is unavailable here");
  }
  return f;
}

void LrdModel::validate() const {
  require_hurst_lrd(hurst);
  if (!transform.forward || !transform.inverse) {
    throw std::invalid_argument("transform must provide forward and inverse maps");
  }
  const bool increasing = transform.monotonicity == Monotonicity::increasing;
  double prev = 0.0;
  bool have_prev = false;
  for (double u = -3.0; u <= 3.0 + 1e-12; u += 0.5) {
    const double x = transform.forward(u);
    if (!std::isfinite(x)) {
      throw std::invalid_argument("transform produced a non-finite value on the probe grid");
    }
    if (have_prev && !(increasing ? x > prev : x < prev)) {
      throw std::invalid_argument("transform is not strictly monotone in the declared direction");
    }
    const double round_trip = transform.forward(transform.inverse(x));
    if (std::abs(round_trip - x) > 1e-10 * std::max(1.0, std::abs(x))) {
      throw std::invalid_argument("transform inverse fails the round-trip probe");
    }
    prev = x;
    have_prev = true;
  }
}

double fgn_autocovariance(double hurst, long lag) {
  require_hurst_open_unit(hurst);
  if (lag < 0) lag = -lag;
  if (lag == 0) return 1.0;
  const double k = static_cast<double>(lag);
  const double two_h = 2.0 * hurst;
  return 0.5 * (std::pow(k + 1.0, two_h) - 2.0 * std::pow(k, two_h) + std::pow(k - 1.0, two_h));
}

TimeSeries generate_fgn(double hurst, std::size_t length, std::uint64_t seed) {
  require_hurst_lrd(hurst);
  if (length < 2) throw std::invalid_argument("generate_fgn: length must be >= 2");

  // Smallest power of two M >= 2(N-1); the covariance of the first N
  // entries of the circulant is then exactly the fGn autocovariance.
  std::size_t m = 2;
  while (m < 2 * (length - 1)) m *= 2;
  const std::size_t half = m / 2;

  FftwBuffer buf(m);
  FftwPlan plan(m, buf.data);

  for (std::size_t j = 0; j < m; ++j) {
    buf.data[j][0] = fgn_autocovariance(hurst, static_cast<long>(std::min(j, m - j)));
    buf.data[j][1] = 0.0;
  }
  plan.execute();

  std::vector<double> eigen(m);
  double min_eigen = kInf;
  for (std::size_t j = 0; j < m; ++j) {
    eigen[j] = buf.data[j][0];
    min_eigen = std::min(min_eigen, eigen[j]);
  }
  if (min_eigen < -1e-8) {
    std::ostringstream msg;
    msg << "circulant embedding is not nonnegative definite (minimum eigenvalue " << min_eigen
        << ")";
    throw generation_error(msg.str());
  }
  for (double& lambda : eigen) lambda = std::max(lambda, 0.0);

  // Wood-Chan synthesis: real weights at the two self-conjugate nodes,
  // conjugate complex pairs elsewhere. Draw order is fixed.
  GaussianSource gauss(seed);
  buf.data[0][0] = std::sqrt(eigen[0] / static_cast<double>(m)) * gauss.next();
  buf.data[0][1] = 0.0;
  buf.data[half][0] = std::sqrt(eigen[half] / static_cast<double>(m)) * gauss.next();
  buf.data[half][1] = 0.0;
  for (std::size_t k = 1; k < half; ++k) {
    const double scale = std::sqrt(eigen[k] / (2.0 * static_cast<double>(m)));
    const double re = scale * gauss.next();
    const double im = scale * gauss.next();
    buf.data[k][0] = re;
    buf.data[k][1] = im;
    buf.data[m - k][0] = re;
    buf.data[m - k][1] = -im;
  }
  plan.execute();

  TimeSeries series;
  series.seed = seed;
  series.model = LrdModel::gaussian(hurst);
  series.values.resize(length);
  for (std::size_t n = 0; n < length; ++n) series.values[n] = buf.data[n][0];
  series.driver = series.values;
  return series;
}

TimeSeries subordinate(const TimeSeries& series, const LrdModel& model) {
  if (!series.has_driver()) {
    throw std::invalid_argument("subordinate: series has no driver");
  }
  model.validate();
  TimeSeries out;
  out.seed = series.seed;
  out.model = model;
  out.driver = series.driver;
  out.values.resize(series.driver.size());
  std::transform(series.driver.begin(), series.driver.end(), out.values.begin(),
                 model.transform.forward);
  return out;
}

double exact_dn(double hurst, std::size_t length) {
  require_hurst_open_unit(hurst);
  if (length == 0) throw std::invalid_argument("exact_dn: length must be >= 1");
  const double n = static_cast<double>(length);
  double acc = 0.0;
  for (std::size_t k = 1; k < length; ++k) {
    acc += (n - static_cast<double>(k)) * fgn_autocovariance(hurst, static_cast<long>(k));
  }
  return std::sqrt(n + 2.0 * acc);
}

double asymptotic_dn(double hurst, std::size_t length) {
  if (!(hurst > 0.5 && hurst < 1.0)) {
    throw std::invalid_argument("asymptotic_dn: hurst must lie in (1/2, 1); the expression degenerates at 1/2");
  }
  if (length == 0) throw std::invalid_argument("asymptotic_dn: length must be >= 1");
  return std::sqrt(hurst * (2.0 * hurst - 1.0)) * std::pow(static_cast<double>(length), hurst);
}

}  // namespace lrdband::gaussgen
