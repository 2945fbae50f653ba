#include "lrdband/normal.hpp"

#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

namespace lrdband {

namespace {
const boost::math::normal_distribution<double> kStdNormal(0.0, 1.0);
}

double norm_pdf(double x) { return boost::math::pdf(kStdNormal, x); }

double norm_cdf(double x) { return boost::math::cdf(kStdNormal, x); }

double norm_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("norm_quantile: p must lie in (0, 1)");
  }
  return boost::math::quantile(kStdNormal, p);
}

}  // namespace lrdband
