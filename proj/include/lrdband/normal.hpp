#pragma once

namespace lrdband {

/// Standard normal density phi(x).
double norm_pdf(double x);

/// Standard normal distribution function Phi(x).
double norm_cdf(double x);

/// Standard normal quantile Phi^{-1}(p), p in (0, 1).
double norm_quantile(double p);

}  // namespace lrdband
