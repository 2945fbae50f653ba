#pragma once

#include <stdexcept>
#include <string>

namespace lrdband {

/// Failure of a numerical procedure (quadrature refinement, ...).
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A statistical estimate could not be produced (degenerate input, sigma <= 0, ...).
struct estimation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sample-path synthesis failed (invalid circulant embedding, ...).
struct generation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lrdband
