#pragma once

#include <stdexcept>
#include <string>

namespace fdo {

/// A numerical contract was violated (quadrature non-convergence,
/// eigensolver failure, an internal inequality check failed).
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The grid cannot resolve the requested spectral window.
class resolution_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A smoothing certificate could not be established at the given scales.
class certificate_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An evaluation left the representable range; carries the offending argument.
class range_overflow_error : public std::range_error {
 public:
  range_overflow_error(const std::string& what, double argument)
      : std::range_error(what + " (argument " + std::to_string(argument) + ")"),
        argument_(argument) {}
  double argument() const { return argument_; }

 private:
  double argument_;
};

}  // namespace fdo
