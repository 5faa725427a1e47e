////////////////////////////////////////////////////////////////////////////////
// types.hpp
//
// Shared scalar types and error hierarchy for the disk toolkit.
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

namespace alphakit {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Argument outside the domain of an operation (point off the disk,
/// parameter out of range, malformed input).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Kernel evaluated on its diagonal z == w, where it is singular.
class CoincidenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series or adaptive scheme failed to reach the requested accuracy
/// within its iteration cap.
class NonconvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A map left the unit disk at a requested evaluation point.
class RangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An evaluation hit a point where the requested quantity is singular
/// (e.g. |f|^(p-4) at a zero of f).
class SingularPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A theorem hypothesis does not hold for the supplied data.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weight exponent of the operator; only alpha > -1 is admissible.
class Alpha {
 public:
  explicit Alpha(double value) : value_(value) {
    if (!(value > -1.0) || !std::isfinite(value)) {
      throw DomainError("Alpha: parameter must be finite and > -1");
    }
  }
  double value() const { return value_; }

 private:
  double value_;
};

/// A kernel evaluation together with an optional certified bound on its
/// modulus.
struct KernelValue {
  Complex value;
  std::optional<double> abs_bound;
};

/// |z|^2 without the square root.
inline double abs2(Complex z) { return std::norm(z); }

inline bool in_open_disk(Complex z) { return abs2(z) < 1.0; }
inline bool in_closed_disk(Complex z) { return abs2(z) <= 1.0; }

inline void require_open_disk(Complex z, const char* what) {
  if (!in_open_disk(z)) {
    throw DomainError(std::string(what) + ": point must lie in the open unit disk");
  }
}

}  // namespace alphakit
