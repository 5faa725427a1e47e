////////////////////////////////////////////////////////////////////////////////
// residual.hpp
//
// Finite-difference discretization of the operator
//
//   Delta_a f = d/dz [ (1-|z|^2)^(-a) d/dzbar f ]
//             = (1-|z|^2)^(-a) [ Lap(f)/4 + a conj(z) f_zbar / (1-|z|^2) ],
//
// on the 5-point Wirtinger stencil {z, z +- h, z +- ih}. O(h^2) accurate.
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <functional>
#include <optional>

#include "alphakit/types.hpp"

namespace alphakit::analysis {

struct ResidualConfig {
  /// Step scale; the effective step at z is step_base * (1 - |z|), which
  /// keeps the stencil inside the disk.
  double step_base = 2e-4;
  /// Certification threshold for |Delta_a f - g|.
  double tolerance = 1e-4;
  /// Declared puncture of the field, if any; stencils touching it are
  /// rejected.
  std::optional<Complex> puncture;

  double step_at(Complex z) const;
};

/// Finite-difference Delta_a f at z. Domain error if the stencil exits the
/// disk or hits a declared puncture.
Complex delta_alpha_residual(const std::function<Complex(Complex)>& f, Complex z, Alpha alpha,
                             const ResidualConfig& cfg = {});

}  // namespace alphakit::analysis
