////////////////////////////////////////////////////////////////////////////////
// solver.hpp
//
// The two integral operators whose sum solves the Dirichlet problem
//
//   Delta_a f = g   in D,      f = f*   on the circle (radial limit):
//
//   poisson_integral: f*  |->  (1/2pi) int P_a(z e^{-i theta}) f*(e^{i theta}) dtheta
//   green_potential:  g   |->  int_D G_a(z,w) g(w) dA(w)
//
// The Green potential is always evaluated through the Mobius-recentered
// rule; on that grid phi(z, w(zeta)) = 1 - |zeta|^2 holds exactly, so the
// radial profile h(1-r^2) is computed once per rule without cancellation.
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <vector>

#include "alphakit/boundary.hpp"
#include "alphakit/quadrature.hpp"
#include "alphakit/source.hpp"
#include "alphakit/types.hpp"

namespace alphakit::solver {

struct QuadratureConfig {
  int circle_order = 512;
  int radial_order = 64;
  int angular_order = 256;
};

/// First-order data of a planar map at a point.
struct JacobianData {
  Complex fz;
  Complex fzbar;
  /// Largest directional stretch |f_z| + |f_zbar|.
  double op_norm() const { return std::abs(fz) + std::abs(fzbar); }
  /// Smallest directional stretch ||f_z| - |f_zbar||.
  double min_stretch() const { return std::abs(std::abs(fz) - std::abs(fzbar)); }
};

Complex poisson_integral(const BoundaryData& fstar, Complex z, Alpha alpha,
                         const QuadratureConfig& cfg = {});

Complex green_potential(const SourceField& g, Complex z, Alpha alpha,
                        const QuadratureConfig& cfg = {});

/// The solution field z -> P_a[f*](z) + G[g](z). Immutable after
/// construction; value and jacobian queries at distinct points are
/// independent and thread-safe.
class SolutionField {
 public:
  SolutionField(BoundaryData fstar, SourceField g, Alpha alpha,
                QuadratureConfig cfg = {});

  Complex value(Complex z) const;
  Complex poisson_part(Complex z) const;
  Complex green_part(Complex z) const;

  /// f_z and f_zbar by differentiation under the integral sign: circle
  /// quadrature against the Poisson kernel derivatives, recentered disk
  /// quadrature against the Green kernel derivatives.
  JacobianData jacobian(Complex z) const;

  /// Delta f = 4 f_{zbar z} through the equation:
  /// Delta f = 4 (1-|z|^2)^a g(z) - 4 a conj(z) f_zbar / (1-|z|^2).
  Complex laplacian(Complex z) const;

  /// Radial boundary limit at angle theta, extrapolated linearly in (1-r)
  /// from r in {0.9, 0.99, 0.999} with a circle rule refined as r -> 1.
  Complex boundary_limit(double theta) const;

  Alpha alpha() const { return alpha_; }
  const BoundaryData& boundary() const { return fstar_; }
  const SourceField& source() const { return g_; }
  const QuadratureConfig& config() const { return cfg_; }

 private:
  Complex poisson_part_order(Complex z, int order) const;

  BoundaryData fstar_;
  SourceField g_;
  Alpha alpha_;
  QuadratureConfig cfg_;

  // Cached quadrature data.
  std::vector<Complex> boundary_samples_;   // f* at the circle nodes
  quad::MobiusRule green_rule_;
  std::vector<double> h_profile_;           // h(1 - r_i^2), once per rule
};

SolutionField solve(BoundaryData fstar, SourceField g, Alpha alpha,
                    QuadratureConfig cfg = {});

JacobianData solution_jacobian(const SolutionField& field, Complex z);

}  // namespace alphakit::solver
