////////////////////////////////////////////////////////////////////////////////
// quadrature.hpp
//
// Deterministic quadrature on the circle and the (normalized-measure) disk,
// plus the Mobius change of variables that recenters Green-type integrands
// so their logarithmic singularity lands at the origin of the radial rule.
//
// All rules sum in a fixed order; identical inputs give bit-identical
// results regardless of how callers parallelize around them.
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <functional>
#include <vector>

#include "alphakit/types.hpp"

namespace alphakit::quad {

/// Gauss-Legendre nodes and weights on (0,1).
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

/// Uniform (trapezoid) rule on the circle: theta_j = 2 pi j / n with weight
/// 2 pi / n. Exact for e^{ik theta}, |k| < n.
class CircleRule {
 public:
  explicit CircleRule(int n);
  int size() const { return n_; }
  double node(int j) const;
  double weight() const { return kTwoPi / n_; }

 private:
  int n_;
};

/// Normalized mean (1/2pi) int f(theta) dtheta.
Complex integrate_circle(const std::function<Complex(double)>& f, const CircleRule& rule);

/// Tensor rule on the unit disk under normalized area measure
/// dA = dx dy / pi: Gauss-Legendre in r (weight r folded into the rule),
/// trapezoid in the angle. Weights are positive and sum to 1.
class DiskRule {
 public:
  DiskRule(int radial_order, int angular_order);
  static DiskRule defaults() { return DiskRule(64, 256); }

  int radial_order() const { return static_cast<int>(radii_.size()); }
  int angular_order() const { return angular_; }
  const std::vector<double>& radii() const { return radii_; }
  /// Radial weight already containing the factor 2 r_i; the angular mean
  /// completes the measure.
  const std::vector<double>& radial_weights() const { return radial_weights_; }
  double theta(int j) const;

 private:
  std::vector<double> radii_;
  std::vector<double> radial_weights_;
  int angular_;
};

/// An integrand on the disk, optionally flagged singular at a point.
/// Plain disk integration refuses flagged integrands; route them through
/// integrate_disk_mobius centered at the singularity.
struct Integrand {
  std::function<Complex(Complex)> eval;
  std::optional<Complex> singular_at;
};

Complex integrate_disk(const std::function<Complex(Complex)>& f, const DiskRule& rule);
Complex integrate_disk(const Integrand& f, const DiskRule& rule);

/// Disk automorphism w -> (center - w)/(1 - w conj(center)); an involution
/// swapping center and 0.
class MobiusMap {
 public:
  explicit MobiusMap(Complex center);
  Complex operator()(Complex w) const;
  Complex center() const { return center_; }

 private:
  Complex center_;
};

/// Radial grid used after the Mobius substitution: Gauss-Legendre nodes u_i
/// on (0,1) mapped through the quintic r = 10u^3 - 15u^4 + 6u^5, which
/// clusters cubically at both endpoints. That integrates the radial log
/// factor of recentered Green integrands (and their fractional-power decay
/// at the rim) to near machine precision at moderate orders.
class MobiusRule {
 public:
  explicit MobiusRule(const DiskRule& rule);

  int radial_order() const { return static_cast<int>(radii_.size()); }
  int angular_order() const { return angular_; }
  const std::vector<double>& radii() const { return radii_; }
  /// Weight of radius i, containing the substitution Jacobian 3u^2 and the
  /// polar factor 2 r.
  const std::vector<double>& radial_weights() const { return radial_weights_; }
  double theta(int j) const;

 private:
  std::vector<double> radii_;
  std::vector<double> radial_weights_;
  int angular_;
};

/// int_D f dA computed after substituting w = (center - zeta)/(1 - zeta
/// conj(center)) with Jacobian (1-|center|^2)^2/|1 - zeta conj(center)|^4.
/// A singularity of f at the center is moved to zeta = 0.
Complex integrate_disk_mobius(const std::function<Complex(Complex)>& f, Complex center,
                              const DiskRule& rule);
Complex integrate_disk_mobius(const std::function<Complex(Complex)>& f, Complex center,
                              const MobiusRule& rule);

}  // namespace alphakit::quad
