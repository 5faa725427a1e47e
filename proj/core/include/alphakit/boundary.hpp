////////////////////////////////////////////////////////////////////////////////
// boundary.hpp
//
// Boundary data on the unit circle as a finite trigonometric polynomial.
// Sample-based construction interpolates n uniform samples by the discrete
// Fourier transform, so both representations evaluate through the same
// coefficient form f*(e^{i theta}) = sum_k c_k e^{ik theta}.
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <map>
#include <vector>

#include "alphakit/types.hpp"

namespace alphakit::solver {

class BoundaryData {
 public:
  /// Zero boundary data.
  BoundaryData() = default;

  static BoundaryData fourier(std::map<int, Complex> coefficients);
  /// Trigonometric interpolation of uniform samples at theta_j = 2 pi j / n.
  static BoundaryData samples(const std::vector<Complex>& values);
  static BoundaryData constant(Complex c);
  static BoundaryData zero() { return BoundaryData(); }

  Complex evaluate(double theta) const;
  Complex coefficient(int k) const;
  const std::map<int, Complex>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;

  /// Supremum norm. Computed as the max over a 4096-point angular grid
  /// unless a dominating value was declared.
  double sup_norm() const { return sup_norm_; }

  /// Declares a known sup norm; must dominate the grid maximum.
  void declare_sup_norm(double value);

  /// Data with the constant c removed from the k = 0 mode.
  BoundaryData minus_constant(Complex c) const;

 private:
  void refresh_norm();

  std::map<int, Complex> coeffs_;
  double sup_norm_ = 0.0;
};

}  // namespace alphakit::solver
