////////////////////////////////////////////////////////////////////////////////
// series.hpp
//
// Homogeneous expansion of solutions of Delta_a f = 0:
//
//   f(z) = sum_{k>=0} c_k z^k + sum_{k>=1} c_{-k} P_{a,k}(|z|^2) conj(z)^k,
//   P_{a,k}(x) = int_0^1 t^{k-1} (1-tx)^a dt,
//
// with the radial special function P_{a,k}, the singular two-series family
// on the punctured disk used as a composition counterexample, and polynomial
// self-maps for composition experiments.
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <functional>
#include <map>
#include <vector>

#include "alphakit/types.hpp"

namespace alphakit::series {

/// Finitely supported two-sided coefficient sequence {c_k}, k in Z.
class CoefficientSequence {
 public:
  CoefficientSequence() = default;
  explicit CoefficientSequence(std::map<int, Complex> coeffs);

  Complex coefficient(int k) const;
  void set(int k, Complex value);
  const std::map<int, Complex>& entries() const { return coeffs_; }
  int min_index() const;
  int max_index() const;
  bool empty() const { return coeffs_.empty(); }
  /// True when some c_{-k}, k >= 1, is nonzero.
  bool has_antianalytic_part() const;

 private:
  std::map<int, Complex> coeffs_;
};

/// P_{a,k}(x) for -1 < x < 1, k >= 1. Generalized binomial series up to
/// |x| = 0.9, 64-point Gauss-Legendre beyond. Positive for x < 1, and
/// identically 1/k at a = 0.
double p_alpha_k(double x, int k, Alpha alpha);

/// P'_{a,k}(x) from the term-differentiated series (or quadrature of
/// -a int_0^1 t^k (1-tx)^(a-1) dt for |x| > 0.9), not finite differences.
double p_alpha_k_prime(double x, int k, Alpha alpha);

/// | x P'_{a,k}(x) + k P_{a,k}(x) - (1-x)^a |, which integration by parts
/// makes identically zero.
double p_alpha_k_recurrence_residual(double x, int k, Alpha alpha);

class AlphaHarmonicSeries {
 public:
  AlphaHarmonicSeries(CoefficientSequence coeffs, Alpha alpha);

  Complex evaluate(Complex z) const;
  /// d/dz, term-differentiated.
  Complex dz(Complex z) const;
  /// d/dzbar: the analytic part drops and each antianalytic term closes to
  /// c_{-k} conj(z)^{k-1} (1-|z|^2)^a.
  Complex dzbar(Complex z) const;
  /// Delta f = -4 a conj(z) f_zbar / (1-|z|^2).
  Complex laplacian(Complex z) const;

  const CoefficientSequence& coefficients() const { return coeffs_; }
  Alpha alpha() const { return alpha_; }

 private:
  CoefficientSequence coeffs_;
  Alpha alpha_;
};

/// The two-series function on the punctured disk
///   f(z) = ( sum_n a_n x^n - x^(a+1) sum_n b_n x^n ) conj(z)^k,  x = 1-|z|^2,
/// with Gamma-ratio coefficients generated by multiplicative recurrence.
/// Solves Delta_a f = 0 on D \ {0}; evaluation at 0 is a domain error.
class Example1Function {
 public:
  Example1Function(int k, Alpha alpha);  // rejects alpha == 0 and k < 1

  Complex evaluate(Complex z) const;
  Complex operator()(Complex z) const { return evaluate(z); }

  int k() const { return k_; }
  Alpha alpha() const { return alpha_; }
  /// Gamma(a+k+1) / (Gamma(a+1) (k-1)!) by recurrence.
  double leading_constant() const;

 private:
  int k_;
  Alpha alpha_;
  double b0_;  // Gamma(a+k+1)/(Gamma(a+2) Gamma(k))
};

/// Polynomial map psi(z) = sum_j a_j z^j used for composition experiments.
class PolynomialMap {
 public:
  explicit PolynomialMap(std::vector<Complex> coeffs);
  static PolynomialMap identity();
  static PolynomialMap rotation(double t);     // e^{it} z
  static PolynomialMap dilation(Complex a);    // a z
  static PolynomialMap power(int m);           // z^m

  Complex operator()(Complex z) const;
  bool is_rotation() const;
  const std::vector<Complex>& coefficients() const { return coeffs_; }

 private:
  std::vector<Complex> coeffs_;
};

/// z -> f(psi(z)). Carries no harmonicity claim of its own; certification
/// is delegated to the residual operator. Throws RangeError where
/// |psi(z)| >= 1.
std::function<Complex(Complex)> compose(const AlphaHarmonicSeries& f, const PolynomialMap& psi);
std::function<Complex(Complex)> compose(const Example1Function& f, const PolynomialMap& psi);

}  // namespace alphakit::series
