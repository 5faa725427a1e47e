////////////////////////////////////////////////////////////////////////////////
// kernels.hpp
//
// Pointwise evaluation of the kernel functions on the unit disk:
//
//   h(s)      = int_0^s t^a/(1-t) dt
//   phi(z,w)  = (1-|z|^2)(1-|w|^2) / |1 - z conj(w)|^2
//   P(z)      = (1-|z|^2) / |1-z|^2
//   P_a(z)    = (1-|z|^2)^(a+1) / ((1-z)(1-conj z)^(a+1))
//   G_a(z,w)  = -(1 - z conj(w))^a * h(phi(z,w))
//
// and their Wirtinger derivatives. Complex powers with non-integer exponent
// use the principal branch; all bases here have positive real part on the
// disk, so the branch cut is never touched.
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include "alphakit/types.hpp"

namespace alphakit::kernels {

/// h(s) to absolute accuracy tol, for 0 <= s < 1. Series summation up to
/// s = 0.95, Gauss-Legendre integration of the defining integral beyond.
double h_alpha(double s, Alpha alpha, double tol = 1e-12);

/// h(1 - x) for x in (0, 1]. Takes the complement of s directly so callers
/// that know 1-s exactly (e.g. x = r^2 on a Mobius-centered grid) do not
/// lose precision as s -> 1.
double h_alpha_complement(double x, Alpha alpha, double tol = 1e-12);

/// Upper bound of h from the series comparison: s^a log(1/(1-s)), a >= 0.
double h_alpha_bound(double s, Alpha alpha);

/// phi(z,w) in (0,1]; symmetric, and 1 exactly when z == w.
double phi(Complex z, Complex w);

/// Classical Poisson kernel (1-|z|^2)/|1-z|^2, |z| < 1.
double poisson_kernel(Complex z);

/// Weighted Poisson kernel P_a(z), |z| < 1. Real and equal to the classical
/// kernel at a = 0.
Complex poisson_kernel_alpha(Complex z, Alpha alpha);

/// Weighted Green function G_a(z,w), z != w, both in the open disk.
/// Hermitian: G_a(w,z) = conj(G_a(z,w)).
Complex green_alpha(Complex z, Complex w, Alpha alpha);

/// Modulus bound of G_a for a >= 0:
///   |G_a(z,w)| <= 2^a (1-|z|^2)^a log|(1 - conj(z) w)/(z-w)|^2.
double green_alpha_bound(Complex z, Complex w, Alpha alpha);

/// d/dz and d/dzbar of z |-> P_a(z e^{-i theta}), closed forms.
Complex poisson_kernel_alpha_dz(Complex z, double theta, Alpha alpha);
Complex poisson_kernel_alpha_dzbar(Complex z, double theta, Alpha alpha);

// Pointwise Wirtinger derivatives of G_a away from the diagonal. The dz
// form combines the sign that matches finite differences with the
// (1-|w|^2)^(a+1) exponent; see the regression tests.
Complex green_alpha_dz(Complex z, Complex w, Alpha alpha);
Complex green_alpha_dzbar(Complex z, Complex w, Alpha alpha);

// Certified variants for export: value plus the Lemma-type modulus bound
// when one is available (a >= 0).
KernelValue h_alpha_value(double s, Alpha alpha, double tol = 1e-12);
KernelValue phi_value(Complex z, Complex w);
KernelValue poisson_kernel_value(Complex z);
KernelValue poisson_kernel_alpha_value(Complex z, Alpha alpha);
KernelValue green_alpha_value(Complex z, Complex w, Alpha alpha);

}  // namespace alphakit::kernels
