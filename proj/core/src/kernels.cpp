#include "alphakit/kernels.hpp"

#include <array>
#include <cmath>

namespace alphakit::kernels {
namespace {

constexpr int kSeriesCap = 1000000;
// Branch point between the series for h and integration of the complement.
constexpr double kSeriesLimit = 0.95;

// 15-point Gauss-Legendre on [-1,1].
constexpr std::array<double, 8> kGl15X = {
    0.0,
    0.2011940939974345223006283,
    0.3941513470775633698972074,
    0.5709721726085388475372267,
    0.7244177313601700474161861,
    0.8482065834104272162006483,
    0.9372733924007059043077589,
    0.9879925180204854284895657};
constexpr std::array<double, 8> kGl15W = {
    0.2025782419255612728806202,
    0.1984314853271115764561183,
    0.1861610000155622110268006,
    0.1662692058169939335532009,
    0.1395706779261543144478048,
    0.1071592204671719350118695,
    0.0703660474881081247092674,
    0.0307532419961172683546284};

template <typename F>
double gl15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double acc = kGl15W[0] * f(c);
  for (int i = 1; i < 8; ++i) {
    const double dx = h * kGl15X[i];
    acc += kGl15W[i] * (f(c + dx) + f(c - dx));
  }
  return acc * h;
}

double pow_alpha(double base, double exponent) { return std::pow(base, exponent); }

}  // namespace

double h_alpha(double s, Alpha alpha, double tol) {
  if (!(s >= 0.0 && s < 1.0)) throw DomainError("h_alpha: s must lie in [0,1)");
  if (!(tol > 0.0)) throw DomainError("h_alpha: tol must be positive");
  if (s == 0.0) return 0.0;
  if (s > kSeriesLimit) return h_alpha_complement(1.0 - s, alpha, tol);

  const double a = alpha.value();
  // sum_{n>=0} s^(a+1+n)/(a+1+n); geometric tail <= term * s/(1-s), so
  // stopping at term < tol*(1-s) bounds the tail by tol.
  double p = std::pow(s, a + 1.0);
  double acc = 0.0;
  const double cutoff = tol * (1.0 - s);
  for (int n = 0; n < kSeriesCap; ++n) {
    const double term = p / (a + 1.0 + n);
    acc += term;
    if (term < cutoff) return acc;
    p *= s;
  }
  throw NonconvergenceError("h_alpha: series did not meet tolerance within the iteration cap");
}

double h_alpha_complement(double x, Alpha alpha, double tol) {
  if (!(x > 0.0 && x <= 1.0)) throw DomainError("h_alpha_complement: 1-s must lie in (0,1]");
  if (!(tol > 0.0)) throw DomainError("h_alpha_complement: tol must be positive");
  const double a = alpha.value();
  // h(1-x) = int_x^1 (1-u)^a / u du on panels graded geometrically toward
  // both endpoints; each panel sees an analytic integrand, so a fixed
  // 15-point rule is already at machine accuracy. The right half runs in
  // the complement variable v = 1-u, keeping the v^a factor exact near the
  // endpoint (in the u variable, 1-u rounds to 0 once v < machine epsilon).
  double acc = 0.0;
  int guard = 0;
  if (x < 0.5) {
    const auto f_u = [a](double u) { return pow_alpha(1.0 - u, a) / u; };
    double lo = x;
    while (lo < 0.5) {
      const double hi = std::min(2.0 * lo, 0.5);
      acc += gl15(f_u, lo, hi);
      lo = hi;
      if (++guard > kSeriesCap) throw NonconvergenceError("h_alpha_complement: panel cap");
    }
  }
  if (x < 1.0) {
    const auto f_v = [a](double v) { return pow_alpha(v, a) / (1.0 - v); };
    double v = std::min(0.5, 1.0 - x);
    // Below floor_v the remaining integral differs from its analytic head
    // v^(a+1)/(a+1) by about v^(a+2)/(a+2) < tol/100.
    const double floor_v = std::pow(0.01 * tol * (a + 2.0), 1.0 / (a + 2.0));
    while (v > floor_v && v > 1e-300) {
      acc += gl15(f_v, 0.5 * v, v);
      v *= 0.5;
      if (++guard > kSeriesCap) throw NonconvergenceError("h_alpha_complement: panel cap");
    }
    acc += std::pow(v, a + 1.0) / (a + 1.0);
  }
  return acc;
}

double h_alpha_bound(double s, Alpha alpha) {
  if (!(s >= 0.0 && s < 1.0)) throw DomainError("h_alpha_bound: s must lie in [0,1)");
  if (alpha.value() < 0.0) throw DomainError("h_alpha_bound: requires alpha >= 0");
  if (s == 0.0) return 0.0;
  return std::pow(s, alpha.value()) * std::log(1.0 / (1.0 - s));
}

double phi(Complex z, Complex w) {
  require_open_disk(z, "phi");
  require_open_disk(w, "phi");
  const double num = (1.0 - abs2(z)) * (1.0 - abs2(w));
  return num / abs2(1.0 - z * std::conj(w));
}

double poisson_kernel(Complex z) {
  require_open_disk(z, "poisson_kernel");
  return (1.0 - abs2(z)) / abs2(1.0 - z);
}

Complex poisson_kernel_alpha(Complex z, Alpha alpha) {
  require_open_disk(z, "poisson_kernel_alpha");
  const double a = alpha.value();
  const double w = std::pow(1.0 - abs2(z), a + 1.0);
  return w / ((1.0 - z) * std::pow(1.0 - std::conj(z), a + 1.0));
}

namespace {

// phi and its complement 1-phi computed together; the complement comes from
// |z-w|^2 directly, not from 1-phi, so h near the diagonal keeps full
// precision.
struct PhiParts {
  double phi;
  double one_minus_phi;
};

PhiParts phi_parts(Complex z, Complex w) {
  const double d = abs2(1.0 - z * std::conj(w));
  const double p = (1.0 - abs2(z)) * (1.0 - abs2(w)) / d;
  const double q = abs2(z - w) / d;
  return {p, q};
}

}  // namespace

Complex green_alpha(Complex z, Complex w, Alpha alpha) {
  require_open_disk(z, "green_alpha");
  require_open_disk(w, "green_alpha");
  const auto parts = phi_parts(z, w);
  if (!(parts.one_minus_phi > 0.0)) {
    throw CoincidenceError("green_alpha: z == w (logarithmic singularity)");
  }
  const double h = parts.one_minus_phi < 0.05
                       ? h_alpha_complement(parts.one_minus_phi, alpha)
                       : h_alpha(parts.phi, alpha);
  return -std::pow(1.0 - z * std::conj(w), alpha.value()) * h;
}

double green_alpha_bound(Complex z, Complex w, Alpha alpha) {
  require_open_disk(z, "green_alpha_bound");
  require_open_disk(w, "green_alpha_bound");
  if (alpha.value() < 0.0) throw DomainError("green_alpha_bound: requires alpha >= 0");
  if (z == w) throw CoincidenceError("green_alpha_bound: z == w");
  const double a = alpha.value();
  const double ratio = abs2(1.0 - std::conj(z) * w) / abs2(z - w);
  return std::pow(2.0, a) * std::pow(1.0 - abs2(z), a) * std::log(ratio);
}

Complex poisson_kernel_alpha_dz(Complex z, double theta, Alpha alpha) {
  require_open_disk(z, "poisson_kernel_alpha_dz");
  const double a = alpha.value();
  const Complex e = std::polar(1.0, -theta);
  const Complex u = z * e;
  const double one_m_z2 = 1.0 - abs2(z);
  const Complex num =
      std::pow(one_m_z2, a) * (e * one_m_z2 - (a + 1.0) * std::conj(z) * (1.0 - u));
  const Complex den = (1.0 - u) * (1.0 - u) * std::pow(1.0 - std::conj(u), a + 1.0);
  return num / den;
}

Complex poisson_kernel_alpha_dzbar(Complex z, double theta, Alpha alpha) {
  require_open_disk(z, "poisson_kernel_alpha_dzbar");
  const double a = alpha.value();
  const Complex ebar = std::polar(1.0, theta);
  const double one_m_z2 = 1.0 - abs2(z);
  return (a + 1.0) * std::pow(one_m_z2, a) * ebar /
         std::pow(1.0 - std::conj(z) * ebar, a + 2.0);
}

Complex green_alpha_dz(Complex z, Complex w, Alpha alpha) {
  require_open_disk(z, "green_alpha_dz");
  require_open_disk(w, "green_alpha_dz");
  if (z == w) throw CoincidenceError("green_alpha_dz: z == w");
  const double a = alpha.value();
  const auto parts = phi_parts(z, w);
  const double h = parts.one_minus_phi < 0.05
                       ? h_alpha_complement(parts.one_minus_phi, alpha)
                       : h_alpha(parts.phi, alpha);
  const Complex one_m_zwbar = 1.0 - z * std::conj(w);
  const Complex one_m_zbarw = 1.0 - std::conj(z) * w;
  const double one_m_z2 = 1.0 - abs2(z);
  const double one_m_w2 = 1.0 - abs2(w);
  const Complex first = a * std::conj(w) * std::pow(one_m_zwbar, a - 1.0) * h;
  const Complex second = std::pow(one_m_z2, a) * std::pow(one_m_w2, a + 1.0) /
                         (std::pow(one_m_zbarw, a) * one_m_zwbar * (z - w));
  return first + second;
}

Complex green_alpha_dzbar(Complex z, Complex w, Alpha alpha) {
  require_open_disk(z, "green_alpha_dzbar");
  require_open_disk(w, "green_alpha_dzbar");
  if (z == w) throw CoincidenceError("green_alpha_dzbar: z == w");
  const double a = alpha.value();
  const Complex one_m_zbarw = 1.0 - std::conj(z) * w;
  const double one_m_z2 = 1.0 - abs2(z);
  const double one_m_w2 = 1.0 - abs2(w);
  return std::pow(one_m_z2, a) * std::pow(one_m_w2, a + 1.0) /
         (std::pow(one_m_zbarw, a + 1.0) * (std::conj(z) - std::conj(w)));
}

KernelValue h_alpha_value(double s, Alpha alpha, double tol) {
  KernelValue kv{Complex(h_alpha(s, alpha, tol), 0.0), {}};
  if (alpha.value() >= 0.0 && s > 0.0) kv.abs_bound = h_alpha_bound(s, alpha);
  return kv;
}

KernelValue phi_value(Complex z, Complex w) {
  return {Complex(phi(z, w), 0.0), 1.0};  // phi lies in (0,1]
}

KernelValue poisson_kernel_value(Complex z) { return {Complex(poisson_kernel(z), 0.0), {}}; }

KernelValue poisson_kernel_alpha_value(Complex z, Alpha alpha) {
  return {poisson_kernel_alpha(z, alpha), {}};
}

KernelValue green_alpha_value(Complex z, Complex w, Alpha alpha) {
  KernelValue kv{green_alpha(z, w, alpha), {}};
  if (alpha.value() >= 0.0) kv.abs_bound = green_alpha_bound(z, w, alpha);
  return kv;
}

}  // namespace alphakit::kernels
