#include "alphakit/solver.hpp"

#include <cmath>

#include "alphakit/kernels.hpp"

namespace alphakit::solver {

namespace {

std::vector<double> green_h_profile(const quad::MobiusRule& rule, Alpha alpha) {
  // On the recentered grid phi(z, w(zeta)) = 1 - |zeta|^2 exactly, so the
  // radial h-profile depends only on the rule and alpha.
  std::vector<double> profile(rule.radii().size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const double r = rule.radii()[i];
    profile[i] = kernels::h_alpha_complement(r * r, alpha);
  }
  return profile;
}

Complex green_value_at(const quad::MobiusRule& rule, const std::vector<double>& h_profile,
                       double a, const SourceField& g, Complex z) {
  const double one_m_z2 = 1.0 - abs2(z);
  const Complex zbar = std::conj(z);
  const int na = rule.angular_order();
  Complex acc = 0.0;
  for (int i = 0; i < rule.radial_order(); ++i) {
    const double r = rule.radii()[i];
    Complex ring = 0.0;
    for (int j = 0; j < na; ++j) {
      const Complex zeta = std::polar(r, rule.theta(j));
      const Complex den = 1.0 - zeta * zbar;
      const Complex w = (z - zeta) / den;
      const double jac = one_m_z2 * one_m_z2 / (abs2(den) * abs2(den));
      const Complex one_m_zwbar = one_m_z2 / std::conj(den);  // 1 - z conj(w)
      ring += std::pow(one_m_zwbar, a) * jac * g(w);
    }
    acc += rule.radial_weights()[i] * h_profile[i] * ring / static_cast<double>(na);
  }
  return -acc;
}

JacobianData green_jacobian_at(const quad::MobiusRule& rule, const std::vector<double>& h_profile,
                               double a, const SourceField& g, Complex z) {
  const double one_m_z2 = 1.0 - abs2(z);
  const Complex zbar = std::conj(z);
  const double pow_z2_a = std::pow(one_m_z2, a);
  const int na = rule.angular_order();
  Complex acc_dz = 0.0, acc_dzbar = 0.0;
  for (int i = 0; i < rule.radial_order(); ++i) {
    const double r = rule.radii()[i];
    const double hv = h_profile[i];
    Complex ring_dz = 0.0, ring_dzbar = 0.0;
    for (int j = 0; j < na; ++j) {
      const Complex zeta = std::polar(r, rule.theta(j));
      const Complex den = 1.0 - zeta * zbar;
      const Complex w = (z - zeta) / den;
      const double jac = one_m_z2 * one_m_z2 / (abs2(den) * abs2(den));
      // Stable closed forms on the recentered grid.
      const Complex one_m_zwbar = one_m_z2 / std::conj(den);
      const Complex one_m_zbarw = one_m_z2 / den;
      const Complex z_m_w = zeta * one_m_z2 / den;
      const double one_m_w2 = one_m_z2 * (1.0 - r * r) / abs2(den);
      const double pow_w2 = std::pow(one_m_w2, a + 1.0);
      const Complex gval = g(w) * jac;
      const Complex dz_kernel =
          a * std::conj(w) * std::pow(one_m_zwbar, a - 1.0) * hv +
          pow_z2_a * pow_w2 / (std::pow(one_m_zbarw, a) * one_m_zwbar * z_m_w);
      const Complex dzbar_kernel =
          pow_z2_a * pow_w2 / (std::pow(one_m_zbarw, a + 1.0) * std::conj(z_m_w));
      ring_dz += dz_kernel * gval;
      ring_dzbar += dzbar_kernel * gval;
    }
    const double wi = rule.radial_weights()[i] / static_cast<double>(na);
    acc_dz += wi * ring_dz;
    acc_dzbar += wi * ring_dzbar;
  }
  return {acc_dz, acc_dzbar};
}

}  // namespace

Complex poisson_integral(const BoundaryData& fstar, Complex z, Alpha alpha,
                         const QuadratureConfig& cfg) {
  require_open_disk(z, "poisson_integral");
  if (fstar.is_zero()) return 0.0;
  const quad::CircleRule rule(cfg.circle_order);
  Complex acc = 0.0;
  for (int j = 0; j < rule.size(); ++j) {
    const double theta = rule.node(j);
    acc += kernels::poisson_kernel_alpha(z * std::polar(1.0, -theta), alpha) *
           fstar.evaluate(theta);
  }
  return acc / static_cast<double>(rule.size());
}

Complex green_potential(const SourceField& g, Complex z, Alpha alpha,
                        const QuadratureConfig& cfg) {
  require_open_disk(z, "green_potential");
  if (g.is_zero()) return 0.0;
  const quad::MobiusRule rule{quad::DiskRule(cfg.radial_order, cfg.angular_order)};
  const auto profile = green_h_profile(rule, alpha);
  return green_value_at(rule, profile, alpha.value(), g, z);
}

SolutionField::SolutionField(BoundaryData fstar, SourceField g, Alpha alpha, QuadratureConfig cfg)
    : fstar_(std::move(fstar)),
      g_(std::move(g)),
      alpha_(alpha),
      cfg_(cfg),
      green_rule_(quad::DiskRule(cfg.radial_order, cfg.angular_order)) {
  if (!fstar_.is_zero()) {
    boundary_samples_.resize(cfg_.circle_order);
    for (int j = 0; j < cfg_.circle_order; ++j) {
      boundary_samples_[j] = fstar_.evaluate(kTwoPi * j / cfg_.circle_order);
    }
  }
  if (!g_.is_zero()) {
    h_profile_ = green_h_profile(green_rule_, alpha_);
  }
}

Complex SolutionField::poisson_part(Complex z) const {
  require_open_disk(z, "SolutionField::poisson_part");
  if (fstar_.is_zero()) return 0.0;
  const int n = cfg_.circle_order;
  Complex acc = 0.0;
  for (int j = 0; j < n; ++j) {
    acc += kernels::poisson_kernel_alpha(z * std::polar(1.0, -kTwoPi * j / n), alpha_) *
           boundary_samples_[j];
  }
  return acc / static_cast<double>(n);
}

Complex SolutionField::poisson_part_order(Complex z, int order) const {
  if (fstar_.is_zero()) return 0.0;
  Complex acc = 0.0;
  for (int j = 0; j < order; ++j) {
    const double theta = kTwoPi * j / order;
    acc += kernels::poisson_kernel_alpha(z * std::polar(1.0, -theta), alpha_) *
           fstar_.evaluate(theta);
  }
  return acc / static_cast<double>(order);
}

Complex SolutionField::green_part(Complex z) const {
  require_open_disk(z, "SolutionField::green_part");
  if (g_.is_zero()) return 0.0;
  return green_value_at(green_rule_, h_profile_, alpha_.value(), g_, z);
}

Complex SolutionField::value(Complex z) const { return poisson_part(z) + green_part(z); }

JacobianData SolutionField::jacobian(Complex z) const {
  require_open_disk(z, "SolutionField::jacobian");
  JacobianData jd{0.0, 0.0};
  if (!fstar_.is_zero()) {
    const int n = cfg_.circle_order;
    Complex dz = 0.0, dzbar = 0.0;
    for (int j = 0; j < n; ++j) {
      const double theta = kTwoPi * j / n;
      dz += kernels::poisson_kernel_alpha_dz(z, theta, alpha_) * boundary_samples_[j];
      dzbar += kernels::poisson_kernel_alpha_dzbar(z, theta, alpha_) * boundary_samples_[j];
    }
    jd.fz += dz / static_cast<double>(n);
    jd.fzbar += dzbar / static_cast<double>(n);
  }
  if (!g_.is_zero()) {
    const JacobianData green = green_jacobian_at(green_rule_, h_profile_, alpha_.value(), g_, z);
    jd.fz += green.fz;
    jd.fzbar += green.fzbar;
  }
  return jd;
}

Complex SolutionField::laplacian(Complex z) const {
  require_open_disk(z, "SolutionField::laplacian");
  const double one_m_z2 = 1.0 - abs2(z);
  const double a = alpha_.value();
  const Complex fzbar = jacobian(z).fzbar;
  Complex lap = -4.0 * a * std::conj(z) * fzbar / one_m_z2;
  if (!g_.is_zero()) lap += 4.0 * std::pow(one_m_z2, a) * g_(z);
  return lap;
}

Complex SolutionField::boundary_limit(double theta) const {
  // Radial approach through r = 0.99 and 0.999. The boundary part is
  // extrapolated linearly in t = 1-r; the source part decays like
  // (1-r^2)^(a+1), so its linear model runs in that variable instead.
  static constexpr double kRadii[2] = {0.99, 0.999};
  const int degree = fstar_.degree();
  double t[2], s[2];
  Complex vp[2], vg[2];
  for (int i = 0; i < 2; ++i) {
    const double r = kRadii[i];
    t[i] = 1.0 - r;
    s[i] = std::pow(1.0 - r * r, alpha_.value() + 1.0);
    // Aliasing of the circle rule decays like r^(n - degree); refine as
    // r -> 1 to hold it near machine level.
    const int order =
        std::min(1000000, cfg_.circle_order + degree + static_cast<int>(std::ceil(28.0 / t[i])));
    const Complex z = std::polar(r, theta);
    vp[i] = poisson_part_order(z, order);
    vg[i] = 0.0;
    if (!g_.is_zero()) {
      // The recentered Green rule also needs more angular nodes here: its
      // integrand has a pole at 1/conj(z), just outside the circle.
      const int angular = std::min(
          16384, std::max(cfg_.angular_order, static_cast<int>(std::ceil(14.0 / t[i]))));
      const quad::MobiusRule rule{quad::DiskRule(cfg_.radial_order, angular)};
      vg[i] = green_value_at(rule, h_profile_, alpha_.value(), g_, z);
    }
  }
  return (t[0] * vp[1] - t[1] * vp[0]) / (t[0] - t[1]) +
         (s[0] * vg[1] - s[1] * vg[0]) / (s[0] - s[1]);
}

SolutionField solve(BoundaryData fstar, SourceField g, Alpha alpha, QuadratureConfig cfg) {
  return SolutionField(std::move(fstar), std::move(g), alpha, cfg);
}

JacobianData solution_jacobian(const SolutionField& field, Complex z) {
  return field.jacobian(z);
}

}  // namespace alphakit::solver
