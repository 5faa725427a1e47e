#include "alphakit/residual.hpp"

#include <cmath>

namespace alphakit::analysis {

double ResidualConfig::step_at(Complex z) const {
  return step_base * (1.0 - std::abs(z));
}

Complex delta_alpha_residual(const std::function<Complex(Complex)>& f, Complex z, Alpha alpha,
                             const ResidualConfig& cfg) {
  require_open_disk(z, "delta_alpha_residual");
  const double h = cfg.step_at(z);
  if (!(h > 0.0)) throw DomainError("delta_alpha_residual: degenerate step");
  if (std::abs(z) + h >= 1.0) {
    throw DomainError("delta_alpha_residual: stencil exits the unit disk");
  }
  const Complex stencil[5] = {z, z + h, z - h, z + Complex(0.0, h), z - Complex(0.0, h)};
  if (cfg.puncture.has_value()) {
    for (const Complex& p : stencil) {
      if (std::abs(p - *cfg.puncture) <= h * 1e-6) {
        throw DomainError("delta_alpha_residual: stencil hits a declared puncture");
      }
    }
  }
  Complex v[5];
  for (int i = 0; i < 5; ++i) v[i] = f(stencil[i]);

  const Complex lap = (v[1] + v[2] + v[3] + v[4] - 4.0 * v[0]) / (h * h);
  const Complex dzbar = ((v[1] - v[2]) + Complex(0.0, 1.0) * (v[3] - v[4])) / (4.0 * h);
  const double a = alpha.value();
  const double one_m_z2 = 1.0 - abs2(z);
  return std::pow(one_m_z2, -a) * (0.25 * lap + a * std::conj(z) * dzbar / one_m_z2);
}

}  // namespace alphakit::analysis
