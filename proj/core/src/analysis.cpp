#include "alphakit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alphakit/parallel.hpp"

namespace alphakit::analysis {

namespace {

constexpr double kValueToleranceDefault = 1e-8;       // quadrature + 1e-9 slack
constexpr double kDerivativeToleranceDefault = 1e-7;  // derivative quadrature + slack
constexpr double kPreconditionTolerance = 1e-10;

double pow2(double e) { return std::pow(2.0, e); }

struct PointCheck {
  double lhs;
  double rhs;
};

// Evaluates a per-point check in parallel, then reduces slack and
// violations in grid order.
VerificationReport reduce_checks(TheoremId id, const Grid& grid, double tol,
                                 const std::function<PointCheck(Complex)>& check) {
  std::vector<PointCheck> checks(grid.points.size());
  parallel_for(grid.points.size(),
               [&](std::size_t i) { checks[i] = check(grid.points[i]); });

  VerificationReport report;
  report.theorem_id = id;
  report.grid = grid.description;
  report.tolerance = tol;
  report.worst_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const double slack = checks[i].rhs - checks[i].lhs;
    report.worst_slack = std::min(report.worst_slack, slack);
    if (slack < -tol) {
      report.violations.push_back({grid.points[i].real(), grid.points[i].imag(), checks[i].lhs,
                                   checks[i].rhs});
    }
  }
  report.passed = report.violations.empty();
  return report;
}

solver::BoundaryData centered_boundary(const solver::BoundaryData& fstar, Alpha alpha,
                                       const VerifyOptions& opt, const char* theorem) {
  const Complex at_zero = solver::poisson_integral(fstar, 0.0, alpha, opt.quad);
  if (std::abs(at_zero) <= kPreconditionTolerance * std::max(1.0, fstar.sup_norm())) {
    return fstar;
  }
  if (!opt.auto_center) {
    throw PreconditionError(std::string(theorem) +
                            ": P_alpha[f*](0) != 0; pass auto_center to subtract it");
  }
  return fstar.minus_constant(at_zero);
}

}  // namespace

Grid Grid::polar(int n_r, int n_theta, double r_max, double r_min) {
  if (n_r < 1 || n_theta < 1) throw DomainError("Grid::polar: orders must be positive");
  if (!(r_max > 0.0 && r_max < 1.0) || r_min < 0.0 || r_min >= r_max) {
    throw DomainError("Grid::polar: need 0 <= r_min < r_max < 1");
  }
  Grid grid;
  for (int i = 0; i < n_r; ++i) {
    const double r = r_min + (r_max - r_min) * (i + 1.0) / n_r;
    for (int j = 0; j < n_theta; ++j) {
      grid.points.push_back(std::polar(r, kTwoPi * j / n_theta));
    }
  }
  grid.description = "polar " + std::to_string(n_r) + "x" + std::to_string(n_theta) +
                     " r<=" + std::to_string(r_max);
  return grid;
}

Grid Grid::cartesian(double step, double r_max) {
  if (!(step > 0.0) || !(r_max > 0.0 && r_max < 1.0)) {
    throw DomainError("Grid::cartesian: need step > 0 and 0 < r_max < 1");
  }
  Grid grid;
  const int n = static_cast<int>(r_max / step);
  for (int i = -n; i <= n; ++i) {
    for (int j = -n; j <= n; ++j) {
      const Complex z(i * step, j * step);
      if (std::abs(z) <= r_max) grid.points.push_back(z);
    }
  }
  grid.description = "cartesian step=" + std::to_string(step) + " r<=" + std::to_string(r_max);
  return grid;
}

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::kSchwarz: return "schwarz";
    case TheoremId::kSchwarzPick: return "schwarz_pick";
    case TheoremId::kHeinz: return "heinz";
    case TheoremId::kColonna: return "colonna";
    case TheoremId::kComposition: return "composition";
    case TheoremId::kBergman: return "bergman";
  }
  return "unknown";
}

TheoremId theorem_id_from_string(const std::string& name) {
  if (name == "schwarz") return TheoremId::kSchwarz;
  if (name == "schwarz_pick") return TheoremId::kSchwarzPick;
  if (name == "heinz") return TheoremId::kHeinz;
  if (name == "colonna") return TheoremId::kColonna;
  if (name == "composition") return TheoremId::kComposition;
  if (name == "bergman") return TheoremId::kBergman;
  throw DomainError("theorem_id_from_string: unknown theorem '" + name + "'");
}

VerificationReport verify_schwarz(const solver::BoundaryData& fstar, const solver::SourceField& g,
                                  Alpha alpha, const Grid& grid, const VerifyOptions& opt) {
  if (alpha.value() < 0.0) throw DomainError("verify_schwarz: requires alpha >= 0");
  const solver::BoundaryData centered = centered_boundary(fstar, alpha, opt, "verify_schwarz");
  const solver::SolutionField field(centered, g, alpha, opt.quad);

  const double a = alpha.value();
  const double fs_norm = centered.sup_norm();
  const double g_norm = g.sup_norm();
  const double tol = opt.tolerance > 0.0 ? opt.tolerance : kValueToleranceDefault;

  return reduce_checks(TheoremId::kSchwarz, grid, tol, [&](Complex z) -> PointCheck {
    const double lhs = std::abs(field.value(z));
    const double rhs = pow2(a) * (4.0 / kPi * fs_norm * std::atan(std::abs(z)) +
                                  g_norm * std::pow(1.0 - abs2(z), a + 1.0));
    return {lhs, rhs};
  });
}

VerificationReport verify_schwarz_pick(const solver::BoundaryData& fstar,
                                       const solver::SourceField& g, Alpha alpha,
                                       const Grid& grid, const VerifyOptions& opt) {
  if (alpha.value() < 0.0) throw DomainError("verify_schwarz_pick: requires alpha >= 0");
  const solver::SolutionField field(fstar, g, alpha, opt.quad);

  const double a = alpha.value();
  const double fs_norm = fstar.sup_norm();
  const double g_norm = g.sup_norm();
  const bool g_zero = g.is_zero();
  const bool self_map_bound = g_zero && fs_norm <= 1.0 + 1e-12;
  const bool colonna = self_map_bound && a == 0.0;
  const double tol = opt.tolerance > 0.0 ? opt.tolerance : kDerivativeToleranceDefault;

  return reduce_checks(TheoremId::kSchwarzPick, grid, tol, [&](Complex z) -> PointCheck {
    const double lhs = field.jacobian(z).op_norm();
    const double inv = 1.0 / (1.0 - abs2(z));
    double rhs = (a + 1.0) * pow2(a + 1.0) * fs_norm * inv +
                 (a + 4.0 / 3.0) * pow2(a + 1.0) * g_norm;
    if (self_map_bound) rhs = std::min(rhs, (a + 1.0) * pow2(a + 1.0) * inv);
    if (colonna) rhs = std::min(rhs, 4.0 / kPi * inv);
    return {lhs, rhs};
  });
}

VerificationReport verify_heinz(const solver::BoundaryData& fstar, const Grid& grid,
                                const VerifyOptions& opt) {
  const Alpha harmonic(0.0);
  if (fstar.sup_norm() > 1.0 + 1e-12) {
    throw PreconditionError("verify_heinz: needs ||f*|| <= 1 (a self-map of the disk)");
  }
  const solver::BoundaryData centered = centered_boundary(fstar, harmonic, opt, "verify_heinz");
  if (centered.sup_norm() > 1.0 + 1e-12) {
    throw PreconditionError("verify_heinz: centering pushed ||f*|| above 1");
  }
  const solver::SolutionField field(centered, solver::SourceField::zero(), harmonic, opt.quad);
  const double tol = opt.tolerance > 0.0 ? opt.tolerance : kValueToleranceDefault;

  return reduce_checks(TheoremId::kHeinz, grid, tol, [&](Complex z) -> PointCheck {
    return {std::abs(field.value(z)), 4.0 / kPi * std::atan(std::abs(z))};
  });
}

VerificationReport verify_colonna(const solver::BoundaryData& fstar, const Grid& grid,
                                  const VerifyOptions& opt) {
  if (fstar.sup_norm() > 1.0 + 1e-12) {
    throw PreconditionError("verify_colonna: needs ||f*|| <= 1 (a self-map of the disk)");
  }
  const solver::SolutionField field(fstar, solver::SourceField::zero(), Alpha(0.0), opt.quad);
  const double tol = opt.tolerance > 0.0 ? opt.tolerance : kDerivativeToleranceDefault;

  return reduce_checks(TheoremId::kColonna, grid, tol, [&](Complex z) -> PointCheck {
    return {field.jacobian(z).op_norm(), 4.0 / kPi / (1.0 - abs2(z))};
  });
}

namespace {

VerificationReport verify_composition_impl(const std::function<Complex(Complex)>& composed,
                                           bool invariance_expected, Alpha alpha,
                                           const Grid& grid, const VerifyOptions& opt) {
  const double tol = opt.tolerance > 0.0 ? opt.tolerance : opt.residual.tolerance;
  const double breakage = 100.0 * tol;

  std::vector<double> residuals(grid.points.size());
  parallel_for(grid.points.size(), [&](std::size_t i) {
    residuals[i] =
        std::abs(delta_alpha_residual(composed, grid.points[i], alpha, opt.residual));
  });

  VerificationReport report;
  report.theorem_id = TheoremId::kComposition;
  report.grid = grid.description;
  report.tolerance = tol;
  if (invariance_expected) {
    report.worst_slack = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < residuals.size(); ++i) {
      report.worst_slack = std::min(report.worst_slack, tol - residuals[i]);
      if (residuals[i] >= tol) {
        report.violations.push_back(
            {grid.points[i].real(), grid.points[i].imag(), residuals[i], tol});
      }
    }
    report.passed = report.violations.empty();
  } else {
    // Harmonicity must break: the maximal residual is the evidence.
    const double max_res = *std::max_element(residuals.begin(), residuals.end());
    report.worst_slack = max_res - breakage;
    report.passed = max_res > breakage;
    if (!report.passed) {
      const auto it = std::max_element(residuals.begin(), residuals.end());
      const std::size_t i = static_cast<std::size_t>(it - residuals.begin());
      report.violations.push_back(
          {grid.points[i].real(), grid.points[i].imag(), max_res, breakage});
    }
  }
  return report;
}

}  // namespace

VerificationReport verify_composition(const series::AlphaHarmonicSeries& f,
                                      const series::PolynomialMap& psi, const Grid& grid,
                                      const VerifyOptions& opt) {
  const bool invariant = psi.is_rotation() || !f.coefficients().has_antianalytic_part() ||
                         f.alpha().value() == 0.0;
  return verify_composition_impl(series::compose(f, psi), invariant, f.alpha(), grid, opt);
}

VerificationReport verify_composition(const series::Example1Function& f,
                                      const series::PolynomialMap& psi, const Grid& grid,
                                      const VerifyOptions& opt) {
  VerifyOptions punctured = opt;
  punctured.residual.puncture = Complex(0.0);
  const bool invariant = psi.is_rotation();
  return verify_composition_impl(series::compose(f, psi), invariant, f.alpha(), grid, punctured);
}

JetFunction jet_of(const series::AlphaHarmonicSeries& f) {
  return [f](Complex z) {
    return FieldJet{f.evaluate(z), f.dz(z), f.dzbar(z), f.laplacian(z)};
  };
}

JetFunction jet_of(const solver::SolutionField& field) {
  return [fp = &field](Complex z) {
    const solver::JacobianData jd = fp->jacobian(z);
    const double a = fp->alpha().value();
    const double one_m_z2 = 1.0 - abs2(z);
    Complex lap = -4.0 * a * std::conj(z) * jd.fzbar / one_m_z2;
    if (!fp->source().is_zero()) {
      lap += 4.0 * std::pow(one_m_z2, a) * fp->source()(z);
    }
    return FieldJet{fp->value(z), jd.fz, jd.fzbar, lap};
  };
}

double laplacian_abs_power(const FieldJet& jet, double p) {
  if (p < 2.0) throw DomainError("laplacian_abs_power: requires p >= 2");
  const double af = std::abs(jet.f);
  if (af < 1e-12 && p < 4.0) {
    throw SingularPointError("laplacian_abs_power: |f|^(p-4) is singular at a zero of f");
  }
  double t1 = 0.0;
  if (p != 2.0) {
    const Complex mixed = jet.f * std::conj(jet.fz) + jet.fzbar * std::conj(jet.f);
    t1 = p * (p - 2.0) * std::pow(af, p - 4.0) * abs2(mixed);
  }
  const double t2 = 2.0 * p * std::pow(af, p - 2.0) * (abs2(jet.fz) + abs2(jet.fzbar));
  const double t3 =
      p * std::pow(af, p - 2.0) * (std::conj(jet.f) * jet.laplacian).real();
  return t1 + t2 + t3;
}

double laplacian_abs_power(const JetFunction& f, double p, Complex z) {
  if (p < 2.0) throw DomainError("laplacian_abs_power: requires p >= 2");
  const FieldJet jet = f(z);
  if (p < 4.0 && std::abs(jet.f) <= 1e-6) {
    // Regularized finite-difference Laplacian of (|f|^2 + 1/n)^(p/2), n = 1e6.
    const double h = 1e-3 * (1.0 - std::abs(z));
    const auto reg = [&](Complex w) { return std::pow(abs2(f(w).f) + 1e-6, 0.5 * p); };
    return (reg(z + h) + reg(z - h) + reg(z + Complex(0, h)) + reg(z - Complex(0, h)) -
            4.0 * reg(z)) /
           (h * h);
  }
  return laplacian_abs_power(jet, p);
}

double dirichlet_energy(const JetFunction& f, const EnergyParams& params,
                        const quad::DiskRule& rule) {
  if (!(params.nu > -1.0)) throw DomainError("dirichlet_energy: nu must be > -1");
  if (!(params.mu > 0.0)) throw DomainError("dirichlet_energy: mu must be > 0");
  if (!(params.t >= 0.0)) throw DomainError("dirichlet_energy: t must be >= 0");
  const int na = rule.angular_order();
  double acc = 0.0;
  for (int i = 0; i < rule.radial_order(); ++i) {
    const double r = rule.radii()[i];
    const double d_nu = std::pow(1.0 - r, params.nu);
    double ring = 0.0;
    for (int j = 0; j < na; ++j) {
      const FieldJet jet = f(std::polar(r, rule.theta(j)));
      const double op_norm = std::abs(jet.fz) + std::abs(jet.fzbar);
      ring += std::pow(std::abs(jet.f), params.mu) * std::pow(op_norm, params.t);
    }
    acc += rule.radial_weights()[i] * d_nu * ring / static_cast<double>(na);
  }
  return acc;
}

BergmanCheck bergman_membership_check(const JetFunction& f, Alpha alpha, double p,
                                      const std::vector<double>& radii, const Grid& grid,
                                      const quad::DiskRule& rule, double tolerance) {
  if (p < 2.0) throw DomainError("bergman_membership_check: requires p >= 2");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0 && radii[i] < 1.0) || (i > 0 && radii[i] <= radii[i - 1])) {
      throw DomainError("bergman_membership_check: radii must increase within (0,1)");
    }
  }
  const double tol = tolerance > 0.0 ? tolerance : kValueToleranceDefault;
  const double a = alpha.value();
  const double c1 = (a + 1.0) * pow2(a + 1.0);
  const double c2 = a * (a + 1.0) * pow2(a + 3.0);
  const double f0 = std::abs(f(Complex(0.0)).f);

  BergmanCheck check;
  check.radii = radii;

  // Hypothesis Re(conj(f) Lap f) >= 0, checked, not assumed.
  check.hypothesis_ok = true;
  for (const Complex& z : grid.points) {
    const FieldJet jet = f(z);
    if ((std::conj(jet.f) * jet.laplacian).real() < -1e-9) {
      check.hypothesis_ok = false;
      break;
    }
  }

  // Truncated integrals over D_r by scaling the unit-disk rule.
  const auto weighted_lap = [&](Complex z) {
    return std::pow(1.0 - abs2(z), p + 1.0) * laplacian_abs_power(f, p, z);
  };
  check.truncated_integrals.resize(radii.size());
  parallel_for(radii.size(), [&](std::size_t ri) {
    const double r = radii[ri];
    const int na = rule.angular_order();
    double acc = 0.0;
    for (int i = 0; i < rule.radial_order(); ++i) {
      double ring = 0.0;
      for (int j = 0; j < na; ++j) {
        ring += weighted_lap(r * std::polar(rule.radii()[i], rule.theta(j)));
      }
      acc += rule.radial_weights()[i] * ring / static_cast<double>(na);
    }
    check.truncated_integrals[ri] = r * r * acc;
  });

  // Zeros of f put kinks into |f|, which caps the tensor rule's accuracy on
  // these integrals near 1e-6; the monotonicity comparison carries that
  // budget on top of the report tolerance.
  check.monotone = true;
  for (std::size_t i = 1; i < radii.size(); ++i) {
    const double slack =
        std::max(tol, 1e-6) * (1.0 + std::abs(check.truncated_integrals[i]));
    if (check.truncated_integrals[i] < check.truncated_integrals[i - 1] - slack) {
      check.monotone = false;
    }
  }

  // Pointwise bound (the chained display with C1, C2).
  const double rhs_const =
      p * std::pow(2.0, p - 2.0) * (std::pow(f0, p - 1.0) + std::pow(c1, p - 1.0)) * c2;
  const double rhs_slope =
      p * p * std::pow(2.0, p - 2.0) * (std::pow(f0, p - 2.0) + std::pow(c1, p - 2.0)) * c1 * c1;
  check.report =
      reduce_checks(TheoremId::kBergman, grid, tol, [&](Complex z) -> PointCheck {
        const double lhs = weighted_lap(z);
        const double rhs = rhs_slope * (1.0 - abs2(z)) + rhs_const;
        return {lhs, rhs};
      });

  check.norm = f0 + std::pow(dirichlet_energy(f, {p - 1.0, p, 0.0}, rule), 1.0 / p);
  check.norm_finite = std::isfinite(check.norm);

  // Monotonicity is the theorem's claim only under its sign hypothesis.
  // Failed aggregate checks are recorded as violations so that passed stays
  // equivalent to an empty violation list.
  if (check.hypothesis_ok && !check.monotone) {
    for (std::size_t i = 1; i < radii.size(); ++i) {
      if (check.truncated_integrals[i] < check.truncated_integrals[i - 1]) {
        check.report.violations.push_back({radii[i], 0.0, check.truncated_integrals[i - 1],
                                           check.truncated_integrals[i]});
      }
    }
  }
  if (!check.norm_finite) {
    check.report.violations.push_back({0.0, 0.0, std::numeric_limits<double>::max(), 0.0});
  }
  check.report.passed = check.report.violations.empty();
  return check;
}

}  // namespace alphakit::analysis
