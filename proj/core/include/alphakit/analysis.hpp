////////////////////////////////////////////////////////////////////////////////
// analysis.hpp
//
// The certification engine: numerical verification of the Schwarz,
// Schwarz-Pick, Heinz and Colonna bounds, the composition dichotomy, and
// Bergman-type membership, plus Dirichlet-type energy integrals.
//
// A verification never asserts an inequality tighter than its numerics:
// each report carries a tolerance budget (quadrature + finite differences
// + 1e-9 slack), and a "violation" means negative slack beyond that budget.
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "alphakit/residual.hpp"
#include "alphakit/series.hpp"
#include "alphakit/solver.hpp"
#include "alphakit/types.hpp"

namespace alphakit::analysis {

// ---------------------------------------------------------------------------
// Grids and reports
// ---------------------------------------------------------------------------

struct Grid {
  std::vector<Complex> points;
  std::string description;

  static Grid polar(int n_r, int n_theta, double r_max = 0.9, double r_min = 0.0);
  static Grid cartesian(double step, double r_max = 0.9);
};

enum class TheoremId { kSchwarz, kSchwarzPick, kHeinz, kColonna, kComposition, kBergman };
std::string to_string(TheoremId id);
TheoremId theorem_id_from_string(const std::string& name);

struct Violation {
  double x, y;    // grid point
  double lhs, rhs;
};

struct VerificationReport {
  TheoremId theorem_id;
  std::string grid;
  double tolerance = 0.0;
  /// min over the grid of (bound - quantity); negative past the tolerance
  /// at some point iff that point is recorded as a violation.
  double worst_slack = 0.0;
  std::vector<Violation> violations;
  bool passed = false;
};

struct VerifyOptions {
  solver::QuadratureConfig quad;
  ResidualConfig residual;
  /// Subtract the constant mode from f* when the theorem needs
  /// P_a[f*](0) = 0; without it, off-center data is a precondition error.
  bool auto_center = false;
  /// Override of the default tolerance budget (<= 0 keeps the default).
  double tolerance = 0.0;
};

// ---------------------------------------------------------------------------
// Inequality verifications
// ---------------------------------------------------------------------------

/// |f(z)| <= 2^a [ (4/pi) ||f*|| arctan|z| + ||g|| (1-|z|^2)^(a+1) ] for the
/// solution with boundary data f* and source g; requires a >= 0 and
/// P_a[f*](0) = 0.
VerificationReport verify_schwarz(const solver::BoundaryData& fstar, const solver::SourceField& g,
                                  Alpha alpha, const Grid& grid, const VerifyOptions& opt = {});

/// ||D_f(z)|| <= (a+1) 2^(a+1) ||f*|| / (1-|z|^2) + (a+4/3) 2^(a+1) ||g||.
/// With g == 0 and ||f*|| <= 1 the sharper (a+1) 2^(a+1)/(1-|z|^2) applies;
/// with a == 0, g == 0 and a self-map, Colonna's (4/pi)/(1-|z|^2) applies.
/// The report checks the tightest applicable bound at each point.
VerificationReport verify_schwarz_pick(const solver::BoundaryData& fstar,
                                       const solver::SourceField& g, Alpha alpha,
                                       const Grid& grid, const VerifyOptions& opt = {});

/// Harmonic self-map bound |f(z)| <= (4/pi) arctan|z| for f = P_0[f*] with
/// ||f*|| <= 1 and f(0) = 0.
VerificationReport verify_heinz(const solver::BoundaryData& fstar, const Grid& grid,
                                const VerifyOptions& opt = {});

/// Harmonic self-map gradient bound ||D_f(z)|| <= (4/pi)/(1-|z|^2).
VerificationReport verify_colonna(const solver::BoundaryData& fstar, const Grid& grid,
                                  const VerifyOptions& opt = {});

/// Composition dichotomy: for rotations (or series with no antianalytic
/// part, or a = 0) the residual of f ∘ psi must stay below tolerance; any
/// other polynomial map must break harmonicity, and the report records the
/// maximal residual as the evidence.
VerificationReport verify_composition(const series::AlphaHarmonicSeries& f,
                                      const series::PolynomialMap& psi, const Grid& grid,
                                      const VerifyOptions& opt = {});
VerificationReport verify_composition(const series::Example1Function& f,
                                      const series::PolynomialMap& psi, const Grid& grid,
                                      const VerifyOptions& opt = {});

// ---------------------------------------------------------------------------
// Fields, energies, Bergman membership
// ---------------------------------------------------------------------------

/// Zeroth to second order data of a field at a point.
struct FieldJet {
  Complex f;
  Complex fz;
  Complex fzbar;
  Complex laplacian;  // Delta f = 4 f_{zbar z}
};
using JetFunction = std::function<FieldJet(Complex)>;

JetFunction jet_of(const series::AlphaHarmonicSeries& f);
/// The field must outlive the returned function.
JetFunction jet_of(const solver::SolutionField& field);

/// Lap(|f|^p) from the pointwise identity
///   Lap(|f|^p) = p(p-2)|f|^(p-4) |f conj(f_z) + f_zbar conj(f)|^2
///              + 2p |f|^(p-2) (|f_z|^2 + |f_zbar|^2)
///              + p |f|^(p-2) Re(conj(f) Lap f),
/// p >= 2. Throws SingularPointError when |f| < 1e-12 and p < 4.
double laplacian_abs_power(const FieldJet& jet, double p);

/// Same quantity at a point, switching to a finite-difference Laplacian of
/// the regularized (|f|^2 + 1/n)^(p/2), n = 1e6, near zeros of f when
/// p < 4.
double laplacian_abs_power(const JetFunction& f, double p, Complex z);

struct EnergyParams {
  double nu;      // boundary-distance exponent, > -1
  double mu;      // modulus exponent, > 0
  double t;       // gradient exponent, >= 0
};

/// int_D d(z)^nu |f(z)|^mu ||D_f(z)||^t dA(z) with d(z) = 1 - |z|.
double dirichlet_energy(const JetFunction& f, const EnergyParams& params,
                        const quad::DiskRule& rule);

struct BergmanCheck {
  VerificationReport report;          // pointwise bound (b), id kBergman
  std::vector<double> radii;
  std::vector<double> truncated_integrals;  // int_{D_r} (1-|z|^2)^(p+1) Lap(|f|^p) dA
  double norm = 0.0;                  // |f(0)| + D_f(p-1, p, 0)^(1/p)
  bool hypothesis_ok = false;         // Re(conj(f) Lap f) >= 0 on the grid
  bool monotone = false;
  bool norm_finite = false;
};

/// Bergman-type membership of a bounded solution of Delta_a f = 0: truncated
/// integrals over D_r, the pointwise bound with C1 = (a+1) 2^(a+1) and
/// C2 = a(a+1) 2^(a+3), and the b_{p-1,p} norm. Requires p >= 2.
BergmanCheck bergman_membership_check(const JetFunction& f, Alpha alpha, double p,
                                      const std::vector<double>& radii, const Grid& grid,
                                      const quad::DiskRule& rule, double tolerance = 0.0);

}  // namespace alphakit::analysis
