#include "alphakit/solver.hpp"

#include <doctest.h>

#include "alphakit/kernels.hpp"
#include "alphakit/residual.hpp"
#include "test_util.hpp"

using namespace alphakit;
using namespace alphakit::solver;
using testutil::fd_dz;
using testutil::fd_dzbar;

namespace {

BoundaryData random_trig_poly(testutil::Rng& rng, int degree) {
  std::map<int, Complex> coeffs;
  for (int k = -degree; k <= degree; ++k) coeffs[k] = rng.unit_coeff();
  return BoundaryData::fourier(std::move(coeffs));
}

// Spectral oracle for the Poisson-type integral of a trigonometric
// polynomial, from the Fourier expansion of the kernel:
//   mode k >= 0   ->  z^k
//   mode -k (k>0) ->  (1-|z|^2)^(a+1) conj(z)^k sum_j C_{j+k} |z|^(2j),
// with C_m = Gamma(a+m+1)/(Gamma(a+1) m!).
Complex poisson_oracle(const BoundaryData& fstar, Complex z, double a) {
  Complex acc = 0.0;
  for (const auto& [k, c] : fstar.coefficients()) {
    if (k >= 0) {
      acc += c * std::pow(z, k);
      continue;
    }
    const int kappa = -k;
    double cm = 1.0;  // C_0
    for (int m = 0; m < kappa; ++m) cm *= (a + m + 1.0) / (m + 1.0);
    Complex s = 0.0;
    double x = 1.0;
    for (int j = 0; j < 2000; ++j) {
      const double term = cm * x;
      s += term;
      if (term < 1e-18) break;
      cm *= (a + kappa + j + 1.0) / (kappa + j + 1.0);
      x *= abs2(z);
    }
    acc += c * std::pow(1.0 - abs2(z), a + 1.0) * std::pow(std::conj(z), kappa) * s;
  }
  return acc;
}

}  // namespace

TEST_SUITE("solver.boundary_data") {
  TEST_CASE("fourier evaluation and coefficients") {
    const auto f = BoundaryData::fourier({{-2, Complex(0.0, 1.0)}, {1, 2.0}});
    const double theta = 0.8;
    const Complex expect =
        Complex(0.0, 1.0) * std::polar(1.0, -2.0 * theta) + 2.0 * std::polar(1.0, theta);
    CHECK(std::abs(f.evaluate(theta) - expect) < 1e-14);
    CHECK(f.coefficient(1) == Complex(2.0));
    CHECK(f.coefficient(5) == Complex(0.0));
    CHECK(f.degree() == 2);
  }

  TEST_CASE("samples interpolate a trigonometric polynomial") {
    testutil::Rng rng(101);
    const auto original = random_trig_poly(rng, 3);
    std::vector<Complex> samples(16);
    for (int j = 0; j < 16; ++j) samples[j] = original.evaluate(kTwoPi * j / 16.0);
    const auto rebuilt = BoundaryData::samples(samples);
    for (int k = -3; k <= 3; ++k) {
      CHECK(std::abs(rebuilt.coefficient(k) - original.coefficient(k)) < 1e-12);
    }
    for (double theta : {0.1, 2.5, 5.0}) {
      CHECK(std::abs(rebuilt.evaluate(theta) - original.evaluate(theta)) < 1e-12);
    }
  }

  TEST_CASE("sup norm dominates the angular grid") {
    testutil::Rng rng(102);
    const auto f = random_trig_poly(rng, 5);
    double grid_max = 0.0;
    for (int j = 0; j < 4096; ++j) {
      grid_max = std::max(grid_max, std::abs(f.evaluate(kTwoPi * j / 4096.0)));
    }
    CHECK(f.sup_norm() >= grid_max - 1e-15);
    auto g = f;
    CHECK_THROWS_AS(g.declare_sup_norm(0.5 * grid_max), DomainError);
    g.declare_sup_norm(2.0 * grid_max);
    CHECK(g.sup_norm() == doctest::Approx(2.0 * grid_max));
  }

  TEST_CASE("constant subtraction") {
    const auto f = BoundaryData::fourier({{0, 1.5}, {1, 1.0}});
    const auto g = f.minus_constant(1.5);
    CHECK(g.coefficient(0) == Complex(0.0));
    CHECK(g.coefficient(1) == Complex(1.0));
  }
}

TEST_SUITE("solver.source_field") {
  TEST_CASE("registry specs") {
    CHECK(SourceField::parse("zero").is_zero());
    const auto c = SourceField::parse("const:-1");
    CHECK(c(Complex(0.3, 0.2)) == Complex(-1.0));
    CHECK(c.sup_norm() == doctest::Approx(1.0));

    const auto b = SourceField::parse("bump:2,0.2,0,0.5");
    CHECK(b(Complex(0.2, 0.0)).real() == doctest::Approx(2.0));
    CHECK(b.sup_norm() == doctest::Approx(2.0));

    const auto zp = SourceField::parse("zpow:2,0.5");
    CHECK(std::abs(zp(Complex(0.0, 1.0)) - Complex(-0.5)) < 1e-15);
    CHECK(zp.sup_norm() == doctest::Approx(0.5));

    const auto ap = SourceField::parse("abspow:1,3");
    CHECK(ap(Complex(0.0, 0.5)).real() == doctest::Approx(0.75));

    CHECK_THROWS_AS(SourceField::parse("wiggle:1"), DomainError);
    CHECK_THROWS_AS(SourceField::parse("bump:1,0"), DomainError);
  }

  TEST_CASE("estimated sup norm carries the 5% inflation") {
    const auto g = SourceField::from_function(
        [](Complex w) { return Complex(w.real() * w.real(), 0.0); });
    CHECK(g.sup_norm() == doctest::Approx(1.05).epsilon(1e-3));
    CHECK_THROWS_AS(SourceField::from_function(
                        [](Complex) { return Complex(2.0, 0.0); }, 1.0),
                    DomainError);
  }

  TEST_CASE("singular flag blocks the plain disk rule") {
    const auto g = SourceField::from_function(
        [](Complex w) { return Complex(1.0) / (w - Complex(0.3, 0.0)); }, 1e6,
        Complex(0.3, 0.0));
    const quad::DiskRule rule(8, 8);
    CHECK_THROWS_AS(quad::integrate_disk(g.integrand(), rule), DomainError);
    CHECK(std::isfinite(
        quad::integrate_disk_mobius(g.integrand().eval, *g.singular_at(), rule).real()));
  }
}

TEST_SUITE("solver.poisson_integral") {
  TEST_CASE("constants reproduce") {
    const auto one = BoundaryData::constant(1.0);
    for (double a : {0.0, 0.5, 2.5}) {
      CHECK(std::abs(poisson_integral(one, 0.5, Alpha(a)) - 1.0) < 1e-12);
    }
  }

  TEST_CASE("analytic monomial data") {
    const auto f = BoundaryData::fourier({{1, 1.0}});
    CHECK(std::abs(poisson_integral(f, 0.0, Alpha(1.0))) < 1e-14);
    CHECK(std::abs(poisson_integral(f, 0.3, Alpha(0.5)) - 0.3) < 1e-12);
  }

  TEST_CASE("quadrature agrees with the spectral oracle") {
    testutil::Rng rng(111);
    for (double a : {0.0, 0.5, 1.0, 2.5}) {
      const auto f = random_trig_poly(rng, 4);
      for (int i = 0; i < 10; ++i) {
        const Complex z = rng.point_in_disk(0.8);
        CHECK(std::abs(poisson_integral(f, z, Alpha(a)) - poisson_oracle(f, z, a)) < 1e-10);
      }
    }
  }

  TEST_CASE("pointwise domination by the classical Poisson integral") {
    testutil::Rng rng(112);
    const auto f = random_trig_poly(rng, 4);
    const auto abs_f = [&](double theta) { return std::abs(f.evaluate(theta)); };
    for (double a : {0.0, 1.0, 2.2}) {
      for (int i = 0; i < 10; ++i) {
        const Complex z = rng.point_in_disk(0.85);
        Complex classical = 0.0;
        const int n = 512;
        for (int j = 0; j < n; ++j) {
          const double theta = kTwoPi * j / n;
          classical += kernels::poisson_kernel(z * std::polar(1.0, -theta)) * abs_f(theta);
        }
        classical /= n;
        CHECK(std::abs(poisson_integral(f, z, Alpha(a))) <=
              std::pow(2.0, a) * classical.real() + 1e-10);
      }
    }
  }
}

TEST_SUITE("solver.green_potential") {
  TEST_CASE("zero source") {
    CHECK(green_potential(SourceField::zero(), 0.4, Alpha(1.0)) == Complex(0.0));
  }

  TEST_CASE("the sharp-case anchor locks the sign convention") {
    // a = 0, g = -1  =>  1 - |z|^2 exactly.
    const auto g = SourceField::constant(-1.0);
    testutil::Rng rng(121);
    for (int i = 0; i < 10; ++i) {
      const Complex z = rng.point_in_disk(0.9);
      const Complex v = green_potential(g, z, Alpha(0.0));
      CHECK(std::abs(v - (1.0 - abs2(z))) < 1e-10);
    }
  }

  TEST_CASE("unit source closed form at every alpha") {
    // G[1] = -(1-|z|^2)^(a+1)/(a+1): its Delta_a is 1 and it vanishes on the
    // boundary.
    const auto g = SourceField::constant(1.0);
    for (double a : {0.0, 0.5, 1.0, 2.5}) {
      for (double r : {0.0, 0.35, 0.7}) {
        const Complex z(r, r > 0 ? -0.1 : 0.0);
        const Complex v = green_potential(g, z, Alpha(a));
        const double expect = -std::pow(1.0 - abs2(z), a + 1.0) / (a + 1.0);
        CHECK(std::abs(v - expect) < 1e-10);
      }
    }
  }

  TEST_CASE("modulus bound") {
    const auto g = SourceField::constant(1.0);
    const Complex v = green_potential(g, 0.7, Alpha(1.0));
    CHECK(std::abs(v) <= 2.0 * 0.51 * 0.51 + 1e-12);
  }
}

TEST_SUITE("solver.solve") {
  TEST_CASE("sharp case field") {
    const auto field = solve(BoundaryData::zero(), SourceField::constant(-2.5), Alpha(0.0));
    testutil::Rng rng(131);
    for (int i = 0; i < 8; ++i) {
      const Complex z = rng.point_in_disk(0.9);
      CHECK(std::abs(field.value(z) - 2.5 * (1.0 - abs2(z))) < 1e-9);
    }
  }

  TEST_CASE("constants are invariant for every alpha") {
    const auto field = solve(BoundaryData::constant(1.0), SourceField::zero(), Alpha(1.7));
    CHECK(std::abs(field.value(Complex(0.3, 0.4)) - 1.0) < 1e-12);
  }

  TEST_CASE("classical harmonic extension of cos(theta)") {
    const auto f = BoundaryData::fourier({{-1, 0.5}, {1, 0.5}});
    const auto field = solve(f, SourceField::zero(), Alpha(0.0));
    const Complex z(0.2, 0.6);
    CHECK(std::abs(field.value(z) - z.real()) < 1e-12);
  }

  TEST_CASE("empty data gives the zero field") {
    const auto field = solve(BoundaryData::zero(), SourceField::zero(), Alpha(1.0));
    CHECK(field.value(Complex(0.5, 0.1)) == Complex(0.0));
  }

  TEST_CASE("value decomposes into the two potentials") {
    testutil::Rng rng(134);
    const auto field = solve(random_trig_poly(rng, 3), SourceField::parse("zpow:1,0.5"),
                             Alpha(0.8));
    for (int i = 0; i < 10; ++i) {
      const Complex z = rng.point_in_disk(0.9);
      CHECK(field.value(z) == field.poisson_part(z) + field.green_part(z));
    }
  }

  TEST_CASE("residual certification for boundary-only data") {
    testutil::Rng rng(132);
    for (double a : {0.0, 1.0, 2.5}) {
      const auto field = solve(random_trig_poly(rng, 5), SourceField::zero(), Alpha(a));
      const auto f = [&](Complex z) { return field.value(z); };
      for (int i = 0; i < 6; ++i) {
        const Complex z = rng.point_in_disk(0.8);
        CHECK(std::abs(analysis::delta_alpha_residual(f, z, Alpha(a))) < 1e-4);
      }
    }
  }

  TEST_CASE("green potential recovers the source") {
    const auto g = SourceField::parse("bump:1,0.2,0,0.6");
    for (double a : {0.0, 1.0}) {
      const auto field = solve(BoundaryData::zero(), g, Alpha(a));
      const auto f = [&](Complex z) { return field.value(z); };
      for (double r : {0.1, 0.45, 0.7}) {
        const Complex z(r, 0.05);
        const Complex res = analysis::delta_alpha_residual(f, z, Alpha(a));
        CHECK(std::abs(res - g(z)) < 1e-3);
      }
    }
  }

  TEST_CASE("radial boundary limit matches the data") {
    testutil::Rng rng(133);
    const auto fstar = random_trig_poly(rng, 3);
    const auto g = SourceField::parse("bump:1,0,0,0.5");
    const auto field = solve(fstar, g, Alpha(0.5));
    // The radial approach carries a t^(a+1) component beyond the linear
    // extrapolation model, worth ~1e-3 at a = 0.5.
    for (double theta : {0.4, 2.0, 4.4}) {
      CHECK(std::abs(field.boundary_limit(theta) - fstar.evaluate(theta)) < 5e-3);
    }
  }

  TEST_CASE("radial boundary limit is tight for harmonic data") {
    // Pure radial powers leave only the quadratic curvature term
    // t2*t3*k(k-1)/2 ~ 3e-6 behind the linear model.
    const auto fstar = BoundaryData::fourier({{-1, 0.5}, {1, 0.5}, {2, Complex(0.0, 0.3)}});
    const auto field = solve(fstar, SourceField::zero(), Alpha(0.0));
    for (double theta : {0.3, 3.3}) {
      CHECK(std::abs(field.boundary_limit(theta) - fstar.evaluate(theta)) < 1e-5);
    }
  }
}

TEST_SUITE("solver.jacobian") {
  TEST_CASE("constant field") {
    const auto field = solve(BoundaryData::constant(1.0), SourceField::zero(), Alpha(1.0));
    const JacobianData jd = solution_jacobian(field, Complex(0.4, 0.1));
    CHECK(std::abs(jd.fz) < 1e-12);
    CHECK(std::abs(jd.fzbar) < 1e-12);
  }

  TEST_CASE("identity boundary data") {
    const auto field =
        solve(BoundaryData::fourier({{1, 1.0}}), SourceField::zero(), Alpha(0.0));
    const JacobianData jd = solution_jacobian(field, Complex(0.3, -0.2));
    CHECK(std::abs(jd.fz - 1.0) < 1e-12);
    CHECK(std::abs(jd.fzbar) < 1e-12);
    CHECK(jd.op_norm() == doctest::Approx(1.0));
    CHECK(jd.min_stretch() == doctest::Approx(1.0));
  }

  TEST_CASE("matches finite differences of the field at 50 points") {
    testutil::Rng rng(141);
    const auto field = solve(random_trig_poly(rng, 4), SourceField::parse("bump:0.8,0.1,0.1,0.7"),
                             Alpha(1.2));
    const auto f = [&](Complex z) { return field.value(z); };
    for (int i = 0; i < 50; ++i) {
      const Complex z = rng.point_in_disk(0.75);
      const double h = 1e-5 * (1.0 - std::abs(z));
      const JacobianData jd = field.jacobian(z);
      CHECK(std::abs(jd.fz - fd_dz(f, z, h)) < 1e-5);
      CHECK(std::abs(jd.fzbar - fd_dzbar(f, z, h)) < 1e-5);
    }
  }

  TEST_CASE("op norm obeys the gradient bound for self-map data") {
    testutil::Rng rng(142);
    auto fstar = random_trig_poly(rng, 4);
    // Normalize to a self-map.
    std::map<int, Complex> scaled;
    for (const auto& [k, c] : fstar.coefficients()) scaled[k] = c / fstar.sup_norm();
    fstar = BoundaryData::fourier(std::move(scaled));
    const double a = 1.0;
    const auto field = solve(fstar, SourceField::zero(), Alpha(a));
    for (int i = 0; i < 10; ++i) {
      const Complex z = rng.point_in_disk(0.85);
      const double bound = (a + 1.0) * std::pow(2.0, a + 1.0) / (1.0 - abs2(z));
      CHECK(solution_jacobian(field, z).op_norm() <= bound + 1e-9);
    }
  }

  TEST_CASE("invariant op_norm >= min_stretch >= 0") {
    testutil::Rng rng(143);
    const auto field = solve(random_trig_poly(rng, 3), SourceField::zero(), Alpha(0.7));
    for (int i = 0; i < 10; ++i) {
      const JacobianData jd = field.jacobian(rng.point_in_disk(0.8));
      CHECK(jd.op_norm() >= jd.min_stretch());
      CHECK(jd.min_stretch() >= 0.0);
    }
  }

  TEST_CASE("laplacian identity against finite differences") {
    testutil::Rng rng(144);
    const auto field = solve(random_trig_poly(rng, 3), SourceField::parse("const:0.5,-0.25"),
                             Alpha(1.5));
    const auto f = [&](Complex z) { return field.value(z); };
    for (int i = 0; i < 5; ++i) {
      const Complex z = rng.point_in_disk(0.6);
      const double h = 1e-4 * (1.0 - std::abs(z));
      CHECK(std::abs(field.laplacian(z) - testutil::fd_laplacian(f, z, h)) < 1e-4);
    }
  }
}
