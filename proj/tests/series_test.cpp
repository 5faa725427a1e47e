#include "alphakit/series.hpp"

#include <doctest.h>

#include "alphakit/residual.hpp"
#include "test_util.hpp"

using namespace alphakit;
using namespace alphakit::series;
using testutil::adaptive_simpson;
using testutil::fd_dz;
using testutil::fd_dzbar;
using testutil::rel_err;

namespace {

double p_oracle(double x, int k, double a) {
  return adaptive_simpson(
      [x, k, a](double t) { return std::pow(t, k - 1) * std::pow(1.0 - t * x, a); }, 1e-300,
      1.0, 1e-14);
}

AlphaHarmonicSeries make_series(std::map<int, Complex> coeffs, double alpha) {
  return AlphaHarmonicSeries(CoefficientSequence(std::move(coeffs)), Alpha(alpha));
}

Complex residual_at(const std::function<Complex(Complex)>& f, Complex z, double alpha) {
  return analysis::delta_alpha_residual(f, z, Alpha(alpha));
}

}  // namespace

TEST_SUITE("series.p_alpha_k") {
  TEST_CASE("x = 0 and a = 0 give 1/k") {
    CHECK(p_alpha_k(0.0, 4, Alpha(2.3)) == doctest::Approx(0.25));
    for (double x : {-0.7, 0.2, 0.95}) {
      CHECK(p_alpha_k(x, 5, Alpha(0.0)) == doctest::Approx(0.2));
    }
  }

  TEST_CASE("k = 1 antiderivative") {
    for (double x : {-0.8, 0.3, 0.92}) {
      for (double a : {-0.5, 0.7, 3.0}) {
        const double expect = (1.0 - std::pow(1.0 - x, a + 1.0)) / ((a + 1.0) * x);
        CHECK(p_alpha_k(x, 1, Alpha(a)) == doctest::Approx(expect).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("series and quadrature branches agree with the oracle") {
    for (double x : {-0.95, -0.905, -0.4, 0.4, 0.895, 0.905, 0.95}) {
      for (double a : {-0.5, 1.25, 4.0}) {
        CHECK(p_alpha_k(x, 3, Alpha(a)) == doctest::Approx(p_oracle(x, 3, a)).epsilon(1e-11));
      }
    }
  }

  TEST_CASE("positive for x < 1") {
    testutil::Rng rng(71);
    for (int i = 0; i < 200; ++i) {
      CHECK(p_alpha_k(rng.uniform(-0.95, 0.95), rng.integer(1, 30),
                      Alpha(rng.uniform(-0.9, 5.0))) > 0.0);
    }
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(p_alpha_k(1.0, 1, Alpha(1.0)), DomainError);
    CHECK_THROWS_AS(p_alpha_k(0.5, 0, Alpha(1.0)), DomainError);
  }
}

TEST_SUITE("series.recurrence") {
  TEST_CASE("x = 0 is exact") {
    CHECK(p_alpha_k_recurrence_residual(0.0, 7, Alpha(2.0)) < 1e-14);
  }

  TEST_CASE("pinned points") {
    CHECK(p_alpha_k_recurrence_residual(0.5, 3, Alpha(1.25)) < 1e-10);
    CHECK(p_alpha_k_recurrence_residual(-0.8, 7, Alpha(0.5)) < 1e-10);
  }

  TEST_CASE("random sweep") {
    testutil::Rng rng(72);
    for (int i = 0; i < 300; ++i) {
      const double x = rng.uniform(-0.95, 0.95);
      const int k = rng.integer(1, 50);
      const double a = rng.uniform(-0.9, 5.0);
      CHECK(p_alpha_k_recurrence_residual(x, k, Alpha(a)) < 1e-10);
    }
  }
}

TEST_SUITE("series.evaluation") {
  TEST_CASE("constant series") {
    const auto s = make_series({{0, 5.0}}, 1.3);
    CHECK(std::abs(s.evaluate(Complex(0.2, -0.6)) - 5.0) < 1e-14);
  }

  TEST_CASE("a = 0 antianalytic term is conj(z)") {
    const auto s = make_series({{-1, 1.0}}, 0.0);
    const Complex z(0.4, 0.3);
    CHECK(std::abs(s.evaluate(z) - std::conj(z)) < 1e-14);
  }

  TEST_CASE("single antianalytic term against the antiderivative") {
    // P_{1,2}(0.25) = 1/2 - 0.25/3
    const auto s = make_series({{-2, 1.0}}, 1.0);
    const double expect = (0.5 - 0.25 / 3.0) * 0.25;
    CHECK(s.evaluate(0.5).real() == doctest::Approx(expect).epsilon(1e-13));
  }

  TEST_CASE("a = 0 reduction to the harmonic sum") {
    testutil::Rng rng(81);
    std::map<int, Complex> coeffs;
    for (int k = -4; k <= 4; ++k) coeffs[k] = rng.unit_coeff();
    const auto s = make_series(coeffs, 0.0);
    for (int i = 0; i < 30; ++i) {
      const Complex z = rng.point_in_disk(0.9);
      Complex expect = 0.0;
      for (const auto& [k, c] : coeffs) {
        expect += k >= 0 ? c * std::pow(z, k) : c * std::pow(std::conj(z), -k) / double(-k);
      }
      CHECK(std::abs(s.evaluate(z) - expect) < 1e-12);
    }
  }

  TEST_CASE("domain error outside the disk") {
    const auto s = make_series({{1, 1.0}}, 0.5);
    CHECK_THROWS_AS(s.evaluate(Complex(1.0, 0.2)), DomainError);
  }
}

TEST_SUITE("series.derivatives") {
  TEST_CASE("analytic series has zero dzbar") {
    const auto s = make_series({{0, 2.0}, {1, 1.0}, {3, -0.5}}, 1.7);
    CHECK(std::abs(s.dzbar(Complex(0.3, 0.2))) < 1e-14);
  }

  TEST_CASE("closed form of the k = 1 term") {
    for (double a : {0.5, 2.0}) {
      const auto s = make_series({{-1, 1.0}}, a);
      const Complex z(0.0, 0.3);
      CHECK(std::abs(s.dzbar(z) - std::pow(0.91, a)) < 1e-13);
    }
  }

  TEST_CASE("dz and dzbar match finite differences") {
    testutil::Rng rng(82);
    std::map<int, Complex> coeffs;
    for (int k = -3; k <= 3; ++k) coeffs[k] = rng.unit_coeff();
    const auto s = make_series(coeffs, 1.4);
    const auto f = [&](Complex z) { return s.evaluate(z); };
    for (int i = 0; i < 25; ++i) {
      const Complex z = rng.point_in_disk(0.8);
      const double h = 1e-5 * (1.0 - std::abs(z));
      CHECK(rel_err(s.dz(z), fd_dz(f, z, h)) < 1e-6);
      CHECK(rel_err(s.dzbar(z), fd_dzbar(f, z, h)) < 1e-6);
    }
  }

  TEST_CASE("weighted dzbar is antianalytic") {
    testutil::Rng rng(83);
    const auto s = make_series({{-1, rng.unit_coeff()}, {-3, rng.unit_coeff()}}, 2.2);
    const auto weighted = [&](Complex z) {
      return std::pow(1.0 - abs2(z), -2.2) * s.dzbar(z);
    };
    for (int i = 0; i < 20; ++i) {
      const Complex z = rng.point_in_disk(0.7);
      CHECK(std::abs(fd_dz(weighted, z, 1e-5 * (1.0 - std::abs(z)))) < 1e-5);
    }
  }

  TEST_CASE("residual certifies harmonicity") {
    testutil::Rng rng(84);
    std::map<int, Complex> coeffs;
    for (int k = -4; k <= 4; ++k) coeffs[k] = rng.unit_coeff();
    const auto s = make_series(coeffs, 0.8);
    const auto f = [&](Complex z) { return s.evaluate(z); };
    for (int i = 0; i < 15; ++i) {
      CHECK(std::abs(residual_at(f, rng.point_in_disk(0.8), 0.8)) < 1e-5);
    }
  }
}

TEST_SUITE("series.example1") {
  TEST_CASE("construction guards") {
    CHECK_THROWS_AS(Example1Function(0, Alpha(1.0)), DomainError);
    CHECK_THROWS_AS(Example1Function(1, Alpha(0.0)), DomainError);
  }

  TEST_CASE("puncture at the origin") {
    const Example1Function f(1, Alpha(1.0));
    CHECK_THROWS_AS(f.evaluate(0.0), DomainError);
  }

  TEST_CASE("harmonic on the punctured disk") {
    const Example1Function f(1, Alpha(1.0));
    CHECK(std::abs(residual_at([&](Complex z) { return f.evaluate(z); }, 0.5, 1.0)) < 1e-4);
  }

  TEST_CASE("k = 1 closed form") {
    // a_n = 1 and b_n = 1 for k = 1, so f = (1 - x^(a+1)) conj(z)/|z|^2.
    const Example1Function f(1, Alpha(1.5));
    const Complex z(0.4, -0.25);
    const double x = 1.0 - abs2(z);
    const Complex expect = (1.0 - std::pow(x, 2.5)) * std::conj(z) / abs2(z);
    CHECK(std::abs(f.evaluate(z) - expect) < 1e-12);
  }

  TEST_CASE("squaring breaks harmonicity") {
    const Example1Function f(1, Alpha(1.0));
    const auto composed = compose(f, PolynomialMap::power(2));
    const double r = std::abs(residual_at(composed, 0.5, 1.0));
    CHECK(r > 1e-2);
    CHECK(r == doctest::Approx(1.0).epsilon(0.05));  // regression pin from the oracle run
  }

  TEST_CASE("dzbar of the composition matches the closed form") {
    const int k = 1;
    const Example1Function f(k, Alpha(1.0));
    const auto composed = compose(f, PolynomialMap::power(2));
    const Complex z(0.4, 0.0);
    const Complex got = fd_dzbar(composed, z, 1e-6);
    const Complex expect = 2.0 * f.leading_constant() *
                           std::pow(1.0 - abs2(z) * abs2(z), 1.0) *
                           std::pow(std::conj(z), 2 * k - 1);
    CHECK(std::abs(got - expect) < 1e-6);
  }

  TEST_CASE("leading constant recurrence") {
    CHECK(Example1Function(1, Alpha(1.0)).leading_constant() == doctest::Approx(2.0));
    // Gamma(a+k+1)/(Gamma(a+1)(k-1)!) at a = 0.5, k = 3:
    // (1.5)(2.5)(3.5)/2! = 6.5625
    CHECK(Example1Function(3, Alpha(0.5)).leading_constant() == doctest::Approx(6.5625));
  }
}

TEST_SUITE("series.compose") {
  TEST_CASE("identity composition is the series itself") {
    const auto s = make_series({{-1, 0.7}, {2, Complex(0.0, 0.4)}}, 1.1);
    const auto composed = compose(s, PolynomialMap::identity());
    const Complex z(0.3, 0.5);
    CHECK(std::abs(composed(z) - s.evaluate(z)) < 1e-15);
  }

  TEST_CASE("rotations preserve harmonicity") {
    testutil::Rng rng(91);
    std::map<int, Complex> coeffs;
    for (int k = -3; k <= 3; ++k) coeffs[k] = rng.unit_coeff();
    const auto s = make_series(coeffs, 1.6);
    const auto composed = compose(s, PolynomialMap::rotation(1.1));
    for (int i = 0; i < 15; ++i) {
      CHECK(std::abs(residual_at(composed, rng.point_in_disk(0.7), 1.6)) < 1e-4);
    }
  }

  TEST_CASE("dilations break harmonicity when a != 0") {
    const auto s = make_series({{-1, 1.0}}, 1.0);
    const auto composed = compose(s, PolynomialMap::dilation(0.5));
    const double r = std::abs(residual_at(composed, 0.5, 1.0));
    CHECK(r > 1e-2);
    CHECK(r == doctest::Approx(1.0 / 3.0).epsilon(0.01));  // analytic value of the defect
  }

  TEST_CASE("range error when psi leaves the disk") {
    const auto s = make_series({{1, 1.0}}, 0.5);
    const auto composed = compose(s, PolynomialMap::dilation(2.0));
    CHECK_THROWS_AS(composed(Complex(0.6, 0.0)), RangeError);
  }

  TEST_CASE("rotation detection") {
    CHECK(PolynomialMap::rotation(0.3).is_rotation());
    CHECK(PolynomialMap::identity().is_rotation());
    CHECK(!PolynomialMap::dilation(0.5).is_rotation());
    CHECK(!PolynomialMap::power(2).is_rotation());
  }
}
