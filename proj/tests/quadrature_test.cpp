#include "alphakit/quadrature.hpp"

#include <doctest.h>

#include <cstring>

#include "test_util.hpp"

using namespace alphakit;
using namespace alphakit::quad;

namespace {

// J1 integrand: log |(1 - conj(z) w)/(z - w)|^2.
std::function<Complex(Complex)> j1_integrand(Complex z) {
  return [z](Complex w) {
    return Complex(std::log(abs2(1.0 - std::conj(z) * w) / abs2(z - w)), 0.0);
  };
}

// Series oracle for int (1-|w|^2)/(|z-w| |1 - conj(z) w|) dA(w):
// 4(1-|z|^2) sum (n+1)^2 |z|^(2n) / ((2n+1)(2n+3)).
double gradient_kernel_series(double zmod2) {
  double acc = 0.0, p = 1.0;
  for (int n = 0; n < 4000; ++n) {
    acc += (n + 1.0) * (n + 1.0) * p / ((2.0 * n + 1.0) * (2.0 * n + 3.0));
    p *= zmod2;
    if (p < 1e-20) break;
  }
  return 4.0 * (1.0 - zmod2) * acc;
}

}  // namespace

TEST_SUITE("quad.gauss_legendre") {
  TEST_CASE("polynomial exactness on (0,1)") {
    const GaussLegendre rule = gauss_legendre(8);
    for (int k = 0; k <= 15; ++k) {  // exact through degree 2n-1
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        acc += rule.weights[i] * std::pow(rule.nodes[i], k);
      }
      CHECK(acc == doctest::Approx(1.0 / (k + 1)).epsilon(1e-13));
    }
  }
}

TEST_SUITE("quad.circle") {
  TEST_CASE("trigonometric exactness below the node count") {
    const CircleRule rule(16);
    for (int k = -15; k <= 15; ++k) {
      const Complex mean =
          integrate_circle([k](double t) { return std::polar(1.0, k * t); }, rule);
      if (k == 0) {
        CHECK(std::abs(mean - 1.0) < 1e-14);
      } else {
        CHECK(std::abs(mean) < 1e-14);
      }
    }
  }

  TEST_CASE("geometric series identity") {
    // mean of 1/|1 - 0.5 e^{i t}|^2 = sum |0.5|^(2n) = 4/3
    const CircleRule rule(64);
    const Complex v = integrate_circle(
        [](double t) { return Complex(1.0 / abs2(1.0 - 0.5 * std::polar(1.0, t)), 0.0); },
        rule);
    CHECK(v.real() == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  }
}

TEST_SUITE("quad.disk") {
  TEST_CASE("weights carry unit mass") {
    const DiskRule rule(32, 64);
    double mass = 0.0;
    for (double w : rule.radial_weights()) mass += w;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate_disk([](Complex) { return Complex(1.0); }, rule).real() ==
          doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("radial monomials") {
    const DiskRule rule(16, 8);
    for (int m = 0; m < 16; ++m) {
      const Complex v =
          integrate_disk([m](Complex w) { return Complex(std::pow(abs2(w), m), 0.0); }, rule);
      CHECK(std::abs(v.real() - 1.0 / (m + 1.0)) < 1e-10);
    }
  }

  TEST_CASE("measure cancels a 1/|w| singularity") {
    const DiskRule rule(32, 16);
    const Complex v = integrate_disk(
        [](Complex w) { return Complex((1.0 - abs2(w)) / std::abs(w), 0.0); }, rule);
    CHECK(v.real() == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  }

  TEST_CASE("flagged singular integrands are refused") {
    const DiskRule rule(8, 8);
    Integrand f{[](Complex) { return Complex(1.0); }, Complex(0.2, 0.0)};
    CHECK_THROWS_AS(integrate_disk(f, rule), DomainError);
    f.singular_at.reset();
    CHECK(integrate_disk(f, rule).real() == doctest::Approx(1.0));
  }
}

TEST_SUITE("quad.mobius") {
  TEST_CASE("map is an involution swapping center and 0") {
    const MobiusMap map(Complex(0.4, -0.3));
    CHECK(std::abs(map(map.center())) < 1e-15);
    CHECK(std::abs(map(0.0) - map.center()) < 1e-15);
    testutil::Rng rng(61);
    for (int i = 0; i < 50; ++i) {
      const Complex w = rng.point_in_disk(0.99);
      CHECK(std::abs(map(map(w)) - w) < 1e-13);
    }
    CHECK_THROWS_AS(MobiusMap(Complex(1.0, 0.0)), DomainError);
  }

  TEST_CASE("J1 identity") {
    const DiskRule rule = DiskRule::defaults();
    CHECK(integrate_disk_mobius(j1_integrand(0.5), 0.5, rule).real() ==
          doctest::Approx(0.75).epsilon(1e-10));
    CHECK(integrate_disk_mobius(j1_integrand(0.0), 0.0, rule).real() ==
          doctest::Approx(1.0).epsilon(1e-10));

    testutil::Rng rng(62);
    for (int i = 0; i < 20; ++i) {
      const Complex z = rng.point_in_disk(0.9);
      const Complex v = integrate_disk_mobius(j1_integrand(z), z, rule);
      CHECK(std::abs(v.real() - (1.0 - abs2(z))) < 1e-6);
      CHECK(std::abs(v.imag()) < 1e-12);
    }
  }

  TEST_CASE("refinement stability of the J1 family") {
    const DiskRule coarse = DiskRule::defaults();
    const DiskRule fine(128, 512);
    for (double r : {0.0, 0.3, 0.6, 0.9}) {
      const Complex z = std::polar(r, 0.7);
      const Complex a = integrate_disk_mobius(j1_integrand(z), z, coarse);
      const Complex b = integrate_disk_mobius(j1_integrand(z), z, fine);
      CHECK(std::abs(a - b) < 1e-8);
    }
  }

  TEST_CASE("green gradient integral against its series") {
    const DiskRule rule = DiskRule::defaults();
    for (double r : {0.0, 0.3, 0.5, 0.8}) {
      const Complex z(r, 0.0);
      const auto f = [z](Complex w) {
        return Complex((1.0 - abs2(w)) / (std::abs(z - w) * std::abs(1.0 - std::conj(z) * w)),
                       0.0);
      };
      const double v = integrate_disk_mobius(f, z, rule).real();
      CHECK(v == doctest::Approx(gradient_kernel_series(abs2(z))).epsilon(1e-8));
      CHECK(v <= 4.0 / 3.0 + 1e-10);
    }
  }

  TEST_CASE("deterministic bit-identical results") {
    const DiskRule rule(32, 64);
    const Complex z(0.35, 0.25);
    const Complex a = integrate_disk_mobius(j1_integrand(z), z, rule);
    const Complex b = integrate_disk_mobius(j1_integrand(z), z, rule);
    CHECK(std::memcmp(&a, &b, sizeof(Complex)) == 0);
  }

  TEST_CASE("center must be interior") {
    const DiskRule rule(8, 8);
    CHECK_THROWS_AS(
        integrate_disk_mobius([](Complex) { return Complex(0.0); }, Complex(1.0, 0.0), rule),
        DomainError);
  }
}
