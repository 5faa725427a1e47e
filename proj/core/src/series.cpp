#include "alphakit/series.hpp"

#include <cmath>

#include "alphakit/quadrature.hpp"

namespace alphakit::series {

namespace {

constexpr int kSeriesCap = 1000000;
constexpr double kBinomialLimit = 0.9;  // switch point between series and quadrature
constexpr int kQuadOrder = 64;

const quad::GaussLegendre& p_quad_rule() {
  static const quad::GaussLegendre rule = quad::gauss_legendre(kQuadOrder);
  return rule;
}

void check_p_domain(double x, int k) {
  if (!(x > -1.0 && x < 1.0)) throw DomainError("p_alpha_k: x must lie in (-1,1)");
  if (k < 1) throw DomainError("p_alpha_k: k must be a positive integer");
}

}  // namespace

CoefficientSequence::CoefficientSequence(std::map<int, Complex> coeffs) {
  for (auto& [k, c] : coeffs) {
    if (c != Complex(0.0)) coeffs_[k] = c;
  }
}

Complex CoefficientSequence::coefficient(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Complex(0.0) : it->second;
}

void CoefficientSequence::set(int k, Complex value) {
  if (value == Complex(0.0)) {
    coeffs_.erase(k);
  } else {
    coeffs_[k] = value;
  }
}

int CoefficientSequence::min_index() const {
  return coeffs_.empty() ? 0 : coeffs_.begin()->first;
}

int CoefficientSequence::max_index() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

bool CoefficientSequence::has_antianalytic_part() const {
  return !coeffs_.empty() && coeffs_.begin()->first < 0;
}

double p_alpha_k(double x, int k, Alpha alpha) {
  check_p_domain(x, k);
  const double a = alpha.value();
  if (x == 0.0) return 1.0 / k;
  if (a == 0.0) return 1.0 / k;

  if (std::abs(x) <= kBinomialLimit) {
    // sum_j binom(a,j) (-x)^j / (k+j); the term ratio tends to |x|.
    double signed_term = 1.0;  // binom(a,j) (-x)^j
    double acc = 0.0;
    const double cutoff = 1e-16 * (1.0 - std::abs(x));
    for (int j = 0; j < kSeriesCap; ++j) {
      acc += signed_term / (k + j);
      if (j > a && std::abs(signed_term) < cutoff) return acc;
      signed_term *= (a - j) / (j + 1.0) * (-x);
    }
    throw NonconvergenceError("p_alpha_k: binomial series did not converge");
  }

  const auto& rule = p_quad_rule();
  double acc = 0.0;
  for (int i = 0; i < kQuadOrder; ++i) {
    const double t = rule.nodes[i];
    acc += rule.weights[i] * std::pow(t, k - 1) * std::pow(1.0 - t * x, a);
  }
  return acc;
}

double p_alpha_k_prime(double x, int k, Alpha alpha) {
  check_p_domain(x, k);
  const double a = alpha.value();
  if (a == 0.0) return 0.0;

  if (std::abs(x) <= kBinomialLimit) {
    // Term-differentiated series: sum_{j>=1} binom(a,j)(-1)^j j x^(j-1)/(k+j).
    double signed_binom = -a;  // binom(a,j) (-1)^j at j = 1
    double xp = 1.0;           // x^(j-1)
    double acc = 0.0;
    const double cutoff = 1e-16 * (1.0 - std::abs(x));
    for (int j = 1; j < kSeriesCap; ++j) {
      const double term = signed_binom * j * xp / (k + j);
      acc += term;
      if (j > a + 1.0 && std::abs(term) < cutoff) return acc;
      signed_binom *= -(a - j) / (j + 1.0);
      xp *= x;
    }
    throw NonconvergenceError("p_alpha_k_prime: series did not converge");
  }

  // P'(x) = -a int_0^1 t^k (1 - t x)^(a-1) dt
  const auto& rule = p_quad_rule();
  double acc = 0.0;
  for (int i = 0; i < kQuadOrder; ++i) {
    const double t = rule.nodes[i];
    acc += rule.weights[i] * std::pow(t, k) * std::pow(1.0 - t * x, a - 1.0);
  }
  return -a * acc;
}

double p_alpha_k_recurrence_residual(double x, int k, Alpha alpha) {
  check_p_domain(x, k);
  const double lhs = x * p_alpha_k_prime(x, k, alpha) + k * p_alpha_k(x, k, alpha);
  return std::abs(lhs - std::pow(1.0 - x, alpha.value()));
}

AlphaHarmonicSeries::AlphaHarmonicSeries(CoefficientSequence coeffs, Alpha alpha)
    : coeffs_(std::move(coeffs)), alpha_(alpha) {}

Complex AlphaHarmonicSeries::evaluate(Complex z) const {
  require_open_disk(z, "AlphaHarmonicSeries::evaluate");
  const double x = abs2(z);
  const Complex zbar = std::conj(z);
  Complex acc = 0.0;
  for (const auto& [k, c] : coeffs_.entries()) {
    if (k >= 0) {
      acc += c * std::pow(z, k);
    } else {
      acc += c * p_alpha_k(x, -k, alpha_) * std::pow(zbar, -k);
    }
  }
  return acc;
}

Complex AlphaHarmonicSeries::dz(Complex z) const {
  require_open_disk(z, "AlphaHarmonicSeries::dz");
  const double x = abs2(z);
  const Complex zbar = std::conj(z);
  Complex acc = 0.0;
  for (const auto& [k, c] : coeffs_.entries()) {
    if (k >= 1) {
      acc += c * static_cast<double>(k) * std::pow(z, k - 1);
    } else if (k <= -1) {
      acc += c * p_alpha_k_prime(x, -k, alpha_) * std::pow(zbar, -k + 1);
    }
  }
  return acc;
}

Complex AlphaHarmonicSeries::dzbar(Complex z) const {
  require_open_disk(z, "AlphaHarmonicSeries::dzbar");
  // The recurrence x P' + k P = (1 - x)^a closes each antianalytic term to
  // c_{-k} conj(z)^(k-1) (1-|z|^2)^a; the analytic part contributes nothing.
  const double w = std::pow(1.0 - abs2(z), alpha_.value());
  const Complex zbar = std::conj(z);
  Complex acc = 0.0;
  for (const auto& [k, c] : coeffs_.entries()) {
    if (k <= -1) acc += c * std::pow(zbar, -k - 1);
  }
  return acc * w;
}

Complex AlphaHarmonicSeries::laplacian(Complex z) const {
  const double a = alpha_.value();
  if (a == 0.0) return 0.0;
  return -4.0 * a * std::conj(z) * dzbar(z) / (1.0 - abs2(z));
}

Example1Function::Example1Function(int k, Alpha alpha) : k_(k), alpha_(alpha) {
  if (k < 1) throw DomainError("Example1Function: k must be a positive integer");
  if (alpha.value() == 0.0) {
    throw DomainError("Example1Function: alpha must be nonzero");
  }
  // b_0 = Gamma(a+k+1)/(Gamma(a+2) Gamma(k)) = prod_{j=2..k}(a+j) / (k-1)!
  double b0 = 1.0;
  for (int j = 2; j <= k; ++j) b0 *= alpha.value() + j;
  for (int j = 2; j <= k - 1; ++j) b0 /= j;
  b0_ = b0;
}

Complex Example1Function::evaluate(Complex z) const {
  if (z == Complex(0.0)) {
    throw DomainError("Example1Function: the origin is a puncture of the domain");
  }
  require_open_disk(z, "Example1Function::evaluate");
  const double a = alpha_.value();
  const double x = 1.0 - abs2(z);
  const double threshold = 1e-14 / x;
  double an = 1.0;   // Gamma(n+k)/(Gamma(n+1)Gamma(k)), n = 0
  double bn = b0_;
  double xn = 1.0;
  double s1 = 0.0, s2 = 0.0;
  for (int n = 0; n < kSeriesCap; ++n) {
    const double t1 = an * xn;
    const double t2 = bn * xn;
    s1 += t1;
    s2 += t2;
    if (t1 + t2 < threshold) {
      const Complex tail = std::pow(std::conj(z), k_);
      return (s1 - std::pow(x, a + 1.0) * s2) * tail;
    }
    an *= (n + k_) / (n + 1.0);
    bn *= (n + a + k_ + 1.0) / (n + a + 2.0);
    xn *= x;
  }
  throw NonconvergenceError("Example1Function: series did not converge (z too close to 0)");
}

double Example1Function::leading_constant() const {
  // Gamma(a+k+1)/(Gamma(a+1)(k-1)!) = prod_{j=1..k}(a+j) / (k-1)!
  double c = 1.0;
  for (int j = 1; j <= k_; ++j) c *= alpha_.value() + j;
  for (int j = 2; j <= k_ - 1; ++j) c /= j;
  return c;
}

PolynomialMap::PolynomialMap(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

PolynomialMap PolynomialMap::identity() { return PolynomialMap({0.0, 1.0}); }

PolynomialMap PolynomialMap::rotation(double t) {
  return PolynomialMap({0.0, std::polar(1.0, t)});
}

PolynomialMap PolynomialMap::dilation(Complex a) { return PolynomialMap({0.0, a}); }

PolynomialMap PolynomialMap::power(int m) {
  if (m < 0) throw DomainError("PolynomialMap::power: exponent must be >= 0");
  std::vector<Complex> coeffs(m + 1, 0.0);
  coeffs[m] = 1.0;
  return PolynomialMap(std::move(coeffs));
}

Complex PolynomialMap::operator()(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

bool PolynomialMap::is_rotation() const {
  if (coeffs_.size() < 2) return false;
  if (std::abs(coeffs_[0]) != 0.0) return false;
  if (std::abs(std::abs(coeffs_[1]) - 1.0) > 1e-12) return false;
  for (std::size_t j = 2; j < coeffs_.size(); ++j) {
    if (std::abs(coeffs_[j]) != 0.0) return false;
  }
  return true;
}

namespace {

Complex map_into_disk(const PolynomialMap& psi, Complex z) {
  const Complex w = psi(z);
  if (!in_open_disk(w)) {
    throw RangeError("compose: psi leaves the unit disk at the requested point");
  }
  return w;
}

}  // namespace

std::function<Complex(Complex)> compose(const AlphaHarmonicSeries& f, const PolynomialMap& psi) {
  return [f, psi](Complex z) { return f.evaluate(map_into_disk(psi, z)); };
}

std::function<Complex(Complex)> compose(const Example1Function& f, const PolynomialMap& psi) {
  return [f, psi](Complex z) { return f.evaluate(map_into_disk(psi, z)); };
}

}  // namespace alphakit::series
