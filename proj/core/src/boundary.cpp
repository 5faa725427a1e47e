#include "alphakit/boundary.hpp"

#include <algorithm>
#include <cmath>

namespace alphakit::solver {

namespace {
constexpr int kNormGrid = 4096;
}  // namespace

BoundaryData BoundaryData::fourier(std::map<int, Complex> coefficients) {
  BoundaryData data;
  for (auto& [k, c] : coefficients) {
    if (c != Complex(0.0)) data.coeffs_[k] = c;
  }
  data.refresh_norm();
  return data;
}

BoundaryData BoundaryData::samples(const std::vector<Complex>& values) {
  const int n = static_cast<int>(values.size());
  if (n < 1) throw DomainError("BoundaryData::samples: need at least one sample");
  // Trigonometric interpolation: c_k = (1/n) sum_j v_j e^{-ik theta_j},
  // k = -floor((n-1)/2) .. floor(n/2).
  std::map<int, Complex> coeffs;
  const int k_lo = -(n - 1) / 2;
  const int k_hi = n / 2;
  for (int k = k_lo; k <= k_hi; ++k) {
    Complex c = 0.0;
    for (int j = 0; j < n; ++j) {
      c += values[j] * std::polar(1.0, -k * kTwoPi * j / n);
    }
    c /= static_cast<double>(n);
    if (std::abs(c) > 1e-15) coeffs[k] = c;
  }
  return fourier(std::move(coeffs));
}

BoundaryData BoundaryData::constant(Complex c) {
  std::map<int, Complex> coeffs;
  if (c != Complex(0.0)) coeffs[0] = c;
  return fourier(std::move(coeffs));
}

Complex BoundaryData::evaluate(double theta) const {
  Complex acc = 0.0;
  for (const auto& [k, c] : coeffs_) {
    acc += c * std::polar(1.0, k * theta);
  }
  return acc;
}

Complex BoundaryData::coefficient(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Complex(0.0) : it->second;
}

int BoundaryData::degree() const {
  int d = 0;
  for (const auto& [k, c] : coeffs_) d = std::max(d, std::abs(k));
  return d;
}

void BoundaryData::refresh_norm() {
  double m = 0.0;
  for (int j = 0; j < kNormGrid; ++j) {
    m = std::max(m, std::abs(evaluate(kTwoPi * j / kNormGrid)));
  }
  sup_norm_ = m;
}

void BoundaryData::declare_sup_norm(double value) {
  if (value < sup_norm_) {
    throw DomainError("BoundaryData::declare_sup_norm: declared norm is below the grid maximum");
  }
  sup_norm_ = value;
}

BoundaryData BoundaryData::minus_constant(Complex c) const {
  auto coeffs = coeffs_;
  coeffs[0] = coefficient(0) - c;
  if (std::abs(coeffs[0]) == 0.0) coeffs.erase(0);
  return fourier(std::move(coeffs));
}

}  // namespace alphakit::solver
