#include "alphakit/source.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace alphakit::solver {

namespace {

// Estimation grid for undeclared sup norms (polar 64 x 256), inflated 5%.
double estimate_sup(const std::function<Complex(Complex)>& f) {
  double m = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double r = (i + 1.0) / 64.0;
    for (int j = 0; j < 256; ++j) {
      m = std::max(m, std::abs(f(std::polar(r, kTwoPi * j / 256.0))));
    }
  }
  return 1.05 * m;
}

std::vector<double> parse_params(const std::string& spec, std::size_t colon) {
  std::vector<double> params;
  if (colon == std::string::npos) return params;
  std::stringstream ss(spec.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      params.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw DomainError("SourceField::parse: bad numeric parameter in '" + spec + "'");
    }
  }
  return params;
}

}  // namespace

SourceField::SourceField() {
  eval_ = [](Complex) { return Complex(0.0); };
  sup_norm_ = 0.0;
  is_zero_ = true;
}

SourceField SourceField::constant(Complex c) {
  if (c == Complex(0.0)) return zero();
  SourceField g;
  g.eval_ = [c](Complex) { return c; };
  g.sup_norm_ = std::abs(c);
  g.is_zero_ = false;
  return g;
}

SourceField SourceField::from_function(std::function<Complex(Complex)> f,
                                       std::optional<double> sup_norm,
                                       std::optional<Complex> singular_at) {
  SourceField g;
  g.eval_ = std::move(f);
  g.is_zero_ = false;
  g.singular_at_ = singular_at;
  const double grid_max = estimate_sup(g.eval_) / 1.05;
  if (sup_norm.has_value()) {
    if (*sup_norm < grid_max * (1.0 - 1e-9)) {
      throw DomainError("SourceField: declared sup norm is below the grid maximum");
    }
    g.sup_norm_ = *sup_norm;
  } else {
    g.sup_norm_ = 1.05 * grid_max;
  }
  return g;
}

SourceField SourceField::parse(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::vector<double> p = parse_params(spec, colon);

  if (name == "zero") {
    return zero();
  }
  if (name == "const") {
    if (p.empty() || p.size() > 2) throw DomainError("SourceField: const wants re[,im]");
    return constant(Complex(p[0], p.size() > 1 ? p[1] : 0.0));
  }
  if (name == "bump") {
    if (p.size() != 4) throw DomainError("SourceField: bump wants amp,cx,cy,sigma");
    const double amp = p[0], sigma = p[3];
    const Complex c(p[1], p[2]);
    if (!(sigma > 0.0)) throw DomainError("SourceField: bump sigma must be positive");
    auto f = [amp, c, sigma](Complex w) {
      return Complex(amp * std::exp(-abs2(w - c) / (sigma * sigma)), 0.0);
    };
    // sup over the closed disk: amp at the center when it is inside.
    const double sup = in_closed_disk(c)
                           ? std::abs(amp)
                           : std::abs(amp) * std::exp(-std::pow(std::abs(c) - 1.0, 2) / (sigma * sigma));
    return from_function(f, sup);
  }
  if (name == "zpow") {
    if (p.empty() || p.size() > 3) throw DomainError("SourceField: zpow wants k[,re,im]");
    const int k = static_cast<int>(p[0]);
    if (k < 0) throw DomainError("SourceField: zpow exponent must be >= 0");
    const Complex c = p.size() > 1 ? Complex(p[1], p.size() > 2 ? p[2] : 0.0) : Complex(1.0);
    auto f = [k, c](Complex w) { return c * std::pow(w, k); };
    return from_function(f, std::abs(c));
  }
  if (name == "abspow") {
    if (p.empty() || p.size() > 3) throw DomainError("SourceField: abspow wants m[,re,im]");
    const int m = static_cast<int>(p[0]);
    if (m < 0) throw DomainError("SourceField: abspow exponent must be >= 0");
    const Complex c = p.size() > 1 ? Complex(p[1], p.size() > 2 ? p[2] : 0.0) : Complex(1.0);
    auto f = [m, c](Complex w) { return c * std::pow(abs2(w), m); };
    return from_function(f, std::abs(c));
  }
  throw DomainError("SourceField::parse: unknown source spec '" + spec + "'");
}

}  // namespace alphakit::solver
