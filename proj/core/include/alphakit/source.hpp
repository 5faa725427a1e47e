////////////////////////////////////////////////////////////////////////////////
// source.hpp
//
// The right-hand side g of the equation: a continuous function on the closed
// disk given by a closed-form evaluator. Sup norms are declared where the
// closed form makes them exact, otherwise estimated on a 64x256 polar grid
// and inflated by 5%.
//
// Registered spec strings (for the CLI and config files):
//   zero
//   const:<re>[,<im>]
//   bump:<amp>,<cx>,<cy>,<sigma>    amp * exp(-|z - c|^2 / sigma^2)
//   zpow:<k>[,<re>,<im>]            c * z^k
//   abspow:<m>[,<re>,<im>]          c * |z|^(2m)
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <functional>
#include <optional>
#include <string>

#include "alphakit/quadrature.hpp"
#include "alphakit/types.hpp"

namespace alphakit::solver {

class SourceField {
 public:
  /// Zero source.
  SourceField();

  static SourceField zero() { return SourceField(); }
  static SourceField constant(Complex c);
  static SourceField from_function(std::function<Complex(Complex)> f,
                                   std::optional<double> sup_norm = {},
                                   std::optional<Complex> singular_at = {});
  /// Parses a registered source spec; throws DomainError on unknown names
  /// or malformed parameters.
  static SourceField parse(const std::string& spec);

  Complex operator()(Complex w) const { return eval_(w); }
  double sup_norm() const { return sup_norm_; }
  std::optional<Complex> singular_at() const { return singular_at_; }
  bool is_zero() const { return is_zero_; }

  /// View for the disk quadratures; carries the singularity flag, so plain
  /// integrate_disk refuses a flagged field.
  quad::Integrand integrand() const { return {eval_, singular_at_}; }

 private:
  std::function<Complex(Complex)> eval_;
  double sup_norm_ = 0.0;
  std::optional<Complex> singular_at_;
  bool is_zero_ = false;
};

}  // namespace alphakit::solver
