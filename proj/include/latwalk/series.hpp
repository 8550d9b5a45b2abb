#pragma once

// Truncated formal power series over the rationals, the closed-form
// generating functions of the six families, and their first-order
// asymptotics.

#include <string>
#include <vector>

#include "latwalk/core.hpp"
#include "latwalk/numeric.hpp"

namespace latwalk {

/// Coefficients of x^0 .. x^N. Every operation works modulo x^(N+1).
class PowerSeries {
 public:
  explicit PowerSeries(unsigned order) : coeffs_(order + 1UL) {}
  PowerSeries(unsigned order, const std::vector<Rational>& leading);

  /// c0 + c1 x truncated at `order`.
  static PowerSeries linear(unsigned order, const Rational& c0, const Rational& c1);
  static PowerSeries constant(unsigned order, const Rational& c0) { return linear(order, c0, 0); }

  unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// Coefficients as integers; throws ConsistencyError on any fraction.
  std::vector<Count> integer_coefficients() const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_scale(const PowerSeries& a, const Rational& k);
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
/// Requires b[0] != 0.
PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b);
/// The series with constant term +1 squaring to `a`; requires a[0] == 1.
/// Quadratic Newton iteration.
PowerSeries ps_sqrt(const PowerSeries& a);
/// a / x, one order shorter. Throws ConsistencyError if a[0] != 0.
PowerSeries ps_divide_by_x(const PowerSeries& a);

/// Expansion of the closed-form generating function of the language to
/// order N (coefficients of x^0..x^N).
PowerSeries gf_series(const LanguageSpec& spec, unsigned order);

/// count_n ~ scale * sqrt(radicand) * rho^(-n) * n^(alpha-1) / Gamma(alpha).
///
/// The constant keeps the sign of the singular expansion, so it is negative
/// for the alpha = -1/2 families where Gamma(-1/2) < 0.
struct AsymptoticForm {
  Rational rho;
  Rational alpha;
  Rational radicand;
  Rational scale;

  double constant() const;
  /// Natural log of the asymptote at n.
  double log_estimate(unsigned n) const;
};

AsymptoticForm asymptotic_form(const LanguageSpec& spec);

/// count_n divided by the asymptote, evaluated in log space.
double asymptotic_ratio(const AsymptoticForm& form, const Count& count, unsigned n);
double asymptotic_ratio(const LanguageSpec& spec, unsigned n);

}  // namespace latwalk
