#include "latwalk/series.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "latwalk/formulas.hpp"

namespace latwalk {

PowerSeries::PowerSeries(unsigned order, const std::vector<Rational>& leading) : coeffs_(order + 1UL) {
  for (std::size_t i = 0; i < leading.size() && i < coeffs_.size(); ++i) coeffs_[i] = leading[i];
}

PowerSeries PowerSeries::linear(unsigned order, const Rational& c0, const Rational& c1) {
  return PowerSeries(order, {c0, c1});
}

std::vector<Count> PowerSeries::integer_coefficients() const {
  std::vector<Count> out;
  out.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].get_den() != 1) {
      throw ConsistencyError("coefficient " + std::to_string(i) + " is not an integer: " +
                             coeffs_[i].get_str());
    }
    out.push_back(coeffs_[i].get_num());
  }
  return out;
}

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) {
    throw DomainError("power series truncation orders differ (" + std::to_string(a.order()) +
                      " vs " + std::to_string(b.order()) + ")");
  }
}

using Coeffs = std::vector<Rational>;

// Truncated product keeping `len` coefficients.
Coeffs mul_trunc(const Coeffs& a, const Coeffs& b, std::size_t len) {
  Coeffs out(len);
  for (std::size_t i = 0; i < len && i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t k = 0; i + k < len && k < b.size(); ++k) out[i + k] += a[i] * b[k];
  }
  return out;
}

// a / b keeping `len` coefficients; b[0] != 0.
Coeffs div_trunc(const Coeffs& a, const Coeffs& b, std::size_t len) {
  Coeffs out(len);
  const Rational inv = 1 / b[0];
  Rational acc;
  for (std::size_t n = 0; n < len; ++n) {
    acc = n < a.size() ? a[n] : Rational(0);
    for (std::size_t k = 1; k <= n && k < b.size(); ++k) acc -= b[k] * out[n - k];
    out[n] = acc * inv;
  }
  return out;
}

}  // namespace

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  PowerSeries out(a.order());
  for (unsigned i = 0; i <= a.order(); ++i) out[i] = a[i] + b[i];
  return out;
}

PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  PowerSeries out(a.order());
  for (unsigned i = 0; i <= a.order(); ++i) out[i] = a[i] - b[i];
  return out;
}

PowerSeries ps_scale(const PowerSeries& a, const Rational& k) {
  PowerSeries out(a.order());
  for (unsigned i = 0; i <= a.order(); ++i) out[i] = a[i] * k;
  return out;
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  return PowerSeries(a.order(), mul_trunc(a.coefficients(), b.coefficients(), a.order() + 1UL));
}

PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  if (sgn(b[0]) == 0) throw DomainError("power series division by a series with zero constant term");
  return PowerSeries(a.order(), div_trunc(a.coefficients(), b.coefficients(), a.order() + 1UL));
}

PowerSeries ps_sqrt(const PowerSeries& a) {
  if (a[0] != 1) throw DomainError("ps_sqrt requires constant term exactly 1, got " + a[0].get_str());
  const std::size_t len = a.order() + 1UL;
  Coeffs y{Rational(1)};
  std::size_t precision = 1;
  // Each pass y <- (y + a/y) / 2 doubles the number of correct coefficients.
  while (precision < len) {
    precision = std::min(2 * precision, len);
    Coeffs quotient = div_trunc(a.coefficients(), y, precision);
    y.resize(precision);
    for (std::size_t i = 0; i < precision; ++i) y[i] = (y[i] + quotient[i]) / 2;
  }
  return PowerSeries(a.order(), y);
}

PowerSeries ps_divide_by_x(const PowerSeries& a) {
  if (sgn(a[0]) != 0) {
    throw ConsistencyError("cannot divide by x: constant term is " + a[0].get_str());
  }
  if (a.order() == 0) throw DomainError("cannot divide an order-0 series by x");
  PowerSeries out(a.order() - 1);
  for (unsigned i = 1; i <= a.order(); ++i) out[i - 1] = a[i];
  return out;
}

PowerSeries gf_series(const LanguageSpec& spec, unsigned order) {
  const unsigned long r = spec.r;
  // The E, F and D forms divide by x, so expand one order further first.
  const unsigned wide = order + 1;
  auto lin = [](unsigned ord, const Count& c0, const Count& c1) {
    return PowerSeries::linear(ord, Rational(c0), Rational(c1));
  };
  PowerSeries out(order);
  if (spec.id == LanguageId::A) {
    out = ps_div(PowerSeries::constant(order, 1), ps_sqrt(lin(order, 1, -pow2(2 * r + 2))));
  } else if (spec.id == LanguageId::D) {
    const PowerSeries numerator =
        ps_sub(PowerSeries::constant(wide, 1), ps_sqrt(lin(wide, 1, -pow2(2 * r + 2))));
    out = ps_scale(ps_divide_by_x(numerator), Rational(1, 2) / Rational(pow2(2 * r)));
  } else if (r == 0) {
    switch (spec.id) {
      case LanguageId::C:
        out = ps_div(lin(order, 1, 1), lin(order, 1, -1));
        break;
      case LanguageId::F:
        out = ps_div(PowerSeries::constant(order, 1), lin(order, 1, -1));
        break;
      default:
        out = PowerSeries::constant(order, 1);
        break;
    }
  } else {
    const Count two_r = pow2(r);
    const Count m1 = two_r - 1;
    const Count m = pow2(r + 1) - 1;
    const Count q = m * m;
    if (spec.id == LanguageId::B) {
      out = ps_sqrt(ps_div(lin(order, 1, -1), lin(order, 1, -q)));
    } else if (spec.id == LanguageId::C) {
      const PowerSeries root_1 = ps_sqrt(lin(order, 1, -1));
      const PowerSeries root_q = ps_sqrt(lin(order, 1, -q));
      out = ps_div(ps_sub(ps_scale(root_1, Rational(two_r)), root_q),
                   ps_scale(root_q, Rational(m1)));
    } else {
      const PowerSeries root =
          ps_sqrt(ps_mul(lin(wide, 1, -q), lin(wide, 1, -1)));
      const Count linear_term = spec.id == LanguageId::E ? Count(1) : m;
      const Count denominator = spec.id == LanguageId::E ? Count(pow2(r + 1) * m1) : Count(2 * m1 * m1);
      const PowerSeries numerator = ps_sub(lin(wide, 1, -linear_term), root);
      out = ps_scale(ps_divide_by_x(numerator), Rational(1) / Rational(denominator));
    }
  }
  if (out[0] != 1) {
    throw ConsistencyError(std::string("generating function of ") + language_letter(spec.id) +
                           " has constant term " + out[0].get_str() + ", expected 1");
  }
  return out;
}

double AsymptoticForm::constant() const {
  return scale.get_d() * std::sqrt(radicand.get_d());
}

namespace {

double gamma_of(const Rational& alpha) {
  if (alpha == Rational(1, 2)) return std::sqrt(std::numbers::pi);
  if (alpha == Rational(-1, 2)) return -2.0 * std::sqrt(std::numbers::pi);
  throw DomainError("only alpha = 1/2 and alpha = -1/2 occur, got " + alpha.get_str());
}

double log_rational(const Rational& q) { return log_of(q.get_num()) - log_of(q.get_den()); }

}  // namespace

double AsymptoticForm::log_estimate(unsigned n) const {
  const double ratio = constant() / gamma_of(alpha);
  if (!(ratio > 0)) throw ConsistencyError("asymptotic constant has the wrong sign");
  return std::log(ratio) - static_cast<double>(n) * log_rational(rho) +
         (alpha.get_d() - 1.0) * std::log(static_cast<double>(n));
}

AsymptoticForm asymptotic_form(const LanguageSpec& spec) {
  const unsigned long r = spec.r;
  AsymptoticForm form;
  if (spec.id == LanguageId::A || spec.id == LanguageId::D) {
    form.rho = Rational(1, pow2(2 * r + 2));
    form.alpha = spec.id == LanguageId::A ? Rational(1, 2) : Rational(-1, 2);
    form.radicand = 1;
    // (1 - sqrt(1 - x/rho)) / (2 4^r x) ~ -2 sqrt(1 - x/rho) near rho.
    form.scale = spec.id == LanguageId::A ? 1 : -2;
    return form;
  }
  if (r == 0) {
    throw DomainError(std::string("no asymptotic form for ") + language_letter(spec.id) +
                      " at r=0");
  }
  const Count two_r = pow2(r);
  const Count m1 = two_r - 1;
  const Count m = pow2(r + 1) - 1;
  const Count q = m * m;
  form.rho = Rational(1, q);
  form.radicand = Rational(q - 1, q);
  switch (spec.id) {
    case LanguageId::B:
      form.alpha = Rational(1, 2);
      form.scale = 1;
      break;
    case LanguageId::C:
      form.alpha = Rational(1, 2);
      form.scale = Rational(two_r, m1);
      break;
    case LanguageId::E:
      form.alpha = Rational(-1, 2);
      form.scale = -Rational(q, pow2(r + 1) * m1);
      break;
    case LanguageId::F:
      form.alpha = Rational(-1, 2);
      form.scale = -Rational(q, 2 * m1 * m1);
      break;
    default:
      break;
  }
  form.scale.canonicalize();
  form.rho.canonicalize();
  form.radicand.canonicalize();
  return form;
}

double asymptotic_ratio(const AsymptoticForm& form, const Count& count, unsigned n) {
  if (n == 0) throw DomainError("asymptotic_ratio requires n >= 1");
  return std::exp(log_of(count) - form.log_estimate(n));
}

double asymptotic_ratio(const LanguageSpec& spec, unsigned n) {
  const AsymptoticForm form = asymptotic_form(spec);
  return asymptotic_ratio(form, recurrence_seq(spec, n).values.at(n), n);
}

}  // namespace latwalk
