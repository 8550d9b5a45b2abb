#include "latwalk/formulas.hpp"

#include <algorithm>
#include <string>

namespace latwalk {

Count binomial(long m, long k) {
  if (m < 0 || k < 0 || k > m) return 0;
  Count out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return out;
}

Count central_binomial(unsigned n) { return binomial(2L * n, n); }

Count catalan(unsigned n) {
  Count c = central_binomial(n);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n + 1UL);
  return c;
}

Count narayana(unsigned n, unsigned k) {
  if (k < 1 || k > n) {
    throw DomainError("narayana(n, k) requires 1 <= k <= n, got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
  }
  Count v = binomial(n, k) * binomial(n, static_cast<long>(k) - 1);
  mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), n);
  return v;
}

namespace {

// Counts at r = 0, where only [+1,-1]^n and [-1,+1]^n avoid repeats and no
// nonempty walk avoids backtracking.
Count degenerate_value(LanguageId id, unsigned n) {
  if (n == 0) return 1;
  switch (id) {
    case LanguageId::B:
    case LanguageId::E:
      return 0;
    case LanguageId::C:
      return 2;
    case LanguageId::F:
      return 1;
    default:
      throw DomainError("degenerate_value is only for B, C, E, F");
  }
}

Count divide_exact(const Count& num, unsigned long den, const char* what) {
  if (!mpz_divisible_ui_p(num.get_mpz_t(), den)) {
    throw ConsistencyError(std::string(what) + ": division by " + std::to_string(den) +
                           " is not exact");
  }
  Count out;
  mpz_divexact_ui(out.get_mpz_t(), num.get_mpz_t(), den);
  return out;
}

}  // namespace

Count closed_form(const LanguageSpec& spec, unsigned n) {
  const unsigned r = spec.r;
  if (n == 0) return 1;
  switch (spec.id) {
    case LanguageId::A:
      return pow2(2UL * n * r) * central_binomial(n);
    case LanguageId::D:
      return pow2(2UL * n * r) * catalan(n);
    default:
      break;
  }
  if (r == 0) return degenerate_value(spec.id, n);

  const Count two_r = pow2(r);
  const Count m1 = two_r - 1;
  const long nn = n;
  Count sum = 0;
  for (long k = 1; k <= nn; ++k) {
    switch (spec.id) {
      case LanguageId::B:
        sum += ipow(m1, 2 * k - 2) * pow2(r * (2 * nn - 2 * k + 1)) * binomial(nn - 1, k - 1) *
               (m1 * binomial(nn - 1, k - 1) + two_r * binomial(nn - 1, k - 2));
        break;
      case LanguageId::C:
        sum += ipow(m1, 2 * nn - 2 * k) * pow2(r * (2 * k - 1)) * binomial(nn - 1, k - 1) *
               (two_r * binomial(nn - 1, k - 1) + m1 * binomial(nn - 1, k - 2));
        break;
      case LanguageId::E:
        sum += ipow(m1, 2 * k - 1) * pow2(r * (2 * nn - 2 * k + 1)) * binomial(nn, k) *
               binomial(nn, k - 1);
        break;
      case LanguageId::F:
        sum += ipow(m1, 2 * nn - 2 * k) * pow2(2 * r * k) * binomial(nn, k) * binomial(nn, k - 1);
        break;
      default:
        break;
    }
  }
  if (spec.id == LanguageId::B || spec.id == LanguageId::C) return 2 * sum;
  return divide_exact(sum, n, "closed_form");
}

Rational hyper_terminating(const HypergeometricSpec& h) {
  // Smallest K with (a)_(K+1) = 0 for some upper a = -K.
  bool terminates = false;
  unsigned long last = 0;
  for (const auto& a : h.upper) {
    if (a.get_den() == 1 && sgn(a) <= 0) {
      const unsigned long k = Count(-a.get_num()).get_ui();
      if (!terminates || k < last) last = k;
      terminates = true;
    }
  }
  if (!terminates) {
    throw DomainError("hypergeometric series has no nonpositive integer upper parameter");
  }
  Rational term = 1;
  Rational sum = 1;
  for (unsigned long k = 0; k < last; ++k) {
    Rational ratio = h.argument / Rational(static_cast<long>(k + 1));
    for (const auto& a : h.upper) ratio *= a + Rational(static_cast<long>(k));
    for (const auto& b : h.lower) {
      const Rational factor = b + Rational(static_cast<long>(k));
      if (sgn(factor) == 0) {
        throw SingularParameterError("lower parameter " + b.get_str() +
                                     " gives a vanishing Pochhammer symbol at k=" +
                                     std::to_string(k + 1) + " before termination");
      }
      ratio /= factor;
    }
    term *= ratio;
    sum += term;
  }
  return sum;
}

HyperForm hyper_parameters(const LanguageSpec& spec, unsigned n) {
  if (spec.r == 0 || n == 0) {
    throw DomainError("hypergeometric form is defined for r >= 1 and n >= 1");
  }
  const unsigned long r = spec.r;
  const Count two_r = pow2(r);
  const Count m1 = two_r - 1;
  const Rational nq(static_cast<long>(n));
  const Rational small_arg(m1 * m1, pow2(2 * r));  // (2^r-1)^2 / 4^r
  const Rational large_arg(pow2(2 * r), m1 * m1);  // 4^r / (2^r-1)^2
  const Count tail = pow2(2 * r * n) - pow2(r * (2 * n - 1));
  HyperForm out;
  switch (spec.id) {
    case LanguageId::B:
      out.prefactor = 2 * tail;
      out.series.upper = {-nq, -nq + 1, Rational(m1) * nq + 1};
      out.series.lower = {1, Rational(m1) * nq};
      out.series.argument = small_arg;
      break;
    case LanguageId::C:
      out.prefactor = pow2(2 * r + 1) * ipow(m1, 2UL * n - 2);
      out.series.upper = {-nq, -nq + 1, -Rational(two_r) * nq + 1};
      out.series.lower = {1, -Rational(two_r) * nq};
      out.series.argument = large_arg;
      break;
    case LanguageId::E:
      out.prefactor = tail;
      out.series.upper = {-nq, -nq + 1};
      out.series.lower = {2};
      out.series.argument = small_arg;
      break;
    case LanguageId::F:
      out.prefactor = pow2(2 * r) * ipow(m1, 2UL * n - 2);
      out.series.upper = {-nq, -nq + 1};
      out.series.lower = {2};
      out.series.argument = large_arg;
      break;
    default:
      throw DomainError(std::string("no hypergeometric form for language ") +
                        language_letter(spec.id));
  }
  for (auto& q : out.series.upper) q.canonicalize();
  for (auto& q : out.series.lower) q.canonicalize();
  out.series.argument.canonicalize();
  return out;
}

Count hyper_form(const LanguageSpec& spec, unsigned n) {
  const HyperForm form = hyper_parameters(spec, n);
  const Rational value = Rational(form.prefactor) * hyper_terminating(form.series);
  if (value.get_den() != 1) {
    throw ConsistencyError(std::string("hypergeometric form of ") + language_letter(spec.id) +
                           " at r=" + std::to_string(spec.r) + ", n=" + std::to_string(n) +
                           " is not an integer: " + value.get_str());
  }
  return value.get_num();
}

Count Polynomial::operator()(long n) const {
  Count acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * n + *it;
  return acc;
}

namespace {

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  out.coefficients.assign(a.coefficients.size() + b.coefficients.size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
    for (std::size_t k = 0; k < b.coefficients.size(); ++k) {
      out.coefficients[i + k] += a.coefficients[i] * b.coefficients[k];
    }
  }
  return out;
}

Polynomial power(const Polynomial& p, unsigned e) {
  Polynomial out{{1}};
  for (unsigned i = 0; i < e; ++i) out = multiply(out, p);
  return out;
}

Polynomial linear(Count c0, Count c1) { return Polynomial{{std::move(c0), std::move(c1)}}; }

// Initial values t_1, t_2 as printed with each of the four theorems.
std::vector<Count> printed_initial(LanguageId id, unsigned long r) {
  const Count two_r = pow2(r);
  const Count m1 = two_r - 1;
  switch (id) {
    case LanguageId::B:
      return {1, pow2(r + 1) * m1,
              pow2(3 * r + 1) * m1 + pow2(2 * r + 1) * m1 * m1 + pow2(r + 1) * ipow(m1, 3)};
    case LanguageId::C:
      return {1, pow2(2 * r + 1),
              pow2(4 * r + 1) + pow2(3 * r + 1) * m1 + pow2(2 * r + 1) * m1 * m1};
    case LanguageId::E:
      return {1, two_r * m1, pow2(3 * r) * m1 + two_r * ipow(m1, 3)};
    case LanguageId::F:
      return {1, pow2(2 * r), pow2(4 * r) + pow2(2 * r) * m1 * m1};
    default:
      return {1};
  }
}

}  // namespace

RecurrenceSpec recurrence_spec(const LanguageSpec& spec) {
  const unsigned long r = spec.r;
  RecurrenceSpec rec;
  switch (spec.id) {
    case LanguageId::A:
      rec.coefficients = {linear(0, 1), linear(-pow2(2 * r + 1), 2 * pow2(2 * r + 1))};
      rec.initial = {1};
      return rec;
    case LanguageId::D:
      rec.coefficients = {linear(1, 1), linear(-pow2(2 * r + 1), 2 * pow2(2 * r + 1))};
      rec.initial = {1};
      return rec;
    default:
      break;
  }
  if (r == 0) {
    const bool zero = spec.id == LanguageId::B || spec.id == LanguageId::E;
    rec.coefficients = {Polynomial{{1}}, Polynomial{{zero ? 0 : 1}}};
    rec.initial = spec.id == LanguageId::C ? std::vector<Count>{1, 2} : std::vector<Count>{1};
    return rec;
  }
  const Count k = pow2(2 * r + 1) - pow2(r + 1) + 1;
  const Count m = pow2(r + 1) - 1;
  const Polynomial second = linear(2 * m * m, -(m * m));  // -(2^(r+1)-1)^2 (n-2)
  if (spec.id == LanguageId::B || spec.id == LanguageId::C) {
    const Count shift = pow2(2 * r) - pow2(r);
    // 2((...)(n-1) + 2^(2r) - 2^r)
    rec.coefficients = {linear(0, 1), linear(2 * (shift - k), 2 * k), second};
  } else {
    rec.coefficients = {linear(1, 1), linear(-k, 2 * k), second};
  }
  rec.initial = printed_initial(spec.id, r);
  return rec;
}

std::vector<Count> evaluate_recurrence(const RecurrenceSpec& rec, unsigned n_max) {
  std::vector<Count> values(rec.initial.begin(), rec.initial.end());
  if (values.size() > n_max + 1UL) values.resize(n_max + 1UL);
  Count acc;
  for (unsigned long n = values.size(); n <= n_max; ++n) {
    acc = 0;
    for (unsigned i = 1; i <= rec.order(); ++i) {
      acc += rec.coefficients[i](static_cast<long>(n)) * values[n - i];
    }
    const Count lead = rec.coefficients[0](static_cast<long>(n));
    if (sgn(lead) == 0) {
      throw ConsistencyError("recurrence leading coefficient vanishes at n=" + std::to_string(n));
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), lead.get_mpz_t())) {
      throw ConsistencyError("recurrence division is inexact at n=" + std::to_string(n));
    }
    Count next;
    mpz_divexact(next.get_mpz_t(), acc.get_mpz_t(), lead.get_mpz_t());
    values.push_back(std::move(next));
  }
  return values;
}

CountTable recurrence_seq(const LanguageSpec& spec, unsigned n_max) {
  const RecurrenceSpec rec = recurrence_spec(spec);
  for (unsigned n = 0; n < rec.start(); ++n) {
    if (rec.initial[n] != closed_form(spec, n)) {
      throw ConsistencyError(std::string("initial value ") + std::to_string(n) + " of " +
                             language_letter(spec.id) + " at r=" + std::to_string(spec.r) +
                             " disagrees with the closed form");
    }
  }
  return CountTable{spec, evaluate_recurrence(rec, n_max)};
}

Count a_multi(unsigned r, unsigned j, unsigned n) {
  if (j > r) throw DomainError("a_multi requires j <= r");
  return pow2(2UL * n * (r - j)) * ipow(central_binomial(n), j + 1UL);
}

RecurrenceSpec a_multi_recurrence_spec(unsigned r, unsigned j) {
  if (j > r) throw DomainError("a_multi_recurrence requires j <= r");
  RecurrenceSpec rec;
  Polynomial rhs = power(linear(-1, 2), j + 1);
  for (auto& c : rhs.coefficients) c *= pow2(2UL * r - j + 1);
  rec.coefficients = {power(linear(0, 1), j + 1), std::move(rhs)};
  rec.initial = {1};
  return rec;
}

std::vector<Count> a_multi_recurrence(unsigned r, unsigned j, unsigned n_max) {
  return evaluate_recurrence(a_multi_recurrence_spec(r, j), n_max);
}

RatioReport cross_ratio_check(unsigned r, const std::vector<Count>& b, const std::vector<Count>& c,
                              const std::vector<Count>& e, const std::vector<Count>& f) {
  if (r == 0) throw DomainError("ratio identities are stated for r >= 1");
  RatioReport report;
  report.r = r;
  const std::size_t len = std::min({b.size(), c.size(), e.size(), f.size()});
  report.n_max = len == 0 ? 0 : static_cast<unsigned>(len - 1);
  const Count two_r = pow2(r);
  const Count m1 = two_r - 1;
  for (std::size_t n = 1; n < len; ++n) {
    Count lhs = two_r * b[n];
    Count rhs = m1 * c[n];
    if (lhs != rhs) report.violations.push_back({'B', static_cast<unsigned>(n), lhs, rhs});
    lhs = two_r * e[n];
    rhs = m1 * f[n];
    if (lhs != rhs) report.violations.push_back({'E', static_cast<unsigned>(n), lhs, rhs});
    report.checked += 2;
  }
  return report;
}

RatioReport cross_ratio_check(unsigned r, unsigned n_max) {
  auto seq = [&](LanguageId id) { return recurrence_seq({id, r}, n_max).values; };
  RatioReport report = cross_ratio_check(r, seq(LanguageId::B), seq(LanguageId::C),
                                         seq(LanguageId::E), seq(LanguageId::F));
  report.n_max = n_max;
  return report;
}

}  // namespace latwalk
