#pragma once

// Closed forms, terminating hypergeometric evaluations and holonomic
// recurrences for the six counting sequences and for walks ending on an
// intersection of coordinate hyperplanes.

#include <cstdint>
#include <string>
#include <vector>

#include "latwalk/core.hpp"
#include "latwalk/numeric.hpp"

namespace latwalk {

/// C(m, k), zero outside 0 <= k <= m (so C(n-1, -1) = 0).
Count binomial(long m, long k);
Count central_binomial(unsigned n);
Count catalan(unsigned n);
/// Dyck paths of semilength n with k peaks; requires 1 <= k <= n.
Count narayana(unsigned n, unsigned k);

/// Binomial-sum closed form. At r = 0 the B, C, E, F values come from the
/// language definitions (1 at n = 0; then 0, 2, 0, 1 respectively).
Count closed_form(const LanguageSpec& spec, unsigned n);

/// sum_k prod (upper)_k / prod (lower)_k * z^k / k!, cut off where the first
/// upper Pochhammer symbol vanishes.
struct HypergeometricSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Rational argument;
};

Rational hyper_terminating(const HypergeometricSpec& h);

/// Prefactor and pFq parameters of the hypergeometric representation of
/// b, c, e, f (r >= 1, n >= 1).
struct HyperForm {
  Count prefactor;
  HypergeometricSpec series;
};

HyperForm hyper_parameters(const LanguageSpec& spec, unsigned n);
Count hyper_form(const LanguageSpec& spec, unsigned n);

/// Integer polynomial in n, coefficients lowest degree first.
struct Polynomial {
  std::vector<Count> coefficients;

  Count operator()(long n) const;
};

/// p[0](n) t_n = p[1](n) t_(n-1) + ... + p[order](n) t_(n-order) for n >= start;
/// t_0 .. t_(start-1) are given.
struct RecurrenceSpec {
  std::vector<Polynomial> coefficients;
  std::vector<Count> initial;

  unsigned order() const { return static_cast<unsigned>(coefficients.size()) - 1; }
  unsigned start() const { return static_cast<unsigned>(initial.size()); }
};

RecurrenceSpec recurrence_spec(const LanguageSpec& spec);

/// Extends the initial values by the recurrence up to n_max. Throws
/// ConsistencyError if a division by the leading coefficient is inexact.
std::vector<Count> evaluate_recurrence(const RecurrenceSpec& rec, unsigned n_max);

/// recurrence_spec + evaluate_recurrence, after checking the seeded values
/// against closed_form.
CountTable recurrence_seq(const LanguageSpec& spec, unsigned n_max);

/// Walks in Z^(r+1) ending with the last j+1 coordinates zero.
Count a_multi(unsigned r, unsigned j, unsigned n);
RecurrenceSpec a_multi_recurrence_spec(unsigned r, unsigned j);
std::vector<Count> a_multi_recurrence(unsigned r, unsigned j, unsigned n_max);

struct RatioViolation {
  char pair;  // 'B' for the b/c identity, 'E' for e/f
  unsigned n;
  Count lhs;
  Count rhs;
};

/// 2^r b_n = (2^r - 1) c_n and 2^r e_n = (2^r - 1) f_n for 1 <= n <= n_max.
struct RatioReport {
  unsigned r = 0;
  unsigned n_max = 0;
  unsigned checked = 0;
  std::vector<RatioViolation> violations;

  bool ok() const { return violations.empty(); }
};

RatioReport cross_ratio_check(unsigned r, unsigned n_max);
RatioReport cross_ratio_check(unsigned r, const std::vector<Count>& b, const std::vector<Count>& c,
                              const std::vector<Count>& e, const std::vector<Count>& f);

}  // namespace latwalk
