#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "latwalk/core.hpp"

namespace latwalk {

using Count = mpz_class;
using Rational = mpq_class;

inline Count pow2(unsigned long e) {
  Count out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

inline Count ipow(const Count& base, unsigned long e) {
  Count out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Rational qpow(const Rational& base, unsigned long e) {
  Rational out(1);
  Rational b = base;
  while (e) {
    if (e & 1UL) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

inline std::string to_string(const Count& value) { return value.get_str(); }

/// Natural log of a positive integer, accurate for values far beyond double
/// range.
double log_of(const Count& value);

/// A counting sequence indexed by semilength n = 0..N.
struct CountTable {
  LanguageSpec spec;
  std::vector<Count> values;
};

}  // namespace latwalk
