#pragma once

// The second-order recurrences are seeded with these n = 1, 2 values, written
// out term by term as published.

#include "latwalk/numeric.hpp"

namespace printed {

using latwalk::Count;
using latwalk::pow2;

inline Count m(unsigned r) { return pow2(r) - 1; }

inline Count b1(unsigned r) { return pow2(r + 1) * m(r); }
inline Count b2(unsigned r) {
  return pow2(3 * r + 1) * m(r) + pow2(2 * r + 1) * m(r) * m(r) + pow2(r + 1) * m(r) * m(r) * m(r);
}
inline Count c1(unsigned r) { return pow2(2 * r + 1); }
inline Count c2(unsigned r) {
  return pow2(4 * r + 1) + pow2(3 * r + 1) * m(r) + pow2(2 * r + 1) * m(r) * m(r);
}
inline Count e1(unsigned r) { return pow2(r) * m(r); }
inline Count e2(unsigned r) { return pow2(3 * r) * m(r) + pow2(r) * m(r) * m(r) * m(r); }
inline Count f1(unsigned r) { return pow2(2 * r); }
inline Count f2(unsigned r) { return pow2(4 * r) + pow2(2 * r) * m(r) * m(r); }

}  // namespace printed
