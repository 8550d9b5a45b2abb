#pragma once

// Exhaustive run of both pushdown machines over every word of a given
// dimension up to a length, compared with prefix-sum arithmetic at every
// node. Depth-first with one machine per depth.

#include <cstdint>
#include <string>
#include <vector>

#include "latwalk/automata.hpp"

namespace sweep {

struct Result {
  std::uint64_t words = 0;
  std::uint64_t mismatches = 0;
  std::string first_mismatch;
};

inline Result dpda_vs_arithmetic(unsigned r, unsigned max_length) {
  using namespace latwalk;
  const auto alphabet = all_steps(r);
  Result res;
  std::vector<Dpda> hyper(max_length + 1, Dpda(DpdaKind::Hyperplane));
  std::vector<Dpda> half(max_length + 1, Dpda(DpdaKind::Halfspace));
  std::vector<int> height(max_length + 1, 0), low(max_length + 1, 0);
  std::vector<StepVector> word;
  word.reserve(max_length);

  auto record = [&](unsigned depth) {
    ++res.words;
    const bool want_hyper = height[depth] == 0;
    const bool want_half = want_hyper && low[depth] >= 0;
    const bool shape_ok =
        hyper[depth].configuration().well_formed() &&
        (half[depth].rejected() || half[depth].configuration().well_formed());
    if (hyper[depth].accepting() != want_hyper || half[depth].accepting() != want_half ||
        !shape_ok) {
      if (res.mismatches++ == 0) res.first_mismatch = format_word(Word(r, word));
    }
  };

  std::vector<std::size_t> digit(max_length + 1, 0);
  unsigned depth = 0;
  record(0);
  if (max_length == 0) return res;
  while (true) {
    if (digit[depth] == alphabet.size()) {
      if (depth == 0) break;
      --depth;
      word.pop_back();
      ++digit[depth];
      continue;
    }
    const StepVector& s = alphabet[digit[depth]];
    hyper[depth + 1] = hyper[depth];
    half[depth + 1] = half[depth];
    hyper[depth + 1].feed(s);
    half[depth + 1].feed(s);
    height[depth + 1] = height[depth] + s.tracked();
    low[depth + 1] = std::min(low[depth], height[depth + 1]);
    word.push_back(s);
    record(depth + 1);
    if (depth + 1 < max_length) {
      digit[++depth] = 0;
    } else {
      word.pop_back();
      ++digit[depth];
    }
  }
  return res;
}

}  // namespace sweep
