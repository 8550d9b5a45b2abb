#pragma once

// Ground-truth counters. Nothing here uses a formula: enumerate_words filters
// every candidate word through the recognizers, and the dynamic programs walk
// the (height, previous step) state space one step at a time.

#include <cstdint>
#include <vector>

#include "latwalk/automata.hpp"
#include "latwalk/core.hpp"
#include "latwalk/numeric.hpp"

namespace latwalk {

inline constexpr std::uint64_t kDefaultNaiveBudget = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kDefaultStateBudget = std::uint64_t{1} << 24;

/// Number of candidate words (2^(r+1))^(2n); saturates at UINT64_MAX.
std::uint64_t candidate_count(unsigned r, unsigned n);

/// All members of length 2n, in lexicographic order of their text encoding.
/// Throws BudgetError if the candidate count exceeds `budget`.
std::vector<Word> enumerate_words(const LanguageSpec& spec, unsigned n,
                                  std::uint64_t budget = kDefaultNaiveBudget);

/// Generate-and-filter count without materializing the members.
Count count_naive(const LanguageSpec& spec, unsigned n,
                  std::uint64_t budget = kDefaultNaiveBudget);

Count count_dp(const LanguageSpec& spec, unsigned n);

/// count_dp for every semilength 0..n_max from a single sweep.
CountTable count_dp_table(const LanguageSpec& spec, unsigned n_max);

/// Members of length 2n whose first step is `first`. Requires n >= 1.
Count count_dp_first_step(const LanguageSpec& spec, unsigned n, const StepVector& first);

/// Walks of length 2n ending with the last j+1 coordinates at 0 (and, with
/// `halfspace`, keeping them nonnegative throughout). DP over the vector of
/// j+1 tracked heights.
Count count_dp_multi(unsigned r, unsigned j, unsigned n, bool halfspace,
                     std::uint64_t state_budget = kDefaultStateBudget);

}  // namespace latwalk
