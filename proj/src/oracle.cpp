#include "latwalk/oracle.hpp"

#include <optional>
#include <cstdlib>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace latwalk {

double log_of(const Count& value) {
  if (sgn(value) <= 0) throw DomainError("log_of requires a positive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

std::uint64_t candidate_count(unsigned r, unsigned n) {
  const std::uint64_t bits = static_cast<std::uint64_t>(r + 1) * 2 * n;
  if (bits >= 64) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << bits;
}

namespace {

void check_budget(const LanguageSpec& spec, unsigned n, std::uint64_t budget) {
  const std::uint64_t need = candidate_count(spec.r, n);
  if (need > budget) {
    throw BudgetError("naive enumeration at r=" + std::to_string(spec.r) +
                      ", n=" + std::to_string(n) + " requires " + std::to_string(need) +
                      " candidate words; budget is " + std::to_string(budget));
  }
}

// Steps listed so that the odometer below visits words in lexicographic order
// of their text: '+' sorts before '-', first coordinate most significant.
std::vector<StepVector> steps_in_text_order(unsigned r) {
  const unsigned d = r + 1;
  std::vector<StepVector> out;
  out.reserve(std::size_t{1} << d);
  for (std::uint32_t ordinal = 0; ordinal < (1U << d); ++ordinal) {
    std::uint32_t mask = 0;
    for (unsigned i = 0; i < d; ++i) {
      if (((ordinal >> (d - 1 - i)) & 1U) == 0) mask |= 1U << i;
    }
    out.push_back(StepVector::from_mask(d, mask));
  }
  return out;
}

// Depth-first odometer over all (2^(r+1))^(2n) candidates in text order. One
// machine snapshot per depth, so each word is recognized in full but shared
// prefixes are fed once. Rejection is absorbing, so a rejected prefix settles
// every extension of it.
template <typename Visit>
void for_each_candidate(const LanguageSpec& spec, unsigned n, Visit&& visit) {
  const auto alphabet = steps_in_text_order(spec.r);
  const std::size_t length = std::size_t{2} * n;
  const std::optional<PatternKind> pattern = avoided_pattern(spec.id);
  const std::uint32_t full = full_mask(spec.r + 1);
  std::vector<StepVector> word(length, alphabet.front());
  std::vector<Dpda> machines(length + 1,
                             Dpda(is_halfspace(spec.id) ? DpdaKind::Halfspace : DpdaKind::Hyperplane));
  if (length == 0) {
    if (recognize_steps(spec, word, machines[0])) visit(word);
    return;
  }
  std::vector<std::size_t> digits(length, 0);
  std::size_t depth = 0;
  while (true) {
    if (digits[depth] == alphabet.size()) {
      if (depth == 0) return;
      --depth;
      ++digits[depth];
      continue;
    }
    const StepVector& s = alphabet[digits[depth]];
    machines[depth + 1] = machines[depth];
    bool alive = machines[depth + 1].feed(s);
    if (alive && pattern && depth > 0) {
      alive = !forms_pattern(*pattern, word[depth - 1].mask(), s.mask(), full);
    }
    if (!alive) {
      ++digits[depth];
      continue;
    }
    word[depth] = s;
    if (depth + 1 == length) {
      if (machines[length].accepting()) visit(word);
      ++digits[depth];
      continue;
    }
    digits[++depth] = 0;
  }
}

// Layered DP over (height, previous step). Heights are stored with an offset
// so that the index is nonnegative; prev == alphabet size means "no step yet".
class HeightPrevSweep {
 public:
  HeightPrevSweep(const LanguageSpec& spec, unsigned total_steps)
      : spec_(spec),
        steps_(1U << (spec.r + 1)),
        full_(full_mask(spec.r + 1)),
        pattern_(avoided_pattern(spec.id)),
        halfspace_(is_halfspace(spec.id)),
        total_(total_steps),
        offset_(halfspace_ ? 0 : static_cast<int>(total_steps)),
        heights_(static_cast<std::size_t>(total_steps) + 1 + offset_),
        cur_(heights_ * (steps_ + 1)),
        next_(cur_.size()) {
    if (spec.r + 1 > 20) throw DimensionError("dynamic program supports r <= 19");
  }

  void seed_empty() { at(cur_, 0, steps_) = 1; }

  void seed_first(const StepVector& first) {
    const int h = first.tracked();
    if (halfspace_ && h < 0) return;
    at(cur_, h, first.mask()) = 1;
  }

  // Sum over previous-step states at height 0.
  Count at_origin() const {
    Count total = 0;
    for (std::size_t p = 0; p <= steps_; ++p) total += cur_[index(0, p)];
    return total;
  }

  // Advances one step; `taken` is the number of steps already consumed.
  void advance(unsigned taken) {
    for (auto& v : next_) v = 0;
    const int reach = static_cast<int>(std::min(taken, total_ - taken));
    const int lo = halfspace_ ? 0 : -reach;
    const int next_room = static_cast<int>(total_ - taken - 1);
    Count sum;
    for (int h = lo; h <= reach; ++h) {
      sum = 0;
      for (std::size_t p = 0; p <= steps_; ++p) sum += cur_[index(h, p)];
      if (sgn(sum) == 0) continue;
      for (std::uint32_t s = 0; s < steps_; ++s) {
        const int dh = (s >> spec_.r) & 1U ? 1 : -1;
        const int nh = h + dh;
        if (halfspace_ && nh < 0) continue;
        if (std::abs(nh) > next_room) continue;
        Count& dst = at(next_, nh, s);
        dst += sum;
        if (pattern_) {
          const std::uint32_t forbidden = *pattern_ == PatternKind::Repeat ? s : (s ^ full_);
          dst -= cur_[index(h, forbidden)];
        }
      }
    }
    cur_.swap(next_);
  }

 private:
  std::size_t index(int h, std::size_t p) const {
    return static_cast<std::size_t>(h + offset_) * (steps_ + 1) + p;
  }
  Count& at(std::vector<Count>& layer, int h, std::size_t p) { return layer[index(h, p)]; }

  LanguageSpec spec_;
  std::uint32_t steps_;
  std::uint32_t full_;
  std::optional<PatternKind> pattern_;
  bool halfspace_;
  unsigned total_;
  int offset_;
  std::size_t heights_;
  std::vector<Count> cur_;
  std::vector<Count> next_;
};

}  // namespace

std::vector<Word> enumerate_words(const LanguageSpec& spec, unsigned n, std::uint64_t budget) {
  check_budget(spec, n, budget);
  std::vector<Word> out;
  for_each_candidate(spec, n, [&](const std::vector<StepVector>& w) { out.emplace_back(spec.r, w); });
  return out;
}

Count count_naive(const LanguageSpec& spec, unsigned n, std::uint64_t budget) {
  check_budget(spec, n, budget);
  std::uint64_t total = 0;
  for_each_candidate(spec, n, [&](const std::vector<StepVector>&) { ++total; });
  Count out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(total), 0, 0, &total);
  return out;
}

CountTable count_dp_table(const LanguageSpec& spec, unsigned n_max) {
  CountTable table{spec, {}};
  table.values.reserve(n_max + 1);
  HeightPrevSweep sweep(spec, 2 * n_max);
  sweep.seed_empty();
  table.values.push_back(sweep.at_origin());
  for (unsigned t = 0; t < 2 * n_max; ++t) {
    sweep.advance(t);
    if ((t + 1) % 2 == 0) table.values.push_back(sweep.at_origin());
  }
  return table;
}

Count count_dp(const LanguageSpec& spec, unsigned n) { return count_dp_table(spec, n).values.back(); }

Count count_dp_first_step(const LanguageSpec& spec, unsigned n, const StepVector& first) {
  if (first.dimension() != spec.r + 1) {
    throw DimensionError("first step has dimension " + std::to_string(first.dimension()) +
                         ", expected " + std::to_string(spec.r + 1));
  }
  if (n == 0) throw DomainError("count_dp_first_step requires n >= 1");
  HeightPrevSweep sweep(spec, 2 * n);
  sweep.seed_first(first);
  for (unsigned t = 1; t < 2 * n; ++t) sweep.advance(t);
  return sweep.at_origin();
}

Count count_dp_multi(unsigned r, unsigned j, unsigned n, bool halfspace,
                     std::uint64_t state_budget) {
  if (j > r) throw DomainError("count_dp_multi requires j <= r");
  if (n == 0) return 1;
  const unsigned tracked = j + 1;
  const unsigned total = 2 * n;
  const int offset = halfspace ? 0 : static_cast<int>(total);
  const std::uint64_t width = static_cast<std::uint64_t>(total) + 1 + offset;
  std::uint64_t states = 1;
  for (unsigned i = 0; i < tracked; ++i) {
    if (states > state_budget / width) {
      throw BudgetError("count_dp_multi at r=" + std::to_string(r) + ", j=" + std::to_string(j) +
                        ", n=" + std::to_string(n) + " exceeds the state budget of " +
                        std::to_string(state_budget));
    }
    states *= width;
  }
  // Each step also picks the r-j untracked coordinates freely.
  const Count free_choices = pow2(r - j);
  std::vector<Count> cur(states), next(states);
  std::vector<int> heights(tracked, 0);
  auto encode = [&](const std::vector<int>& hs) {
    std::uint64_t idx = 0;
    for (unsigned i = 0; i < tracked; ++i) idx = idx * width + static_cast<std::uint64_t>(hs[i] + offset);
    return idx;
  };
  auto decode = [&](std::uint64_t idx, std::vector<int>& hs) {
    for (unsigned i = tracked; i-- > 0;) {
      hs[i] = static_cast<int>(idx % width) - offset;
      idx /= width;
    }
  };
  cur[encode(heights)] = 1;
  std::vector<int> moved(tracked);
  for (unsigned t = 0; t < total; ++t) {
    for (auto& v : next) v = 0;
    const int room = static_cast<int>(total - t - 1);
    for (std::uint64_t idx = 0; idx < states; ++idx) {
      if (sgn(cur[idx]) == 0) continue;
      decode(idx, heights);
      for (std::uint32_t signs = 0; signs < (1U << tracked); ++signs) {
        bool ok = true;
        for (unsigned i = 0; i < tracked && ok; ++i) {
          moved[i] = heights[i] + (((signs >> i) & 1U) ? 1 : -1);
          if ((halfspace && moved[i] < 0) || std::abs(moved[i]) > room) ok = false;
        }
        if (!ok) continue;
        next[encode(moved)] += cur[idx] * free_choices;
      }
    }
    cur.swap(next);
  }
  std::fill(heights.begin(), heights.end(), 0);
  return cur[encode(heights)];
}

}  // namespace latwalk
