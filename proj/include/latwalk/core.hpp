#pragma once

// Domain vocabulary: steps in {+1,-1}^(r+1), words of steps, language
// selectors and the text formats shared by every other module.
//
// The last coordinate (index r+1) is the tracked coordinate: hyperplane and
// half-space constraints are stated on its prefix sums.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latwalk/errors.hpp"

namespace latwalk {

/// Largest supported dimension r+1 (steps are stored as 32-bit masks).
inline constexpr unsigned kMaxDimension = 32;

/// One element of {+1,-1}^(r+1).
///
/// Stored as a bit mask with coordinate 1 in the least significant bit; a set
/// bit means +1.
class StepVector {
 public:
  /// Builds from explicit signs; every entry must be +1 or -1.
  explicit StepVector(std::span<const int> coords);

  static StepVector from_mask(unsigned dimension, std::uint32_t mask);

  unsigned dimension() const noexcept { return dimension_; }
  unsigned r() const noexcept { return dimension_ - 1; }
  std::uint32_t mask() const noexcept { return mask_; }

  /// Sign at 1-based coordinate i.
  int coord(unsigned i) const;
  int tracked() const noexcept { return (mask_ >> (dimension_ - 1)) & 1U ? 1 : -1; }
  std::vector<int> coords() const;

  friend bool operator==(const StepVector&, const StepVector&) = default;
  friend auto operator<=>(const StepVector&, const StepVector&) = default;

 private:
  StepVector(unsigned dimension, std::uint32_t mask) : dimension_(dimension), mask_(mask) {}

  unsigned dimension_;
  std::uint32_t mask_;
};

inline std::uint32_t full_mask(unsigned dimension) {
  return dimension >= 32 ? 0xFFFFFFFFU : ((1U << dimension) - 1U);
}

StepVector parse_step(std::string_view text, unsigned r);
std::string format_step(const StepVector& step);

StepVector negate_step(const StepVector& step);

/// Negates coordinate i (1-based) only.
StepVector flip_coordinate(const StepVector& step, unsigned i);

/// All 2^(r+1) steps in mask order.
std::vector<StepVector> all_steps(unsigned r);

/// A finite sequence of steps sharing one dimension. The empty word is the
/// walk of semilength 0 and still carries its dimension.
class Word {
 public:
  explicit Word(unsigned r) : r_(r) {}
  Word(unsigned r, std::vector<StepVector> steps);

  unsigned r() const noexcept { return r_; }
  unsigned dimension() const noexcept { return r_ + 1; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  std::span<const StepVector> steps() const noexcept { return steps_; }
  const StepVector& operator[](std::size_t i) const { return steps_[i]; }

  auto begin() const noexcept { return steps_.begin(); }
  auto end() const noexcept { return steps_.end(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  unsigned r_;
  std::vector<StepVector> steps_;
};

/// Comma separated step strings, e.g. "++,--,+-". Empty text is the empty word.
Word parse_word(std::string_view text, unsigned r);
std::string format_word(const Word& word);

/// Prefix sums of the tracked coordinate; length |w|+1, starting at 0.
std::vector<int> height_profile(const Word& word);

Word map_steps(const Word& word, StepVector (*f)(const StepVector&));

enum class LanguageId { A, B, C, D, E, F };

inline constexpr LanguageId kAllLanguages[] = {LanguageId::A, LanguageId::B, LanguageId::C,
                                               LanguageId::D, LanguageId::E, LanguageId::F};

struct LanguageSpec {
  LanguageId id;
  unsigned r;

  friend bool operator==(const LanguageSpec&, const LanguageSpec&) = default;
};

LanguageId parse_language(std::string_view text);
char language_letter(LanguageId id);

enum class PatternKind { Backtrack, Repeat };

/// D, E, F are confined to the half-space x_(r+1) >= 0.
inline bool is_halfspace(LanguageId id) {
  return id == LanguageId::D || id == LanguageId::E || id == LanguageId::F;
}

/// Pattern avoided by the language, if any (B, E avoid backtracking; C, F
/// avoid repeats).
inline std::optional<PatternKind> avoided_pattern(LanguageId id) {
  switch (id) {
    case LanguageId::B:
    case LanguageId::E:
      return PatternKind::Backtrack;
    case LanguageId::C:
    case LanguageId::F:
      return PatternKind::Repeat;
    default:
      return std::nullopt;
  }
}

/// True if the adjacent pair (prev, next) is forbidden by the pattern.
inline bool forms_pattern(PatternKind kind, std::uint32_t prev, std::uint32_t next,
                          std::uint32_t full) {
  return kind == PatternKind::Repeat ? prev == next : (prev ^ full) == next;
}

}  // namespace latwalk
