#include "latwalk/core.hpp"

#include <algorithm>
#include <string>

namespace latwalk {

StepVector::StepVector(std::span<const int> coords) : dimension_(0), mask_(0) {
  if (coords.empty() || coords.size() > kMaxDimension) {
    throw DimensionError("step dimension must be in 1.." + std::to_string(kMaxDimension));
  }
  dimension_ = static_cast<unsigned>(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 1) {
      mask_ |= 1U << i;
    } else if (coords[i] != -1) {
      throw DomainError("step coordinate " + std::to_string(i + 1) + " is not +1 or -1");
    }
  }
}

StepVector StepVector::from_mask(unsigned dimension, std::uint32_t mask) {
  if (dimension == 0 || dimension > kMaxDimension) {
    throw DimensionError("step dimension must be in 1.." + std::to_string(kMaxDimension));
  }
  if ((mask & ~full_mask(dimension)) != 0) {
    throw DomainError("mask has bits beyond the step dimension");
  }
  return StepVector(dimension, mask);
}

int StepVector::coord(unsigned i) const {
  if (i < 1 || i > dimension_) {
    throw DomainError("coordinate index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(dimension_));
  }
  return (mask_ >> (i - 1)) & 1U ? 1 : -1;
}

std::vector<int> StepVector::coords() const {
  std::vector<int> out(dimension_);
  for (unsigned i = 0; i < dimension_; ++i) out[i] = (mask_ >> i) & 1U ? 1 : -1;
  return out;
}

StepVector parse_step(std::string_view text, unsigned r) {
  if (r + 1 > kMaxDimension) throw DimensionError("r too large");
  const std::size_t want = static_cast<std::size_t>(r) + 1;
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < text.size() && i < want; ++i) {
    if (text[i] == '+') {
      mask |= 1U << i;
    } else if (text[i] != '-') {
      throw FormatError("illegal character '" + std::string(1, text[i]) + "' at position " +
                            std::to_string(i + 1) + " of step \"" + std::string(text) + "\"",
                        i + 1);
    }
  }
  if (text.size() != want) {
    const std::size_t pos = std::min(text.size(), want) + 1;
    throw FormatError("step \"" + std::string(text) + "\" has length " +
                          std::to_string(text.size()) + ", expected " + std::to_string(want) +
                          " (position " + std::to_string(pos) + ")",
                      pos);
  }
  return StepVector::from_mask(static_cast<unsigned>(want), mask);
}

std::string format_step(const StepVector& step) {
  std::string out(step.dimension(), '-');
  for (unsigned i = 0; i < step.dimension(); ++i) {
    if ((step.mask() >> i) & 1U) out[i] = '+';
  }
  return out;
}

StepVector negate_step(const StepVector& step) {
  return StepVector::from_mask(step.dimension(), step.mask() ^ full_mask(step.dimension()));
}

StepVector flip_coordinate(const StepVector& step, unsigned i) {
  if (i < 1 || i > step.dimension()) {
    throw DomainError("flip index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(step.dimension()));
  }
  return StepVector::from_mask(step.dimension(), step.mask() ^ (1U << (i - 1)));
}

std::vector<StepVector> all_steps(unsigned r) {
  if (r + 1 > 20) throw DimensionError("refusing to list 2^(r+1) steps for r > 19");
  std::vector<StepVector> out;
  const std::uint32_t count = 1U << (r + 1);
  out.reserve(count);
  for (std::uint32_t m = 0; m < count; ++m) out.push_back(StepVector::from_mask(r + 1, m));
  return out;
}

Word::Word(unsigned r, std::vector<StepVector> steps) : r_(r), steps_(std::move(steps)) {
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i].dimension() != r_ + 1) {
      throw DimensionError("step " + std::to_string(i + 1) + " has dimension " +
                           std::to_string(steps_[i].dimension()) + ", word expects " +
                           std::to_string(r_ + 1));
    }
  }
}

Word parse_word(std::string_view text, unsigned r) {
  std::vector<StepVector> steps;
  if (text.empty()) return Word(r);
  std::size_t start = 0;
  std::size_t offset = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      steps.push_back(parse_step(piece, r));
    } catch (const FormatError& e) {
      throw FormatError(std::string(e.what()) + " in word at step " +
                            std::to_string(steps.size() + 1),
                        offset + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
    offset = start;
  }
  return Word(r, std::move(steps));
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += format_step(word[i]);
  }
  return out;
}

std::vector<int> height_profile(const Word& word) {
  std::vector<int> out;
  out.reserve(word.size() + 1);
  int h = 0;
  out.push_back(h);
  for (const auto& s : word) {
    h += s.tracked();
    out.push_back(h);
  }
  return out;
}

Word map_steps(const Word& word, StepVector (*f)(const StepVector&)) {
  std::vector<StepVector> steps;
  steps.reserve(word.size());
  for (const auto& s : word) steps.push_back(f(s));
  return Word(word.r(), std::move(steps));
}

LanguageId parse_language(std::string_view text) {
  if (text.size() == 1) {
    switch (text[0]) {
      case 'A': case 'a': return LanguageId::A;
      case 'B': case 'b': return LanguageId::B;
      case 'C': case 'c': return LanguageId::C;
      case 'D': case 'd': return LanguageId::D;
      case 'E': case 'e': return LanguageId::E;
      case 'F': case 'f': return LanguageId::F;
      default: break;
    }
  }
  throw FormatError("unknown language \"" + std::string(text) + "\" (expected one of A-F)");
}

char language_letter(LanguageId id) { return static_cast<char>('A' + static_cast<int>(id)); }

}  // namespace latwalk
