#include "latwalk/automata.hpp"

#include <array>
#include <string>

namespace latwalk {
namespace {

using enum StackSymbol;
using S = DpdaState;

// Hyperplane machine: up steps push U over Z0/U and cancel D, down steps the
// mirror image.
const std::array<DpdaTransition, 7> kHyperplane{{
    {S::Accepting, +1, Z0, S::Working, {Z0, U}},
    {S::Accepting, -1, Z0, S::Working, {Z0, D}},
    {S::Working, +1, U, S::Working, {U, U}},
    {S::Working, +1, D, S::Working, {}},
    {S::Working, -1, U, S::Working, {}},
    {S::Working, -1, D, S::Working, {D, D}},
    {S::Working, std::nullopt, Z0, S::Accepting, {Z0}},
}};

// Half-space machine: only U is ever pushed; a down step on bare Z0 has no
// transition.
const std::array<DpdaTransition, 4> kHalfspace{{
    {S::Accepting, +1, Z0, S::Working, {Z0, U}},
    {S::Working, +1, U, S::Working, {U, U}},
    {S::Working, -1, U, S::Working, {}},
    {S::Working, std::nullopt, Z0, S::Accepting, {Z0}},
}};

}  // namespace

std::span<const DpdaTransition> dpda_transitions(DpdaKind kind) {
  if (kind == DpdaKind::Hyperplane) return kHyperplane;
  return kHalfspace;
}

bool DpdaConfiguration::well_formed() const {
  if (stack.empty() || stack.front() != StackSymbol::Z0) return false;
  if (stack.size() == 1) return true;
  const StackSymbol above = stack[1];
  if (above == StackSymbol::Z0) return false;
  for (std::size_t i = 2; i < stack.size(); ++i) {
    if (stack[i] != above) return false;
  }
  return true;
}

Dpda::Dpda(DpdaKind kind) : kind_(kind), table_(dpda_transitions(kind)) {
  config_.stack.reserve(16);
}

void Dpda::reset() {
  config_.state = DpdaState::Accepting;
  config_.stack.assign(1, StackSymbol::Z0);
  rejected_ = false;
}

bool Dpda::accepting() const noexcept {
  return !rejected_ && config_.state == DpdaState::Accepting && config_.stack.size() == 1;
}

const DpdaTransition* Dpda::find(std::optional<int> input) const {
  const StackSymbol top = config_.stack.back();
  const DpdaTransition* found = nullptr;
  bool epsilon_available = false;
  bool input_available = false;
  for (const auto& t : table_) {
    if (t.from != config_.state || t.top != top) continue;
    if (t.input) {
      input_available = true;
    } else {
      epsilon_available = true;
    }
    if (t.input != input) continue;
    if (found != nullptr) {
      throw ConsistencyError("pushdown automaton has two transitions for one configuration");
    }
    found = &t;
  }
  if (epsilon_available && input_available) {
    throw ConsistencyError("pushdown automaton mixes epsilon and input moves on one configuration");
  }
  return found;
}

void Dpda::apply(const DpdaTransition& t) {
  auto& stack = config_.stack;
  stack.pop_back();
  stack.insert(stack.end(), t.replacement.begin(), t.replacement.end());
  config_.state = t.to;
  // Only the top changes, so checking it against its neighbour keeps the
  // whole stack homogeneous above Z0 by induction.
  const std::size_t n = stack.size();
  const bool ok = n >= 1 && stack.front() == StackSymbol::Z0 &&
                  (n == 1 || stack[n - 1] != StackSymbol::Z0) &&
                  (n < 3 || stack[n - 1] == stack[n - 2]);
  if (!ok) throw ConsistencyError("pushdown stack lost its Z0 U^k / Z0 D^k shape");
}

bool Dpda::feed_tracked(int tracked) {
  if (rejected_) return false;
  const DpdaTransition* t = find(tracked);
  if (t == nullptr) {
    rejected_ = true;
    return false;
  }
  apply(*t);
  if (const DpdaTransition* eps = find(std::nullopt)) apply(*eps);
  return true;
}

bool Dpda::feed(const StepVector& step) { return feed_tracked(step.tracked()); }

namespace {

bool run_machine(DpdaKind kind, unsigned r, const Word& word) {
  if (word.r() != r) {
    throw DimensionError("word has dimension " + std::to_string(word.dimension()) +
                         ", expected " + std::to_string(r + 1));
  }
  Dpda machine(kind);
  for (const auto& s : word) {
    if (!machine.feed(s)) return false;
  }
  return machine.accepting();
}

}  // namespace

bool accepts_hyperplane(unsigned r, const Word& word) {
  return run_machine(DpdaKind::Hyperplane, r, word);
}

bool accepts_halfspace(unsigned r, const Word& word) {
  return run_machine(DpdaKind::Halfspace, r, word);
}

bool PatternMemory::feed(const StepVector& step) {
  if (previous_ && previous_->dimension() != step.dimension()) {
    throw DimensionError("pattern memory fed steps of different dimensions");
  }
  const bool ok = !previous_ || !forms_pattern(kind_, previous_->mask(), step.mask(),
                                               full_mask(step.dimension()));
  previous_ = step;
  return ok;
}

bool avoids_pattern(PatternKind kind, const Word& word) {
  PatternMemory memory(kind);
  for (const auto& s : word) {
    if (!memory.feed(s)) return false;
  }
  return true;
}

bool recognize_steps(const LanguageSpec& spec, std::span<const StepVector> steps, Dpda& machine) {
  machine.reset();
  for (const auto& s : steps) {
    if (!machine.feed(s)) return false;
  }
  if (!machine.accepting()) return false;
  if (const auto kind = avoided_pattern(spec.id)) {
    PatternMemory memory(*kind);
    for (const auto& s : steps) {
      if (!memory.feed(s)) return false;
    }
  }
  return true;
}

bool recognize(const LanguageSpec& spec, const Word& word) {
  if (word.r() != spec.r) {
    throw DimensionError("word has dimension " + std::to_string(word.dimension()) +
                         ", language expects " + std::to_string(spec.r + 1));
  }
  Dpda machine(is_halfspace(spec.id) ? DpdaKind::Halfspace : DpdaKind::Hyperplane);
  return recognize_steps(spec, word.steps(), machine);
}

}  // namespace latwalk
