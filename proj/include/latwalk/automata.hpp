#pragma once

// Word recognizers. Membership in A and D is decided by simulating the two
// deterministic pushdown automata over the tracked coordinate; the pattern
// languages X (no [v,-v]) and Y (no [v,v]) are one-step memories; B, C, E, F
// are intersections of the two.

#include <optional>
#include <span>
#include <vector>

#include "latwalk/core.hpp"

namespace latwalk {

enum class StackSymbol { Z0, U, D };
enum class DpdaState { Accepting, Working };

/// Which machine: hyperplane (accepts A) or half-space (accepts D).
enum class DpdaKind { Hyperplane, Halfspace };

/// One rule: in `from` with `top` on the stack, reading a step whose tracked
/// coordinate is `input` (nullopt: epsilon move), replace the top by
/// `replacement` (bottom first) and go to `to`.
struct DpdaTransition {
  DpdaState from;
  std::optional<int> input;
  StackSymbol top;
  DpdaState to;
  std::vector<StackSymbol> replacement;
};

/// The transition table of the selected machine.
std::span<const DpdaTransition> dpda_transitions(DpdaKind kind);

struct DpdaConfiguration {
  DpdaState state = DpdaState::Accepting;
  std::vector<StackSymbol> stack{StackSymbol::Z0};

  /// Nonempty, Z0 exactly at the bottom, homogeneous above it.
  bool well_formed() const;
};

/// Step-by-step simulation. After each consumed step the epsilon move back to
/// the accepting state is applied eagerly when the stack is bare.
class Dpda {
 public:
  explicit Dpda(DpdaKind kind);

  /// Consumes one step. Returns false once the machine has no applicable
  /// transition (the word is rejected); further steps are ignored.
  bool feed(const StepVector& step);
  bool feed_tracked(int tracked);

  bool rejected() const noexcept { return rejected_; }
  bool accepting() const noexcept;
  const DpdaConfiguration& configuration() const noexcept { return config_; }
  void reset();

 private:
  const DpdaTransition* find(std::optional<int> input) const;
  void apply(const DpdaTransition& t);

  DpdaKind kind_;
  std::span<const DpdaTransition> table_;
  DpdaConfiguration config_;
  bool rejected_ = false;
};

bool accepts_hyperplane(unsigned r, const Word& word);
bool accepts_halfspace(unsigned r, const Word& word);

/// Remembers the previous step; rejects the first adjacent pair matching the
/// pattern.
class PatternMemory {
 public:
  explicit PatternMemory(PatternKind kind) : kind_(kind) {}

  /// Returns false if (previous, step) forms the pattern.
  bool feed(const StepVector& step);
  const std::optional<StepVector>& previous() const noexcept { return previous_; }

 private:
  PatternKind kind_;
  std::optional<StepVector> previous_;
};

bool avoids_pattern(PatternKind kind, const Word& word);

bool recognize(const LanguageSpec& spec, const Word& word);

/// Same as recognize() on a raw step sequence, reusing `machine` to avoid
/// allocation in tight loops. The caller guarantees the dimension.
bool recognize_steps(const LanguageSpec& spec, std::span<const StepVector> steps, Dpda& machine);

}  // namespace latwalk
