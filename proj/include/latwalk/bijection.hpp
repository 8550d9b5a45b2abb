#pragma once

// The run-length map from planar half-space walks that avoid backtracking and
// start with (+1,+1) to paths with diagonal steps (j, +-j), j >= 1, that stay
// weakly above the x-axis.

#include <string>
#include <string_view>
#include <vector>

#include "latwalk/core.hpp"
#include "latwalk/numeric.hpp"

namespace latwalk {

struct Run {
  StepVector step;
  unsigned multiplicity;

  friend bool operator==(const Run&, const Run&) = default;
};

/// Maximal runs: adjacent run steps differ, multiplicities are >= 1.
struct RunDecomposition {
  unsigned r = 0;
  std::vector<Run> runs;

  friend bool operator==(const RunDecomposition&, const RunDecomposition&) = default;
};

RunDecomposition run_decompose(const Word& word);
Word concatenate_runs(const RunDecomposition& runs);

/// A diagonal step (j, sign * j).
struct DiagonalStep {
  unsigned j;
  int sign;

  friend bool operator==(const DiagonalStep&, const DiagonalStep&) = default;
};

using DiagonalPath = std::vector<DiagonalStep>;

/// Horizontal extent: the sum of the j.
unsigned long path_extent(const DiagonalPath& path);
/// Nonnegative prefix heights, zero final height, all j >= 1.
bool is_valid_diagonal_path(const DiagonalPath& path);

/// "2,+;2,+;1,-;3,-". Empty text is the empty path.
DiagonalPath parse_diagonal_path(std::string_view text);
std::string format_diagonal_path(const DiagonalPath& path);

/// True for nonempty members of E at r = 1 whose first step is (+1,+1).
bool in_e_prime(const Word& word);

DiagonalPath phi(const Word& word);
Word phi_inverse(const DiagonalPath& path);

/// Paths of extent 2n, by dynamic programming over (extent, height).
Count count_e_double_prime(unsigned n);

struct BijectionReport {
  unsigned n = 0;
  std::size_t walks = 0;
  std::size_t distinct_images = 0;
  Count paths = 0;
  bool lands_in_target = true;
  bool extent_preserved = true;
  bool injective = true;
  bool left_inverse = true;
  bool right_inverse = true;
  bool counts_match = true;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Enumerates the domain at semilength n and checks phi against the target.
BijectionReport verify_bijection(unsigned n);

}  // namespace latwalk
