#include "latwalk/bijection.hpp"

#include <charconv>
#include <set>
#include <string>

#include "latwalk/automata.hpp"

namespace latwalk {
namespace {

const StepVector kNorthEast = StepVector::from_mask(2, 0b11);

}  // namespace

RunDecomposition run_decompose(const Word& word) {
  RunDecomposition out;
  out.r = word.r();
  for (const auto& s : word) {
    if (!out.runs.empty() && out.runs.back().step == s) {
      ++out.runs.back().multiplicity;
    } else {
      out.runs.push_back({s, 1});
    }
  }
  return out;
}

Word concatenate_runs(const RunDecomposition& runs) {
  std::vector<StepVector> steps;
  for (const auto& run : runs.runs) steps.insert(steps.end(), run.multiplicity, run.step);
  return Word(runs.r, std::move(steps));
}

unsigned long path_extent(const DiagonalPath& path) {
  unsigned long total = 0;
  for (const auto& s : path) total += s.j;
  return total;
}

bool is_valid_diagonal_path(const DiagonalPath& path) {
  long height = 0;
  for (const auto& s : path) {
    if (s.j == 0 || (s.sign != 1 && s.sign != -1)) return false;
    height += s.sign * static_cast<long>(s.j);
    if (height < 0) return false;
  }
  return height == 0;
}

DiagonalPath parse_diagonal_path(std::string_view text) {
  DiagonalPath path;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    const std::string_view item = text.substr(pos, end - pos);
    const std::size_t comma = item.find(',');
    if (comma == std::string_view::npos || comma + 2 != item.size()) {
      throw FormatError("diagonal step \"" + std::string(item) + "\" is not of the form j,+ or j,-",
                        pos + 1);
    }
    unsigned j = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + comma, j);
    if (ec != std::errc{} || ptr != item.data() + comma || comma == 0) {
      throw FormatError("bad length in diagonal step \"" + std::string(item) + "\"", pos + 1);
    }
    const char sign = item.back();
    if (sign != '+' && sign != '-') {
      throw FormatError("bad sign in diagonal step \"" + std::string(item) + "\"", pos + comma + 2);
    }
    path.push_back({j, sign == '+' ? 1 : -1});
    pos = end + 1;
  }
  return path;
}

std::string format_diagonal_path(const DiagonalPath& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(path[i].j);
    out += ',';
    out += path[i].sign > 0 ? '+' : '-';
  }
  return out;
}

bool in_e_prime(const Word& word) {
  return word.r() == 1 && !word.empty() && word[0] == kNorthEast &&
         recognize({LanguageId::E, 1}, word);
}

DiagonalPath phi(const Word& word) {
  if (!in_e_prime(word)) {
    throw DomainError("phi is defined on nonempty half-space backtrack-free planar walks starting "
                      "with ++; got \"" + format_word(word) + "\"");
  }
  DiagonalPath out;
  for (const auto& run : run_decompose(word).runs) {
    out.push_back({run.multiplicity, run.step.tracked()});
  }
  return out;
}

Word phi_inverse(const DiagonalPath& path) {
  if (path.empty() || !is_valid_diagonal_path(path)) {
    throw DomainError("phi_inverse needs a nonempty path with steps j >= 1 that stays weakly "
                      "above the axis and ends on it; got \"" + format_diagonal_path(path) + "\"");
  }
  RunDecomposition runs;
  runs.r = 1;
  StepVector previous = kNorthEast;
  for (std::size_t i = 0; i < path.size(); ++i) {
    StepVector step = kNorthEast;
    if (i == 0) {
      if (path[0].sign != 1) throw DomainError("first diagonal step must go up");
    } else {
      // Keep the first coordinate when the vertical direction turns, flip it
      // otherwise; exactly one of the two choices avoids both repeating the
      // previous run step and backtracking against it.
      int first = 0;
      int candidates = 0;
      for (const int x : {1, -1}) {
        const std::vector<int> coords{x, path[i].sign};
        const StepVector candidate{coords};
        if (candidate == previous || candidate == negate_step(previous)) continue;
        first = x;
        ++candidates;
      }
      if (candidates != 1) throw ConsistencyError("phi_inverse found no unique run step");
      const std::vector<int> coords{first, path[i].sign};
      step = StepVector{coords};
    }
    runs.runs.push_back({step, path[i].j});
    previous = step;
  }
  return concatenate_runs(runs);
}

Count count_e_double_prime(unsigned n) {
  const unsigned extent = 2 * n;
  // ways[x][h]: paths reaching horizontal position x at height h.
  std::vector<std::vector<Count>> ways(extent + 1, std::vector<Count>(extent + 1));
  ways[0][0] = 1;
  for (unsigned x = 0; x < extent; ++x) {
    for (unsigned h = 0; h <= x; ++h) {
      if (sgn(ways[x][h]) == 0) continue;
      for (unsigned j = 1; x + j <= extent; ++j) {
        if (h + j <= extent) ways[x + j][h + j] += ways[x][h];
        if (j <= h) ways[x + j][h - j] += ways[x][h];
      }
    }
  }
  return ways[extent][0];
}

namespace {

// Depth-first generation of the domain: planar walks from (+1,+1), never
// backtracking, tracked height >= 0 and able to return to 0 in time.
void grow_walks(std::vector<StepVector>& prefix, int height, unsigned length,
                std::vector<Word>& out) {
  if (prefix.size() == length) {
    if (height == 0) out.emplace_back(1, prefix);
    return;
  }
  const auto remaining = static_cast<int>(length - prefix.size());
  for (std::uint32_t mask = 0; mask < 4; ++mask) {
    const StepVector step = StepVector::from_mask(2, mask);
    if (step == negate_step(prefix.back())) continue;
    const int h = height + step.tracked();
    if (h < 0 || h > remaining - 1) continue;
    prefix.push_back(step);
    grow_walks(prefix, h, length, out);
    prefix.pop_back();
  }
}

void grow_paths(DiagonalPath& prefix, unsigned long x, long height, unsigned long extent,
                std::vector<DiagonalPath>& out) {
  if (x == extent) {
    if (height == 0) out.push_back(prefix);
    return;
  }
  for (unsigned j = 1; x + j <= extent; ++j) {
    for (const int sign : {1, -1}) {
      const long h = height + sign * static_cast<long>(j);
      if (h < 0 || static_cast<unsigned long>(h) > extent - x - j) continue;
      prefix.push_back({j, sign});
      grow_paths(prefix, x + j, h, extent, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

BijectionReport verify_bijection(unsigned n) {
  BijectionReport report;
  report.n = n;
  report.paths = count_e_double_prime(n);
  if (n == 0) {
    // Both sides hold only the empty object; phi is not applied to it.
    report.counts_match = report.paths == 1;
    if (!report.counts_match) report.failures.push_back("empty path count is not 1");
    return report;
  }
  std::vector<Word> walks;
  std::vector<StepVector> prefix{kNorthEast};
  grow_walks(prefix, 1, 2 * n, walks);
  report.walks = walks.size();

  std::set<std::string> images;
  for (const auto& w : walks) {
    if (!in_e_prime(w)) {
      report.failures.push_back("generated walk " + format_word(w) + " is not in the domain");
      continue;
    }
    const DiagonalPath p = phi(w);
    if (!is_valid_diagonal_path(p)) {
      report.lands_in_target = false;
      report.failures.push_back("phi(" + format_word(w) + ") leaves the target set");
    }
    if (path_extent(p) != 2UL * n) {
      report.extent_preserved = false;
      report.failures.push_back("phi(" + format_word(w) + ") has the wrong extent");
    }
    if (!images.insert(format_diagonal_path(p)).second) {
      report.injective = false;
      report.failures.push_back("phi is not injective at " + format_word(w));
    }
    if (report.lands_in_target && !(phi_inverse(p) == w)) {
      report.left_inverse = false;
      report.failures.push_back("phi_inverse(phi(" + format_word(w) + ")) differs");
    }
  }
  report.distinct_images = images.size();

  std::vector<DiagonalPath> targets;
  DiagonalPath path_prefix;
  grow_paths(path_prefix, 0, 0, 2UL * n, targets);
  for (const auto& p : targets) {
    const Word w = phi_inverse(p);
    if (!in_e_prime(w) || !(phi(w) == p)) {
      report.right_inverse = false;
      report.failures.push_back("phi(phi_inverse(" + format_diagonal_path(p) + ")) differs");
    }
  }
  if (Count(static_cast<unsigned long>(targets.size())) != report.paths ||
      Count(static_cast<unsigned long>(report.walks)) != report.paths ||
      report.distinct_images != report.walks) {
    report.counts_match = false;
    report.failures.push_back("domain has " + std::to_string(report.walks) + " walks, target has " +
                              report.paths.get_str() + " paths by DP and " +
                              std::to_string(targets.size()) + " by enumeration");
  }
  return report;
}

}  // namespace latwalk
