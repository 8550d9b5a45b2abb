#pragma once

// Cross-check harness: runs the invariant suites over a range of (r, n) and
// folds every comparison into a report.

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "latwalk/core.hpp"
#include "latwalk/formulas.hpp"
#include "latwalk/oracle.hpp"

namespace latwalk {

enum class Suite { Methods, Ratios, Symmetry, Bijection, Asymptotics };

std::set<Suite> parse_suites(std::string_view text);
const char* suite_name(Suite suite);

struct CheckCell {
  Suite suite;
  char language;  // 'A'..'F'
  unsigned r;
  unsigned n;
  std::string methods;  // e.g. "closed=recurrence"
  bool agree;
  std::string lhs;  // filled on disagreement
  std::string rhs;
  std::string note;
};

struct CheckSummary {
  std::size_t cells = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
};

struct CheckReport {
  std::vector<CheckCell> cells;

  CheckSummary summary() const;
  bool ok() const { return summary().disagree == 0; }
};

struct CheckOptions {
  unsigned r_min = 1;
  unsigned r_max = 2;
  unsigned n_max = 20;
  std::set<Suite> suites{Suite::Methods, Suite::Ratios, Suite::Symmetry, Suite::Bijection,
                         Suite::Asymptotics};
  std::uint64_t naive_budget = kDefaultNaiveBudget;
  unsigned dp_n_max = 60;
  unsigned symmetry_n_max = 10;
  unsigned bijection_n_max = 6;
  std::vector<unsigned> asymptotic_points{500, 1000, 2000, 4000};
  double asymptotic_tolerance = 0.01;
  /// Test hook: edits the recurrence before it is evaluated.
  std::function<void(const LanguageSpec&, RecurrenceSpec&)> recurrence_fault;
};

CheckReport run_check(const CheckOptions& options);

/// Byte-stable JSON rendering.
std::string report_json(const CheckReport& report);
/// One line per disagreeing cell plus per-suite totals.
std::string report_text(const CheckReport& report);

}  // namespace latwalk
