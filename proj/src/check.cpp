#include "latwalk/check.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <tuple>

#include "json.hpp"
#include "latwalk/bijection.hpp"
#include "latwalk/series.hpp"

namespace latwalk {

std::set<Suite> parse_suites(std::string_view text) {
  static const std::map<std::string, Suite, std::less<>> names{
      {"methods", Suite::Methods},     {"ratios", Suite::Ratios},
      {"symmetry", Suite::Symmetry},   {"bijection", Suite::Bijection},
      {"asymptotics", Suite::Asymptotics}};
  std::set<Suite> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string_view name = text.substr(pos, end - pos);
    if (name == "all") {
      for (const auto& [key, suite] : names) out.insert(suite);
    } else if (const auto it = names.find(name); it != names.end()) {
      out.insert(it->second);
    } else {
      throw FormatError("unknown suite \"" + std::string(name) + "\"");
    }
    pos = end + 1;
  }
  return out;
}

const char* suite_name(Suite suite) {
  switch (suite) {
    case Suite::Methods: return "methods";
    case Suite::Ratios: return "ratios";
    case Suite::Symmetry: return "symmetry";
    case Suite::Bijection: return "bijection";
    case Suite::Asymptotics: return "asymptotics";
  }
  return "?";
}

CheckSummary CheckReport::summary() const {
  CheckSummary s;
  for (const auto& c : cells) {
    ++s.cells;
    ++(c.agree ? s.agree : s.disagree);
  }
  return s;
}

namespace {

class Collector {
 public:
  explicit Collector(CheckReport& report) : report_(report) {}

  void compare(Suite suite, LanguageId id, unsigned r, unsigned n, std::string methods,
               const Count& lhs, const Count& rhs) {
    CheckCell cell{suite, language_letter(id), r, n, std::move(methods), lhs == rhs, {}, {}, {}};
    if (!cell.agree) {
      cell.lhs = lhs.get_str();
      cell.rhs = rhs.get_str();
    }
    report_.cells.push_back(std::move(cell));
  }

  void flag(Suite suite, LanguageId id, unsigned r, unsigned n, std::string methods, bool agree,
            std::string note) {
    report_.cells.push_back(
        {suite, language_letter(id), r, n, std::move(methods), agree, {}, {}, std::move(note)});
  }

 private:
  CheckReport& report_;
};

// The recurrence table every other method is compared against. A table that
// cannot be evaluated is itself recorded as a failing cell.
std::optional<std::vector<Count>> reference_sequence(const CheckOptions& options,
                                                     const LanguageSpec& spec, unsigned n_max,
                                                     Suite suite, Collector& out) {
  RecurrenceSpec rec = recurrence_spec(spec);
  if (options.recurrence_fault) options.recurrence_fault(spec, rec);
  try {
    return evaluate_recurrence(rec, n_max);
  } catch (const ConsistencyError& e) {
    out.flag(suite, spec.id, spec.r, 0, "recurrence evaluates", false, e.what());
    return std::nullopt;
  }
}

void run_methods(const CheckOptions& o, Collector& out) {
  for (unsigned r = o.r_min; r <= o.r_max; ++r) {
    for (const LanguageId id : kAllLanguages) {
      const LanguageSpec spec{id, r};
      const auto table = reference_sequence(o, spec, o.n_max, Suite::Methods, out);
      if (!table) continue;
      const auto& rec = *table;
      const auto series = gf_series(spec, o.n_max).integer_coefficients();
      const auto dp = count_dp_table(spec, std::min(o.n_max, o.dp_n_max)).values;
      const bool has_hyper = r >= 1 && id != LanguageId::A && id != LanguageId::D;
      for (unsigned n = 0; n <= o.n_max; ++n) {
        out.compare(Suite::Methods, id, r, n, "closed=recurrence", closed_form(spec, n), rec[n]);
        out.compare(Suite::Methods, id, r, n, "series=recurrence", series[n], rec[n]);
        if (has_hyper && n >= 1) {
          out.compare(Suite::Methods, id, r, n, "hyper=recurrence", hyper_form(spec, n), rec[n]);
        }
        if (n < dp.size()) out.compare(Suite::Methods, id, r, n, "dp=recurrence", dp[n], rec[n]);
        if (candidate_count(r, n) <= o.naive_budget) {
          out.compare(Suite::Methods, id, r, n, "naive=recurrence",
                      count_naive(spec, n, o.naive_budget), rec[n]);
        }
      }
    }
  }
}

void run_ratios(const CheckOptions& o, Collector& out) {
  for (unsigned r = std::max(o.r_min, 1U); r <= o.r_max; ++r) {
    auto seq = [&](LanguageId id) {
      return reference_sequence(o, {id, r}, o.n_max, Suite::Ratios, out);
    };
    const auto b = seq(LanguageId::B), c = seq(LanguageId::C);
    const auto e = seq(LanguageId::E), f = seq(LanguageId::F);
    if (!b || !c || !e || !f) continue;
    const Count two_r = pow2(r), m1 = two_r - 1;
    for (unsigned n = 1; n <= o.n_max; ++n) {
      out.compare(Suite::Ratios, LanguageId::B, r, n, "2^r*b=(2^r-1)*c", two_r * (*b)[n], m1 * (*c)[n]);
      out.compare(Suite::Ratios, LanguageId::E, r, n, "2^r*e=(2^r-1)*f", two_r * (*e)[n], m1 * (*f)[n]);
    }
  }
}

void run_symmetry(const CheckOptions& o, Collector& out) {
  const unsigned n_top = std::min(o.n_max, o.symmetry_n_max);
  for (unsigned r = o.r_min; r <= o.r_max; ++r) {
    const auto steps = all_steps(r);
    for (const LanguageId id : kAllLanguages) {
      const LanguageSpec spec{id, r};
      const auto totals = count_dp_table(spec, n_top).values;
      // B, C start anywhere; E, F must start upward. A and D are included
      // as the unconstrained analogues.
      const bool halfspace = is_halfspace(id);
      for (unsigned n = 1; n <= n_top; ++n) {
        std::vector<Count> values;
        Count sum = 0;
        bool downward_zero = true;
        for (const auto& s : steps) {
          const Count v = count_dp_first_step(spec, n, s);
          sum += v;
          if (halfspace && s.tracked() < 0) {
            downward_zero = downward_zero && sgn(v) == 0;
          } else {
            values.push_back(v);
          }
        }
        const bool equal =
            std::all_of(values.begin(), values.end(), [&](const Count& v) { return v == values[0]; });
        if (id == LanguageId::A || id == LanguageId::D) {
          out.compare(Suite::Symmetry, id, r, n, "sum(first-step)=dp", sum, totals[n]);
          continue;
        }
        out.flag(Suite::Symmetry, id, r, n, "first-step counts equal", equal && downward_zero,
                 equal ? "" : "first-step counts differ");
        out.compare(Suite::Symmetry, id, r, n, "orbit*first-step=dp",
                    Count(static_cast<unsigned long>(values.size())) * values[0], totals[n]);
        out.compare(Suite::Symmetry, id, r, n, "sum(first-step)=dp", sum, totals[n]);
      }
    }
  }
}

void run_bijection(const CheckOptions& o, Collector& out) {
  const unsigned n_top = std::min(o.n_max, o.bijection_n_max);
  const auto e = count_dp_table({LanguageId::E, 1}, n_top).values;
  for (unsigned n = 0; n <= n_top; ++n) {
    const BijectionReport rep = verify_bijection(n);
    out.flag(Suite::Bijection, LanguageId::E, 1, n, "phi bijective", rep.ok(),
             rep.ok() ? "" : rep.failures.front());
    if (n >= 1) {
      out.compare(Suite::Bijection, LanguageId::E, 1, n, "2*paths=dp", 2 * count_e_double_prime(n),
                  e[n]);
    }
  }
}

void run_asymptotics(const CheckOptions& o, Collector& out) {
  if (o.asymptotic_points.empty()) return;
  const unsigned top = *std::max_element(o.asymptotic_points.begin(), o.asymptotic_points.end());
  for (unsigned r = std::max(o.r_min, 1U); r <= o.r_max; ++r) {
    for (const LanguageId id : {LanguageId::B, LanguageId::C, LanguageId::E, LanguageId::F}) {
      const LanguageSpec spec{id, r};
      const auto table = reference_sequence(o, spec, top, Suite::Asymptotics, out);
      if (!table) continue;
      const auto& values = *table;
      const AsymptoticForm form = asymptotic_form(spec);
      double previous = INFINITY;
      for (const unsigned n : o.asymptotic_points) {
        const double deviation = std::fabs(asymptotic_ratio(form, values[n], n) - 1.0);
        bool ok = deviation < previous;
        if (n == top) ok = ok && deviation <= o.asymptotic_tolerance;
        char note[64];
        std::snprintf(note, sizeof note, "|ratio-1|=%.6e", deviation);
        out.flag(Suite::Asymptotics, id, r, n, "count/asymptote->1", ok, note);
        previous = deviation;
      }
    }
  }
}

}  // namespace

CheckReport run_check(const CheckOptions& options) {
  if (options.r_min > options.r_max) throw DomainError("empty r range");
  CheckReport report;
  Collector out(report);
  if (options.suites.contains(Suite::Methods)) run_methods(options, out);
  if (options.suites.contains(Suite::Ratios)) run_ratios(options, out);
  if (options.suites.contains(Suite::Symmetry)) run_symmetry(options, out);
  if (options.suites.contains(Suite::Bijection)) run_bijection(options, out);
  if (options.suites.contains(Suite::Asymptotics)) run_asymptotics(options, out);
  std::stable_sort(report.cells.begin(), report.cells.end(),
                   [](const CheckCell& a, const CheckCell& b) {
                     return std::tie(a.language, a.r, a.n, a.suite) <
                            std::tie(b.language, b.r, b.n, b.suite);
                   });
  return report;
}

std::string report_json(const CheckReport& report) {
  nlohmann::ordered_json root;
  const CheckSummary s = report.summary();
  root["summary"] = {{"cells", s.cells}, {"agree", s.agree}, {"disagree", s.disagree}};
  auto& cells = root["cells"] = nlohmann::ordered_json::array();
  for (const auto& c : report.cells) {
    nlohmann::ordered_json j{{"suite", suite_name(c.suite)},
                             {"language", std::string(1, c.language)},
                             {"r", c.r},
                             {"n", c.n},
                             {"methods", c.methods},
                             {"agree", c.agree}};
    if (!c.lhs.empty()) j["lhs"] = c.lhs;
    if (!c.rhs.empty()) j["rhs"] = c.rhs;
    if (!c.note.empty()) j["note"] = c.note;
    cells.push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

std::string report_text(const CheckReport& report) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_suite;
  std::string out;
  for (const auto& c : report.cells) {
    auto& [agree, total] = per_suite[suite_name(c.suite)];
    ++total;
    if (c.agree) {
      ++agree;
      continue;
    }
    out += std::string("DISAGREE ") + suite_name(c.suite) + " " + c.language +
           " r=" + std::to_string(c.r) + " n=" + std::to_string(c.n) + " " + c.methods;
    if (!c.lhs.empty()) out += " lhs=" + c.lhs + " rhs=" + c.rhs;
    if (!c.note.empty()) out += " (" + c.note + ")";
    out += "\n";
  }
  for (const auto& [suite, counts] : per_suite) {
    out += suite + ": " + std::to_string(counts.first) + "/" + std::to_string(counts.second) +
           " cells agree\n";
  }
  const CheckSummary s = report.summary();
  out += "total: " + std::to_string(s.agree) + "/" + std::to_string(s.cells) + " agree, " +
         std::to_string(s.disagree) + " disagree\n";
  return out;
}

}  // namespace latwalk
