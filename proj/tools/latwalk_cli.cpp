// latwalk: count pattern-avoiding lattice walks, print series, run the
// cross-check harness and the b-file cache.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "latwalk/automata.hpp"
#include "latwalk/bfile.hpp"
#include "latwalk/bijection.hpp"
#include "latwalk/check.hpp"
#include "latwalk/formulas.hpp"
#include "latwalk/oeis.hpp"
#include "latwalk/oracle.hpp"
#include "latwalk/series.hpp"

using namespace latwalk;

namespace {

constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;

struct LanguageArgs {
  std::string positional;
  std::string flag;

  void attach(CLI::App* cmd) {
    cmd->add_option("LANG", positional, "Language letter A-F");
    cmd->add_option("--language,-l", flag, "Language letter A-F (alternative to the positional)");
  }

  LanguageId resolve() const {
    if (!positional.empty() && !flag.empty() && positional != flag) {
      throw CLI::ValidationError("language", "given twice with different values");
    }
    const std::string& text = positional.empty() ? flag : positional;
    if (text.empty()) throw CLI::RequiredError("language");
    return parse_language(text);
  }
};

Count count_with(const std::string& method, const LanguageSpec& spec, unsigned n,
                 std::uint64_t budget) {
  if (method == "closed") return closed_form(spec, n);
  if (method == "hyper") return hyper_form(spec, n);
  if (method == "recurrence") return recurrence_seq(spec, n).values.at(n);
  if (method == "dp") return count_dp(spec, n);
  if (method == "series") return gf_series(spec, n).integer_coefficients().at(n);
  return count_naive(spec, n, budget);
}

// "2" or "1..3".
std::pair<unsigned, unsigned> parse_r_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const unsigned r = static_cast<unsigned>(std::stoul(text));
      return {r, r};
    }
    return {static_cast<unsigned>(std::stoul(text.substr(0, dots))),
            static_cast<unsigned>(std::stoul(text.substr(dots + 2)))};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--r", "expected N or LO..HI, got \"" + text + "\"");
  }
}

std::string json_value_list(const std::vector<Count>& values) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& v : values) arr.push_back(v.get_str());
  return arr.dump();
}

// Default OEIS comparison targets at r = 1.
std::optional<LanguageId> default_target(const std::string& id) {
  if (id == "A086871") return LanguageId::E;
  if (id == "A082298") return LanguageId::F;
  if (id == "A085363") return LanguageId::B;
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of pattern-avoiding lattice walks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "latwalk 0.1.0");

  // count
  auto* count_cmd = app.add_subcommand("count", "Print one exact count");
  LanguageArgs count_lang;
  count_lang.attach(count_cmd);
  unsigned count_r = 1, count_n = 0;
  std::string count_method = "recurrence", count_format = "text";
  std::uint64_t count_budget = kDefaultNaiveBudget;
  count_cmd->add_option("--r", count_r, "Dimension parameter r")->required();
  count_cmd->add_option("--n", count_n, "Semilength")->required();
  count_cmd->add_option("--method,-m", count_method)
      ->check(CLI::IsMember({"closed", "hyper", "recurrence", "dp", "series", "naive"}))
      ->capture_default_str();
  count_cmd->add_option("--budget", count_budget, "Candidate budget for --method naive")
      ->capture_default_str();
  count_cmd->add_option("--format", count_format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // series
  auto* series_cmd = app.add_subcommand("series", "Print generating-function coefficients");
  LanguageArgs series_lang;
  series_lang.attach(series_cmd);
  unsigned series_r = 1, series_terms = 10;
  std::string series_format = "csv";
  series_cmd->add_option("--r", series_r)->required();
  series_cmd->add_option("--terms", series_terms)->check(CLI::PositiveNumber)->capture_default_str();
  series_cmd->add_option("--format", series_format)
      ->check(CLI::IsMember({"json", "bfile", "csv"}))
      ->capture_default_str();

  // check
  auto* check_cmd = app.add_subcommand("check", "Cross-check every method and invariant");
  std::string check_r = "1..2", check_suites = "all", check_json, check_corrupt;
  CheckOptions check_opts;
  check_cmd->add_option("--r", check_r, "r or LO..HI")->capture_default_str();
  check_cmd->add_option("--n-max", check_opts.n_max)->capture_default_str();
  check_cmd->add_option("--suites", check_suites,
                        "Comma list of methods,ratios,symmetry,bijection,asymptotics or all")
      ->capture_default_str();
  check_cmd->add_option("--budget", check_opts.naive_budget, "Naive enumeration budget")
      ->capture_default_str();
  check_cmd->add_option("--json", check_json, "Write the JSON report here (- for stdout)");
  check_cmd->add_option("--corrupt-initial", check_corrupt,
                        "Test fixture: add 1 to the last initial value of this language");

  // oeis
  auto* oeis_cmd = app.add_subcommand("oeis", "Show a cached or bundled OEIS b-file");
  std::string oeis_id, oeis_cache, oeis_compare;
  bool oeis_online = false;
  unsigned oeis_r = 1;
  oeis_cmd->add_option("id", oeis_id, "A-number, e.g. A086871")->required();
  oeis_cmd->add_option("--cache-dir", oeis_cache)->envname(kCacheDirEnv);
  oeis_cmd->add_flag("--online", oeis_online, "Download the live b-file into the cache");
  oeis_cmd->add_option("--compare", oeis_compare, "Compare against language (default target if empty)")
      ->expected(0, 1)
      ->default_str("auto");
  oeis_cmd->add_option("--r", oeis_r, "r for --compare")->capture_default_str();

  // recognize
  auto* rec_cmd = app.add_subcommand("recognize", "Decide membership of a word");
  LanguageArgs rec_lang;
  std::string rec_word;
  unsigned rec_r = 1;
  rec_cmd->add_option("--language,-l", rec_lang.flag)->required();
  rec_cmd->add_option("--r", rec_r)->required();
  rec_cmd->add_option("word", rec_word, "Comma-separated steps, e.g. ++,--")->required();

  // phi, phi-inverse
  auto* phi_cmd = app.add_subcommand("phi", "Map a walk to its diagonal path");
  std::string phi_word;
  phi_cmd->add_option("word", phi_word, "Walk at r = 1, e.g. ++,-+,--,+-")->required();
  auto* inv_cmd = app.add_subcommand("phi-inverse", "Map a diagonal path back to its walk");
  std::string inv_path;
  inv_cmd->add_option("path", inv_path, "e.g. 2,+;2,+;1,-;3,-")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count_cmd) {
      const LanguageSpec spec{count_lang.resolve(), count_r};
      const Count value = count_with(count_method, spec, count_n, count_budget);
      if (count_format == "json") {
        nlohmann::ordered_json j{{"language", std::string(1, language_letter(spec.id))},
                                 {"r", count_r},
                                 {"n", count_n},
                                 {"method", count_method},
                                 {"value", value.get_str()}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << value.get_str() << "\n";
      }
      return 0;
    }

    if (*series_cmd) {
      const LanguageSpec spec{series_lang.resolve(), series_r};
      const auto values = gf_series(spec, series_terms - 1).integer_coefficients();
      if (series_format == "bfile") {
        std::cout << bfile_emit(values);
      } else if (series_format == "json") {
        std::cout << "{\"language\":\"" << language_letter(spec.id) << "\",\"r\":" << series_r
                  << ",\"method\":\"series\",\"values\":" << json_value_list(values) << "}\n";
      } else {
        for (std::size_t i = 0; i < values.size(); ++i) {
          std::cout << (i ? "," : "") << values[i].get_str();
        }
        std::cout << "\n";
      }
      return 0;
    }

    if (*check_cmd) {
      std::tie(check_opts.r_min, check_opts.r_max) = parse_r_range(check_r);
      check_opts.suites = parse_suites(check_suites);
      if (!check_corrupt.empty()) {
        const LanguageId target = parse_language(check_corrupt);
        check_opts.recurrence_fault = [target](const LanguageSpec& spec, RecurrenceSpec& rec) {
          if (spec.id == target && !rec.initial.empty()) rec.initial.back() += 1;
        };
      }
      const CheckReport report = run_check(check_opts);
      if (check_json == "-") {
        std::cout << report_json(report);
      } else {
        std::cout << report_text(report);
        if (!check_json.empty()) {
          std::ofstream out(check_json, std::ios::binary | std::ios::trunc);
          if (!out) throw Error("cannot write " + check_json);
          out << report_json(report);
        }
      }
      return report.ok() ? 0 : kExitDisagree;
    }

    if (*oeis_cmd) {
      OeisOptions opts;
      opts.cache_dir = oeis_cache;
      opts.allow_network = oeis_online;
      const OeisResult result = oeis_fetch(oeis_id, opts);
      std::cerr << oeis_id << ": " << result.file.entries.size() << " terms from "
                << source_name(result.source) << "\n";
      if (oeis_compare.empty() && oeis_cmd->count("--compare") == 0) {
        std::cout << bfile_format(result.file);
        return 0;
      }
      std::optional<LanguageId> target =
          (oeis_compare.empty() || oeis_compare == "auto") ? default_target(oeis_id)
                                                           : std::optional(parse_language(oeis_compare));
      if (!target) throw Error("no default comparison target for " + oeis_id + "; pass a language");
      const LanguageSpec spec{*target, oeis_r};
      const std::string name =
          std::string(1, language_letter(spec.id)) + "(r=" + std::to_string(oeis_r) + ")";
      const auto ours = recurrence_seq(spec, static_cast<unsigned>(result.file.entries.size()) + 1).values;
      const OeisComparison cmp = compare_with_oeis(oeis_id, result.file, name, ours);
      std::cout << oeis_id << " vs " << name << ": ";
      if (!cmp.aligned) {
        std::cout << "no alignment\n";
      } else {
        std::cout << "shift " << cmp.shift << ", " << cmp.compared << " compared, " << cmp.mismatches
                  << " mismatches";
        if (cmp.mismatches) std::cout << " (first at b-file index " << cmp.first_mismatch_index << ")";
        std::cout << "\n";
      }
      return cmp.matched() ? 0 : kExitDisagree;
    }

    if (*rec_cmd) {
      const LanguageSpec spec{rec_lang.resolve(), rec_r};
      std::cout << (recognize(spec, parse_word(rec_word, rec_r)) ? "accept" : "reject") << "\n";
      return 0;
    }

    if (*phi_cmd) {
      std::cout << format_diagonal_path(phi(parse_word(phi_word, 1))) << "\n";
      return 0;
    }

    if (*inv_cmd) {
      std::cout << format_word(phi_inverse(parse_diagonal_path(inv_path))) << "\n";
      return 0;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "latwalk: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "latwalk: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
