#include <algorithm>
#include <string>
#include <vector>

#include "brute_oracle.hpp"
#include "doctest.h"
#include "latwalk/oracle.hpp"

using namespace latwalk;

namespace {
Count C(std::uint64_t v) { return Count(static_cast<unsigned long>(v)); }
}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("enumerate_words examples") {
    CHECK(enumerate_words({LanguageId::B, 1}, 1).size() == 4);
    CHECK(enumerate_words({LanguageId::F, 1}, 2).size() == 20);
    for (const LanguageId id : kAllLanguages) {
      const auto words = enumerate_words({id, 2}, 0);
      REQUIRE(words.size() == 1);
      CHECK(words[0].empty());
      CHECK(words[0].r() == 2);
    }
  }

  TEST_CASE("enumerate_words is sorted by text and every word is a member") {
    for (const LanguageId id : kAllLanguages) {
      const LanguageSpec spec{id, 1};
      const auto words = enumerate_words(spec, 3);
      std::vector<std::string> text;
      for (const auto& w : words) {
        CHECK(w.size() == 6);
        CHECK(recognize(spec, w));
        text.push_back(format_word(w));
      }
      CHECK(std::is_sorted(text.begin(), text.end()));
      CHECK(std::adjacent_find(text.begin(), text.end()) == text.end());
    }
  }

  TEST_CASE("budget refusal states the required count") {
    try {
      enumerate_words({LanguageId::A, 2}, 3, 1000);
      FAIL("expected a budget error");
    } catch (const BudgetError& e) {
      CHECK(std::string(e.what()).find("262144") != std::string::npos);
    }
    CHECK_THROWS_AS(count_naive({LanguageId::A, 1}, 3, 4095), BudgetError);
    CHECK(count_naive({LanguageId::A, 1}, 3, 4096) == 1280);
  }

  TEST_CASE("count_dp examples") {
    CHECK(count_dp({LanguageId::E, 1}, 2) == 10);
    CHECK(count_dp({LanguageId::A, 1}, 1) == 8);
    CHECK(count_dp({LanguageId::B, 1}, 3) == 212);
    for (const LanguageId id : kAllLanguages) CHECK(count_dp({id, 3}, 0) == 1);
  }

  TEST_CASE("naive, dp and brute force agree") {
    struct Range { unsigned r, n_max; };
    for (const Range range : {Range{0, 5}, Range{1, 4}, Range{2, 3}, Range{3, 2}}) {
      for (const LanguageId id : kAllLanguages) {
        const LanguageSpec spec{id, range.r};
        const auto table = count_dp_table(spec, range.n_max).values;
        for (unsigned n = 0; n <= range.n_max; ++n) {
          const Count expected = C(brute::count_language(language_letter(id), range.r, n));
          INFO(language_letter(id) << " r=" << range.r << " n=" << n);
          CHECK(table[n] == expected);
          CHECK(count_naive(spec, n) == expected);
          CHECK(enumerate_words(spec, n).size() == expected.get_ui());
        }
      }
    }
  }

  TEST_CASE("first-step counts") {
    CHECK(count_dp_first_step({LanguageId::E, 1}, 2, parse_step("++", 1)) == 5);
    CHECK(count_dp_first_step({LanguageId::B, 1}, 1, parse_step("+-", 1)) == 1);
    CHECK(count_dp_first_step({LanguageId::E, 1}, 1, parse_step("+-", 1)) == 0);
    CHECK_THROWS_AS(count_dp_first_step({LanguageId::E, 1}, 1, parse_step("++-", 2)), DimensionError);
    CHECK_THROWS(count_dp_first_step({LanguageId::E, 1}, 0, parse_step("++", 1)));
  }

  TEST_CASE("first-step counts match brute force by first step") {
    for (unsigned r = 0; r <= 2; ++r) {
      const unsigned n_max = r == 2 ? 2 : 3;
      for (const LanguageId id : kAllLanguages) {
        const auto rules = brute::language(language_letter(id), r);
        for (unsigned n = 1; n <= n_max; ++n) {
          std::vector<std::uint64_t> by_first(std::size_t{1} << (r + 1), 0);
          brute::for_each_word(r, 2 * n, [&](const std::vector<brute::Step>& w) {
            if (!brute::member(rules, w)) return;
            std::uint32_t mask = 0;
            for (unsigned i = 0; i <= r; ++i) mask |= (w[0][i] > 0 ? 1U : 0U) << i;
            ++by_first[mask];
          });
          for (const auto& s : all_steps(r)) {
            CHECK(count_dp_first_step({id, r}, n, s) == C(by_first[s.mask()]));
          }
        }
      }
    }
  }

  TEST_CASE("first steps are interchangeable") {
    for (unsigned r = 0; r <= 3; ++r) {
      const auto steps = all_steps(r);
      for (const LanguageId id : {LanguageId::B, LanguageId::C, LanguageId::E, LanguageId::F}) {
        const LanguageSpec spec{id, r};
        const bool half = is_halfspace(id);
        const auto totals = count_dp_table(spec, 10).values;
        for (unsigned n = 1; n <= 10; ++n) {
          Count first_value = -1, sum = 0;
          for (const auto& s : steps) {
            const Count v = count_dp_first_step(spec, n, s);
            sum += v;
            if (half && s.tracked() < 0) {
              CHECK(v == 0);
              continue;
            }
            if (first_value < 0) first_value = v;
            CHECK(v == first_value);
          }
          CHECK(sum == totals[n]);
          const unsigned orbit = half ? (1U << r) : (1U << (r + 1));
          CHECK(Count(orbit) * first_value == totals[n]);
        }
      }
    }
  }

  TEST_CASE("multi-coordinate counter") {
    CHECK(count_dp_multi(1, 1, 1, false) == 4);
    CHECK(count_dp_multi(2, 1, 0, false) == 1);
    CHECK(count_dp_multi(2, 1, 0, true) == 1);
    CHECK(count_dp_multi(1, 1, 2, false) == 36);
    CHECK(count_dp_multi(2, 1, 2, false) == 576);
    CHECK_THROWS_AS(count_dp_multi(1, 2, 1, false), DomainError);
    CHECK_THROWS_AS(count_dp_multi(3, 3, 40, false, 1000), BudgetError);
  }

  TEST_CASE("multi-coordinate counter matches brute force") {
    for (unsigned r = 0; r <= 2; ++r) {
      for (unsigned j = 0; j <= r; ++j) {
        for (unsigned n = 0; n <= (r == 2 ? 3U : 4U); ++n) {
          for (const bool half : {false, true}) {
            INFO("r=" << r << " j=" << j << " n=" << n << " half=" << half);
            CHECK(count_dp_multi(r, j, n, half) == C(brute::count_multi(r, j, n, half)));
          }
        }
      }
    }
  }

  TEST_CASE("multi-coordinate counter with j = 0 is A or D") {
    for (unsigned r = 0; r <= 2; ++r) {
      for (unsigned n = 0; n <= 6; ++n) {
        CHECK(count_dp_multi(r, 0, n, false) == count_dp({LanguageId::A, r}, n));
        CHECK(count_dp_multi(r, 0, n, true) == count_dp({LanguageId::D, r}, n));
      }
    }
  }

  TEST_CASE("dp reaches large n") {
    const auto table = count_dp_table({LanguageId::E, 3}, 400).values;
    CHECK(table.size() == 401);
    for (const auto& v : table) CHECK(v > 0);
  }
}
