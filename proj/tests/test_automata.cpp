#include <functional>
#include <vector>

#include "doctest.h"
#include "dpda_sweep.hpp"
#include "latwalk/automata.hpp"

using namespace latwalk;

namespace {

Word w1(const char* text) { return parse_word(text, 1); }

// Every word of dimension r+1 and the given length.
void each_word(unsigned r, unsigned length, const std::function<void(const Word&)>& visit) {
  const auto alphabet = all_steps(r);
  std::vector<StepVector> steps(length, alphabet.front());
  std::vector<std::size_t> digit(length, 0);
  while (true) {
    visit(Word(r, steps));
    std::size_t pos = length;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < alphabet.size()) {
        steps[pos] = alphabet[digit[pos]];
        break;
      }
      digit[pos] = 0;
      steps[pos] = alphabet.front();
      if (pos == 0) return;
    }
    if (length == 0) return;
  }
}

}  // namespace

TEST_SUITE("automata") {
  TEST_CASE("hyperplane machine") {
    CHECK(accepts_hyperplane(1, Word(1)));
    CHECK(accepts_hyperplane(1, w1("++,--")));
    CHECK_FALSE(accepts_hyperplane(1, w1("++,+-,++")));
    CHECK(accepts_hyperplane(1, w1("+-,-+")));
    CHECK_THROWS_AS(accepts_hyperplane(2, w1("++,--")), DimensionError);
  }

  TEST_CASE("half-space machine") {
    CHECK_FALSE(accepts_halfspace(1, w1("+-,--")));
    CHECK(accepts_halfspace(1, w1("++,--")));
    CHECK(accepts_halfspace(1, w1("++,++,--,--")));
    CHECK_FALSE(accepts_halfspace(1, w1("+-,++")));
    CHECK_THROWS_AS(accepts_halfspace(0, w1("++,--")), DimensionError);
  }

  TEST_CASE("transition tables are deterministic") {
    for (const DpdaKind kind : {DpdaKind::Hyperplane, DpdaKind::Halfspace}) {
      const auto table = dpda_transitions(kind);
      for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t k = i + 1; k < table.size(); ++k) {
          const bool same_config = table[i].from == table[k].from && table[i].top == table[k].top;
          if (!same_config) continue;
          CHECK(table[i].input.has_value());
          CHECK(table[k].input.has_value());
          CHECK(table[i].input != table[k].input);
        }
      }
    }
    // Only U is ever pushed by the half-space machine.
    for (const auto& t : dpda_transitions(DpdaKind::Halfspace)) {
      for (const auto sym : t.replacement) CHECK(sym != StackSymbol::D);
    }
  }

  TEST_CASE("stack tracks the height") {
    Dpda m(DpdaKind::Hyperplane);
    const Word w = w1("+-,+-,++,-+,-+");
    int h = 0;
    for (const auto& s : w) {
      REQUIRE(m.feed(s));
      h += s.tracked();
      const auto& stack = m.configuration().stack;
      CHECK(stack.size() == static_cast<std::size_t>(std::abs(h)) + 1);
      if (h != 0) CHECK(stack.back() == (h > 0 ? StackSymbol::U : StackSymbol::D));
      CHECK((m.configuration().state == DpdaState::Accepting) == (h == 0));
    }
    m.reset();
    CHECK(m.accepting());
  }

  TEST_CASE("half-space rejection is permanent") {
    Dpda m(DpdaKind::Halfspace);
    CHECK_FALSE(m.feed(parse_step("+-", 1)));
    CHECK(m.rejected());
    CHECK_FALSE(m.feed(parse_step("++", 1)));
    CHECK_FALSE(m.accepting());
  }

  TEST_CASE("pattern avoidance") {
    CHECK_FALSE(avoids_pattern(PatternKind::Backtrack, w1("++,--")));
    CHECK(avoids_pattern(PatternKind::Repeat, w1("++,--")));
    CHECK_FALSE(avoids_pattern(PatternKind::Repeat, w1("++,+-,+-")));
    CHECK(avoids_pattern(PatternKind::Backtrack, w1("++,+-,+-")));
    CHECK(avoids_pattern(PatternKind::Backtrack, Word(1)));
    PatternMemory mem(PatternKind::Repeat);
    CHECK_FALSE(mem.previous().has_value());
    CHECK(mem.feed(parse_step("++", 1)));
    CHECK(mem.previous() == parse_step("++", 1));
  }

  TEST_CASE("recognize") {
    CHECK(recognize({LanguageId::B, 1}, w1("++,+-")));
    CHECK_FALSE(recognize({LanguageId::E, 0}, parse_word("+,-", 0)));
    CHECK(recognize({LanguageId::F, 0}, parse_word("+,-,+,-", 0)));
    CHECK_FALSE(recognize({LanguageId::F, 0}, parse_word("-,+,-,+", 0)));
    CHECK(recognize({LanguageId::C, 0}, parse_word("-,+,-,+", 0)));
    CHECK_THROWS_AS(recognize({LanguageId::A, 2}, w1("++,--")), DimensionError);
  }

  TEST_CASE("machines agree with prefix sums on every word, dimension <= 3, length <= 8") {
    for (unsigned r = 0; r <= 2; ++r) {
      const auto res = sweep::dpda_vs_arithmetic(r, 8);
      INFO("r=" << r << " first mismatch: " << res.first_mismatch);
      CHECK(res.mismatches == 0);
      std::uint64_t expected = 0, layer = 1;
      for (unsigned len = 0; len <= 8; ++len, layer <<= (r + 1)) expected += layer;
      CHECK(res.words == expected);
    }
  }

  TEST_CASE("recognize is the intersection of machine and pattern filter") {
    for (unsigned r = 0; r <= 2; ++r) {
      const unsigned max_len = r == 2 ? 6 : 8;
      for (unsigned len = 0; len <= max_len; ++len) {
        each_word(r, len, [&](const Word& w) {
          const bool a = accepts_hyperplane(r, w), d = accepts_halfspace(r, w);
          const bool x = avoids_pattern(PatternKind::Backtrack, w);
          const bool y = avoids_pattern(PatternKind::Repeat, w);
          const bool ok = recognize({LanguageId::A, r}, w) == a &&
                          recognize({LanguageId::B, r}, w) == (a && x) &&
                          recognize({LanguageId::C, r}, w) == (a && y) &&
                          recognize({LanguageId::D, r}, w) == d &&
                          recognize({LanguageId::E, r}, w) == (d && x) &&
                          recognize({LanguageId::F, r}, w) == (d && y);
          if (!ok) FAIL_CHECK("intersection identity fails on " << format_word(w));
        });
      }
    }
  }

  TEST_CASE("membership is invariant under coordinate flips") {
    for (unsigned r = 0; r <= 2; ++r) {
      for (unsigned len = 0; len <= 6; len += 2) {
        each_word(r, len, [&](const Word& w) {
          for (const LanguageId id : kAllLanguages) {
            const bool in = recognize({id, r}, w);
            const unsigned top = is_halfspace(id) ? r : r + 1;
            for (unsigned i = 1; i <= top; ++i) {
              std::vector<StepVector> flipped;
              for (const auto& s : w) flipped.push_back(flip_coordinate(s, i));
              if (recognize({id, r}, Word(r, flipped)) != in) {
                FAIL_CHECK("flip " << i << " changes membership of " << format_word(w) << " in "
                                   << language_letter(id));
              }
            }
          }
        });
      }
    }
  }
}
