#include <vector>

#include "doctest.h"
#include "latwalk/core.hpp"

using namespace latwalk;

namespace {
StepVector sv(std::vector<int> c) { return StepVector(c); }
}  // namespace

TEST_SUITE("core") {
  TEST_CASE("parse_step reads signs in coordinate order") {
    CHECK(parse_step("++", 1) == sv({1, 1}));
    CHECK(parse_step("+-+", 2) == sv({1, -1, 1}));
    CHECK(parse_step("+-+", 2).tracked() == 1);
    CHECK(parse_step("+-", 1).tracked() == -1);
    CHECK(parse_step("-+", 1).coord(1) == -1);
  }

  TEST_CASE("parse_step errors name the position") {
    try {
      parse_step("+0", 1);
      FAIL("expected a format error");
    } catch (const FormatError& e) {
      CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(parse_step("+++", 1), FormatError);
    CHECK_THROWS_AS(parse_step("+", 1), FormatError);
    CHECK_THROWS_AS(parse_step("", 0), FormatError);
  }

  TEST_CASE("format_step") {
    CHECK(format_step(sv({1, 1})) == "++");
    CHECK(format_step(sv({-1, -1, 1})) == "--+");
  }

  TEST_CASE("parse and format are inverse for r <= 4") {
    for (unsigned r = 0; r <= 4; ++r) {
      for (const auto& s : all_steps(r)) {
        const std::string text = format_step(s);
        CHECK(text.size() == r + 1);
        CHECK(parse_step(text, r) == s);
        CHECK(format_step(parse_step(text, r)) == text);
      }
    }
  }

  TEST_CASE("negation and coordinate flips") {
    CHECK(negate_step(sv({1, -1})) == sv({-1, 1}));
    CHECK(negate_step(sv({1, 1, 1})) == sv({-1, -1, -1}));
    CHECK(flip_coordinate(sv({1, 1}), 1) == sv({-1, 1}));
    CHECK(flip_coordinate(sv({1, -1, 1}), 3) == sv({1, -1, -1}));
    CHECK_THROWS(flip_coordinate(sv({1, 1}), 0));
    CHECK_THROWS(flip_coordinate(sv({1, 1}), 3));
    for (unsigned r = 0; r <= 3; ++r) {
      for (const auto& s : all_steps(r)) {
        CHECK(negate_step(negate_step(s)) == s);
        for (unsigned i = 1; i <= r + 1; ++i) {
          const StepVector f = flip_coordinate(s, i);
          CHECK(flip_coordinate(f, i) == s);
          CHECK(f.coord(i) == -s.coord(i));
          for (unsigned k = 1; k <= r + 1; ++k) {
            CHECK(flip_coordinate(flip_coordinate(s, i), k) ==
                  flip_coordinate(flip_coordinate(s, k), i));
          }
        }
      }
    }
  }

  TEST_CASE("all_steps lists each sign vector once") {
    for (unsigned r = 0; r <= 4; ++r) {
      const auto steps = all_steps(r);
      CHECK(steps.size() == (std::size_t{1} << (r + 1)));
      for (std::size_t i = 0; i + 1 < steps.size(); ++i) CHECK(steps[i] < steps[i + 1]);
    }
  }

  TEST_CASE("height profile") {
    CHECK(height_profile(Word(1)) == std::vector<int>{0});
    CHECK(height_profile(parse_word("++,+-", 1)) == std::vector<int>{0, 1, 0});
    CHECK(height_profile(parse_word("++,-+,--,+-", 1)) == std::vector<int>{0, 1, 2, 1, 0});
  }

  TEST_CASE("height profile ends at zero iff tracked signs balance") {
    const auto steps = all_steps(1);
    for (unsigned code = 0; code < 256; ++code) {
      std::vector<StepVector> w;
      int ups = 0;
      for (unsigned t = 0; t < 4; ++t) {
        w.push_back(steps[(code >> (2 * t)) & 3U]);
        ups += w.back().tracked() > 0;
      }
      const auto h = height_profile(Word(1, w));
      CHECK(h.size() == 5);
      CHECK((h.back() == 0) == (ups == 2));
    }
  }

  TEST_CASE("words") {
    const Word w = parse_word("++,--,+-", 1);
    CHECK(w.size() == 3);
    CHECK(format_word(w) == "++,--,+-");
    CHECK(parse_word("", 2).empty());
    CHECK(parse_word("", 2).r() == 2);
    CHECK_THROWS_AS(parse_word("++,+", 1), FormatError);
    CHECK_THROWS_AS(parse_word("++,,--", 1), FormatError);
    CHECK(format_word(map_steps(w, negate_step)) == "--,++,-+");
  }

  TEST_CASE("language selectors") {
    for (const LanguageId id : kAllLanguages) {
      CHECK(parse_language(std::string(1, language_letter(id))) == id);
    }
    CHECK(parse_language("e") == LanguageId::E);
    CHECK_THROWS_AS(parse_language("G"), FormatError);
    CHECK(is_halfspace(LanguageId::D));
    CHECK_FALSE(is_halfspace(LanguageId::C));
    CHECK(avoided_pattern(LanguageId::B) == PatternKind::Backtrack);
    CHECK(avoided_pattern(LanguageId::F) == PatternKind::Repeat);
    CHECK_FALSE(avoided_pattern(LanguageId::A).has_value());
  }
}
