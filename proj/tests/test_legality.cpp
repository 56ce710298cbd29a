#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "fibword/fibonacci.hpp"
#include "fibword/legality.hpp"

using namespace fibword;

namespace {
BoundedFactor open_factor(const std::string& letters) {
  return BoundedFactor{Word::ab(letters), true, true};
}
}  // namespace

TEST_CASE("scan_forbidden finds the first bb or aaa") {
  CHECK(scan_forbidden(Word::ab("abba")) == 1);
  CHECK(scan_forbidden(Word::ab("ababaabaaab")) == 7);
  CHECK(!scan_forbidden(fib_word(25)));
  CHECK(scan_forbidden(Word::ab("aaabb")) == 0);
}

TEST_CASE("single desubstitution rounds") {
  // Closed exact image: ab came from a.
  const DesubOutcome closed = desubstitute(BoundedFactor{Word::ab("ab"), false, false});
  REQUIRE(closed.branches.size() == 1);
  CHECK(closed.branches[0].preimage.word.letters() == "a");
  CHECK(!closed.illegal());

  // A closed factor cannot begin with b.
  CHECK(desubstitute(BoundedFactor{Word::ab("ba"), false, false}).impossible_pairing);

  // Right-open trailing a branches two ways.
  const DesubOutcome branchy = desubstitute(open_factor("aa"));
  REQUIRE(branchy.branches.size() == 2);
  CHECK(branchy.branches[0].preimage.word.letters() == "bb");
  CHECK(branchy.branches[0].forbidden_at.has_value());
  CHECK(branchy.branches[1].preimage.word.letters() == "b");
  CHECK(!branchy.branches[1].forbidden_at.has_value());

  CHECK_THROWS_AS(desubstitute(open_factor("abb")), std::invalid_argument);
}

TEST_CASE("the worked desubstitution example") {
  // The bracketing (ab)a(ab)a(ab)(ab)a(ab)(ab)(ab)a gives this word; its
  // preimage carries aaa, so one round settles it.
  const DesubOutcome out = desubstitute(open_factor("abaabaababaabababa"));
  bool found = false;
  for (const auto& branch : out.branches) {
    if (branch.preimage.word.letters() == "ababaabaaab") {
      found = true;
      CHECK(branch.forbidden_at.has_value());
    }
  }
  CHECK(found);
  CHECK(out.illegal());

  const LegalityReport rep = check_legality(open_factor("abaabaababaabababa"));
  CHECK(!rep.legal);
  CHECK(rep.rounds == 1);
}

TEST_CASE("embedded words that need several rounds") {
  const LegalityReport two = check_legality(open_factor("aababaabaabaaba"));
  CHECK(!two.legal);
  CHECK(two.rounds == 2);
}

TEST_CASE("base cases resolve against the short factor table") {
  CHECK(is_legal_factor(open_factor("baab")));
  CHECK(!is_legal_factor(open_factor("bb")));
  CHECK(is_legal_factor(open_factor("")));
  CHECK(short_legal_factors().size() == 1 + 2 + 3 + 4 + 5);
}

TEST_CASE("oracle") {
  CHECK(oracle_is_factor(Word::ab("babaab")));
  CHECK(!oracle_is_factor(Word::ab("aaa")));
  CHECK_THROWS_AS(oracle_is_factor(Word::ab(std::string(5001, 'a'))), std::length_error);
}

TEST_CASE("oracle equivalence, exhaustive to length 14") {
  long long legal_at_14 = 0;
  for (int len = 1; len <= 14; ++len) {
    const long long total = 1LL << len;
    for (long long bits = 0; bits < total; ++bits) {
      std::string s(static_cast<std::size_t>(len), 'a');
      for (int i = 0; i < len; ++i) {
        if (bits & (1LL << i)) s[static_cast<std::size_t>(i)] = 'b';
      }
      const Word w = Word::ab(s);
      const bool oracle = oracle_is_factor(w);
      const bool desub = is_legal_factor(BoundedFactor{w, true, true});
      if (oracle != desub) {
        CAPTURE(s);
        CHECK(oracle == desub);
      }
      if (len == 14 && oracle) ++legal_at_14;
    }
  }
  // Factor complexity of a Sturmian word: length + 1.
  CHECK(legal_at_14 == 15);
}

TEST_CASE("reversal closure of the language") {
  for (int len = 1; len <= 12; ++len) {
    for (const Word& w : factor_set(14, len)) {
      CAPTURE(w.letters());
      CHECK(oracle_is_factor(w.reversed()));
    }
  }
}

TEST_CASE("desubstitution rounds strictly shrink driver-sized words") {
  // Words of length >= 5 without bb/aaa always contain ab, so every
  // surviving preimage is strictly shorter.
  for (const Word& w : factor_set(14, 9)) {
    const DesubOutcome out = desubstitute(BoundedFactor{w, true, true});
    for (const auto& branch : out.branches) {
      if (!branch.forbidden_at) CHECK(branch.preimage.word.size() < w.size());
    }
  }
}
