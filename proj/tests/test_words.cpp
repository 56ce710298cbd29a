#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "fibword/fibonacci.hpp"
#include "fibword/word.hpp"

using namespace fibword;

TEST_CASE("substitution application") {
  CHECK(theta().apply(Word::ab("a")).letters() == "ab");
  CHECK(theta().apply(Word::ab("")).letters() == "");
  CHECK(omega_substitution().apply(Word(Alphabet::dogleg(), "F")).letters() == "FLFRFRFLF");
  CHECK_THROWS_AS(theta().apply(Word(Alphabet::dogleg(), "F")), std::invalid_argument);
}

TEST_CASE("fibonacci word table") {
  const char* expected[] = {
      "a",
      "ab",
      "aba",
      "abaab",
      "abaababa",
      "abaababaabaab",
      "abaababaabaababaababa",
      "abaababaabaababaababaabaababaabaab",
  };
  for (int n = 0; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(fib_word(n).letters() == expected[n]);
  }
}

TEST_CASE("substitution and concatenation constructions agree") {
  for (int n = 0; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(fib_word(n) == fib_word_concat(n));
  }
  CHECK(fib_word_concat(1).letters() == "ab");
  CHECK(fib_word_concat(5).letters() == "abaababaabaab");
}

TEST_CASE("word stats follow the Fibonacci numbers") {
  CHECK(word_stats(fib_word(6)) == WordStats{13, 8, 21});
  CHECK(word_stats(Word::ab("")) == WordStats{0, 0, 0});
  CHECK(word_stats(fib_word(10)) == WordStats{89, 55, 144});
  for (int n = 1; n <= 25; ++n) {
    CAPTURE(n);
    const WordStats s = word_stats(fib_word(n));
    CHECK(s.count_a == fibonacci_number(n + 1));
    CHECK(s.count_b == fibonacci_number(n));
    CHECK(s.length == fibonacci_number(n + 2));
  }
}

TEST_CASE("endings alternate: ab for odd n, ba for even n") {
  for (int n = 1; n <= 20; ++n) {
    const std::string tail = fib_word(n).letters().substr(fib_word(n).size() - 2);
    CAPTURE(n);
    CHECK(tail == (n % 2 == 1 ? "ab" : "ba"));
  }
}

TEST_CASE("derived word constructors") {
  CHECK(trim_last_two(1).letters() == "");
  CHECK(trim_last_two(3).letters() == "aba");
  CHECK(trim_last_two(4).letters() == "abaaba");
  CHECK_THROWS_AS(trim_last_two(0), std::domain_error);

  CHECK(swap_last_two(1).letters() == "ba");
  CHECK(swap_last_two(2).letters() == "aab");
  CHECK(swap_last_two(3).letters() == "ababa");
  CHECK_THROWS_AS(swap_last_two(0), std::domain_error);

  CHECK(strip_leading_aba(2).letters() == "");
  CHECK(strip_leading_aba(3).letters() == "ab");
  CHECK(strip_leading_aba(5).letters() == "ababaabaab");
  CHECK_THROWS_AS(strip_leading_aba(1), std::domain_error);
}

TEST_CASE("palindromes") {
  CHECK(is_palindrome(Word::ab("abaaba")));
  CHECK(is_palindrome(Word::ab("")));
  CHECK(!is_palindrome(Word::ab("abaab")));
  for (int n = 1; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(is_palindrome(trim_last_two(n)));
  }
}

TEST_CASE("no forbidden factor in F_25") {
  const std::string& s = fib_word(25).letters();
  CHECK(s.find("bb") == std::string::npos);
  CHECK(s.find("aaa") == std::string::npos);
}

TEST_CASE("factor sets and complexity") {
  const std::set<Word> len3 = factor_set(12, 3);
  CHECK(len3 == std::set<Word>{Word::ab("aab"), Word::ab("aba"), Word::ab("baa"), Word::ab("bab")});
  CHECK(factor_set(12, 1) == std::set<Word>{Word::ab("a"), Word::ab("b")});
  for (int len = 1; len <= 12; ++len) {
    CAPTURE(len);
    CHECK(factor_set(14, len).size() == static_cast<std::size_t>(len) + 1);
  }
  CHECK_THROWS_AS(factor_set(3, 3), std::domain_error);
}

TEST_CASE("factor_set matches an independent substring enumeration") {
  // Brute-force oracle: hash every window of the same source prefix.
  const std::string& s = fib_word(12).letters();
  for (int len : {2, 5, 9}) {
    std::set<std::string> brute;
    for (std::size_t i = 0; i + len <= s.size(); ++i) brute.insert(s.substr(i, len));
    std::set<std::string> got;
    for (const Word& w : factor_set(12, len)) got.insert(w.letters());
    CAPTURE(len);
    CHECK(got == brute);
  }
}

TEST_CASE("repetitions: squares and cubes but no fourth powers") {
  const Word f12 = fib_word(12);
  const std::string& s12 = f12.letters();
  // The documented square and cube.
  const std::string square = "baababaa";
  const std::string cube = "baaba";
  CHECK(s12.find(square + square) != std::string::npos);
  CHECK(s12.find(cube + cube + cube) != std::string::npos);

  const PowerWitness w12 = max_power(f12, 8);
  CHECK(w12.exponent == 3);
  std::string tripled;
  for (int i = 0; i < 3; ++i) tripled += w12.block.letters();
  CHECK(s12.find(tripled) != std::string::npos);

  CHECK(max_power(Word::ab("aa"), 1).exponent == 2);
  CHECK(max_power(Word::ab("aa"), 1).block.letters() == "a");

  // Desk-scale check of the no-fourth-power claim.
  CHECK(max_power(fib_word(14), 60).exponent <= 3);
}

TEST_CASE("word basics") {
  CHECK((Word::ab("aba") + Word::ab("ab")).letters() == "abaab");
  CHECK(Word::ab("abaab").reversed().letters() == "baaba");
  CHECK_THROWS_AS(Word::ab("abc"), std::invalid_argument);
  CHECK(fibonacci_number(0) == 0);
  CHECK(fibonacci_number(12) == 144);
}
