#pragma once

#include <set>
#include <string>

#include "fibword/word.hpp"

namespace fibword {

// Fibonacci numbers with Fib(0) = 0, Fib(1) = 1; the n-th Fibonacci word
// then has Fib(n+1) letters a, Fib(n) letters b and Fib(n+2) letters total.
long long fibonacci_number(int k);

// F_n = theta^n(a). Lengths grow as Fib(n+2); n is capped at 35 to keep
// the materialised word under ~25 MB.
Word fib_word(int n);

// F_n built by the concatenation recurrence F_n = F_{n-1} F_{n-2} with
// F_1 = ab, F_2 = aba (and F_0 = a).
Word fib_word_concat(int n);

struct WordStats {
  long long count_a = 0;
  long long count_b = 0;
  long long length = 0;
  bool operator==(const WordStats&) const = default;
};
WordStats word_stats(const Word& w);

// W_n: F_n with its final two letters removed. Requires n >= 1.
Word trim_last_two(int n);

// T_n: F_n with its final two letters exchanged. Requires n >= 1.
Word swap_last_two(int n);

// F*_n: F_n with its leading aba removed. Requires n >= 2.
Word strip_leading_aba(int n);

bool is_palindrome(const Word& w);

// Every distinct factor of the given length occurring in F_{n_source}.
// The source prefix must satisfy |F_{n_source}| >= max(200, 20*length);
// uniform recurrence makes that window sufficient.
std::set<Word> factor_set(int n_source, int length);

struct PowerWitness {
  Word block;
  int exponent = 0;
};

// A block of length <= max_block achieving the largest exponent k such
// that block^k occurs in prefix. Ties prefer shorter blocks, then the
// leftmost occurrence.
PowerWitness max_power(const Word& prefix, int max_block);

// Prefix of the infinite Fibonacci word with exactly `length` letters.
std::string fib_prefix(std::size_t length);

}  // namespace fibword
