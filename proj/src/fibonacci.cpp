#include "fibword/fibonacci.hpp"

#include <algorithm>
#include <stdexcept>

namespace fibword {

namespace {
constexpr int kMaxWordIndex = 35;

void check_index(int n, int min_allowed, const char* what) {
  if (n < min_allowed) {
    throw std::domain_error(std::string(what) + " requires n >= " + std::to_string(min_allowed) +
                            ", got " + std::to_string(n));
  }
  if (n > kMaxWordIndex) {
    throw std::length_error(std::string(what) + " capped at n <= " + std::to_string(kMaxWordIndex));
  }
}
}  // namespace

long long fibonacci_number(int k) {
  if (k < 0 || k > 90) throw std::domain_error("fibonacci_number supports 0 <= k <= 90");
  long long a = 0, b = 1;
  for (int i = 0; i < k; ++i) {
    long long next = a + b;
    a = b;
    b = next;
  }
  return a;
}

Word fib_word(int n) {
  check_index(n, 0, "fib_word");
  return theta().iterate('a', n);
}

Word fib_word_concat(int n) {
  check_index(n, 0, "fib_word_concat");
  if (n == 0) return Word::ab("a");
  if (n == 1) return Word::ab("ab");
  Word prev = Word::ab("ab");   // F_1
  Word curr = Word::ab("aba");  // F_2
  for (int i = 3; i <= n; ++i) {
    Word next = curr + prev;
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

WordStats word_stats(const Word& w) {
  if (!(w.alphabet() == Alphabet::binary())) {
    throw std::invalid_argument("word_stats expects a word over {a, b}");
  }
  WordStats s;
  for (char c : w.letters()) {
    if (c == 'a') ++s.count_a;
    else ++s.count_b;
  }
  s.length = static_cast<long long>(w.size());
  return s;
}

Word trim_last_two(int n) {
  check_index(n, 1, "trim_last_two");
  Word f = fib_word(n);
  return f.substr(0, f.size() - 2);
}

Word swap_last_two(int n) {
  check_index(n, 1, "swap_last_two");
  Word f = fib_word(n);
  std::string s = f.letters();
  std::swap(s[s.size() - 1], s[s.size() - 2]);
  return Word::ab(std::move(s));
}

Word strip_leading_aba(int n) {
  if (n < 2) throw std::domain_error("strip_leading_aba requires n >= 2 (no aba prefix below F_2)");
  check_index(n, 2, "strip_leading_aba");
  Word f = fib_word(n);
  return f.substr(3);
}

bool is_palindrome(const Word& w) {
  const std::string& s = w.letters();
  return std::equal(s.begin(), s.begin() + static_cast<long>(s.size() / 2), s.rbegin());
}

std::set<Word> factor_set(int n_source, int length) {
  if (length < 1) throw std::domain_error("factor_set requires length >= 1");
  check_index(n_source, 0, "factor_set");
  Word source = fib_word(n_source);
  const std::size_t needed = std::max<std::size_t>(200, 20u * static_cast<std::size_t>(length));
  if (source.size() < needed) {
    throw std::domain_error("factor_set context too short: need |F_n| >= " + std::to_string(needed));
  }
  std::set<Word> out;
  const std::string& s = source.letters();
  for (std::size_t i = 0; i + length <= s.size(); ++i) {
    out.insert(Word::ab(s.substr(i, length)));
  }
  return out;
}

PowerWitness max_power(const Word& prefix, int max_block) {
  if (max_block < 1) throw std::domain_error("max_power requires max_block >= 1");
  const std::string& s = prefix.letters();
  PowerWitness best;
  best.exponent = 0;
  for (int b = 1; b <= max_block && static_cast<std::size_t>(b) <= s.size(); ++b) {
    for (std::size_t i = 0; i + b <= s.size(); ++i) {
      int k = 1;
      std::size_t j = i + b;
      while (j + b <= s.size() && s.compare(j, b, s, i, b) == 0) {
        ++k;
        j += b;
      }
      if (k > best.exponent) {
        best.exponent = k;
        best.block = prefix.substr(i, b);
      }
    }
  }
  return best;
}

std::string fib_prefix(std::size_t length) {
  return fixed_point_prefix(theta(), 'a', length).letters();
}

}  // namespace fibword
