#include "fibword/wordstruct.hpp"

#include <stdexcept>
#include <string>

#include "fibword/fibonacci.hpp"
#include "fibword/turtle.hpp"

namespace fibword {

CentralLetter central_letter(int n) {
  const Word w = trim_last_two(n);
  if (w.size() % 2 == 0) {
    // Palindromes of even length have no central letter; this is the
    // n = 1 (mod 3) case.
    return CentralLetter::Empty;
  }
  const char c = w[w.size() / 2];
  return c == 'a' ? CentralLetter::A : CentralLetter::B;
}

long long pisano_period(long long m) {
  if (m < 1) throw std::domain_error("pisano_period requires m >= 1");
  if (m == 1) return 1;
  long long a = 0, b = 1;
  for (long long period = 1;; ++period) {
    const long long next = (a + b) % m;
    a = b;
    b = next;
    if (a == 0 && b == 1) return period;
  }
}

Word Factorization::concatenated() const {
  Word out = Word::ab("");
  for (const auto& f : factors) out = out + f;
  return out + remainder;
}

Factorization factorize_aba_baaba(const Word& prefix) {
  const std::string& s = prefix.letters();
  Factorization result;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s.compare(i, 5, "baaba") == 0) {
      result.factors.push_back(Word::ab("baaba"));
      i += 5;
    } else if (s.compare(i, 3, "aba") == 0) {
      result.factors.push_back(Word::ab("aba"));
      i += 3;
    } else if (s.size() - i >= 5) {
      throw std::domain_error("not a Fibonacci prefix: no aba/baaba factor at position " +
                              std::to_string(i));
    } else {
      break;
    }
  }
  result.remainder = prefix.substr(i);
  return result;
}

std::vector<int> nested_embedding(int m) {
  if (m < 1) throw std::domain_error("nested_embedding requires m >= 1");
  std::vector<int> out;
  for (int k = 3 * m - 2; k >= 4; k -= 3) out.push_back(k);
  out.push_back(3);
  for (int k = 4; k <= 3 * m - 2; k += 3) out.push_back(k);
  return out;
}

const char* digram_name(Digram d) {
  switch (d) {
    case Digram::ab: return "ab";
    case Digram::aa: return "aa";
    case Digram::ba: return "ba";
  }
  return "?";
}

std::vector<Digram> digram_pairs(const Word& w) {
  const std::string& s = w.letters();
  if (s.size() % 2 != 0) {
    throw std::domain_error("digram pairing needs an even number of letters, got " +
                            std::to_string(s.size()));
  }
  std::vector<Digram> out;
  out.reserve(s.size() / 2);
  for (std::size_t i = 0; i < s.size(); i += 2) {
    const char x = s[i], y = s[i + 1];
    if (x == 'a' && y == 'b') out.push_back(Digram::ab);
    else if (x == 'a' && y == 'a') out.push_back(Digram::aa);
    else if (x == 'b' && y == 'a') out.push_back(Digram::ba);
    else throw std::domain_error("illegal digram bb at position " + std::to_string(i));
  }
  return out;
}

DigramFrequencies digram_frequencies(int n) {
  if (n % 3 != 1) {
    throw std::domain_error("digram frequencies need n = 1 (mod 3) for an even letter count");
  }
  DigramFrequencies f;
  for (Digram d : digram_pairs(fib_word(n))) {
    switch (d) {
      case Digram::ab: ++f.count_ab; break;
      case Digram::aa: ++f.count_aa; break;
      case Digram::ba: ++f.count_ba; break;
    }
  }
  f.pairs = f.count_ab + f.count_aa + f.count_ba;
  return f;
}

Word Theorem31Parts::concatenated() const {
  Word out = Word::ab("");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out = out + parts[i];
    if (i < joints.size()) out = out + joints[i];
  }
  return out;
}

Theorem31Parts decompose_theorem31(int n) {
  if (n < 6) throw std::domain_error("decompose_theorem31 requires n >= 6");
  const Word f_n = fib_word(n);
  const std::string uv = f_n.letters().substr(f_n.size() - 2);
  const std::string vu{uv[1], uv[0]};

  const Word side = trim_last_two(n - 3);
  Theorem31Parts t;
  t.parts[0] = side;
  t.parts[1] = side;
  t.parts[3] = side;
  t.parts[4] = side;
  t.joints[0] = Word::ab(vu);
  t.joints[1] = Word::ab(vu);
  t.joints[3] = Word::ab(uv);
  if (n == 6) {
    // W_0 does not exist; the middle collapses to F_0 = a with no joint.
    t.parts[2] = Word::ab("a");
    t.joints[2] = Word::ab("");
  } else {
    t.parts[2] = trim_last_two(n - 6);
    t.joints[2] = Word::ab(uv);
  }
  return t;
}

LemmaChecks check_lemma_32_33(int n) {
  if (n < 3) throw std::domain_error("check_lemma_32_33 requires n >= 3");
  LemmaChecks c;
  c.t_recurrence = swap_last_two(n + 1) == fib_word(n) + swap_last_two(n - 1);
  c.f_identity = fib_word(n) == fib_word(n - 2) + swap_last_two(n - 1);
  c.t_identity = swap_last_two(n) == fib_word(n - 2) + fib_word(n - 1);
  return c;
}

const char* parity_name(Parity p) { return p == Parity::Sustain ? "Sustain" : "Reversal"; }

Parity direction_parity(int n) {
  if (n < 1) throw std::domain_error("direction_parity requires n >= 1");
  // F_n contains Fib(n) letters b; Fib(n) is even exactly when 3 | n.
  return n % 3 == 0 ? Parity::Sustain : Parity::Reversal;
}

DisplacementClass displacement_class(int n) {
  if (n < 1) throw std::domain_error("displacement_class requires n >= 1");
  switch (n % 6) {
    case 0: return {+1, Parity::Sustain};
    case 1: return {+1, Parity::Reversal};
    case 3: return {-1, Parity::Sustain};
    case 4: return {-1, Parity::Reversal};
    default: break;
  }
  // No closed form for n = 2, 5 (mod 6); trace the word.
  const Trace1D t = trace_1d(fib_word(n));
  const Golden pos = t.final_position();
  int units = 0;
  if (pos == Golden::phi()) units = 1;
  else if (pos == -Golden::phi()) units = -1;
  else if (!pos.is_zero()) throw std::logic_error("unexpected 1-D displacement magnitude");
  return {units, t.final_direction == 1 ? Parity::Sustain : Parity::Reversal};
}

std::vector<TrackRow> track_components(int n) {
  if (n < 3 || n % 3 != 0) throw std::domain_error("track_components requires n = 3m, m >= 1");
  std::vector<TrackRow> rows;
  int direction = 1;
  long long running = 0;
  for (int component : nested_embedding(n / 3)) {
    const DisplacementClass cls = displacement_class(component);
    TrackRow row;
    row.component_n = component;
    row.initial_direction = direction;
    row.relative_phi = cls.phi_units;
    running += static_cast<long long>(direction) * cls.phi_units;
    row.running_phi = running;
    if (cls.parity == Parity::Reversal) direction = -direction;
    row.final_direction = direction;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fibword
