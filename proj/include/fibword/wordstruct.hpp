#pragma once

#include <array>
#include <vector>

#include "fibword/word.hpp"

namespace fibword {

enum class CentralLetter { Empty, A, B };

// Central letter of the palindrome W_n; empty when n = 1 mod 3, a when
// n = 2 mod 3, b when n = 0 mod 3. Computed from the actual word.
CentralLetter central_letter(int n);

// Period of the Fibonacci sequence modulo m.
long long pisano_period(long long m);

struct Factorization {
  std::vector<Word> factors;
  Word remainder;
  Word concatenated() const;
};

// Greedy parse of a Fibonacci-word prefix into the factors aba and baaba:
// take baaba whenever the next letter is b, aba otherwise. The two
// factors differ in their first letter, so the parse is deterministic.
Factorization factorize_aba_baaba(const Word& prefix);

// Component indices of F_{3m} = F_{3m-2} F_{3m-5} ... F_4 F_3 F_4 ... F_{3m-2}.
std::vector<int> nested_embedding(int m);

enum class Digram { ab, aa, ba };
const char* digram_name(Digram d);

// Non-overlapping letter pairs, left to right. Odd length or a bb pair is
// an error.
std::vector<Digram> digram_pairs(const Word& w);

struct DigramFrequencies {
  long long count_ab = 0;
  long long count_aa = 0;
  long long count_ba = 0;
  long long pairs = 0;
  double freq_ab() const { return static_cast<double>(count_ab) / static_cast<double>(pairs); }
  double freq_aa() const { return static_cast<double>(count_aa) / static_cast<double>(pairs); }
  double freq_ba() const { return static_cast<double>(count_ba) / static_cast<double>(pairs); }
};

// Digram tallies of F_n; requires n = 1 mod 3 (even letter count).
DigramFrequencies digram_frequencies(int n);

// W_n = W_{n-3}(vu) W_{n-3}(vu) W_{n-6}(uv) W_{n-3}(uv) W_{n-3}, where uv
// is the two-letter ending of F_n. Defined for n >= 6; at n = 6 the middle
// part degenerates to F_0 = a with an empty joint after it.
struct Theorem31Parts {
  std::array<Word, 5> parts;
  std::array<Word, 4> joints;
  Word concatenated() const;
};
Theorem31Parts decompose_theorem31(int n);

struct LemmaChecks {
  bool t_recurrence = false;  // T_{n+1} == F_n T_{n-1}
  bool f_identity = false;    // F_n == F_{n-2} T_{n-1}
  bool t_identity = false;    // T_n == F_{n-2} F_{n-1}
  bool all() const { return t_recurrence && f_identity && t_identity; }
};
LemmaChecks check_lemma_32_33(int n);  // n >= 3

enum class Parity { Sustain, Reversal };
const char* parity_name(Parity p);

// Sustain when F_n has an even number of b (n = 0 mod 3), Reversal
// otherwise.
Parity direction_parity(int n);

// Net 1-D displacement of the to-and-fro trace of F_n as a multiple of
// phi, plus its direction parity. Closed forms cover n = 0, 1, 3, 4
// (mod 6); the remaining residues are evaluated by tracing (they come out
// at zero displacement).
struct DisplacementClass {
  int phi_units = 0;  // -1, 0 or +1
  Parity parity = Parity::Reversal;
  bool operator==(const DisplacementClass&) const = default;
};
DisplacementClass displacement_class(int n);

// Running 1-D displacement over the nested embedding of F_n, n = 3m.
struct TrackRow {
  int component_n = 0;
  int initial_direction = 1;   // +1 rightward, -1 leftward
  int relative_phi = 0;        // displacement relative to initial direction
  int final_direction = 1;
  long long running_phi = 0;   // accumulated absolute displacement
};
std::vector<TrackRow> track_components(int n);

}  // namespace fibword
