#pragma once

#include <optional>
#include <set>
#include <vector>

#include "fibword/word.hpp"

namespace fibword {

// An alleged factor of the infinite Fibonacci word. An open end means the
// letters beyond it are unknown; a closed end asserts the boundary is
// exact, i.e. image boundaries of theta align with it during
// desubstitution.
struct BoundedFactor {
  Word word;
  bool left_open = true;
  bool right_open = true;
};

// Index of the first occurrence of bb or aaa, if any.
std::optional<std::size_t> scan_forbidden(const Word& w);

struct DesubBranch {
  BoundedFactor preimage;
  // Set when the preimage itself contains bb/aaa; such branches are dead.
  std::optional<std::size_t> forbidden_at;
};

struct DesubOutcome {
  std::vector<DesubBranch> branches;
  // A closed factor starting with b has no preimage at all: the image of
  // every letter starts with a.
  bool impossible_pairing = false;

  std::vector<BoundedFactor> viable() const;
  bool illegal() const;
};

// One round of inverse substitution. Interior rule: each "ab" came from a,
// each remaining "a" came from b. A left-open leading b pairs with an a
// just outside (forced, since every b is preceded by a), yielding preimage
// letter a. A right-open trailing unpaired a branches: whole image of b,
// or the head of a truncated "ab" image (in which case it is dropped).
// Precondition: scan_forbidden(f.word) is empty; callers screen first.
DesubOutcome desubstitute(const BoundedFactor& f);

struct LegalityReport {
  bool legal = false;
  // Number of desubstitution rounds performed before the verdict: for a
  // legal word, the depth at which a branch reached a known-legal base
  // word; for an illegal one, the depth at which the last branch died.
  int rounds = 0;
  std::optional<Word> base_witness;
};

LegalityReport check_legality(const BoundedFactor& f);
bool is_legal_factor(const BoundedFactor& f);

// The words of length <= 4 that occur in the Fibonacci word, generated
// from the substring oracle rather than typed in.
const std::set<Word>& short_legal_factors();

// Independent verdict: does w occur in the Fibonacci prefix of length
// max(200, 20*|w|)? Words longer than 5000 letters are rejected.
bool oracle_is_factor(const Word& w);

}  // namespace fibword
