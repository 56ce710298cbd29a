#include "fibword/legality.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fibword/fibonacci.hpp"

namespace fibword {

namespace {
constexpr std::size_t kOracleCap = 5000;
constexpr std::size_t kBaseLength = 4;

const std::string& cached_prefix() {
  // Long enough for the largest admissible oracle window (20 * 5000).
  static const std::string prefix = fib_prefix(100000);
  return prefix;
}
}  // namespace

std::optional<std::size_t> scan_forbidden(const Word& w) {
  const std::string& s = w.letters();
  std::optional<std::size_t> bb;
  std::optional<std::size_t> aaa;
  auto p = s.find("bb");
  if (p != std::string::npos) bb = p;
  p = s.find("aaa");
  if (p != std::string::npos) aaa = p;
  if (bb && aaa) return std::min(*bb, *aaa);
  return bb ? bb : aaa;
}

std::vector<BoundedFactor> DesubOutcome::viable() const {
  std::vector<BoundedFactor> out;
  for (const auto& b : branches) {
    if (!b.forbidden_at) out.push_back(b.preimage);
  }
  return out;
}

bool DesubOutcome::illegal() const { return impossible_pairing || viable().empty(); }

DesubOutcome desubstitute(const BoundedFactor& f) {
  if (!(f.word.alphabet() == Alphabet::binary())) {
    throw std::invalid_argument("desubstitute expects a word over {a, b}");
  }
  if (scan_forbidden(f.word)) {
    throw std::invalid_argument("desubstitute input must be screened for bb/aaa first");
  }
  const std::string& s = f.word.letters();
  DesubOutcome out;

  std::string prefix;
  std::size_t i = 0;
  bool trailing_unpaired_a = false;

  if (!s.empty() && s[0] == 'b') {
    if (!f.left_open) {
      out.impossible_pairing = true;
      return out;
    }
    prefix += 'a';  // partner a lies just outside the factor
    i = 1;
  }
  while (i < s.size()) {
    // After bb screening every remaining letter here is an a.
    if (i + 1 < s.size() && s[i + 1] == 'b') {
      prefix += 'a';
      i += 2;
    } else if (i + 1 < s.size()) {
      prefix += 'b';
      i += 1;
    } else {
      trailing_unpaired_a = true;
      i += 1;
    }
  }

  std::vector<std::string> raw;
  if (trailing_unpaired_a) {
    raw.push_back(prefix + 'b');               // the a was a whole image of b
    if (f.right_open) raw.push_back(prefix);   // head of a truncated ab image
  } else {
    raw.push_back(prefix);
  }

  for (auto& r : raw) {
    DesubBranch branch;
    branch.preimage = BoundedFactor{Word::ab(std::move(r)), f.left_open, f.right_open};
    branch.forbidden_at = scan_forbidden(branch.preimage.word);
    out.branches.push_back(std::move(branch));
  }
  return out;
}

const std::set<Word>& short_legal_factors() {
  static const std::set<Word> table = [] {
    std::set<Word> t;
    t.insert(Word::ab(""));
    std::vector<std::string> level = {""};
    for (std::size_t len = 1; len <= kBaseLength; ++len) {
      std::vector<std::string> next;
      for (const auto& w : level) {
        for (char c : {'a', 'b'}) {
          std::string cand = w + c;
          if (oracle_is_factor(Word::ab(cand))) {
            t.insert(Word::ab(cand));
            next.push_back(std::move(cand));
          }
        }
      }
      level = std::move(next);
    }
    return t;
  }();
  return table;
}

LegalityReport check_legality(const BoundedFactor& f) {
  LegalityReport report;
  std::vector<BoundedFactor> level = {f};
  int rounds = 0;
  while (!level.empty()) {
    std::vector<BoundedFactor> next;
    std::set<Word> seen;
    bool desubstituted = false;
    for (const auto& g : level) {
      if (scan_forbidden(g.word)) continue;
      if (g.word.size() <= kBaseLength) {
        if (short_legal_factors().count(g.word)) {
          report.legal = true;
          report.rounds = rounds;
          report.base_witness = g.word;
          return report;
        }
        continue;
      }
      DesubOutcome out = desubstitute(g);
      desubstituted = true;
      for (auto& branch : out.viable()) {
        if (seen.insert(branch.word).second) next.push_back(std::move(branch));
      }
    }
    if (desubstituted) ++rounds;
    level = std::move(next);
  }
  report.legal = false;
  report.rounds = rounds;
  return report;
}

bool is_legal_factor(const BoundedFactor& f) { return check_legality(f).legal; }

bool oracle_is_factor(const Word& w) {
  if (!(w.alphabet() == Alphabet::binary())) {
    throw std::invalid_argument("oracle_is_factor expects a word over {a, b}");
  }
  if (w.size() > kOracleCap) {
    throw std::length_error("oracle_is_factor is capped at words of 5000 letters");
  }
  const std::size_t window = std::max<std::size_t>(200, 20 * w.size());
  std::string_view prefix(cached_prefix());
  prefix = prefix.substr(0, window);
  return prefix.find(w.letters()) != std::string_view::npos;
}

}  // namespace fibword
