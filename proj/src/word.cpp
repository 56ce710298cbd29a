#include "fibword/word.hpp"

#include <stdexcept>
#include <utility>

namespace fibword {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet must not be empty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_.find(symbols_[i], i + 1) != std::string::npos) {
      throw std::invalid_argument("alphabet has a repeated letter");
    }
  }
}

std::size_t Alphabet::index(char c) const {
  auto pos = symbols_.find(c);
  if (pos == std::string::npos) {
    throw std::invalid_argument(std::string("letter '") + c + "' is not in alphabet " + symbols_);
  }
  return pos;
}

const Alphabet& Alphabet::binary() {
  static const Alphabet a("ab");
  return a;
}

const Alphabet& Alphabet::dogleg() {
  static const Alphabet a("FLR");
  return a;
}

Word::Word(Alphabet alphabet, std::string letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (char c : letters_) {
    if (!alphabet_.contains(c)) {
      throw std::invalid_argument(std::string("letter '") + c + "' is not in alphabet " +
                                  std::string(alphabet_.symbols()));
    }
  }
}

Word Word::ab(std::string letters) { return Word(Alphabet::binary(), std::move(letters)); }

Word Word::operator+(const Word& o) const {
  if (!(alphabet_ == o.alphabet_)) throw std::invalid_argument("concatenation across alphabets");
  return Word(alphabet_, letters_ + o.letters_);
}

Word Word::substr(std::size_t pos, std::size_t count) const {
  return Word(alphabet_, letters_.substr(pos, count));
}

Word Word::reversed() const {
  return Word(alphabet_, std::string(letters_.rbegin(), letters_.rend()));
}

Substitution::Substitution(Alphabet alphabet, std::map<char, std::string> images, std::string name)
    : alphabet_(std::move(alphabet)), images_(std::move(images)), name_(std::move(name)) {
  for (char c : alphabet_.symbols()) {
    auto it = images_.find(c);
    if (it == images_.end() || it->second.empty()) {
      throw std::invalid_argument(std::string("substitution lacks a nonempty image for '") + c + "'");
    }
    for (char img : it->second) {
      if (!alphabet_.contains(img)) {
        throw std::invalid_argument(std::string("image letter '") + img + "' outside alphabet");
      }
    }
  }
  if (images_.size() != alphabet_.size()) {
    throw std::invalid_argument("substitution maps a letter outside its alphabet");
  }
}

const std::string& Substitution::image(char letter) const {
  auto it = images_.find(letter);
  if (it == images_.end()) {
    throw std::invalid_argument(std::string("letter '") + letter + "' is not in alphabet " +
                                std::string(alphabet_.symbols()));
  }
  return it->second;
}

Word Substitution::apply(const Word& w) const {
  if (!(w.alphabet() == alphabet_)) {
    throw std::invalid_argument("word alphabet does not match substitution alphabet");
  }
  std::string out;
  std::size_t total = 0;
  for (char c : w.letters()) total += image(c).size();
  out.reserve(total);
  for (char c : w.letters()) out += image(c);
  return Word(alphabet_, std::move(out));
}

Word Substitution::iterate(char seed, int n) const {
  if (n < 0) throw std::invalid_argument("iteration count must be non-negative");
  Word w(alphabet_, std::string(1, seed));
  for (int i = 0; i < n; ++i) w = apply(w);
  return w;
}

const Substitution& theta() {
  static const Substitution s(Alphabet::binary(), {{'a', "ab"}, {'b', "a"}}, "theta");
  return s;
}

const Substitution& omega_substitution() {
  static const Substitution s(Alphabet::dogleg(), {{'F', "FLFRFRFLF"}, {'L', "L"}, {'R', "R"}},
                              "omega");
  return s;
}

Word fixed_point_prefix(const Substitution& subst, char seed, std::size_t length) {
  const std::string& seed_image = subst.image(seed);
  if (seed_image.empty() || seed_image[0] != seed) {
    throw std::invalid_argument("seed image must start with the seed letter");
  }
  Word w(subst.alphabet(), std::string(1, seed));
  while (w.size() < length) {
    Word next = subst.apply(w);
    if (next.size() == w.size()) throw std::invalid_argument("substitution does not expand the seed");
    w = std::move(next);
  }
  return w.substr(0, length);
}

}  // namespace fibword
