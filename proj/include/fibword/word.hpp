#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

namespace fibword {

// A finite set of single-character letters, e.g. "ab" or "FLR".
class Alphabet {
 public:
  explicit Alphabet(std::string symbols);

  bool contains(char c) const { return symbols_.find(c) != std::string::npos; }
  std::size_t index(char c) const;
  std::size_t size() const { return symbols_.size(); }
  char letter(std::size_t i) const { return symbols_.at(i); }
  std::string_view symbols() const { return symbols_; }

  bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

  static const Alphabet& binary();  // {a, b}
  static const Alphabet& dogleg();  // {F, L, R}

 private:
  std::string symbols_;
};

// Immutable letter sequence over one alphabet. Equality is letterwise;
// concatenation requires matching alphabets.
class Word {
 public:
  Word() : alphabet_(Alphabet::binary()) {}
  Word(Alphabet alphabet, std::string letters);

  static Word ab(std::string letters);  // word over {a, b}

  const Alphabet& alphabet() const { return alphabet_; }
  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }

  Word operator+(const Word& o) const;
  Word substr(std::size_t pos, std::size_t count = std::string::npos) const;
  Word reversed() const;

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return letters_ != o.letters_; }
  bool operator<(const Word& o) const { return letters_ < o.letters_; }

 private:
  Alphabet alphabet_;
  std::string letters_;
};

// Letter -> nonempty word map over a fixed alphabet.
class Substitution {
 public:
  Substitution(Alphabet alphabet, std::map<char, std::string> images, std::string name);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::string& name() const { return name_; }
  const std::string& image(char letter) const;
  const std::map<char, std::string>& images() const { return images_; }

  Word apply(const Word& w) const;
  Word iterate(char seed, int n) const;

 private:
  Alphabet alphabet_;
  std::map<char, std::string> images_;
  std::string name_;
};

// a -> ab, b -> a.
const Substitution& theta();

// F -> FLFRFRFLF, L -> L, R -> R (the square-bump curve system).
const Substitution& omega_substitution();

// Prefix of the iterative fixed point of subst starting from seed.
// Requires image(seed) to start with seed.
Word fixed_point_prefix(const Substitution& subst, char seed, std::size_t length);

}  // namespace fibword
