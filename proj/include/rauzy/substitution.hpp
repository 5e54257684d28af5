#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rauzy/int_matrix.hpp"

namespace rauzy {

// Letters are 1-based.
using Word = std::vector<int>;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::vector<Word> images, std::vector<std::string> symbols = {});

  int size() const { return static_cast<int>(images_.size()); }
  const Word& image(int letter) const { return images_.at(letter - 1); }
  const std::vector<Word>& images() const { return images_; }
  const std::vector<std::string>& symbols() const { return symbols_; }

  Word apply(const Word& w) const;
  Word iterate(const Word& w, int times) const;

  friend bool operator==(const Substitution& a, const Substitution& b) {
    return a.images_ == b.images_ && a.symbols_ == b.symbols_;
  }

 private:
  std::vector<Word> images_;
  std::vector<std::string> symbols_;
};

Word word_from_string(std::string_view digits);
std::string word_to_string(const Word& w);

LatticePoint abelianize(const Word& w, int n);
IntMatrix incidence_matrix(const Substitution& s);
bool is_primitive(const IntMatrix& m);

struct Occurrence {
  int source;   // σ(source) = prefix · b · suffix
  Word prefix;
  Word suffix;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};
std::vector<Occurrence> occurrences(const Substitution& s, int b);

Word fixed_point_prefix(const Substitution& s, int seed, std::size_t length);

Substitution parse_substitution(std::string_view text);
std::string format_substitution(const Substitution& s);
Substitution load_substitution(const std::string& path);

namespace families {
// 1→1^{t+1}2, 2→3, 3→4, 4→1^t5, 5→1; t = 0 is the Hokkaido substitution.
Substitution sigma(int t);
Substitution tribonacci();
// 1→1^{t−1}2, 2→1^{t−1}3, 3→4, 4→1 (t ≥ 2); does not project well.
Substitution non_projecting(int t);
}  // namespace families

}  // namespace rauzy
