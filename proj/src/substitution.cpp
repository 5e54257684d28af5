#include "rauzy/substitution.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace rauzy {

Substitution::Substitution(std::vector<Word> images, std::vector<std::string> symbols)
    : images_(std::move(images)), symbols_(std::move(symbols)) {
  const int n = size();
  if (n == 0 || n > kMaxLetters) throw InputError("alphabet size must be in 1.." + std::to_string(kMaxLetters));
  for (const auto& w : images_) {
    if (w.empty()) throw InputError("image words must be nonempty");
    for (int a : w)
      if (a < 1 || a > n) throw InputError("letter out of range in image");
  }
  if (symbols_.empty())
    for (int a = 1; a <= n; ++a) symbols_.push_back(std::to_string(a));
  if (static_cast<int>(symbols_.size()) != n) throw InputError("symbol table size mismatch");
}

Word Substitution::apply(const Word& w) const {
  Word out;
  for (int a : w) {
    const Word& img = image(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Word Substitution::iterate(const Word& w, int times) const {
  Word cur = w;
  for (int i = 0; i < times; ++i) cur = apply(cur);
  return cur;
}

Word word_from_string(std::string_view digits) {
  Word w;
  for (char c : digits) {
    if (c < '1' || c > '9') throw InputError("word letters must be digits 1-9");
    w.push_back(c - '0');
  }
  return w;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (int a : w) s += std::to_string(a);
  return s;
}

LatticePoint abelianize(const Word& w, int n) {
  LatticePoint v{};
  for (int a : w) {
    if (a < 1 || a > n) throw InputError("letter out of range");
    ++v[a - 1];
  }
  return v;
}

IntMatrix incidence_matrix(const Substitution& s) {
  const int n = s.size();
  IntMatrix m(n, n);
  for (int a = 1; a <= n; ++a)
    for (int b : s.image(a)) ++m(b - 1, a - 1);
  return m;
}

bool is_primitive(const IntMatrix& m) {
  const int n = m.rows();
  if (n == 0) return false;
  // Boolean powers up to the Wielandt exponent.
  IntMatrix pattern(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) pattern(r, c) = m(r, c) > 0;
  IntMatrix power = pattern;
  const int bound = n * n - 2 * n + 2;
  for (int k = 1; k <= bound; ++k) {
    if (power.all_positive()) return true;
    IntMatrix next = power * pattern;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) next(r, c) = next(r, c) > 0;
    power = next;
  }
  return false;
}

std::vector<Occurrence> occurrences(const Substitution& s, int b) {
  std::vector<Occurrence> out;
  for (int a = 1; a <= s.size(); ++a) {
    const Word& img = s.image(a);
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (img[i] != b) continue;
      out.push_back({a, Word(img.begin(), img.begin() + static_cast<std::ptrdiff_t>(i)),
                     Word(img.begin() + static_cast<std::ptrdiff_t>(i) + 1, img.end())});
    }
  }
  return out;
}

Word fixed_point_prefix(const Substitution& s, int seed, std::size_t length) {
  if (s.image(seed).front() != seed) throw InputError("seed letter does not start its own image");
  if (length == 0) return {};
  Word w{seed};
  while (w.size() < length) {
    Word next = s.apply(w);
    if (next.size() == w.size()) break;  // σ(seed) = seed: the fixed point is finite
    w = std::move(next);
  }
  if (w.size() < length) throw InputError("fixed point is shorter than requested length");
  w.resize(length);
  return w;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Substitution parse_substitution(std::string_view text) {
  std::vector<std::string> symbols;
  std::vector<std::vector<std::string>> raw_images;
  std::vector<int> raw_lines;
  std::map<std::string, int> index;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() < 3 || tokens[1] != "->") throw ParseError(lineno, "expected 'a -> w1 w2 ...'");
    if (index.count(tokens[0])) throw ParseError(lineno, "duplicate rule for symbol '" + tokens[0] + "'");
    index[tokens[0]] = static_cast<int>(symbols.size()) + 1;
    symbols.push_back(tokens[0]);
    raw_images.emplace_back(tokens.begin() + 2, tokens.end());
    raw_lines.push_back(lineno);
  }
  if (symbols.empty()) throw ParseError(lineno, "no rules found");
  if (static_cast<int>(symbols.size()) > kMaxLetters)
    throw ParseError(lineno, "alphabet exceeds " + std::to_string(kMaxLetters) + " letters");
  std::vector<Word> images;
  for (std::size_t i = 0; i < raw_images.size(); ++i) {
    Word w;
    for (const auto& tok : raw_images[i]) {
      auto it = index.find(tok);
      if (it == index.end()) throw ParseError(raw_lines[i], "symbol '" + tok + "' has no rule");
      w.push_back(it->second);
    }
    images.push_back(std::move(w));
  }
  return Substitution(std::move(images), std::move(symbols));
}

std::string format_substitution(const Substitution& s) {
  std::string out;
  for (int a = 1; a <= s.size(); ++a) {
    out += s.symbols()[a - 1] + " ->";
    for (int b : s.image(a)) out += " " + s.symbols()[b - 1];
    out += '\n';
  }
  return out;
}

Substitution load_substitution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open substitution file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_substitution(buf.str());
}

namespace families {

Substitution sigma(int t) {
  if (t < 0) throw InputError("family parameter must be nonnegative");
  Word one(static_cast<std::size_t>(t) + 1, 1);
  one.push_back(2);
  Word four(static_cast<std::size_t>(t), 1);
  four.push_back(5);
  return Substitution({one, {3}, {4}, four, {1}});
}

Substitution tribonacci() { return Substitution({{1, 2}, {1, 3}, {1}}); }

Substitution non_projecting(int t) {
  if (t < 2) throw InputError("family parameter must be at least 2");
  Word one(static_cast<std::size_t>(t) - 1, 1);
  Word two = one;
  one.push_back(2);
  two.push_back(3);
  return Substitution({one, two, {4}, {1}});
}

}  // namespace families

}  // namespace rauzy
