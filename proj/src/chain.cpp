#include "rauzy/chain.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rauzy {

WedgeType WedgeType::from_letters(const std::vector<int>& letters) {
  std::uint16_t m = 0;
  for (int a : letters) {
    if (a < 1 || a > kMaxLetters) throw std::invalid_argument("wedge letter out of range");
    const auto bit = static_cast<std::uint16_t>(1u << (a - 1));
    if (m & bit) throw std::invalid_argument("repeated wedge letter");
    m |= bit;
  }
  return from_mask(m);
}

WedgeType WedgeType::parse(std::string_view text) {
  if (text == ".") return {};
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = std::min(text.find('^', pos), text.size());
    letters.push_back(std::stoi(std::string(text.substr(pos, next - pos))));
    pos = next + 1;
  }
  auto norm = wedge_normalize(letters);
  if (norm.zero || norm.sign != 1) throw std::invalid_argument("wedge type must be strictly increasing");
  return norm.type;
}

std::vector<int> WedgeType::letters() const {
  std::vector<int> out;
  for (int a = 1; a <= kMaxLetters; ++a)
    if (contains(a)) out.push_back(a);
  return out;
}

int WedgeType::letter_sum() const {
  int s = 0;
  for (int a = 1; a <= kMaxLetters; ++a)
    if (contains(a)) s += a;
  return s;
}

LatticePoint WedgeType::indicator() const {
  LatticePoint p{};
  for (int a = 1; a <= kMaxLetters; ++a)
    if (contains(a)) p[a - 1] = 1;
  return p;
}

std::string WedgeType::to_string(char sep) const {
  if (!mask_) return ".";
  std::string s;
  for (int a : letters()) {
    if (!s.empty()) s += sep;
    s += std::to_string(a);
  }
  return s;
}

NormalizedWedge wedge_normalize(const std::vector<int>& letters) {
  std::vector<int> v = letters;
  int sign = 1;
  // Insertion sort counts transpositions.
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] == v[i - 1]) return {};
  return {false, WedgeType::from_letters(v), sign};
}

std::vector<WedgeType> wedge_types(int n, int k) {
  std::vector<WedgeType> out;
  for (unsigned m = 0; m < (1u << n); ++m)
    if (__builtin_popcount(m) == k) out.push_back(WedgeType::from_mask(static_cast<std::uint16_t>(m)));
  std::sort(out.begin(), out.end());
  return out;
}

int wedge_index(int n, WedgeType t) {
  const auto all = wedge_types(n, t.size());
  return static_cast<int>(std::lower_bound(all.begin(), all.end(), t) - all.begin());
}

void Chain::add(const Face& f, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(f, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void Chain::add(const LatticePoint& base, const std::vector<int>& letters, std::int64_t coeff) {
  auto norm = wedge_normalize(letters);
  if (norm.zero) return;
  add(Face{base, norm.type}, coeff * norm.sign);
}

std::int64_t Chain::coeff(const Face& f) const {
  auto it = terms_.find(f);
  return it == terms_.end() ? 0 : it->second;
}

bool Chain::is_geometric() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second == 1 || t.second == -1; });
}

Chain& Chain::operator+=(const Chain& o) {
  for (const auto& [f, c] : o.terms_) add(f, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& o) {
  for (const auto& [f, c] : o.terms_) add(f, -c);
  return *this;
}

Chain operator*(std::int64_t c, const Chain& a) {
  Chain r(a.n_, a.k_, a.dual_);
  if (c == 0) return r;
  r.terms_ = a.terms_;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

std::string Chain::dump() const {
  std::string out;
  for (const auto& [f, c] : terms_) {
    out += std::to_string(c) + " " + to_string(f.base, n_) + " " + f.type.to_string();
    if (dual_) out += '*';
    out += '\n';
  }
  return out;
}

Chain single_face(int n, const LatticePoint& base, WedgeType type, std::int64_t coeff, bool dual) {
  Chain c(n, type.size(), dual);
  c.add(Face{base, type}, coeff);
  return c;
}

Chain parse_chain(std::string_view text, int n, int k, bool dual) {
  Chain c(n, k, dual);
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::int64_t coeff;
    std::string base, type;
    if (!(ls >> coeff >> base >> type)) throw std::invalid_argument("malformed chain line: " + line);
    if (!type.empty() && type.back() == '*') type.pop_back();
    if (base.size() < 2 || base.front() != '(' || base.back() != ')')
      throw std::invalid_argument("malformed base point: " + base);
    LatticePoint p{};
    std::istringstream bs(base.substr(1, base.size() - 2));
    std::string tok;
    int i = 0;
    while (std::getline(bs, tok, ',')) {
      if (i >= n) throw std::invalid_argument("base point has too many coordinates");
      p[i++] = std::stoll(tok);
    }
    if (i != n) throw std::invalid_argument("base point has too few coordinates");
    WedgeType t = WedgeType::parse(type);
    if (t.size() != k) throw std::invalid_argument("face dimension mismatch");
    c.add(Face{p, t}, coeff);
  }
  return c;
}

Chain boundary(const Chain& c) {
  if (c.k() < 1) throw std::invalid_argument("boundary of a 0-chain");
  Chain out(c.n(), c.k() - 1, c.dual());
  for (const auto& [f, coeff] : c.terms()) {
    const auto letters = f.type.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
      const std::int64_t s = (i % 2 == 0) ? -coeff : coeff;  // (−1)^i with 1-based i
      const WedgeType rest = f.type.without(letters[i]);
      out.add(Face{f.base, rest}, s);
      out.add(Face{f.base + unit_point(letters[i]), rest}, -s);
    }
  }
  return out;
}

Chain poincare_phi(const Chain& dual) {
  if (!dual.dual()) throw std::invalid_argument("poincare_phi expects a dual chain");
  Chain out(dual.n(), dual.n() - dual.k(), false);
  for (const auto& [f, coeff] : dual.terms()) {
    const std::int64_t s = (f.type.letter_sum() % 2) ? -coeff : coeff;
    out.add(Face{f.base + f.type.indicator(), f.type.complement(dual.n())}, s);
  }
  return out;
}

Chain poincare_phi_inv(const Chain& c) {
  if (c.dual()) throw std::invalid_argument("poincare_phi_inv expects a primal chain");
  Chain out(c.n(), c.n() - c.k(), true);
  for (const auto& [f, coeff] : c.terms()) {
    const WedgeType a = f.type.complement(c.n());
    const std::int64_t s = (a.letter_sum() % 2) ? -coeff : coeff;
    out.add(Face{f.base - a.indicator(), a}, s);
  }
  return out;
}

Chain coboundary(const Chain& dual) { return poincare_phi_inv(boundary(poincare_phi(dual))); }

std::vector<LatticePoint> support_vertices(const Face& f) {
  const auto letters = f.type.letters();
  std::vector<LatticePoint> out;
  for (unsigned s = 0; s < (1u << letters.size()); ++s) {
    LatticePoint p = f.base;
    for (std::size_t i = 0; i < letters.size(); ++i)
      if (s & (1u << i)) p[letters[i] - 1] += 1;
    out.push_back(p);
  }
  return out;
}

std::int64_t pairing(const Chain& dual, const Chain& c) {
  std::int64_t acc = 0;
  for (const auto& [f, coeff] : dual.terms()) acc += coeff * c.coeff(f);
  return acc;
}

}  // namespace rauzy
