#include "rauzy/dual_maps.hpp"

#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace rauzy {

DualMapTables::DualMapTables(MapVariant variant, int n, int k, bool dual, IntMatrix linear)
    : variant_(variant), n_(n), k_(k), dual_(dual), linear_(std::move(linear)) {
  types_ = wedge_types(n, k);
  slot_.assign(1u << n, -1);
  for (std::size_t i = 0; i < types_.size(); ++i) slot_[types_[i].mask()] = static_cast<int>(i);
  images_.resize(types_.size());
}

const std::vector<MapTerm>& DualMapTables::image(WedgeType t) const {
  const int s = slot_.at(t.mask());
  if (s < 0) throw std::invalid_argument("face type of wrong dimension");
  return images_[s];
}

void DualMapTables::add_term(WedgeType t, MapTerm term) { images_[slot_.at(t.mask())].push_back(term); }

void DualMapTables::apply_face(const Face& f, std::int64_t coeff, Chain& out) const {
  const LatticePoint ax = linear_.apply(f.base);
  for (const auto& t : images_[slot_[f.type.mask()]]) out.add(Face{ax + t.offset, t.type}, coeff * t.sign);
}

Chain DualMapTables::apply(const Chain& c) const {
  if (c.k() != k_ || c.dual() != dual_ || c.n() != n_) throw std::invalid_argument("chain does not match map domain");
  Chain out(n_, k_, dual_);
  for (const auto& [f, coeff] : c.terms()) apply_face(f, coeff, out);
  return out;
}

Chain DualMapTables::apply_power(const Chain& c, int times) const {
  Chain cur = c;
  for (int i = 0; i < times; ++i) cur = apply(cur);
  return cur;
}

std::vector<TupleTerm> occurrence_tuples(const Substitution& s, WedgeType a) {
  const auto letters = a.letters();
  std::vector<TupleTerm> out;
  std::function<void(std::size_t, LatticePoint, LatticePoint, std::vector<int>&)> rec =
      [&](std::size_t i, LatticePoint pre, LatticePoint suf, std::vector<int>& chosen) {
        if (i == letters.size()) {
          out.push_back({pre, suf, wedge_normalize(chosen)});
          return;
        }
        const Word& img = s.image(letters[i]);
        for (std::size_t p = 0; p < img.size(); ++p) {
          LatticePoint pp = pre, ss = suf;
          for (std::size_t q = 0; q < p; ++q) ++pp[img[q] - 1];
          for (std::size_t q = p + 1; q < img.size(); ++q) ++ss[img[q] - 1];
          chosen.push_back(img[p]);
          rec(i + 1, pp, ss, chosen);
          chosen.pop_back();
        }
      };
  std::vector<int> chosen;
  rec(0, LatticePoint{}, LatticePoint{}, chosen);
  return out;
}

namespace {

IntMatrix inverse_or_throw(const Substitution& s) {
  auto inv = unimodular_inverse(incidence_matrix(s));
  if (!inv) throw InputError("substitution is not unimodular");
  return *inv;
}

}  // namespace

DualMapTables extension_map(const Substitution& s, int k) {
  const int n = s.size();
  DualMapTables map(MapVariant::Extension, n, k, false, incidence_matrix(s));
  for (WedgeType a : wedge_types(n, k))
    for (const auto& t : occurrence_tuples(s, a))
      if (!t.wedge.zero) map.add_term(a, {t.prefix_sum, t.wedge.type, t.wedge.sign});
  return map;
}

DualMapTables dual_map(const Substitution& s, int k) {
  const int n = s.size();
  const IntMatrix inv = inverse_or_throw(s);
  DualMapTables map(MapVariant::Dual, n, k, true, inv);
  // Transpose of the extension: (M⁻¹(x − l(p)), b)* for every occurrence tuple of b landing on a.
  for (WedgeType b : wedge_types(n, k))
    for (const auto& t : occurrence_tuples(s, b))
      if (!t.wedge.zero) map.add_term(t.wedge.type, {-inv.apply(t.prefix_sum), b, t.wedge.sign});
  return map;
}

DualMapTables geometric_map(const Substitution& s, int m) {
  const int n = s.size();
  const int k = n - m;
  const IntMatrix inv = inverse_or_throw(s);
  const DualMapTables star = dual_map(s, k);
  DualMapTables map(MapVariant::Geometric, n, m, false, inv);
  for (WedgeType c : wedge_types(n, m)) {
    // φ⁻¹(0, c) = s_a·(−e_a, a)*
    const WedgeType a = c.complement(n);
    const int sa = (a.letter_sum() % 2) ? -1 : 1;
    const LatticePoint shift = -inv.apply(a.indicator());
    for (const auto& t : star.image(a)) {
      // φ(y, b)* = s_b·(y + e_b, b^c)
      const int sb = (t.type.letter_sum() % 2) ? -1 : 1;
      map.add_term(c, {shift + t.offset + t.type.indicator(), t.type.complement(n), sa * sb * t.sign});
    }
  }
  return map;
}

DualMapTables geometric_map_closed_form(const Substitution& s, int m) {
  const int n = s.size();
  const int nbar = n - m;
  const IntMatrix inv = inverse_or_throw(s);
  DualMapTables map(MapVariant::Geometric, n, m, false, inv);
  for (WedgeType b : wedge_types(n, nbar))
    for (const auto& t : occurrence_tuples(s, b)) {
      if (t.wedge.zero) continue;
      const WedgeType a = t.wedge.type;
      const int sgn = t.wedge.sign * (((a.letter_sum() + b.letter_sum()) % 2) ? -1 : 1);
      map.add_term(a.complement(n), {inv.apply(t.suffix_sum), b.complement(n), sgn});
    }
  return map;
}

IntMatrix abelianization(const DualMapTables& map) {
  const auto& types = map.types();
  IntMatrix m(static_cast<int>(types.size()), static_cast<int>(types.size()));
  for (std::size_t col = 0; col < types.size(); ++col)
    for (const auto& t : map.image(types[col])) {
      const int row = wedge_index(map.n(), t.type);
      m(row, static_cast<int>(col)) += t.sign;
    }
  return m;
}

std::optional<std::vector<int>> diagonal_sign_conjugator(const IntMatrix& source, const IntMatrix& target) {
  const int n = source.rows();
  // Edge (a, b) carries the parity of target/source; colour classes give the signs.
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      const auto sv = source(b, a), tv = target(b, a);
      if (sv == 0 && tv == 0) continue;
      if (sv != tv && sv != -tv) return std::nullopt;
      const int rel = (sv == tv) ? 1 : -1;
      adj[a].push_back({b, rel});
      adj[b].push_back({a, rel});
    }
  std::vector<int> sign(n, 0);
  for (int start = 0; start < n; ++start) {
    if (sign[start]) continue;
    sign[start] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (auto [w, rel] : adj[v]) {
        const int want = sign[v] * rel;
        if (!sign[w]) {
          sign[w] = want;
          queue.push_back(w);
        } else if (sign[w] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return sign;
}

ExteriorMatrices exterior_matrices(const Substitution& s, int k) {
  const int n = s.size();
  if (n > kMaxLetters) throw InputError("alphabet too large for exterior matrices");
  const IntMatrix m = incidence_matrix(s);
  const auto types = wedge_types(n, k);
  const int sz = static_cast<int>(types.size());
  ExteriorMatrices out;
  out.exterior = IntMatrix(sz, sz);
  for (int r = 0; r < sz; ++r)
    for (int c = 0; c < sz; ++c) {
      std::vector<int> rows, cols;
      for (int a : types[r].letters()) rows.push_back(a - 1);
      for (int a : types[c].letters()) cols.push_back(a - 1);
      out.exterior(r, c) = static_cast<std::int64_t>(minor(m, rows, cols));
    }
  out.dual = out.exterior.transposed();

  out.geometric = IntMatrix(sz, sz);
  const DualMapTables geo = geometric_map(s, n - k);
  for (int col = 0; col < sz; ++col)
    for (const auto& t : geo.image(types[col].complement(n))) {
      const int row = wedge_index(n, t.type.complement(n));
      out.geometric(row, col) += t.sign;
    }

  out.sign_rule_holds = true;
  for (int b = 0; b < sz; ++b)
    for (int a = 0; a < sz; ++a) {
      const int sgn = ((types[a].letter_sum() + types[b].letter_sum()) % 2) ? -1 : 1;
      if (out.geometric(b, a) != sgn * out.dual(b, a)) out.sign_rule_holds = false;
    }
  out.conjugator = diagonal_sign_conjugator(out.geometric, out.dual);
  return out;
}

PositivityReport positivity_check_P(const Substitution& s, int nbar) {
  const int n = s.size();
  const DualMapTables star = dual_map(s, nbar);
  PositivityReport rep;
  rep.images_positive = true;
  for (WedgeType a : star.types()) {
    Chain img = star.apply(single_face(n, LatticePoint{}, a, 1, true));
    bool ok = true;
    for (const auto& [f, c] : img.terms())
      if (c < 0) ok = false;
    if (!ok) {
      rep.images_positive = false;
      rep.offending.push_back("(0," + a.to_string() + ")*");
    }
    const auto& raw = star.image(a);
    for (std::size_t i = 0; i < raw.size(); ++i)
      for (std::size_t j = 0; j < raw.size(); ++j)
        if (raw[i].type == raw[j].type && raw[i].sign > 0 && raw[j].sign < 0 && raw[i].offset != raw[j].offset)
          rep.bad_cancellations.push_back({a, raw[i], raw[j]});
  }
  const IntMatrix mstar = abelianization(star);
  rep.primitive = mstar.all_nonnegative() && is_primitive(mstar);
  rep.pass = rep.images_positive && rep.primitive;
  if (!rep.images_positive) {
    // Re-orienting type a by ε_a turns the term sign into ε_a·sign·ε_b.
    const auto& types = star.types();
    IntMatrix want(static_cast<int>(types.size()), static_cast<int>(types.size()));
    IntMatrix have(static_cast<int>(types.size()), static_cast<int>(types.size()));
    bool consistent = true;
    for (std::size_t col = 0; col < types.size(); ++col)
      for (const auto& t : star.image(types[col])) {
        const int row = wedge_index(n, t.type);
        if (have(row, static_cast<int>(col)) != 0 && have(row, static_cast<int>(col)) != t.sign) consistent = false;
        have(row, static_cast<int>(col)) = t.sign;
        want(row, static_cast<int>(col)) = 1;
      }
    if (consistent) rep.orientation = diagonal_sign_conjugator(have, want);
  }
  return rep;
}

bool commutation_check(const DualMapTables& top, const DualMapTables& below, const Chain& c) {
  if (c.empty()) return true;
  return boundary(top.apply(c)) == below.apply(boundary(c));
}

DualityReport duality_check(const Substitution& s, int k, int box) {
  const DualMapTables ext = extension_map(s, k), star = dual_map(s, k);
  const int n = s.size();
  std::vector<LatticePoint> points{LatticePoint{}};
  for (int i = 0; i < n; ++i) {
    std::vector<LatticePoint> next;
    for (const auto& p : points)
      for (int v = -box; v <= box; ++v) {
        LatticePoint q = p;
        q[i] = v;
        next.push_back(q);
      }
    points = std::move(next);
  }
  std::set<Face> basis;
  for (const auto& p : points)
    for (WedgeType t : ext.types()) basis.insert(Face{p, t});
  // (X, Y) ↦ value, restricted to X, Y in the box.
  std::map<std::pair<Face, Face>, std::int64_t> lhs, rhs;
  for (const Face& x : basis) {
    Chain img(n, k, true);
    star.apply_face(x, 1, img);
    for (const auto& [y, c] : img.terms())
      if (basis.count(y)) lhs[{x, y}] = c;
  }
  for (const Face& y : basis) {
    Chain img(n, k);
    ext.apply_face(y, 1, img);
    for (const auto& [x, c] : img.terms())
      if (basis.count(x)) rhs[{x, y}] = c;
  }
  DualityReport rep;
  rep.pairs = basis.size() * basis.size();
  rep.nonzero = lhs.size();
  for (const auto& [key, v] : lhs) {
    const auto it = rhs.find(key);
    if (it == rhs.end() || it->second != v) ++rep.violations;
  }
  for (const auto& [key, v] : rhs)
    if (!lhs.count(key)) ++rep.violations;
  return rep;
}

}  // namespace rauzy
