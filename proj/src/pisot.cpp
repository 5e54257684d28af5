#include "rauzy/pisot.hpp"

#include <algorithm>
#include <cmath>

namespace rauzy {

long double PisotData::contraction_upper() const {
  long double m = 0;
  for (std::size_t i = 1; i < conjugates.size(); ++i) m = std::max(m, conjugates[i].modulus_upper());
  return m;
}

namespace {

int rsign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

RationalInterval certify_real_root(const IntPolynomial& f, const RootBall& ball) {
  const long double c = ball.center.real();
  Rational lo = exact_rational(c - ball.radius);
  Rational hi = exact_rational(c + ball.radius);
  int slo = rsign(f.eval(lo));
  int shi = rsign(f.eval(hi));
  if (slo == 0) return {lo, lo};
  if (shi == 0) return {hi, hi};
  if (slo == shi) throw NotPisot("could not bracket the dominant real root");
  const Rational width = Rational(1) / Rational(BigInt(1) << 90);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    int sm = rsign(f.eval(mid));
    if (sm == 0) return {mid, mid};
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

}  // namespace

PisotData pisot_split(const Substitution& s) {
  const IntMatrix m = incidence_matrix(s);
  if (!is_primitive(m)) throw NotPisot("substitution is not primitive");
  PisotData pd;
  pd.charpoly = char_poly(m);
  const auto factors = factor_over_Q(pd.charpoly);

  // Locate the factor carrying the root of largest modulus.
  int best = -1;
  RootBall best_root;
  std::vector<std::vector<RootBall>> roots;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    roots.push_back(isolate_roots(factors[i].poly));
    for (const auto& r : roots.back())
      if (best < 0 || std::abs(r.center) > std::abs(best_root.center)) {
        best = static_cast<int>(i);
        best_root = r;
      }
  }
  if (best < 0) throw NotPisot("empty characteristic polynomial");
  // Dominance must be strict and certified against every other root.
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (const auto& r : roots[i]) {
      if (static_cast<int>(i) == best && r.center == best_root.center) continue;
      if (r.modulus_upper() >= best_root.modulus_lower())
        throw NotPisot("dominant root is not separated from another root");
    }
  if (factors[best].multiplicity != 1) throw NotPisot("dominant factor is repeated");
  if (!best_root.is_real() || best_root.center.real() - best_root.radius <= 1)
    throw NotPisot("dominant root is not a real number > 1");

  pd.f = factors[best].poly;
  pd.d = pd.f.degree();
  IntPolynomial g;
  divides(pd.f, pd.charpoly, &g);
  pd.g = g;
  pd.reducible = pd.g.degree() > 0;
  pd.unit = pd.f.coeff(0) == 1 || pd.f.coeff(0) == -1;

  std::vector<RootBall> reals, complexes;
  for (const auto& r : roots[best]) {
    if (r.center == best_root.center) continue;
    if (r.modulus_upper() >= 1) throw NotPisot("a conjugate of the dominant root has modulus >= 1");
    if (r.is_real())
      reals.push_back(r);
    else if (r.center.imag() > 0)
      complexes.push_back(r);
  }
  std::sort(reals.begin(), reals.end(),
            [](const RootBall& a, const RootBall& b) { return a.center.real() > b.center.real(); });
  std::sort(complexes.begin(), complexes.end(), [](const RootBall& a, const RootBall& b) {
    if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
    return a.center.imag() < b.center.imag();
  });
  pd.conjugates.push_back(best_root);
  pd.conjugates.insert(pd.conjugates.end(), reals.begin(), reals.end());
  pd.conjugates.insert(pd.conjugates.end(), complexes.begin(), complexes.end());
  pd.real_count = 1 + static_cast<int>(reals.size());
  pd.complex_pairs = static_cast<int>(complexes.size());
  pd.beta = certify_real_root(pd.f, best_root);

  std::vector<std::complex<long double>> centers;
  for (const auto& r : pd.conjugates) centers.push_back(r.center);
  pd.field = NumberField(pd.f, pd.beta, centers);
  return pd;
}

HypothesisReport check_hypothesis_N(const IntPolynomial& g) {
  if (g.degree() <= 0) return {true, "g = 1 (irreducible case)"};
  if (!g.is_monic()) return {false, "g is not monic"};
  if (g.coeff(0) != 1) return {false, "g(0) = " + g.coeff(0).str() + ", expected 1"};
  RatPolynomial common = gcd(RatPolynomial(g), RatPolynomial(g.derivative()));
  if (common.degree() > 0) return {false, "g has a repeated root"};
  for (const auto& fac : factor_over_Q(g)) {
    if (cyclotomic_order(fac.poly) == 0)
      return {false, "factor " + fac.poly.to_string() + " is not cyclotomic"};
  }
  return {true, "g squarefree, g(0) = 1, all factors cyclotomic"};
}

}  // namespace rauzy
