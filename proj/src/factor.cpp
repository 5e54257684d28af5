#include "rauzy/factor.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace rauzy {

std::vector<PolynomialFactor> squarefree_decomposition(const IntPolynomial& p) {
  std::vector<PolynomialFactor> out;
  if (p.degree() < 1) return out;
  RatPolynomial f(p);
  RatPolynomial df(p.derivative());
  RatPolynomial a = gcd(f, df);
  RatPolynomial b = f.divmod(a).first;
  RatPolynomial c = df.divmod(a).first;
  auto deriv = [](const RatPolynomial& q) {
    std::vector<Rational> v;
    for (int i = 1; i <= q.degree(); ++i) v.push_back(q.coeff(i) * i);
    return RatPolynomial(std::move(v));
  };
  RatPolynomial d = c - deriv(b);
  int i = 1;
  while (b.degree() > 0) {
    RatPolynomial g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g.to_primitive(), i});
    b = b.divmod(g).first;
    c = d.divmod(g).first;
    d = c - deriv(b);
    ++i;
  }
  return out;
}

namespace {

std::vector<BigInt> positive_divisors(BigInt v) {
  if (v < 0) v = -v;
  std::vector<BigInt> small, large;
  for (BigInt k = 1; k * k <= v; ++k) {
    if (v % k == 0) {
      small.push_back(k);
      if (k * k != v) large.push_back(v / k);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Monic h of degree k with h(xs[i]) = values[i], if the interpolant is integral.
std::optional<IntPolynomial> monic_interpolant(const std::vector<BigInt>& xs, const std::vector<BigInt>& values) {
  const int k = static_cast<int>(xs.size());
  RatPolynomial rest;
  for (int i = 0; i < k; ++i) {
    Rational target = Rational(values[i]) - Rational(boost::multiprecision::pow(xs[i], k));
    RatPolynomial basis(std::vector<Rational>{Rational(1)});
    Rational denom = 1;
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      basis = basis * RatPolynomial(std::vector<Rational>{Rational(-xs[j]), Rational(1)});
      denom *= Rational(xs[i] - xs[j]);
    }
    std::vector<Rational> scaled;
    for (const auto& c : basis.coeffs()) scaled.push_back(c * target / denom);
    rest = rest + RatPolynomial(std::move(scaled));
  }
  std::vector<BigInt> coeffs(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i < k; ++i) {
    const Rational c = rest.coeff(i);
    if (denominator(c) != 1) return std::nullopt;
    coeffs[i] = numerator(c);
  }
  coeffs[k] = 1;
  return IntPolynomial(std::move(coeffs));
}

// Kronecker search for a monic factor of degree k of the monic polynomial p.
std::optional<IntPolynomial> factor_of_degree(const IntPolynomial& p, int k) {
  struct Point {
    BigInt x;
    std::vector<BigInt> divisors;
  };
  std::vector<Point> candidates;
  for (long long x = -40; x <= 40; ++x) {
    BigInt v = p.eval(BigInt(x));
    if (v == 0) continue;
    BigInt mag = v < 0 ? BigInt(-v) : v;
    if (mag > BigInt(1000000000000LL)) continue;
    candidates.push_back({BigInt(x), positive_divisors(mag)});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Point& a, const Point& b) { return a.divisors.size() < b.divisors.size(); });
  if (static_cast<int>(candidates.size()) < k) return std::nullopt;
  candidates.resize(k);
  std::vector<BigInt> xs, values(k);
  for (const auto& c : candidates) xs.push_back(c.x);
  std::optional<IntPolynomial> found;
  std::function<void(int)> choose = [&](int i) {
    if (found) return;
    if (i == k) {
      auto h = monic_interpolant(xs, values);
      if (h && h->degree() == k && divides(*h, p)) found = h;
      return;
    }
    for (const auto& dv : candidates[i].divisors) {
      for (int sgn : {1, -1}) {
        values[i] = sgn * dv;
        choose(i + 1);
        if (found) return;
      }
    }
  };
  choose(0);
  return found;
}

void split_squarefree_monic(const IntPolynomial& p, std::vector<IntPolynomial>& out) {
  if (p.degree() <= 1) {
    if (p.degree() == 1) out.push_back(p);
    return;
  }
  for (int k = 1; k <= p.degree() / 2; ++k) {
    if (auto h = factor_of_degree(p, k)) {
      IntPolynomial q;
      divides(*h, p, &q);
      split_squarefree_monic(*h, out);
      split_squarefree_monic(q, out);
      return;
    }
  }
  out.push_back(p);
}

}  // namespace

std::vector<PolynomialFactor> factor_over_Q(const IntPolynomial& p) {
  if (p.degree() > kMaxFactorDegree)
    throw UnsupportedDegree("factorization supports degree <= " + std::to_string(kMaxFactorDegree));
  if (p.degree() < 1) return {};
  if (!p.primitive_part().is_monic()) throw UnsupportedDegree("factorization expects a monic polynomial");
  std::vector<PolynomialFactor> out;
  for (const auto& part : squarefree_decomposition(p)) {
    std::vector<IntPolynomial> pieces;
    split_squarefree_monic(part.poly, pieces);
    for (auto& q : pieces) out.push_back({q, part.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const PolynomialFactor& a, const PolynomialFactor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return a.poly < b.poly;
  });
  return out;
}

int euler_phi(int k) {
  int result = k;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

int cyclotomic_order(const IntPolynomial& h) {
  const int m = h.degree();
  if (m < 1 || !h.is_monic()) return 0;
  const int bound = 2 * m * m + 2;
  for (int k = 1; k <= bound; ++k) {
    if (euler_phi(k) != m) continue;
    IntPolynomial xk = IntPolynomial::monomial(k) - IntPolynomial{1};
    if (divides(h, xk)) return k;
  }
  return 0;
}

}  // namespace rauzy
