#include "rauzy/number_field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace rauzy {

using cld = std::complex<long double>;

Rational exact_rational(long double v) {
  if (v == 0) return 0;
  int exp = 0;
  const long double mant = std::frexp(std::abs(v), &exp);
  // mant in [1/2, 1): 64 mantissa bits fit an unsigned 64-bit integer exactly.
  const auto bits = static_cast<unsigned long long>(std::ldexp(mant, 64));
  Rational q{BigInt(bits)};
  exp -= 64;
  if (exp > 0)
    q *= Rational(BigInt(1) << exp);
  else if (exp < 0)
    q /= Rational(BigInt(1) << (-exp));
  return v < 0 ? Rational(-q) : q;
}

namespace {

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

}  // namespace

std::vector<RootBall> isolate_roots(const IntPolynomial& p) {
  const int m = p.degree();
  if (m < 1) return {};
  std::vector<long double> a(m + 1);
  const long double lead = static_cast<long double>(p.leading());
  for (int i = 0; i <= m; ++i) a[i] = static_cast<long double>(p.coeff(i)) / lead;
  auto eval = [&](cld z, cld* deriv) {
    cld v = 0, dv = 0;
    for (int i = m; i >= 0; --i) {
      dv = dv * z + v;
      v = v * z + a[i];
    }
    if (deriv) *deriv = dv;
    return v;
  };
  long double cauchy = 0;
  for (int i = 0; i < m; ++i) cauchy = std::max(cauchy, std::abs(a[i]));
  cauchy += 1;
  std::vector<cld> z(m);
  for (int k = 0; k < m; ++k)
    z[k] = std::polar(cauchy * 0.9L, 2 * std::numbers::pi_v<long double> * k / m + 0.4L);
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (int k = 0; k < m; ++k) {
      cld dv;
      cld v = eval(z[k], &dv);
      if (v == cld(0)) continue;
      cld ratio = v / dv;
      cld sum = 0;
      for (int j = 0; j < m; ++j)
        if (j != k) sum += cld(1) / (z[k] - z[j]);
      cld w = ratio / (cld(1) - ratio * sum);
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max<long double>(1, std::abs(z[k])));
    }
    if (worst < 1e-18L) break;
  }
  const long double eps = std::numeric_limits<long double>::epsilon();
  std::vector<RootBall> balls(m);
  for (int k = 0; k < m; ++k) {
    cld v = eval(z[k], nullptr);
    long double mag = 0;
    const long double az = std::abs(z[k]);
    for (int i = m; i >= 0; --i) mag = mag * az + std::abs(a[i]);
    const long double eval_err = 4 * (2 * m + 2) * eps * mag;
    long double denom = 1;
    for (int j = 0; j < m; ++j)
      if (j != k) denom *= std::abs(z[k] - z[j]);
    const long double rad = m * (std::abs(v) + eval_err) / denom;
    balls[k] = {z[k], rad * (1 + 1e-6L) + 8 * eps * std::max<long double>(1, az)};
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (std::abs(balls[i].center - balls[j].center) <= balls[i].radius + balls[j].radius)
        throw std::runtime_error("root isolation failed: inclusion disks overlap");
  for (auto& b : balls)
    if (b.is_real()) b.center = cld(b.center.real(), 0);
  return balls;
}

bool AlgebraicNumber::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q == 0; });
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  AlgebraicNumber r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  AlgebraicNumber r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

AlgebraicNumber operator-(const AlgebraicNumber& a) {
  AlgebraicNumber r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

AlgebraicNumber operator*(const Rational& c, const AlgebraicNumber& a) {
  AlgebraicNumber r = a;
  for (auto& x : r.coords) x *= c;
  return r;
}

NumberField::NumberField(IntPolynomial f, RationalInterval beta_interval, std::vector<cld> conjugates)
    : f_(std::move(f)), beta_(std::move(beta_interval)), conj_(std::move(conjugates)) {
  if (!f_.is_monic()) throw std::invalid_argument("number field modulus must be monic");
}

AlgebraicNumber NumberField::zero() const { return {std::vector<Rational>(degree())}; }

AlgebraicNumber NumberField::from_int(long long v) const { return from_rational(Rational(v)); }

AlgebraicNumber NumberField::from_rational(const Rational& v) const {
  AlgebraicNumber r = zero();
  r.coords[0] = v;
  return r;
}

AlgebraicNumber NumberField::generator() const {
  if (degree() == 1) return from_rational(-Rational(f_.coeff(0)));
  AlgebraicNumber r = zero();
  r.coords[1] = 1;
  return r;
}

AlgebraicNumber NumberField::reduce(std::vector<Rational> poly) const {
  const int d = degree();
  for (int i = static_cast<int>(poly.size()) - 1; i >= d; --i) {
    const Rational c = poly[i];
    if (c == 0) continue;
    poly[i] = 0;
    for (int j = 0; j < d; ++j) poly[i - d + j] -= c * Rational(f_.coeff(j));
  }
  poly.resize(d);
  return {std::move(poly)};
}

AlgebraicNumber NumberField::multiply(const AlgebraicNumber& a, const AlgebraicNumber& b) const {
  const int d = degree();
  std::vector<Rational> prod(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < d; ++j) prod[i + j] += a.coords[i] * b.coords[j];
  }
  return reduce(std::move(prod));
}

AlgebraicNumber NumberField::inverse(const AlgebraicNumber& a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero in number field");
  // Extended Euclid: s·a + t·f = gcd = const.
  RatPolynomial r0(f_), r1(a.coords);
  RatPolynomial s0, s1(std::vector<Rational>{Rational(1)});
  while (r1.degree() > 0) {
    auto [q, r] = r0.divmod(r1);
    RatPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const Rational c = r1.coeff(0);
  std::vector<Rational> inv = s1.coeffs();
  for (auto& x : inv) x /= c;
  return reduce(std::move(inv));
}

int NumberField::sign_of(const AlgebraicNumber& a) const {
  if (a.is_zero()) return 0;
  const int d = degree();
  // Floating fast path with a generous error bound.
  {
    const long double b = conj_.at(0).real();
    long double v = 0, mag = 0;
    for (int i = d - 1; i >= 0; --i) {
      const long double c = static_cast<long double>(a.coords[i]);
      v = v * b + c;
      mag = mag * std::abs(b) + std::abs(c);
    }
    if (std::abs(v) > 1e-12L * std::max<long double>(1, mag)) return v > 0 ? 1 : -1;
  }
  Rational lo = beta_.lo, hi = beta_.hi;
  const int sign_lo = sign(f_.eval(lo));
  for (int iter = 0; iter < 4000; ++iter) {
    // Interval Horner on [lo, hi] with lo > 0 or general bounds.
    Rational vlo = 0, vhi = 0;
    for (int i = d - 1; i >= 0; --i) {
      Rational cands[4] = {vlo * lo, vlo * hi, vhi * lo, vhi * hi};
      vlo = *std::min_element(cands, cands + 4) + a.coords[i];
      vhi = *std::max_element(cands, cands + 4) + a.coords[i];
    }
    if (vlo > 0) return 1;
    if (vhi < 0) return -1;
    const Rational mid = (lo + hi) / 2;
    const int sm = sign(f_.eval(mid));
    if (sm == 0) {
      lo = hi = mid;
    } else if (sm == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw std::runtime_error("sign refinement did not terminate");
}

long double NumberField::to_real(const AlgebraicNumber& a) const { return embed(a, 0).real(); }

std::complex<long double> NumberField::embed(const AlgebraicNumber& a, int conjugate_index) const {
  const cld z = conj_.at(conjugate_index);
  cld v = 0;
  for (int i = degree() - 1; i >= 0; --i) v = v * z + static_cast<long double>(a.coords[i]);
  return v;
}

std::string NumberField::to_string(const AlgebraicNumber& a) const {
  IntPolynomial num;
  BigInt l = 1;
  for (const auto& c : a.coords) l = boost::multiprecision::lcm(l, denominator(c));
  std::vector<BigInt> v;
  for (const auto& c : a.coords) v.push_back(numerator(c) * (l / denominator(c)));
  std::string s = IntPolynomial(std::move(v)).to_string('b');
  if (l != 1) s = "(" + s + ")/" + l.str();
  return s;
}

std::string decimal_string(const Rational& q, int digits) {
  BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
  Rational scaled = q * Rational(scale);
  BigInt fl = numerator(scaled) / denominator(scaled);
  if (numerator(scaled) < 0 && fl * denominator(scaled) != numerator(scaled)) fl -= 1;
  const bool neg = fl < 0;
  BigInt mag = neg ? BigInt(-fl) : fl;
  std::string s = mag.str();
  if (static_cast<int>(s.size()) <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
  s.insert(s.size() - digits, ".");
  return (neg ? "-" : "") + s;
}

}  // namespace rauzy
