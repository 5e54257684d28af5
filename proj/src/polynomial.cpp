#include "rauzy/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace rauzy {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  for (auto v : coeffs) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt c) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v[degree] = std::move(c);
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (c_.empty()) return {};
  BigInt g = content();
  if (c_.back() < 0) g = -g;
  std::vector<BigInt> v = c_;
  for (auto& x : v) x /= g;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * static_cast<long long>(i));
  return IntPolynomial(std::move(v));
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

std::complex<long double> IntPolynomial::eval(std::complex<long double> z) const {
  std::complex<long double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + static_cast<long double>(*it);
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(v));
}

bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

std::string IntPolynomial::to_string(char var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (mag != 1 || i == 0) s += mag.str();
    if (i >= 1) s += var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

std::vector<long long> IntPolynomial::to_int64() const {
  std::vector<long long> v;
  for (const auto& c : c_) v.push_back(static_cast<long long>(c));
  return v;
}

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPolynomial::RatPolynomial(const IntPolynomial& p) {
  for (const auto& c : p.coeffs()) c_.emplace_back(c);
  trim();
}

void RatPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPolynomial RatPolynomial::monic() const {
  if (c_.empty()) return {};
  std::vector<Rational> v = c_;
  const Rational lead = c_.back();
  for (auto& x : v) x /= lead;
  return RatPolynomial(std::move(v));
}

IntPolynomial RatPolynomial::to_primitive() const {
  if (c_.empty()) return {};
  BigInt l = 1;
  for (const auto& x : c_) l = boost::multiprecision::lcm(l, denominator(x));
  std::vector<BigInt> v;
  for (const auto& x : c_) v.push_back(numerator(x) * (l / denominator(x)));
  return IntPolynomial(std::move(v)).primitive_part();
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return RatPolynomial(std::move(v));
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return RatPolynomial(std::move(v));
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return RatPolynomial(std::move(v));
}

std::pair<RatPolynomial, RatPolynomial> RatPolynomial::divmod(const RatPolynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = c_;
  const int dd = d.degree();
  std::vector<Rational> q(std::max(0, degree() - dd + 1));
  for (int i = degree(); i >= dd; --i) {
    if (r[i] == 0) continue;
    const Rational f = r[i] / d.leading();
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * d.c_[j];
  }
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool divides(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient) {
  if (b.is_zero()) return false;
  auto [q, r] = RatPolynomial(a).divmod(RatPolynomial(b));
  if (!r.is_zero()) return false;
  std::vector<BigInt> qi;
  for (const auto& c : q.coeffs()) {
    if (denominator(c) != 1) return false;
    qi.push_back(numerator(c));
  }
  if (quotient) *quotient = IntPolynomial(std::move(qi));
  return true;
}

IntPolynomial char_poly(const IntMatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("char_poly of non-square matrix");
  using Mat = std::vector<std::vector<BigInt>>;
  Mat a(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c[n] = 1;
  Mat mk(n, std::vector<BigInt>(n));  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    Mat next(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        BigInt s = 0;
        for (int l = 0; l < n; ++l) s += a[i][l] * mk[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    mk = std::move(next);
    BigInt tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += a[i][l] * mk[l][i];
    c[n - k] = -tr / k;
  }
  return IntPolynomial(std::move(c));
}

IntMatrix eval_matrix(const IntPolynomial& p, const IntMatrix& m) {
  const int n = m.rows();
  IntMatrix acc(n, n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    const auto c = static_cast<std::int64_t>(p.coeff(i));
    for (int r = 0; r < n; ++r) acc(r, r) += c;
  }
  return acc;
}

}  // namespace rauzy
