#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "rauzy/int_matrix.hpp"

namespace rauzy {

// Coefficients lowest degree first; no trailing zeros (the zero polynomial is empty).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial monomial(int degree, BigInt c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  BigInt content() const;
  IntPolynomial primitive_part() const;
  IntPolynomial derivative() const;

  BigInt eval(const BigInt& x) const;
  Rational eval(const Rational& x) const;
  std::complex<long double> eval(std::complex<long double> z) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
  friend bool operator<(const IntPolynomial& a, const IntPolynomial& b);

  std::string to_string(char var = 'x') const;
  std::vector<long long> to_int64() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Polynomial over Q, used for exact division and gcds.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coeffs);
  explicit RatPolynomial(const IntPolynomial& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  RatPolynomial monic() const;
  // Primitive integer polynomial with positive leading coefficient.
  IntPolynomial to_primitive() const;

  friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) { return a.c_ == b.c_; }

  std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& d) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

RatPolynomial gcd(RatPolynomial a, RatPolynomial b);

// Exact division over Z; returns false when b does not divide a.
bool divides(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient = nullptr);

// Characteristic polynomial det(xI − M) by Faddeev–LeVerrier.
IntPolynomial char_poly(const IntMatrix& m);

// Evaluate p(M) for an integer matrix.
IntMatrix eval_matrix(const IntPolynomial& p, const IntMatrix& m);

}  // namespace rauzy
