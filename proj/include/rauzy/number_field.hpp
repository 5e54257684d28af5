#pragma once

#include <complex>
#include <string>
#include <vector>

#include "rauzy/polynomial.hpp"

namespace rauzy {

struct RationalInterval {
  Rational lo;
  Rational hi;
};

// Disk guaranteed to contain exactly one root.
struct RootBall {
  std::complex<long double> center;
  long double radius = 0;
  bool is_real() const { return std::abs(center.imag()) <= radius; }
  long double modulus_upper() const { return std::abs(center) + radius; }
  long double modulus_lower() const { return std::abs(center) - radius; }
};

// Certified isolation of every root of a squarefree polynomial (Aberth iteration plus
// Braess–Hadeler inclusion disks). Throws std::runtime_error when the disks overlap.
std::vector<RootBall> isolate_roots(const IntPolynomial& p);

// Element of Q(β) in the power basis {1, β, ..., β^{d−1}}.
struct AlgebraicNumber {
  std::vector<Rational> coords;

  bool is_zero() const;
  friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a);
  friend AlgebraicNumber operator*(const Rational& c, const AlgebraicNumber& a);
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) = default;
};

// Q(β) for the real root β of the monic irreducible f isolated in beta_interval.
class NumberField {
 public:
  NumberField() = default;
  NumberField(IntPolynomial f, RationalInterval beta_interval, std::vector<std::complex<long double>> conjugates);

  int degree() const { return f_.degree(); }
  const IntPolynomial& modulus() const { return f_; }
  const RationalInterval& beta_interval() const { return beta_; }
  // conjugates()[0] is β.
  const std::vector<std::complex<long double>>& conjugates() const { return conj_; }

  AlgebraicNumber zero() const;
  AlgebraicNumber from_int(long long v) const;
  AlgebraicNumber from_rational(const Rational& v) const;
  AlgebraicNumber generator() const;

  AlgebraicNumber multiply(const AlgebraicNumber& a, const AlgebraicNumber& b) const;
  AlgebraicNumber inverse(const AlgebraicNumber& a) const;

  // Exact sign of the real embedding; refines a local copy of the β interval as needed.
  int sign_of(const AlgebraicNumber& a) const;
  int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) const { return sign_of(a - b); }

  long double to_real(const AlgebraicNumber& a) const;
  std::complex<long double> embed(const AlgebraicNumber& a, int conjugate_index) const;

  std::string to_string(const AlgebraicNumber& a) const;

 private:
  AlgebraicNumber reduce(std::vector<Rational> poly) const;

  IntPolynomial f_;
  RationalInterval beta_;
  std::vector<std::complex<long double>> conj_;
};

Rational exact_rational(long double v);

std::string decimal_string(const Rational& q, int digits = 20);

}  // namespace rauzy
