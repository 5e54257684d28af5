#pragma once

#include <vector>

#include "rauzy/polynomial.hpp"
#include "rauzy/substitution.hpp"

namespace rauzy {

constexpr int kMaxFactorDegree = 16;

class UnsupportedDegree : public InputError {
 public:
  using InputError::InputError;
};

struct PolynomialFactor {
  IntPolynomial poly;  // primitive, positive leading coefficient, irreducible over Q
  int multiplicity = 1;
  friend bool operator==(const PolynomialFactor&, const PolynomialFactor&) = default;
};

// Squarefree parts q_i with p = c · Π q_i^i (Yun).
std::vector<PolynomialFactor> squarefree_decomposition(const IntPolynomial& p);

// Irreducible factorization over Z of a primitive (typically monic) polynomial.
// Factors sorted by (degree, coefficients); throws UnsupportedDegree above the cap.
std::vector<PolynomialFactor> factor_over_Q(const IntPolynomial& p);

int euler_phi(int k);

// Smallest k with h | x^k − 1, or 0 when h is not a product of distinct cyclotomic factors
// of the same order.
int cyclotomic_order(const IntPolynomial& h);

}  // namespace rauzy
