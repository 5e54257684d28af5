#pragma once

#include <string>
#include <vector>

#include "rauzy/factor.hpp"
#include "rauzy/number_field.hpp"
#include "rauzy/substitution.hpp"

namespace rauzy {

class NotPisot : public InputError {
 public:
  using InputError::InputError;
};

struct PisotData {
  IntPolynomial charpoly;
  IntPolynomial f;  // Pisot polynomial, monic irreducible
  IntPolynomial g;  // neutral polynomial, charpoly / f
  int d = 0;
  int real_count = 0;     // real roots of f, β included
  int complex_pairs = 0;
  // conjugates[0] = β, then the other real roots (descending), then one root per complex
  // pair with positive imaginary part.
  std::vector<RootBall> conjugates;
  RationalInterval beta;
  NumberField field;
  bool unit = false;
  bool reducible = false;

  long double beta_value() const { return conjugates[0].center.real(); }
  // Certified upper bound for the largest conjugate modulus other than β.
  long double contraction_upper() const;
  int contracting_dim() const { return d - 1; }
};

PisotData pisot_split(const Substitution& s);

struct HypothesisReport {
  bool pass = false;
  std::string reason;
};

// Neutral polynomial check: squarefree, g(0) = 1, every irreducible factor cyclotomic.
HypothesisReport check_hypothesis_N(const IntPolynomial& g);

}  // namespace rauzy
