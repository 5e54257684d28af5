#pragma once

#include <complex>
#include <vector>

#include "rauzy/pisot.hpp"
#include "rauzy/vec2.hpp"

namespace rauzy {

// Dual eigenbases and the projections onto K_e, K_c.
//
// K_c coordinates of x are the values ⟨x, v_i⟩ for the contracting conjugates β_i: one real
// coordinate per real conjugate, (Re, Im) per complex pair. In these coordinates M_σ acts
// diagonally by multiplication with β_i.
struct ProjectionData {
  int n = 0;
  int d = 0;
  NumberField field;
  std::vector<AlgebraicNumber> v_beta;  // ᵗM v = β v, primitive in Z[β]^n, positive
  std::vector<AlgebraicNumber> u_beta;  // M u = β u, scaled so u·v = 1
  // Indexed [conjugate][letter]; conjugate order as in PisotData::conjugates.
  std::vector<std::vector<std::complex<long double>>> v_conj;
  std::vector<std::vector<std::complex<long double>>> u_conj;
  std::vector<bool> conj_is_real;
  std::vector<std::complex<long double>> beta_conj;
  // Rows spanning K_n = ker g(M_σ).
  std::vector<std::vector<double>> neutral_basis;
  // d×n integer matrix; column j holds the power-basis coordinates of v_beta[j].
  IntMatrix v_power;
  std::vector<double> pe_unit;                      // ⟨e_j, v_β⟩
  std::vector<std::vector<double>> kc_unit_coords;  // [letter][coordinate]

  std::vector<double> kc_coords(const LatticePoint& x) const;
  // Requires d = 3.
  Vec2 kc(const LatticePoint& x) const;
  Vec2 kc_unit(int letter) const { return {kc_unit_coords[letter - 1][0], kc_unit_coords[letter - 1][1]}; }
  double pe(const LatticePoint& x) const;
  AlgebraicNumber pe_exact(const LatticePoint& x) const;
  // Exact key of π(x): power-basis coordinates of ⟨x, v_β⟩ (integers).
  std::array<std::int64_t, kMaxLetters> pi_key(const LatticePoint& x) const;

  // M^k (k may be negative) acting on K_c coordinates.
  Vec2 apply_power(Vec2 p, int k) const;
  std::vector<double> apply_power(const std::vector<double>& p, int k) const;
  // Operator norm of M on K_c coordinates (largest contracting modulus).
  double contraction() const;

  // All d conjugate coordinates ⟨x, v_i⟩ (the full projection π modulo K_n).
  std::vector<std::complex<long double>> pi_coords(const LatticePoint& x) const;
};

ProjectionData projections(const Substitution& s, const PisotData& pd);

// Integer vector c = f(M_σ)e_{i₀} ≠ 0 with π(c) = 0 (reducible case); empty when f(M_σ) = 0.
struct RedundancyWitness {
  int letter = 0;
  LatticePoint coeffs{};
  long double residual = 0;  // max_i |⟨c, v_i⟩|
};
RedundancyWitness redundancy_witness(const Substitution& s, const PisotData& pd, const ProjectionData& proj);

}  // namespace rauzy
