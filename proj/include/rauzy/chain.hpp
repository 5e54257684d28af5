#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rauzy/int_matrix.hpp"

namespace rauzy {

// Sorted set of distinct letters a₁ < ... < a_k, stored as a bitmask (bit a−1).
class WedgeType {
 public:
  constexpr WedgeType() = default;
  static constexpr WedgeType from_mask(std::uint16_t mask) {
    WedgeType t;
    t.mask_ = mask;
    return t;
  }
  static WedgeType from_letters(const std::vector<int>& letters);
  // Parses "1^2^3" (or "." for the empty type).
  static WedgeType parse(std::string_view text);

  std::uint16_t mask() const { return mask_; }
  int size() const { return __builtin_popcount(mask_); }
  bool contains(int letter) const { return (mask_ >> (letter - 1)) & 1u; }
  std::vector<int> letters() const;
  int letter_sum() const;
  WedgeType complement(int n) const { return from_mask(static_cast<std::uint16_t>(((1u << n) - 1) & ~mask_)); }
  WedgeType without(int letter) const { return from_mask(static_cast<std::uint16_t>(mask_ & ~(1u << (letter - 1)))); }
  WedgeType with(int letter) const { return from_mask(static_cast<std::uint16_t>(mask_ | (1u << (letter - 1)))); }
  LatticePoint indicator() const;
  std::string to_string(char sep = '^') const;

  friend bool operator==(WedgeType a, WedgeType b) { return a.mask_ == b.mask_; }
  // Lexicographic order on the increasing letter sequences.
  friend bool operator<(WedgeType a, WedgeType b) {
    const unsigned diff = a.mask_ ^ b.mask_;
    if (!diff) return false;
    const unsigned low = diff & (~diff + 1u);
    const unsigned above = ~((low << 1) - 1u);
    if (a.mask_ & low) return (b.mask_ & above) != 0;
    return (a.mask_ & above) == 0;
  }

 private:
  std::uint16_t mask_ = 0;
};

struct NormalizedWedge {
  bool zero = true;
  WedgeType type;
  int sign = 0;
};
NormalizedWedge wedge_normalize(const std::vector<int>& letters);

// O_k in lexicographic order.
std::vector<WedgeType> wedge_types(int n, int k);
// Position of a type within O_k (lexicographic index).
int wedge_index(int n, WedgeType t);

struct Face {
  LatticePoint base{};
  WedgeType type;
  friend bool operator==(const Face& a, const Face& b) = default;
  friend bool operator<(const Face& a, const Face& b) {
    if (a.type == b.type) return a.base < b.base;
    return a.type < b.type;
  }
};

// Finite Z-combination of k-faces (or dual faces) in canonical form.
class Chain {
 public:
  using Terms = std::map<Face, std::int64_t>;

  Chain() = default;
  Chain(int n, int k, bool dual = false) : n_(n), k_(k), dual_(dual) {}

  int n() const { return n_; }
  int k() const { return k_; }
  bool dual() const { return dual_; }

  void add(const Face& f, std::int64_t coeff);
  // Normalizes an arbitrary letter list (antisymmetry) before inserting.
  void add(const LatticePoint& base, const std::vector<int>& letters, std::int64_t coeff);
  std::int64_t coeff(const Face& f) const;

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  bool is_geometric() const;

  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(std::int64_t c, const Chain& a);
  friend bool operator==(const Chain& a, const Chain& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.dual_ == b.dual_ && a.terms_ == b.terms_;
  }

  // One term per line: `coeff (x1,...,xn) a1^a2^...` (a trailing '*' marks dual faces).
  std::string dump() const;

 private:
  int n_ = 0;
  int k_ = 0;
  bool dual_ = false;
  Terms terms_;
};

Chain single_face(int n, const LatticePoint& base, WedgeType type, std::int64_t coeff = 1, bool dual = false);
Chain parse_chain(std::string_view text, int n, int k, bool dual = false);

Chain boundary(const Chain& c);
// φ_k: C_k* → C_{n−k}.
Chain poincare_phi(const Chain& dual);
Chain poincare_phi_inv(const Chain& c);
// ∂* = φ⁻¹ ∘ ∂ ∘ φ, raising the dual dimension by one.
Chain coboundary(const Chain& dual);

std::vector<LatticePoint> support_vertices(const Face& f);

// ⟨X*, Y⟩ = Σ coeff_X(f) coeff_Y(f).
std::int64_t pairing(const Chain& dual, const Chain& c);

}  // namespace rauzy
