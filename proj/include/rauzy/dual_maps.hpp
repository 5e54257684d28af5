#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rauzy/chain.hpp"
#include "rauzy/substitution.hpp"

namespace rauzy {

enum class MapVariant { Extension, Dual, Geometric };

struct MapTerm {
  LatticePoint offset{};
  WedgeType type;
  int sign = 1;
  friend bool operator==(const MapTerm&, const MapTerm&) = default;
};

// Face map affine in the base point: (x, a) ↦ Σ sign·(A·x + offset, type).
// A = M_σ for the extension, A = M_σ⁻¹ for the dual and geometric variants.
class DualMapTables {
 public:
  DualMapTables() = default;
  DualMapTables(MapVariant variant, int n, int k, bool dual, IntMatrix linear);

  MapVariant variant() const { return variant_; }
  int n() const { return n_; }
  int k() const { return k_; }
  bool dual() const { return dual_; }
  const IntMatrix& linear() const { return linear_; }
  const std::vector<WedgeType>& types() const { return types_; }

  // Raw terms (before merging) of the image of (0, t).
  const std::vector<MapTerm>& image(WedgeType t) const;
  void add_term(WedgeType t, MapTerm term);

  void apply_face(const Face& f, std::int64_t coeff, Chain& out) const;
  Chain apply(const Chain& c) const;
  Chain apply_power(const Chain& c, int times) const;

 private:
  MapVariant variant_ = MapVariant::Extension;
  int n_ = 0;
  int k_ = 0;
  bool dual_ = false;
  IntMatrix linear_;
  std::vector<WedgeType> types_;
  std::vector<int> slot_;
  std::vector<std::vector<MapTerm>> images_;
};

// One letter position chosen in σ(a_i) for every letter of a, so σ(a) = p·b·s componentwise.
struct TupleTerm {
  LatticePoint prefix_sum{};  // Σ l(p_i)
  LatticePoint suffix_sum{};  // Σ l(s_i)
  NormalizedWedge wedge;      // b with the sign of its sorting permutation; zero on a repeated letter
};
// All occurrence tuples of a, in lexicographic order of positions.
std::vector<TupleTerm> occurrence_tuples(const Substitution& s, WedgeType a);

// k-dimensional extension E_k(σ).
DualMapTables extension_map(const Substitution& s, int k);
// Its dual E_k*(σ), acting on dual k-faces.
DualMapTables dual_map(const Substitution& s, int k);
// Geometric dual E^m(σ) = φ ∘ E*_{n−m}(σ) ∘ φ⁻¹ acting on m-faces.
DualMapTables geometric_map(const Substitution& s, int m);
// Closed form over suffixes, (x, ā*) ↦ Σ sgn·(M⁻¹(x + l(s)), b̄*); used as an oracle.
DualMapTables geometric_map_closed_form(const Substitution& s, int m);

struct ExteriorMatrices {
  IntMatrix exterior;   // B_k, rows/cols O_k
  IntMatrix dual;       // M_k* = ᵗB_k
  IntMatrix geometric;  // M_{n−k}, rows/cols a* for a ∈ O_k
  bool sign_rule_holds = false;
  // s with dual = diag(s)⁻¹ · geometric · diag(s), when one exists.
  std::optional<std::vector<int>> conjugator;
};
ExteriorMatrices exterior_matrices(const Substitution& s, int k);

// Matrix of signed type counts of a map: entry (row, col) indexed by positions in types().
IntMatrix abelianization(const DualMapTables& map);

struct BadCancellation {
  WedgeType source;
  MapTerm positive;
  MapTerm negative;
};

struct PositivityReport {
  bool pass = false;
  bool images_positive = false;
  bool primitive = false;
  std::vector<std::string> offending;  // dual faces whose images carry a negative term
  std::vector<BadCancellation> bad_cancellations;
  // Orientation (±1 per type of O_k, lexicographic) making all images positive, if any.
  std::optional<std::vector<int>> orientation;
};
PositivityReport positivity_check_P(const Substitution& s, int nbar);

// ∂(E^{d−1} c) == E^{d−2}(∂ c) as canonical chains.
bool commutation_check(const DualMapTables& top, const DualMapTables& below, const Chain& c);

struct DualityReport {
  std::size_t pairs = 0;       // basis pairs (X*, Y) examined
  std::size_t nonzero = 0;     // pairs with ⟨E_k* X, Y⟩ ≠ 0
  std::size_t violations = 0;  // ⟨E_k* X, Y⟩ ≠ ⟨X, E_k Y⟩
};
// Exhaustive over all basis faces with base points in {−box..box}^n.
DualityReport duality_check(const Substitution& s, int k, int box = 1);

// Two-colouring search for signs s with target(b,a) = s_b·source(b,a)·s_a.
std::optional<std::vector<int>> diagonal_sign_conjugator(const IntMatrix& source, const IntMatrix& target);

}  // namespace rauzy
