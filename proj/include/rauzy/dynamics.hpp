#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rauzy/geometry.hpp"
#include "rauzy/graph_ifs.hpp"

namespace rauzy {

// M_σ acting on K_c coordinates.
Linear2 contraction_map(const PisotContext& ctx);

// Prefix graph: edge b → a for σ(b) = p a s, so R(a) = ∪ π_c l(p) + M R(b). Vertex a−1 is letter a.
GraphIFS prefix_ifs(const PisotContext& ctx);
// Suffix graph: the attractor at letter a is −R(a) − π_c e_a.
GraphIFS suffix_ifs(const PisotContext& ctx);
// Wedge graph over O_{d−1} read off E^{d−1}: term (y, b) of E(0, c) gives R(c) ⊇ π_c(M y) + M R(b).
// Vertex i is ctx.top.types()[i].
GraphIFS wedge_ifs(const PisotContext& ctx);

struct SuffixEdge {
  WedgeType from;  // ā
  WedgeType to;    // b̄ with σ(ā) = p b̄ s
  LatticePoint suffix{};
  int sign = 1;
};
// E^{d−1}-suffix graph on O_n̄.
struct WedgeSuffixGraph {
  int n = 0;
  std::vector<WedgeType> vertices;
  std::vector<SuffixEdge> edges;
  std::vector<std::vector<int>> outgoing;  // edge indices per vertex position
};
WedgeSuffixGraph build_wedge_suffix_graph(const PisotContext& ctx);
// Every edge ā → b̄ labelled s matches the term (M⁻¹ l(s), ā*) of E^{d−1}(0, b̄*) and vice versa.
bool suffix_graph_matches_tables(const PisotContext& ctx, const WedgeSuffixGraph& g);

struct CoincidenceEntry {
  WedgeType first;
  WedgeType second;
  std::optional<int> k;  // minimal coincidence length; empty when undecided within the cap
};
struct CoincidenceTable {
  std::vector<CoincidenceEntry> entries;  // well-projecting pairs, lexicographic
  std::vector<std::pair<WedgeType, WedgeType>> excluded;  // pairs whose transverse faces overlap
  int depth_cap = 20;
  bool complete() const;
  std::optional<int> lookup(WedgeType a, WedgeType b) const;
  std::string to_csv() const;
};
CoincidenceTable strong_coincidence(const PisotContext& ctx, int depth_cap = 20);

enum class CloudGraph { Prefix, Suffix, Wedge };
// Σ_{i<depth} π_c(M^i l(label_i)) over paths ending at `target` (a letter, or a type of O_{d−1}).
std::vector<Vec2> dumont_thomas_cloud(const PisotContext& ctx, CloudGraph graph, WedgeType target, int depth);

// χ: 1 → 34, 5 → 32, other letters fixed. Variants reverse χ(1) and/or χ(5).
struct ChiMorphism {
  bool flip1 = false;
  bool flip5 = false;
  Word image(int letter) const;
};
Word chi_apply(const Word& w, const ChiMorphism& chi = {});

// True for the five-letter family the χ constructions are stated for.
bool in_chi_family(const Substitution& s);
void require_chi_family(const Substitution& s);

// {π_c l(w_[0,N)) : N < length, w_N = a} for w = χ(u), u the fixed point seeded by 1.
std::vector<Vec2> modified_cloud(const PisotContext& ctx, int a, std::size_t length, const ChiMorphism& chi = {});

// Piecewise translations on tiles given by descent classifiers.
struct ExchangeSystem {
  GraphIFS prefix;
  GraphIFS wedge;
  TileClassifier tilde;      // R̃(a) = −R(b∧c) − π_c e_a, a ∈ {2,3,4}
  TileClassifier classical;  // R(a) = prefix attractor, a ∈ 1..5
  ExchangeSystem(const ExchangeSystem&) = delete;
  ExchangeSystem& operator=(const ExchangeSystem&) = delete;
  explicit ExchangeSystem(const PisotContext& ctx, double margin = 1e-7);

 private:
  static std::vector<TilePiece> tilde_pieces(const PisotContext& ctx);
  static std::vector<TilePiece> classical_pieces(const PisotContext& ctx);
};

struct OrbitResult {
  Word coding;
  Vec2 endpoint;
  enum class Stop { Completed, Ambiguous, Escaped } stop = Stop::Completed;
};
// Iterates Ẽ: x ↦ x + π_c e_a on R̃(a).
OrbitResult exchange_orbit(const PisotContext& ctx, const ExchangeSystem& sys, Vec2 start, int steps);

struct ReturnSample {
  int letter = 0;
  Vec2 start;
  int time = 0;
  double error = 0;  // |return point − (start + π_c e_a)|
  bool verified = false;
  bool ambiguous = false;
};
struct FirstReturnReport {
  std::size_t samples = 0;
  std::size_t verified = 0;
  std::size_t ambiguous = 0;
  std::size_t failed = 0;
  double tol = 1e-7;
  std::vector<ReturnSample> failures;  // first few
  double verified_fraction() const { return samples ? double(verified) / double(samples) : 0; }
};
// Points of R(a) from random prefix-graph paths; the orbit under Ẽ must re-enter R after
// |χ(a)| steps at x + π_c e_a.
FirstReturnReport first_return_check(const PisotContext& ctx, const ExchangeSystem& sys, std::size_t samples,
                                     std::uint64_t seed = 0, int max_steps = 8, double tol = 1e-7);

struct CodingReport {
  std::size_t length = 0;
  std::size_t ambiguous = 0;
  std::vector<std::size_t> mismatches;  // positions
  Word coding;                          // ambiguous positions carry the χ(u) symbol
  Word expected;
};
// Ẽ-orbit of 0 read against the partition, compared with w = χ(u).
CodingReport coding_cross_check(const PisotContext& ctx, const ExchangeSystem& sys, std::size_t length);

}  // namespace rauzy
