#pragma once

#include <string>
#include <vector>

#include "rauzy/geometry.hpp"
#include "rauzy/graph_ifs.hpp"

namespace rauzy {

// Level-k approximation M^k π_c(E^{d−1}(σ)^k C) of a Rauzy tile or tile patch.
struct ApproxTile {
  WedgeType type;  // empty type for patches mixing several types
  int level = 0;
  std::vector<FacePolygon> polygons;
  Vec2 base_shift;

  std::vector<Polygon> corners() const;  // base_shift applied
  double area() const;
};

// Renormalizes an arbitrary chain of (d−1)-faces that was produced at level k.
ApproxTile renormalize(const PisotContext& ctx, const Chain& c, int k);
ApproxTile rauzy_approx(const PisotContext& ctx, WedgeType a, int k);

struct SetEquationReport {
  bool pass = false;
  std::size_t lhs_polygons = 0;
  std::size_t rhs_polygons = 0;
  double max_mismatch = 0;  // largest vertex distance between matched polygons
  double overlap = 0;       // Σ pairwise overlap of the union, relative to its area
  double tol = 1e-9;
};
// Level k+1 tile of a against ∪_{(y,b) ∈ E(0,a)} M(level-k tile of b + π_c y).
SetEquationReport set_equation_check(const PisotContext& ctx, WedgeType a, int k, double tol = 1e-9);

// Largest relative area drift of the level-j tiles, j ≤ k_max, over all types.
double area_drift(const PisotContext& ctx, int k_max);

// Grid samples (spacing `step`) of a union of convex polygons.
std::vector<Vec2> sample_polygons(const std::vector<Polygon>& polys, double step);
std::vector<Vec2> sample_segments(const std::vector<Segment>& segs, double step);

struct TilingAudit {
  std::size_t polygons = 0;
  double region_area = 0;
  double overlap = 0;    // fraction of the region covered twice
  double uncovered = 0;  // fraction of the region not covered
  double tol = 1e-6;
  bool pass() const { return overlap <= tol && uncovered <= tol; }
};
// Polygons must be convex and counter-clockwise; the region is a convex polygon.
TilingAudit tiling_audit(const std::vector<Polygon>& polys, const Polygon& region, double tol = 1e-6);

struct PatchAudit {
  TilingAudit audit;
  int exponent = 0;       // m with {U} ⊆ {E^m U}
  int patch_level = 0;    // faces of Γ_U taken from E^{patch_level}(U)
  std::size_t tiles = 0;  // number of translated tiles
  double region_radius = 0;
};
// Tiles R_k(b) + π_c(x) for the faces (x, b) of a stepped-surface patch grown from a seed, audited
// on a disk well inside the covered part.
PatchAudit aperiodic_audit(const PisotContext& ctx, const Chain& seed, int level, std::size_t min_faces = 200,
                           double tol = 1e-6);
// Lattice copies R_k(P) + π_c(iλ₁ + jλ₂), |i|,|j| ≤ copies.
PatchAudit periodic_audit(const PisotContext& ctx, const PeriodicElement& p, int level, int copies = 6,
                          double tol = 1e-6);

struct MeasureEigenReport {
  std::vector<double> areas;  // projected face areas over O_{d−1}
  double beta = 0;
  double residual = 0;        // max_a |(ᵗ|M|A)_a − βA_a| / βA_a
  double tol = 1e-9;
  bool pass() const { return residual <= tol; }
};
MeasureEigenReport measure_eigen_check(const PisotContext& ctx, double tol = 1e-9);

// Upper-triangular T with |T p| = |p|_{R^n} for p in K_c coordinates: distances of the
// contracting plane measured as a subspace of R^n.
Linear2 embedding_metric(const ProjectionData& proj);

// Cloud depth paired with a level-k patch; the cloud error must fall well below the patch error.
inline constexpr int kCloudDepthPerLevel = 3;

struct ConvergenceSeries {
  std::vector<int> levels;
  std::vector<double> distances;
  bool decreasing() const;
  double last() const { return distances.empty() ? 0 : distances.back(); }
};
// d_H(∂R_k, ∂R_{k+1}) for k < k_max, boundaries sampled at `step`.
ConvergenceSeries boundary_convergence_report(const PisotContext& ctx, WedgeType a, int k_max, double step = 0.005);

// d_H between the wedge-suffix Dumont-Thomas cloud at depth 3k and the level-k patch of a.
ConvergenceSeries two_oracle_series(const PisotContext& ctx, WedgeType a, const std::vector<int>& levels,
                                    double step = 0.005);

// −R(letter) − π_c(shift)
struct ReflectedSubtile {
  int letter = 0;
  LatticePoint shift{};
};
struct Decomposition {
  std::string name;
  WedgeType type;
  std::vector<ReflectedSubtile> pieces;
};
// The five decompositions of R(a∧b) into reflected classical subtiles for the Hokkaido substitution.
// R(3∧5) = (−R(1) − π_c e₄) ∪ (−R(4) − π_c e₄); its area equals that of R(2∧3).
std::vector<Decomposition> hokkaido_decompositions();
// (−R(5) − π_c e₅) ∪ (−R(1) − π_c e₄): does not reproduce R(3∧5).
Decomposition hokkaido_printed_3_5();

struct DecompositionResult {
  Decomposition identity;
  ConvergenceSeries series;
};
// Level-k approximations of R(a∧b) against the union of prefix-graph clouds at depth 3k.
std::vector<DecompositionResult> decomposition_check(const PisotContext& ctx, const std::vector<Decomposition>& decs,
                                                     const std::vector<int>& levels, double step = 0.005);

}  // namespace rauzy
