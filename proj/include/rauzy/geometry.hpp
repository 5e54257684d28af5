#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rauzy/dual_maps.hpp"
#include "rauzy/pisot.hpp"
#include "rauzy/polygon.hpp"
#include "rauzy/projection.hpp"

namespace rauzy {

class GeometryUnsupported : public InputError {
 public:
  using InputError::InputError;
};

// Everything derived once from a unit Pisot substitution.
struct PisotContext {
  Substitution sub;
  PisotData pisot;
  ProjectionData proj;
  IntMatrix matrix;
  IntMatrix inverse;
  DualMapTables top;    // E^{d−1}
  DualMapTables below;  // E^{d−2}

  static PisotContext build(const Substitution& s);
  int n() const { return sub.size(); }
  int d() const { return pisot.d; }
  int nbar() const { return n() - d() + 1; }
  bool planar() const { return pisot.d == 3; }
  void require_planar() const;
};

using PiKey = std::array<std::int64_t, kMaxLetters>;

// Exact identity of a projected face: π(base) and type.
struct FaceKey {
  PiKey base{};
  WedgeType type;
  friend bool operator==(const FaceKey&, const FaceKey&) = default;
  friend bool operator<(const FaceKey& a, const FaceKey& b) {
    if (a.type == b.type) return a.base < b.base;
    return a.type < b.type;
  }
};
FaceKey face_key(const PisotContext& ctx, const Face& f);

struct FacePolygon {
  Face face;
  Vec2 origin;
  Vec2 edge1;
  Vec2 edge2;
  int orientation = 1;  // coefficient sign times the sign of edge1 × edge2

  Polygon corners() const;  // counter-clockwise
  double area() const { return std::abs(cross(edge1, edge2)); }
};

FacePolygon project_face(const PisotContext& ctx, const Face& f, std::int64_t coeff = 1);
std::vector<FacePolygon> project_chain(const PisotContext& ctx, const Chain& c);
double chain_area(const PisotContext& ctx, const Chain& c);

struct OverlapWitness {
  Face first;
  Face second;
  double area = 0;
};
struct ProjectsWellReport {
  bool pass = true;
  double total_overlap = 0;
  std::vector<OverlapWitness> witnesses;
};
ProjectsWellReport projects_well(const PisotContext& ctx, const Chain& c, double eps = 1e-9);

// (x, c) ∈ S: the dual base of φ⁻¹(x, c) lies in the window [−⟨l(a), v⟩, 0), a = complement of c.
bool near_membership(const PisotContext& ctx, const Face& f);

struct Patch {
  Chain chain;
  std::vector<FacePolygon> polygons;
  int exponent = 0;
  int iterations = 0;
};

class SeedRejected : public InputError {
 public:
  using InputError::InputError;
};

// {U} ⊆ {E^m U} compared by projected face identity.
bool seed_contained(const PisotContext& ctx, const Chain& seed, int m);
Patch stepped_surface(const PisotContext& ctx, const Chain& seed, int m, int k);

struct PeriodicElement {
  enum class Kind { SingleFace, TouchingPair, Touching } kind = Kind::SingleFace;
  Chain faces;
  std::vector<LatticePoint> lattice;
  double covolume = 0;  // area of the π_c-image of the lattice cell
};
std::vector<PeriodicElement> periodic_candidates(const PisotContext& ctx);
// All projecting-well d-touching elements.
std::vector<PeriodicElement> touching_elements(const PisotContext& ctx);

// Edges of the projected patch that belong to exactly one face.
std::vector<Segment> boundary_segments(const PisotContext& ctx, const Chain& c);
double boundary_gap(const std::vector<Segment>& a, const std::vector<Segment>& b);

struct SurroundReport {
  bool contained = false;
  double gap = 0;
  bool pass() const { return contained && gap > 0; }
};
SurroundReport surrounds(const PisotContext& ctx, const Chain& outer, const Chain& inner);

struct CoverageStep {
  int iteration = 0;
  std::size_t faces = 0;
  double uncovered = 0;  // fraction of the disk not covered
  double overlap = 0;
};
struct FinitenessReport {
  std::vector<CoverageStep> steps;
  bool covers = false;
  std::optional<SurroundReport> surround;
  int surround_exponent = 15;
};
FinitenessReport finiteness_probe(const PisotContext& ctx, const Chain& seed, int m, int k_max, double radius,
                                  double eps = 1e-9);

// Parses "2^3+2^4+3^4" into a chain of faces based at 0.
Chain parse_seed(const std::string& text, int n);

}  // namespace rauzy
