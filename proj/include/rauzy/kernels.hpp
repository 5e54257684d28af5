#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "rauzy/dual_maps.hpp"
#include "rauzy/polygon.hpp"

namespace rauzy {

// Parallel kernels; every *_serial function is the reference implementation of its twin.

struct PairOverlap {
  std::size_t first = 0;
  std::size_t second = 0;
  double area = 0;
};
struct OverlapAudit {
  double total = 0;                 // Σ pairwise intersection area
  std::vector<PairOverlap> pairs;   // pairs above rel_eps·min(area), sorted by index
};
// Input polygons are convex and counter-clockwise.
OverlapAudit overlap_audit(const std::vector<Polygon>& polys, double rel_eps);
OverlapAudit overlap_audit_serial(const std::vector<Polygon>& polys, double rel_eps);

// sup over `from` of the distance to the nearest point of `to`.
double directed_hausdorff(const std::vector<Vec2>& from, const std::vector<Vec2>& to);
double directed_hausdorff_serial(const std::vector<Vec2>& from, const std::vector<Vec2>& to);
double hausdorff(const std::vector<Vec2>& a, const std::vector<Vec2>& b);
double hausdorff_serial(const std::vector<Vec2>& a, const std::vector<Vec2>& b);

// Chain image under a face map, split over worker threads and merged canonically.
Chain apply_map(const DualMapTables& map, const Chain& c);
Chain apply_map_power(const DualMapTables& map, const Chain& c, int times);
Chain apply_map_serial(const DualMapTables& map, const Chain& c);

// Nearest-neighbour index over a fixed point set.
class PointIndex {
 public:
  explicit PointIndex(const std::vector<Vec2>& pts);
  ~PointIndex();
  PointIndex(const PointIndex&) = delete;
  PointIndex& operator=(const PointIndex&) = delete;
  double nearest(Vec2 q) const;

 private:
  struct Tree;
  std::unique_ptr<Tree> tree_;
};

}  // namespace rauzy
