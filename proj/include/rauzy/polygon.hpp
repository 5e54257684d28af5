#pragma once

#include <vector>

#include "rauzy/vec2.hpp"

namespace rauzy {

using Polygon = std::vector<Vec2>;

struct Box {
  Vec2 lo{1e300, 1e300};
  Vec2 hi{-1e300, -1e300};
  void extend(Vec2 p);
  void extend(const Box& b);
  bool intersects(const Box& o) const { return lo.x <= o.hi.x && o.lo.x <= hi.x && lo.y <= o.hi.y && o.lo.y <= hi.y; }
  bool contains(Vec2 p) const { return lo.x <= p.x && p.x <= hi.x && lo.y <= p.y && p.y <= hi.y; }
  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
};

Box bounding_box(const Polygon& p);
double signed_area(const Polygon& p);
inline double area(const Polygon& p) { return std::abs(signed_area(p)); }
Polygon counter_clockwise(Polygon p);

// Intersection of two convex polygons (both counter-clockwise).
Polygon clip_convex(const Polygon& subject, const Polygon& clip);
double convex_overlap_area(const Polygon& a, const Polygon& b);

// Signed distance to the boundary of a convex counter-clockwise polygon: positive inside.
double convex_depth(const Polygon& p, Vec2 q);

double segment_distance(Vec2 p, Vec2 a, Vec2 b);
double segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

// Regular polygon approximating a disk from inside.
Polygon disk_polygon(Vec2 center, double radius, int sides = 128);

struct Segment {
  Vec2 a;
  Vec2 b;
};

// Grid points of spacing `step` lying in the polygon, plus its vertices and edge samples.
std::vector<Vec2> sample_convex(const Polygon& p, double step);

}  // namespace rauzy
