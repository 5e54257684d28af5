#include "rauzy/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rauzy {

void Box::extend(Vec2 p) {
  lo.x = std::min(lo.x, p.x);
  lo.y = std::min(lo.y, p.y);
  hi.x = std::max(hi.x, p.x);
  hi.y = std::max(hi.y, p.y);
}

void Box::extend(const Box& b) {
  extend(b.lo);
  extend(b.hi);
}

Box bounding_box(const Polygon& p) {
  Box b;
  for (Vec2 v : p) b.extend(v);
  return b;
}

double signed_area(const Polygon& p) {
  double s = 0;
  for (std::size_t i = 0, n = p.size(); i < n; ++i) s += cross(p[i], p[(i + 1) % n]);
  return s / 2;
}

Polygon counter_clockwise(Polygon p) {
  if (signed_area(p) < 0) std::reverse(p.begin(), p.end());
  return p;
}

Polygon clip_convex(const Polygon& subject, const Polygon& clip) {
  Polygon out = subject;
  for (std::size_t i = 0, n = clip.size(); i < n && !out.empty(); ++i) {
    const Vec2 a = clip[i], b = clip[(i + 1) % n];
    const Vec2 dir = b - a;
    Polygon in = std::move(out);
    out.clear();
    for (std::size_t j = 0, m = in.size(); j < m; ++j) {
      const Vec2 p = in[j], q = in[(j + 1) % m];
      const double sp = cross(dir, p - a), sq = cross(dir, q - a);
      if (sp >= 0) out.push_back(p);
      if ((sp >= 0) != (sq >= 0)) {
        const double t = sp / (sp - sq);
        out.push_back(p + t * (q - p));
      }
    }
  }
  return out;
}

double convex_overlap_area(const Polygon& a, const Polygon& b) {
  const Polygon c = clip_convex(a, b);
  return c.size() < 3 ? 0.0 : area(c);
}

double convex_depth(const Polygon& p, Vec2 q) {
  double depth = 1e300;
  for (std::size_t i = 0, n = p.size(); i < n; ++i) {
    const Vec2 a = p[i], b = p[(i + 1) % n];
    const Vec2 dir = b - a;
    const double len = norm(dir);
    if (len == 0) continue;
    depth = std::min(depth, cross(dir, q - a) / len);
  }
  return depth;
}

double segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return dist(p, a + t * ab);
}

double segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return 0.0;
  return std::min({segment_distance(a, c, d), segment_distance(b, c, d), segment_distance(c, a, b),
                   segment_distance(d, a, b)});
}

Polygon disk_polygon(Vec2 center, double radius, int sides) {
  Polygon p;
  for (int i = 0; i < sides; ++i) {
    const double t = 2 * std::numbers::pi * i / sides;
    p.push_back({center.x + radius * std::cos(t), center.y + radius * std::sin(t)});
  }
  return p;
}

std::vector<Vec2> sample_convex(const Polygon& p, double step) {
  std::vector<Vec2> out(p.begin(), p.end());
  for (std::size_t i = 0, n = p.size(); i < n; ++i) {
    const Vec2 a = p[i], b = p[(i + 1) % n];
    const int parts = static_cast<int>(std::ceil(dist(a, b) / step));
    for (int j = 1; j < parts; ++j) out.push_back(a + (static_cast<double>(j) / parts) * (b - a));
  }
  const Polygon ccw = counter_clockwise(p);
  const Box box = bounding_box(p);
  for (double x = std::ceil(box.lo.x / step) * step; x <= box.hi.x; x += step)
    for (double y = std::ceil(box.lo.y / step) * step; y <= box.hi.y; y += step)
      if (convex_depth(ccw, {x, y}) >= 0) out.push_back({x, y});
  return out;
}

}  // namespace rauzy
