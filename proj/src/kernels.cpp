#include "rauzy/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>

#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>

#include "rauzy/parallel.hpp"

namespace rauzy {

namespace {

double pair_threshold(const Polygon& a, const Polygon& b, double rel_eps) {
  return rel_eps * std::min(area(a), area(b));
}

}  // namespace

OverlapAudit overlap_audit_serial(const std::vector<Polygon>& polys, double rel_eps) {
  OverlapAudit out;
  std::vector<Box> boxes;
  for (const auto& p : polys) boxes.push_back(bounding_box(p));
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (!boxes[i].intersects(boxes[j])) continue;
      const double a = convex_overlap_area(polys[i], polys[j]);
      out.total += a;
      if (a > pair_threshold(polys[i], polys[j], rel_eps)) out.pairs.push_back({i, j, a});
    }
  return out;
}

OverlapAudit overlap_audit(const std::vector<Polygon>& polys, double rel_eps) {
  OverlapAudit out;
  if (polys.size() < 2) return out;
  std::vector<Box> boxes;
  Box all;
  double mean = 0;
  for (const auto& p : polys) {
    boxes.push_back(bounding_box(p));
    all.extend(boxes.back());
    mean += std::max(boxes.back().width(), boxes.back().height());
  }
  mean /= static_cast<double>(polys.size());
  const double cell = std::max(mean, 1e-12);
  const int nx = std::max(1, static_cast<int>(std::ceil(all.width() / cell)) + 1);
  const int ny = std::max(1, static_cast<int>(std::ceil(all.height() / cell)) + 1);
  auto cell_of = [&](double v, double lo, int count) {
    return std::clamp(static_cast<int>(std::floor((v - lo) / cell)), 0, count - 1);
  };
  std::vector<std::vector<std::size_t>> grid(static_cast<std::size_t>(nx) * ny);
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (int cx = cell_of(boxes[i].lo.x, all.lo.x, nx); cx <= cell_of(boxes[i].hi.x, all.lo.x, nx); ++cx)
      for (int cy = cell_of(boxes[i].lo.y, all.lo.y, ny); cy <= cell_of(boxes[i].hi.y, all.lo.y, ny); ++cy)
        grid[static_cast<std::size_t>(cx) * ny + cy].push_back(i);

  struct Partial {
    double total = 0;
    std::vector<PairOverlap> pairs;
  };
  auto partials = parallel_map<Partial>(polys.size(), [&](std::size_t i) {
    Partial part;
    std::vector<std::size_t> cand;
    for (int cx = cell_of(boxes[i].lo.x, all.lo.x, nx); cx <= cell_of(boxes[i].hi.x, all.lo.x, nx); ++cx)
      for (int cy = cell_of(boxes[i].lo.y, all.lo.y, ny); cy <= cell_of(boxes[i].hi.y, all.lo.y, ny); ++cy)
        for (std::size_t j : grid[static_cast<std::size_t>(cx) * ny + cy])
          if (j > i) cand.push_back(j);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (std::size_t j : cand) {
      if (!boxes[i].intersects(boxes[j])) continue;
      const double a = convex_overlap_area(polys[i], polys[j]);
      part.total += a;
      if (a > pair_threshold(polys[i], polys[j], rel_eps)) part.pairs.push_back({i, j, a});
    }
    return part;
  });
  for (auto& p : partials) {
    out.total += p.total;
    out.pairs.insert(out.pairs.end(), p.pairs.begin(), p.pairs.end());
  }
  return out;
}

struct PointIndex::Tree {
  using Point = boost::geometry::model::point<double, 2, boost::geometry::cs::cartesian>;
  boost::geometry::index::rtree<Point, boost::geometry::index::rstar<16>> rtree;
};

PointIndex::PointIndex(const std::vector<Vec2>& pts) : tree_(std::make_unique<Tree>()) {
  if (pts.empty()) throw std::invalid_argument("nearest-neighbour index over an empty set");
  std::vector<Tree::Point> ps;
  ps.reserve(pts.size());
  for (Vec2 p : pts) ps.emplace_back(p.x, p.y);
  tree_->rtree = decltype(tree_->rtree)(ps.begin(), ps.end());
}

PointIndex::~PointIndex() = default;

double PointIndex::nearest(Vec2 q) const {
  const Tree::Point qp(q.x, q.y);
  std::vector<Tree::Point> hit;
  tree_->rtree.query(boost::geometry::index::nearest(qp, 1), std::back_inserter(hit));
  return boost::geometry::distance(qp, hit.front());
}

double directed_hausdorff(const std::vector<Vec2>& from, const std::vector<Vec2>& to) {
  const PointIndex grid(to);
  const auto d = parallel_map<double>(from.size(), [&](std::size_t i) { return grid.nearest(from[i]); });
  return d.empty() ? 0.0 : *std::max_element(d.begin(), d.end());
}

double directed_hausdorff_serial(const std::vector<Vec2>& from, const std::vector<Vec2>& to) {
  if (to.empty()) throw std::invalid_argument("Hausdorff distance to an empty set");
  double worst = 0;
  for (Vec2 p : from) {
    double best = 1e300;
    for (Vec2 q : to) best = std::min(best, dist(p, q));
    worst = std::max(worst, best);
  }
  return worst;
}

double hausdorff(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("Hausdorff distance of an empty set");
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double hausdorff_serial(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("Hausdorff distance of an empty set");
  return std::max(directed_hausdorff_serial(a, b), directed_hausdorff_serial(b, a));
}

Chain apply_map_serial(const DualMapTables& map, const Chain& c) { return map.apply(c); }

Chain apply_map(const DualMapTables& map, const Chain& c) {
  if (c.k() != map.k() || c.dual() != map.dual() || c.n() != map.n())
    throw std::invalid_argument("chain does not match map domain");
  const std::vector<std::pair<Face, std::int64_t>> terms(c.terms().begin(), c.terms().end());
  const std::size_t workers = static_cast<std::size_t>(worker_count());
  const std::size_t chunks = std::min(terms.size(), workers * 4);
  if (chunks <= 1) return map.apply(c);
  auto parts = parallel_map<Chain>(chunks, [&](std::size_t ci) {
    Chain part(c.n(), c.k(), c.dual());
    for (std::size_t i = ci; i < terms.size(); i += chunks) map.apply_face(terms[i].first, terms[i].second, part);
    return part;
  });
  Chain out(c.n(), c.k(), c.dual());
  for (const auto& p : parts) out += p;
  return out;
}

Chain apply_map_power(const DualMapTables& map, const Chain& c, int times) {
  Chain cur = c;
  for (int i = 0; i < times; ++i) cur = apply_map(map, cur);
  return cur;
}

}  // namespace rauzy
