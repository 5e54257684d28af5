#include "rauzy/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rauzy/dynamics.hpp"
#include "rauzy/kernels.hpp"

namespace rauzy {

std::vector<Polygon> ApproxTile::corners() const {
  std::vector<Polygon> out;
  out.reserve(polygons.size());
  for (const auto& fp : polygons) {
    Polygon p = fp.corners();
    for (auto& v : p) v += base_shift;
    out.push_back(std::move(p));
  }
  return out;
}

double ApproxTile::area() const {
  double a = 0;
  for (const auto& fp : polygons) a += fp.area();
  return a;
}

ApproxTile renormalize(const PisotContext& ctx, const Chain& c, int k) {
  ApproxTile t;
  t.level = k;
  for (const auto& [f, coeff] : c.terms()) {
    FacePolygon fp = project_face(ctx, f, coeff);
    fp.origin = ctx.proj.apply_power(fp.origin, k);
    fp.edge1 = ctx.proj.apply_power(fp.edge1, k);
    fp.edge2 = ctx.proj.apply_power(fp.edge2, k);
    t.polygons.push_back(fp);
  }
  return t;
}

ApproxTile rauzy_approx(const PisotContext& ctx, WedgeType a, int k) {
  ctx.require_planar();
  if (k < 0) throw std::invalid_argument("level must be nonnegative");
  ApproxTile t = renormalize(ctx, apply_map_power(ctx.top, single_face(ctx.n(), LatticePoint{}, a), k), k);
  t.type = a;
  return t;
}

SetEquationReport set_equation_check(const PisotContext& ctx, WedgeType a, int k, double tol) {
  SetEquationReport rep;
  rep.tol = tol;
  const ApproxTile lhs = rauzy_approx(ctx, a, k + 1);
  std::vector<FacePolygon> rhs;
  for (const auto& term : ctx.top.image(a)) {
    const Vec2 shift = ctx.proj.kc(term.offset);
    for (FacePolygon fp : rauzy_approx(ctx, term.type, k).polygons) {
      fp.origin = ctx.proj.apply_power(fp.origin + shift, 1);
      fp.edge1 = ctx.proj.apply_power(fp.edge1, 1);
      fp.edge2 = ctx.proj.apply_power(fp.edge2, 1);
      rhs.push_back(fp);
    }
  }
  rep.lhs_polygons = lhs.polygons.size();
  rep.rhs_polygons = rhs.size();
  bool matched = rep.lhs_polygons == rep.rhs_polygons;
  std::vector<bool> used(rhs.size(), false);
  for (const auto& p : lhs.polygons) {
    double best = 1e300;
    std::size_t at = rhs.size();
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      if (used[j] || !(rhs[j].face.type == p.face.type)) continue;
      const double dj = std::max({dist(p.origin, rhs[j].origin), dist(p.edge1, rhs[j].edge1), dist(p.edge2, rhs[j].edge2)});
      if (dj < best) {
        best = dj;
        at = j;
      }
    }
    if (at == rhs.size()) {
      matched = false;
      continue;
    }
    used[at] = true;
    rep.max_mismatch = std::max(rep.max_mismatch, best);
  }
  const auto polys = lhs.corners();
  rep.overlap = overlap_audit(polys, tol).total / lhs.area();
  rep.pass = matched && rep.max_mismatch <= tol && rep.overlap <= tol;
  return rep;
}

double area_drift(const PisotContext& ctx, int k_max) {
  double drift = 0;
  for (WedgeType a : ctx.top.types()) {
    const double a0 = rauzy_approx(ctx, a, 0).area();
    Chain c = single_face(ctx.n(), LatticePoint{}, a);
    for (int k = 1; k <= k_max; ++k) {
      c = apply_map(ctx.top, c);
      drift = std::max(drift, std::abs(renormalize(ctx, c, k).area() - a0) / a0);
    }
  }
  return drift;
}

std::vector<Vec2> sample_polygons(const std::vector<Polygon>& polys, double step) {
  std::vector<Vec2> out;
  for (const auto& p : polys) {
    const auto s = sample_convex(p, step);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

std::vector<Vec2> sample_segments(const std::vector<Segment>& segs, double step) {
  std::vector<Vec2> out;
  for (const auto& s : segs) {
    const int parts = std::max(1, static_cast<int>(std::ceil(dist(s.a, s.b) / step)));
    for (int i = 0; i <= parts; ++i) out.push_back(s.a + (static_cast<double>(i) / parts) * (s.b - s.a));
  }
  return out;
}

TilingAudit tiling_audit(const std::vector<Polygon>& polys, const Polygon& region, double tol) {
  TilingAudit audit;
  audit.tol = tol;
  audit.region_area = area(region);
  const Box rb = bounding_box(region);
  std::vector<Polygon> clipped;
  double covered = 0;
  for (const auto& p : polys) {
    if (!bounding_box(p).intersects(rb)) continue;
    Polygon c = clip_convex(p, region);
    const double a = area(c);
    if (c.size() < 3 || a <= 0) continue;
    covered += a;
    clipped.push_back(std::move(c));
  }
  audit.polygons = clipped.size();
  const double overlap = overlap_audit(clipped, tol).total;
  audit.overlap = overlap / audit.region_area;
  audit.uncovered = std::max(0.0, (audit.region_area - covered + overlap) / audit.region_area);
  return audit;
}

namespace {

std::vector<Segment> renormalized_boundary(const PisotContext& ctx, const Chain& c, int k) {
  auto segs = boundary_segments(ctx, c);
  for (auto& s : segs) {
    s.a = ctx.proj.apply_power(s.a, k);
    s.b = ctx.proj.apply_power(s.b, k);
  }
  return segs;
}

std::vector<Vec2> embedded(const Linear2& t, std::vector<Vec2> pts) {
  for (auto& p : pts) p = t(p);
  return pts;
}

std::vector<Segment> embedded(const Linear2& t, std::vector<Segment> segs) {
  for (auto& s : segs) s = {t(s.a), t(s.b)};
  return segs;
}

std::vector<Polygon> embedded(const Linear2& t, std::vector<Polygon> polys) {
  for (auto& p : polys)
    for (auto& v : p) v = t(v);
  return polys;
}

double max_norm(const std::vector<Polygon>& polys) {
  double r = 0;
  for (const auto& p : polys)
    for (Vec2 v : p) r = std::max(r, norm(v));
  return r;
}

}  // namespace

PatchAudit aperiodic_audit(const PisotContext& ctx, const Chain& seed, int level, std::size_t min_faces, double tol) {
  ctx.require_planar();
  PatchAudit rep;
  for (int m = 1; m <= 12 && !rep.exponent; ++m)
    if (seed_contained(ctx, seed, m)) rep.exponent = m;
  if (!rep.exponent) throw SeedRejected("seed is not contained in any of its first twelve images");
  Chain patch = seed;
  while (patch.size() < min_faces) {
    patch = apply_map_power(ctx.top, patch, rep.exponent);
    rep.patch_level += rep.exponent;
  }
  rep.tiles = patch.size();
  const Chain full = apply_map_power(ctx.top, patch, level);
  double r0 = 1e300;
  for (const auto& s : renormalized_boundary(ctx, full, level)) r0 = std::min(r0, segment_distance({0, 0}, s.a, s.b));
  rep.region_radius = 0.9 * r0;
  rep.audit = tiling_audit(renormalize(ctx, full, level).corners(), disk_polygon({0, 0}, rep.region_radius), tol);
  return rep;
}

PatchAudit periodic_audit(const PisotContext& ctx, const PeriodicElement& p, int level, int copies, double tol) {
  ctx.require_planar();
  if (p.lattice.size() != 2) throw std::invalid_argument("periodic audit needs a rank-two lattice");
  PatchAudit rep;
  const auto tile = renormalize(ctx, apply_map_power(ctx.top, p.faces, level), level).corners();
  const Vec2 l1 = ctx.proj.kc(p.lattice[0]), l2 = ctx.proj.kc(p.lattice[1]);
  std::vector<Polygon> all;
  for (int i = -copies; i <= copies; ++i)
    for (int j = -copies; j <= copies; ++j) {
      const Vec2 shift = static_cast<double>(i) * l1 + static_cast<double>(j) * l2;
      for (Polygon q : tile) {
        for (auto& v : q) v += shift;
        all.push_back(std::move(q));
      }
      ++rep.tiles;
    }
  const double inradius = copies * std::abs(cross(l1, l2)) / std::max(norm(l1), norm(l2));
  rep.region_radius = inradius - max_norm(tile);
  if (rep.region_radius <= 0) throw std::invalid_argument("too few lattice copies for the tile diameter");
  rep.audit = tiling_audit(all, disk_polygon({0, 0}, rep.region_radius), tol);
  return rep;
}

MeasureEigenReport measure_eigen_check(const PisotContext& ctx, double tol) {
  ctx.require_planar();
  MeasureEigenReport rep;
  rep.tol = tol;
  rep.beta = static_cast<double>(ctx.pisot.beta_value());
  const auto& types = ctx.top.types();
  for (WedgeType t : types) {
    const auto l = t.letters();
    rep.areas.push_back(std::abs(cross(ctx.proj.kc_unit(l[0]), ctx.proj.kc_unit(l[1]))));
  }
  const IntMatrix m = abelianization(ctx.top).abs();
  for (int a = 0; a < static_cast<int>(types.size()); ++a) {
    double image = 0;
    for (int b = 0; b < static_cast<int>(types.size()); ++b) image += static_cast<double>(m(b, a)) * rep.areas[b];
    const double expected = rep.beta * rep.areas[a];
    rep.residual = std::max(rep.residual, std::abs(image - expected) / expected);
  }
  return rep;
}

Linear2 embedding_metric(const ProjectionData& proj) {
  std::size_t c = proj.beta_conj.size();
  for (std::size_t i = 0; i < proj.beta_conj.size(); ++i)
    if (!proj.conj_is_real[i] && std::abs(proj.beta_conj[i]) < 1) {
      c = i;
      break;
    }
  if (c == proj.beta_conj.size()) throw std::invalid_argument("no complex contracting conjugate");
  // π_c x = 2Re(z u) with z = x_re + i x_im, so the columns of the embedding are 2Re u and −2Im u.
  double g11 = 0, g12 = 0, g22 = 0;
  for (const auto& u : proj.u_conj[c]) {
    const double re = 2 * static_cast<double>(u.real()), im = -2 * static_cast<double>(u.imag());
    g11 += re * re;
    g12 += re * im;
    g22 += im * im;
  }
  const double r11 = std::sqrt(g11), r12 = g12 / r11;
  return {r11, r12, 0, std::sqrt(g22 - r12 * r12)};
}

bool ConvergenceSeries::decreasing() const {
  for (std::size_t i = 1; i < distances.size(); ++i)
    if (distances[i] > distances[i - 1]) return false;
  return !distances.empty();
}

ConvergenceSeries boundary_convergence_report(const PisotContext& ctx, WedgeType a, int k_max, double step) {
  ConvergenceSeries s;
  const Linear2 t = embedding_metric(ctx.proj);
  Chain c = single_face(ctx.n(), LatticePoint{}, a);
  auto prev = sample_segments(embedded(t, renormalized_boundary(ctx, c, 0)), step);
  for (int k = 1; k <= k_max; ++k) {
    c = apply_map(ctx.top, c);
    auto cur = sample_segments(embedded(t, renormalized_boundary(ctx, c, k)), step);
    s.levels.push_back(k - 1);
    s.distances.push_back(hausdorff(prev, cur));
    prev = std::move(cur);
  }
  return s;
}

ConvergenceSeries two_oracle_series(const PisotContext& ctx, WedgeType a, const std::vector<int>& levels, double step) {
  const Linear2 t = embedding_metric(ctx.proj);
  ConvergenceSeries s;
  for (int k : levels) {
    const auto cloud = embedded(t, dumont_thomas_cloud(ctx, CloudGraph::Wedge, a, kCloudDepthPerLevel * k));
    const auto patch = sample_polygons(embedded(t, rauzy_approx(ctx, a, k).corners()), step);
    s.levels.push_back(k);
    s.distances.push_back(hausdorff(cloud, patch));
  }
  return s;
}

std::vector<Decomposition> hokkaido_decompositions() {
  auto e = [](int a) { return unit_point(a); };
  auto t = [](std::vector<int> l) { return WedgeType::from_letters(l); };
  return {
      {"2^3", t({2, 3}), {{1, e(1)}, {4, e(4)}}},
      {"2^4", t({2, 4}), {{1, e(3)}, {3, e(3)}, {5, e(3)}}},
      {"3^4", t({3, 4}), {{2, e(2)}, {5, e(5)}}},
      {"2^5", t({2, 5}), {{1, e(1)}, {4, e(4) - e(2)}}},
      {"3^5", t({3, 5}), {{1, e(4)}, {4, e(4)}}},
  };
}

Decomposition hokkaido_printed_3_5() {
  return {"3^5 printed", WedgeType::from_letters({3, 5}), {{5, unit_point(5)}, {1, unit_point(4)}}};
}

std::vector<DecompositionResult> decomposition_check(const PisotContext& ctx, const std::vector<Decomposition>& decs,
                                                     const std::vector<int>& levels, double step) {
  const Linear2 t = embedding_metric(ctx.proj);
  const GraphIFS prefix = prefix_ifs(ctx);
  std::vector<DecompositionResult> out;
  for (const auto& dec : decs) out.push_back({dec, {}});
  for (int k : levels) {
    const auto clouds = prefix.clouds(kCloudDepthPerLevel * k);
    for (auto& r : out) {
      std::vector<Vec2> rhs;
      for (const auto& piece : r.identity.pieces) {
        const Vec2 shift = ctx.proj.kc(piece.shift);
        for (Vec2 p : clouds[piece.letter - 1]) rhs.push_back(t(-p - shift));
      }
      const auto lhs = sample_polygons(embedded(t, rauzy_approx(ctx, r.identity.type, k).corners()), step);
      r.series.levels.push_back(k);
      r.series.distances.push_back(hausdorff(lhs, rhs));
    }
  }
  return out;
}

}  // namespace rauzy
