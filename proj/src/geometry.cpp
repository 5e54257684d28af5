#include "rauzy/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "rauzy/kernels.hpp"

namespace rauzy {

PisotContext PisotContext::build(const Substitution& s) {
  PisotContext ctx;
  ctx.sub = s;
  ctx.pisot = pisot_split(s);
  if (!ctx.pisot.unit) throw InputError("substitution is not unimodular");
  ctx.proj = projections(s, ctx.pisot);
  ctx.matrix = incidence_matrix(s);
  ctx.inverse = *unimodular_inverse(ctx.matrix);
  const int d = ctx.pisot.d;
  if (d >= 2) ctx.top = geometric_map(s, d - 1);
  if (d >= 3) ctx.below = geometric_map(s, d - 2);
  return ctx;
}

void PisotContext::require_planar() const {
  if (!planar()) throw GeometryUnsupported("polygon geometry needs a two-dimensional contracting space (d = 3)");
}

FaceKey face_key(const PisotContext& ctx, const Face& f) { return {ctx.proj.pi_key(f.base), f.type}; }

Polygon FacePolygon::corners() const {
  Polygon p{origin, origin + edge1, origin + edge1 + edge2, origin + edge2};
  return counter_clockwise(std::move(p));
}

FacePolygon project_face(const PisotContext& ctx, const Face& f, std::int64_t coeff) {
  ctx.require_planar();
  const auto letters = f.type.letters();
  if (letters.size() != 2) throw std::invalid_argument("projected faces must be two-dimensional");
  FacePolygon fp;
  fp.face = f;
  fp.origin = ctx.proj.kc(f.base);
  fp.edge1 = ctx.proj.kc_unit(letters[0]);
  fp.edge2 = ctx.proj.kc_unit(letters[1]);
  const int s = cross(fp.edge1, fp.edge2) >= 0 ? 1 : -1;
  fp.orientation = coeff >= 0 ? s : -s;
  return fp;
}

std::vector<FacePolygon> project_chain(const PisotContext& ctx, const Chain& c) {
  std::vector<FacePolygon> out;
  for (const auto& [f, coeff] : c.terms()) out.push_back(project_face(ctx, f, coeff));
  return out;
}

double chain_area(const PisotContext& ctx, const Chain& c) {
  double a = 0;
  for (const auto& fp : project_chain(ctx, c)) a += fp.area();
  return a;
}

ProjectsWellReport projects_well(const PisotContext& ctx, const Chain& c, double eps) {
  if (!c.is_geometric()) throw std::invalid_argument("projects_well expects a geometric chain");
  const auto faces = project_chain(ctx, c);
  std::vector<Polygon> polys;
  for (const auto& fp : faces) polys.push_back(fp.corners());
  const OverlapAudit audit = overlap_audit(polys, eps);
  ProjectsWellReport rep;
  rep.total_overlap = audit.total;
  for (const auto& p : audit.pairs) rep.witnesses.push_back({faces[p.first].face, faces[p.second].face, p.area});
  // Distinct faces with the same projection overlap completely.
  std::map<FaceKey, Face> seen;
  for (const auto& fp : faces) {
    auto [it, inserted] = seen.emplace(face_key(ctx, fp.face), fp.face);
    if (!inserted) rep.witnesses.push_back({it->second, fp.face, fp.area()});
  }
  rep.pass = rep.witnesses.empty();
  return rep;
}

bool near_membership(const PisotContext& ctx, const Face& f) {
  const WedgeType a = f.type.complement(ctx.n());
  const AlgebraicNumber p = ctx.proj.pe_exact(f.base);
  const AlgebraicNumber w = ctx.proj.pe_exact(a.indicator());
  const auto& k = ctx.proj.field;
  return k.sign_of(p) >= 0 && k.compare(p, w) < 0;
}

namespace {

std::set<FaceKey> key_set(const PisotContext& ctx, const Chain& c) {
  std::set<FaceKey> keys;
  for (const auto& [f, coeff] : c.terms()) keys.insert(face_key(ctx, f));
  return keys;
}

void require_seed_shape(const PisotContext& ctx, const Chain& seed) {
  if (seed.k() != ctx.d() - 1) throw SeedRejected("seed faces must have dimension d − 1");
  for (const auto& [f, coeff] : seed.terms())
    if (!is_zero(f.base)) throw SeedRejected("seed faces must be based at 0");
  if (!seed.is_geometric()) throw SeedRejected("seed is not geometric");
}

}  // namespace

bool seed_contained(const PisotContext& ctx, const Chain& seed, int m) {
  const auto image = key_set(ctx, apply_map_power(ctx.top, seed, m));
  for (const auto& k : key_set(ctx, seed))
    if (!image.count(k)) return false;
  return true;
}

Patch stepped_surface(const PisotContext& ctx, const Chain& seed, int m, int k) {
  require_seed_shape(ctx, seed);
  if (m < 1) throw SeedRejected("exponent must be positive");
  if (!projects_well(ctx, seed).pass) throw SeedRejected("seed does not project well");
  if (!seed_contained(ctx, seed, m)) throw SeedRejected("seed is not contained in its image under E^m");
  Patch p;
  p.exponent = m;
  p.iterations = k;
  // Nested images: {U} ⊆ {E^m U} ⊆ {E^{2m} U} ⊆ ...
  p.chain = apply_map_power(ctx.top, seed, m * k);
  p.polygons = project_chain(ctx, p.chain);
  return p;
}

namespace {

double lattice_covolume(const PisotContext& ctx, const std::vector<LatticePoint>& basis) {
  if (basis.size() != 2) return 0;
  return std::abs(cross(ctx.proj.kc(basis[0]), ctx.proj.kc(basis[1])));
}

}  // namespace

std::vector<PeriodicElement> touching_elements(const PisotContext& ctx) {
  ctx.require_planar();
  std::vector<PeriodicElement> out;
  for (WedgeType triple : wedge_types(ctx.n(), ctx.d())) {
    const auto letters = triple.letters();
    PeriodicElement e;
    e.kind = PeriodicElement::Kind::Touching;
    e.faces = Chain(ctx.n(), ctx.d() - 1);
    for (int a : letters) e.faces.add(Face{LatticePoint{}, triple.without(a)}, 1);
    for (std::size_t i = 1; i < letters.size(); ++i)
      e.lattice.push_back(unit_point(letters[0]) - unit_point(letters[i]));
    e.covolume = lattice_covolume(ctx, e.lattice);
    if (e.covolume > 1e-12 && projects_well(ctx, e.faces).pass) out.push_back(std::move(e));
  }
  return out;
}

std::vector<PeriodicElement> periodic_candidates(const PisotContext& ctx) {
  ctx.require_planar();
  std::vector<PeriodicElement> out;
  const int n = ctx.n();
  for (WedgeType t : wedge_types(n, 2)) {
    PeriodicElement e;
    e.faces = single_face(n, LatticePoint{}, t);
    for (int a : t.letters()) e.lattice.push_back(unit_point(a));
    e.covolume = lattice_covolume(ctx, e.lattice);
    if (e.covolume > 1e-12) out.push_back(std::move(e));
  }
  // Touching pairs (0, b∧a) + (0, c∧a).
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        if (a == b || a == c) continue;
        PeriodicElement e;
        e.kind = PeriodicElement::Kind::TouchingPair;
        e.faces = Chain(n, 2);
        e.faces.add(LatticePoint{}, {b, a}, 1);
        e.faces.add(LatticePoint{}, {c, a}, 1);
        // Orient both faces positively.
        Chain oriented(n, 2);
        for (const auto& [f, coeff] : e.faces.terms()) oriented.add(f, 1);
        e.faces = oriented;
        e.lattice = {unit_point(b) - unit_point(c), unit_point(a)};
        e.covolume = lattice_covolume(ctx, e.lattice);
        if (e.covolume > 1e-12 && projects_well(ctx, e.faces).pass) out.push_back(std::move(e));
      }
  for (auto& e : touching_elements(ctx)) out.push_back(std::move(e));
  return out;
}

std::vector<Segment> boundary_segments(const PisotContext& ctx, const Chain& c) {
  ctx.require_planar();
  struct EdgeKey {
    PiKey base;
    int letter;
    auto operator<=>(const EdgeKey&) const = default;
  };
  std::map<EdgeKey, std::pair<int, Segment>> count;
  for (const auto& [f, coeff] : c.terms()) {
    const auto letters = f.type.letters();
    for (int i = 0; i < 2; ++i) {
      const int along = letters[i], other = letters[1 - i];
      for (const LatticePoint& base : {f.base, f.base + unit_point(other)}) {
        const Vec2 a = ctx.proj.kc(base);
        auto& slot = count[EdgeKey{ctx.proj.pi_key(base), along}];
        slot.first += 1;
        slot.second = {a, a + ctx.proj.kc_unit(along)};
      }
    }
  }
  std::vector<Segment> out;
  for (const auto& [k, v] : count)
    if (v.first == 1) out.push_back(v.second);
  return out;
}

double boundary_gap(const std::vector<Segment>& a, const std::vector<Segment>& b) {
  double best = 1e300;
  for (const auto& s : a)
    for (const auto& t : b) best = std::min(best, segment_segment_distance(s.a, s.b, t.a, t.b));
  return best;
}

SurroundReport surrounds(const PisotContext& ctx, const Chain& outer, const Chain& inner) {
  SurroundReport rep;
  const auto outer_keys = key_set(ctx, outer);
  rep.contained = true;
  for (const auto& k : key_set(ctx, inner))
    if (!outer_keys.count(k)) rep.contained = false;
  rep.gap = boundary_gap(boundary_segments(ctx, outer), boundary_segments(ctx, inner));
  return rep;
}

FinitenessReport finiteness_probe(const PisotContext& ctx, const Chain& seed, int m, int k_max, double radius,
                                  double eps) {
  require_seed_shape(ctx, seed);
  if (!seed_contained(ctx, seed, m)) throw SeedRejected("seed is not contained in its image under E^m");
  FinitenessReport rep;
  const Polygon disk = disk_polygon({0, 0}, radius);
  const double disk_area = area(disk);
  Chain cur = seed;
  for (int j = 0; j <= k_max; ++j) {
    if (j > 0) cur = apply_map_power(ctx.top, cur, m);
    std::vector<Polygon> polys;
    double covered = 0;
    for (const auto& fp : project_chain(ctx, cur)) {
      polys.push_back(fp.corners());
      covered += convex_overlap_area(polys.back(), disk);
    }
    CoverageStep step;
    step.iteration = j;
    step.faces = cur.size();
    step.overlap = overlap_audit(polys, eps).total / disk_area;
    step.uncovered = std::max(0.0, (disk_area - covered) / disk_area + step.overlap);
    rep.steps.push_back(step);
  }
  rep.covers = !rep.steps.empty() && rep.steps.back().uncovered <= eps;
  if (seed.size() == static_cast<std::size_t>(ctx.d())) {
    const Chain outer = apply_map_power(ctx.top, seed, rep.surround_exponent);
    rep.surround = surrounds(ctx, outer, seed);
  }
  return rep;
}

Chain parse_seed(const std::string& text, int n) {
  Chain c(n, 0);
  std::istringstream is(text);
  std::string tok;
  bool first = true;
  while (std::getline(is, tok, '+')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char ch) { return std::isspace(ch); }), tok.end());
    if (tok.empty()) continue;
    int sign = 1;
    if (tok[0] == '-') {
      sign = -1;
      tok.erase(0, 1);
    }
    const WedgeType t = WedgeType::parse(tok);
    for (int a : t.letters())
      if (a > n) throw InputError("seed letter out of range: " + tok);
    if (first) {
      c = Chain(n, t.size());
      first = false;
    }
    if (t.size() != c.k()) throw InputError("seed faces must share one dimension");
    c.add(Face{LatticePoint{}, t}, sign);
  }
  if (first) throw InputError("empty seed");
  return c;
}

}  // namespace rauzy
