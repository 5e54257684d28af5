#include <doctest.h>

#include "rauzy/kernels.hpp"
#include "rauzy/nice.hpp"

using namespace rauzy;

TEST_CASE("projected faces are parallelograms spanned by π_c of the letters") {
  const PisotContext ctx = PisotContext::build(families::sigma(0));
  for (WedgeType t : ctx.top.types()) {
    const FacePolygon fp = project_face(ctx, Face{{}, t});
    const auto l = t.letters();
    CHECK(fp.area() == doctest::Approx(std::abs(cross(ctx.proj.kc_unit(l[0]), ctx.proj.kc_unit(l[1])))));
    const Polygon p = fp.corners();
    CHECK(p.size() == 4);
    CHECK(signed_area(p) > 0);
  }
}

TEST_CASE("E2 preserves projected area up to β") {
  const PisotContext ctx = PisotContext::build(families::sigma(0));
  const double beta = static_cast<double>(ctx.pisot.beta_value());
  for (WedgeType t : ctx.top.types()) {
    const Chain c = single_face(ctx.n(), {}, t);
    // |det M on K_c| = 1/β, so E² multiplies area by β before renormalization.
    CHECK(chain_area(ctx, apply_map(ctx.top, c)) == doctest::Approx(beta * chain_area(ctx, c)).epsilon(1e-9));
  }
}

TEST_CASE("hypotheses for the Hokkaido substitution") {
  const PisotContext ctx = PisotContext::build(families::sigma(0));
  const NiceReport r = check_nice(ctx);
  CHECK(r.s1.pass);
  CHECK(r.s2.pass);
  CHECK(r.p.pass);
  CHECK(r.n.pass);
  CHECK(r.s2.radius > 0);
}

TEST_CASE("the four-letter family fails S1 with a witness") {
  const PisotContext ctx = PisotContext::build(families::non_projecting(2));
  const S1Report r = check_S1(ctx);
  CHECK_FALSE(r.pass);
  REQUIRE_FALSE(r.overlaps.empty());
  CHECK(r.overlaps.front().area > 1e-3);
}

TEST_CASE("seed containment for single faces") {
  for (int t = 0; t <= 2; ++t) {
    const PisotContext ctx = PisotContext::build(families::sigma(t));
    for (WedgeType a : ctx.top.types()) CHECK(seed_contained(ctx, single_face(ctx.n(), {}, a), 5));
  }
}

TEST_CASE("stepped surface patches are nested and project well") {
  const PisotContext ctx = PisotContext::build(families::sigma(0));
  const Chain seed = parse_seed("2^3+2^4+3^4", 5);
  const Patch p0 = stepped_surface(ctx, seed, 5, 0);
  CHECK(p0.chain == seed);
  const Patch p1 = stepped_surface(ctx, seed, 5, 1), p2 = stepped_surface(ctx, seed, 5, 2);
  CHECK(p2.chain.size() > p1.chain.size());
  for (const auto& [f, c] : p1.chain.terms()) CHECK(p2.chain.coeff(f) == c);
  CHECK(projects_well(ctx, p2.chain).pass);
  for (const auto& fp : p2.polygons) CHECK(near_membership(ctx, fp.face));
}

TEST_CASE("seed rejection") {
  const PisotContext ctx = PisotContext::build(families::sigma(0));
  Chain shifted(5, 2);
  LatticePoint x{};
  x[0] = 1;
  shifted.add(Face{x, WedgeType::parse("2^3")}, 1);
  CHECK_THROWS_AS(stepped_surface(ctx, shifted, 5, 1), SeedRejected);
  CHECK_THROWS(parse_seed("2^3+7^8", 5));
}

TEST_CASE("single-face boundary") {
  const PisotContext ctx = PisotContext::build(families::sigma(0));
  const auto segs = boundary_segments(ctx, single_face(5, {}, WedgeType::parse("2^3")));
  CHECK(segs.size() == 4);
  CHECK(boundary_segments(ctx, parse_seed("2^3+2^4+3^4", 5)).size() == 6);
}

TEST_CASE("touching elements and the annulus") {
  const PisotContext ctx = PisotContext::build(families::sigma(0));
  const auto els = touching_elements(ctx);
  REQUIRE(els.size() == 5);
  const SurroundReport r = surrounds(ctx, apply_map_power(ctx.top, els.front().faces, 15), els.front().faces);
  CHECK(r.contained);
  CHECK(r.gap > 0);
  CHECK_FALSE(surrounds(ctx, els.front().faces, els.front().faces).pass());
}

TEST_CASE("periodic candidates carry rank-two lattices") {
  const PisotContext ctx = PisotContext::build(families::sigma(0));
  bool found = false;
  for (const auto& p : periodic_candidates(ctx)) {
    if (p.lattice.size() != 2) continue;
    CHECK(p.covolume > 0);
    if (p.faces == parse_seed("2^3+2^4+3^4", 5)) {
      found = true;
      // covolume equals the projected area of P
      CHECK(p.covolume == doctest::Approx(chain_area(ctx, p.faces)).epsilon(1e-9));
    }
  }
  CHECK(found);
}

TEST_CASE("finiteness probe covers a disk") {
  const PisotContext ctx = PisotContext::build(families::sigma(0));
  const FinitenessReport r = finiteness_probe(ctx, parse_seed("3^4+3^5+4^5", 5), 5, 3, 1.0);
  CHECK(r.covers);
  REQUIRE(r.surround);
  CHECK(r.surround->pass());
}

TEST_CASE("three-dimensional contracting spaces are rejected by the planar layer") {
  const Substitution s = parse_substitution("1 -> 1 2\n2 -> 1 3\n3 -> 1 4\n4 -> 1\n");
  const PisotContext ctx = PisotContext::build(s);
  CHECK(ctx.d() == 4);
  CHECK_THROWS_AS(ctx.require_planar(), GeometryUnsupported);
}
