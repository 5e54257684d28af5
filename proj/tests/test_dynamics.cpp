#include <doctest.h>

#include "rauzy/dynamics.hpp"
#include "rauzy/fractal.hpp"
#include "rauzy/kernels.hpp"

using namespace rauzy;

namespace {

const PisotContext& hokkaido() {
  static const PisotContext ctx = PisotContext::build(families::sigma(0));
  return ctx;
}

}  // namespace

TEST_CASE("χ morphism") {
  CHECK(chi_apply(word_from_string("12345")) == word_from_string("3423432"));
  CHECK(word_to_string(ChiMorphism{true, false}.image(1)) == "43");
  CHECK(word_to_string(ChiMorphism{false, true}.image(5)) == "23");
  CHECK(in_chi_family(families::sigma(3)));
  CHECK_FALSE(in_chi_family(families::tribonacci()));
  CHECK_THROWS_AS(require_chi_family(families::tribonacci()), InputError);
}

TEST_CASE("suffix graph matches the dual tables") {
  for (int t = 0; t <= 2; ++t) {
    const PisotContext ctx = PisotContext::build(families::sigma(t));
    const WedgeSuffixGraph g = build_wedge_suffix_graph(ctx);
    CHECK(g.vertices.size() == 10);
    CHECK(suffix_graph_matches_tables(ctx, g));
  }
}

TEST_CASE("coincidence table of the Hokkaido substitution") {
  const CoincidenceTable t = strong_coincidence(hokkaido());
  CHECK(t.complete());
  CHECK(t.entries.size() == 30);
  CHECK(t.lookup(WedgeType::parse("1^2^3"), WedgeType::parse("2^4^5")) == 12);
  CHECK(t.lookup(WedgeType::parse("2^4^5"), WedgeType::parse("3^4^5")) == 8);
  CHECK(t.lookup(WedgeType::parse("3^4^5"), WedgeType::parse("2^4^5")) == 8);
  const std::string csv = t.to_csv();
  CHECK(csv.rfind("a,b,k\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 31);
}

TEST_CASE("graph IFS contracts") {
  const PisotContext& ctx = hokkaido();
  const Linear2 m = contraction_map(ctx);
  CHECK(m.operator_norm() < 1);
  CHECK(m.operator_norm() == doctest::Approx(static_cast<double>(ctx.proj.contraction())).epsilon(1e-9));
  for (const GraphIFS& g : {prefix_ifs(ctx), suffix_ifs(ctx), wedge_ifs(ctx)}) CHECK(g.contraction() < 1);
}

TEST_CASE("prefix clouds are the Dumont-Thomas sums") {
  const PisotContext& ctx = hokkaido();
  // Points π_c l(u_[0,N)) with u_N = a lie in R(a): the classical classifier agrees.
  const ExchangeSystem sys(ctx);
  const Word u = fixed_point_prefix(ctx.sub, 1, 400);
  LatticePoint acc{};
  int unique = 0, wrong = 0;
  for (int a : u) {
    const Classification c = sys.classical.classify(ctx.proj.kc(acc));
    if (c.status == Classification::Status::Unique) {
      ++unique;
      wrong += c.label != a;
    }
    CHECK(c.status != Classification::Status::Outside);
    ++acc[a - 1];
  }
  CHECK(wrong == 0);
  CHECK(unique > 300);
}

TEST_CASE("wedge cloud sits on the level-k tile") {
  const PisotContext& ctx = hokkaido();
  const WedgeType a = WedgeType::parse("2^3");
  const auto cloud = dumont_thomas_cloud(ctx, CloudGraph::Wedge, a, 18);
  const auto patch = sample_polygons(rauzy_approx(ctx, a, 6).corners(), 0.01);
  CHECK(directed_hausdorff(cloud, patch) < 0.3);
}

TEST_CASE("modified cloud follows χ(u)") {
  const PisotContext& ctx = hokkaido();
  const auto pts = modified_cloud(ctx, 3, 300);
  const Word w = chi_apply(fixed_point_prefix(ctx.sub, 1, 300));
  CHECK(pts.size() == static_cast<std::size_t>(std::count(w.begin(), w.begin() + 300, 3)));
}

TEST_CASE("first return on sampled points") {
  const PisotContext& ctx = hokkaido();
  const ExchangeSystem sys(ctx);
  const FirstReturnReport r = first_return_check(ctx, sys, 400, 3);
  CHECK(r.failed == 0);
  CHECK(r.verified + r.ambiguous == r.samples);
  CHECK(r.verified_fraction() >= 0.99);
  const FirstReturnReport again = first_return_check(ctx, sys, 400, 3);
  CHECK(again.verified == r.verified);
}

TEST_CASE("orbit coding of 0 reproduces χ(u)") {
  const PisotContext& ctx = hokkaido();
  const ExchangeSystem sys(ctx);
  const CodingReport r = coding_cross_check(ctx, sys, 500);
  CHECK(r.mismatches.empty());
  CHECK(r.coding.front() == 3);
  CHECK(r.coding == r.expected);
}

TEST_CASE("exchange orbit translates by π_c(e_a)") {
  const PisotContext& ctx = hokkaido();
  const ExchangeSystem sys(ctx);
  const Vec2 start = ctx.proj.kc(unit_point(3) + unit_point(4));
  const OrbitResult r = exchange_orbit(ctx, sys, start, 20);
  Vec2 expect = start;
  for (int a : r.coding) expect += ctx.proj.kc_unit(a);
  CHECK(dist(expect, r.endpoint) < 1e-9);
}
