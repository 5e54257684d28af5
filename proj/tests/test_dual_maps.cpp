#include <doctest.h>

#include <random>

#include "rauzy/geometry.hpp"

using namespace rauzy;

namespace {

std::vector<MapTerm> sorted(std::vector<MapTerm> v) {
  std::sort(v.begin(), v.end(), [](const MapTerm& a, const MapTerm& b) {
    return std::make_tuple(a.type.mask(), a.offset, a.sign) < std::make_tuple(b.type.mask(), b.offset, b.sign);
  });
  return v;
}

}  // namespace

TEST_CASE("geometric dual agrees with the closed suffix form") {
  for (const Substitution& s : {families::sigma(0), families::sigma(1), families::sigma(3), families::tribonacci()}) {
    const int n = s.size();
    for (int m = 1; m < n; ++m) {
      const DualMapTables a = geometric_map(s, m), b = geometric_map_closed_form(s, m);
      for (WedgeType t : a.types()) {
        Chain ca(n, m), cb(n, m);
        a.apply_face(Face{{}, t}, 1, ca);
        b.apply_face(Face{{}, t}, 1, cb);
        CHECK(ca == cb);
      }
    }
  }
}

TEST_CASE("E2 of the family") {
  for (int t = 0; t <= 3; ++t) {
    const Substitution s = families::sigma(t);
    const DualMapTables e2 = geometric_map(s, 2);
    const IntMatrix inv = PisotContext::build(s).inverse;
    // (0,1∧2) ↦ −(0,1∧5) and (0,3∧4) ↦ (0,2∧3) for every t
    CHECK(sorted(e2.image(WedgeType::parse("1^2"))) == std::vector<MapTerm>{{{}, WedgeType::parse("1^5"), -1}});
    CHECK(sorted(e2.image(WedgeType::parse("3^4"))) == std::vector<MapTerm>{{{}, WedgeType::parse("2^3"), 1}});
    // (0,2∧4) ↦ Σ_{j=1}^{t+1} (M⁻¹((t+1−j)e1 + e2), 3∧5) + (0,1∧3)
    std::vector<MapTerm> want{{{}, WedgeType::parse("1^3"), 1}};
    for (int j = 1; j <= t + 1; ++j) {
      LatticePoint y{};
      y[0] = t + 1 - j;
      y[1] = 1;
      want.push_back({inv.apply(y), WedgeType::parse("3^5"), 1});
    }
    CHECK(sorted(e2.image(WedgeType::parse("2^4"))) == sorted(want));
  }
}

TEST_CASE("duality of E_k and E_k*") {
  for (int k = 1; k <= 4; ++k) {
    const DualityReport r = duality_check(families::sigma(0), k, 1);
    CHECK(r.violations == 0);
    CHECK(r.nonzero > 0);
  }
  CHECK(duality_check(families::tribonacci(), 2, 2).violations == 0);
}

TEST_CASE("E_k is multiplicative on wedges") {
  // E_k(0, a) has abelianized matrix B_k = ∧^k M.
  const Substitution s = families::sigma(1);
  for (int k = 1; k <= 3; ++k) {
    const ExteriorMatrices em = exterior_matrices(s, k);
    CHECK(abelianization(extension_map(s, k)) == em.exterior);
    CHECK(em.dual == em.exterior.transposed());
    const IntMatrix m = incidence_matrix(s);
    const auto types = wedge_types(5, k);
    for (std::size_t r = 0; r < types.size(); ++r)
      for (std::size_t c = 0; c < types.size(); ++c) {
        std::vector<int> rows, cols;
        for (int a : types[r].letters()) rows.push_back(a - 1);
        for (int a : types[c].letters()) cols.push_back(a - 1);
        CHECK(BigInt(em.exterior(static_cast<int>(r), static_cast<int>(c))) == minor(m, rows, cols));
      }
  }
}

TEST_CASE("M_{n−k} is sign-conjugate to M_k*") {
  for (int t = 0; t <= 3; ++t) {
    const ExteriorMatrices em = exterior_matrices(families::sigma(t), 3);
    REQUIRE(em.conjugator);
    const auto& s = *em.conjugator;
    for (int r = 0; r < em.dual.rows(); ++r)
      for (int c = 0; c < em.dual.cols(); ++c) CHECK(em.dual(r, c) == s[r] * em.geometric(r, c) * s[c]);
  }
}

TEST_CASE("positivity of the family") {
  for (int t = 0; t <= 2; ++t) {
    const PositivityReport p = positivity_check_P(families::sigma(t), 3);
    CHECK(p.primitive);
  }
  const PositivityReport p0 = positivity_check_P(families::sigma(0), 3);
  CHECK(p0.pass);
}

TEST_CASE("boundary commutes with the geometric duals") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coord(-2, 2), coeff(-2, 2);
  for (const Substitution& s : {families::sigma(0), families::sigma(2), families::tribonacci()}) {
    const PisotContext ctx = PisotContext::build(s);
    const auto types = ctx.top.types();
    for (int trial = 0; trial < 60; ++trial) {
      Chain c(ctx.n(), ctx.d() - 1);
      for (int i = 0; i < 3; ++i) {
        LatticePoint x{};
        for (int j = 0; j < ctx.n(); ++j) x[j] = coord(rng);
        c.add(Face{x, types[static_cast<std::size_t>(trial + i) % types.size()]}, coeff(rng));
      }
      CHECK(commutation_check(ctx.top, ctx.below, c));
    }
  }
}

TEST_CASE("sign conjugator search") {
  const IntMatrix a{{1, -1}, {-1, 1}}, b{{1, 1}, {1, 1}};
  const auto s = diagonal_sign_conjugator(a, b);
  REQUIRE(s);
  CHECK((*s)[0] * (*s)[1] == -1);
  CHECK_FALSE(diagonal_sign_conjugator(IntMatrix{{1, 2}, {0, 1}}, IntMatrix{{1, 1}, {0, 1}}));
}
