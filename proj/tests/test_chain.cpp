#include <doctest.h>

#include <random>

#include "rauzy/chain.hpp"

using namespace rauzy;

namespace {

Chain random_chain(std::mt19937_64& rng, int n, int k, bool dual = false) {
  std::uniform_int_distribution<int> coord(-2, 2), coeff(-2, 2), count(1, 5);
  const auto types = wedge_types(n, k);
  std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
  Chain c(n, k, dual);
  for (int i = count(rng); i > 0; --i) {
    LatticePoint x{};
    for (int j = 0; j < n; ++j) x[j] = coord(rng);
    c.add(Face{x, types[pick(rng)]}, coeff(rng));
  }
  return c;
}

}  // namespace

TEST_CASE("wedge normalization") {
  const auto a = wedge_normalize({3, 1, 2});
  CHECK_FALSE(a.zero);
  CHECK(a.type == WedgeType::parse("1^2^3"));
  CHECK(a.sign == 1);
  CHECK(wedge_normalize({2, 1}).sign == -1);
  CHECK(wedge_normalize({2, 4, 2}).zero);
}

TEST_CASE("wedge types are lexicographic") {
  const auto o3 = wedge_types(5, 3);
  REQUIRE(o3.size() == 10);
  CHECK(o3.front().to_string() == "1^2^3");
  CHECK(o3[3].to_string() == "1^3^4");
  CHECK(o3.back().to_string() == "3^4^5");
  CHECK(std::is_sorted(o3.begin(), o3.end()));
  for (std::size_t i = 0; i < o3.size(); ++i) CHECK(wedge_index(5, o3[i]) == static_cast<int>(i));
  CHECK(WedgeType::parse("2^4").complement(5) == WedgeType::parse("1^3^5"));
}

TEST_CASE("antisymmetric insertion") {
  Chain c(3, 2);
  c.add(LatticePoint{}, {2, 1}, 1);
  c.add(LatticePoint{}, {1, 2}, 1);
  CHECK(c.empty());
  c.add(LatticePoint{}, {1, 1}, 5);
  CHECK(c.empty());
}

TEST_CASE("boundary of a unit square") {
  const Chain sq = single_face(3, LatticePoint{}, WedgeType::parse("1^2"));
  const Chain b = boundary(sq);
  CHECK(b.size() == 4);
  LatticePoint e1{}, e2{};
  e1[0] = 1;
  e2[1] = 1;
  CHECK(b.coeff(Face{{}, WedgeType::parse("1")}) == -1 * b.coeff(Face{e2, WedgeType::parse("1")}));
  CHECK(b.coeff(Face{{}, WedgeType::parse("2")}) == -1 * b.coeff(Face{e1, WedgeType::parse("2")}));
}

TEST_CASE("∂∂ = 0 on random chains") {
  std::mt19937_64 rng(1);
  for (int k = 2; k <= 5; ++k)
    for (int trial = 0; trial < 100; ++trial) CHECK(boundary(boundary(random_chain(rng, 5, k))).empty());
}

TEST_CASE("Poincaré duality round trip") {
  std::mt19937_64 rng(2);
  for (int k = 1; k <= 4; ++k)
    for (int trial = 0; trial < 100; ++trial) {
      const Chain x = random_chain(rng, 5, k, true);
      const Chain y = poincare_phi(x);
      CHECK(y.k() == 5 - k);
      CHECK_FALSE(y.dual());
      CHECK(poincare_phi_inv(y) == x);
    }
}

TEST_CASE("coboundary is conjugate to the boundary") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Chain x = random_chain(rng, 4, 2, true);
    CHECK(coboundary(coboundary(x)).empty());
    CHECK(poincare_phi(coboundary(x)) == boundary(poincare_phi(x)));
  }
}

TEST_CASE("support vertices") {
  const Face f{LatticePoint{}, WedgeType::parse("1^3^4")};
  const auto v = support_vertices(f);
  CHECK(v.size() == 8);
  CHECK(std::count(v.begin(), v.end(), LatticePoint{}) == 1);
}

TEST_CASE("pairing is bilinear") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Chain x = random_chain(rng, 4, 2, true);
    const Chain a = random_chain(rng, 4, 2), b = random_chain(rng, 4, 2);
    CHECK(pairing(x, a + b) == pairing(x, a) + pairing(x, b));
    CHECK(pairing(x, 3 * a) == 3 * pairing(x, a));
  }
}

TEST_CASE("parse and dump") {
  const Chain c = parse_chain("2 (0,0,1) 1^2\n-1 (1,0,0) 2^3\n", 3, 2);
  CHECK(c.size() == 2);
  CHECK(parse_chain(c.dump(), 3, 2) == c);
}
