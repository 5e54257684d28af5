#include <doctest.h>

#include <random>

#include "rauzy/geometry.hpp"

using namespace rauzy;

namespace {

IntPolynomial product(const std::vector<PolynomialFactor>& fs) {
  IntPolynomial p{1};
  for (const auto& f : fs)
    for (int i = 0; i < f.multiplicity; ++i) p = p * f.poly;
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial p{-1, -1, 0, 1}, q{1, -1, 1};
  CHECK((p * q).to_string() == "x^5 - x^4 - 1");
  CHECK(p.eval(BigInt(2)) == 5);
  CHECK(p.derivative() == IntPolynomial{-1, 0, 3});
  CHECK((p - p).is_zero());
}

TEST_CASE("factorization recovers the Pisot and neutral parts") {
  const auto fs = factor_over_Q(IntPolynomial{-1, 0, 0, 0, -1, 1});
  REQUIRE(fs.size() == 2);
  CHECK(product(fs) == IntPolynomial{-1, 0, 0, 0, -1, 1});
  CHECK(cyclotomic_order(IntPolynomial{1, -1, 1}) == 6);
  CHECK(cyclotomic_order(IntPolynomial{-1, -1, 0, 1}) == 0);
}

TEST_CASE("factorization of random products") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    IntPolynomial a{c(rng), c(rng), 1}, b{c(rng), 1};
    if (a.coeff(0) == 0 || b.coeff(0) == 0) continue;
    const IntPolynomial p = a * a * b;
    const auto fs = factor_over_Q(p);
    CHECK(product(fs) == p);
    for (const auto& f : fs) CHECK(factor_over_Q(f.poly).size() == 1);
  }
}

TEST_CASE("Euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("hypothesis N") {
  CHECK(check_hypothesis_N(IntPolynomial{1, -1, 1}).pass);
  CHECK(check_hypothesis_N(IntPolynomial{1}).pass);
  CHECK_FALSE(check_hypothesis_N(IntPolynomial{1, 2, 1}).pass);   // (x+1)^2 is not squarefree
  CHECK_FALSE(check_hypothesis_N(IntPolynomial{-1, 1}).pass);     // g(0) = −1
  CHECK_FALSE(check_hypothesis_N(IntPolynomial{1, -3, 1}).pass);  // not cyclotomic
}

TEST_CASE("Pisot split of the Hokkaido substitution") {
  const PisotData pd = pisot_split(families::sigma(0));
  CHECK(pd.f == IntPolynomial{-1, -1, 0, 1});
  CHECK(pd.g == IntPolynomial{1, -1, 1});
  CHECK(pd.d == 3);
  CHECK(pd.unit);
  CHECK(pd.reducible);
  CHECK(pd.complex_pairs == 1);
  CHECK(pd.beta_value() == doctest::Approx(1.324717957244746).epsilon(1e-15));
  CHECK(pd.beta.lo <= pd.beta.hi);
  CHECK(pd.f.eval(pd.beta.lo).sign() * pd.f.eval(pd.beta.hi).sign() <= 0);
  CHECK(pd.contraction_upper() < 1);
}

TEST_CASE("Tribonacci is irreducible") {
  const PisotData pd = pisot_split(families::tribonacci());
  CHECK(pd.g == IntPolynomial{1});
  CHECK_FALSE(pd.reducible);
}

TEST_CASE("root isolation matches polynomial values") {
  const IntPolynomial p{-1, 0, 0, 0, -1, 1};
  const auto roots = isolate_roots(p);
  CHECK(roots.size() == 5);
  for (const auto& r : roots) CHECK(std::abs(p.eval(r.center)) < 1e-12L);
}

TEST_CASE("number field arithmetic in Q(β)") {
  const NumberField k = pisot_split(families::sigma(0)).field;
  const AlgebraicNumber b = k.generator();
  CHECK(k.multiply(k.multiply(b, b), b) == b + k.from_int(1));
  const AlgebraicNumber x = b + k.from_rational(Rational(1, 3));
  CHECK(k.multiply(x, k.inverse(x)) == k.from_int(1));
  CHECK(k.sign_of(b - k.from_int(1)) == 1);
  CHECK(k.sign_of(k.from_rational(Rational(4, 3)) - b) == 1);
  CHECK(k.to_real(b) == doctest::Approx(1.324717957244746));
  const AlgebraicNumber tiny = b - k.from_rational(exact_rational(1.3247179572447460L));
  CHECK(k.sign_of(tiny) == (k.to_real(tiny) > 0 ? 1 : -1));
}

TEST_CASE("dual eigenbases") {
  for (const Substitution& s : {families::sigma(0), families::sigma(2), families::tribonacci()}) {
    const PisotContext ctx = PisotContext::build(s);
    const auto& p = ctx.proj;
    const int d = ctx.d();
    for (int i = 0; i < static_cast<int>(p.u_conj.size()); ++i)
      for (int j = 0; j < static_cast<int>(p.v_conj.size()); ++j) {
        std::complex<long double> dotp = 0;
        for (int a = 0; a < ctx.n(); ++a) dotp += p.u_conj[i][a] * p.v_conj[j][a];
        CHECK(std::abs(dotp - (i == j ? 1.0L : 0.0L)) < 1e-12L);
      }
    // ᵗM v = β v exactly in Q(β)
    const NumberField& k = p.field;
    for (int a = 0; a < ctx.n(); ++a) {
      AlgebraicNumber lhs = k.zero();
      for (int b = 0; b < ctx.n(); ++b) lhs = lhs + Rational(ctx.matrix(b, a)) * p.v_beta[b];
      CHECK(lhs == k.multiply(k.generator(), p.v_beta[a]));
    }
    CHECK(static_cast<int>(p.beta_conj.size()) <= d);
  }
}

TEST_CASE("projection commutes with M") {
  const PisotContext ctx = PisotContext::build(families::sigma(1));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    LatticePoint x{};
    for (int a = 0; a < ctx.n(); ++a) x[a] = c(rng);
    const Vec2 lhs = ctx.proj.kc(ctx.matrix.apply(x)), rhs = ctx.proj.apply_power(ctx.proj.kc(x), 1);
    CHECK(dist(lhs, rhs) < 1e-10);
    CHECK(ctx.proj.pe(ctx.matrix.apply(x)) == doctest::Approx(ctx.proj.pe(x) * ctx.pisot.beta_value()).epsilon(1e-12));
  }
}

TEST_CASE("rational dependencies of the family") {
  for (int t = 0; t <= 3; ++t) {
    const PisotContext ctx = PisotContext::build(families::sigma(t));
    LatticePoint a{}, b{};
    a[0] = 1, a[2] = -1, a[3] = -1;  // e1 − e3 − e4
    b[4] = 1, b[1] = -1, b[2] = -1;  // e5 − e2 − e3
    CHECK(ctx.proj.pe_exact(a).is_zero());
    CHECK(ctx.proj.pe_exact(b).is_zero());
  }
}

TEST_CASE("redundancy witness") {
  const PisotContext ctx = PisotContext::build(families::sigma(0));
  const RedundancyWitness w = redundancy_witness(ctx.sub, ctx.pisot, ctx.proj);
  CHECK_FALSE(is_zero(w.coeffs));
  CHECK(w.residual < 1e-10L);
  CHECK(ctx.proj.pe_exact(w.coeffs).is_zero());
}

TEST_CASE("decimal strings round down") {
  CHECK(decimal_string(Rational(1, 3), 5) == "0.33333");
  CHECK(decimal_string(Rational(-7, 2), 3) == "-3.500");
  CHECK(decimal_string(Rational(-1, 3), 2) == "-0.34");
}
