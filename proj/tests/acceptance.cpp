// One pass/fail line per acceptance criterion; runtimes count toward the verdict.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rauzy/dynamics.hpp"
#include "rauzy/fractal.hpp"
#include "rauzy/kernels.hpp"
#include "rauzy/nice.hpp"

using namespace rauzy;

namespace {

constexpr double kEigenTol = 1e-9;
constexpr double kTilingTol = 1e-6;
constexpr double kHausdorffTol = 0.05;
constexpr double kReturnFraction = 0.99;
constexpr double kWitnessTol = 1e-10;
constexpr int kRandomChains = 500;
constexpr std::size_t kReturnSamples = 10000;
constexpr std::size_t kCodingLength = 10000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

LatticePoint e(int a) { return unit_point(a); }

IntMatrix sigma_t_m2(int t) {
  const std::int64_t u = t + 1, v = -t;
  return {
      {0, 0, 0, u, 0, 0, -1, 0, 0, 0},  {v, 0, 0, 0, u, 0, 0, -1, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, v, 0, 0, 0, u, 0, 0, -1, 0},  {0, 1, 0, 0, 0, 0, 0, 0, 0, 0},  {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, v, 0, 0, 0, 0, 0, -1},  {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},  {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
  };
}

Outcome exterior_golden() {
  const Substitution trib = families::tribonacci();
  const ExteriorMatrices k1 = exterior_matrices(trib, 1), k2 = exterior_matrices(trib, 2);
  const IntMatrix m2{{1, -1, 0}, {-1, 0, -1}, {1, 0, 0}};
  const IntMatrix m1{{-1, -1, 1}, {1, 0, 0}, {0, 1, 0}};
  const IntMatrix m1s{{1, 1, 0}, {1, 0, 1}, {1, 0, 0}};
  const IntMatrix m2s{{-1, 1, 1}, {-1, 0, 0}, {0, -1, 0}};
  int bad = 0;
  bad += k1.geometric != m2;
  bad += k2.geometric != m1;
  bad += k1.dual != m1s;
  bad += k2.dual != m2s;
  for (int t = 0; t <= 3; ++t) bad += exterior_matrices(families::sigma(t), 3).geometric != sigma_t_m2(t);
  return {bad == 0, std::to_string(8 - bad) + "/8 matrices equal"};
}

Outcome e2_listing() {
  const PisotContext ctx = PisotContext::build(families::sigma(0));
  const LatticePoint m_inv_e2 = ctx.inverse.apply(e(2));
  auto w = [](const char* s) { return WedgeType::parse(s); };
  const std::vector<std::pair<const char*, std::vector<MapTerm>>> listing = {
      {"4^5", {{{}, w("3^4"), 1}}},
      {"3^5", {{{}, w("2^4"), 1}}},
      {"3^4", {{{}, w("2^3"), 1}}},
      {"2^5", {{m_inv_e2, w("4^5"), 1}, {{}, w("1^4"), 1}}},
      {"2^4", {{m_inv_e2, w("3^5"), 1}, {{}, w("1^3"), 1}}},
      {"2^3", {{m_inv_e2, w("2^5"), 1}, {{}, w("1^2"), 1}}},
      {"1^5", {{{}, w("4^5"), -1}}},
      {"1^4", {{{}, w("3^5"), -1}}},
      {"1^3", {{{}, w("2^5"), -1}}},
      {"1^2", {{{}, w("1^5"), -1}}},
  };
  int equal = 0;
  for (const auto& [type, expected] : listing) {
    auto got = ctx.top.image(w(type));
    auto key = [](const MapTerm& t) { return std::make_tuple(t.type.mask(), t.offset, t.sign); };
    auto by_key = [&](const MapTerm& a, const MapTerm& b) { return key(a) < key(b); };
    auto want = expected;
    std::sort(got.begin(), got.end(), by_key);
    std::sort(want.begin(), want.end(), by_key);
    equal += got == want;
  }
  return {equal == 10, std::to_string(equal) + "/10 images equal"};
}

Outcome duality() {
  std::size_t violations = 0, nonzero = 0, pairs = 0;
  for (int t : {0, 1}) {
    const DualityReport r = duality_check(families::sigma(t), 3, 1);
    violations += r.violations;
    nonzero += r.nonzero;
    pairs += r.pairs;
  }
  return {violations == 0 && nonzero > 0, std::to_string(pairs) + " pairs, " + std::to_string(nonzero) + " nonzero, " +
                                              std::to_string(violations) + " violations"};
}

Chain random_chain(std::mt19937_64& rng, int n, int k, bool dual) {
  std::uniform_int_distribution<int> coord(-3, 3), coeff(-3, 3), count(1, 6);
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

Outcome operator_identities() {
  std::mt19937_64 rng(20240101);
  int failures = 0, checked = 0;
  for (const Substitution& s : {families::sigma(0), families::sigma(1), families::tribonacci()}) {
    const PisotContext ctx = PisotContext::build(s);
    const int n = ctx.n(), d = ctx.d();
    for (int i = 0; i < kRandomChains; ++i) {
      const Chain c = random_chain(rng, n, d, false);
      failures += !boundary(boundary(c)).empty();
      const Chain x = random_chain(rng, n, n - d + 1, true);
      failures += poincare_phi_inv(poincare_phi(x)) != x;
      failures += !commutation_check(ctx.top, ctx.below, random_chain(rng, n, d - 1, false));
      checked += 3;
    }
  }
  return {failures == 0, std::to_string(checked) + " identities, " + std::to_string(failures) + " failures"};
}

Outcome classification() {
  const PisotContext ctx = PisotContext::build(families::sigma(0));
  const NiceReport nice = check_nice(ctx);
  const bool algebra = ctx.pisot.f == IntPolynomial{-1, -1, 0, 1} && ctx.pisot.g == IntPolynomial{1, -1, 1} &&
                       ctx.pisot.unit && ctx.pisot.reducible;
  const PisotContext bad = PisotContext::build(families::non_projecting(2));
  const S1Report s1 = check_S1(bad);
  std::ostringstream os;
  os << "f=" << ctx.pisot.f.to_string() << " g=" << ctx.pisot.g.to_string() << " N=" << nice.n.pass << " P=" << nice.p.pass
     << " S1=" << nice.s1.pass << " S2=" << nice.s2.pass << "; t=2 family S1=" << s1.pass << " witnesses "
     << s1.overlaps.size();
  if (!s1.overlaps.empty())
    os << " (" << s1.overlaps[0].first.type.to_string() << " vs " << s1.overlaps[0].second.type.to_string() << " area "
       << s1.overlaps[0].area << ")";
  return {algebra && nice.nice() && !s1.pass && !s1.overlaps.empty(), os.str()};
}

Outcome coincidence_table() {
  const std::vector<std::tuple<const char*, const char*, int>> expected = {
      {"1^2^3", "1^2^4", 7},  {"1^2^3", "1^2^5", 7},  {"1^2^3", "2^3^4", 11}, {"1^2^3", "2^3^5", 10},
      {"1^2^3", "2^4^5", 12}, {"1^2^4", "1^2^5", 6},  {"1^2^4", "1^3^4", 8},  {"1^2^4", "1^3^5", 8},
      {"1^2^4", "2^3^5", 10}, {"1^2^4", "2^4^5", 10}, {"1^2^4", "3^4^5", 10}, {"1^2^5", "1^3^4", 8},
      {"1^2^5", "1^3^5", 8},  {"1^2^5", "1^4^5", 8},  {"1^3^4", "1^3^5", 6},  {"1^3^4", "2^3^4", 9},
      {"1^3^4", "2^3^5", 9},  {"1^3^4", "2^4^5", 10}, {"1^3^4", "3^4^5", 10}, {"1^3^5", "1^4^5", 7},
      {"1^3^5", "2^3^4", 11}, {"1^3^5", "2^3^5", 9},  {"1^3^5", "2^4^5", 9},  {"1^4^5", "2^3^5", 9},
      {"1^4^5", "2^4^5", 9},  {"1^4^5", "3^4^5", 9},  {"2^3^4", "2^3^5", 11}, {"2^3^4", "3^4^5", 10},
      {"2^3^5", "2^4^5", 7},  {"2^4^5", "3^4^5", 8},
  };
  const CoincidenceTable t0 = strong_coincidence(PisotContext::build(families::sigma(0)), 20);
  bool exact = t0.entries.size() == expected.size() && t0.complete();
  for (const auto& [a, b, k] : expected) exact = exact && t0.lookup(WedgeType::parse(a), WedgeType::parse(b)) == k;
  bool family = true;
  for (int t : {1, 2}) {
    const CoincidenceTable tt = strong_coincidence(PisotContext::build(families::sigma(t)), 20);
    for (const auto& [a, b, k] : expected) {
      const auto kt = tt.lookup(WedgeType::parse(a), WedgeType::parse(b));
      family = family && kt && *kt <= k;
    }
  }
  return {exact && family, std::to_string(t0.entries.size()) + " pairs for σ₀" + (exact ? " equal to the reference table" : " DIFFER") +
                               ", σ₁ σ₂ " + (family ? "coincide with k no larger" : "FAIL")};
}

Outcome seeds_and_annulus() {
  int contained = 0, total = 0;
  for (int t : {0, 1, 2}) {
    const PisotContext ctx = PisotContext::build(families::sigma(t));
    for (WedgeType a : ctx.top.types()) {
      contained += seed_contained(ctx, single_face(ctx.n(), LatticePoint{}, a), 5);
      ++total;
    }
  }
  const PisotContext ctx = PisotContext::build(families::sigma(0));
  int surrounded = 0;
  double gap = 1e300;
  const auto seeds = touching_elements(ctx);
  for (const auto& el : seeds) {
    const SurroundReport r = surrounds(ctx, apply_map_power(ctx.top, el.faces, 15), el.faces);
    surrounded += r.pass();
    gap = std::min(gap, r.gap);
  }
  std::ostringstream os;
  os << contained << "/" << total << " single faces contained; " << surrounded << "/" << seeds.size()
     << " 3-touching seeds surrounded, min gap " << gap;
  return {contained == total && surrounded == static_cast<int>(seeds.size()) && !seeds.empty(), os.str()};
}

Outcome measure_eigenvector() {
  double worst = 0;
  for (const Substitution& s : {families::sigma(0), families::sigma(1), families::sigma(2), families::tribonacci()})
    worst = std::max(worst, measure_eigen_check(PisotContext::build(s), kEigenTol).residual);
  std::ostringstream os;
  os << "max relative residual " << worst << " (tol " << kEigenTol << ")";
  return {worst <= kEigenTol, os.str()};
}

Outcome tiling_audits() {
  const PisotContext ctx = PisotContext::build(families::sigma(0));
  const PatchAudit ap = aperiodic_audit(ctx, parse_seed("1^3+1^4+2^4+2^5+3^5", 5), 10, 200, kTilingTol);
  PeriodicElement p;
  p.faces = parse_seed("2^3+2^4+3^4", 5);
  p.lattice = {e(4) - e(2), e(4) - e(3)};
  const PatchAudit pe = periodic_audit(ctx, p, 10, 6, kTilingTol);
  std::ostringstream os;
  os << "aperiodic overlap " << ap.audit.overlap << " holes " << ap.audit.uncovered << " (r " << ap.region_radius
     << "); periodic overlap " << pe.audit.overlap << " holes " << pe.audit.uncovered << " (r " << pe.region_radius
     << "); tol " << kTilingTol;
  return {ap.audit.pass() && pe.audit.pass(), os.str()};
}

const std::vector<int> kLevels = {2, 4, 6, 8, 10};

Outcome two_oracles() {
  const PisotContext ctx = PisotContext::build(families::sigma(0));
  double worst = 0;
  bool decreasing = true;
  for (WedgeType a : ctx.top.types()) {
    const ConvergenceSeries s = two_oracle_series(ctx, a, kLevels);
    worst = std::max(worst, s.last());
    decreasing = decreasing && s.decreasing();
  }
  std::ostringstream os;
  os << "10 types, worst level-10 distance " << worst << " (tol " << kHausdorffTol << "), "
     << (decreasing ? "non-increasing" : "NOT decreasing");
  return {worst <= kHausdorffTol && decreasing, os.str()};
}

Outcome decompositions() {
  const PisotContext ctx = PisotContext::build(families::sigma(0));
  auto decs = hokkaido_decompositions();
  decs.push_back(hokkaido_printed_3_5());
  const auto results = decomposition_check(ctx, decs, kLevels);
  double worst = 0;
  bool decreasing = true;
  std::ostringstream os;
  for (std::size_t i = 0; i + 1 < results.size(); ++i) {
    worst = std::max(worst, results[i].series.last());
    decreasing = decreasing && results[i].series.decreasing();
    os << results[i].identity.name << " " << results[i].series.last() << ", ";
  }
  os << "tol " << kHausdorffTol << "; 3^5 as printed (−R(5)−π_c e5) " << results.back().series.last();
  return {worst <= kHausdorffTol && decreasing, os.str()};
}

Outcome first_return() {
  std::ostringstream os;
  bool pass = true;
  for (int t : {0, 1}) {
    const PisotContext ctx = PisotContext::build(families::sigma(t));
    const ExchangeSystem sys(ctx);
    if (t > 0) os << "; ";
    const FirstReturnReport r = first_return_check(ctx, sys, kReturnSamples, 0);
    const CodingReport c = coding_cross_check(ctx, sys, kCodingLength);
    pass = pass && r.verified_fraction() >= kReturnFraction && r.failed == 0 && c.mismatches.empty();
    os << "σ" << t << ": verified " << r.verified << "/" << r.samples << " ambiguous " << r.ambiguous << " failed "
       << r.failed << ", coding mismatches " << c.mismatches.size() << " (ambiguous " << c.ambiguous << ")";
    if (t == 0) {
      const FirstReturnReport a = first_return_check(ctx, sys, 500, 7), b = first_return_check(ctx, sys, 500, 7);
      bool same = a.verified == b.verified && a.ambiguous == b.ambiguous && a.failures.size() == b.failures.size();
      for (std::size_t i = 0; same && i < a.failures.size(); ++i) same = a.failures[i].start == b.failures[i].start;
      pass = pass && same;
      os << (same ? ", repeatable under a fixed seed" : ", NOT repeatable");
    }
  }
  return {pass, os.str()};
}

Outcome exact_identities() {
  const PisotContext ctx = PisotContext::build(families::sigma(0));
  const IntMatrix& m = ctx.matrix;
  const LatticePoint e2 = e(2), me2 = m.apply(e2), m3e2 = m.apply(m.apply(me2));
  const bool relation = ctx.proj.pe_exact(m3e2 - me2 - e2).is_zero();
  const RedundancyWitness w = redundancy_witness(ctx.sub, ctx.pisot, ctx.proj);
  // f(M) e_{i₀} rebuilt from the Pisot polynomial by Horner's rule.
  const auto f = ctx.pisot.f.to_int64();
  LatticePoint y{};
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    y = m.apply(y);
    y[w.letter - 1] += f[i];
  }
  long double residual = 0;
  for (const auto& z : ctx.proj.pi_coords(w.coeffs)) residual = std::max(residual, std::abs(z));
  std::ostringstream os;
  os << "⟨M³e₂ − Me₂ − e₂, v_β⟩ " << (relation ? "= 0" : "≠ 0") << " in Z[β]; witness c = " << to_string(w.coeffs, ctx.n())
     << " from f(M)e_" << w.letter << ", |Σ cᵢπ(eᵢ)| = " << static_cast<double>(residual);
  return {relation && y == w.coeffs && !is_zero(y) && residual <= kWitnessTol, os.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exterior-matrix golden", 1, exterior_golden},
      {2, "E2(σ₀) golden listing", 1, e2_listing},
      {3, "duality oracle", 10, duality},
      {4, "operator identities", 30, operator_identities},
      {5, "classification", 60, classification},
      {6, "strong coincidence table", 60, coincidence_table},
      {7, "seed containment and annulus", 300, seeds_and_annulus},
      {8, "measure eigenvector", 1, measure_eigenvector},
      {9, "tiling audits", 300, tiling_audits},
      {10, "two-oracle fractal agreement", 120, two_oracles},
      {11, "reflected-subtile decompositions", 120, decompositions},
      {12, "first return and coding", 120, first_return},
      {13, "exact identities", 1, exact_identities},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.pass && secs < c.limit_seconds;
    failed += !pass;
    std::printf("criterion %2d %s  %s  [%.2f s, limit %.0f s]  %s\n", c.id, pass ? "PASS" : "FAIL", c.name, secs,
                c.limit_seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
