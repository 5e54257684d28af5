#include "rauzy/nice.hpp"

#include <cmath>
#include <complex>
#include <set>

namespace rauzy {

S1Report check_S1(const PisotContext& ctx, double eps) {
  ctx.require_planar();
  S1Report rep;
  for (WedgeType t : ctx.top.types()) {
    const Chain img = ctx.top.apply(single_face(ctx.n(), LatticePoint{}, t));
    if (!img.is_geometric()) {
      rep.non_geometric.push_back(t.to_string());
      continue;
    }
    const auto pw = projects_well(ctx, img, eps);
    rep.overlaps.insert(rep.overlaps.end(), pw.witnesses.begin(), pw.witnesses.end());
  }
  rep.pass = rep.non_geometric.empty() && rep.overlaps.empty();
  return rep;
}

namespace {

using cld = std::complex<long double>;

std::vector<std::vector<cld>> invert(std::vector<std::vector<cld>> a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<cld>> inv(n, std::vector<cld>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    std::swap(inv[c], inv[piv]);
    const cld p = a[c][c];
    for (int k = 0; k < n; ++k) {
      a[c][k] /= p;
      inv[c][k] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const cld f = a[r][c];
      for (int k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

// Solves H c = w over Z for a column-echelon H of the given rank.
std::optional<std::vector<std::int64_t>> echelon_solve(const IntMatrix& h, int rank, std::vector<std::int64_t> w) {
  std::vector<std::int64_t> c(rank, 0);
  for (int j = 0; j < rank; ++j) {
    int pr = 0;
    while (pr < h.rows() && h(pr, j) == 0) ++pr;
    for (int r = 0; r < pr; ++r)
      if (w[r] != 0) return std::nullopt;
    if (w[pr] % h(pr, j) != 0) return std::nullopt;
    c[j] = w[pr] / h(pr, j);
    for (int r = 0; r < h.rows(); ++r) w[r] -= c[j] * h(r, j);
  }
  for (auto x : w)
    if (x != 0) return std::nullopt;
  return c;
}

}  // namespace

std::vector<LatticePoint> short_translations(const PisotContext& ctx, double radius, double window) {
  const int d = ctx.d();
  const auto& proj = ctx.proj;
  std::vector<cld> roots;
  std::vector<long double> bound;
  for (std::size_t i = 0; i < proj.beta_conj.size(); ++i) {
    const long double b = i == 0 ? window : radius;
    roots.push_back(proj.beta_conj[i]);
    bound.push_back(b);
    if (!proj.conj_is_real[i]) {
      roots.push_back(std::conj(proj.beta_conj[i]));
      bound.push_back(b);
    }
  }
  std::vector<std::vector<cld>> vand(d, std::vector<cld>(d));
  for (int r = 0; r < d; ++r)
    for (int k = 0; k < d; ++k) vand[r][k] = std::pow(roots[r], k);
  const auto inv = invert(vand);
  std::vector<std::int64_t> box(d);
  for (int k = 0; k < d; ++k) {
    long double s = 0;
    for (int r = 0; r < d; ++r) s += std::abs(inv[k][r]) * bound[r];
    box[k] = static_cast<std::int64_t>(std::ceil(s)) + 1;
  }
  const ColumnHermite herm = column_hermite(proj.v_power);
  std::vector<LatticePoint> out;
  std::vector<std::int64_t> w(d);
  for (int k = 0; k < d; ++k) w[k] = -box[k];
  for (;;) {
    long double pe = 0;
    for (int k = d - 1; k >= 0; --k) pe = pe * proj.beta_conj[0].real() + w[k];
    if (std::abs(pe) < window + 1e-9) {
      // K_c norm from the remaining conjugates.
      long double kc2 = 0;
      for (std::size_t i = 1; i < proj.beta_conj.size(); ++i) {
        cld acc = 0;
        for (int k = d - 1; k >= 0; --k) acc = acc * proj.beta_conj[i] + static_cast<long double>(w[k]);
        kc2 += std::norm(acc);
      }
      if (std::sqrt(kc2) <= radius + 1e-9) {
        if (auto c = echelon_solve(herm.reduced, herm.rank, w)) {
          LatticePoint z{};
          for (int j = 0; j < herm.rank; ++j)
            for (int r = 0; r < ctx.n(); ++r) z[r] += herm.transform(r, j) * (*c)[j];
          out.push_back(z);
        }
      }
    }
    int k = 0;
    while (k < d && w[k] == box[k]) {
      w[k] = -box[k];
      ++k;
    }
    if (k == d) break;
    ++w[k];
  }
  return out;
}

S2Report check_S2(const PisotContext& ctx, double eps) {
  ctx.require_planar();
  S2Report rep;
  const int n = ctx.n();
  const auto& proj = ctx.proj;
  const auto& field = proj.field;

  double max_suffix = 0;
  for (int b = 1; b <= n; ++b)
    for (const auto& occ : occurrences(ctx.sub, b)) max_suffix = std::max(max_suffix, norm(proj.kc(abelianize(occ.suffix, n))));
  const long double rho = ctx.pisot.contraction_upper();
  rep.radius = static_cast<double>(2 * max_suffix / (1 - rho)) * (1 + 1e-12);

  const auto types = ctx.top.types();
  const std::size_t nt = types.size();
  std::vector<AlgebraicNumber> width_exact;
  std::vector<double> width;
  for (WedgeType t : types) {
    const LatticePoint l = t.complement(n).indicator();
    width_exact.push_back(proj.pe_exact(l));
    width.push_back(proj.pe(l));
  }
  const double window = *std::max_element(width.begin(), width.end());

  struct Image {
    std::vector<Polygon> polys;
    std::vector<FaceKey> keys;
    std::vector<LatticePoint> bases;
  };
  std::vector<Image> images(nt);
  std::vector<Polygon> base_poly(nt);
  for (std::size_t i = 0; i < nt; ++i) {
    base_poly[i] = project_face(ctx, Face{LatticePoint{}, types[i]}).corners();
    const Chain img = ctx.top.apply(single_face(n, LatticePoint{}, types[i]));
    for (const auto& [f, coeff] : img.terms()) {
      images[i].polys.push_back(project_face(ctx, f).corners());
      images[i].keys.push_back(face_key(ctx, f));
      images[i].bases.push_back(f.base);
    }
  }

  auto shifted = [](const Polygon& p, Vec2 s) {
    Polygon q = p;
    for (auto& v : q) v += s;
    return q;
  };
  auto overlap_too_large = [&](const Polygon& a, const Polygon& b) {
    return convex_overlap_area(a, b) > eps * std::min(area(a), area(b));
  };

  const auto zs = short_translations(ctx, rep.radius, window);
  rep.translations = zs.size();
  for (const LatticePoint& z : zs) {
    const AlgebraicNumber p = proj.pe_exact(z);
    const double pf = proj.pe(z);
    const Vec2 shift = proj.kc(z);
    const LatticePoint image_shift = ctx.inverse.apply(z);
    const Vec2 image_shift_kc = proj.kc(image_shift);
    const bool z_trivial = is_zero(proj.pi_key(z));
    for (std::size_t a = 0; a < nt; ++a) {
      // Both (0, a) and (z, b) near: p > −w(a) and p < w(b).
      if (pf <= -width[a] - 1e-9) continue;
      if (pf < -width[a] + 1e-9 && field.sign_of(p + width_exact[a]) <= 0) continue;
      for (std::size_t b = 0; b < nt; ++b) {
        if (z_trivial && a == b) continue;
        if (pf >= width[b] + 1e-9) continue;
        if (pf >= width[b] - 1e-9 && field.compare(p, width_exact[b]) >= 0) continue;
        if (overlap_too_large(base_poly[a], shifted(base_poly[b], shift))) continue;
        ++rep.pairs_checked;
        const Face f1{LatticePoint{}, types[a]}, f2{z, types[b]};
        std::set<FaceKey> first(images[a].keys.begin(), images[a].keys.end());
        bool ok = true;
        std::string reason;
        for (std::size_t j = 0; j < images[b].keys.size() && ok; ++j) {
          const FaceKey key = face_key(ctx, Face{images[b].bases[j] + image_shift, images[b].keys[j].type});
          if (first.count(key)) {
            ok = false;
            reason = "images share a face";
          }
        }
        for (std::size_t i = 0; i < images[a].polys.size() && ok; ++i)
          for (std::size_t j = 0; j < images[b].polys.size() && ok; ++j)
            if (overlap_too_large(images[a].polys[i], shifted(images[b].polys[j], image_shift_kc))) {
              ok = false;
              reason = "image sum does not project well";
            }
        if (!ok) {
          rep.pass = false;
          if (rep.failures.size() < 16) rep.failures.push_back({f1, f2, reason});
        }
      }
    }
  }
  return rep;
}

NiceReport check_nice(const PisotContext& ctx, double eps) {
  NiceReport rep;
  rep.n = check_hypothesis_N(ctx.pisot.g);
  rep.p = positivity_check_P(ctx.sub, ctx.nbar());
  rep.s1 = check_S1(ctx, eps);
  // S2 presupposes well-projecting single images.
  if (rep.s1.pass) {
    rep.s2 = check_S2(ctx, eps);
  } else {
    rep.s2.pass = false;
  }
  return rep;
}

}  // namespace rauzy
