#include "rauzy/projection.hpp"

#include <stdexcept>

namespace rauzy {

namespace {

using Row = std::vector<AlgebraicNumber>;

// One nonzero kernel vector of a square matrix over Q(β) with one-dimensional kernel.
std::vector<AlgebraicNumber> kernel_vector(std::vector<Row> a, const NumberField& k) {
  const int n = static_cast<int>(a.size());
  std::vector<int> pivot_of_col(n, -1);
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    const AlgebraicNumber inv = k.inverse(a[row][col]);
    for (auto& x : a[row]) x = k.multiply(x, inv);
    for (int r = 0; r < n; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const AlgebraicNumber f = a[r][col];
      for (int c = 0; c < n; ++c) a[r][c] = a[r][c] - k.multiply(f, a[row][c]);
    }
    pivot_of_col[col] = row++;
  }
  if (row != n - 1) throw std::runtime_error("eigenspace of the Pisot root is not one-dimensional");
  int free_col = -1;
  for (int c = 0; c < n; ++c)
    if (pivot_of_col[c] < 0) free_col = c;
  std::vector<AlgebraicNumber> v(n, k.zero());
  v[free_col] = k.from_int(1);
  for (int c = 0; c < n; ++c)
    if (pivot_of_col[c] >= 0) v[c] = -a[pivot_of_col[c]][free_col];
  return v;
}

std::vector<AlgebraicNumber> primitive_integral(std::vector<AlgebraicNumber> v) {
  BigInt l = 1;
  for (const auto& x : v)
    for (const auto& c : x.coords) l = boost::multiprecision::lcm(l, denominator(c));
  BigInt g = 0;
  for (auto& x : v)
    for (auto& c : x.coords) {
      c *= Rational(l);
      g = boost::multiprecision::gcd(g, numerator(c));
    }
  for (auto& x : v)
    for (auto& c : x.coords) c /= Rational(g);
  return v;
}

std::vector<AlgebraicNumber> eigenvector(const IntMatrix& m, const NumberField& k) {
  const int n = m.rows();
  std::vector<Row> a(n, Row(n, k.zero()));
  const AlgebraicNumber beta = k.generator();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      a[r][c] = k.from_int(m(r, c));
      if (r == c) a[r][c] = a[r][c] - beta;
    }
  auto v = primitive_integral(kernel_vector(std::move(a), k));
  if (k.sign_of(v[0]) < 0)
    for (auto& x : v) x = -x;
  return v;
}

// Rational nullspace basis of an integer matrix.
std::vector<std::vector<double>> rational_nullspace(const IntMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[r][c] = m(r, c);
  std::vector<int> pivot_of_col(cols, -1);
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int r = row; r < rows; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    const Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (int c = 0; c < cols; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_of_col[col] = row++;
  }
  std::vector<std::vector<double>> basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (pivot_of_col[fc] >= 0) continue;
    std::vector<double> v(cols, 0.0);
    v[fc] = 1;
    for (int c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -static_cast<double>(a[pivot_of_col[c]][fc]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

ProjectionData projections(const Substitution& s, const PisotData& pd) {
  if (!pd.unit) throw InputError("projections require a unit Pisot substitution");
  ProjectionData p;
  p.n = s.size();
  p.d = pd.d;
  p.field = pd.field;
  const IntMatrix m = incidence_matrix(s);
  p.v_beta = eigenvector(m.transposed(), p.field);
  auto u = eigenvector(m, p.field);
  AlgebraicNumber uv = p.field.zero();
  for (int j = 0; j < p.n; ++j) uv = uv + p.field.multiply(u[j], p.v_beta[j]);
  const AlgebraicNumber inv = p.field.inverse(uv);
  for (auto& x : u) x = p.field.multiply(x, inv);
  p.u_beta = u;

  const int conj_count = static_cast<int>(pd.conjugates.size());
  for (int i = 0; i < conj_count; ++i) {
    std::vector<std::complex<long double>> vi, ui;
    for (int j = 0; j < p.n; ++j) {
      vi.push_back(p.field.embed(p.v_beta[j], i));
      ui.push_back(p.field.embed(p.u_beta[j], i));
    }
    p.v_conj.push_back(std::move(vi));
    p.u_conj.push_back(std::move(ui));
    p.conj_is_real.push_back(pd.conjugates[i].is_real());
    p.beta_conj.push_back(pd.conjugates[i].center);
  }

  p.v_power = IntMatrix(p.d, p.n);
  for (int j = 0; j < p.n; ++j)
    for (int i = 0; i < p.d; ++i) {
      const Rational& c = p.v_beta[j].coords[i];
      p.v_power(i, j) = static_cast<std::int64_t>(numerator(c));
    }
  for (int j = 1; j <= p.n; ++j) {
    p.pe_unit.push_back(static_cast<double>(p.v_conj[0][j - 1].real()));
    p.kc_unit_coords.push_back(p.kc_coords(unit_point(j)));
  }
  if (pd.reducible) p.neutral_basis = rational_nullspace(eval_matrix(pd.g, m));
  return p;
}

std::vector<double> ProjectionData::kc_coords(const LatticePoint& x) const {
  std::vector<double> out;
  for (std::size_t i = 1; i < v_conj.size(); ++i) {
    std::complex<long double> acc = 0;
    for (int j = 0; j < n; ++j)
      if (x[j]) acc += static_cast<long double>(x[j]) * v_conj[i][j];
    out.push_back(static_cast<double>(acc.real()));
    if (!conj_is_real[i]) out.push_back(static_cast<double>(acc.imag()));
  }
  return out;
}

Vec2 ProjectionData::kc(const LatticePoint& x) const {
  Vec2 p;
  for (int j = 0; j < n; ++j) {
    if (!x[j]) continue;
    const double c = static_cast<double>(x[j]);
    p.x += c * kc_unit_coords[j][0];
    p.y += c * kc_unit_coords[j][1];
  }
  return p;
}

double ProjectionData::pe(const LatticePoint& x) const {
  double acc = 0;
  for (int j = 0; j < n; ++j) acc += static_cast<double>(x[j]) * pe_unit[j];
  return acc;
}

AlgebraicNumber ProjectionData::pe_exact(const LatticePoint& x) const {
  AlgebraicNumber a = field.zero();
  for (int i = 0; i < d; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < n; ++j) acc += v_power(i, j) * x[j];
    a.coords[i] = acc;
  }
  return a;
}

std::array<std::int64_t, kMaxLetters> ProjectionData::pi_key(const LatticePoint& x) const {
  std::array<std::int64_t, kMaxLetters> key{};
  for (int i = 0; i < d; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < n; ++j) acc += v_power(i, j) * x[j];
    key[i] = acc;
  }
  return key;
}

std::vector<double> ProjectionData::apply_power(const std::vector<double>& p, int k) const {
  std::vector<double> out;
  std::size_t pos = 0;
  for (std::size_t i = 1; i < v_conj.size(); ++i) {
    const std::complex<long double> f = std::pow(beta_conj[i], k);
    if (conj_is_real[i]) {
      out.push_back(static_cast<double>(f.real() * p[pos]));
      pos += 1;
    } else {
      const std::complex<long double> z = f * std::complex<long double>(p[pos], p[pos + 1]);
      out.push_back(static_cast<double>(z.real()));
      out.push_back(static_cast<double>(z.imag()));
      pos += 2;
    }
  }
  return out;
}

Vec2 ProjectionData::apply_power(Vec2 p, int k) const {
  auto v = apply_power(std::vector<double>{p.x, p.y}, k);
  return {v[0], v[1]};
}

double ProjectionData::contraction() const {
  long double m = 0;
  for (std::size_t i = 1; i < beta_conj.size(); ++i) m = std::max(m, std::abs(beta_conj[i]));
  return static_cast<double>(m);
}

std::vector<std::complex<long double>> ProjectionData::pi_coords(const LatticePoint& x) const {
  std::vector<std::complex<long double>> out;
  for (const auto& vi : v_conj) {
    std::complex<long double> acc = 0;
    for (int j = 0; j < n; ++j) acc += static_cast<long double>(x[j]) * vi[j];
    out.push_back(acc);
  }
  return out;
}

RedundancyWitness redundancy_witness(const Substitution& s, const PisotData& pd, const ProjectionData& proj) {
  const IntMatrix fm = eval_matrix(pd.f, incidence_matrix(s));
  RedundancyWitness w;
  for (int a = 1; a <= s.size(); ++a) {
    LatticePoint c{};
    bool nonzero = false;
    for (int r = 0; r < s.size(); ++r) {
      c[r] = fm(r, a - 1);
      nonzero |= c[r] != 0;
    }
    if (!nonzero) continue;
    w.letter = a;
    w.coeffs = c;
    for (const auto& z : proj.pi_coords(c)) w.residual = std::max(w.residual, std::abs(z));
    return w;
  }
  return w;
}

}  // namespace rauzy
