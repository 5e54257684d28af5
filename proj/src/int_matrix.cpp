#include "rauzy/int_matrix.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace rauzy {

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint r;
  for (int i = 0; i < kMaxLetters; ++i) r[i] = a[i] + b[i];
  return r;
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint r;
  for (int i = 0; i < kMaxLetters; ++i) r[i] = a[i] - b[i];
  return r;
}

LatticePoint operator-(const LatticePoint& a) {
  LatticePoint r;
  for (int i = 0; i < kMaxLetters; ++i) r[i] = -a[i];
  return r;
}

bool is_zero(const LatticePoint& p) {
  for (auto v : p)
    if (v != 0) return false;
  return true;
}

std::string to_string(const LatticePoint& p, int n) {
  std::string s = "(";
  for (int i = 0; i < n; ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

IntMatrix::IntMatrix(int rows, int cols, std::int64_t fill)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::abs() const {
  IntMatrix a = *this;
  for (auto& v : a.data_) v = std::llabs(v);
  return a;
}

bool IntMatrix::all_positive() const {
  for (auto v : data_)
    if (v <= 0) return false;
  return true;
}

bool IntMatrix::all_nonnegative() const {
  for (auto v : data_)
    if (v < 0) return false;
  return true;
}

LatticePoint IntMatrix::apply(const LatticePoint& x) const {
  LatticePoint y{};
  for (int r = 0; r < rows_; ++r) {
    std::int64_t acc = 0;
    const std::int64_t* row = &data_[static_cast<std::size_t>(r) * cols_];
    for (int c = 0; c < cols_; ++c) acc += row[c] * x[c];
    y[r] = acc;
  }
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

std::string IntMatrix::to_csv() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

BigInt bareiss(std::vector<std::vector<BigInt>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  return bareiss(std::move(a));
}

BigInt minor(const IntMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<std::vector<BigInt>> a(rows.size(), std::vector<BigInt>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) a[r][c] = m(rows[r], cols[c]);
  return bareiss(std::move(a));
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) return std::nullopt;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[r][c] = m(r, c);
    a[r][n + r] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[col], a[piv]);
    const Rational inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  IntMatrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Rational& q = a[r][n + c];
      if (denominator(q) != 1) return std::nullopt;
      inv(r, c) = static_cast<std::int64_t>(numerator(q));
    }
  return inv;
}

IntMatrix matrix_power(const IntMatrix& m, int e) {
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

ColumnHermite column_hermite(const IntMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(cols);
  auto col_op = [&](int dst, int src, std::int64_t q) {
    for (int r = 0; r < rows; ++r) a(r, dst) -= q * a(r, src);
    for (int r = 0; r < cols; ++r) u(r, dst) -= q * u(r, src);
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
    for (int r = 0; r < cols; ++r) std::swap(u(r, i), u(r, j));
  };
  auto col_neg = [&](int i) {
    for (int r = 0; r < rows; ++r) a(r, i) = -a(r, i);
    for (int r = 0; r < cols; ++r) u(r, i) = -u(r, i);
  };
  int pivot_col = 0;
  for (int r = 0; r < rows && pivot_col < cols; ++r) {
    // Euclid on row r across columns pivot_col..cols-1.
    for (;;) {
      int best = -1;
      for (int c = pivot_col; c < cols; ++c)
        if (a(r, c) != 0 && (best < 0 || std::llabs(a(r, c)) < std::llabs(a(r, best)))) best = c;
      if (best < 0) break;
      col_swap(pivot_col, best);
      bool done = true;
      for (int c = pivot_col + 1; c < cols; ++c) {
        if (a(r, c) == 0) continue;
        col_op(c, pivot_col, a(r, c) / a(r, pivot_col));
        if (a(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, pivot_col) == 0) continue;
    if (a(r, pivot_col) < 0) col_neg(pivot_col);
    for (int c = 0; c < pivot_col; ++c) {
      std::int64_t q = a(r, c) / a(r, pivot_col);
      if (a(r, c) - q * a(r, pivot_col) < 0) --q;
      if (q) col_op(c, pivot_col, q);
    }
    ++pivot_col;
  }
  return {a, u, pivot_col};
}

}  // namespace rauzy
