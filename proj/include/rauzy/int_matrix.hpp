#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rauzy {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

constexpr int kMaxLetters = 12;

// Integer point of Z^n; coordinates past n are kept at zero.
using LatticePoint = std::array<std::int64_t, kMaxLetters>;

inline LatticePoint zero_point() { return LatticePoint{}; }
inline LatticePoint unit_point(int letter) {
  LatticePoint p{};
  p[letter - 1] = 1;
  return p;
}
LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a);
bool is_zero(const LatticePoint& p);
std::string to_string(const LatticePoint& p, int n);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, std::int64_t fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int r, int c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(int r, int c) const { return data_[r * cols_ + c]; }

  IntMatrix transposed() const;
  IntMatrix abs() const;
  bool all_positive() const;
  bool all_nonnegative() const;

  LatticePoint apply(const LatticePoint& x) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_csv() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Fraction-free Gaussian elimination.
BigInt determinant(const IntMatrix& m);

// Determinant of the submatrix on the given (0-based) rows and columns.
BigInt minor(const IntMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

// Exact inverse when |det| = 1.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m);

IntMatrix matrix_power(const IntMatrix& m, int e);

// Column Hermite reduction: returns (H, U) with m * U = [H | 0], U unimodular,
// H of full column rank r occupying the first r columns.
struct ColumnHermite {
  IntMatrix reduced;
  IntMatrix transform;
  int rank = 0;
};
ColumnHermite column_hermite(const IntMatrix& m);

}  // namespace rauzy
