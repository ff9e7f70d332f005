#pragma once

#include <span>
#include <vector>

namespace qosc {

/// Dense row-major real matrix, just big enough for the truncated operator
/// representations used here (dimensions stay well below 10^3).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);

  static Matrix identity(int n);
  static Matrix diagonal(std::span<const double> entries);
  static Matrix kron(const Matrix& a, const Matrix& b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(double factor) const;
  Matrix transpose() const;

  std::vector<double> apply(std::span<const double> vec) const;
  std::vector<double> diagonal_entries() const;
  double max_abs() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

double max_abs_difference(const Matrix& a, const Matrix& b);

}  // namespace qosc
