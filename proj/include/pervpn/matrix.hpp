#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pervpn/scalar.hpp"

namespace pervpn {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<long long>>& rows);
  static Matrix column(const std::vector<Scalar>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& data() const { return data_; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  void add_block(std::size_t r0, std::size_t c0, const Matrix& b, const Scalar& coeff = Scalar(1));
  Matrix col_range(std::size_t c0, std::size_t nc) const { return block(0, c0, rows_, nc); }
  std::vector<Scalar> col(std::size_t c) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);
Matrix matvec(const Matrix& a, const std::vector<Scalar>& v);  // a * v as a column

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);
// Columns form a basis of {x : m x = 0}.
Matrix kernel_basis(const Matrix& m);
std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b);
// Solves a X = b column by column; empty if any column is inconsistent.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);
// Columns form a basis of the column span (a subset of the columns of m).
Matrix column_space(const Matrix& m);
// Indices of columns of m that extend the columns of `sub` to a basis of the
// ambient space spanned by sub and m.
std::vector<std::size_t> extend_basis(const Matrix& sub, const Matrix& m);
Scalar determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
// Columns of `basis` span the intersection of the column spans of a and b.
Matrix intersect_spans(const Matrix& a, const Matrix& b);

}  // namespace pervpn
