#include "pervpn/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace pervpn {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = Scalar(rows[r][c]);
  }
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v) { return Matrix(v.size(), 1, v); }

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::out_of_range("block out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& b, const Scalar& coeff) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::out_of_range("block out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      const Scalar& v = b(r, c);
      if (v.is_zero()) continue;
      if (coeff.is_one())
        (*this)(r0 + r, c0 + c) += v;
      else
        (*this)(r0 + r, c0 + c) += v * coeff;
    }
}

std::vector<Scalar> Matrix::col(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix m(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < idx.size(); ++j) m(r, j) = (*this)(r, idx[j]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix m(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(idx[i], c);
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  if (s.is_one()) return *this;
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch in *");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Matrix matvec(const Matrix& a, const std::vector<Scalar>& v) { return a * Matrix::column(v); }

RrefResult rref(Matrix m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < C && row < R; ++c) {
    std::size_t piv = R;
    // Prefer a pivot that is already 1 or at least small to limit growth.
    for (std::size_t r = row; r < R; ++r) {
      if (m(r, c).is_zero()) continue;
      if (piv == R) piv = r;
      if (m(r, c).is_one()) {
        piv = r;
        break;
      }
    }
    if (piv == R) continue;
    if (piv != row)
      for (std::size_t j = c; j < C; ++j) std::swap(m(piv, j), m(row, j));
    Scalar inv = m(row, c).inverse();
    if (!inv.is_one())
      for (std::size_t j = c; j < C; ++j)
        if (!m(row, j).is_zero()) m(row, j) *= inv;
    std::vector<std::size_t> nz;
    for (std::size_t j = c + 1; j < C; ++j)
      if (!m(row, j).is_zero()) nz.push_back(j);
    for (std::size_t r = 0; r < R; ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      Scalar f = m(r, c);
      for (std::size_t j : nz) sub_mul(m(r, j), f, m(row, j));
      m(r, c) = Scalar();
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  auto [red, piv] = rref(m);
  const std::size_t C = m.cols();
  std::vector<bool> is_piv(C, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < C; ++c)
    if (!is_piv[c]) free.push_back(c);
  Matrix k(C, free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = Scalar(1);
    for (std::size_t i = 0; i < piv.size(); ++i) k(piv[i], j) = -red(i, free[j]);
  }
  return k;
}

std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  auto x = solve_matrix(a, Matrix::column(b));
  if (!x) return std::nullopt;
  return x->col(0);
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
  auto [red, piv] = rref(hstack(a, b));
  const std::size_t n = a.cols();
  if (!piv.empty() && piv.back() >= n) return std::nullopt;
  Matrix x(n, b.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(piv[i], j) = red(i, n + j);
  return x;
}

Matrix column_space(const Matrix& m) { return m.select_cols(rref(m).pivots); }

std::vector<std::size_t> extend_basis(const Matrix& sub, const Matrix& m) {
  auto piv = rref(hstack(sub, m)).pivots;
  std::vector<std::size_t> out;
  for (auto p : piv)
    if (p >= sub.cols()) out.push_back(p - sub.cols());
  return out;
}

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r)
      if (!m(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv == n) return Scalar();
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      Scalar f = m(r, c) * inv;
      for (std::size_t j = c + 1; j < n; ++j) sub_mul(m(r, j), f, m(c, j));
      m(r, c) = Scalar();
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve_matrix(m, Matrix::identity(m.rows()));
  if (!x || rank(m) != m.rows()) return std::nullopt;
  return x;
}

Matrix intersect_spans(const Matrix& a, const Matrix& b) {
  // x in both spans iff a u = b v; solve [a | -b] (u; v) = 0.
  Matrix ca = column_space(a), cb = column_space(b);
  Matrix k = kernel_basis(hstack(ca, cb * Scalar(-1)));
  return column_space(ca * k.block(0, 0, ca.cols(), k.cols()));
}

}  // namespace pervpn
