#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "qmod/field.hpp"

namespace qmod {

// Dense row-major matrix over an exact field. All arithmetic is exact;
// pivoting is deterministic (first nonzero in column order) so every
// downstream basis is reproducible.
template <class K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, K(0)) {
    assert(rows >= 0 && cols >= 0);
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const K& operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

  bool is_zero() const {
    for (const K& x : e_)
      if (!qmod::is_zero(x)) return false;
    return true;
  }

  Matrix operator*(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const K& a = (*this)(i, k);
        if (qmod::is_zero(a)) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const K& b = o(k, j);
          if (!qmod::is_zero(b)) r(i, j) += a * b;
        }
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
  }

  Matrix scaled(const K& c) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix pow(long long e) const {
    assert(rows_ == cols_);
    Matrix acc = identity(rows_), base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  static Matrix hstack(const std::vector<Matrix>& ms) {
    if (ms.empty()) return Matrix();
    int r = ms[0].rows_, c = 0;
    for (const auto& m : ms) {
      assert(m.rows_ == r);
      c += m.cols_;
    }
    Matrix out(r, c);
    int off = 0;
    for (const auto& m : ms) {
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < m.cols_; ++j) out(i, off + j) = m(i, j);
      off += m.cols_;
    }
    return out;
  }

  static Matrix vstack(const std::vector<Matrix>& ms) {
    if (ms.empty()) return Matrix();
    int c = ms[0].cols_, r = 0;
    for (const auto& m : ms) {
      assert(m.cols_ == c);
      r += m.rows_;
    }
    Matrix out(r, c);
    int off = 0;
    for (const auto& m : ms) {
      for (int i = 0; i < m.rows_; ++i)
        for (int j = 0; j < c; ++j) out(off + i, j) = m(i, j);
      off += m.rows_;
    }
    return out;
  }

  Matrix column(int j) const {
    Matrix c(rows_, 1);
    for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  struct Rref {
    Matrix R;
    std::vector<int> pivots;  // column index per pivot row
    int rank;
  };

  Rref rref() const {
    Rref out{*this, {}, 0};
    Matrix& R = out.R;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
      int piv = -1;
      for (int i = row; i < rows_; ++i)
        if (!qmod::is_zero(R(i, col))) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      if (piv != row)
        for (int j = col; j < cols_; ++j) std::swap(R(row, j), R(piv, j));
      K inv = K(1) / R(row, col);
      for (int j = col; j < cols_; ++j) R(row, j) = R(row, j) * inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == row || qmod::is_zero(R(i, col))) continue;
        K f = R(i, col);
        for (int j = col; j < cols_; ++j) R(i, j) = R(i, j) - f * R(row, j);
      }
      out.pivots.push_back(col);
      ++row;
    }
    out.rank = row;
    return out;
  }

  int rank() const { return rref().rank; }

  // Columns form a basis of the null space; free variables in column order,
  // each set to 1 in turn with the others 0.
  Matrix kernel_basis() const {
    Rref rr = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : rr.pivots) is_pivot[p] = true;
    int nfree = cols_ - rr.rank;
    Matrix ker(cols_, nfree);
    int k = 0;
    for (int j = 0; j < cols_; ++j) {
      if (is_pivot[j]) continue;
      ker(j, k) = K(1);
      for (int i = 0; i < rr.rank; ++i) {
        if (!qmod::is_zero(rr.R(i, j))) ker(rr.pivots[i], k) = -rr.R(i, j);
      }
      ++k;
    }
    return ker;
  }

  // Columns form a basis of the column space (deterministic: the nonzero rows
  // of rref(transpose), transposed back).
  Matrix column_space_basis() const {
    Rref rr = transpose().rref();
    Matrix b(rows_, rr.rank);
    for (int i = 0; i < rr.rank; ++i)
      for (int j = 0; j < rows_; ++j) b(j, i) = rr.R(i, j);
    return b;
  }

 private:
  int rows_, cols_;
  std::vector<K> e_;
};

// Some exact X with A*X = B when the system is consistent; free variables are
// set to 0 so the choice is deterministic.
template <class K>
std::optional<Matrix<K>> solve_right(const Matrix<K>& A, const Matrix<K>& B) {
  if (A.rows() != B.rows()) throw std::invalid_argument("solve_right: row mismatch");
  Matrix<K> aug = Matrix<K>::hstack({A, B});
  auto rr = aug.rref();
  for (int p : rr.pivots)
    if (p >= A.cols()) return std::nullopt;
  Matrix<K> X(A.cols(), B.cols());
  for (int i = 0; i < rr.rank; ++i)
    for (int j = 0; j < B.cols(); ++j) X(rr.pivots[i], j) = rr.R(i, A.cols() + j);
  return X;
}

template <class K>
bool is_invertible(const Matrix<K>& m) {
  return m.rows() == m.cols() && m.rank() == m.rows();
}

}  // namespace qmod
