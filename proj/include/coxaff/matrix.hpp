#pragma once

// Dense matrices over an exact field type (Rational or FieldElement).
// Elimination is plain Gauss-Jordan with exact division; every result is
// exact, there is no pivoting heuristic beyond "first nonzero".

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxaff/field.hpp"

namespace coxaff {

template <class T>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, T(0)) {}
  Matrix(std::size_t r, std::size_t c, const T& fill) : rows_(r), cols_(c), a_(r * c, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw error("Matrix: shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (bkj.is_zero()) continue;
          r(i, j) += aik * bkj;
        }
      }
    return r;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error("Matrix: shape mismatch in sum");
    Matrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error("Matrix: shape mismatch in sum");
    Matrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.a_) x = s * x;
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_identity() const {
    if (!is_square()) return false;
    return *this == identity(rows_);
  }

  Matrix submatrix(const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) const {
    Matrix r(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = (*this)(rows[i], cols[j]);
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!(a.a_[i] == b.a_[i])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::size_t hash() const {
    std::size_t h = rows_ * 1000003 + cols_;
    for (const auto& x : a_) {
      h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

private:
  std::size_t rows_, cols_;
  std::vector<T> a_;
};

template <class T>
struct MatrixHash {
  std::size_t operator()(const Matrix<T>& m) const { return m.hash(); }
};

// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return row_reduce(m).size();
}

template <class T>
T det(Matrix<T> m) {
  if (!m.is_square()) throw error("det: matrix not square");
  T d(1);
  std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -T(1) * d;
    }
    d = d * m(c, c);
    T inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

// Basis of {x : M x = 0}; each vector is scaled so its first nonzero entry is 1.
template <class T>
std::vector<std::vector<T>> kernel_basis(Matrix<T> m) {
  const std::size_t n = m.cols();
  std::vector<std::size_t> pivots = row_reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(n, T(0));
    v[f] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -T(1) * m(r, f);
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i].is_zero()) continue;
      T inv = v[i].inverse();
      for (std::size_t j = i; j < n; ++j) v[j] = v[j] * inv;
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw error("inverse: matrix not square");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  if (row_reduce(aug).size() != n) throw error("inverse: singular matrix");
  Matrix<T> r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

// Solves A X = B for square invertible A.
template <class T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
  if (!a.is_square() || a.rows() != b.rows()) throw error("solve: shape mismatch");
  const std::size_t n = a.rows(), k = b.cols();
  if (n == 0) return Matrix<T>(0, k);
  Matrix<T> aug(n, n + k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  std::vector<std::size_t> piv = row_reduce(aug);
  if (piv.size() != n || piv[n - 1] != n - 1) throw error("solve: singular matrix");
  Matrix<T> x(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) x(i, j) = aug(i, n + j);
  return x;
}

// Characteristic polynomial det(X I - M), ascending coefficients, monic.
// Faddeev-LeVerrier; the divisions are by integers, exact over a Q-algebra.
template <class T>
std::vector<T> char_poly(const Matrix<T>& m) {
  if (!m.is_square()) throw error("char_poly: matrix not square");
  const std::size_t n = m.rows();
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  Matrix<T> mk = Matrix<T>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    T tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
    c[n - k] = -T(1) * tr / T(static_cast<long long>(k));
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k];
  }
  return c;
}

}  // namespace coxaff
