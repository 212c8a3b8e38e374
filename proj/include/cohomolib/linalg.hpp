#pragma once

// Dense exact linear algebra over a field K (Q, Q(w) or F_p).

#include <optional>
#include <utility>
#include <vector>

#include "cohomolib/rational.hpp"

namespace cohomolib {

template <class K>
struct Matrix {
  int r = 0, c = 0;
  std::vector<K> a;
  Matrix() = default;
  Matrix(int rows, int cols) : r(rows), c(cols), a(std::size_t(rows) * cols, K(0)) {}
  K& operator()(int i, int j) { return a[std::size_t(i) * c + j]; }
  const K& operator()(int i, int j) const { return a[std::size_t(i) * c + j]; }
  bool empty() const { return r == 0 || c == 0; }
  bool is_zero() const {
    for (auto& x : a)
      if (!cohomolib::is_zero(x)) return false;
    return true;
  }
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
};

using QMat = Matrix<Q>;

template <class K>
Matrix<K> operator*(const Matrix<K>& x, const Matrix<K>& y) {
  Matrix<K> z(x.r, y.c);
  for (int i = 0; i < x.r; ++i)
    for (int k = 0; k < x.c; ++k) {
      const K& s = x(i, k);
      if (is_zero(s)) continue;
      for (int j = 0; j < y.c; ++j)
        if (!is_zero(y(k, j))) z(i, j) += s * y(k, j);
    }
  return z;
}

template <class K>
Matrix<K> operator-(const Matrix<K>& x, const Matrix<K>& y) {
  Matrix<K> z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

template <class K>
Matrix<K> operator+(const Matrix<K>& x, const Matrix<K>& y) {
  Matrix<K> z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

template <class K>
Matrix<K> scaled(const Matrix<K>& x, const K& s) {
  Matrix<K> z = x;
  for (auto& v : z.a) v *= s;
  return z;
}

template <class K>
std::vector<K> apply(const Matrix<K>& m, const std::vector<K>& v) {
  std::vector<K> out(m.r, K(0));
  for (int j = 0; j < m.c; ++j) {
    if (is_zero(v[j])) continue;
    for (int i = 0; i < m.r; ++i)
      if (!is_zero(m(i, j))) out[i] += m(i, j) * v[j];
  }
  return out;
}

template <class K>
Matrix<K> transpose(const Matrix<K>& m) {
  Matrix<K> t(m.c, m.r);
  for (int i = 0; i < m.r; ++i)
    for (int j = 0; j < m.c; ++j) t(j, i) = m(i, j);
  return t;
}

// Reduced row echelon form in place; returns pivot columns.
template <class K>
std::vector<int> rref(Matrix<K>& m) {
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < m.c && row < m.r; ++col) {
    int p = -1;
    for (int i = row; i < m.r; ++i)
      if (!is_zero(m(i, col))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.c; ++j) std::swap(m(p, j), m(row, j));
    K inv = K(1) / m(row, col);
    for (int j = col; j < m.c; ++j)
      if (!is_zero(m(row, j))) m(row, j) *= inv;
    for (int i = 0; i < m.r; ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      K f = m(i, col);
      for (int j = col; j < m.c; ++j)
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

// Forward elimination only; cheaper when just the rank is wanted.
template <class K>
int rank_of(Matrix<K> m) {
  int row = 0;
  for (int col = 0; col < m.c && row < m.r; ++col) {
    int p = -1;
    for (int i = row; i < m.r; ++i)
      if (!is_zero(m(i, col))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = col; j < m.c; ++j) std::swap(m(p, j), m(row, j));
    K inv = K(1) / m(row, col);
    for (int i = row + 1; i < m.r; ++i) {
      if (is_zero(m(i, col))) continue;
      K f = m(i, col) * inv;
      for (int j = col; j < m.c; ++j)
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    ++row;
  }
  return row;
}

template <class K>
K determinant(Matrix<K> m) {
  K d(1);
  int n = m.r;
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (!is_zero(m(i, col))) {
        p = i;
        break;
      }
    if (p < 0) return K(0);
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      d = -d;
    }
    d *= m(col, col);
    K inv = K(1) / m(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      K f = m(i, col) * inv;
      for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return d;
}

// Basis of the right kernel, one column per basis vector.
template <class K>
Matrix<K> nullspace(const Matrix<K>& m) {
  Matrix<K> e = m;
  auto piv = rref(e);
  std::vector<char> is_piv(m.c, 0);
  for (int p : piv) is_piv[p] = 1;
  int nfree = m.c - int(piv.size());
  Matrix<K> ns(m.c, nfree);
  int k = 0;
  for (int f = 0; f < m.c; ++f) {
    if (is_piv[f]) continue;
    ns(f, k) = K(1);
    for (std::size_t t = 0; t < piv.size(); ++t) ns(piv[t], k) = -e(int(t), f);
    ++k;
  }
  return ns;
}

template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& A, const std::vector<K>& b) {
  Matrix<K> aug(A.r, A.c + 1);
  for (int i = 0; i < A.r; ++i) {
    for (int j = 0; j < A.c; ++j) aug(i, j) = A(i, j);
    aug(i, A.c) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == A.c) return std::nullopt;
  std::vector<K> x(A.c, K(0));
  for (std::size_t t = 0; t < piv.size(); ++t) x[piv[t]] = aug(int(t), A.c);
  return x;
}

template <class K>
Matrix<K> inverse(const Matrix<K>& A) {
  int n = A.r;
  Matrix<K> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n + i) = K(1);
  }
  auto piv = rref(aug);
  if (int(piv.size()) < n || piv[n - 1] != n - 1) throw std::runtime_error("singular matrix");
  Matrix<K> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Matrix<Fp> reduce_mod_p(const QMat& m);
QMat from_imat(const IMat& m);

// Incremental echelon basis for membership tests in a growing span.
template <class K>
class EchelonBasis {
 public:
  explicit EchelonBasis(int n) : n_(n) {}
  int dim() const { return int(rows_.size()); }
  int ambient() const { return n_; }
  // reduces v in place; returns true if v was independent (and adds it)
  bool insert(std::vector<K> v) {
    reduce(v);
    int p = first_nonzero(v);
    if (p < 0) return false;
    K inv = K(1) / v[p];
    for (auto& x : v)
      if (!cohomolib::is_zero(x)) x *= inv;
    for (auto& r : rows_) {
      if (cohomolib::is_zero(r[p])) continue;
      K f = r[p];
      for (int j = 0; j < n_; ++j)
        if (!cohomolib::is_zero(v[j])) r[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  bool contains(std::vector<K> v) const {
    reduce(v);
    return first_nonzero(v) < 0;
  }
  const std::vector<std::vector<K>>& rows() const { return rows_; }

 private:
  void reduce(std::vector<K>& v) const {
    for (std::size_t t = 0; t < rows_.size(); ++t) {
      int p = pivots_[t];
      if (cohomolib::is_zero(v[p])) continue;
      K f = v[p];
      const auto& r = rows_[t];
      for (int j = 0; j < n_; ++j)
        if (!cohomolib::is_zero(r[j])) v[j] -= f * r[j];
    }
  }
  static int first_nonzero(const std::vector<K>& v) {
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!cohomolib::is_zero(v[j])) return int(j);
    return -1;
  }
  int n_;
  std::vector<std::vector<K>> rows_;
  std::vector<int> pivots_;
};

}  // namespace cohomolib
