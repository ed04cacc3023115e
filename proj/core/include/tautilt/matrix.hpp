#ifndef TAUTILT_MATRIX_HPP
#define TAUTILT_MATRIX_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "tautilt/errors.hpp"
#include "tautilt/field.hpp"

namespace tautilt {

// Dense matrix over an exact field. Vectors throughout the library are ROW
// vectors acting by right multiplication, matching the right-module
// convention: an arrow i -> j of a representation is a (dim_i x dim_j)
// matrix mapping row vectors of M_i into M_j.
template <class K>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, K(0)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  K& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const K& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!is_zero_scalar(x)) return false;
    return true;
  }

  Mat transposed() const {
    Mat t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.c_ != b.r_) throw InternalError("matrix product shape mismatch");
    Mat p(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const K& aik = a.at(i, k);
        if (is_zero_scalar(aik)) continue;
        for (int j = 0; j < b.c_; ++j) {
          const K& bkj = b.at(k, j);
          if (!is_zero_scalar(bkj)) p.at(i, j) += aik * bkj;
        }
      }
    return p;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw InternalError("matrix sum shape mismatch");
    Mat s(a.r_, a.c_);
    for (size_t i = 0; i < a.a_.size(); ++i) s.a_[i] = a.a_[i] + b.a_[i];
    return s;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw InternalError("matrix diff shape mismatch");
    Mat s(a.r_, a.c_);
    for (size_t i = 0; i < a.a_.size(); ++i) s.a_[i] = a.a_[i] - b.a_[i];
    return s;
  }

  Mat scaled(const K& s) const {
    Mat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  std::vector<K> row(int i) const {
    return std::vector<K>(a_.begin() + size_t(i) * c_,
                          a_.begin() + size_t(i + 1) * c_);
  }
  void set_row(int i, const std::vector<K>& v) {
    std::copy(v.begin(), v.end(), a_.begin() + size_t(i) * c_);
  }

 private:
  static bool is_zero_scalar(const K& x) { return tautilt::is_zero(x); }
  int r_ = 0, c_ = 0;
  std::vector<K> a_;
};

template <class K>
Mat<K> vstack(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw InternalError("vstack width mismatch");
  Mat<K> s(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) s.at(a.rows() + i, j) = b.at(i, j);
  return s;
}

template <class K>
struct Rref {
  Mat<K> R;                    // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;     // pivot column per row of R, increasing
  int rank = 0;

  bool is_pivot_col(int c) const {
    return std::binary_search(pivots.begin(), pivots.end(), c);
  }
};

// Reduced row echelon form with unit pivots; fully deterministic.
template <class K>
Rref<K> rref(const Mat<K>& m) {
  Mat<K> w = m;
  int rows = w.rows(), cols = w.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(w.at(i, c))) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < cols; ++j) std::swap(w.at(sel, j), w.at(r, j));
    K inv = K(1) / w.at(r, c);
    for (int j = c; j < cols; ++j) w.at(r, j) = w.at(r, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const K f = w.at(i, c);
      if (is_zero(f)) continue;
      for (int j = c; j < cols; ++j) w.at(i, j) = w.at(i, j) - f * w.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Rref<K> out;
  out.rank = r;
  out.pivots = pivots;
  out.R = Mat<K>(r, cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) out.R.at(i, j) = w.at(i, j);
  return out;
}

template <class K>
int rank(const Mat<K>& m) { return rref(m).rank; }

// Residue of v modulo the row space captured by an rref; the result has
// zeros in all pivot columns.
template <class K>
std::vector<K> reduce_row(const Rref<K>& rr, std::vector<K> v) {
  for (int i = 0; i < rr.rank; ++i) {
    const K f = v[rr.pivots[i]];
    if (is_zero(f)) continue;
    for (int j = 0; j < rr.R.cols(); ++j) v[j] = v[j] - f * rr.R.at(i, j);
  }
  return v;
}

template <class K>
bool in_row_space(const Rref<K>& rr, const std::vector<K>& v) {
  auto res = reduce_row(rr, v);
  for (const auto& x : res)
    if (!is_zero(x)) return false;
  return true;
}

// Canonical basis of {x : M x^T = 0}, one row per free column, built from
// the rref free-variable construction (unit in its free column).
template <class K>
Mat<K> nullspace_rows(const Mat<K>& m) {
  auto rr = rref(m);
  int cols = m.cols();
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!rr.is_pivot_col(c)) free_cols.push_back(c);
  Mat<K> out(int(free_cols.size()), cols);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int f = free_cols[k];
    out.at(int(k), f) = K(1);
    for (int i = 0; i < rr.rank; ++i)
      out.at(int(k), rr.pivots[i]) = -rr.R.at(i, f);
  }
  return out;
}

// Basis of {x row : x A = 0}.
template <class K>
Mat<K> left_kernel(const Mat<K>& a) { return nullspace_rows(a.transposed()); }

// Solves X A = B row-wise; returns nothing when inconsistent.
template <class K>
std::optional<Mat<K>> solve_left(const Mat<K>& a, const Mat<K>& b) {
  // x A = b  <=>  A^T x^T = b^T ; eliminate on [A^T | b^T].
  Mat<K> at = a.transposed();
  Mat<K> aug(at.rows(), at.cols() + b.rows());
  for (int i = 0; i < at.rows(); ++i) {
    for (int j = 0; j < at.cols(); ++j) aug.at(i, j) = at.at(i, j);
    for (int k = 0; k < b.rows(); ++k) aug.at(i, at.cols() + k) = b.at(k, i);
  }
  auto rr = rref(aug);
  Mat<K> x(b.rows(), a.rows());
  for (int i = 0; i < rr.rank; ++i) {
    int p = rr.pivots[i];
    if (p >= at.cols()) return std::nullopt;  // inconsistent system
    for (int k = 0; k < b.rows(); ++k) x.at(k, p) = rr.R.at(i, at.cols() + k);
  }
  return x;
}

template <class K>
K det(const Mat<K>& m) {
  if (m.rows() != m.cols()) throw InternalError("det of non-square matrix");
  Mat<K> w = m;
  int n = w.rows();
  K d(1);
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i)
      if (!is_zero(w.at(i, c))) { sel = i; break; }
    if (sel < 0) return K(0);
    if (sel != c) {
      for (int j = 0; j < n; ++j) std::swap(w.at(sel, j), w.at(c, j));
      d = -d;
    }
    d = d * w.at(c, c);
    K inv = K(1) / w.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      const K f = w.at(i, c) * inv;
      if (is_zero(f)) continue;
      for (int j = c; j < n; ++j) w.at(i, j) = w.at(i, j) - f * w.at(c, j);
    }
  }
  return d;
}

template <class K>
std::optional<Mat<K>> inverse(const Mat<K>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  Mat<K> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = K(1);
  }
  auto rr = rref(aug);
  if (rr.rank < n || rr.pivots[n - 1] >= n) return std::nullopt;
  Mat<K> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = rr.R.at(i, n + j);
  return inv;
}

template <class K>
bool is_invertible(const Mat<K>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

}  // namespace tautilt

#endif
