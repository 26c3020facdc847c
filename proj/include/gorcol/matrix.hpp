#pragma once

#include <initializer_list>
#include <vector>

#include "gorcol/errors.hpp"
#include "gorcol/field.hpp"

namespace gorcol {

template <class F>
using Vec = std::vector<typename F::Elem>;

// Dense matrix over an exact field. Row-major, value semantics.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(F field, int rows, int cols)
      : field_(field),
        rows_(rows),
        cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, field.zero()) {}

  static Matrix identity(F field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(F field, const std::vector<Vec<F>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(field, r, c);
    for (int i = 0; i < r; ++i) {
      internal_check(static_cast<int>(rows[i].size()) == c,
                     "ragged rows in Matrix::from_rows");
      for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const F& field() const { return field_; }

  Elem& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Elem& at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  Vec<F> row(int r) const {
    Vec<F> v(cols_, field_.zero());
    for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
  }
  Vec<F> col(int c) const {
    Vec<F> v(rows_, field_.zero());
    for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
  }
  void set_row(int r, const Vec<F>& v) {
    for (int j = 0; j < cols_; ++j) at(r, j) = v[j];
  }
  void set_col(int c, const Vec<F>& v) {
    for (int i = 0; i < rows_; ++i) at(i, c) = v[i];
  }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!field_.is_zero(e)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!field_.eq(data_[i], o.data_[i])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  F field_;
  int rows_, cols_;
  std::vector<Elem> data_;
};

template <class F>
Matrix<F> transpose(const Matrix<F>& m) {
  Matrix<F> t(m.field(), m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

template <class F>
Matrix<F> mul(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw Error("matrix dimension mismatch in mul");
  const F& k = a.field();
  Matrix<F> r(k, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int l = 0; l < a.cols(); ++l) {
      const auto& ail = a.at(i, l);
      if (k.is_zero(ail)) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const auto& blj = b.at(l, j);
        if (k.is_zero(blj)) continue;
        r.at(i, j) = k.add(r.at(i, j), k.mul(ail, blj));
      }
    }
  return r;
}

template <class F>
Matrix<F> add(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("matrix dimension mismatch in add");
  const F& k = a.field();
  Matrix<F> r(k, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = k.add(a.at(i, j), b.at(i, j));
  return r;
}

template <class F>
Matrix<F> sub(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("matrix dimension mismatch in sub");
  const F& k = a.field();
  Matrix<F> r(k, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = k.sub(a.at(i, j), b.at(i, j));
  return r;
}

template <class F>
Matrix<F> scale(const Matrix<F>& a, const typename F::Elem& c) {
  const F& k = a.field();
  Matrix<F> r(k, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = k.mul(c, a.at(i, j));
  return r;
}

// stack a on top of b
template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.cols()) throw Error("matrix dimension mismatch in vstack");
  Matrix<F> r(a.field(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

template <class F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw Error("matrix dimension mismatch in hstack");
  Matrix<F> r(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

template <class F>
Vec<F> mat_vec(const Matrix<F>& m, const Vec<F>& v) {
  if (m.cols() != static_cast<int>(v.size()))
    throw Error("matrix dimension mismatch in apply");
  const F& k = m.field();
  Vec<F> r(m.rows(), k.zero());
  for (int j = 0; j < m.cols(); ++j) {
    if (k.is_zero(v[j])) continue;
    for (int i = 0; i < m.rows(); ++i) {
      if (k.is_zero(m.at(i, j))) continue;
      r[i] = k.add(r[i], k.mul(m.at(i, j), v[j]));
    }
  }
  return r;
}

template <class F>
bool is_zero_vec(const F& k, const Vec<F>& v) {
  for (const auto& e : v)
    if (!k.is_zero(e)) return false;
  return true;
}

template <class F>
Vec<F> zero_vec(const F& k, int n) {
  return Vec<F>(n, k.zero());
}

template <class F>
Vec<F> unit_vec(const F& k, int n, int i) {
  Vec<F> v(n, k.zero());
  v[i] = k.one();
  return v;
}

template <class F>
Vec<F> add_vec(const F& k, const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r(a.size(), k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.add(a[i], b[i]);
  return r;
}

template <class F>
Vec<F> sub_vec(const F& k, const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r(a.size(), k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.sub(a[i], b[i]);
  return r;
}

template <class F>
Vec<F> scale_vec(const F& k, const typename F::Elem& c, const Vec<F>& a) {
  Vec<F> r(a.size(), k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.mul(c, a[i]);
  return r;
}

template <class F>
bool eq_vec(const F& k, const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!k.eq(a[i], b[i])) return false;
  return true;
}

// Result of Gauss-Jordan elimination: the unique reduced row-echelon form,
// its pivot columns and the rank.
template <class F>
struct Rref {
  Matrix<F> mat;
  std::vector<int> pivots;
  int rank = 0;
};

template <class F>
Rref<F> rref(Matrix<F> m) {
  const F& k = m.field();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot_row = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!k.is_zero(m.at(i, c))) {
        pivot_row = i;
        break;
      }
    if (pivot_row < 0) continue;
    if (pivot_row != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot_row, j));
    const auto piv_inv = k.inv(m.at(r, c));
    for (int j = c; j < m.cols(); ++j) m.at(r, j) = k.mul(piv_inv, m.at(r, j));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || k.is_zero(m.at(i, c))) continue;
      const auto f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j)
        m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref<F>{std::move(m), std::move(pivots), r};
}

template <class F>
int rank(const Matrix<F>& m) {
  return rref(m).rank;
}

// Basis of the right kernel {x : m x = 0}, one solution per row.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  const F& k = m.field();
  Rref<F> r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<Vec<F>> rows;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<F> v(m.cols(), k.zero());
    v[f] = k.one();
    for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = k.neg(r.mat.at(i, f));
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return Matrix<F>(k, 0, m.cols());
  return Matrix<F>::from_rows(k, rows);
}

}  // namespace gorcol
