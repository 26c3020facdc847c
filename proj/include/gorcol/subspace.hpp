#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "gorcol/matrix.hpp"

namespace gorcol {

// A linear subspace of k^n in canonical form: the row span of a reduced
// row-echelon basis with recorded pivot columns. Canonicality makes
// equality an entrywise comparison, which every ideal/module equality
// test in the library reduces to.
template <class F>
class Subspace {
 public:
  static Subspace zero(F field, int ambient) {
    return Subspace(Matrix<F>(field, 0, ambient), {});
  }

  static Subspace full(F field, int ambient) {
    std::vector<int> piv(ambient);
    for (int i = 0; i < ambient; ++i) piv[i] = i;
    return Subspace(Matrix<F>::identity(field, ambient), std::move(piv));
  }

  static Subspace from_matrix(const Matrix<F>& rows) {
    Rref<F> r = rref(rows);
    Matrix<F> basis(rows.field(), r.rank, rows.cols());
    for (int i = 0; i < r.rank; ++i)
      for (int j = 0; j < rows.cols(); ++j) basis.at(i, j) = r.mat.at(i, j);
    return Subspace(std::move(basis), std::move(r.pivots));
  }

  static Subspace from_vectors(F field, int ambient,
                               const std::vector<Vec<F>>& vecs) {
    Subspace s = zero(field, ambient);
    for (const auto& v : vecs) s.insert(v);
    return s;
  }

  int ambient() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const F& field() const { return basis_.field(); }

  Vec<F> basis_row(int i) const { return basis_.row(i); }

  // Normal form of v modulo the subspace: eliminate every pivot
  // coordinate. reduce(v) == 0 iff v lies in the span.
  Vec<F> reduce(Vec<F> v) const {
    const F& k = field();
    for (int i = 0; i < dim(); ++i) {
      const auto c = v[pivots_[i]];
      if (k.is_zero(c)) continue;
      for (int j = 0; j < ambient(); ++j)
        v[j] = k.sub(v[j], k.mul(c, basis_.at(i, j)));
    }
    return v;
  }

  bool contains(const Vec<F>& v) const { return is_zero_vec(field(), reduce(v)); }

  bool contains(const Subspace& other) const {
    if (other.ambient() != ambient()) throw Error("ambient dimension mismatch");
    for (int i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_row(i))) return false;
    return true;
  }

  // Coefficients of v with respect to the canonical basis; v must lie in
  // the span (an RREF basis reads them off the pivot coordinates).
  Vec<F> coordinates(const Vec<F>& v) const {
    internal_check(contains(v), "coordinates of a vector outside the subspace");
    Vec<F> c(dim(), field().zero());
    for (int i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  // Insert one vector, keeping the basis canonical. Returns true when the
  // subspace grew.
  bool insert(const Vec<F>& v) {
    const F& k = field();
    Vec<F> r = reduce(v);
    int p = -1;
    for (int j = 0; j < ambient(); ++j)
      if (!k.is_zero(r[j])) {
        p = j;
        break;
      }
    if (p < 0) return false;
    const auto inv = k.inv(r[p]);
    for (int j = 0; j < ambient(); ++j) r[j] = k.mul(inv, r[j]);
    // clear the new pivot column in the old rows, then insert sorted
    std::vector<Vec<F>> rows;
    rows.reserve(dim() + 1);
    for (int i = 0; i < dim(); ++i) {
      Vec<F> row = basis_row(i);
      const auto c = row[p];
      if (!k.is_zero(c))
        for (int j = 0; j < ambient(); ++j) row[j] = k.sub(row[j], k.mul(c, r[j]));
      rows.push_back(std::move(row));
    }
    std::vector<int> piv = pivots_;
    auto pos = std::lower_bound(piv.begin(), piv.end(), p) - piv.begin();
    piv.insert(piv.begin() + pos, p);
    rows.insert(rows.begin() + pos, std::move(r));
    basis_ = Matrix<F>::from_rows(k, rows);
    pivots_ = std::move(piv);
    return true;
  }

  bool operator==(const Subspace& o) const {
    return pivots_ == o.pivots_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  // Matrix of the normal-form map v -> reduce(v); its kernel is exactly
  // this subspace, which turns membership into linear conditions.
  Matrix<F> residual_matrix() const {
    const F& k = field();
    Matrix<F> e = Matrix<F>::identity(k, ambient());
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < ambient(); ++j)
        e.at(j, pivots_[i]) = k.sub(e.at(j, pivots_[i]), basis_.at(i, j));
    return e;
  }

 private:
  Subspace(Matrix<F> basis, std::vector<int> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix<F> basis_;
  std::vector<int> pivots_;
};

template <class F>
Subspace<F> sum(const Subspace<F>& u, const Subspace<F>& v) {
  if (u.ambient() != v.ambient()) throw Error("ambient dimension mismatch");
  Subspace<F> s = u;
  for (int i = 0; i < v.dim(); ++i) s.insert(v.basis_row(i));
  return s;
}

// Intersection by the Zassenhaus block trick: row-reduce [U U; V 0] and
// read the intersection off the rows whose left block vanished.
template <class F>
Subspace<F> meet(const Subspace<F>& u, const Subspace<F>& v) {
  if (u.ambient() != v.ambient()) throw Error("ambient dimension mismatch");
  const F& k = u.field();
  const int n = u.ambient();
  Matrix<F> block(k, u.dim() + v.dim(), 2 * n);
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < n; ++j) {
      block.at(i, j) = u.basis().at(i, j);
      block.at(i, n + j) = u.basis().at(i, j);
    }
  for (int i = 0; i < v.dim(); ++i)
    for (int j = 0; j < n; ++j) block.at(u.dim() + i, j) = v.basis().at(i, j);
  Rref<F> r = rref(block);
  std::vector<Vec<F>> rows;
  for (int i = 0; i < r.rank; ++i) {
    if (r.pivots[i] < n) continue;  // row still has a left-block pivot
    Vec<F> w(n, k.zero());
    for (int j = 0; j < n; ++j) w[j] = r.mat.at(i, n + j);
    rows.push_back(std::move(w));
  }
  return Subspace<F>::from_vectors(k, n, rows);
}

template <class F>
std::pair<Subspace<F>, Subspace<F>> meet_join(const Subspace<F>& u,
                                              const Subspace<F>& v) {
  return {meet(u, v), sum(u, v)};
}

// General solution of a x = rhs (one column per right-hand side).
template <class F>
struct LinearSolution {
  Matrix<F> particular;  // a.cols() x rhs.cols()
  Subspace<F> kernel;    // right kernel of a
};

template <class F>
std::optional<LinearSolution<F>> solve(const Matrix<F>& a, const Matrix<F>& rhs) {
  if (a.rows() != rhs.rows()) throw Error("dimension mismatch in solve");
  const F& k = a.field();
  Rref<F> r = rref(hstack(a, rhs));
  // a pivot inside the rhs block means an inconsistent system
  for (int p : r.pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix<F> part(k, a.cols(), rhs.cols());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < rhs.cols(); ++j)
      part.at(r.pivots[i], j) = r.mat.at(i, a.cols() + j);
  return LinearSolution<F>{std::move(part),
                           Subspace<F>::from_matrix(kernel_basis(a))};
}

template <class F>
std::optional<Vec<F>> solve_vec(const Matrix<F>& a, const Vec<F>& rhs) {
  Matrix<F> b(a.field(), static_cast<int>(rhs.size()), 1);
  b.set_col(0, rhs);
  auto s = solve(a, b);
  if (!s) return std::nullopt;
  return s->particular.col(0);
}

// Subspace spanned by the columns of m.
template <class F>
Subspace<F> column_space(const Matrix<F>& m) {
  std::vector<Vec<F>> cols;
  cols.reserve(m.cols());
  for (int j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return Subspace<F>::from_vectors(m.field(), m.rows(), cols);
}

template <class F>
Subspace<F> row_space(const Matrix<F>& m) {
  return Subspace<F>::from_matrix(m);
}

template <class F>
Subspace<F> kernel_space(const Matrix<F>& m) {
  Matrix<F> kb = kernel_basis(m);
  return Subspace<F>::from_matrix(kb);
}

}  // namespace gorcol
