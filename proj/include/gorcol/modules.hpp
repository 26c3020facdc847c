#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "gorcol/artin.hpp"

namespace gorcol {

// A finite R-module as commuting nilpotent action matrices, one per
// algebra generator. Ring elements given in the algebra basis act through
// the basis labels (exactness of labels is an ArtinAlgebra invariant).
template <class F>
struct ModuleRep {
  AlgebraPtr<F> alg;
  std::vector<Matrix<F>> action;

  int dim() const { return action.empty() ? 0 : action[0].rows(); }
};

template <class F>
using ModulePtr = std::shared_ptr<const ModuleRep<F>>;

namespace detail {

template <class F>
void check_module(const ModuleRep<F>& m) {
  const int n = static_cast<int>(m.action.size());
  internal_check(n == m.alg->ngens(), "one action matrix per generator");
  for (int i = 0; i < n; ++i) {
    internal_check(m.action[i].rows() == m.dim() && m.action[i].cols() == m.dim(),
                   "module actions must be square of equal size");
    for (int j = i + 1; j < n; ++j)
      internal_check(mul(m.action[i], m.action[j]) == mul(m.action[j], m.action[i]),
                     "module actions must commute");
  }
  for (int i = 0; i < n; ++i) {
    Matrix<F> p = m.action[i];
    int covered = 1;
    while (covered < m.dim() && !p.is_zero()) {
      p = mul(p, p);
      covered *= 2;
    }
    internal_check(p.is_zero() || m.dim() == 0, "module actions must be nilpotent");
  }
}

}  // namespace detail

template <class F>
ModulePtr<F> make_module(AlgebraPtr<F> alg, std::vector<Matrix<F>> action,
                         bool check = true) {
  auto m = std::make_shared<ModuleRep<F>>(ModuleRep<F>{std::move(alg), std::move(action)});
  if (check) detail::check_module(*m);
  return m;
}

// R as a module over itself.
template <class F>
ModulePtr<F> regular_module(AlgebraPtr<F> alg) {
  std::vector<Matrix<F>> act = alg->gen_action;
  return make_module(std::move(alg), std::move(act), false);
}

// The canonical module: the k-linear dual of R with contragredient
// (transposed) action. For an Artinian k-algebra this is the injective
// hull of the residue field, i.e. the Matlis dualizing module.
template <class F>
ModulePtr<F> canonical_module(AlgebraPtr<F> alg) {
  std::vector<Matrix<F>> act;
  act.reserve(alg->gen_action.size());
  for (const auto& a : alg->gen_action) act.push_back(transpose(a));
  return make_module(std::move(alg), std::move(act), false);
}

// x |-> (monomial in the generators) . x
template <class F>
Vec<F> monomial_act(const ModuleRep<F>& m, const Monomial& mono, Vec<F> x) {
  for (int i = 0; i < mono.nvars(); ++i)
    for (int e = 0; e < mono.exponent(i); ++e) x = mat_vec(m.action[i], x);
  return x;
}

// action of the ring element r (coordinates in the algebra basis)
template <class F>
Vec<F> module_act(const ModuleRep<F>& m, const Vec<F>& r, const Vec<F>& x) {
  const F& k = m.alg->field;
  Vec<F> out(m.dim(), k.zero());
  for (int j = 0; j < m.alg->length(); ++j) {
    if (k.is_zero(r[j])) continue;
    Vec<F> t = monomial_act(m, m.alg->basis[j], x);
    for (int i = 0; i < m.dim(); ++i) out[i] = k.add(out[i], k.mul(r[j], t[i]));
  }
  return out;
}

template <class F>
Matrix<F> ring_action_matrix(const ModuleRep<F>& m, const Vec<F>& r) {
  Matrix<F> out(m.alg->field, m.dim(), m.dim());
  for (int c = 0; c < m.dim(); ++c)
    out.set_col(c, module_act(m, r, unit_vec(m.alg->field, m.dim(), c)));
  return out;
}

// (0 :_M a), the elements killed by an ideal
template <class F>
Subspace<F> module_annihilator(const ModuleRep<F>& m, const IdealRep<F>& a) {
  const F& k = m.alg->field;
  if (a.space.dim() == 0) return Subspace<F>::full(k, m.dim());
  Matrix<F> stacked(k, 0, m.dim());
  for (int r = 0; r < a.space.dim(); ++r) {
    Matrix<F> cond = ring_action_matrix(m, a.space.basis_row(r));
    stacked = stacked.rows() == 0 ? cond : vstack(stacked, cond);
  }
  return kernel_space(stacked);
}

// (0 :_M m), the socle of the module
template <class F>
Subspace<F> module_socle(const ModuleRep<F>& m) {
  const F& k = m.alg->field;
  Matrix<F> stacked(k, 0, m.dim());
  for (const auto& a : m.action)
    stacked = stacked.rows() == 0 ? a : vstack(stacked, a);
  if (stacked.rows() == 0) return Subspace<F>::full(k, m.dim());
  return kernel_space(stacked);
}

// a M, the submodule spanned by products of ideal and module elements
template <class F>
Subspace<F> ideal_times_module(const ModuleRep<F>& m, const IdealRep<F>& a) {
  std::vector<Vec<F>> vecs;
  for (int r = 0; r < a.space.dim(); ++r) {
    Matrix<F> act = ring_action_matrix(m, a.space.basis_row(r));
    for (int c = 0; c < m.dim(); ++c) vecs.push_back(act.col(c));
  }
  return Subspace<F>::from_vectors(m.alg->field, m.dim(), vecs);
}

// An R-linear map between modules; the intertwining relations
// mat . act_dom[i] = act_cod[i] . mat are checked at construction.
template <class F>
struct ModuleMap {
  ModulePtr<F> dom, cod;
  Matrix<F> mat;
};

template <class F>
bool intertwines(const ModuleRep<F>& dom, const ModuleRep<F>& cod,
                 const Matrix<F>& mat) {
  for (std::size_t i = 0; i < dom.action.size(); ++i)
    if (mul(mat, dom.action[i]) != mul(cod.action[i], mat)) return false;
  return true;
}

template <class F>
ModuleMap<F> make_map(ModulePtr<F> dom, ModulePtr<F> cod, Matrix<F> mat,
                      bool check = true) {
  if (check)
    internal_check(intertwines(*dom, *cod, mat), "module map must intertwine");
  return ModuleMap<F>{std::move(dom), std::move(cod), std::move(mat)};
}

template <class F>
ModuleMap<F> zero_map(ModulePtr<F> dom, ModulePtr<F> cod) {
  Matrix<F> z(dom->alg->field, cod->dim(), dom->dim());
  return ModuleMap<F>{std::move(dom), std::move(cod), std::move(z)};
}

template <class F>
Subspace<F> image(const ModuleMap<F>& f) {
  return column_space(f.mat);
}

template <class F>
Subspace<F> kernel(const ModuleMap<F>& f) {
  return kernel_space(f.mat);
}

// Basis of Hom_R(M, N): the kernel of the stacked intertwining conditions
// on matrix entries, unflattened. Deterministic order.
template <class F>
struct HomSpace {
  ModulePtr<F> dom, cod;
  std::vector<Matrix<F>> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

template <class F>
HomSpace<F> hom_basis(ModulePtr<F> dom, ModulePtr<F> cod) {
  const F& k = dom->alg->field;
  const int dm = dom->dim(), dn = cod->dim();
  const int vars = dm * dn;  // unknown X is dn x dm, flattened column-major
  auto idx = [dn](int r, int c) { return c * dn + r; };
  const int n = static_cast<int>(dom->action.size());
  Matrix<F> big(k, n * vars, vars);
  for (int i = 0; i < n; ++i) {
    const Matrix<F>& a = dom->action[i];
    const Matrix<F>& b = cod->action[i];
    for (int r = 0; r < dn; ++r)
      for (int c = 0; c < dm; ++c) {
        const int row = i * vars + idx(r, c);
        // (X A_i)[r][c] = sum_s X[r][s] A_i[s][c]
        for (int s = 0; s < dm; ++s)
          if (!k.is_zero(a.at(s, c)))
            big.at(row, idx(r, s)) = k.add(big.at(row, idx(r, s)), a.at(s, c));
        // -(B_i X)[r][c] = -sum_s B_i[r][s] X[s][c]
        for (int s = 0; s < dn; ++s)
          if (!k.is_zero(b.at(r, s)))
            big.at(row, idx(s, c)) = k.sub(big.at(row, idx(s, c)), b.at(r, s));
      }
  }
  Matrix<F> ker = kernel_basis(big);
  HomSpace<F> h{dom, cod, {}};
  for (int row = 0; row < ker.rows(); ++row) {
    Matrix<F> m(k, dn, dm);
    for (int r = 0; r < dn; ++r)
      for (int c = 0; c < dm; ++c) m.at(r, c) = ker.at(row, idx(r, c));
    h.basis.push_back(std::move(m));
  }
  return h;
}

// Matlis dual M^v = Hom(M, omega), realized as the linear dual with
// transposed actions; contravariant on maps via the transpose.
template <class F>
ModulePtr<F> matlis_dual(const ModulePtr<F>& m) {
  std::vector<Matrix<F>> act;
  act.reserve(m->action.size());
  for (const auto& a : m->action) act.push_back(transpose(a));
  return make_module(m->alg, std::move(act), false);
}

template <class F>
ModuleMap<F> dual_map(const ModuleMap<F>& f) {
  return make_map(matlis_dual(f.cod), matlis_dual(f.dom), transpose(f.mat), false);
}

// Submodule on an action-closed subspace, with its inclusion.
template <class F>
std::pair<ModulePtr<F>, ModuleMap<F>> submodule(const ModulePtr<F>& m,
                                                const Subspace<F>& u) {
  const F& k = m->alg->field;
  std::vector<Matrix<F>> act;
  for (const auto& a : m->action) {
    Matrix<F> r(k, u.dim(), u.dim());
    for (int c = 0; c < u.dim(); ++c) {
      Vec<F> w = mat_vec(a, u.basis_row(c));
      internal_check(u.contains(w), "submodule subspace must be action-closed");
      r.set_col(c, u.coordinates(w));
    }
    act.push_back(std::move(r));
  }
  auto sub = make_module(m->alg, std::move(act), false);
  Matrix<F> incl(k, m->dim(), u.dim());
  for (int c = 0; c < u.dim(); ++c) incl.set_col(c, u.basis_row(c));
  return {sub, make_map(sub, m, std::move(incl), false)};
}

// Quotient module M/U on the non-pivot coordinates, with its projection.
template <class F>
std::pair<ModulePtr<F>, ModuleMap<F>> quotient_module(const ModulePtr<F>& m,
                                                      const Subspace<F>& u) {
  const F& k = m->alg->field;
  std::vector<int> free_coords;
  {
    std::vector<bool> is_pivot(m->dim(), false);
    for (int p : u.pivots()) is_pivot[p] = true;
    for (int c = 0; c < m->dim(); ++c)
      if (!is_pivot[c]) free_coords.push_back(c);
  }
  const int q = static_cast<int>(free_coords.size());
  Matrix<F> proj(k, q, m->dim());
  {
    Matrix<F> residual = u.residual_matrix();
    for (int r = 0; r < q; ++r)
      for (int c = 0; c < m->dim(); ++c) proj.at(r, c) = residual.at(free_coords[r], c);
  }
  std::vector<Matrix<F>> act;
  for (const auto& a : m->action) {
    Matrix<F> r(k, q, q);
    for (int c = 0; c < q; ++c) {
      Vec<F> w = mat_vec(proj, mat_vec(a, unit_vec(k, m->dim(), free_coords[c])));
      r.set_col(c, w);
    }
    act.push_back(std::move(r));
  }
  auto quo = make_module(m->alg, std::move(act), false);
  return {quo, make_map(m, quo, std::move(proj), false)};
}

// The ideal a as a module together with its inclusion into R.
template <class F>
std::pair<ModulePtr<F>, ModuleMap<F>> as_module(const AlgebraPtr<F>& alg,
                                                const IdealRep<F>& a) {
  return submodule(regular_module(alg), a.space);
}

// a^v realized as omega/(0 :_omega a) via the surjection u |-> (x |-> xu).
template <class F>
struct IdealDual {
  ModulePtr<F> dual;
  ModuleMap<F> from_omega;  // the surjection i^v
};

template <class F>
IdealDual<F> ideal_dual(const AlgebraPtr<F>& alg, const IdealRep<F>& a) {
  auto omega = canonical_module(alg);
  Subspace<F> killed = module_annihilator(*omega, a);
  auto [quo, proj] = quotient_module(omega, killed);
  internal_check(quo->dim() == a.space.dim(),
                 "lambda(a dual) must equal lambda(a)");
  return IdealDual<F>{quo, proj};
}

template <class F>
int length(const ModulePtr<F>& m) {
  return m->dim();
}

}  // namespace gorcol
