#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gorcol/parse.hpp"
#include "gorcol/polynomial.hpp"
#include "gorcol/subspace.hpp"

namespace gorcol {

// Presentation of R = T/b: a coefficient field, variable names for the
// regular ring T = k[x_1..x_n], generators of the m_T-primary ideal b, and
// a cap on the truncation exponent search.
template <class F>
struct Presentation {
  F field;
  std::vector<std::string> vars;
  std::vector<Polynomial<F>> gens;
  int max_n = 50;
};

// Dense model of T/m^N. Coordinates are the monomials of degree < N in
// graded-lex DESCENDING order, so that row reduction pivots on leading
// monomials; the non-pivot (standard) monomials are then closed under
// division, which the multiplication tables rely on.
template <class F>
class TruncModel {
 public:
  TruncModel(F field, int nvars, int trunc)
      : field_(field), nvars_(nvars), trunc_(trunc),
        coords_(monomials_below(nvars, trunc)) {
    for (int i = 0; i < static_cast<int>(coords_.size()); ++i)
      index_.emplace(coords_[i], i);
  }

  const F& field() const { return field_; }
  int nvars() const { return nvars_; }
  int trunc() const { return trunc_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<Monomial>& coords() const { return coords_; }

  // -1 when the monomial has degree >= N (i.e. is zero in the model)
  int index_of(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
  }

  Vec<F> poly_to_vec(const Polynomial<F>& p) const {
    Vec<F> v(dim(), field_.zero());
    for (const auto& t : p.terms()) {
      const int i = index_of(t.mono);
      if (i >= 0) v[i] = t.coeff;
    }
    return v;
  }

  Polynomial<F> vec_to_poly(const Vec<F>& v) const {
    std::map<Monomial, typename F::Elem> acc;
    for (int i = 0; i < dim(); ++i)
      if (!field_.is_zero(v[i])) acc.emplace(coords_[i], v[i]);
    return Polynomial<F>::from_term_map(field_, nvars_, acc);
  }

  // multiplication by the variable x_i as a coordinate shift
  Vec<F> mul_variable(int i, const Vec<F>& v) const {
    Vec<F> w(dim(), field_.zero());
    for (int j = 0; j < dim(); ++j) {
      if (field_.is_zero(v[j])) continue;
      const int t = index_of(coords_[j].times_variable(i));
      if (t >= 0) w[t] = field_.add(w[t], v[j]);
    }
    return w;
  }

  // The subspace (gens)+m^N / m^N: saturate the span of the generators
  // under multiplication by the variables.
  Subspace<F> ideal_image(const std::vector<Polynomial<F>>& gens) const {
    Subspace<F> s = Subspace<F>::zero(field_, dim());
    std::vector<Vec<F>> work;
    for (const auto& g : gens) {
      Vec<F> v = poly_to_vec(g);
      if (s.insert(v)) work.push_back(std::move(v));
    }
    while (!work.empty()) {
      Vec<F> v = std::move(work.back());
      work.pop_back();
      for (int i = 0; i < nvars_; ++i) {
        Vec<F> w = mul_variable(i, v);
        if (s.insert(w)) work.push_back(std::move(w));
      }
    }
    return s;
  }

 private:
  F field_;
  int nvars_;
  int trunc_;
  std::vector<Monomial> coords_;
  std::map<Monomial, int> index_;
};

// Reduction data kept by algebras built from a presentation: the ambient
// truncation, the subspace (b+m^N)/m^N, and the coordinate of each
// standard monomial, so arbitrary polynomials of T can be mapped into R.
template <class F>
struct ReductionContext {
  TruncModel<F> model;
  Subspace<F> ideal;
  std::vector<int> basis_coord;  // model coordinate of basis monomial j
};

// Finite-dimensional model of an Artinian local k-algebra: a k-basis with
// monomial labels, one multiplication matrix per basis element (the full
// multiplication table) and one per algebra generator. Labels are exact:
// evaluating basis[j] as a word in the generators yields the j-th basis
// vector, which is what lets modules act by arbitrary ring elements.
//
// Immutable after construction; all queries are const.
template <class F>
class ArtinAlgebra {
 public:
  F field;
  std::vector<std::string> vars;       // generator names
  std::vector<Monomial> basis;         // labels, ascending graded-lex
  int unit_index = 0;
  std::vector<Matrix<F>> gen_action;   // multiplication by each generator
  std::vector<Matrix<F>> table;        // multiplication by each basis element
  int found_n = 0;                     // m^found_n = 0 holds in the model
  std::optional<ReductionContext<F>> reduction;

  int length() const { return static_cast<int>(basis.size()); }
  int ngens() const { return static_cast<int>(vars.size()); }

  Vec<F> unit_vec() const { return gorcol::unit_vec(field, length(), unit_index); }

  Vec<F> mult(const Vec<F>& u, const Vec<F>& v) const {
    Vec<F> r(length(), field.zero());
    for (int j = 0; j < length(); ++j) {
      if (field.is_zero(u[j])) continue;
      Vec<F> t = mat_vec(table[j], v);
      for (int i = 0; i < length(); ++i)
        r[i] = field.add(r[i], field.mul(u[j], t[i]));
    }
    return r;
  }

  // matrix of multiplication by u
  Matrix<F> mult_matrix(const Vec<F>& u) const {
    Matrix<F> m(field, length(), length());
    for (int j = 0; j < length(); ++j) {
      if (field.is_zero(u[j])) continue;
      for (int r = 0; r < length(); ++r)
        for (int c = 0; c < length(); ++c)
          m.at(r, c) = field.add(m.at(r, c), field.mul(u[j], table[j].at(r, c)));
    }
    return m;
  }

  // image of a polynomial of T in R (presented algebras only)
  Vec<F> reduce_polynomial(const Polynomial<F>& p) const {
    internal_check(reduction.has_value(),
                   "reduce_polynomial needs a presented algebra");
    const auto& ctx = *reduction;
    Vec<F> nf = ctx.ideal.reduce(ctx.model.poly_to_vec(p));
    Vec<F> out(length(), field.zero());
    for (int j = 0; j < length(); ++j) out[j] = nf[ctx.basis_coord[j]];
    return out;
  }

  Vec<F> reduce_text(const std::string& text) const {
    return reduce_polynomial(parse_polynomial(field, text, vars));
  }

  // element as a polynomial in the basis labels (exact by the label
  // invariant; for presented algebras this is the normal-form lift to T)
  Polynomial<F> element_poly(const Vec<F>& v) const {
    std::map<Monomial, typename F::Elem> acc;
    for (int j = 0; j < length(); ++j)
      if (!field.is_zero(v[j])) acc.emplace(basis[j], v[j]);
    return Polynomial<F>::from_term_map(
        field, basis.empty() ? 0 : basis[0].nvars(), acc);
  }

  std::string element_str(const Vec<F>& v) const {
    std::map<Monomial, typename F::Elem> acc;
    for (int j = 0; j < length(); ++j)
      if (!field.is_zero(v[j])) acc.emplace(basis[j], v[j]);
    return Polynomial<F>::from_term_map(field, basis.empty() ? 0 : basis[0].nvars(),
                                        acc)
        .str(vars);
  }
};

template <class F>
using AlgebraPtr = std::shared_ptr<const ArtinAlgebra<F>>;

// An ideal of R as a canonical, action-closed subspace of k^lambda.
template <class F>
struct IdealRep {
  AlgebraPtr<F> alg;
  Subspace<F> space;

  int colength() const { return alg->length() - space.dim(); }
  int dim() const { return space.dim(); }
};

namespace detail {

template <class F>
void check_commuting_nilpotent(const ArtinAlgebra<F>& a) {
  const int n = a.ngens();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      internal_check(mul(a.gen_action[i], a.gen_action[j]) ==
                         mul(a.gen_action[j], a.gen_action[i]),
                     "generator actions must commute");
  for (int i = 0; i < n; ++i) {
    Matrix<F> p = a.gen_action[i];
    int covered = 1;
    while (covered < a.length() && !p.is_zero()) {
      p = mul(p, p);
      covered *= 2;
    }
    internal_check(p.is_zero(), "generator actions must be nilpotent");
  }
}

}  // namespace detail

// Build R = T/b. The truncation exponent N is discovered by iterating
// N = 2,3,... and testing the Nakayama criterion m^(N-1) <= b + m^N inside
// T/m^N, which certifies m^(N-1) <= b; the k-basis of R is the set of
// non-pivot (standard) monomials of the reduced ideal subspace.
template <class F>
AlgebraPtr<F> build_algebra(const Presentation<F>& p) {
  const F& k = p.field;
  const int n = static_cast<int>(p.vars.size());
  if (n < 1) throw InputError("presentation needs at least one variable");

  std::vector<Polynomial<F>> gens;
  for (const auto& g : p.gens) {
    if (g.is_zero()) continue;
    if (!k.is_zero(g.constant_coeff()))
      throw InputError("unit ideal: generator has nonzero constant term");
    gens.push_back(g);
  }

  for (int N = 2; N <= p.max_n; ++N) {
    TruncModel<F> model(k, n, N);
    Subspace<F> ideal = model.ideal_image(gens);
    bool certified = true;
    for (const auto& m : monomials_of_degree(n, N - 1)) {
      Vec<F> v(model.dim(), k.zero());
      v[model.index_of(m)] = k.one();
      if (!ideal.contains(v)) {
        certified = false;
        break;
      }
    }
    if (!certified) continue;

    auto alg = std::make_shared<ArtinAlgebra<F>>();
    alg->field = k;
    alg->vars = p.vars;
    alg->found_n = N;

    std::vector<bool> is_pivot(model.dim(), false);
    for (int piv : ideal.pivots()) is_pivot[piv] = true;
    internal_check(!is_pivot[model.index_of(Monomial(n))],
                   "unit monomial must be standard");
    // standard monomials, by ascending degree and descending lex within a
    // degree, so bases read 1, x, y, x^2, xy, ...
    std::vector<int> basis_coord;
    for (int c = model.dim() - 1; c >= 0; --c)
      if (!is_pivot[c]) basis_coord.push_back(c);
    std::sort(basis_coord.begin(), basis_coord.end(), [&](int a, int b) {
      const Monomial &ma = model.coords()[a], &mb = model.coords()[b];
      if (ma.degree() != mb.degree()) return ma.degree() < mb.degree();
      return ma > mb;
    });
    for (int c : basis_coord) alg->basis.push_back(model.coords()[c]);
    const int lambda = static_cast<int>(alg->basis.size());
    alg->unit_index = 0;

    std::map<Monomial, int> basis_index;
    for (int j = 0; j < lambda; ++j) basis_index.emplace(alg->basis[j], j);

    auto to_basis = [&](const Vec<F>& model_vec) {
      Vec<F> nf = ideal.reduce(model_vec);
      Vec<F> out(lambda, k.zero());
      for (int j = 0; j < lambda; ++j) out[j] = nf[basis_coord[j]];
      return out;
    };

    for (int i = 0; i < n; ++i) {
      Matrix<F> act(k, lambda, lambda);
      for (int j = 0; j < lambda; ++j) {
        const int t = model.index_of(alg->basis[j].times_variable(i));
        if (t < 0) continue;  // degree >= N, zero in R
        Vec<F> v(model.dim(), k.zero());
        v[t] = k.one();
        act.set_col(j, to_basis(v));
      }
      alg->gen_action.push_back(std::move(act));
    }

    // multiplication tables, built up by degree: mult by x_i*w is
    // gen_action[i] * (mult by w), and basis monomials are closed under
    // division so the smaller table entry always exists
    alg->table.assign(lambda, Matrix<F>(k, lambda, lambda));
    for (int j = 0; j < lambda; ++j) {
      if (alg->basis[j].is_unit()) {
        alg->table[j] = Matrix<F>::identity(k, lambda);
        continue;
      }
      const int i = alg->basis[j].first_variable();
      const Monomial quotient = alg->basis[j].divided_by_variable(i);
      auto it = basis_index.find(quotient);
      internal_check(it != basis_index.end(),
                     "standard monomials closed under division");
      alg->table[j] = mul(alg->gen_action[i], alg->table[it->second]);
    }

    alg->reduction = ReductionContext<F>{std::move(model), std::move(ideal),
                                         std::move(basis_coord)};

    for (const auto& g : gens)
      internal_check(is_zero_vec(k, alg->reduce_polynomial(g)),
                     "presentation generators must vanish in R");
    detail::check_commuting_nilpotent(*alg);
    return alg;
  }
  throw InputError("not m-primary within N_max = " + std::to_string(p.max_n));
}

// T/m^N itself, built directly (no reduction needed): the workhorse model
// for all the section-5 constructions.
template <class F>
AlgebraPtr<F> truncated_power_algebra(F field, const std::vector<std::string>& vars,
                                      int N) {
  const int n = static_cast<int>(vars.size());
  auto alg = std::make_shared<ArtinAlgebra<F>>();
  alg->field = field;
  alg->vars = vars;
  alg->found_n = N;
  TruncModel<F> model(field, n, N);
  const int lambda = model.dim();
  std::vector<int> basis_coord(lambda);
  for (int c = 0; c < lambda; ++c) basis_coord[c] = c;
  std::sort(basis_coord.begin(), basis_coord.end(), [&](int a, int b) {
    const Monomial &ma = model.coords()[a], &mb = model.coords()[b];
    if (ma.degree() != mb.degree()) return ma.degree() < mb.degree();
    return ma > mb;
  });
  for (int c : basis_coord) alg->basis.push_back(model.coords()[c]);
  alg->unit_index = 0;
  std::map<Monomial, int> basis_index;
  for (int j = 0; j < lambda; ++j) basis_index.emplace(alg->basis[j], j);
  auto index_of = [&](const Monomial& m) {
    auto it = basis_index.find(m);
    return it == basis_index.end() ? -1 : it->second;
  };
  for (int i = 0; i < n; ++i) {
    Matrix<F> act(field, lambda, lambda);
    for (int j = 0; j < lambda; ++j) {
      const int t = index_of(alg->basis[j].times_variable(i));
      if (t >= 0) act.at(t, j) = field.one();
    }
    alg->gen_action.push_back(std::move(act));
  }
  alg->table.assign(lambda, Matrix<F>(field, lambda, lambda));
  for (int j = 0; j < lambda; ++j)
    for (int c = 0; c < lambda; ++c) {
      const int t = index_of(alg->basis[j].times(alg->basis[c]));
      if (t >= 0) alg->table[j].at(t, c) = field.one();
    }
  alg->reduction = ReductionContext<F>{std::move(model),
                                       Subspace<F>::zero(field, lambda),
                                       std::move(basis_coord)};
  return alg;
}

// ---- ideal arithmetic ----

template <class F>
IdealRep<F> ideal_from_space(AlgebraPtr<F> alg, Subspace<F> space) {
  return IdealRep<F>{std::move(alg), std::move(space)};
}

template <class F>
bool is_action_closed(const ArtinAlgebra<F>& alg, const Subspace<F>& s) {
  for (int i = 0; i < alg.ngens(); ++i)
    for (int r = 0; r < s.dim(); ++r)
      if (!s.contains(mat_vec(alg.gen_action[i], s.basis_row(r)))) return false;
  return true;
}

// Smallest action-closed subspace containing the given vectors.
template <class F>
IdealRep<F> ideal_span(AlgebraPtr<F> alg, const std::vector<Vec<F>>& gens) {
  Subspace<F> s = Subspace<F>::zero(alg->field, alg->length());
  std::vector<Vec<F>> work;
  for (const auto& v : gens)
    if (s.insert(v)) work.push_back(v);
  while (!work.empty()) {
    Vec<F> v = std::move(work.back());
    work.pop_back();
    for (int i = 0; i < alg->ngens(); ++i) {
      Vec<F> w = mat_vec(alg->gen_action[i], v);
      if (s.insert(w)) work.push_back(std::move(w));
    }
  }
  return ideal_from_space(alg, std::move(s));
}

template <class F>
IdealRep<F> ideal_span_polys(AlgebraPtr<F> alg,
                             const std::vector<Polynomial<F>>& gens) {
  std::vector<Vec<F>> vecs;
  for (const auto& g : gens) vecs.push_back(alg->reduce_polynomial(g));
  return ideal_span(alg, vecs);
}

template <class F>
IdealRep<F> zero_ideal(AlgebraPtr<F> alg) {
  return ideal_from_space(alg, Subspace<F>::zero(alg->field, alg->length()));
}

template <class F>
IdealRep<F> unit_ideal(AlgebraPtr<F> alg) {
  return ideal_from_space(alg, Subspace<F>::full(alg->field, alg->length()));
}

template <class F>
IdealRep<F> maximal_ideal(AlgebraPtr<F> alg) {
  std::vector<Vec<F>> gens;
  for (int i = 0; i < alg->ngens(); ++i)
    gens.push_back(mat_vec(alg->gen_action[i], alg->unit_vec()));
  return ideal_span(alg, gens);
}

// (a :_R b) = {x : x b <= a}; the annihilator is the a = 0 case.
template <class F>
IdealRep<F> colon_ideal(AlgebraPtr<F> alg, const IdealRep<F>& a,
                        const IdealRep<F>& b) {
  const F& k = alg->field;
  const int lambda = alg->length();
  if (b.space.dim() == 0) return unit_ideal(alg);
  Matrix<F> residual = a.space.residual_matrix();
  Matrix<F> stacked(k, 0, lambda);
  for (int r = 0; r < b.space.dim(); ++r) {
    Matrix<F> cond = mul(residual, alg->mult_matrix(b.space.basis_row(r)));
    stacked = stacked.rows() == 0 ? cond : vstack(stacked, cond);
  }
  return ideal_from_space(alg, kernel_space(stacked));
}

template <class F>
IdealRep<F> annihilator(AlgebraPtr<F> alg, const IdealRep<F>& b) {
  return colon_ideal(alg, zero_ideal(alg), b);
}

// socle = (0 :_R m), the common kernel of the generator actions
template <class F>
IdealRep<F> socle(AlgebraPtr<F> alg) {
  const F& k = alg->field;
  Matrix<F> stacked(k, 0, alg->length());
  for (int i = 0; i < alg->ngens(); ++i)
    stacked = stacked.rows() == 0 ? alg->gen_action[i]
                                  : vstack(stacked, alg->gen_action[i]);
  if (stacked.rows() == 0) return unit_ideal(alg);
  return ideal_from_space(alg, kernel_space(stacked));
}

// product ideal a*b, spanned by pairwise products of basis vectors
template <class F>
IdealRep<F> product_ideal(AlgebraPtr<F> alg, const IdealRep<F>& a,
                          const IdealRep<F>& b) {
  std::vector<Vec<F>> prods;
  for (int i = 0; i < a.space.dim(); ++i)
    for (int j = 0; j < b.space.dim(); ++j)
      prods.push_back(alg->mult(a.space.basis_row(i), b.space.basis_row(j)));
  return ideal_from_space(
      alg, Subspace<F>::from_vectors(alg->field, alg->length(), prods));
}

// h(i) = dim m^i / m^(i+1)
template <class F>
std::vector<int> hilbert_function(AlgebraPtr<F> alg) {
  std::vector<int> h;
  Subspace<F> power = Subspace<F>::full(alg->field, alg->length());
  while (power.dim() > 0) {
    std::vector<Vec<F>> next;
    for (int i = 0; i < alg->ngens(); ++i)
      for (int r = 0; r < power.dim(); ++r)
        next.push_back(mat_vec(alg->gen_action[i], power.basis_row(r)));
    Subspace<F> np = Subspace<F>::from_vectors(alg->field, alg->length(), next);
    h.push_back(power.dim() - np.dim());
    power = std::move(np);
  }
  return h;
}

// Minimal generators of an action-closed subspace: a lift of a basis of
// C/mC, extracted greedily in basis order (deterministic).
template <class F>
std::vector<Vec<F>> minimal_generator_vectors(const ArtinAlgebra<F>& alg,
                                              const Subspace<F>& c) {
  Subspace<F> picked = Subspace<F>::zero(alg.field, alg.length());
  for (int i = 0; i < c.dim(); ++i)
    for (int g = 0; g < alg.ngens(); ++g)
      picked.insert(mat_vec(alg.gen_action[g], c.basis_row(i)));
  std::vector<Vec<F>> gens;
  for (int i = 0; i < c.dim(); ++i) {
    Vec<F> row = c.basis_row(i);
    if (picked.insert(row)) gens.push_back(std::move(row));
  }
  return gens;
}

template <class F>
std::vector<Polynomial<F>> minimal_generator_polys(const ArtinAlgebra<F>& alg,
                                                   const Subspace<F>& c) {
  std::vector<Polynomial<F>> out;
  for (const auto& v : minimal_generator_vectors(alg, c))
    out.push_back(alg.element_poly(v));
  return out;
}

template <class F>
int socle_dim(AlgebraPtr<F> alg) {
  return socle(alg).space.dim();
}

template <class F>
bool is_gorenstein(AlgebraPtr<F> alg) {
  return socle_dim(alg) == 1;
}

template <class F>
int embedding_dim(AlgebraPtr<F> alg) {
  auto h = hilbert_function(alg);
  return h.size() > 1 ? h[1] : 0;
}

}  // namespace gorcol
