#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gorcol/construct.hpp"

namespace gorcol {

// Brute-force bounds at tiny scale. Enumeration refuses anything outside
// these limits rather than degrading silently.
struct EnumConfig {
  int max_length = 8;
  long max_field = 3;
  int max_extra = 3;
  long long enum_cap = 1LL << 20;
};

namespace detail {

inline long long subspace_count(long p, int ambient, long long cap) {
  // Gaussian binomials by the recurrence [n k] = p^k [n-1 k] + [n-1 k-1]
  std::vector<long long> row(ambient + 1, 0);
  row[0] = 1;
  for (int n = 1; n <= ambient; ++n) {
    std::vector<long long> next(ambient + 1, 0);
    next[0] = 1;
    for (int d = 1; d <= n; ++d) {
      long long pk = 1;
      for (int e = 0; e < d; ++e) {
        pk *= p;
        if (pk > cap) break;
      }
      next[d] = pk > cap ? cap + 1 : pk * row[d] + row[d - 1];
      if (next[d] > cap) next[d] = cap + 1;
    }
    row = std::move(next);
  }
  long long total = 0;
  for (long long v : row) {
    total += v;
    if (total > cap) return cap + 1;
  }
  return total;
}

template <class F>
void enumerate_subspaces_of_dim(const F& k, int ambient, int d,
                                const std::function<void(const Matrix<F>&)>& emit) {
  // all RREF matrices with d pivots: choose pivot columns, then run an
  // odometer over the free entries (row i may be nonzero only right of
  // its pivot and outside later pivot columns)
  std::vector<int> piv(d);
  for (int i = 0; i < d; ++i) piv[i] = i;
  const long p = k.characteristic();
  for (;;) {
    std::vector<std::pair<int, int>> free_pos;
    {
      std::vector<bool> is_piv(ambient, false);
      for (int c : piv) is_piv[c] = true;
      for (int i = 0; i < d; ++i)
        for (int c = piv[i] + 1; c < ambient; ++c)
          if (!is_piv[c]) free_pos.emplace_back(i, c);
    }
    Matrix<F> m(k, d, ambient);
    for (int i = 0; i < d; ++i) m.at(i, piv[i]) = k.one();
    std::vector<long> digits(free_pos.size(), 0);
    for (;;) {
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        m.at(free_pos[t].first, free_pos[t].second) = k.from_long(digits[t]);
      emit(m);
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
    // next pivot combination, lexicographic
    int i = d - 1;
    while (i >= 0 && piv[i] == ambient - d + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
  }
}

}  // namespace detail

// All ideals of R (action-closed subspaces), each exactly once in
// canonical form, ordered by dimension and then by canonical basis.
template <class F>
std::vector<IdealRep<F>> enumerate_ideals(const AlgebraPtr<F>& alg,
                                          const EnumConfig& cfg) {
  const F& k = alg->field;
  const long p = k.characteristic();
  if (p == 0 || p > cfg.max_field)
    throw InputError("ideal enumeration needs a prime field with p <= " +
                     std::to_string(cfg.max_field));
  if (alg->length() > cfg.max_length)
    throw InputError("ideal enumeration bounded at lambda <= " +
                     std::to_string(cfg.max_length));
  if (detail::subspace_count(p, alg->length(), cfg.enum_cap) > cfg.enum_cap)
    throw InputError("subspace count exceeds the enumeration cap");

  std::vector<IdealRep<F>> out;
  for (int d = 0; d <= alg->length(); ++d)
    detail::enumerate_subspaces_of_dim<F>(
        k, alg->length(), d, [&](const Matrix<F>& m) {
          Subspace<F> s = Subspace<F>::from_matrix(m);
          if (is_action_closed(*alg, s)) out.push_back(ideal_from_space(alg, s));
        });
  return out;
}

// Exact minimum of lambda(R/a) over certified self-dual ideals. Negative
// verdicts below the minimum must be exhaustive, so the result is a true
// lower bound for g(R) by the self-dual-ideal inequality.
template <class F>
struct MinSelfdualResult {
  int value = 0;
  std::vector<IdealRep<F>> ideals;          // self-dual ideals at the minimum
  std::vector<ModuleMap<F>> witnesses;
};

template <class F>
MinSelfdualResult<F> min_selfdual_colength_exhaustive(const AlgebraPtr<F>& alg,
                                                      const EnumConfig& cfg,
                                                      const SearchConfig& scfg) {
  auto ideals = enumerate_ideals(alg, cfg);
  std::stable_sort(ideals.begin(), ideals.end(),
                   [](const IdealRep<F>& a, const IdealRep<F>& b) {
                     return a.colength() < b.colength();
                   });
  MinSelfdualResult<F> out;
  bool found = false;
  for (const auto& a : ideals) {
    if (found && a.colength() > out.value) break;
    auto res = self_dual_witness(alg, a, scfg);
    if (res.verdict == Certainty::ProbableNo)
      throw InputError("self-duality family too large for exhaustive verdict");
    if (res.verdict == Certainty::CertifiedYes) {
      if (!found) {
        found = true;
        out.value = a.colength();
      }
      out.ideals.push_back(a);
      out.witnesses.push_back(*res.witness);
    }
  }
  internal_check(found, "the zero ideal is always self-dual");
  return out;
}

// Exhaustive minimum excess of a Gorenstein quotient T/c with c <= b,
// searched through principal inverse systems: a Gorenstein c of excess j
// satisfies m^j b <= c <= b, so its dual module is cyclic, generated by a
// functional F in (m^j b)-perp whose span under the transposed action has
// dimension lambda+j and contains b-perp. Every such c is hit by some F.
template <class F>
struct GcolengthResult {
  int excess = 0;
  std::vector<Polynomial<F>> c_gens;
};

template <class F>
std::optional<GcolengthResult<F>> gcolength_upper_exhaustive(
    const Presentation<F>& p, const AlgebraPtr<F>& base, const EnumConfig& cfg) {
  const F& k = p.field;
  const long pr = k.characteristic();
  if (pr == 0 || pr > cfg.max_field)
    throw InputError("cover enumeration needs a prime field with p <= " +
                     std::to_string(cfg.max_field));
  if (base->length() > cfg.max_length)
    throw InputError("cover enumeration bounded at lambda <= " +
                     std::to_string(cfg.max_length));

  if (is_gorenstein(base)) {
    std::vector<Polynomial<F>> gens;
    for (const auto& g : p.gens)
      if (!g.is_zero()) gens.push_back(g);
    return GcolengthResult<F>{0, gens};
  }

  const int n = static_cast<int>(p.vars.size());
  for (int j = 1; j <= cfg.max_extra; ++j) {
    AlgebraPtr<F> w = truncated_power_algebra(k, p.vars, base->found_n + j);
    const int dw = w->length();
    std::vector<Polynomial<F>> mjb_gens;
    for (const auto& mono : monomials_of_degree(n, j))
      for (const auto& g : p.gens)
        if (!g.is_zero())
          mjb_gens.push_back(mul(Polynomial<F>::monomial(k, mono, k.one()), g));
    IdealRep<F> mjb = ideal_span_polys(w, mjb_gens);
    IdealRep<F> b = ideal_span_polys(w, p.gens);
    Subspace<F> x_space = kernel_space(mjb.space.basis());   // (m^j b)-perp
    Subspace<F> b_perp = kernel_space(b.space.basis());
    internal_check(b_perp.dim() == base->length(), "dim b-perp = lambda(R)");

    long long total = 1;
    bool within = true;
    for (int i = 0; i < x_space.dim(); ++i) {
      total *= pr;
      if (total > cfg.enum_cap) {
        within = false;
        break;
      }
    }
    if (!within)
      throw InputError("inverse-system enumeration exceeds the cap at excess " +
                       std::to_string(j));

    std::vector<Matrix<F>> dual_act;
    for (const auto& a : w->gen_action) dual_act.push_back(transpose(a));
    const int target = base->length() + j;

    // projective enumeration: leading coefficient 1, zeros before it
    for (int lead = 0; lead < x_space.dim(); ++lead) {
      const int tail = x_space.dim() - lead - 1;
      std::vector<long> digits(tail, 0);
      for (;;) {
        Vec<F> func = x_space.basis_row(lead);
        for (int t = 0; t < tail; ++t) {
          if (digits[t] != 0) {
            Vec<F> row = x_space.basis_row(lead + 1 + t);
            for (int c = 0; c < dw; ++c)
              func[c] = k.add(func[c], k.mul(k.from_long(digits[t]), row[c]));
          }
        }
        // saturate under the dual action, bailing once too big
        Subspace<F> span = Subspace<F>::zero(k, dw);
        std::vector<Vec<F>> work{func};
        span.insert(func);
        bool too_big = false;
        while (!work.empty() && !too_big) {
          Vec<F> v = std::move(work.back());
          work.pop_back();
          for (const auto& act : dual_act) {
            Vec<F> u = mat_vec(act, v);
            if (span.insert(u)) {
              if (span.dim() > target) {
                too_big = true;
                break;
              }
              work.push_back(std::move(u));
            }
          }
        }
        if (!too_big && span.dim() == target && span.contains(b_perp)) {
          // c = ann(F): kernel of w |-> (c |-> F(w e_c))
          Matrix<F> g(k, dw, dw);
          for (int jb = 0; jb < dw; ++jb) {
            const Matrix<F>& t = w->table[jb];
            for (int c = 0; c < dw; ++c) {
              auto acc = k.zero();
              for (int r = 0; r < dw; ++r)
                acc = k.add(acc, k.mul(func[r], t.at(r, c)));
              g.at(c, jb) = acc;
            }
          }
          Subspace<F> ann = kernel_space(g);
          internal_check(ann.dim() == dw - target, "Macaulay duality dimension");
          internal_check(b.space.contains(ann), "ann(F) <= b");
          auto c_gens = minimal_generator_polys(*w, ann);
          Presentation<F> pc{k, p.vars, c_gens, p.max_n};
          AlgebraPtr<F> cover = build_algebra(pc);
          internal_check(cover->length() == target, "cover length = lambda + j");
          internal_check(is_gorenstein(cover), "principal inverse system is Gorenstein");
          return GcolengthResult<F>{j, c_gens};
        }
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == pr) digits[pos++] = 0;
        if (pos == digits.size()) break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace gorcol
