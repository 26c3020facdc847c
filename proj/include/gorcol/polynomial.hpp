#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "gorcol/field.hpp"
#include "gorcol/monomial.hpp"

namespace gorcol {

// Polynomial with exact coefficients, stored as a term sequence sorted in
// descending graded-lex order with no zero coefficients. The sorted
// representation gives deterministic iteration and canonical printing.
template <class F>
class Polynomial {
 public:
  using Elem = typename F::Elem;

  struct Term {
    Monomial mono;
    Elem coeff;
  };

  Polynomial(F field, int nvars) : field_(field), nvars_(nvars) {}

  static Polynomial zero(F field, int nvars) { return Polynomial(field, nvars); }

  static Polynomial constant(F field, int nvars, const Elem& c) {
    Polynomial p(field, nvars);
    if (!field.is_zero(c)) p.terms_.push_back({Monomial(nvars), c});
    return p;
  }

  static Polynomial monomial(F field, Monomial m, const Elem& c) {
    Polynomial p(field, m.nvars());
    if (!field.is_zero(c)) p.terms_.push_back({std::move(m), c});
    return p;
  }

  static Polynomial variable(F field, int nvars, int i) {
    return monomial(field, Monomial::variable(nvars, i), field.one());
  }

  static Polynomial from_term_map(F field, int nvars,
                                  const std::map<Monomial, Elem>& m) {
    Polynomial p(field, nvars);
    for (auto it = m.rbegin(); it != m.rend(); ++it)
      if (!field.is_zero(it->second)) p.terms_.push_back({it->first, it->second});
    return p;
  }

  const F& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // total degree, -1 for the zero polynomial
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

  // order (degree of the lowest term); INT_MAX for the zero polynomial so
  // that "p lies in m^k" is the single test min_degree() >= k
  int min_degree() const {
    return terms_.empty() ? std::numeric_limits<int>::max()
                          : terms_.back().mono.degree();
  }

  Elem constant_coeff() const {
    if (!terms_.empty() && terms_.back().mono.is_unit()) return terms_.back().coeff;
    return field_.zero();
  }

  Polynomial truncated(int bound) const {
    Polynomial p(field_, nvars_);
    for (const auto& t : terms_)
      if (t.mono.degree() < bound) p.terms_.push_back(t);
    return p;
  }

  std::string str(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
      Elem c = t.coeff;
      bool negative = false;
      if constexpr (std::is_same_v<F, RationalField>) {
        if (sgn(c) < 0) {
          negative = true;
          c = -c;
        }
      }
      if (first) {
        if (negative) s += "-";
        first = false;
      } else {
        s += negative ? " - " : " + ";
      }
      const std::string cs = field_.str(c);
      if (t.mono.is_unit()) {
        s += cs;
      } else if (cs == "1") {
        s += t.mono.str(vars);
      } else {
        s += cs + "*" + t.mono.str(vars);
      }
    }
    return s;
  }

 private:
  F field_;
  int nvars_;
  std::vector<Term> terms_;
};

template <class F>
Polynomial<F> add(const Polynomial<F>& p, const Polynomial<F>& q) {
  const F& k = p.field();
  std::map<Monomial, typename F::Elem> acc;
  for (const auto& t : p.terms()) acc[t.mono] = t.coeff;
  for (const auto& t : q.terms()) {
    auto [it, fresh] = acc.emplace(t.mono, t.coeff);
    if (!fresh) it->second = k.add(it->second, t.coeff);
  }
  return Polynomial<F>::from_term_map(k, p.nvars(), acc);
}

template <class F>
Polynomial<F> neg(const Polynomial<F>& p) {
  const F& k = p.field();
  std::map<Monomial, typename F::Elem> acc;
  for (const auto& t : p.terms()) acc[t.mono] = k.neg(t.coeff);
  return Polynomial<F>::from_term_map(k, p.nvars(), acc);
}

template <class F>
Polynomial<F> sub(const Polynomial<F>& p, const Polynomial<F>& q) {
  return add(p, neg(q));
}

template <class F>
Polynomial<F> scale(const Polynomial<F>& p, const typename F::Elem& c) {
  const F& k = p.field();
  std::map<Monomial, typename F::Elem> acc;
  if (!k.is_zero(c))
    for (const auto& t : p.terms()) acc[t.mono] = k.mul(c, t.coeff);
  return Polynomial<F>::from_term_map(k, p.nvars(), acc);
}

// p*q with every term of total degree >= bound discarded. Products of
// terms that can only land at or above the bound are skipped outright.
template <class F>
Polynomial<F> multiply_truncate(const Polynomial<F>& p, const Polynomial<F>& q,
                                int bound) {
  if (p.nvars() != q.nvars()) throw Error("variable count mismatch in multiply");
  const F& k = p.field();
  std::map<Monomial, typename F::Elem> acc;
  for (const auto& s : p.terms()) {
    if (s.mono.degree() >= bound) continue;
    for (const auto& t : q.terms()) {
      if (s.mono.degree() + t.mono.degree() >= bound) continue;
      Monomial m = s.mono.times(t.mono);
      auto c = k.mul(s.coeff, t.coeff);
      auto [it, fresh] = acc.emplace(std::move(m), c);
      if (!fresh) it->second = k.add(it->second, c);
    }
  }
  return Polynomial<F>::from_term_map(k, p.nvars(), acc);
}

template <class F>
Polynomial<F> mul(const Polynomial<F>& p, const Polynomial<F>& q) {
  const int bound = (p.is_zero() || q.is_zero()) ? 1 : p.degree() + q.degree() + 1;
  return multiply_truncate(p, q, bound);
}

template <class F>
Polynomial<F> pow(const Polynomial<F>& p, int e) {
  Polynomial<F> r = Polynomial<F>::constant(p.field(), p.nvars(), p.field().one());
  for (int i = 0; i < e; ++i) r = mul(r, p);
  return r;
}

template <class F>
bool eq(const Polynomial<F>& p, const Polynomial<F>& q) {
  if (p.nvars() != q.nvars() || p.terms().size() != q.terms().size()) return false;
  const F& k = p.field();
  for (std::size_t i = 0; i < p.terms().size(); ++i) {
    if (!(p.terms()[i].mono == q.terms()[i].mono)) return false;
    if (!k.eq(p.terms()[i].coeff, q.terms()[i].coeff)) return false;
  }
  return true;
}

}  // namespace gorcol
