#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "gorcol/errors.hpp"

namespace gorcol {

// Monomial in a fixed number of variables, ordered by graded lex: total
// degree first, then the exponent vectors lexicographically (so with
// variables x > y > z, in degree two x^2 > xy > xz > y^2 > yz > z^2).
class Monomial {
 public:
  explicit Monomial(int nvars) : exp_(nvars, 0), degree_(0) {}
  explicit Monomial(std::vector<int> exps)
      : exp_(std::move(exps)),
        degree_(std::accumulate(exp_.begin(), exp_.end(), 0)) {}

  static Monomial variable(int nvars, int i, int power = 1) {
    std::vector<int> e(nvars, 0);
    e[i] = power;
    return Monomial(std::move(e));
  }

  int nvars() const { return static_cast<int>(exp_.size()); }
  int degree() const { return degree_; }
  int exponent(int i) const { return exp_[i]; }
  const std::vector<int>& exponents() const { return exp_; }
  bool is_unit() const { return degree_ == 0; }

  Monomial times_variable(int i) const {
    Monomial m = *this;
    ++m.exp_[i];
    ++m.degree_;
    return m;
  }

  Monomial times(const Monomial& o) const {
    Monomial m = *this;
    for (int i = 0; i < nvars(); ++i) m.exp_[i] += o.exp_[i];
    m.degree_ += o.degree_;
    return m;
  }

  // First variable with positive exponent, -1 for the unit monomial.
  int first_variable() const {
    for (int i = 0; i < nvars(); ++i)
      if (exp_[i] > 0) return i;
    return -1;
  }

  Monomial divided_by_variable(int i) const {
    internal_check(exp_[i] > 0, "monomial not divisible by variable");
    Monomial m = *this;
    --m.exp_[i];
    --m.degree_;
    return m;
  }

  std::strong_ordering operator<=>(const Monomial& o) const {
    if (auto c = degree_ <=> o.degree_; c != 0) return c;
    return std::lexicographical_compare_three_way(exp_.begin(), exp_.end(),
                                                  o.exp_.begin(), o.exp_.end());
  }
  bool operator==(const Monomial& o) const { return exp_ == o.exp_; }

  std::string str(const std::vector<std::string>& vars) const {
    if (is_unit()) return "1";
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
      if (exp_[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += vars[i];
      if (exp_[i] > 1) s += "^" + std::to_string(exp_[i]);
    }
    return s;
  }

 private:
  std::vector<int> exp_;
  int degree_;
};

namespace detail {
inline void collect_of_degree(int nvars, int var, int remaining,
                              std::vector<int>& current,
                              std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    current[var] = remaining;
    out.push_back(Monomial(current));
    current[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[var] = e;
    collect_of_degree(nvars, var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}
}  // namespace detail

// All monomials of the given total degree, in descending graded-lex order.
inline std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  std::vector<int> current(nvars, 0);
  detail::collect_of_degree(nvars, 0, degree, current, out);
  return out;
}

// All monomials of degree < bound, in descending graded-lex order.
inline std::vector<Monomial> monomials_below(int nvars, int bound) {
  std::vector<Monomial> out;
  for (int d = bound - 1; d >= 0; --d) {
    auto layer = monomials_of_degree(nvars, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace gorcol
