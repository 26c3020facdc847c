#pragma once

#include <string>
#include <vector>

#include "gorcol/artin.hpp"

namespace gorcol::testing {

template <class F>
Presentation<F> presentation(const F& field, const std::vector<std::string>& vars,
                             const std::vector<std::string>& gens, int max_n = 50) {
  Presentation<F> p{field, vars, {}, max_n};
  for (const auto& g : gens) p.gens.push_back(parse_polynomial(field, g, vars));
  return p;
}

template <class F>
AlgebraPtr<F> algebra(const F& field, const std::vector<std::string>& vars,
                      const std::vector<std::string>& gens, int max_n = 50) {
  return build_algebra(presentation(field, vars, gens, max_n));
}

// Staircase (monomial) Artinian quotients of k[x,y]: one per partition.
// The partition (p_1 >= p_2 >= ... >= p_r) carves the standard monomials
// { x^i y^j : i < r, j < p_{i+1} }, so lambda = |partition|.
inline std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// Minimal monomial generators of the staircase ideal for a partition.
inline std::vector<std::string> staircase_gens(const std::vector<int>& partition) {
  const int r = static_cast<int>(partition.size());
  std::vector<std::string> gens;
  auto mono = [](int i, int j) {
    std::string s;
    if (i > 0) s += "x^" + std::to_string(i);
    if (j > 0) {
      if (!s.empty()) s += "*";
      s += "y^" + std::to_string(j);
    }
    return s.empty() ? std::string("1") : s;
  };
  gens.push_back(mono(r, 0));  // x^r
  // x^i y^{p_i} is a corner iff column i is strictly shorter than column i-1
  for (int i = 0; i < r; ++i)
    if (i == 0 || partition[i] < partition[i - 1])
      gens.push_back(mono(i, partition[i]));
  return gens;
}

// All monomial quotients of k[x,y] with length up to the bound.
template <class F>
std::vector<AlgebraPtr<F>> staircase_corpus(const F& field, int max_length) {
  std::vector<AlgebraPtr<F>> out;
  for (int n = 1; n <= max_length; ++n)
    for (const auto& part : partitions_of(n))
      out.push_back(algebra(field, {"x", "y"}, staircase_gens(part)));
  return out;
}

}  // namespace gorcol::testing
