#pragma once

#include <cstdint>
#include <random>

#include "gorcol/field.hpp"

namespace gorcol {

// Deterministic random source. Every randomized search takes an explicit
// seed and derives all its draws from one Rng, so a (seed, trial count)
// pair pins the outcome exactly. Uniform sampling is done by rejection on
// the raw 64-bit stream rather than through std distributions, whose
// output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t u64() { return gen_(); }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % n;
  }

  // uniform in [lo, hi] inclusive
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Random field element: uniform over F_p, a uniform integer in
  // [-10^6, 10^6] over Q.
  template <class F>
  typename F::Elem element(const F& field) {
    if constexpr (std::is_same_v<F, PrimeField>) {
      return static_cast<typename F::Elem>(below(field.p));
    } else {
      return field.from_long(between(-1000000, 1000000));
    }
  }

  template <class F>
  typename F::Elem nonzero_element(const F& field) {
    typename F::Elem e = element(field);
    while (field.is_zero(e)) e = element(field);
    return e;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace gorcol
