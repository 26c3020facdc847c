#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "gorcol/errors.hpp"

namespace gorcol {

// Coefficient fields. All algorithms are templated over a field type F
// providing:
//
//   using Elem = ...;                 value type, regular and comparable
//   long characteristic() const;     0 for Q, p for F_p
//   Elem zero()/one()/from_long()/from_decimal() const;
//   add/sub/mul/div/neg/inv, is_zero/is_one/eq
//   std::string str(Elem) const;
//
// Field objects are tiny values and are copied freely into matrices and
// algebras. Arithmetic is exact; division by zero throws.

// The rational numbers. Elements are arbitrary-precision fractions kept in
// lowest terms by GMP.
struct RationalField {
  using Elem = mpq_class;

  long characteristic() const { return 0; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_long(long v) const { return Elem(v); }
  Elem from_decimal(const std::string& digits) const {
    return Elem(mpz_class(digits, 10));
  }

  Elem add(const Elem& a, const Elem& b) const { return Elem(a + b); }
  Elem sub(const Elem& a, const Elem& b) const { return Elem(a - b); }
  Elem mul(const Elem& a, const Elem& b) const { return Elem(a * b); }
  Elem neg(const Elem& a) const { return Elem(-a); }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw InternalError("division by zero in Q");
    return Elem(1 / a);
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  std::string str(const Elem& a) const { return a.get_str(); }

  bool operator==(const RationalField&) const { return true; }
};

// The prime field F_p for a prime p < 2^31 (so products fit in int64
// without overflow). Elements are canonical representatives in [0, p).
struct PrimeField {
  using Elem = std::int64_t;

  std::int64_t p = 0;

  PrimeField() = default;
  explicit PrimeField(std::int64_t prime) : p(prime) {
    if (p < 2 || p >= (std::int64_t(1) << 31) || !probe_prime(p))
      throw InputError("field modulus must be a prime below 2^31, got " +
                       std::to_string(prime));
  }

  long characteristic() const { return static_cast<long>(p); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_long(long v) const {
    Elem r = static_cast<Elem>(v) % p;
    return r < 0 ? r + p : r;
  }
  Elem from_decimal(const std::string& digits) const {
    Elem r = 0;
    for (char c : digits) r = (r * 10 + (c - '0')) % p;
    return r;
  }

  Elem add(Elem a, Elem b) const {
    Elem r = a + b;
    return r >= p ? r - p : r;
  }
  Elem sub(Elem a, Elem b) const {
    Elem r = a - b;
    return r < 0 ? r + p : r;
  }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw InternalError("division by zero in F_p");
    // extended Euclid; p prime so every nonzero a is invertible
    Elem t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
      Elem q = r / new_r;
      Elem tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return t < 0 ? t + p : t;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool eq(Elem a, Elem b) const { return a == b; }

  std::string str(Elem a) const { return std::to_string(a); }

  bool operator==(const PrimeField& o) const { return p == o.p; }

  static bool probe_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }
};

}  // namespace gorcol
