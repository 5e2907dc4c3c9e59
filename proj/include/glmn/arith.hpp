#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace glmn {

/// Coefficient field of the whole computation: F_p for an odd prime p, or
/// the rationals when p == 0.  The exponent r only matters where a Frobenius
/// level q = p^r is needed; coefficients always live in F_p itself.
struct FieldConfig {
  long p = 0;  // 0 = rationals, otherwise a prime >= 3
  int r = 1;

  long q() const;
  void validate() const;
};

bool is_prime(long n);

/// Smallest prime p with q = p^r; throws if q is not a prime power or p = 2.
long prime_radical(long q);

/// Exact field element.  In characteristic p the value is kept as a long in
/// [0,p); in characteristic 0 it is an arbitrary-precision rational in lowest
/// terms with positive denominator (gmp keeps that canonical form).
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar make(long p, long value);
  static Scalar make(long p, const mpz_class& value);
  static Scalar rational(mpq_class value);
  static Scalar zero(long p) { return make(p, 0L); }
  static Scalar one(long p) { return make(p, 1L); }

  long characteristic() const { return p_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Payload accessors; fp() is only meaningful when characteristic() > 0.
  long fp() const { return f_; }
  const mpq_class& rat() const { return q_; }

  std::string str() const;

 private:
  long p_ = 0;
  long f_ = 0;
  mpq_class q_ = 0;

  void check_same_field(const Scalar& o) const;
};

/// Generalized binomial coefficient with integer top.  Negative tops follow
/// the reflection identity binom(b,a) = (-1)^a binom(a-b-1,a).
mpz_class binom_int(long b, unsigned long a);

/// binom(b,a) mod p by Lucas' factorization; b is first reduced to its
/// representative in [0,p^r) for r large enough that a < p^r, which leaves
/// the residue unchanged.
Scalar binom_mod_p(long b, unsigned long a, long p);

/// h_t^(q)(x) = sum_{t<=k<=q-1} (-1)^(k-t) binom(k,t) binom(x,k), in F_p.
/// Kept permanently as the independent oracle for h_closed.
Scalar h_sum(long t, long q, long x);

/// Closed form: 1 if x == t (mod q), else 0.
Scalar h_closed(long t, long q, long x);

/// Product of h_closed over the coordinates: the indicator of the
/// componentwise congruence class of alpha modulo q.
Scalar h_weight(const std::vector<long>& alpha, long q,
                const std::vector<long>& mu);

}  // namespace glmn
