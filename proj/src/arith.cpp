#include "glmn/arith.hpp"

namespace glmn {

long FieldConfig::q() const {
  long result = 1;
  for (int i = 0; i < r; ++i) result *= p;
  return result;
}

void FieldConfig::validate() const {
  if (p == 0) return;
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("characteristic must be 0 or a prime >= 3");
  if (r < 1) throw std::invalid_argument("Frobenius exponent must be >= 1");
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long prime_radical(long q) {
  if (q < 3) throw std::invalid_argument("q must be a prime power >= 3");
  long p = 0;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;
  long rest = q;
  while (rest % p == 0) rest /= p;
  if (rest != 1) throw std::invalid_argument("q is not a prime power");
  if (p == 2) throw std::invalid_argument("even characteristic not supported");
  return p;
}

Scalar Scalar::make(long p, long value) {
  Scalar s;
  s.p_ = p;
  if (p == 0) {
    s.q_ = value;
  } else {
    s.f_ = value % p;
    if (s.f_ < 0) s.f_ += p;
  }
  return s;
}

Scalar Scalar::make(long p, const mpz_class& value) {
  Scalar s;
  s.p_ = p;
  if (p == 0) {
    s.q_ = value;
  } else {
    mpz_class r = value % p;
    s.f_ = r.get_si();
    if (s.f_ < 0) s.f_ += p;
  }
  return s;
}

Scalar Scalar::rational(mpq_class value) {
  Scalar s;
  s.p_ = 0;
  value.canonicalize();
  s.q_ = std::move(value);
  return s;
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : f_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : f_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = -q_;
  else if (f_ != 0)
    s.f_ = p_ - f_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.p_ = p_;
  if (p_ == 0)
    s.q_ = q_ + o.q_;
  else
    s.f_ = (f_ + o.f_) % p_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.p_ = p_;
  if (p_ == 0)
    s.q_ = q_ * o.q_;
  else
    s.f_ = (f_ * o.f_) % p_;  // p < 2^31, no overflow
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s;
  s.p_ = p_;
  if (p_ == 0) {
    s.q_ = 1 / q_;
    return s;
  }
  // extended Euclid on (f_, p_)
  long a = f_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    long q = a / b;
    long t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  s.f_ = x0 % p_;
  if (s.f_ < 0) s.f_ += p_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  return p_ == o.p_ && (p_ == 0 ? q_ == o.q_ : f_ == o.f_);
}

std::string Scalar::str() const {
  if (p_ == 0) return q_.get_str();
  return std::to_string(f_);
}

mpz_class binom_int(long b, unsigned long a) {
  if (b < 0) {
    // reflection: binom(b,a) = (-1)^a binom(a-b-1, a)
    mpz_class v = binom_int(static_cast<long>(a) - b - 1, a);
    return (a % 2 == 0) ? v : mpz_class(-v);
  }
  if (static_cast<unsigned long>(b) < a) return 0;
  mpz_class res = 1;
  for (unsigned long i = 1; i <= a; ++i) {
    res *= (b - static_cast<long>(i) + 1);
    res /= i;  // exact at every step
  }
  return res;
}

Scalar binom_mod_p(long b, unsigned long a, long p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be a prime >= 3");
  if (a == 0) return Scalar::one(p);
  long q = p;
  while (static_cast<unsigned long>(q) <= a) q *= p;
  long bb = b % q;
  if (bb < 0) bb += q;
  long aa = static_cast<long>(a);
  long result = 1;
  while (aa > 0 || bb > 0) {
    long bd = bb % p, ad = aa % p;
    bb /= p;
    aa /= p;
    if (ad > bd) return Scalar::zero(p);
    result = (result * binom_int(bd, static_cast<unsigned long>(ad)).get_si()) % p;
  }
  return Scalar::make(p, result);
}

Scalar h_sum(long t, long q, long x) {
  long p = prime_radical(q);
  if (t < 0 || t >= q) throw std::invalid_argument("need 0 <= t < q");
  Scalar acc = Scalar::zero(p);
  for (long k = t; k <= q - 1; ++k) {
    Scalar term = binom_mod_p(k, static_cast<unsigned long>(t), p) *
                  binom_mod_p(x, static_cast<unsigned long>(k), p);
    if ((k - t) % 2 != 0) term = -term;
    acc += term;
  }
  return acc;
}

Scalar h_closed(long t, long q, long x) {
  long p = prime_radical(q);
  if (t < 0 || t >= q) throw std::invalid_argument("need 0 <= t < q");
  long d = (x - t) % q;
  return (d == 0) ? Scalar::one(p) : Scalar::zero(p);
}

Scalar h_weight(const std::vector<long>& alpha, long q,
                const std::vector<long>& mu) {
  if (alpha.size() != mu.size())
    throw std::invalid_argument("h_weight: length mismatch");
  long p = prime_radical(q);
  Scalar acc = Scalar::one(p);
  for (size_t i = 0; i < alpha.size(); ++i) acc *= h_closed(alpha[i], q, mu[i]);
  return acc;
}

}  // namespace glmn
