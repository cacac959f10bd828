#ifndef AUED_GF_HPP
#define AUED_GF_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "aued/word.hpp"

namespace aued {

// Arithmetic tables for GF(q), q = p^d a prime power <= 256. Elements are
// encoded as integers 0..q-1 read as base-p digit vectors of polynomial
// coefficients, so field elements double as code symbols directly.
//
// For d > 1 the modulus is the first monic irreducible polynomial of degree d
// in increasing order of its coefficient encoding (sum c_i p^i), which makes
// construction deterministic. Every table is checked against the field axioms
// exhaustively before use.
class FieldTable {
 public:
  static FieldTable make(int q);

  int q() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return d_; }
  // Integer encoding of the monic modulus (sum c_i p^i plus the leading p^d);
  // equals 0 for prime fields.
  long long modulus() const { return modulus_; }

  int add(int x, int y) const { return add_[idx(x, y)]; }
  int mul(int x, int y) const { return mul_[idx(x, y)]; }
  int neg(int x) const { return neg_[check(x)]; }
  int sub(int x, int y) const { return add(x, neg(y)); }

  int inv(int x) const {
    check(x);
    if (x == 0) throw std::domain_error("zero has no multiplicative inverse");
    return inv_[x];
  }

  int pow(int x, long long e) const {
    check(x);
    int r = 1, base = x;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

 private:
  FieldTable() = default;

  std::size_t idx(int x, int y) const {
    check(x);
    check(y);
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(q_) +
           static_cast<std::size_t>(y);
  }
  int check(int x) const {
    if (x < 0 || x >= q_) throw std::invalid_argument("field element out of range");
    return x;
  }

  void build_tables();
  void verify_axioms() const;

  int q_ = 0, p_ = 0, d_ = 0;
  long long modulus_ = 0;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

namespace gfdetail {

struct PrimePower {
  int p = 0, d = 0;
};

// q = p^d with p prime, or p == 0 when q is not a prime power.
inline PrimePower factor_prime_power(int q) {
  for (int p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    int rest = q, d = 0;
    while (rest % p == 0) {
      rest /= p;
      ++d;
    }
    if (rest == 1) return {p, d};
    return {0, 0};
  }
  return {0, 0};
}

// Polynomials over GF(p) encoded as integers, digit i = coefficient of x^i.
inline int poly_degree(long long poly, int p) {
  int deg = -1;
  for (int i = 0; poly > 0; ++i, poly /= p)
    if (poly % p != 0) deg = i;
  return deg;
}

inline int poly_coeff(long long poly, int p, int i) {
  for (int k = 0; k < i; ++k) poly /= p;
  return static_cast<int>(poly % p);
}

inline long long poly_scale_shift(long long poly, int p, int c, int shift) {
  // c * x^shift * poly, coefficients reduced mod p
  long long out = 0, place = 1;
  for (int i = 0; i < shift; ++i) place *= p;
  while (poly > 0) {
    out += place * ((poly % p) * c % p);
    poly /= p;
    place *= p;
  }
  return out;
}

inline long long poly_sub(long long a, long long b, int p) {
  long long out = 0, place = 1;
  while (a > 0 || b > 0) {
    int digit = static_cast<int>((a % p - b % p + p) % p);
    out += place * digit;
    a /= p;
    b /= p;
    place *= p;
  }
  return out;
}

// Remainder of a by monic m, coefficients over GF(p).
inline long long poly_mod(long long a, long long m, int p) {
  const int dm = poly_degree(m, p);
  int da = poly_degree(a, p);
  while (da >= dm) {
    int c = poly_coeff(a, p, da);
    a = poly_sub(a, poly_scale_shift(m, p, c, da - dm), p);
    da = poly_degree(a, p);
  }
  return a;
}

inline long long poly_mul(long long a, long long b, int p) {
  long long out = 0;
  for (int i = 0; b > 0; ++i, b /= p) {
    int c = static_cast<int>(b % p);
    if (c == 0) continue;
    long long term = poly_scale_shift(a, p, c, i);
    // digitwise addition mod p
    long long sum = 0, place = 1, x = out, y = term;
    while (x > 0 || y > 0) {
      sum += place * ((x % p + y % p) % p);
      x /= p;
      y /= p;
      place *= p;
    }
    out = sum;
  }
  return out;
}

// Trial division by every monic polynomial of degree 1..d/2.
inline bool poly_irreducible(long long m, int p) {
  const int d = poly_degree(m, p);
  if (d < 1) return false;
  for (int deg = 1; deg <= d / 2; ++deg) {
    long long lead = 1;
    for (int i = 0; i < deg; ++i) lead *= p;
    for (long long low = 0; low < lead; ++low)
      if (poly_mod(m, lead + low, p) == 0) return false;
  }
  return true;
}

}  // namespace gfdetail

inline FieldTable FieldTable::make(int q) {
  if (q < 2 || q > kMaxAlphabet)
    throw std::invalid_argument("field order must be in [2, 256], got " + std::to_string(q));
  auto pp = gfdetail::factor_prime_power(q);
  if (pp.p == 0)
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");

  FieldTable f;
  f.q_ = q;
  f.p_ = pp.p;
  f.d_ = pp.d;
  if (f.d_ > 1) {
    long long lead = 1;
    for (int i = 0; i < f.d_; ++i) lead *= f.p_;
    for (long long low = 0; low < lead; ++low) {
      if (gfdetail::poly_irreducible(lead + low, f.p_)) {
        f.modulus_ = lead + low;
        break;
      }
    }
    if (f.modulus_ == 0) throw std::logic_error("no irreducible modulus found");
  }
  f.build_tables();
  f.verify_axioms();
  return f;
}

inline void FieldTable::build_tables() {
  const auto n = static_cast<std::size_t>(q_);
  add_.assign(n * n, 0);
  mul_.assign(n * n, 0);
  neg_.assign(n, 0);
  inv_.assign(n, 0);

  for (int x = 0; x < q_; ++x) {
    for (int y = 0; y < q_; ++y) {
      long long sum = 0, place = 1, a = x, b = y;
      for (int i = 0; i < d_; ++i) {
        sum += place * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        place *= p_;
      }
      add_[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] =
          static_cast<std::uint8_t>(sum);

      long long prod =
          d_ == 1 ? static_cast<long long>(x) * y % p_
                  : gfdetail::poly_mod(gfdetail::poly_mul(x, y, p_), modulus_, p_);
      mul_[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] =
          static_cast<std::uint8_t>(prod);
    }
  }
  for (int x = 0; x < q_; ++x) {
    long long out = 0, place = 1, a = x;
    for (int i = 0; i < d_; ++i) {
      out += place * ((p_ - a % p_) % p_);
      a /= p_;
      place *= p_;
    }
    neg_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(out);
  }
  for (int x = 1; x < q_; ++x) {
    for (int y = 1; y < q_; ++y) {
      if (mul_[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] == 1) {
        inv_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(y);
        break;
      }
    }
  }
}

inline void FieldTable::verify_axioms() const {
  auto fail = [this](const std::string& what) {
    throw std::logic_error("GF(" + std::to_string(q_) + ") table failed check: " + what);
  };
  const auto n = static_cast<std::size_t>(q_);
  auto A = [&](int x, int y) { return add_[static_cast<std::size_t>(x) * n + y]; };
  auto M = [&](int x, int y) { return mul_[static_cast<std::size_t>(x) * n + y]; };

  for (int x = 0; x < q_; ++x) {
    if (A(x, 0) != x) fail("additive identity");
    if (M(x, 1) != x) fail("multiplicative identity");
    if (A(x, neg_[static_cast<std::size_t>(x)]) != 0) fail("additive inverse");
    if (x != 0 && M(x, inv_[static_cast<std::size_t>(x)]) != 1) fail("multiplicative inverse");
  }
  for (int x = 0; x < q_; ++x) {
    for (int y = 0; y < q_; ++y) {
      if (A(x, y) != A(y, x)) fail("addition commutativity");
      if (M(x, y) != M(y, x)) fail("multiplication commutativity");
      for (int z = 0; z < q_; ++z) {
        if (A(A(x, y), z) != A(x, A(y, z))) fail("addition associativity");
        if (M(M(x, y), z) != M(x, M(y, z))) fail("multiplication associativity");
        if (M(x, A(y, z)) != A(M(x, y), M(x, z))) fail("distributivity");
      }
    }
  }
  // Frobenius: (x + y)^p = x^p + y^p
  for (int x = 0; x < q_; ++x)
    for (int y = 0; y < q_; ++y)
      if (pow(A(x, y), p_) != A(pow(x, p_), pow(y, p_))) fail("Frobenius map");
}

inline bool is_prime_power(int q) {
  return q >= 2 && q <= kMaxAlphabet && gfdetail::factor_prime_power(q).p != 0;
}

}  // namespace aued

#endif  // AUED_GF_HPP
