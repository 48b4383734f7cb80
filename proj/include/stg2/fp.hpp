#pragma once

// Prime-field arithmetic: primality and sieving, quadratic characters of
// F_p and F_{p^2}, and Barrett-reduced multiplication for the hot loops.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace stg2 {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull, 7ull}) {
    if (n % d == 0) return n == d;
  }
  for (u64 d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<u32> primes_in_range(u32 lo, u32 hi) {
  std::vector<u32> out;
  if (hi < 2) return out;
  std::vector<bool> composite(hi + 1, false);
  for (u32 d = 2; u64(d) * d <= hi; ++d) {
    if (composite[d]) continue;
    for (u64 m = u64(d) * d; m <= hi; m += d) composite[m] = true;
  }
  for (u32 n = std::max(lo, 2u); n <= hi; ++n) {
    if (!composite[n]) out.push_back(n);
  }
  return out;
}

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return u64((__uint128_t(a) * b) % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 acc = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) acc = mulmod(acc, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

// Legendre symbol (a/p) for odd prime p, via Euler's criterion.
inline int legendre(i64 a, u64 p) {
  const i64 r = a % i64(p);
  const u64 am = u64(r < 0 ? r + i64(p) : r);
  if (am == 0) return 0;
  return powmod(am, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// chi[x] = Legendre symbol (x/p), tabulated in O(p) by marking squares.
inline std::vector<signed char> chi_table(u32 p) {
  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (u64 x = 1; x <= u64(p - 1) / 2; ++x) chi[x * x % p] = 1;
  return chi;
}

inline u32 least_nonresidue(u32 p) {
  for (u32 r = 2; r < p; ++r) {
    if (legendre(r, p) == -1) return r;
  }
  throw std::logic_error("no quadratic nonresidue found");
}

// Barrett reduction of 64-bit values modulo a fixed modulus m >= 2; valid
// for x < 2^64 / m * m (all uses here keep x below m^3 with m < 2^21).
struct Barrett {
  u64 m = 1;
  u64 inv = 0;

  explicit Barrett(u64 modulus = 1) : m(modulus) {
    inv = modulus > 1 ? u64((__uint128_t(1) << 64) / modulus) : 0;
  }

  u64 reduce(u64 x) const {
    const u64 q = u64((__uint128_t(x) * inv) >> 64);
    u64 r = x - q * m;
    if (r >= m) r -= m;
    return r;
  }
};

// F_{p^2} = F_p(w), w^2 = r with r the least quadratic nonresidue mod p.
// Elements are pairs (a, b) <-> a + b*w with 0 <= a, b < p.
class Fp2 {
 public:
  struct Elt {
    u32 a = 0;
    u32 b = 0;
    bool operator==(const Elt&) const = default;
  };

  explicit Fp2(u32 p) : p_(p), r_(least_nonresidue(p)), bar_(p) {}

  u32 p() const { return p_; }
  u32 nonresidue() const { return r_; }
  u64 order() const { return u64(p_) * p_; }

  Elt make(u64 a, u64 b = 0) const { return {u32(a % p_), u32(b % p_)}; }

  // Enumeration index <-> element, for exhaustive loops in tests.
  Elt from_index(u64 idx) const { return {u32(idx % p_), u32(idx / p_)}; }

  Elt add(Elt x, Elt y) const {
    u32 a = x.a + y.a;
    if (a >= p_) a -= p_;
    u32 b = x.b + y.b;
    if (b >= p_) b -= p_;
    return {a, b};
  }

  Elt mul(Elt x, Elt y) const {
    // (a + bw)(c + dw) = ac + r*bd + (ad + bc) w.
    const u64 re = u64(x.a) * y.a + bar_.reduce(u64(x.b) * y.b) * r_;
    const u64 im = u64(x.a) * y.b + u64(x.b) * y.a;
    return {u32(bar_.reduce(re)), u32(bar_.reduce(im))};
  }

  Elt pow(Elt x, u64 e) const {
    Elt acc = make(1);
    while (e) {
      if (e & 1) acc = mul(acc, x);
      x = mul(x, x);
      e >>= 1;
    }
    return acc;
  }

  // Norm to F_p: N(a + bw) = a^2 - r*b^2.
  u32 norm(Elt x) const {
    return u32(bar_.reduce(u64(x.a) * x.a + (u64(p_) - r_) * bar_.reduce(u64(x.b) * x.b)));
  }

  // Quadratic character of F_{p^2}, computed through the norm: an element
  // is a square in F_{p^2} iff its norm is a square in F_p.
  int chi(Elt x) const {
    if (x.a == 0 && x.b == 0) return 0;
    return legendre(norm(x), p_);
  }

 private:
  u32 p_;
  u32 r_;
  Barrett bar_;
};

}  // namespace stg2
