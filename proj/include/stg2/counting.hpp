#pragma once

// Point counts of y^2 = f(x) over F_p and F_{p^2}, L-polynomial coefficient
// extraction, base change of Frobenius data via Newton's identities, and the
// place-by-place sample list over a real quadratic or biquadratic base.

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stg2/curve.hpp"
#include "stg2/errors.hpp"
#include "stg2/fp.hpp"

namespace stg2 {

struct LPolyCoeffs {
  u64 q = 0;        // p, p^2, or p^4
  i64 a1 = 0;       // e1 of the Frobenius eigenvalues
  i64 a2 = 0;       // e2 of the Frobenius eigenvalues
  bool operator==(const LPolyCoeffs&) const = default;
};

struct NormalizedClass {
  double a1 = 0.0;  // a1 / sqrt(q), in [-4, 4]
  double a2 = 0.0;  // a2 / q, in [-2, 6]
};

inline std::array<u32, 7> coeffs_mod_p(const CurveSpec& curve, u32 p) {
  std::array<u32, 7> cf{};
  for (int k = 0; k < 7; ++k) {
    const i64 r = curve.c[k] % i64(p);
    cf[k] = u32(r < 0 ? r + i64(p) : r);
  }
  return cf;
}

inline void require_good(const CurveSpec& curve, u32 p) {
  if (!is_good_prime(curve, p)) {
    throw ConfigError("curve " + curve.name + ": bad reduction at p=" +
                      std::to_string(p));
  }
}

// Brute-force count over F_p: enumerate all (x, y) pairs, then add the
// points at infinity of the smooth model.
inline u64 count_points_naive_fp(const CurveSpec& curve, u32 p) {
  require_good(curve, p);
  const auto cf = coeffs_mod_p(curve, p);
  u64 affine = 0;
  for (u64 x = 0; x < p; ++x) {
    u64 fx = 0;
    for (int k = 6; k >= 0; --k) fx = (fx * x + cf[k]) % p;
    for (u64 y = 0; y < p; ++y) {
      if (y * y % p == fx) ++affine;
    }
  }
  const i64 inf = curve.degree == 6 ? 1 + legendre(cf[6], p) : 1;
  return affine + u64(inf);
}

// Brute-force count over F_{p^2} via explicit field arithmetic; O(p^4),
// for cross-checking the character-sum count at tiny primes.
inline u64 count_points_naive_fp2(const CurveSpec& curve, u32 p) {
  require_good(curve, p);
  const Fp2 k(p);
  const auto cf = coeffs_mod_p(curve, p);
  u64 affine = 0;
  for (u64 xi = 0; xi < k.order(); ++xi) {
    const auto x = k.from_index(xi);
    auto fx = k.make(0);
    for (int d = 6; d >= 0; --d) fx = k.add(k.mul(fx, x), k.make(cf[d]));
    for (u64 yi = 0; yi < k.order(); ++yi) {
      const auto y = k.from_index(yi);
      if (k.mul(y, y) == fx) ++affine;
    }
  }
  u64 inf = 1;
  if (curve.degree == 6) inf = u64(1 + k.chi(k.make(cf[6])));
  return affine + inf;
}

// Character-sum count over F_p: #C = p + sum_x chi(f(x)) + n_inf.
inline u64 count_points_fp(const CurveSpec& curve, u32 p) {
  require_good(curve, p);
  const auto cf = coeffs_mod_p(curve, p);
  const auto chi = chi_table(p);
  const Barrett bar(p);
  i64 charsum = 0;
  for (u64 x = 0; x < p; ++x) {
    u64 fx = 0;
    for (int k = curve.degree; k >= 0; --k) fx = bar.reduce(fx * x + cf[k]);
    charsum += chi[fx];
  }
  i64 inf = 1;
  if (curve.degree == 6) inf += legendre(cf[6], p);
  return u64(i64(p) + charsum + inf);
}

// Character-sum count over F_{p^2} = F_p(w), w^2 = r. Walks each row
// {u + vw : u in F_p} with a forward-difference table (f has degree <= 6,
// so the 7th difference vanishes), evaluates chi through the norm map, and
// folds conjugate rows v and p-v, which carry identical character values.
inline u64 count_points_fp2(const CurveSpec& curve, u32 p) {
  require_good(curve, p);
  const int deg = curve.degree;
  const auto cf = coeffs_mod_p(curve, p);
  const auto chi = chi_table(p);
  const Fp2 field(p);
  const u32 r = field.nonresidue();
  const Barrett bar(p);

  // Row v = 0: chi_{p^2} is 1 on nonzero base-field values, 0 on roots.
  i64 zero_row = p;
  for (u64 x = 0; x < p; ++x) {
    u64 fx = 0;
    for (int k = deg; k >= 0; --k) fx = bar.reduce(fx * x + cf[k]);
    if (fx == 0) --zero_row;
  }

  i64 folded = 0;
  std::vector<Fp2::Elt> diff(deg + 1);
  for (u32 v = 1; v <= (p - 1) / 2; ++v) {
    // Seed f(u + vw) at u = 0..deg, then difference-table the row.
    for (int u = 0; u <= deg; ++u) {
      auto z = field.make(u, v);
      auto acc = field.make(0);
      for (int k = deg; k >= 0; --k) {
        acc = field.add(field.mul(acc, z), field.make(cf[k]));
      }
      diff[u] = acc;
    }
    for (int level = 1; level <= deg; ++level) {
      for (int u = deg; u >= level; --u) {
        const auto hi = diff[u], lo = diff[u - 1];
        diff[u] = {hi.a >= lo.a ? hi.a - lo.a : hi.a + p - lo.a,
                   hi.b >= lo.b ? hi.b - lo.b : hi.b + p - lo.b};
      }
    }
    i64 row = 0;
    for (u32 u = 0; u < p; ++u) {
      const auto val = diff[0];
      const u64 norm =
          bar.reduce(u64(val.a) * val.a +
                     u64(p - r) * bar.reduce(u64(val.b) * val.b));
      row += chi[norm];
      // Advance the difference registers to u + 1.
      for (int level = 0; level < deg; ++level) {
        u32 a = diff[level].a + diff[level + 1].a;
        if (a >= p) a -= p;
        u32 b = diff[level].b + diff[level + 1].b;
        if (b >= p) b -= p;
        diff[level] = {a, b};
      }
    }
    folded += row;
  }

  // Points at infinity: degree 5 has one; degree 6 has 1 + chi_{p^2}(c6),
  // and every base-field unit is a square in F_{p^2}.
  const i64 inf = deg == 6 ? 2 : 1;
  return u64(i64(u64(p) * p) + zero_row + 2 * folded + inf);
}

// Dispatcher matching the two supported residue fields.
inline u64 count_points(const CurveSpec& curve, u32 p, int field_degree) {
  if (field_degree == 1) return count_points_fp(curve, p);
  if (field_degree == 2) return count_points_fp2(curve, p);
  throw ConfigError("count_points supports residue fields F_p and F_{p^2}");
}

inline void check_weil(const LPolyCoeffs& lp, const std::string& context) {
  const double root = std::sqrt(double(lp.q));
  if (double(lp.a1 < 0 ? -lp.a1 : lp.a1) > 4.0 * root ||
      lp.a2 < -2 * i64(lp.q) || lp.a2 > 6 * i64(lp.q)) {
    throw InvariantError("Weil bound violated at " + context + ": q=" +
                         std::to_string(lp.q) + " a1=" + std::to_string(lp.a1) +
                         " a2=" + std::to_string(lp.a2));
  }
}

// L-polynomial coefficients at a good prime from the two counts:
// a1 = p + 1 - #C(F_p), a2 = (a1^2 - p^2 - 1 + #C(F_{p^2})) / 2.
inline LPolyCoeffs lpoly(const CurveSpec& curve, u32 p) {
  const i64 n1 = i64(count_points_fp(curve, p));
  const i64 n2 = i64(count_points_fp2(curve, p));
  LPolyCoeffs lp;
  lp.q = p;
  lp.a1 = i64(p) + 1 - n1;
  const i64 numerator = lp.a1 * lp.a1 - i64(p) * p - 1 + n2;
  if (numerator % 2 != 0) {
    throw InvariantError("curve " + curve.name + ": non-integral a2 at p=" +
                         std::to_string(p));
  }
  lp.a2 = numerator / 2;
  check_weil(lp, "curve " + curve.name + " p=" + std::to_string(p));
  return lp;
}

// Frobenius data over the degree-f extension, from Newton's identities on
// e1..e4 = (a1, a2, q*a1, q^2): the new (e1', e2') are the power-sum data
// of the squared (f=2) or fourth-power (f=4) eigenvalues.
inline LPolyCoeffs base_change(const LPolyCoeffs& lp, int f) {
  if (f == 1) return lp;
  if (f == 2) {
    const i64 q = i64(lp.q);
    const i64 e1 = lp.a1, e2 = lp.a2, e3 = q * lp.a1;
    const i64 e4 = q * q;
    const i64 p1 = e1;
    const i64 p2 = e1 * p1 - 2 * e2;
    const i64 p3 = e1 * p2 - e2 * p1 + 3 * e3;
    const i64 p4 = e1 * p3 - e2 * p2 + e3 * p1 - 4 * e4;
    LPolyCoeffs out;
    out.q = lp.q * lp.q;
    out.a1 = p2;
    out.a2 = (p2 * p2 - p4) / 2;  // exact: p2^2 = sum + 2*e2'
    return out;
  }
  if (f == 4) return base_change(base_change(lp, 2), 2);
  throw ConfigError("base_change supports f in {1, 2, 4}");
}

inline NormalizedClass normalize(const LPolyCoeffs& lp) {
  return {double(lp.a1) / std::sqrt(double(lp.q)),
          double(lp.a2) / double(lp.q)};
}

// One Frobenius sample at a place, with the underlying integer data kept:
// the a1 = 0 atom diagnostic works on exact integers, never on floats.
struct PlaceSample {
  u32 p = 0;        // rational prime below the place
  u64 q = 0;        // residue-field size p^f
  i64 a1 = 0;
  i64 a2 = 0;
  double a1n = 0.0;
  double a2n = 0.0;
};

struct SkippedPrime {
  u32 p = 0;
  std::string reason;  // "bad-reduction" or "ramified"
};

struct SampleCollection {
  std::vector<PlaceSample> samples;
  std::vector<SkippedPrime> skipped;
};

// Places of F' = Q(sqrt(d1), ..) above good rational primes in [pmin, pmax].
// The residue degree f is the order of the character vector (chi(d_i, p))_i
// in {+-1}^k, the number of places above p is 2^k / f, and all places above
// p carry identical Frobenius data because the curve is defined over Q.
// Places are admitted by residue-field norm: a place enters iff p^f <= pmax,
// matching the norm ordering of the equidistribution statement (an inert
// place sits at height p^2, not p).
inline SampleCollection collect_samples(
    const CurveSpec& curve, const std::vector<long long>& base_d, u32 pmin,
    u32 pmax, const std::function<LPolyCoeffs(u32)>& lpoly_at) {
  validate_base_field(base_d);
  if (pmin < 3 || pmin > pmax) {
    throw ConfigError("prime range requires 3 <= pmin <= pmax");
  }
  SampleCollection out;
  const int k = int(base_d.size());
  for (u32 p : primes_in_range(pmin, pmax)) {
    if (!is_good_prime(curve, p)) {
      out.skipped.push_back({p, "bad-reduction"});
      continue;
    }
    bool ramified = false;
    bool split_everywhere = true;
    for (long long d : base_d) {
      const int chi = legendre(d, p);
      if (chi == 0) ramified = true;
      if (chi != 1) split_everywhere = false;
    }
    if (ramified) {
      out.skipped.push_back({p, "ramified"});
      continue;
    }
    const int f = (k == 0 || split_everywhere) ? 1 : 2;
    if (f == 2 && u64(p) * p > pmax) {
      out.skipped.push_back({p, "inert-norm-above-pmax"});
      continue;
    }
    const int places = k == 0 ? 1 : (1 << k) / f;
    const LPolyCoeffs lp = base_change(lpoly_at(p), f);
    check_weil(lp, "place above p=" + std::to_string(p));
    const NormalizedClass nc = normalize(lp);
    for (int i = 0; i < places; ++i) {
      out.samples.push_back({p, lp.q, lp.a1, lp.a2, nc.a1, nc.a2});
    }
  }
  return out;
}

inline SampleCollection collect_samples(const CurveSpec& curve,
                                        const std::vector<long long>& base_d,
                                        u32 pmin, u32 pmax) {
  return collect_samples(curve, base_d, pmin, pmax,
                         [&](u32 p) { return lpoly(curve, p); });
}

}  // namespace stg2
