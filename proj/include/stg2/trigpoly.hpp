#pragma once

// Sparse Fourier series on one- and two-angle tori, plus trapezoid quadrature
// against the per-angle Haar densities. Frequencies may be half-integers, so
// keys store doubled frequencies and quadrature grids span a full 4*pi period
// (the doubled-angle substitution); the rule is exact for any series whose
// doubled frequencies stay below the node count.

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <map>
#include <vector>

#include "stg2/errors.hpp"
#include "stg2/rng.hpp"

namespace stg2 {

using cplx = std::complex<double>;

// Per-angle Haar density: (2/pi) sin^2(theta) on [0,pi], or uniform on [0,2pi).
enum class AngleDensity { sin2, uniform };

// Frequency key, doubled: {1, -2} stands for exp(i*(theta0/2 - theta1)).
using FreqKey = std::array<int, 2>;

class TrigPoly {
 public:
  explicit TrigPoly(int rank = 1) : rank_(rank) {
    if (rank < 1 || rank > 2) throw ConfigError("torus rank must be 1 or 2");
  }

  static TrigPoly constant(int rank, cplx value) {
    TrigPoly p(rank);
    p.add_term({0, 0}, value);
    return p;
  }

  static TrigPoly monomial(int rank, FreqKey key2, cplx coeff) {
    TrigPoly p(rank);
    p.add_term(key2, coeff);
    return p;
  }

  int rank() const { return rank_; }
  const std::map<FreqKey, cplx>& terms() const { return terms_; }

  TrigPoly& add_term(FreqKey key2, cplx coeff) {
    if (rank_ == 1 && key2[1] != 0) throw ConfigError("rank-1 key has a second frequency");
    cplx& slot = terms_[key2];
    slot += coeff;
    if (slot.real() == 0.0 && slot.imag() == 0.0) terms_.erase(key2);
    return *this;
  }

  TrigPoly operator+(const TrigPoly& other) const {
    require_same_rank(other);
    TrigPoly out = *this;
    for (const auto& [k, c] : other.terms_) out.add_term(k, c);
    return out;
  }

  TrigPoly operator-(const TrigPoly& other) const {
    require_same_rank(other);
    TrigPoly out = *this;
    for (const auto& [k, c] : other.terms_) out.add_term(k, -c);
    return out;
  }

  TrigPoly operator*(const TrigPoly& other) const {
    require_same_rank(other);
    TrigPoly out(rank_);
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : other.terms_)
        out.add_term({ka[0] + kb[0], ka[1] + kb[1]}, ca * cb);
    return out;
  }

  TrigPoly operator*(cplx scalar) const {
    TrigPoly out(rank_);
    for (const auto& [k, c] : terms_) out.add_term(k, c * scalar);
    return out;
  }

  TrigPoly conjugate() const {
    TrigPoly out(rank_);
    for (const auto& [k, c] : terms_) out.add_term({-k[0], -k[1]}, std::conj(c));
    return out;
  }

  cplx eval(const std::array<double, 2>& angles) const {
    cplx sum = 0.0;
    for (const auto& [k, c] : terms_) {
      const double phase = 0.5 * (k[0] * angles[0] + k[1] * angles[1]);
      sum += c * cplx(std::cos(phase), std::sin(phase));
    }
    return sum;
  }

  int max_abs_key() const {
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::max({m, std::abs(k[0]), std::abs(k[1])});
    return m;
  }

  // Coefficient at -m equals the conjugate of the coefficient at m.
  bool conjugation_closed(double tol) const {
    for (const auto& [k, c] : terms_) {
      const auto it = terms_.find({-k[0], -k[1]});
      if (it == terms_.end()) return false;
      if (std::abs(it->second - std::conj(c)) > tol) return false;
    }
    return true;
  }

 private:
  void require_same_rank(const TrigPoly& other) const {
    if (rank_ != other.rank_) throw ConfigError("torus rank mismatch");
  }

  int rank_ = 1;
  std::map<FreqKey, cplx> terms_;
};

// Quadrature grid for one angle: nodes over the doubled period [0, 4*pi) with
// density weights folded in; sums against it reproduce the Haar integral for
// every series with doubled frequencies below nodes - 2.
struct AngleGrid {
  std::vector<double> theta;
  std::vector<double> weight;
};

inline AngleGrid make_angle_grid(AngleDensity density, int nodes) {
  AngleGrid grid;
  grid.theta.resize(size_t(nodes));
  grid.weight.resize(size_t(nodes));
  for (int k = 0; k < nodes; ++k) {
    const double t = 4.0 * kPi * double(k) / double(nodes);
    grid.theta[size_t(k)] = t;
    const double s = std::sin(t);
    grid.weight[size_t(k)] =
        density == AngleDensity::sin2 ? 2.0 * s * s / double(nodes) : 1.0 / double(nodes);
  }
  return grid;
}

inline int quadrature_nodes(int max_doubled_freq, int requested = 0) {
  if (requested > 0) return requested;
  int nodes = 64;
  while (nodes < 2 * max_doubled_freq + 8) nodes *= 2;
  return nodes;
}

// Haar integral of a series over its component torus. Sums accumulate in
// extended precision so doubling the node count moves results by < 1e-12.
inline cplx integrate(const TrigPoly& poly, const std::array<AngleDensity, 2>& densities,
                      int nodes = 0) {
  using cplxl = std::complex<long double>;
  const int n = quadrature_nodes(poly.max_abs_key(), nodes);
  const AngleGrid g0 = make_angle_grid(densities[0], n);
  cplxl total = 0.0L;
  if (poly.rank() == 1) {
    for (int a = 0; a < n; ++a) {
      const cplx v = poly.eval({g0.theta[size_t(a)], 0.0});
      total += (long double)g0.weight[size_t(a)] * cplxl(v.real(), v.imag());
    }
    return cplx(double(total.real()), double(total.imag()));
  }
  const AngleGrid g1 = make_angle_grid(densities[1], n);
  for (int a = 0; a < n; ++a) {
    cplxl row = 0.0L;
    for (int b = 0; b < n; ++b) {
      const cplx v = poly.eval({g0.theta[size_t(a)], g1.theta[size_t(b)]});
      row += (long double)g1.weight[size_t(b)] * cplxl(v.real(), v.imag());
    }
    total += (long double)g0.weight[size_t(a)] * row;
  }
  return cplx(double(total.real()), double(total.imag()));
}

}  // namespace stg2
