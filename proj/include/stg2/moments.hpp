#pragma once

// Exact joint moments E[a1^i a2^j] of catalog groups via per-component Weyl
// integration: a1 is the standard character, a2 comes from the squaring trick
// e2 = (chi(g)^2 - chi(g^2))/2, and integrals use full-period trapezoid
// grids, exact for trigonometric polynomials below the node count.

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stg2/catalog.hpp"
#include "stg2/trigpoly.hpp"

namespace stg2 {

inline TrigPoly char_std(const EigenvalueScheme& scheme) {
  TrigPoly chi(scheme.torus_rank);
  for (const EigenMonomial& mono : scheme.eigenvalues)
    chi.add_term(mono.m2, phase_unit(mono.rho_num, mono.rho_den));
  return chi;
}

inline std::vector<TrigPoly> char_std(const STGroupDescriptor& group) {
  std::vector<TrigPoly> out;
  out.reserve(group.components.size());
  for (const EigenvalueScheme& s : group.components) out.push_back(char_std(s));
  return out;
}

// Standard character evaluated at g^2, in the angles of g's own component:
// each eigenvalue monomial gets its angle frequencies and phase doubled
// (g^2 lies in the identity-component image of the component).
inline TrigPoly char_square_pullback(const EigenvalueScheme& scheme) {
  TrigPoly chi(scheme.torus_rank);
  for (const EigenMonomial& mono : scheme.eigenvalues)
    chi.add_term({2 * mono.m2[0], 2 * mono.m2[1]},
                 phase_unit(2 * mono.rho_num, mono.rho_den));
  return chi;
}

// e2 of the eigenvalues as a trigonometric polynomial.
inline TrigPoly a2_poly(const EigenvalueScheme& scheme) {
  const TrigPoly chi = char_std(scheme);
  return (chi * chi - char_square_pullback(scheme)) * cplx(0.5, 0.0);
}

struct MomentTable {
  std::string group;
  int degree = 6;
  std::map<std::pair<int, int>, double> values;

  double at(int i, int j) const {
    const auto it = values.find({i, j});
    if (it == values.end()) throw ConfigError("moment entry outside table degree");
    return it->second;
  }
};

// E[a1^i a2^j] over a single component.
inline double component_moment(const EigenvalueScheme& scheme, int i, int j,
                               int nodes = 0) {
  const TrigPoly chi = char_std(scheme);
  const TrigPoly e2 = a2_poly(scheme);
  const int span = i * chi.max_abs_key() + j * e2.max_abs_key();
  const int n = quadrature_nodes(span, nodes);
  const AngleGrid g0 = make_angle_grid(scheme.densities[0], n);
  const AngleGrid g1 = make_angle_grid(scheme.densities[1], n);
  const bool planar = scheme.torus_rank == 2;
  long double total = 0.0L;
  for (int a = 0; a < n; ++a) {
    const int b_count = planar ? n : 1;
    for (int b = 0; b < b_count; ++b) {
      const std::array<double, 2> angles{g0.theta[size_t(a)],
                                         planar ? g1.theta[size_t(b)] : 0.0};
      const double w =
          g0.weight[size_t(a)] * (planar ? g1.weight[size_t(b)] : 1.0);
      long double term = w;
      const double a1v = chi.eval(angles).real();
      const double a2v = e2.eval(angles).real();
      for (int t = 0; t < i; ++t) term *= a1v;
      for (int t = 0; t < j; ++t) term *= a2v;
      total += term;
    }
  }
  return double(total);
}

inline double moment(const STGroupDescriptor& group, int i, int j, int nodes = 0) {
  if (i < 0 || j < 0) throw ConfigError("moment orders must be nonnegative");
  long double sum = 0.0L;
  for (const EigenvalueScheme& s : group.components) sum += component_moment(s, i, j, nodes);
  return double(sum / (long double)group.components.size());
}

inline MomentTable moment_table(const STGroupDescriptor& group, int degree = 6,
                                int nodes = 0) {
  if (degree < 2 || degree > 8) throw ConfigError("moment table degree must lie in [2, 8]");
  MomentTable table;
  table.group = group.name;
  table.degree = degree;
  std::map<std::pair<int, int>, long double> acc;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j) acc[{i, j}] = 0.0L;

  const double share = 1.0 / double(group.components.size());
  std::vector<double> pow1(size_t(degree) + 1), pow2(size_t(degree) + 1);
  for (const EigenvalueScheme& scheme : group.components) {
    const TrigPoly chi = char_std(scheme);
    const TrigPoly e2 = a2_poly(scheme);
    const int span = degree * std::max(chi.max_abs_key(), e2.max_abs_key());
    const int n = quadrature_nodes(span, nodes);
    const AngleGrid g0 = make_angle_grid(scheme.densities[0], n);
    const AngleGrid g1 = make_angle_grid(scheme.densities[1], n);
    const bool planar = scheme.torus_rank == 2;
    for (int a = 0; a < n; ++a) {
      const int b_count = planar ? n : 1;
      for (int b = 0; b < b_count; ++b) {
        const std::array<double, 2> angles{g0.theta[size_t(a)],
                                           planar ? g1.theta[size_t(b)] : 0.0};
        const double w = share * g0.weight[size_t(a)] *
                         (planar ? g1.weight[size_t(b)] : 1.0);
        const double a1v = chi.eval(angles).real();
        const double a2v = e2.eval(angles).real();
        pow1[0] = 1.0;
        pow2[0] = 1.0;
        for (int t = 1; t <= degree; ++t) {
          pow1[size_t(t)] = pow1[size_t(t - 1)] * a1v;
          pow2[size_t(t)] = pow2[size_t(t - 1)] * a2v;
        }
        for (auto& [key, value] : acc)
          value += (long double)w * pow1[size_t(key.first)] * pow2[size_t(key.second)];
      }
    }
  }
  // Catalog moments are integers; snap quadrature noise so emitted tables
  // and distances are exact.
  for (const auto& [key, value] : acc) {
    double v = double(value);
    const double snapped = std::round(v);
    if (std::abs(v - snapped) < 1e-9) v = snapped == 0.0 ? 0.0 : snapped;
    table.values[key] = v;
  }
  return table;
}

// Plain L2 distance over the entries both tables share.
inline double table_l2_distance(const MomentTable& x, const MomentTable& y) {
  double sum = 0.0;
  for (const auto& [key, value] : x.values) {
    const auto it = y.values.find(key);
    if (it == y.values.end()) continue;
    const double d = value - it->second;
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace stg2
