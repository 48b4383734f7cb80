#pragma once

// Catalog of the thirteen Sato-Tate groups of non-generic abelian surfaces
// over totally real fields: component structure, per-component eigenvalue
// schemes with Haar densities, Galois-type labels, and the embedding family
// used by the matrix sampler.
//
// Every component is described by four eigenvalue monomials
// e^{i(rho + m.theta)} with rho a rational multiple of pi and m half-integer
// frequencies. The four monomials are conjugation-closed and multiply to 1.

#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "stg2/errors.hpp"
#include "stg2/trigpoly.hpp"

namespace stg2 {

// One eigenvalue e^{i(pi*rho_num/rho_den + (m2/2).theta)}.
struct EigenMonomial {
  int rho_num = 0;
  int rho_den = 1;
  FreqKey m2{{0, 0}};
};

// e^{i pi num/den}, exact for the multiples of pi/2 that trace-zero
// cancellations rely on.
inline cplx phase_unit(int num, int den) {
  const int g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  int r = num % (2 * den);
  if (r < 0) r += 2 * den;
  if (den == 1) return r == 0 ? cplx(1.0, 0.0) : cplx(-1.0, 0.0);
  if (den == 2) return r == 1 ? cplx(0.0, 1.0) : cplx(0.0, -1.0);
  const double phi = kPi * double(num) / double(den);
  return cplx(std::cos(phi), std::sin(phi));
}

// One connected component. Cancelling monomial pairs are stored adjacently
// (positions 0,1 and 2,3) so trace-zero components sum to exactly 0.0.
struct EigenvalueScheme {
  int torus_rank = 1;
  std::array<AngleDensity, 2> densities{{AngleDensity::sin2, AngleDensity::sin2}};
  std::array<EigenMonomial, 4> eigenvalues;
};

struct ClassInvariants {
  double a1 = 0.0;  // in [-4, 4]
  double a2 = 0.0;  // in [-2, 6]
};

// Block embedding used by sample_matrix. pair_su2 embeds (g, h) as
// diag(g, h); u1_su2 embeds (e^{i alpha}, h) as diag(u(alpha), h); single_su2
// embeds g as diag(g, conj(g)) with rotation cosets diag(z^j, z^j, ...).
enum class MatrixFamily { pair_su2, u1_su2, single_su2 };

struct STGroupDescriptor {
  std::string name;
  std::vector<std::string> galois_types;
  std::vector<EigenvalueScheme> components;
  MatrixFamily family = MatrixFamily::pair_su2;
  int rotation_order = 1;  // n of E_n / J(E_n); coset phases are e^{i pi j/n}
};

inline cplx scheme_eigenvalue(const EigenMonomial& mono, const std::array<double, 2>& angles) {
  const double phase = 0.5 * (mono.m2[0] * angles[0] + mono.m2[1] * angles[1]);
  return phase_unit(mono.rho_num, mono.rho_den) * cplx(std::cos(phase), std::sin(phase));
}

// True when the four monomials cancel identically (a1 = 0 on the whole
// component), decided symbolically by grouping equal frequencies.
inline bool scheme_trace_is_zero(const EigenvalueScheme& scheme) {
  TrigPoly sum(scheme.torus_rank);
  for (const EigenMonomial& mono : scheme.eigenvalues)
    sum.add_term(mono.m2, phase_unit(mono.rho_num, mono.rho_den));
  return sum.terms().empty();
}

inline ClassInvariants class_invariants(const EigenvalueScheme& scheme,
                                        const std::vector<double>& angles) {
  if (int(angles.size()) != scheme.torus_rank)
    throw ConfigError("angle count does not match torus rank");
  const std::array<double, 2> a{angles[0], scheme.torus_rank == 2 ? angles[1] : 0.0};
  cplx chi = 0.0;
  cplx chi_sq = 0.0;
  for (const EigenMonomial& mono : scheme.eigenvalues) {
    const cplx lambda = scheme_eigenvalue(mono, a);
    chi += lambda;
    chi_sq += lambda * lambda;
  }
  const cplx e2 = 0.5 * (chi * chi - chi_sq);
  return ClassInvariants{chi.real(), e2.real()};
}

namespace detail {

inline EigenvalueScheme scheme_su2_pair() {
  EigenvalueScheme s;
  s.torus_rank = 2;
  s.densities = {AngleDensity::sin2, AngleDensity::sin2};
  s.eigenvalues = {EigenMonomial{0, 1, {2, 0}}, EigenMonomial{0, 1, {-2, 0}},
                   EigenMonomial{0, 1, {0, 2}}, EigenMonomial{0, 1, {0, -2}}};
  return s;
}

// {+-e^{i psi/2}, +-e^{-i psi/2}}: the swap coset, whose squares land in the
// diagonal SU(2) class at angle psi.
inline EigenvalueScheme scheme_half_angle_pairs() {
  EigenvalueScheme s;
  s.torus_rank = 1;
  s.densities = {AngleDensity::sin2, AngleDensity::sin2};
  s.eigenvalues = {EigenMonomial{0, 1, {1, 0}}, EigenMonomial{1, 1, {1, 0}},
                   EigenMonomial{0, 1, {-1, 0}}, EigenMonomial{1, 1, {-1, 0}}};
  return s;
}

inline EigenvalueScheme scheme_u1_su2() {
  EigenvalueScheme s;
  s.torus_rank = 2;
  s.densities = {AngleDensity::uniform, AngleDensity::sin2};
  s.eigenvalues = {EigenMonomial{0, 1, {2, 0}}, EigenMonomial{0, 1, {-2, 0}},
                   EigenMonomial{0, 1, {0, 2}}, EigenMonomial{0, 1, {0, -2}}};
  return s;
}

// {i, -i, e^{+-i theta}}: the U(1)-inverting coset keeps a free SU(2) factor.
inline EigenvalueScheme scheme_i_pair_su2() {
  EigenvalueScheme s;
  s.torus_rank = 1;
  s.densities = {AngleDensity::sin2, AngleDensity::sin2};
  s.eigenvalues = {EigenMonomial{1, 2, {0, 0}}, EigenMonomial{-1, 2, {0, 0}},
                   EigenMonomial{0, 1, {2, 0}}, EigenMonomial{0, 1, {-2, 0}}};
  return s;
}

// {e^{i(pi j/n +- theta)}, e^{-i(pi j/n +- theta)}}.
inline EigenvalueScheme scheme_rotation(int j, int n) {
  EigenvalueScheme s;
  s.torus_rank = 1;
  s.densities = {AngleDensity::sin2, AngleDensity::sin2};
  s.eigenvalues = {EigenMonomial{j, n, {2, 0}}, EigenMonomial{-j, n, {2, 0}},
                   EigenMonomial{j, n, {-2, 0}}, EigenMonomial{-j, n, {-2, 0}}};
  return s;
}

// {+-e^{i theta}, +-e^{-i theta}}: J-twisted components; squares land in the
// identity component with doubled angle.
inline EigenvalueScheme scheme_j_twist() {
  EigenvalueScheme s;
  s.torus_rank = 1;
  s.densities = {AngleDensity::sin2, AngleDensity::sin2};
  s.eigenvalues = {EigenMonomial{0, 1, {2, 0}}, EigenMonomial{1, 1, {2, 0}},
                   EigenMonomial{0, 1, {-2, 0}}, EigenMonomial{1, 1, {-2, 0}}};
  return s;
}

inline STGroupDescriptor make_e_group(int n) {
  STGroupDescriptor d;
  d.name = "E_" + std::to_string(n);
  d.galois_types = {n == 2 ? std::string("E[C_2] (C)") : "E[C_" + std::to_string(n) + "]"};
  d.family = MatrixFamily::single_su2;
  d.rotation_order = n;
  for (int j = 0; j < n; ++j) d.components.push_back(scheme_rotation(j, n));
  return d;
}

inline STGroupDescriptor make_je_group(int n) {
  STGroupDescriptor d;
  d.name = "J(E_" + std::to_string(n) + ")";
  d.galois_types = {n == 1 ? std::string("E[C_2] (RxR)") : "E[D_" + std::to_string(n) + "]"};
  d.family = MatrixFamily::single_su2;
  d.rotation_order = n;
  for (int j = 0; j < n; ++j) d.components.push_back(scheme_rotation(j, n));
  for (int j = 0; j < n; ++j) d.components.push_back(scheme_j_twist());
  return d;
}

inline std::vector<STGroupDescriptor> build_catalog() {
  std::vector<STGroupDescriptor> groups;

  STGroupDescriptor b1;
  b1.name = "SU(2)xSU(2)";
  b1.galois_types = {"B[C_1]"};
  b1.family = MatrixFamily::pair_su2;
  b1.components = {scheme_su2_pair()};
  groups.push_back(b1);

  STGroupDescriptor b2;
  b2.name = "N(SU(2)xSU(2))";
  b2.galois_types = {"B[C_2]"};
  b2.family = MatrixFamily::pair_su2;
  b2.components = {scheme_su2_pair(), scheme_half_angle_pairs()};
  groups.push_back(b2);

  STGroupDescriptor c2;
  c2.name = "N(U(1))xSU(2)";
  c2.galois_types = {"C[C_2]"};
  c2.family = MatrixFamily::u1_su2;
  c2.components = {scheme_u1_su2(), scheme_i_pair_su2()};
  groups.push_back(c2);

  for (int n : {1, 2, 3, 4, 6}) groups.push_back(make_e_group(n));
  for (int n : {1, 2, 3, 4, 6}) groups.push_back(make_je_group(n));
  return groups;
}

}  // namespace detail

inline const std::vector<STGroupDescriptor>& catalog() {
  static const std::vector<STGroupDescriptor> groups = detail::build_catalog();
  return groups;
}

inline const STGroupDescriptor& get_group(const std::string& name) {
  for (const STGroupDescriptor& d : catalog())
    if (d.name == name) return d;
  throw ConfigError("unknown group: " + name);
}

// Exact Haar probability of a1 = 0: trace-zero components over all
// components (each component carries mass 1/#components).
inline double atom_mass(const STGroupDescriptor& group) {
  int zero = 0;
  for (const EigenvalueScheme& s : group.components) zero += scheme_trace_is_zero(s) ? 1 : 0;
  return double(zero) / double(group.components.size());
}

}  // namespace stg2
