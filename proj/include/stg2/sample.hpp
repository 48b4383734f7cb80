#pragma once

// Two independent samplers per catalog group. sample_class draws torus angles
// against the scheme densities; sample_matrix builds explicit unitary
// symplectic 4x4 elements (Haar SU(2) blocks times the component's coset
// representative) and is kept as an oracle against the schemes.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "stg2/catalog.hpp"
#include "stg2/errors.hpp"
#include "stg2/rng.hpp"

namespace stg2 {

inline ClassInvariants sample_class(const STGroupDescriptor& group, Rng& rng) {
  const auto index = size_t(rng.next_below(group.components.size()));
  const EigenvalueScheme& scheme = group.components[index];
  std::vector<double> angles(size_t(scheme.torus_rank));
  for (int t = 0; t < scheme.torus_rank; ++t)
    angles[size_t(t)] = scheme.densities[size_t(t)] == AngleDensity::sin2
                            ? rng.angle_sin2()
                            : rng.angle_uniform();
  return class_invariants(scheme, angles);
}

using Mat2 = std::array<std::array<cplx, 2>, 2>;
using Mat4 = std::array<std::array<cplx, 4>, 4>;

inline Mat4 mat_zero() {
  Mat4 m{};
  return m;
}

inline Mat4 mat_identity() {
  Mat4 m = mat_zero();
  for (int i = 0; i < 4; ++i) m[size_t(i)][size_t(i)] = 1.0;
  return m;
}

inline Mat4 mat_mul(const Mat4& a, const Mat4& b) {
  Mat4 out = mat_zero();
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const cplx aik = a[size_t(i)][size_t(k)];
      if (aik == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < 4; ++j) out[size_t(i)][size_t(j)] += aik * b[size_t(k)][size_t(j)];
    }
  return out;
}

inline Mat4 mat_transpose(const Mat4& a) {
  Mat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[size_t(i)][size_t(j)] = a[size_t(j)][size_t(i)];
  return out;
}

inline Mat4 mat_block_diag(const Mat2& a, const Mat2& b) {
  Mat4 out = mat_zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      out[size_t(i)][size_t(j)] = a[size_t(i)][size_t(j)];
      out[size_t(i + 2)][size_t(j + 2)] = b[size_t(i)][size_t(j)];
    }
  return out;
}

inline cplx mat_trace(const Mat4& a) {
  return a[0][0] + a[1][1] + a[2][2] + a[3][3];
}

// Defining form. B/C-family groups preserve diag(J2, J2); E-family groups
// preserve [[0, I2], [-I2, 0]] with J2 = [[0,1],[-1,0]].
inline Mat4 symplectic_form(MatrixFamily family) {
  Mat4 form = mat_zero();
  if (family == MatrixFamily::single_su2) {
    form[0][2] = 1.0;
    form[1][3] = 1.0;
    form[2][0] = -1.0;
    form[3][1] = -1.0;
  } else {
    form[0][1] = 1.0;
    form[1][0] = -1.0;
    form[2][3] = 1.0;
    form[3][2] = -1.0;
  }
  return form;
}

// max |(M^t F M - F)_{ij}|.
inline double symplectic_defect(const Mat4& m, const Mat4& form) {
  const Mat4 r = mat_mul(mat_transpose(m), mat_mul(form, m));
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      worst = std::max(worst, std::abs(r[size_t(i)][size_t(j)] - form[size_t(i)][size_t(j)]));
  return worst;
}

// max |(M M^dagger - I)_{ij}|.
inline double unitarity_defect(const Mat4& m) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx dot = 0.0;
      for (int k = 0; k < 4; ++k)
        dot += m[size_t(i)][size_t(k)] * std::conj(m[size_t(j)][size_t(k)]);
      worst = std::max(worst, std::abs(dot - (i == j ? cplx(1.0, 0.0) : cplx(0.0, 0.0))));
    }
  return worst;
}

inline double gaussian(Rng& rng) {
  const double u1 = 1.0 - rng.next_double();
  const double u2 = rng.next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

// Haar SU(2) via a uniform unit quaternion (x0 + x1 i + x2 j + x3 k).
inline Mat2 su2_haar(Rng& rng) {
  double x[4];
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& v : x) {
      v = gaussian(rng);
      norm2 += v * v;
    }
  } while (norm2 < 1e-12);
  const double inv = 1.0 / std::sqrt(norm2);
  const double a = x[0] * inv, b = x[1] * inv, c = x[2] * inv, d = x[3] * inv;
  return Mat2{{{cplx(a, b), cplx(c, d)}, {cplx(-c, d), cplx(a, -b)}}};
}

inline Mat2 mat2_conj(const Mat2& m) {
  Mat2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[size_t(i)][size_t(j)] = std::conj(m[size_t(i)][size_t(j)]);
  return out;
}

// Coset representative of component c: Id, the block swap J (B-family), the
// U(1)-inverting a = J2 + I2 (C-family), or diag(z^j, z^j, z^-j, z^-j) with
// z = e^{i pi/n}, times the E-form J for the J-twisted half of J(E_n).
inline Mat4 coset_representative(const STGroupDescriptor& group, size_t component) {
  if (group.family == MatrixFamily::pair_su2) {
    if (component == 0) return mat_identity();
    Mat4 swap = mat_zero();
    swap[0][2] = 1.0;
    swap[1][3] = 1.0;
    swap[2][0] = 1.0;
    swap[3][1] = 1.0;
    return swap;
  }
  if (group.family == MatrixFamily::u1_su2) {
    if (component == 0) return mat_identity();
    Mat4 a = mat_identity();
    a[0][0] = 0.0;
    a[1][1] = 0.0;
    a[0][1] = 1.0;
    a[1][0] = -1.0;
    return a;
  }
  const int n = group.rotation_order;
  const int j = int(component) % n;
  Mat4 rot = mat_zero();
  const cplx z = phase_unit(j, n);
  rot[0][0] = z;
  rot[1][1] = z;
  rot[2][2] = std::conj(z);
  rot[3][3] = std::conj(z);
  if (component < size_t(n)) return rot;
  return mat_mul(symplectic_form(MatrixFamily::single_su2), rot);
}

inline Mat4 sample_matrix(const STGroupDescriptor& group, Rng& rng) {
  const auto component = size_t(rng.next_below(group.components.size()));
  Mat4 base;
  switch (group.family) {
    case MatrixFamily::pair_su2: {
      const Mat2 g = su2_haar(rng);
      const Mat2 h = su2_haar(rng);
      base = mat_block_diag(g, h);
      break;
    }
    case MatrixFamily::u1_su2: {
      const double alpha = rng.angle_uniform();
      const cplx u = cplx(std::cos(alpha), std::sin(alpha));
      const Mat2 top{{{u, 0.0}, {0.0, std::conj(u)}}};
      base = mat_block_diag(top, su2_haar(rng));
      break;
    }
    case MatrixFamily::single_su2:
    default: {
      const Mat2 g = su2_haar(rng);
      base = mat_block_diag(g, mat2_conj(g));
      break;
    }
  }
  return mat_mul(coset_representative(group, component), base);
}

// (a1, a2) of the characteristic polynomial, for the scheme-vs-matrix oracle.
inline ClassInvariants matrix_invariants(const Mat4& m) {
  const cplx tr = mat_trace(m);
  const cplx tr_sq = mat_trace(mat_mul(m, m));
  const cplx e2 = 0.5 * (tr * tr - tr_sq);
  return ClassInvariants{tr.real(), e2.real()};
}

}  // namespace stg2
