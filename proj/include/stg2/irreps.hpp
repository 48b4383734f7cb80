#pragma once

// Irreducible characters of the catalog groups as per-component trig
// polynomials: Sym-powers on SU(2)-type factors, cyclic twists on rotation
// components, induced characters vanishing off the index-2 subgroup, and
// sign pairs of extensions. verify_irrep_axioms checks orthonormality, the
// value at the identity against the dimension, and the induction/extension
// dichotomy.

#include <string>
#include <vector>

#include "stg2/catalog.hpp"
#include "stg2/trigpoly.hpp"

namespace stg2 {

// Character of Sym^k of SU(2) at angle slot 0 or 1: sum_{a=0..k} e^{i(k-2a)t}.
inline TrigPoly sym_su2_char(int k, int rank, int slot) {
  TrigPoly s(rank);
  for (int a = 0; a <= k; ++a) {
    FreqKey key{0, 0};
    key[size_t(slot)] = 2 * (k - 2 * a);
    s.add_term(key, 1.0);
  }
  return s;
}

struct IrrepLabel {
  enum class Kind {
    pair,            // r(k,l) on SU(2)xSU(2)
    pair_induced,    // s(k,l), k != l, on N(SU(2)xSU(2))
    pair_extension,  // s(k,k;eps) extending r(k,k)
    u1_induced,      // rk(k)xSym(l), k >= 1, on N(U(1))xSU(2)
    u1_extension,    // r0(eps)xSym(l) extending the trivial U(1) character
    cyclic,          // r(k,w) on E_n and on J(E_1)
    j_induced,       // R(k,w), 0 < w < n, on J(E_n)
    j_extension,     // R(k,w;eps), w in {0, n}, on J(E_n)
  };

  Kind kind = Kind::pair;
  int k = 0;
  int l = 0;
  int w = 0;
  int eps = 0;  // extension selector, 1 or 2

  bool operator==(const IrrepLabel&) const = default;

  static IrrepLabel r(int k, int l) { return {Kind::pair, k, l, 0, 0}; }
  static IrrepLabel s(int k, int l) { return {Kind::pair_induced, k, l, 0, 0}; }
  static IrrepLabel s_ext(int k, int eps) { return {Kind::pair_extension, k, k, 0, eps}; }
  static IrrepLabel rk_sym(int k, int l) { return {Kind::u1_induced, k, l, 0, 0}; }
  static IrrepLabel r0_sym(int eps, int l) { return {Kind::u1_extension, 0, l, 0, eps}; }
  static IrrepLabel r_cyclic(int k, int w) { return {Kind::cyclic, k, 0, w, 0}; }
  static IrrepLabel R_induced(int k, int w) { return {Kind::j_induced, k, 0, w, 0}; }
  static IrrepLabel R_ext(int k, int w, int eps) { return {Kind::j_extension, k, 0, w, eps}; }

  int dimension() const {
    switch (kind) {
      case Kind::pair: return (k + 1) * (l + 1);
      case Kind::pair_induced: return 2 * (k + 1) * (l + 1);
      case Kind::pair_extension: return (k + 1) * (k + 1);
      case Kind::u1_induced: return 2 * (l + 1);
      case Kind::u1_extension: return l + 1;
      case Kind::cyclic: return k + 1;
      case Kind::j_induced: return 2 * (k + 1);
      case Kind::j_extension:
      default: return k + 1;
    }
  }

  std::string text() const {
    const auto num = [](int v) { return std::to_string(v); };
    switch (kind) {
      case Kind::pair: return "r(" + num(k) + "," + num(l) + ")";
      case Kind::pair_induced: return "s(" + num(k) + "," + num(l) + ")";
      case Kind::pair_extension: return "s(" + num(k) + "," + num(k) + ";" + num(eps) + ")";
      case Kind::u1_induced: return "rk(" + num(k) + ")xSym(" + num(l) + ")";
      case Kind::u1_extension: return "r0(" + num(eps) + ")xSym(" + num(l) + ")";
      case Kind::cyclic: return "r(" + num(k) + "," + num(w) + ")";
      case Kind::j_induced: return "R(" + num(k) + "," + num(w) + ")";
      case Kind::j_extension:
      default: return "R(" + num(k) + "," + num(w) + ";" + num(eps) + ")";
    }
  }
};

namespace detail {

inline bool is_e_rotation_group(const STGroupDescriptor& g) {
  return g.family == MatrixFamily::single_su2 &&
         int(g.components.size()) == g.rotation_order;
}

inline bool is_j_rotation_group(const STGroupDescriptor& g) {
  return g.family == MatrixFamily::single_su2 &&
         int(g.components.size()) == 2 * g.rotation_order;
}

inline void require_label(bool ok, const std::string& why) {
  if (!ok) throw ConfigError("invalid irrep label: " + why);
}

}  // namespace detail

// Character of the labelled irreducible, one TrigPoly per component.
inline std::vector<TrigPoly> irrep_character(const STGroupDescriptor& group,
                                             const IrrepLabel& label) {
  using Kind = IrrepLabel::Kind;
  detail::require_label(label.k >= 0 && label.l >= 0, "negative Sym parameter");
  const double sign = label.eps == 2 ? -1.0 : 1.0;
  const int n = group.rotation_order;
  std::vector<TrigPoly> chars;

  switch (label.kind) {
    case Kind::pair: {
      detail::require_label(group.name == "SU(2)xSU(2)", "r(k,l) needs SU(2)xSU(2)");
      chars.push_back(sym_su2_char(label.k, 2, 0) * sym_su2_char(label.l, 2, 1));
      return chars;
    }
    case Kind::pair_induced: {
      detail::require_label(group.name == "N(SU(2)xSU(2))", "s(k,l) needs N(SU(2)xSU(2))");
      detail::require_label(label.k != label.l, "s(k,l) requires k != l");
      chars.push_back(sym_su2_char(label.k, 2, 0) * sym_su2_char(label.l, 2, 1) +
                      sym_su2_char(label.l, 2, 0) * sym_su2_char(label.k, 2, 1));
      chars.push_back(TrigPoly(1));
      return chars;
    }
    case Kind::pair_extension: {
      detail::require_label(group.name == "N(SU(2)xSU(2))", "s(k,k;eps) needs N(SU(2)xSU(2))");
      detail::require_label(label.eps == 1 || label.eps == 2, "extension tag must be 1 or 2");
      chars.push_back(sym_su2_char(label.k, 2, 0) * sym_su2_char(label.k, 2, 1));
      chars.push_back(sym_su2_char(label.k, 1, 0) * cplx(sign, 0.0));
      return chars;
    }
    case Kind::u1_induced: {
      detail::require_label(group.name == "N(U(1))xSU(2)", "rk(k)xSym(l) needs N(U(1))xSU(2)");
      detail::require_label(label.k >= 1, "induced U(1) character needs k >= 1");
      TrigPoly rk(2);
      rk.add_term({2 * label.k, 0}, 1.0);
      rk.add_term({-2 * label.k, 0}, 1.0);
      chars.push_back(rk * sym_su2_char(label.l, 2, 1));
      chars.push_back(TrigPoly(1));
      return chars;
    }
    case Kind::u1_extension: {
      detail::require_label(group.name == "N(U(1))xSU(2)", "r0(eps)xSym(l) needs N(U(1))xSU(2)");
      detail::require_label(label.eps == 1 || label.eps == 2, "extension tag must be 1 or 2");
      chars.push_back(sym_su2_char(label.l, 2, 1));
      chars.push_back(sym_su2_char(label.l, 1, 0) * cplx(sign, 0.0));
      return chars;
    }
    case Kind::cyclic: {
      if (group.name == "J(E_1)") {
        detail::require_label(label.w == 0 || label.w == 1, "J(E_1) twist must be 0 or 1");
        chars.push_back(sym_su2_char(label.k, 1, 0));
        chars.push_back(sym_su2_char(label.k, 1, 0) * cplx(label.w == 0 ? 1.0 : -1.0, 0.0));
        return chars;
      }
      detail::require_label(detail::is_e_rotation_group(group), "r(k,w) needs E_n or J(E_1)");
      detail::require_label(label.w >= 0 && label.w < 2 * n, "twist must lie in Z/2n");
      detail::require_label((label.w - label.k) % 2 == 0, "parity constraint k = w mod 2");
      for (int j = 0; j < n; ++j)
        chars.push_back(sym_su2_char(label.k, 1, 0) * phase_unit(j * label.w, n));
      return chars;
    }
    case Kind::j_induced: {
      detail::require_label(detail::is_j_rotation_group(group) && n >= 2,
                            "R(k,w) needs J(E_n), n >= 2");
      detail::require_label(label.w > 0 && label.w < n, "induced twist must lie strictly in (0, n)");
      detail::require_label((label.w - label.k) % 2 == 0, "parity constraint k = w mod 2");
      for (int j = 0; j < n; ++j) {
        const cplx z = phase_unit(j * label.w, n) + phase_unit(-j * label.w, n);
        chars.push_back(sym_su2_char(label.k, 1, 0) * z);
      }
      for (int j = 0; j < n; ++j) chars.push_back(TrigPoly(1));
      return chars;
    }
    case Kind::j_extension:
    default: {
      detail::require_label(detail::is_j_rotation_group(group) && n >= 2,
                            "R(k,w;eps) needs J(E_n), n >= 2");
      detail::require_label(label.w == 0 || label.w == n, "extensions need w in {0, n}");
      detail::require_label((label.w - label.k) % 2 == 0, "parity constraint k = w mod 2");
      detail::require_label(label.eps == 1 || label.eps == 2, "extension tag must be 1 or 2");
      for (int j = 0; j < n; ++j)
        chars.push_back(sym_su2_char(label.k, 1, 0) * phase_unit(j * label.w, n));
      for (int j = 0; j < n; ++j)
        chars.push_back(sym_su2_char(label.k, 1, 0) * (phase_unit(j * label.w, n) * sign));
      return chars;
    }
  }
}

// All labels for the group with Sym parameters up to kmax, enumeration order
// fixed for deterministic reports.
inline std::vector<IrrepLabel> enumerate_irreps(const STGroupDescriptor& group, int kmax) {
  std::vector<IrrepLabel> labels;
  const int n = group.rotation_order;
  if (group.name == "SU(2)xSU(2)") {
    for (int k = 0; k <= kmax; ++k)
      for (int l = 0; l <= kmax; ++l) labels.push_back(IrrepLabel::r(k, l));
  } else if (group.name == "N(SU(2)xSU(2))") {
    for (int k = 0; k <= kmax; ++k)
      for (int l = k + 1; l <= kmax; ++l) labels.push_back(IrrepLabel::s(k, l));
    for (int k = 0; k <= kmax; ++k)
      for (int eps : {1, 2}) labels.push_back(IrrepLabel::s_ext(k, eps));
  } else if (group.name == "N(U(1))xSU(2)") {
    for (int k = 1; k <= kmax; ++k)
      for (int l = 0; l <= kmax; ++l) labels.push_back(IrrepLabel::rk_sym(k, l));
    for (int eps : {1, 2})
      for (int l = 0; l <= kmax; ++l) labels.push_back(IrrepLabel::r0_sym(eps, l));
  } else if (group.name == "J(E_1)") {
    for (int k = 0; k <= kmax; ++k)
      for (int w : {0, 1}) labels.push_back(IrrepLabel::r_cyclic(k, w));
  } else if (detail::is_e_rotation_group(group)) {
    for (int k = 0; k <= kmax; ++k)
      for (int w = k % 2; w < 2 * n; w += 2) labels.push_back(IrrepLabel::r_cyclic(k, w));
  } else {
    for (int k = 0; k <= kmax; ++k) {
      for (int w = 2 - k % 2; w < n; w += 2) labels.push_back(IrrepLabel::R_induced(k, w));
      if (k % 2 == 0)
        for (int eps : {1, 2}) labels.push_back(IrrepLabel::R_ext(k, 0, eps));
      if ((n - k) % 2 == 0)
        for (int eps : {1, 2}) labels.push_back(IrrepLabel::R_ext(k, n, eps));
    }
  }
  return labels;
}

// (1/#components) sum_c integral of f_c * conj(g_c); complex-valued form.
inline cplx inner_product_c(const std::vector<TrigPoly>& f, const std::vector<TrigPoly>& g,
                            const STGroupDescriptor& group, int nodes = 0) {
  if (f.size() != group.components.size() || g.size() != group.components.size())
    throw ConfigError("character is not defined on every component");
  cplx sum = 0.0;
  for (size_t c = 0; c < group.components.size(); ++c)
    sum += integrate(f[c] * g[c].conjugate(), group.components[c].densities, nodes);
  return sum / double(group.components.size());
}

inline double inner_product(const std::vector<TrigPoly>& f, const std::vector<TrigPoly>& g,
                            const STGroupDescriptor& group, int nodes = 0) {
  return inner_product_c(f, g, group, nodes).real();
}

struct IrrepReport {
  std::string group;
  int kmax = 0;
  int label_count = 0;
  int checks = 0;
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }

  std::string summary() const {
    std::string s = group + ": " + std::to_string(label_count) + " irreps, " +
                    std::to_string(checks) + " checks, ";
    if (pass()) return s + "all pass";
    s += std::to_string(failures.size()) + " failures";
    for (const std::string& f : failures) s += "\n  " + f;
    return s;
  }
};

namespace detail {

struct ComponentGrid {
  bool planar = false;
  std::vector<double> weight;                    // per node, row-major
  std::vector<std::array<double, 2>> angles;
};

inline ComponentGrid make_component_grid(const EigenvalueScheme& scheme, int nodes) {
  ComponentGrid grid;
  grid.planar = scheme.torus_rank == 2;
  const AngleGrid g0 = make_angle_grid(scheme.densities[0], nodes);
  if (!grid.planar) {
    grid.weight = g0.weight;
    grid.angles.resize(size_t(nodes));
    for (int a = 0; a < nodes; ++a) grid.angles[size_t(a)] = {g0.theta[size_t(a)], 0.0};
    return grid;
  }
  const AngleGrid g1 = make_angle_grid(scheme.densities[1], nodes);
  grid.weight.resize(size_t(nodes) * size_t(nodes));
  grid.angles.resize(size_t(nodes) * size_t(nodes));
  for (int a = 0; a < nodes; ++a)
    for (int b = 0; b < nodes; ++b) {
      const size_t at = size_t(a) * size_t(nodes) + size_t(b);
      grid.weight[at] = g0.weight[size_t(a)] * g1.weight[size_t(b)];
      grid.angles[at] = {g0.theta[size_t(a)], g1.theta[size_t(b)]};
    }
  return grid;
}

}  // namespace detail

// Orthonormality (Gram = identity within 1e-9), character value at the
// identity = dimension, and the induction/extension dichotomy: extensions
// exist exactly for twist-fixed labels, their two characters sum to the
// induced character with norm 2, and induced labels have norm 1.
inline IrrepReport verify_irrep_axioms(const STGroupDescriptor& group, int kmax) {
  if (kmax < 2) throw ConfigError("verify_irrep_axioms requires kmax >= 2");
  constexpr double kTol = 1e-9;
  IrrepReport report;
  report.group = group.name;
  report.kmax = kmax;

  const std::vector<IrrepLabel> labels = enumerate_irreps(group, kmax);
  report.label_count = int(labels.size());
  std::vector<std::vector<TrigPoly>> chars;
  chars.reserve(labels.size());
  for (const IrrepLabel& lab : labels) chars.push_back(irrep_character(group, lab));

  int max_key = 1;
  for (const auto& ch : chars)
    for (const TrigPoly& p : ch) max_key = std::max(max_key, p.max_abs_key());
  const int nodes = quadrature_nodes(2 * max_key);

  const size_t ncomp = group.components.size();
  std::vector<detail::ComponentGrid> grids;
  grids.reserve(ncomp);
  for (const EigenvalueScheme& s : group.components)
    grids.push_back(detail::make_component_grid(s, nodes));

  // Value tables: values[label][component][node].
  std::vector<std::vector<std::vector<cplx>>> values(labels.size());
  for (size_t i = 0; i < labels.size(); ++i) {
    values[i].resize(ncomp);
    for (size_t c = 0; c < ncomp; ++c) {
      const detail::ComponentGrid& grid = grids[c];
      values[i][c].resize(grid.angles.size());
      for (size_t t = 0; t < grid.angles.size(); ++t)
        values[i][c][t] = chars[i][c].eval(grid.angles[t]);
    }
  }

  const auto gram = [&](size_t i, size_t j) {
    cplx sum = 0.0;
    for (size_t c = 0; c < ncomp; ++c) {
      const detail::ComponentGrid& grid = grids[c];
      cplx comp = 0.0;
      for (size_t t = 0; t < grid.angles.size(); ++t)
        comp += grid.weight[t] * values[i][c][t] * std::conj(values[j][c][t]);
      sum += comp;
    }
    return sum / double(ncomp);
  };

  for (size_t i = 0; i < labels.size(); ++i) {
    for (size_t j = i; j < labels.size(); ++j) {
      const cplx g = gram(i, j);
      const cplx expected = i == j ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
      ++report.checks;
      if (std::abs(g - expected) > kTol)
        report.failures.push_back("gram(" + labels[i].text() + ", " + labels[j].text() +
                                  ") = " + std::to_string(g.real()) + "+" +
                                  std::to_string(g.imag()) + "i");
    }
    const double at_id = chars[i][0].eval({0.0, 0.0}).real();
    ++report.checks;
    if (std::abs(at_id - double(labels[i].dimension())) > kTol)
      report.failures.push_back("dimension(" + labels[i].text() + "): char(id) = " +
                                std::to_string(at_id) + ", dim = " +
                                std::to_string(labels[i].dimension()));
  }

  // Induced labels: character doubles the dimension of the inducing irrep.
  for (const IrrepLabel& lab : labels) {
    int half_dim = 0;
    if (lab.kind == IrrepLabel::Kind::pair_induced)
      half_dim = (lab.k + 1) * (lab.l + 1);
    else if (lab.kind == IrrepLabel::Kind::u1_induced)
      half_dim = lab.l + 1;
    else if (lab.kind == IrrepLabel::Kind::j_induced)
      half_dim = lab.k + 1;
    else
      continue;
    ++report.checks;
    if (lab.dimension() != 2 * half_dim)
      report.failures.push_back("dim Ind != 2 dim for " + lab.text());
  }

  // Twist-fixed labels: the two extensions sum to the induced character,
  // which has norm exactly 2 and vanishes on the outer components.
  const auto check_extension_pair = [&](const IrrepLabel& e1, const IrrepLabel& e2) {
    const std::vector<TrigPoly> f1 = irrep_character(group, e1);
    const std::vector<TrigPoly> f2 = irrep_character(group, e2);
    std::vector<TrigPoly> ind;
    ind.reserve(f1.size());
    for (size_t c = 0; c < f1.size(); ++c) ind.push_back(f1[c] + f2[c]);
    const cplx norm = inner_product_c(ind, ind, group, nodes);
    ++report.checks;
    if (std::abs(norm - cplx(2.0, 0.0)) > kTol)
      report.failures.push_back("norm of induced " + e1.text() + "+" + e2.text() + " = " +
                                std::to_string(norm.real()));
  };
  for (const IrrepLabel& lab : labels) {
    if (lab.eps != 1) continue;
    IrrepLabel other = lab;
    other.eps = 2;
    check_extension_pair(lab, other);
  }
  if (group.name == "J(E_1)") {
    for (int k = 0; k <= kmax; ++k)
      check_extension_pair(IrrepLabel::r_cyclic(k, 0), IrrepLabel::r_cyclic(k, 1));
  }

  return report;
}

}  // namespace stg2
