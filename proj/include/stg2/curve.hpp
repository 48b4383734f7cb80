#pragma once

// Genus-2 curve models y^2 = f(x) with deg f in {5, 6}: parsing, exact
// integer discriminants via fraction-free resultants, and good-prime tests.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "stg2/errors.hpp"
#include "stg2/fp.hpp"

namespace stg2 {

using bigint = boost::multiprecision::cpp_int;

// Determinant of a square integer matrix, Bareiss fraction-free elimination.
inline bigint det_bareiss(std::vector<std::vector<bigint>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  bigint prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Resultant of two integer polynomials (coefficients low degree first) via
// the Sylvester matrix.
inline bigint resultant(const std::vector<bigint>& f,
                        const std::vector<bigint>& g) {
  const int n = int(f.size()) - 1;
  const int m = int(g.size()) - 1;
  if (n < 0 || m < 0 || f[n] == 0 || g[m] == 0) {
    throw ConfigError("resultant requires exact-degree coefficient lists");
  }
  const int size = n + m;
  std::vector<std::vector<bigint>> syl(size, std::vector<bigint>(size, 0));
  for (int row = 0; row < m; ++row) {
    for (int k = 0; k <= n; ++k) syl[row][row + k] = f[n - k];
  }
  for (int row = 0; row < n; ++row) {
    for (int k = 0; k <= m; ++k) syl[m + row][row + k] = g[m - k];
  }
  return det_bareiss(std::move(syl));
}

// disc(f) = (-1)^(n(n-1)/2) * Res(f, f') / lc(f).
inline bigint poly_discriminant(const std::vector<bigint>& f) {
  const int n = int(f.size()) - 1;
  std::vector<bigint> df(n);
  for (int k = 1; k <= n; ++k) df[k - 1] = k * f[k];
  while (df.size() > 1 && df.back() == 0) df.pop_back();
  if (df.size() == 1 && df[0] == 0) return 0;
  const bigint res = resultant(f, df);
  const int sign = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
  return sign * res / f[n];
}

struct CurveSpec {
  std::string name;
  std::array<long long, 7> c{};  // f(x) = c0 + c1 x + ... + c6 x^6
  int degree = 0;
  bigint disc = 0;
  // Default base field Q(sqrt(d1), ...) used when no field is given.
  std::vector<long long> base_d;

  long long leading() const { return c[degree]; }
};

inline void validate_base_field(const std::vector<long long>& ds) {
  if (ds.size() > 2) {
    throw ConfigError("base field supports at most two quadratic generators");
  }
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const long long d = ds[i];
    if (d == 0 || d == 1) throw ConfigError("base field d must not be 0 or 1");
    const long long ad = d < 0 ? -d : d;
    for (long long q = 2; q * q <= ad; ++q) {
      if (ad % (q * q) == 0) throw ConfigError("base field d must be squarefree");
    }
    for (std::size_t j = 0; j < i; ++j) {
      // Q(sqrt(di)) = Q(sqrt(dj)) iff di*dj is a perfect square.
      const bigint prod = bigint(ds[i]) * ds[j];
      if (prod > 0) {
        const bigint root = boost::multiprecision::sqrt(prod);
        if (root * root == prod) {
          throw ConfigError("base field generators are not independent");
        }
      }
    }
  }
}

inline CurveSpec make_curve(const std::string& name,
                            const std::array<long long, 7>& coeffs,
                            std::vector<long long> base_d = {}) {
  CurveSpec curve;
  curve.name = name;
  curve.c = coeffs;
  curve.base_d = std::move(base_d);
  validate_base_field(curve.base_d);
  if (coeffs[6] != 0) {
    curve.degree = 6;
  } else if (coeffs[5] != 0) {
    curve.degree = 5;
  } else {
    throw ConfigError("curve " + name + ": degree outside {5,6}, not genus 2");
  }
  std::vector<bigint> f(curve.degree + 1);
  for (int k = 0; k <= curve.degree; ++k) f[k] = coeffs[k];
  curve.disc = poly_discriminant(f);
  if (curve.disc == 0) {
    throw ConfigError("curve " + name + ": zero discriminant (singular model)");
  }
  return curve;
}

// One record per line: `name: c0 c1 c2 c3 c4 c5 c6` (low degree first).
inline CurveSpec parse_curve(const std::string& line) {
  const auto colon = line.find(':');
  if (colon == std::string::npos) {
    throw ConfigError("curve record needs `name: c0 .. c6`");
  }
  std::string name = line.substr(0, colon);
  while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) {
    name.pop_back();
  }
  std::size_t start = 0;
  while (start < name.size() && (name[start] == ' ' || name[start] == '\t')) {
    ++start;
  }
  name = name.substr(start);
  if (name.empty()) throw ConfigError("curve record has empty name");

  std::istringstream in(line.substr(colon + 1));
  std::array<long long, 7> coeffs{};
  for (int k = 0; k < 7; ++k) {
    if (!(in >> coeffs[k])) {
      throw ConfigError("curve " + name + ": expected seven coefficients");
    }
  }
  long long extra;
  if (in >> extra) {
    throw ConfigError("curve " + name + ": trailing data after c6");
  }
  return make_curve(name, coeffs);
}

inline std::vector<CurveSpec> parse_curve_file(const std::string& text) {
  std::vector<CurveSpec> curves;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t pos = line.find_first_not_of(" \t");
    if (pos == std::string::npos || line[pos] == '#') continue;
    curves.push_back(parse_curve(line));
  }
  if (curves.empty()) throw ConfigError("curve file contains no records");
  return curves;
}

inline bool is_good_prime(const CurveSpec& curve, u64 p) {
  if (p == 2 || !is_prime(p)) return false;
  if (curve.leading() % i64(p) == 0) return false;
  return curve.disc % p != 0;
}

inline std::vector<u32> good_primes(const CurveSpec& curve, u32 pmin, u32 pmax) {
  std::vector<u32> out;
  for (u32 p : primes_in_range(std::max(pmin, 3u), pmax)) {
    if (is_good_prime(curve, p)) out.push_back(p);
  }
  return out;
}

}  // namespace stg2
