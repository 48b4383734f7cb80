#pragma once

// Bundled genus-2 corpus: five curve entries whose Jacobians realize known
// Sato-Tate groups over their listed base fields. Names are accepted bare by
// the CLI. Every entry is validated at load: nonzero discriminant (via
// make_curve) and more than 500 good primes below 4096.

#include <string>
#include <vector>

#include "stg2/curve.hpp"
#include "stg2/errors.hpp"

namespace stg2 {

struct CorpusEntry {
  CurveSpec curve;             // curve.base_d holds the entry's default base field
  std::string expected_group;  // Sato-Tate group over that base field
};

inline const std::vector<CorpusEntry>& bundled_corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    // x(x-1)(x^4 + 2x^3 - 6x - 1), the product-type curve with a1 = 0 at
    // exactly the primes inert in its splitting quadratic.
    out.push_back({make_curve("b_c2_product", {0, 1, 5, -6, -2, 1, 1}), "N(SU(2)xSU(2))"});
    // x^5 - 5x^3 + 5x + 1, simple Jacobian with the same group.
    out.push_back({make_curve("b_c2_simple", {1, 5, 0, -5, 0, 1, 0}), "N(SU(2)xSU(2))"});
    out.push_back({make_curve("e_d4", {120, 192, -12, 0, -6, -48, 15}), "J(E_4)"});
    out.push_back({make_curve("e_d6", {-38880, 329184, 7992, -2124, 12, 1, 0}), "J(E_6)"});
    // The same sextic viewed over Q(sqrt 2), where the group shrinks.
    out.push_back(
        {make_curve("e_d3", {-38880, 329184, 7992, -2124, 12, 1, 0}, {2}), "J(E_3)"});
    for (const CorpusEntry& entry : out) {
      const auto good = good_primes(entry.curve, 3, 4096);
      if (good.size() <= 500)
        throw InvariantError("corpus curve " + entry.curve.name +
                             " has too few good primes below 4096");
    }
    return out;
  }();
  return entries;
}

inline const CorpusEntry* find_corpus_entry(const std::string& name) {
  for (const CorpusEntry& entry : bundled_corpus())
    if (entry.curve.name == name) return &entry;
  return nullptr;
}

}  // namespace stg2
