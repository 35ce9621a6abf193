#pragma once

// The 23 basic reciprocal-table families: heads grow by successive doubling
// or tripling, tails shrink by the matching successive halving or thirding.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sexagesimal/number.hpp"
#include "sexagesimal/regular.hpp"

namespace sexagesimal {

struct FamilySpec {
  int generator = 2;        // 2 or 3
  int multiplier_base = 1;  // 1, 3, or 5
  int multiplier_exp = 0;   // 0 iff multiplier_base is 1
  int n_max = 30;

  std::uint64_t multiplier() const {
    std::uint64_t m = 1;
    for (int i = 0; i < multiplier_exp; ++i) {
      m *= static_cast<std::uint64_t>(multiplier_base);
    }
    return m;
  }

  // Family identifier, e.g. "2^n", "2^n*3^2", "3^n*5".
  std::string id() const {
    std::string s = std::to_string(generator) + "^n";
    if (multiplier_exp >= 1) {
      s += "*" + std::to_string(multiplier_base);
      if (multiplier_exp > 1) {
        s += "^" + std::to_string(multiplier_exp);
      }
    }
    return s;
  }

  bool well_formed() const {
    return (generator == 2 || generator == 3) &&
           (multiplier_base == 1 || multiplier_base == 3 || multiplier_base == 5) &&
           multiplier_exp >= 0 && ((multiplier_base == 1) == (multiplier_exp == 0)) &&
           n_max >= 1;
  }

  // Membership in the standard catalog: 2^n*3^j (j=0..8), 2^n*5^j (j=1..12),
  // 3^n, 3^n*5, all with n_max up to 30.
  bool in_standard_catalog() const {
    if (!well_formed() || n_max > 30) {
      return false;
    }
    if (generator == 2) {
      if (multiplier_base == 1) {
        return true;
      }
      return multiplier_base == 3 ? multiplier_exp <= 8 : multiplier_exp <= 12;
    }
    return multiplier_base == 1 || (multiplier_base == 5 && multiplier_exp == 1);
  }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

struct FamilyTable {
  FamilySpec spec;
  std::vector<ReciprocalPair> rows;  // n = 1..n_max, provenance (id, n)
};

inline std::vector<FamilySpec> standard_families() {
  std::vector<FamilySpec> specs;
  specs.reserve(23);
  for (int j = 0; j <= 8; ++j) {
    specs.push_back({2, j == 0 ? 1 : 3, j, 30});
  }
  for (int j = 1; j <= 12; ++j) {
    specs.push_back({2, 5, j, 30});
  }
  specs.push_back({3, 1, 0, 30});
  specs.push_back({3, 5, 1, 30});
  return specs;
}

// Builds the family by chain steps alone: the n=0 seed pair is computed via
// reciprocal(), every later row doubles/triples the head and halves/thirds
// the tail, mirroring the scribal procedure. The seed is not emitted.
inline FamilyTable generate_family(const FamilySpec& spec) {
  if (!spec.well_formed()) {
    throw std::invalid_argument("malformed family spec");
  }
  FamilyTable table{spec, {}};
  table.rows.reserve(static_cast<std::size_t>(spec.n_max));
  Number head = Number::from_integer(spec.multiplier());
  Number tail = reciprocal(head);
  const std::string id = spec.id();
  for (int n = 1; n <= spec.n_max; ++n) {
    head = scale_small(head, spec.generator);
    tail = divide_small(tail, spec.generator);
    table.rows.push_back(ReciprocalPair{head, tail, Provenance{id, n}});
  }
  return table;
}

// The doubling family with multiplier 5^3, the worked golden fixture.
inline FamilyTable table_one() {
  return generate_family(FamilySpec{2, 5, 3, 30});
}

}  // namespace sexagesimal
