#pragma once

#include <vector>

#include "lacunary/dense_poly.hpp"

namespace lacunary {

struct FactorEntry {
  DensePoly factor;
  unsigned long multiplicity = 0;

  friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

/// Sorts by canonical_less and merges equal factors by adding multiplicities.
void canonicalize(std::vector<FactorEntry>& factors);

}  // namespace lacunary
