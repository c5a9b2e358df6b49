#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsmat/semigroup.hpp"

namespace nsmat {

/// One bound rule application: which rule fired, what kind of bound it
/// contributed ("lower", "upper", "exact" or "note"), and the value.
struct BoundRule {
  std::string tag;
  std::string kind;
  Int value;

  bool operator==(const BoundRule&) const = default;
};

/// Lower/upper bounds on the matricial dimension of S, with the rules
/// that produced them. exact is set exactly when lower == upper.
struct DimensionBounds {
  Int lower;
  Int upper;
  std::optional<Int> exact;
  std::vector<BoundRule> rules;
};

/// A representation of S as an intersection of irreducible numerical
/// semigroups, each containing S, together with the size of the
/// block-diagonal matrix the factors yield.
struct IrreducibleDecomposition {
  std::vector<NumericalSemigroup> factors;  // sorted by (multiplicity, generators)
  Int block_dimension;                      // sum of factor multiplicities
};

/// L + 1 where L is the length of the longest run of consecutive
/// elements of S below the conductor: a d x d representative admitting d
/// consecutive exponents would force every later exponent, contradicting
/// F not in S. Requires S != N.
Int run_lower_bound(const NumericalSemigroup& s);

/// Gaps g such that S union {g} is again a numerical semigroup
/// (equivalently 2g in S and g + s in S for every nonzero s in S), in
/// increasing order. S is irreducible iff exactly one special gap
/// exists. Requires S != N.
std::vector<Int> special_gaps(const NumericalSemigroup& s);

/// Builds one irreducible oversemigroup excluding each special gap of S
/// (growing S toward a maximal semigroup with that Frobenius number,
/// preferring small elements), then greedily prunes factors containing
/// the intersection of the others. Any oversemigroup U of S keeps
/// max(U \ S) among the special gaps of S, so the factors intersect to
/// exactly S. The decomposition is valid but not claimed minimal.
/// Requires S != N.
IrreducibleDecomposition decompose_irreducible(const NumericalSemigroup& s);

/// Applies, in order: trivial S -> exact 1; symmetric -> exact m;
/// pseudosymmetric with c <= m -> exact 2, with m < c <= 2m -> [m-1, m]
/// (the midpoint m-1 is tagged as conjectured, never asserted), with
/// c > 2m -> exact m; otherwise lower = max(2, run_lower_bound) and
/// upper = min(m, block dimension of decompose_irreducible when that is
/// smaller). rules records every bound applied.
DimensionBounds dimension_bounds(const NumericalSemigroup& s);

}  // namespace nsmat
