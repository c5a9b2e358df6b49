#pragma once

#include <string>
#include <vector>

#include "nsmat/matrix.hpp"
#include "nsmat/semigroup.hpp"

namespace nsmat {

/// Valuation bookkeeping for a weight list: a pairwise-coprime list of
/// positive integers (primes in every practical case) together with the
/// valuation of each weight and of the full weight product with respect
/// to each of them. Reconstructing prod |z_i| from the profile recovers
/// the exact absolute weight product, so integrality questions about
/// products of weights reduce to integer-linear inequalities here.
struct ValuationProfile {
  struct Entry {
    Integer prime;
    std::vector<Int> vals;  // v(z_0)..v(z_{m-1})
    Int product_val;        // v(z_0 * ... * z_{m-1}) == sum of vals
  };
  std::vector<Entry> entries;

  static ValuationProfile of(const std::vector<Rational>& weights);
};

/// Membership of [0, limit] in the exponent semigroup of some matrix.
struct MembershipWindow {
  Int limit;
  std::vector<bool> members;  // size limit + 1; members[0] is always true

  bool operator==(const MembershipWindow&) const = default;
};

/// Decides n in S(M) in closed form: writing n = q*m + r, the nonzero
/// entries of M^n are (prod z)^q times the r-step consecutive weight
/// products, so n is a member iff for every prime p and every start i,
/// q*v_p(prod z) + sum_{l<r} v_p(z_{i+l}) >= 0. Returns false for n < 0.
bool cycle_membership(const WeightedCycleMatrix& m, Int n);

/// The Apery vector of S(M): for each residue r, m*q_min(r) + r with
/// q_min(r) the least q >= 0 passing cycle_membership. Throws
/// std::domain_error "not closed under +m" when some v_p(prod z) < 0 and
/// "residue class empty" when a residue admits no finite q; either means
/// S(M) is not a numerical semigroup containing mN.
AperyVector cycle_apery(const WeightedCycleMatrix& m);

/// Brute-force oracle: computes A^1..A^limit by exact repeated
/// multiplication and records which powers are integer matrices.
MembershipWindow dense_power_membership(const DenseRationalMatrix& a, Int limit);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;  // names the first divergent n or residue on failure
};

struct VerificationReport {
  bool passed = true;
  std::vector<CheckResult> checks;
};

/// Builds the theorem matrix for (s, b), asserts cycle_apery equals the
/// semigroup's Apery vector (full equality of the semigroups), and
/// cross-checks the dense powering window against the sieve on
/// [0, conductor + 2m] (or [0, window_limit] when >= 0 is given).
/// Requires m(s) >= 2.
VerificationReport verify_construction(const NumericalSemigroup& s, const Integer& b,
                                       Int window_limit = -1);

}  // namespace nsmat
