#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nsmat {

using Int = std::int64_t;

/// Raw generator list as supplied by the user: nonempty, all values >= 1.
/// No gcd requirement; normalize() splits off the common factor.
struct GeneratorInput {
  std::vector<Int> values;

  /// Validates the invariants and returns the input; throws
  /// std::invalid_argument on an empty list or a value < 1.
  static GeneratorInput of(std::vector<Int> values);
};

/// The Apery set of S with respect to its multiplicity m, indexed by
/// residue class: values[i] is the least element of S congruent to i mod m.
/// Always values[0] == 0 and values[i] == i (mod m).
struct AperyVector {
  std::vector<Int> values;

  Int multiplicity() const { return static_cast<Int>(values.size()); }
  bool operator==(const AperyVector&) const = default;
};

/// Kunz coordinates k_1..k_{m-1}, defined by a_i = k_i*m + i.
struct KunzCoordinates {
  std::vector<Int> values;

  bool operator==(const KunzCoordinates&) const = default;
};

enum class SemigroupClass { Trivial, Symmetric, Pseudosymmetric, Neither };

std::string to_string(SemigroupClass c);

/// A numerical semigroup: a subsemigroup of N with finite complement,
/// i.e. gcd(generators) == 1. Immutable after construction; every
/// invariant (multiplicity, Frobenius number, conductor, Apery set,
/// membership table) is computed once up front.
///
/// The multiplicity-1 case S == N is representable (frobenius == -1,
/// conductor == 0); operations that need m >= 2 reject it explicitly.
class NumericalSemigroup {
 public:
  /// Builds the semigroup generated by `values`. Requires a valid
  /// GeneratorInput with gcd 1; throws std::invalid_argument otherwise
  /// (inputs with gcd > 1 go through normalize() instead). Redundant
  /// generators are dropped; minimal_generators() is the canonical list.
  static NumericalSemigroup from_generators(const std::vector<Int>& values);

  const std::vector<Int>& minimal_generators() const { return minimal_generators_; }
  Int multiplicity() const { return multiplicity_; }
  Int embedding_dimension() const { return static_cast<Int>(minimal_generators_.size()); }
  Int frobenius() const { return frobenius_; }
  Int conductor() const { return conductor_; }
  const AperyVector& apery() const { return apery_; }
  bool is_trivial() const { return multiplicity_ == 1; }

  /// Membership test, total over the integers: false for n < 0, table
  /// lookup below the conductor, true from the conductor on.
  bool contains(Int n) const;

  /// The gaps of S in increasing order (empty for S == N).
  std::vector<Int> gaps() const;

  bool operator==(const NumericalSemigroup& other) const {
    return minimal_generators_ == other.minimal_generators_;
  }

 private:
  NumericalSemigroup() = default;

  std::vector<Int> minimal_generators_;
  Int multiplicity_ = 1;
  Int frobenius_ = -1;
  Int conductor_ = 0;
  std::vector<bool> table_;  // covers [0, conductor + 2*multiplicity]
  AperyVector apery_;
};

/// A subsemigroup of N written as d*T with T a numerical semigroup.
/// scale == 1 is the plain numerical-semigroup case.
struct ScaledSemigroup {
  Int scale;
  NumericalSemigroup quotient;
};

/// Splits gcd d off the input and builds the quotient semigroup
/// generated by values/d, with minimal generators computed.
ScaledSemigroup normalize(const GeneratorInput& input);

/// Free-function form of NumericalSemigroup::contains.
bool membership(const NumericalSemigroup& s, Int n);

const AperyVector& apery_set(const NumericalSemigroup& s);

Int conductor(const NumericalSemigroup& s);

/// k_i = (a_i - i)/m for i = 1..m-1. Requires m >= 2; throws
/// std::domain_error on S == N.
KunzCoordinates kunz_coordinates(const NumericalSemigroup& s);

/// Applies the definitional gap-reflection tests over x in [-1, F+1].
/// S == N reports Trivial. Symmetric or Pseudosymmetric is equivalent
/// to S being irreducible.
SemigroupClass classify(const NumericalSemigroup& s);

}  // namespace nsmat
