#pragma once

#include <optional>
#include <vector>

#include "nsmat/rational.hpp"
#include "nsmat/semigroup.hpp"

namespace nsmat {

/// Exponents x_0..x_{m-1} with m*x_i = a_{i-1} - a_i + 1 (indices mod m).
/// The entries always sum to exactly 1 (telescoping).
struct ExponentVector {
  std::vector<Int> values;

  bool operator==(const ExponentVector&) const = default;
};

/// x_i = (a_{i-1} - a_i + 1)/m. Requires m >= 2; throws std::logic_error
/// if any division is inexact or the sum is not 1 (a corrupted input).
ExponentVector exponent_vector(const AperyVector& apery);

/// A generalized cyclic permutation matrix: the adjacency matrix of a
/// weighted directed m-cycle. weight(i) = z_i sits at entry (i-1, i) for
/// i = 1..m-1 and z_0 in the lower-left corner (m-1, 0); equivalently z_i
/// feeds position i+1 from position i, positions mod m.
///
/// When every weight is an exact power of a single integer base b, the
/// base is recorded (and validated on construction).
class WeightedCycleMatrix {
 public:
  explicit WeightedCycleMatrix(std::vector<Rational> weights,
                               std::optional<Integer> base = std::nullopt);

  Int size() const { return static_cast<Int>(weights_.size()); }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(Int i) const { return weights_[static_cast<size_t>(i)]; }
  const std::optional<Integer>& base() const { return base_; }

  bool operator==(const WeightedCycleMatrix& other) const {
    return weights_ == other.weights_ && base_ == other.base_;
  }

 private:
  std::vector<Rational> weights_;  // weights_[i] == z_i, all nonzero
  std::optional<Integer> base_;
};

/// Square matrix of exact rationals, entries kept in lowest terms.
class DenseRationalMatrix {
 public:
  explicit DenseRationalMatrix(Int size);
  static DenseRationalMatrix identity(Int size);

  Int size() const { return size_; }
  const Rational& at(Int row, Int col) const;
  void set(Int row, Int col, Rational value);

  /// True when every entry has denominator 1.
  bool is_integral() const;

  DenseRationalMatrix operator*(const DenseRationalMatrix& rhs) const;

  bool operator==(const DenseRationalMatrix&) const = default;

 private:
  Int size_;
  std::vector<Rational> entries_;  // row-major
};

/// The m x m matrix with superdiagonal b^{x_1}..b^{x_{m-1}} and corner
/// b^{x_0}; its exponent semigroup is exactly S. Requires m(S) >= 2 and
/// b outside {-1,0,1}; for S == N use scalar_matrix instead.
WeightedCycleMatrix build_theorem_matrix(const NumericalSemigroup& s, const Integer& b);

/// The 1x1 matrix [b], whose exponent semigroup is all of N.
WeightedCycleMatrix scalar_matrix(const Integer& b);

/// The (d*m) x (d*m) cycle matrix for d*T: z_i = p^{d-1} * b^{x_k} when
/// i = k*d and 1/p otherwise, with p the smallest prime not dividing b.
/// With d == 1 this coincides with build_theorem_matrix. A trivial
/// quotient T == N is handled with exponent vector [1] (so d == 1 gives
/// the 1x1 [b]).
WeightedCycleMatrix build_scaled_matrix(const ScaledSemigroup& scaled, const Integer& b);

/// Smallest prime not dividing b (3 when b = 2). Helper for the scaled
/// construction, exposed for tests.
Integer auxiliary_prime(const Integer& b);

/// det = (-1)^{m-1} * (z_0 * z_1 * ... * z_{m-1}), computed exactly.
Rational determinant(const WeightedCycleMatrix& m);

DenseRationalMatrix to_dense(const WeightedCycleMatrix& m);

/// Dense matrix with the parts on the diagonal; its exponent semigroup
/// is the intersection of the parts' exponent semigroups.
DenseRationalMatrix block_diagonal(const std::vector<WeightedCycleMatrix>& parts);

}  // namespace nsmat
