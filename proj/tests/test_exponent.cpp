#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "nsmat/exponent.hpp"
#include "oracles.hpp"

using namespace nsmat;

namespace {

NumericalSemigroup ns(const std::vector<Int>& gens) {
  return NumericalSemigroup::from_generators(gens);
}

Rational rat(const std::string& s) { return parse_rational(s); }

}  // namespace

TEST_CASE("cycle membership on the mcnugget matrix") {
  WeightedCycleMatrix m = build_theorem_matrix(ns({6, 9, 20}), 2);
  CHECK_FALSE(cycle_membership(m, 43));
  CHECK(cycle_membership(m, 49));
  CHECK(cycle_membership(m, 0));
  CHECK_FALSE(cycle_membership(m, -1));
  for (Int n = 44; n <= 60; ++n) CHECK(cycle_membership(m, n));
}

TEST_CASE("cycle membership on scaled matrices") {
  WeightedCycleMatrix b = build_scaled_matrix({2, ns({3, 7, 11})}, 2);
  CHECK(cycle_membership(b, 0));
  CHECK(cycle_membership(b, 6));
  CHECK_FALSE(cycle_membership(b, 7));   // odd powers keep a 3 in a denominator
  CHECK_FALSE(cycle_membership(b, 8));   // 8 = 2*4 and 4 is not in <3,7,11>
  CHECK(cycle_membership(b, 14));

  WeightedCycleMatrix c = build_scaled_matrix(normalize(GeneratorInput::of({6, 8, 10})), 2);
  CHECK_FALSE(cycle_membership(c, 7));
  CHECK(cycle_membership(c, 8));
  CHECK(cycle_membership(c, 6));
  CHECK_FALSE(cycle_membership(c, 4));
}

TEST_CASE("cycle membership handles astronomically large exponents") {
  WeightedCycleMatrix m = build_theorem_matrix(ns({6, 9, 20}), 2);
  CHECK(cycle_membership(m, 4'000'000'000'000'000'000));
  CHECK(cycle_membership(m, std::numeric_limits<Int>::max()));
  WeightedCycleMatrix scaled = build_scaled_matrix({2, ns({3, 7, 11})}, 2);
  CHECK(cycle_membership(scaled, 4'000'000'000'000'000'000));       // even
  CHECK_FALSE(cycle_membership(scaled, 4'000'000'000'000'000'001));  // odd
}

TEST_CASE("cycle apery") {
  CHECK(cycle_apery(build_theorem_matrix(ns({6, 9, 20}), 2)).values ==
        std::vector<Int>{0, 49, 20, 9, 40, 29});
  CHECK(cycle_apery(build_theorem_matrix(ns({2, 3}), 5)).values ==
        std::vector<Int>{0, 3});
  CHECK(cycle_apery(build_theorem_matrix(ns({7, 54, 66}), 2)).values ==
        std::vector<Int>{0, 120, 198, 66, 186, 54, 132});
}

TEST_CASE("cycle apery with a negative base") {
  WeightedCycleMatrix m = build_theorem_matrix(ns({2, 3}), -2);
  CHECK(m.weight(0) == 4);
  CHECK(m.weight(1) == rat("-1/2"));
  CHECK(cycle_apery(m).values == std::vector<Int>{0, 3});
}

TEST_CASE("cycle apery error cases") {
  // weight product 1/2: powers of m never become integral again
  WeightedCycleMatrix shrinking({rat("1/2"), Rational(1)});
  CHECK_THROWS_WITH_AS(cycle_apery(shrinking), doctest::Contains("not closed under +m"),
                       std::domain_error);
  // weight product 1 but residue 1 has a permanent 2-adic deficit
  WeightedCycleMatrix stuck({Rational(2), rat("1/2")});
  CHECK_THROWS_WITH_AS(cycle_apery(stuck), doctest::Contains("residue class empty"),
                       std::domain_error);
}

TEST_CASE("valuation profile bookkeeping") {
  WeightedCycleMatrix b = build_scaled_matrix({2, ns({3, 7, 11})}, 2);
  ValuationProfile profile = ValuationProfile::of(b.weights());
  REQUIRE(profile.entries.size() == 2);
  CHECK(profile.entries[0].prime == 2);
  CHECK(profile.entries[1].prime == 3);
  for (const auto& entry : profile.entries) {
    Int sum = 0;
    for (Int v : entry.vals) sum += v;
    CHECK(sum == entry.product_val);
  }
  CHECK(profile.entries[0].product_val == 1);  // product of weights is 2
  CHECK(profile.entries[1].product_val == 0);
}

TEST_CASE("dense powering window") {
  MembershipWindow id = dense_power_membership(DenseRationalMatrix::identity(4), 10);
  for (bool m : id.members) CHECK(m);

  DenseRationalMatrix a(2);  // the pseudosymmetric 2x2 representative of <3,5,7>
  a.set(0, 0, 1);
  a.set(0, 1, rat("-3/16"));
  a.set(1, 0, 16);
  a.set(1, 1, 1);
  MembershipWindow w = dense_power_membership(a, 50);
  std::vector<bool> expect = oracle::sieve({3, 5, 7}, 50);
  CHECK(w.members == expect);

  MembershipWindow v =
      dense_power_membership(to_dense(build_theorem_matrix(ns({5, 11}), 2)), 60);
  CHECK(v.members == oracle::sieve({5, 11}, 60));

  CHECK_THROWS_AS(dense_power_membership(a, 0), std::invalid_argument);
}

TEST_CASE("triple-scaled <2,3> marks exactly 3*<2,3>") {
  WeightedCycleMatrix b = build_scaled_matrix({3, ns({2, 3})}, 2);
  MembershipWindow w = dense_power_membership(to_dense(b), 30);
  std::vector<bool> quotient = oracle::sieve({2, 3}, 10);
  for (Int n = 0; n <= 30; ++n) {
    const bool expect = (n % 3 == 0) && quotient[static_cast<size_t>(n / 3)];
    CHECK(w.members[static_cast<size_t>(n)] == expect);
    CHECK(cycle_membership(b, n) == expect);
  }
}

TEST_CASE("scaled trivial quotient marks the even numbers") {
  WeightedCycleMatrix m = build_scaled_matrix({2, ns({1})}, 2);
  for (Int n = 0; n <= 20; ++n) CHECK(cycle_membership(m, n) == (n % 2 == 0));
}

TEST_CASE("block diagonal matrices intersect the exponent semigroups") {
  DenseRationalMatrix block = block_diagonal(
      {build_theorem_matrix(ns({2, 3}), 2), build_theorem_matrix(ns({3, 4}), 2)});
  CHECK(block.size() == 5);
  MembershipWindow w = dense_power_membership(block, 20);
  std::vector<bool> a = oracle::sieve({2, 3}, 20);
  std::vector<bool> b = oracle::sieve({3, 4}, 20);
  for (Int n = 0; n <= 20; ++n) {
    CHECK(w.members[static_cast<size_t>(n)] ==
          (a[static_cast<size_t>(n)] && b[static_cast<size_t>(n)]));
  }
}

TEST_CASE("the m-th power is the base times the identity") {
  NumericalSemigroup s = ns({5, 11});
  DenseRationalMatrix a = to_dense(build_theorem_matrix(s, 2));
  DenseRationalMatrix p = DenseRationalMatrix::identity(a.size());
  for (Int n = 0; n < s.multiplicity(); ++n) p = p * a;
  for (Int i = 0; i < a.size(); ++i) {
    for (Int j = 0; j < a.size(); ++j) {
      CHECK(p.at(i, j) == (i == j ? Rational(2) : Rational(0)));
    }
  }
}

TEST_CASE("window membership starts at the identity") {
  DenseRationalMatrix half(1);
  half.set(0, 0, rat("1/2"));
  MembershipWindow w = dense_power_membership(half, 5);
  CHECK(w.members[0]);
  for (Int n = 1; n <= 5; ++n) CHECK_FALSE(w.members[static_cast<size_t>(n)]);
}

TEST_CASE("verify construction") {
  VerificationReport r1 = verify_construction(ns({6, 9, 20}), 2);
  CHECK(r1.passed);
  REQUIRE(r1.checks.size() == 2);
  CHECK(r1.checks[0].name == "cycle-apery");
  CHECK(r1.checks[1].name == "dense-window");

  VerificationReport r2 = verify_construction(ns({2, 3}), -2);
  CHECK(r2.passed);

  VerificationReport r3 = verify_construction(ns({3, 5, 7}), 10, 25);
  CHECK(r3.passed);

  CHECK_THROWS_AS(verify_construction(ns({1}), 2), std::invalid_argument);
}
