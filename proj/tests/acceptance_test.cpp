// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Budgeted criteria also fail when they run over.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsmat/analysis.hpp"
#include "nsmat/exponent.hpp"
#include "oracles.hpp"

using namespace nsmat;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw Failure(msg);
}

NumericalSemigroup ns(const std::vector<Int>& gens) {
  return NumericalSemigroup::from_generators(gens);
}

Rational rat(const std::string& s) { return parse_rational(s); }

std::vector<Rational> layout(const WeightedCycleMatrix& m) {
  std::vector<Rational> out;
  for (Int i = 1; i < m.size(); ++i) out.push_back(m.weight(i));
  out.push_back(m.weight(0));
  return out;
}

std::string join(const std::vector<Int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// Shared pool of random generator sets (gcd 1, 2 <= m <= 20, c <= 400),
// filled by criterion 7 and reused by criterion 8.
std::vector<std::vector<Int>> random_pool;

void fill_random_pool(size_t count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&rng](Int lo, Int hi) {
    return lo + static_cast<Int>(rng() % static_cast<uint64_t>(hi - lo + 1));
  };
  random_pool.clear();
  while (random_pool.size() < count) {
    const Int m = pick(2, 20);
    std::vector<Int> gens = {m};
    const Int extras = pick(1, 4);
    for (Int i = 0; i < extras; ++i) gens.push_back(pick(m + 1, 3 * m + pick(1, 40)));
    Int d = 0;
    for (Int g : gens) d = std::gcd(d, g);
    if (d != 1) continue;
    NumericalSemigroup s = ns(gens);
    if (s.conductor() > 400) continue;
    random_pool.push_back(gens);
  }
}

// --- criteria ---------------------------------------------------------

void criterion_mcnugget() {
  NumericalSemigroup s = ns({6, 9, 20});
  require(s.apery().values == std::vector<Int>{0, 49, 20, 9, 40, 29}, "apery mismatch");
  require(s.conductor() == 44, "conductor mismatch");
  require(exponent_vector(s.apery()).values == std::vector<Int>{5, -8, 5, 2, -5, 2},
          "exponent vector mismatch");
  WeightedCycleMatrix m = build_theorem_matrix(s, 2);
  require(layout(m) == std::vector<Rational>{rat("1/256"), 32, 4, rat("1/32"), 4, 32},
          "base-2 weights mismatch");
  require(determinant(m) == -2, "determinant mismatch");
  VerificationReport report = verify_construction(s, 2);
  require(report.passed, "verification failed: " + report.checks.back().detail);
}

void criterion_five_eleven() {
  NumericalSemigroup s = ns({5, 11});
  require(s.apery().values == std::vector<Int>{0, 11, 22, 33, 44}, "apery mismatch");
  require(exponent_vector(s.apery()).values == std::vector<Int>{9, -2, -2, -2, -2},
          "exponent vector mismatch");
  require(cycle_apery(build_theorem_matrix(s, 2)) == s.apery(),
          "cycle apery does not reproduce the semigroup apery");
}

void criterion_scaled() {
  // Matrix for 2*<3,7,11>; the corner carries the full 3^{d-1} factor so
  // the weight product is the base (the dense window below fails without it).
  ScaledSemigroup scaled{2, ns({3, 7, 11})};
  WeightedCycleMatrix b = build_scaled_matrix(scaled, 2);
  require(layout(b) == std::vector<Rational>{rat("1/3"), rat("3/4"), rat("1/3"),
                                             rat("3/2"), rat("1/3"), 48},
          "scaled weights mismatch");
  MembershipWindow window = dense_power_membership(to_dense(b), 40);
  std::vector<bool> quotient = oracle::sieve({3, 7, 11}, 20);
  for (Int n = 0; n <= 40; ++n) {
    const bool expect = (n % 2 == 0) && quotient[static_cast<size_t>(n / 2)];
    require(window.members[static_cast<size_t>(n)] == expect,
            "scaled window diverges at " + std::to_string(n));
  }

  // The generated-set reading of the same example: {6,8,10} normalizes to
  // 2*<3,4,5> and its matrix marks exactly {0,6,8,10,12,...}.
  WeightedCycleMatrix c = build_scaled_matrix(normalize(GeneratorInput::of({6, 8, 10})), 2);
  MembershipWindow cw = dense_power_membership(to_dense(c), 40);
  std::vector<bool> expect_c = oracle::sieve({6, 8, 10}, 40);
  for (Int n = 0; n <= 40; ++n) {
    require(cw.members[static_cast<size_t>(n)] == expect_c[static_cast<size_t>(n)],
            "generated-set window diverges at " + std::to_string(n));
  }
}

void criterion_pseudosymmetric_2x2() {
  DenseRationalMatrix a(2);
  a.set(0, 0, 1);
  a.set(0, 1, rat("-3/16"));
  a.set(1, 0, 16);
  a.set(1, 1, 1);
  MembershipWindow w = dense_power_membership(a, 50);
  std::vector<bool> expect = oracle::sieve({3, 5, 7}, 50);
  for (Int n = 0; n <= 50; ++n) {
    require(w.members[static_cast<size_t>(n)] == expect[static_cast<size_t>(n)],
            "2x2 window diverges at " + std::to_string(n));
  }
}

void criterion_dimension_bounds() {
  auto has_rule = [](const DimensionBounds& b, const std::string& tag) {
    return std::any_of(b.rules.begin(), b.rules.end(),
                       [&](const BoundRule& r) { return r.tag == tag; });
  };

  DimensionBounds a = dimension_bounds(ns({7, 54, 66}));
  require(a.exact == 7 && has_rule(a, "run-lower"), "<7,54,66> should be exactly 7");
  require(run_lower_bound(ns({7, 54, 66})) == 7, "<7,54,66> run bound should be 7");

  DimensionBounds b = dimension_bounds(ns({39, 40, 47}));
  require(b.lower == 32 && b.upper == 39 && !b.exact,
          "<39,40,47> should be [32,39], got [" + std::to_string(b.lower) + "," +
              std::to_string(b.upper) + "]");
  require(run_lower_bound(ns({39, 40, 47})) == 32,
          "<39,40,47> run of 31 consecutive elements should give bound 32");

  DimensionBounds c = dimension_bounds(ns({6, 9, 20}));
  require(c.exact == 6 && has_rule(c, "symmetric-lower"),
          "<6,9,20> should be exactly 6 via the symmetric rule");

  DimensionBounds d = dimension_bounds(ns({3, 5, 7}));
  require(d.lower == 2 && d.upper == 3 && has_rule(d, "pseudosymmetric-midrange-lower"),
          "<3,5,7> should be [2,3] via the pseudosymmetric rule");
}

void criterion_decomposition() {
  // the literal five-generator semigroup: any valid decomposition works;
  // 12 is the provable minimum block (the factor missing gap 31 needs
  // multiplicity >= 7, the one missing gap 79 needs >= 5)
  NumericalSemigroup s = ns({15, 20, 21, 25, 26});
  IrreducibleDecomposition d = decompose_irreducible(s);
  Int window = s.conductor();
  for (const auto& f : d.factors) {
    window = std::max(window, f.conductor());
    SemigroupClass c = classify(f);
    require(c == SemigroupClass::Symmetric || c == SemigroupClass::Pseudosymmetric,
            "factor <" + join(f.minimal_generators()) + "> is not irreducible");
  }
  for (Int n = 0; n <= 200; ++n) {
    bool in_all = true;
    for (const auto& f : d.factors) in_all = in_all && f.contains(n);
    require(in_all == s.contains(n),
            "factor intersection diverges at " + std::to_string(n));
  }
  require(d.block_dimension == 12,
          "block dimension should be 12, got " + std::to_string(d.block_dimension));

  // the full intersection <3,11> cap <5,16> (conductor 60): here an 8x8
  // block-diagonal construction exists and the decomposition finds one
  NumericalSemigroup star = ns({15, 20, 21, 25, 26, 31, 32, 37, 48});
  require(star.conductor() == 60, "intersection semigroup conductor should be 60");
  IrreducibleDecomposition ds = decompose_irreducible(star);
  for (Int n = 0; n <= 200; ++n) {
    bool in_all = true;
    for (const auto& f : ds.factors) in_all = in_all && f.contains(n);
    require(in_all == star.contains(n),
            "intersection-semigroup factors diverge at " + std::to_string(n));
  }
  require(ds.block_dimension <= 8, "block dimension should be <= 8, got " +
                                       std::to_string(ds.block_dimension));

  DenseRationalMatrix block = block_diagonal(
      {build_theorem_matrix(ns({3, 11}), 2), build_theorem_matrix(ns({5, 16}), 2)});
  require(block.size() == 8, "block diagonal should be 8x8");
  const Int limit = star.conductor() + 10;
  MembershipWindow w = dense_power_membership(block, limit);
  for (Int n = 0; n <= limit; ++n) {
    require(w.members[static_cast<size_t>(n)] == star.contains(n),
            "8x8 block window diverges at " + std::to_string(n));
  }
}

void criterion_property_suite() {
  fill_random_pool(200, 424242);
  for (const auto& gens : random_pool) {
    NumericalSemigroup s = ns(gens);
    const Int m = s.multiplicity();
    const auto& a = s.apery().values;
    const std::string label = " for <" + join(gens) + ">";

    // (a) Kunz inequalities
    for (Int i = 0; i < m; ++i) {
      for (Int j = 0; j < m; ++j) {
        require(a[static_cast<size_t>(i)] + a[static_cast<size_t>(j)] >=
                    a[static_cast<size_t>((i + j) % m)],
                "Kunz inequality fails" + label);
      }
    }

    // (b) exponent vector sums to 1
    ExponentVector x = exponent_vector(s.apery());
    require(std::accumulate(x.values.begin(), x.values.end(), Int{0}) == 1,
            "exponent sum is not 1" + label);

    // (c) cycle apery reproduces the semigroup apery
    WeightedCycleMatrix matrix = build_theorem_matrix(s, 2);
    require(cycle_apery(matrix) == s.apery(), "cycle apery mismatch" + label);

    // (d) valuation route agrees with exact powering on [0, c + 2m]
    const Int limit = s.conductor() + 2 * m;
    MembershipWindow window = dense_power_membership(to_dense(matrix), limit);
    for (Int n = 0; n <= limit; ++n) {
      const bool via_cycle = cycle_membership(matrix, n);
      require(via_cycle == window.members[static_cast<size_t>(n)],
              "membership routes diverge at " + std::to_string(n) + label);
      require(via_cycle == s.contains(n),
              "membership diverges from the sieve at " + std::to_string(n) + label);
    }

    // (e) determinant is the signed base
    for (Int base : {2, -2, 3, 10}) {
      Rational expected(base);
      if (m % 2 == 0) expected = -expected;
      require(determinant(build_theorem_matrix(s, base)) == expected,
              "determinant mismatch at base " + std::to_string(base) + label);
    }
  }
}

void criterion_scalar_exclusion() {
  require(!random_pool.empty(), "random pool missing (criterion 7 must run first)");
  for (const auto& gens : random_pool) {
    NumericalSemigroup s = ns(gens);
    const std::string label = " for <" + join(gens) + ">";
    require(run_lower_bound(s) <= s.multiplicity(),
            "run bound exceeds multiplicity" + label);
    DimensionBounds b = dimension_bounds(s);
    require(b.lower >= 2, "lower bound below 2" + label);
    require(b.lower <= b.upper && b.upper <= s.multiplicity(),
            "bounds out of order" + label);
  }
}

struct Criterion {
  std::string name;
  std::function<void()> body;
  double budget_seconds;  // <= 0 means unbudgeted
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"criterion 1: <6,9,20> golden construction", criterion_mcnugget, 1.0},
      {"criterion 2: <5,11> golden construction", criterion_five_eleven, 0.0},
      {"criterion 3: scaled construction for 2*<3,7,11> and {6,8,10}", criterion_scaled, 0.0},
      {"criterion 4: pseudosymmetric 2x2 window equals <3,5,7>", criterion_pseudosymmetric_2x2,
       1.0},
      {"criterion 5: dimension bounds", criterion_dimension_bounds, 0.0},
      {"criterion 6: irreducible decompositions and 8x8 block diagonal",
       criterion_decomposition, 0.0},
      {"criterion 7: randomized property suite (200 cases)", criterion_property_suite, 60.0},
      {"criterion 8: scalar exclusion and run bound sanity", criterion_scalar_exclusion, 0.0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && c.budget_seconds > 0 && elapsed > c.budget_seconds) {
      std::ostringstream os;
      os << "exceeded the " << c.budget_seconds << " s budget";
      error = os.str();
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    if (error.empty()) {
      line << "PASS  " << c.name << "  (" << elapsed << " s)";
    } else {
      line << "FAIL  " << c.name << "  (" << elapsed << " s): " << error;
      ++failures;
    }
    std::cout << line.str() << std::endl;
  }
  if (failures == 0) {
    std::cout << "all " << criteria.size() << " criteria passed" << std::endl;
  } else {
    std::cout << failures << " criteria failed" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
