#include "nsmat/analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nsmat {

namespace {

void require_nontrivial(const NumericalSemigroup& s, const char* what) {
  if (s.is_trivial()) {
    throw std::domain_error(std::string(what) + " is undefined for the trivial semigroup");
  }
}

// Grows S union (g, inf) to a semigroup that is maximal among those with
// Frobenius number g, hence irreducible. Candidates are adjoined
// smallest-first, which steers the result toward small multiplicity.
// Adding h to a semigroup T closes to union_k (T + k*h), so one forward
// sweep per adjunction suffices.
NumericalSemigroup complete_irreducible(const NumericalSemigroup& s, Int g) {
  const Int length = 2 * g + 4;
  std::vector<bool> table(static_cast<size_t>(length) + 1, false);
  for (Int n = 0; n <= length; ++n) {
    table[static_cast<size_t>(n)] = s.contains(n) || n > g;
  }

  bool grew = true;
  while (grew) {
    grew = false;
    for (Int h = 1; h < g; ++h) {
      if (table[static_cast<size_t>(h)]) continue;
      // g stays outside <T, h> iff g - k*h misses T for every k >= 1.
      bool absorbs_g = false;
      for (Int k = 1; g - k * h >= 0; ++k) {
        if (table[static_cast<size_t>(g - k * h)]) {
          absorbs_g = true;
          break;
        }
      }
      if (absorbs_g) continue;
      table[static_cast<size_t>(h)] = true;
      for (Int n = h; n <= length; ++n) {
        if (table[static_cast<size_t>(n - h)]) table[static_cast<size_t>(n)] = true;
      }
      grew = true;
      break;
    }
  }

  // Extract minimal generators; they all lie in [1, g + mu].
  Int mu = 1;
  while (!table[static_cast<size_t>(mu)]) ++mu;
  std::vector<Int> gens;
  for (Int n = mu; n <= g + mu && n <= length; ++n) {
    if (!table[static_cast<size_t>(n)]) continue;
    bool reducible = false;
    for (Int a = mu; a <= n - mu; ++a) {
      if (table[static_cast<size_t>(a)] && table[static_cast<size_t>(n - a)]) {
        reducible = true;
        break;
      }
    }
    if (!reducible) gens.push_back(n);
  }
  return NumericalSemigroup::from_generators(gens);
}

bool intersection_equals(const std::vector<NumericalSemigroup>& factors,
                         const NumericalSemigroup& s, Int window) {
  for (Int n = 0; n <= window; ++n) {
    bool in_all = true;
    for (const auto& t : factors) {
      if (!t.contains(n)) {
        in_all = false;
        break;
      }
    }
    if (in_all != s.contains(n)) return false;
  }
  return true;
}

}  // namespace

Int run_lower_bound(const NumericalSemigroup& s) {
  require_nontrivial(s, "run lower bound");
  Int best = 0;
  Int run = 0;
  for (Int n = 0; n <= s.frobenius(); ++n) {
    run = s.contains(n) ? run + 1 : 0;
    best = std::max(best, run);
  }
  // A run of m consecutive members below F would put F itself in S.
  if (best + 1 > s.multiplicity()) {
    throw std::logic_error("internal inconsistency: consecutive run of length " +
                           std::to_string(best) + " exceeds multiplicity bound");
  }
  return best + 1;
}

std::vector<Int> special_gaps(const NumericalSemigroup& s) {
  require_nontrivial(s, "special gap set");
  std::vector<Int> out;
  for (Int g : s.gaps()) {
    if (!s.contains(2 * g)) continue;
    bool special = true;
    for (Int x = 1; x < s.conductor(); ++x) {
      if (s.contains(x) && !s.contains(g + x)) {
        special = false;
        break;
      }
    }
    if (special) out.push_back(g);
  }
  return out;
}

IrreducibleDecomposition decompose_irreducible(const NumericalSemigroup& s) {
  require_nontrivial(s, "irreducible decomposition");
  std::vector<Int> sg = special_gaps(s);

  IrreducibleDecomposition result;
  if (sg.size() <= 1) {
    result.factors = {s};
    result.block_dimension = s.multiplicity();
    return result;
  }

  std::vector<NumericalSemigroup> factors;
  for (Int g : sg) {
    NumericalSemigroup t = complete_irreducible(s, g);
    if (std::find(factors.begin(), factors.end(), t) == factors.end()) {
      factors.push_back(std::move(t));
    }
  }

  Int window = s.conductor();
  for (const auto& t : factors) window = std::max(window, t.conductor());
  window += 1;
  if (!intersection_equals(factors, s, window)) {
    throw std::logic_error("irreducible completion factors do not intersect to S");
  }

  // Greedy pruning, dropping large-multiplicity factors first.
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    if (a.multiplicity() != b.multiplicity()) return a.multiplicity() > b.multiplicity();
    return a.minimal_generators() < b.minimal_generators();
  });
  size_t i = 0;
  while (i < factors.size()) {
    if (factors.size() > 1) {
      std::vector<NumericalSemigroup> trial;
      for (size_t j = 0; j < factors.size(); ++j) {
        if (j != i) trial.push_back(factors[j]);
      }
      if (intersection_equals(trial, s, window)) {
        factors = std::move(trial);
        continue;
      }
    }
    ++i;
  }

  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    if (a.multiplicity() != b.multiplicity()) return a.multiplicity() < b.multiplicity();
    return a.minimal_generators() < b.minimal_generators();
  });
  result.block_dimension = 0;
  for (const auto& t : factors) result.block_dimension += t.multiplicity();
  result.factors = std::move(factors);
  return result;
}

DimensionBounds dimension_bounds(const NumericalSemigroup& s) {
  DimensionBounds bounds;
  if (s.is_trivial()) {
    bounds.lower = bounds.upper = 1;
    bounds.exact = 1;
    bounds.rules = {{"trivial", "exact", 1}};
    return bounds;
  }

  const Int m = s.multiplicity();
  const Int c = s.conductor();
  Int lower = 1;
  Int upper = m;
  bounds.rules.push_back({"theorem-upper", "upper", m});

  switch (classify(s)) {
    case SemigroupClass::Symmetric:
      lower = m;
      bounds.rules.push_back({"symmetric-lower", "lower", m});
      break;
    case SemigroupClass::Pseudosymmetric:
      if (c <= m) {
        lower = 2;
        upper = std::min(upper, static_cast<Int>(2));
        bounds.rules.push_back({"pseudosymmetric-small-conductor", "exact", 2});
      } else if (c <= 2 * m) {
        lower = m - 1;
        bounds.rules.push_back({"pseudosymmetric-midrange-lower", "lower", m - 1});
        bounds.rules.push_back({"conjectured-exact", "note", m - 1});
      } else {
        lower = m;
        bounds.rules.push_back({"pseudosymmetric-large-conductor-lower", "lower", m});
      }
      break;
    case SemigroupClass::Neither: {
      lower = 2;
      bounds.rules.push_back({"scalar-exclusion", "lower", 2});
      const Int run = run_lower_bound(s);
      lower = std::max(lower, run);
      bounds.rules.push_back({"run-lower", "lower", run});
      const Int block = decompose_irreducible(s).block_dimension;
      if (block < m) {
        upper = block;
        bounds.rules.push_back({"block-upper", "upper", block});
      }
      break;
    }
    case SemigroupClass::Trivial:
      break;  // unreachable
  }

  if (lower > upper) throw std::logic_error("dimension bound rules crossed");
  bounds.lower = lower;
  bounds.upper = upper;
  if (lower == upper) bounds.exact = lower;
  return bounds;
}

}  // namespace nsmat
