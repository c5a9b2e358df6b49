#include "nsmat/exponent.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nsmat {

namespace {

// Pairwise-coprime base of a set of integers >= 2 (factor refinement):
// repeatedly split overlapping pairs until every pair is coprime. Every
// input then factors exactly as a product of powers of base elements.
std::vector<Integer> coprime_base(std::vector<Integer> values) {
  std::vector<Integer> base;
  auto push = [&base](const Integer& v) {
    if (v > 1 && std::find(base.begin(), base.end(), v) == base.end()) base.push_back(v);
  };
  for (const auto& v : values) push(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < base.size() && !changed; ++i) {
      for (size_t j = i + 1; j < base.size() && !changed; ++j) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), base[i].get_mpz_t(), base[j].get_mpz_t());
        if (g == 1) continue;
        Integer a = base[i] / g;
        Integer b = base[j] / g;
        base.erase(base.begin() + static_cast<long>(j));
        base.erase(base.begin() + static_cast<long>(i));
        push(g);
        push(a);
        push(b);
        changed = true;
      }
    }
  }
  return base;
}

// Split a base element into primes where trial division reaches; larger
// coprime cofactors stay as units of the profile, which is just as exact.
std::vector<Integer> split_small_primes(const Integer& value) {
  std::vector<Integer> out;
  Integer rest = value;
  for (Int p = 2; p <= 4096 && rest > 1; p == 2 ? p = 3 : p += 2) {
    Integer pz(static_cast<long>(p));
    if (mpz_divisible_p(rest.get_mpz_t(), pz.get_mpz_t())) {
      out.push_back(pz);
      while (mpz_divisible_p(rest.get_mpz_t(), pz.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), pz.get_mpz_t());
      }
    }
  }
  if (rest > 1) out.push_back(rest);
  return out;
}

Int valuation(const Integer& value, const Integer& unit) {
  Int v = 0;
  Integer cur = value;
  while (cur != 0 && mpz_divisible_p(cur.get_mpz_t(), unit.get_mpz_t())) {
    mpz_divexact(cur.get_mpz_t(), cur.get_mpz_t(), unit.get_mpz_t());
    ++v;
  }
  return v;
}

// Minimum over all start positions i of the r-step consecutive sum of
// vals (indices mod m). r < m.
Int min_path_sum(const std::vector<Int>& vals, Int r) {
  const Int m = static_cast<Int>(vals.size());
  std::vector<Int> prefix(static_cast<size_t>(2 * m) + 1, 0);
  for (Int j = 0; j < 2 * m; ++j) {
    prefix[static_cast<size_t>(j + 1)] =
        prefix[static_cast<size_t>(j)] + vals[static_cast<size_t>(j % m)];
  }
  Int best = 0;
  bool first = true;
  for (Int i = 0; i < m; ++i) {
    Int sum = prefix[static_cast<size_t>(i + r)] - prefix[static_cast<size_t>(i)];
    if (first || sum < best) best = sum, first = false;
  }
  return best;
}

}  // namespace

ValuationProfile ValuationProfile::of(const std::vector<Rational>& weights) {
  std::vector<Integer> sources;
  for (const auto& w : weights) {
    Integer num = w.get_num();
    mpz_abs(num.get_mpz_t(), num.get_mpz_t());
    if (num > 1) sources.push_back(num);
    if (w.get_den() > 1) sources.push_back(w.get_den());
  }
  std::vector<Integer> units;
  for (const auto& u : coprime_base(std::move(sources))) {
    for (const auto& piece : split_small_primes(u)) {
      if (std::find(units.begin(), units.end(), piece) == units.end()) units.push_back(piece);
    }
  }
  std::sort(units.begin(), units.end());

  ValuationProfile profile;
  for (const auto& unit : units) {
    Entry entry;
    entry.prime = unit;
    entry.product_val = 0;
    for (const auto& w : weights) {
      Integer num = w.get_num();
      mpz_abs(num.get_mpz_t(), num.get_mpz_t());
      Int v = valuation(num, unit) - valuation(w.get_den(), unit);
      entry.vals.push_back(v);
      entry.product_val += v;
    }
    profile.entries.push_back(std::move(entry));
  }

  // The base must account for every weight exactly.
  for (size_t wi = 0; wi < weights.size(); ++wi) {
    Integer num = weights[wi].get_num();
    mpz_abs(num.get_mpz_t(), num.get_mpz_t());
    Integer den = weights[wi].get_den();
    for (const auto& entry : profile.entries) {
      const Int v = entry.vals[wi];
      for (Int k = 0; k < (v > 0 ? v : -v); ++k) {
        Integer& target = v > 0 ? num : den;
        mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), entry.prime.get_mpz_t());
      }
    }
    if (num != 1 || den != 1) {
      throw std::logic_error("valuation profile failed to factor weight " +
                             std::to_string(wi));
    }
  }
  return profile;
}

bool cycle_membership(const WeightedCycleMatrix& m, Int n) {
  if (n < 0) return false;
  const Int size = m.size();
  const Int q = n / size;
  const Int r = n % size;
  ValuationProfile profile = ValuationProfile::of(m.weights());
  for (const auto& entry : profile.entries) {
    // 128-bit product: q can be near the 64-bit limit
    const __int128 total = static_cast<__int128>(q) * entry.product_val +
                           min_path_sum(entry.vals, r);
    if (total < 0) return false;
  }
  return true;
}

AperyVector cycle_apery(const WeightedCycleMatrix& m) {
  const Int size = m.size();
  ValuationProfile profile = ValuationProfile::of(m.weights());
  for (const auto& entry : profile.entries) {
    if (entry.product_val < 0) {
      throw std::domain_error("not closed under +m: weight product has valuation " +
                              std::to_string(entry.product_val) + " at " +
                              entry.prime.get_str());
    }
  }
  AperyVector apery;
  apery.values.reserve(static_cast<size_t>(size));
  for (Int r = 0; r < size; ++r) {
    Int q_min = 0;
    for (const auto& entry : profile.entries) {
      const Int shortfall = -min_path_sum(entry.vals, r);
      if (shortfall <= 0) continue;
      if (entry.product_val == 0) {
        throw std::domain_error("residue class empty: residue " + std::to_string(r) +
                                " never becomes integral at " + entry.prime.get_str());
      }
      q_min = std::max(q_min, (shortfall + entry.product_val - 1) / entry.product_val);
    }
    apery.values.push_back(q_min * size + r);
  }
  return apery;
}

MembershipWindow dense_power_membership(const DenseRationalMatrix& a, Int limit) {
  if (limit < 1) throw std::invalid_argument("window limit must be positive");
  MembershipWindow window;
  window.limit = limit;
  window.members.resize(static_cast<size_t>(limit) + 1);
  window.members[0] = true;  // A^0 = I
  DenseRationalMatrix power = DenseRationalMatrix::identity(a.size());
  for (Int n = 1; n <= limit; ++n) {
    power = power * a;
    window.members[static_cast<size_t>(n)] = power.is_integral();
  }
  return window;
}

VerificationReport verify_construction(const NumericalSemigroup& s, const Integer& b,
                                       Int window_limit) {
  WeightedCycleMatrix matrix = build_theorem_matrix(s, b);
  VerificationReport report;

  AperyVector from_matrix = cycle_apery(matrix);
  CheckResult apery_check{"cycle-apery", true, ""};
  for (Int i = 0; i < s.multiplicity(); ++i) {
    const Int got = from_matrix.values[static_cast<size_t>(i)];
    const Int want = s.apery().values[static_cast<size_t>(i)];
    if (got != want) {
      apery_check.passed = false;
      apery_check.detail = "residue " + std::to_string(i) + ": matrix gives " +
                           std::to_string(got) + ", semigroup gives " + std::to_string(want);
      break;
    }
  }
  report.checks.push_back(apery_check);

  const Int limit =
      window_limit >= 1 ? window_limit : s.conductor() + 2 * s.multiplicity();
  MembershipWindow window = dense_power_membership(to_dense(matrix), limit);
  CheckResult window_check{"dense-window", true, ""};
  for (Int n = 0; n <= limit; ++n) {
    const bool got = window.members[static_cast<size_t>(n)];
    const bool want = s.contains(n);
    if (got != want) {
      window_check.passed = false;
      window_check.detail = "power " + std::to_string(n) + ": matrix " +
                            (got ? "integral" : "non-integral") + ", semigroup " +
                            (want ? "member" : "non-member");
      break;
    }
  }
  window_check.detail = window_check.passed
                            ? "window [0, " + std::to_string(limit) + "]"
                            : window_check.detail;
  report.checks.push_back(window_check);

  for (const auto& c : report.checks) report.passed = report.passed && c.passed;
  return report;
}

}  // namespace nsmat
