#include "nsmat/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nsmat {

namespace {

// Hard cap on sieve length; keeps pathological inputs (huge coprime
// generators) from exhausting memory.
constexpr Int kMaxTableLength = 100'000'000;

std::vector<bool> sieve(const std::vector<Int>& gens, Int limit) {
  std::vector<bool> table(static_cast<size_t>(limit) + 1, false);
  table[0] = true;
  for (Int n = 1; n <= limit; ++n) {
    for (Int g : gens) {
      if (g > n) break;  // gens sorted ascending
      if (table[static_cast<size_t>(n - g)]) {
        table[static_cast<size_t>(n)] = true;
        break;
      }
    }
  }
  return table;
}

// First index where a run of `run_length` consecutive members starts,
// or -1 if none exists within the table.
Int find_run(const std::vector<bool>& table, Int run_length) {
  Int run = 0;
  for (Int n = 0; n < static_cast<Int>(table.size()); ++n) {
    run = table[static_cast<size_t>(n)] ? run + 1 : 0;
    if (run >= run_length) return n - run_length + 1;
  }
  return -1;
}

}  // namespace

GeneratorInput GeneratorInput::of(std::vector<Int> values) {
  if (values.empty()) throw std::invalid_argument("generator list is empty");
  for (Int v : values) {
    if (v < 1) {
      throw std::invalid_argument("generator " + std::to_string(v) +
                                  " is not a positive integer");
    }
  }
  return GeneratorInput{std::move(values)};
}

std::string to_string(SemigroupClass c) {
  switch (c) {
    case SemigroupClass::Trivial: return "trivial";
    case SemigroupClass::Symmetric: return "symmetric";
    case SemigroupClass::Pseudosymmetric: return "pseudosymmetric";
    case SemigroupClass::Neither: return "neither";
  }
  return "?";
}

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<Int>& values) {
  GeneratorInput input = GeneratorInput::of(values);
  std::vector<Int> gens = input.values;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Int d = 0;
  for (Int g : gens) d = std::gcd(d, g);
  if (d != 1) {
    throw std::invalid_argument("generators have gcd " + std::to_string(d) +
                                ": not a numerical semigroup");
  }

  NumericalSemigroup s;
  s.multiplicity_ = gens.front();
  const Int m = s.multiplicity_;
  if (m > kMaxTableLength / 4) {
    throw std::invalid_argument("conductor too large for desk-scale computation");
  }

  // Grow the sieve until m consecutive members appear; from that point
  // on every integer is a member, which pins down the conductor.
  // Oversized redundant generators never enter the table.
  Int bound = std::max<Int>(4 * m, 64);
  Int run_start;
  for (;;) {
    if (bound > kMaxTableLength) {
      throw std::invalid_argument("conductor too large for desk-scale computation");
    }
    s.table_ = sieve(gens, bound);
    run_start = find_run(s.table_, m);
    if (run_start >= 0) break;
    bound *= 2;
  }
  Int frobenius = -1;
  for (Int n = run_start - 1; n >= 0; --n) {
    if (!s.table_[static_cast<size_t>(n)]) {
      frobenius = n;
      break;
    }
  }
  s.frobenius_ = frobenius;
  s.conductor_ = frobenius + 1;

  // One table covering [0, c + 2m] serves every downstream query.
  const Int length = s.conductor_ + 2 * m;
  if (length > bound) s.table_ = sieve(gens, length);
  s.table_.resize(static_cast<size_t>(length) + 1);

  if (m == 1) {
    s.minimal_generators_ = {1};
  } else {
    // n is a minimal generator iff it is not a sum of two nonzero
    // elements; all candidates lie in [m, F + m].
    for (Int n = m; n <= s.frobenius_ + m; ++n) {
      if (!s.table_[static_cast<size_t>(n)]) continue;
      bool reducible = false;
      for (Int a = m; a <= n - m; ++a) {
        if (s.table_[static_cast<size_t>(a)] && s.table_[static_cast<size_t>(n - a)]) {
          reducible = true;
          break;
        }
      }
      if (!reducible) s.minimal_generators_.push_back(n);
    }
  }

  s.apery_.values.resize(static_cast<size_t>(m));
  for (Int i = 0; i < m; ++i) {
    Int a = i;
    while (!s.table_[static_cast<size_t>(a)]) a += m;  // a <= F + m fits the table
    s.apery_.values[static_cast<size_t>(i)] = a;
  }
  return s;
}

bool NumericalSemigroup::contains(Int n) const {
  if (n < 0) return false;
  if (n >= conductor_) return true;
  return table_[static_cast<size_t>(n)];
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  for (Int n = 1; n < conductor_; ++n) {
    if (!table_[static_cast<size_t>(n)]) out.push_back(n);
  }
  return out;
}

ScaledSemigroup normalize(const GeneratorInput& input) {
  GeneratorInput checked = GeneratorInput::of(input.values);
  Int d = 0;
  for (Int v : checked.values) d = std::gcd(d, v);
  std::vector<Int> reduced = checked.values;
  for (Int& v : reduced) v /= d;
  return ScaledSemigroup{d, NumericalSemigroup::from_generators(reduced)};
}

bool membership(const NumericalSemigroup& s, Int n) { return s.contains(n); }

const AperyVector& apery_set(const NumericalSemigroup& s) { return s.apery(); }

Int conductor(const NumericalSemigroup& s) { return s.conductor(); }

KunzCoordinates kunz_coordinates(const NumericalSemigroup& s) {
  if (s.is_trivial()) {
    throw std::domain_error("Kunz coordinates are undefined for the trivial semigroup");
  }
  const Int m = s.multiplicity();
  KunzCoordinates k;
  k.values.reserve(static_cast<size_t>(m - 1));
  for (Int i = 1; i < m; ++i) {
    k.values.push_back((s.apery().values[static_cast<size_t>(i)] - i) / m);
  }
  return k;
}

SemigroupClass classify(const NumericalSemigroup& s) {
  if (s.is_trivial()) return SemigroupClass::Trivial;
  const Int f = s.frobenius();
  bool symmetric = true;
  for (Int x = -1; x <= f + 1; ++x) {
    if (!s.contains(x) && !s.contains(f - x)) {
      symmetric = false;
      break;
    }
  }
  if (symmetric) return SemigroupClass::Symmetric;
  if (f % 2 == 0) {
    bool pseudo = true;
    for (Int x = -1; x <= f + 1; ++x) {
      if (!s.contains(x) && !s.contains(f - x) && 2 * x != f) {
        pseudo = false;
        break;
      }
    }
    if (pseudo) return SemigroupClass::Pseudosymmetric;
  }
  return SemigroupClass::Neither;
}

}  // namespace nsmat
