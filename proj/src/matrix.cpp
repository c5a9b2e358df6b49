#include "nsmat/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace nsmat {

namespace {

void require_base(const Integer& b) {
  if (b == 0 || b == 1 || b == -1) {
    throw std::invalid_argument("base must lie outside {-1, 0, 1}");
  }
}

// Exact exponent x with value == base^x, if one exists.
std::optional<Int> log_of(const Rational& value, const Integer& base) {
  if (value == 1) return 0;
  Integer mag;
  mpz_abs(mag.get_mpz_t(), base.get_mpz_t());
  Integer rest;
  Int x;
  if (value.get_den() == 1) {
    Integer num = value.get_num();
    mpz_abs(num.get_mpz_t(), num.get_mpz_t());
    x = static_cast<Int>(mpz_remove(rest.get_mpz_t(), num.get_mpz_t(), mag.get_mpz_t()));
  } else {
    x = -static_cast<Int>(
        mpz_remove(rest.get_mpz_t(), value.get_den().get_mpz_t(), mag.get_mpz_t()));
  }
  if (rest != 1) return std::nullopt;
  if (rational_pow(base, x) != value) return std::nullopt;  // sign check
  return x;
}

}  // namespace

ExponentVector exponent_vector(const AperyVector& apery) {
  const Int m = apery.multiplicity();
  if (m < 2) throw std::domain_error("exponent vector needs multiplicity >= 2");
  ExponentVector x;
  x.values.reserve(static_cast<size_t>(m));
  Int sum = 0;
  for (Int i = 0; i < m; ++i) {
    const Int prev = apery.values[static_cast<size_t>((i + m - 1) % m)];
    const Int cur = apery.values[static_cast<size_t>(i)];
    const Int num = prev - cur + 1;
    if (num % m != 0) {
      throw std::logic_error("corrupted Apery vector: a_" + std::to_string(i - 1) +
                             " - a_" + std::to_string(i) + " + 1 is not divisible by m");
    }
    x.values.push_back(num / m);
    sum += num / m;
  }
  if (sum != 1) throw std::logic_error("corrupted Apery vector: exponents sum to " + std::to_string(sum));
  return x;
}

WeightedCycleMatrix::WeightedCycleMatrix(std::vector<Rational> weights,
                                         std::optional<Integer> base)
    : weights_(std::move(weights)), base_(std::move(base)) {
  if (weights_.empty()) throw std::invalid_argument("cycle matrix needs size >= 1");
  for (auto& w : weights_) {
    w.canonicalize();
    if (w == 0) throw std::invalid_argument("cycle matrix weights must be nonzero");
  }
  if (base_) {
    require_base(*base_);
    for (size_t i = 0; i < weights_.size(); ++i) {
      auto x = log_of(weights_[i], *base_);
      if (!x) {
        throw std::invalid_argument("weight z_" + std::to_string(i) +
                                    " is not an exact power of the recorded base");
      }
    }
  }
}

DenseRationalMatrix::DenseRationalMatrix(Int size)
    : size_(size), entries_(static_cast<size_t>(size) * static_cast<size_t>(size)) {
  if (size < 1) throw std::invalid_argument("matrix size must be positive");
}

DenseRationalMatrix DenseRationalMatrix::identity(Int size) {
  DenseRationalMatrix m(size);
  for (Int i = 0; i < size; ++i) m.set(i, i, 1);
  return m;
}

const Rational& DenseRationalMatrix::at(Int row, Int col) const {
  return entries_[static_cast<size_t>(row * size_ + col)];
}

void DenseRationalMatrix::set(Int row, Int col, Rational value) {
  value.canonicalize();
  entries_[static_cast<size_t>(row * size_ + col)] = std::move(value);
}

bool DenseRationalMatrix::is_integral() const {
  for (const auto& e : entries_) {
    if (e.get_den() != 1) return false;
  }
  return true;
}

DenseRationalMatrix DenseRationalMatrix::operator*(const DenseRationalMatrix& rhs) const {
  if (size_ != rhs.size_) throw std::invalid_argument("matrix size mismatch");
  DenseRationalMatrix out(size_);
  for (Int i = 0; i < size_; ++i) {
    for (Int k = 0; k < size_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (Int j = 0; j < size_; ++j) {
        const Rational& b = rhs.at(k, j);
        if (b == 0) continue;
        out.entries_[static_cast<size_t>(i * size_ + j)] += a * b;
      }
    }
  }
  return out;
}

WeightedCycleMatrix build_theorem_matrix(const NumericalSemigroup& s, const Integer& b) {
  require_base(b);
  if (s.is_trivial()) {
    throw std::invalid_argument(
        "trivial semigroup has no theorem matrix; the 1x1 scalar matrix [b] represents N");
  }
  ExponentVector x = exponent_vector(s.apery());
  std::vector<Rational> weights;
  weights.reserve(x.values.size());
  for (Int xi : x.values) weights.push_back(rational_pow(b, xi));
  return WeightedCycleMatrix(std::move(weights), b);
}

WeightedCycleMatrix scalar_matrix(const Integer& b) {
  require_base(b);
  return WeightedCycleMatrix({Rational(b)}, b);
}

Integer auxiliary_prime(const Integer& b) {
  Integer p = 2;
  while (mpz_divisible_p(b.get_mpz_t(), p.get_mpz_t())) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  return p;
}

WeightedCycleMatrix build_scaled_matrix(const ScaledSemigroup& scaled, const Integer& b) {
  require_base(b);
  if (scaled.scale < 1) throw std::invalid_argument("scale must be positive");
  const Int d = scaled.scale;
  const NumericalSemigroup& t = scaled.quotient;

  std::vector<Int> x;
  if (t.is_trivial()) {
    x = {1};  // the 1x1 representative of N is [b] = [b^1]
  } else {
    x = exponent_vector(t.apery()).values;
  }
  const Int m = static_cast<Int>(x.size());

  if (d == 1) {
    std::vector<Rational> weights;
    weights.reserve(static_cast<size_t>(m));
    for (Int xi : x) weights.push_back(rational_pow(b, xi));
    return WeightedCycleMatrix(std::move(weights), b);
  }

  const Integer p = auxiliary_prime(b);
  Integer p_pow;  // p^{d-1}
  mpz_pow_ui(p_pow.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d - 1));
  const Rational inv_p = [&] {
    Rational r(1, p);
    r.canonicalize();
    return r;
  }();

  std::vector<Rational> weights(static_cast<size_t>(d * m), inv_p);
  for (Int k = 0; k < m; ++k) {
    Rational w = Rational(p_pow) * rational_pow(b, x[static_cast<size_t>(k)]);
    w.canonicalize();
    weights[static_cast<size_t>(k * d)] = w;
  }
  return WeightedCycleMatrix(std::move(weights));
}

Rational determinant(const WeightedCycleMatrix& m) {
  Rational prod = 1;
  for (const auto& w : m.weights()) prod *= w;
  if (m.size() % 2 == 0) prod = -prod;
  prod.canonicalize();
  return prod;
}

DenseRationalMatrix to_dense(const WeightedCycleMatrix& m) {
  const Int n = m.size();
  if (n == 1) {
    DenseRationalMatrix out(1);
    out.set(0, 0, m.weight(0));
    return out;
  }
  DenseRationalMatrix out(n);
  for (Int i = 1; i < n; ++i) out.set(i - 1, i, m.weight(i));
  out.set(n - 1, 0, m.weight(0));
  return out;
}

DenseRationalMatrix block_diagonal(const std::vector<WeightedCycleMatrix>& parts) {
  if (parts.empty()) throw std::invalid_argument("block_diagonal needs at least one part");
  Int total = 0;
  for (const auto& p : parts) total += p.size();
  DenseRationalMatrix out(total);
  Int offset = 0;
  for (const auto& p : parts) {
    DenseRationalMatrix d = to_dense(p);
    for (Int i = 0; i < d.size(); ++i) {
      for (Int j = 0; j < d.size(); ++j) {
        if (d.at(i, j) != 0) out.set(offset + i, offset + j, d.at(i, j));
      }
    }
    offset += d.size();
  }
  return out;
}

}  // namespace nsmat
