#include "nsmat/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace nsmat {

Rational rational_pow(const Integer& base, Int exp) {
  if (base == 0) throw std::invalid_argument("0 cannot be raised to a power here");
  Integer mag;
  mpz_pow_ui(mag.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(exp < 0 ? -exp : exp));
  Rational out = exp < 0 ? Rational(1, mag) : Rational(mag);
  out.canonicalize();
  return out;
}

std::string rational_str(const Rational& value) { return value.get_str(); }

Rational parse_rational(const std::string& text) {
  // Accept exactly [-]digits[/digits]; no spaces, signs on the numerator only.
  size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
  if (digits == 0) throw std::invalid_argument("malformed rational '" + text + "'");
  if (i < text.size()) {
    if (text[i] != '/') throw std::invalid_argument("malformed rational '" + text + "'");
    ++i;
    digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
    if (digits == 0 || i != text.size()) {
      throw std::invalid_argument("malformed rational '" + text + "'");
    }
  }
  Rational out;
  if (mpq_set_str(out.get_mpq_t(), text.c_str(), 10) != 0) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  if (out.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  out.canonicalize();
  return out;
}

}  // namespace nsmat
