#include "knacci/numeric.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace knacci {

namespace {

std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Decimal digits only; a leading 0 would otherwise select octal.
Integer decimal_integer(std::string_view digits) {
  const auto nz = digits.find_first_not_of('0');
  return nz == std::string_view::npos ? Integer(0) : Integer(std::string(digits.substr(nz)));
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("malformed integer");
  const Integer v = decimal_integer(s);
  return negative ? Integer(-v) : v;
}

Integer pow10(unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

PrecisionScope::PrecisionScope(unsigned digits10)
    : lock_(precision_mutex()), saved_(Real::default_precision()), digits_(digits10) {
  Real::default_precision(digits10);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  try {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      Integer num = parse_integer(text.substr(0, slash));
      std::string_view den_text = text.substr(slash + 1);
      if (!all_digits(den_text)) throw std::invalid_argument("bad denominator");
      const Integer den = decimal_integer(den_text);
      if (den == 0) throw std::invalid_argument("zero denominator");
      return Rational(num, den);
    }

    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
      negative = text.front() == '-';
      text.remove_prefix(1);
    }

    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      Integer ev = parse_integer(text.substr(e + 1));
      if (abs(ev) > 100000) throw std::invalid_argument("exponent out of range");
      exponent = ev.convert_to<long>();
      text = text.substr(0, e);
    }

    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      int_part = text.substr(0, dot);
      frac_part = text.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw std::invalid_argument("empty literal");
    if (!int_part.empty() && !all_digits(int_part)) throw std::invalid_argument("bad digits");
    if (!frac_part.empty() && !all_digits(frac_part)) throw std::invalid_argument("bad digits");

    const Integer mantissa = decimal_integer(std::string(int_part) + std::string(frac_part));
    long scale = static_cast<long>(frac_part.size()) - exponent;
    Rational value = scale >= 0 ? Rational(mantissa, pow10(static_cast<unsigned>(scale)))
                                : Rational(mantissa * pow10(static_cast<unsigned>(-scale)));
    return negative ? Rational(-value) : value;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse rational '" + original + "'");
  }
}

std::string to_string(const Rational& value) {
  if (mp::denominator(value) == 1) return mp::numerator(value).str();
  return mp::numerator(value).str() + "/" + mp::denominator(value).str();
}

std::string to_decimal(const Real& value, unsigned digits) {
  return value.str(static_cast<std::streamsize>(digits));
}

Real to_real(const Rational& value) { return Real(value); }

Real epsilon_digits(int digits) { return pow(Real(10), -digits); }

bool is_integer(const Rational& value) { return mp::denominator(value) == 1; }

}  // namespace knacci
