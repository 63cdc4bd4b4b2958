#pragma once

// Scalar types shared by every module.
//
// Term values are exact GMP rationals. Root finding and ratio analysis run in
// MPFR floating point whose working precision is set per call through
// PrecisionScope.

#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <mutex>
#include <string>
#include <string_view>

namespace knacci {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Complex = mp::number<mp::complex_adaptor<mp::mpfr_float_backend<0>>, mp::et_off>;

/// Every sequence term is carried as an exact rational in lowest terms.
using ExactValue = Rational;

inline constexpr unsigned kDefaultPrecision = 50;

/// Sets the MPFR working precision (decimal digits) for the lifetime of the
/// object and restores the previous value afterwards.
///
/// MPFR's default precision is process-wide in Boost.Multiprecision, so
/// scopes serialize on a recursive mutex. Nested scopes on one thread are fine.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10);
  ~PrecisionScope();

  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  unsigned digits() const { return digits_; }

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned saved_;
  unsigned digits_;
};

/// Parses "p", "p/q", or a decimal literal such as "-0.25". Decimals are read
/// digit by digit, so "0.2" is exactly 1/5.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Fixed-notation decimal with `digits` significant digits.
std::string to_decimal(const Real& value, unsigned digits);

Real to_real(const Rational& value);

/// 10^(-digits) at the current working precision.
Real epsilon_digits(int digits);

bool is_integer(const Rational& value);

}  // namespace knacci
