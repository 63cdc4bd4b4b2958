#pragma once

// Characteristic polynomials f(x) = x^k - q1 x^(k-1) - ... - q(k-1) x - qk and
// their roots.
//
// Every function that returns a high-precision value opens its own
// PrecisionScope. Returned numbers keep the precision they were computed at;
// further arithmetic on them runs at the caller's current default precision.

#include "knacci/numeric.hpp"
#include "knacci/seqcore.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace knacci {

struct CharPoly {
  /// q1..qk; the polynomial is monic by construction.
  std::vector<Rational> coeffs;

  std::size_t degree() const { return coeffs.size(); }
  /// q1 >= ... >= qk >= 1, the hypothesis of the root-location bounds.
  bool wu_zhang_ordered() const;
};

CharPoly charpoly_of(const RecurrenceSpec& spec);
/// Throws std::invalid_argument for periodic specs: there is no single
/// characteristic polynomial.
CharPoly charpoly_of(const AnySpec& spec);

/// Horner evaluation of f at x for any MPFR-backed scalar (real or complex).
template <typename Scalar>
Scalar evaluate_charpoly(const std::vector<Real>& q, const Scalar& x) {
  Scalar acc = Scalar(1);
  for (const Real& qi : q) acc = acc * x - Scalar(qi);
  return acc;
}

std::vector<Real> real_coefficients(const CharPoly& p);

/// Unique positive root alpha with |f(alpha)| < 10^-precision.
///
/// Under the Wu-Zhang ordering the search starts from the bracket
/// (q1, q1 + 1) and the result is checked to lie strictly inside it. Otherwise
/// the largest sign change on (0, 1 + sum|qi|] is used. Throws
/// std::domain_error when no sign change exists.
Real dominant_root(const CharPoly& p, unsigned precision = kDefaultPrecision);

/// Dominant root of x^k - x^(k-1) - ... - 1, cross-checked against
/// x^k (2 - x) = 1.
Real knacci_constant(std::size_t k, unsigned precision = kDefaultPrecision);

struct RootSet {
  Real dominant;
  std::vector<Complex> others;
  Real moduli_bound;  // max |root| over `others`
  Real residual;      // |f(dominant)|
  bool ordered = false;
  /// Set when some non-dominant root has modulus within 1e-9 of the unit circle.
  bool near_unit_circle = false;
  std::size_t iterations = 0;
};

/// All k roots by Weierstrass (Durand-Kerner) simultaneous iteration, with
/// the dominant root refined separately. Under the Wu-Zhang ordering the
/// non-dominant roots must lie inside the unit circle; a violation beyond
/// rounding throws std::runtime_error, as does non-convergence.
RootSet all_roots(const CharPoly& p, unsigned precision = kDefaultPrecision);

/// A(i;k) = (r - 1) / (2 + (k+1)(r - 2)). Throws std::domain_error on a
/// vanishing denominator.
Complex dresden_coefficient(const Complex& root, std::size_t k);

/// Closed-form value of the k-nacci-like term with the given inits, summing
/// A(i;k) alpha_i^e over all roots of the k-nacci polynomial. Requires n >= 2.
/// Throws std::range_error if the imaginary residue exceeds 10^(-precision/2).
Real dresden_exact_sum(const std::vector<Rational>& inits, std::size_t n,
                       unsigned precision = kDefaultPrecision);

/// Round(A(k) * alpha^(n-k+1)) from the dominant root alone; equals the n-th
/// k-nacci term for every n >= 0.
Integer dresden_round(std::size_t k, std::size_t n);

class RepeatedRootError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// (alpha^n - beta^n) / (alpha - beta) with alpha, beta the roots of
/// x^2 - p x - q. Requires p^2 + 4q > 0; a zero discriminant throws
/// RepeatedRootError, a negative one std::domain_error.
Real horadam_binet(const Rational& p, const Rational& q, std::size_t n,
                   unsigned precision = kDefaultPrecision);

}  // namespace knacci
