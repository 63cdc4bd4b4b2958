#pragma once

// Successive-ratio limits.
//
// A ratio sample is t(m + step) / t(m), stored under its numerator index
// n = m + step. The `even` / `odd` subsequences select samples by the parity of
// the denominator index m, i.e. they split the ratio sequence
// {t(m+1)/t(m)}_{m>=0} by position. For the two-periodic (a, b) sequence with
// step 1 this gives
//
//   even:  t(2m+1)/t(2m)   -> alpha/a
//   odd:   t(2m)/t(2m-1)   -> alpha/b
//
// with alpha = (ab + sqrt(a^2 b^2 + 4ab)) / 2, and step 2 gives alpha + 1.

#include "knacci/charpoly.hpp"
#include "knacci/numeric.hpp"
#include "knacci/seqcore.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace knacci {

enum class Subsequence { all, even, odd };

std::string to_string(Subsequence s);
Subsequence parse_subsequence(const std::string& text);

inline constexpr std::size_t kDefaultConstantNmax = 300;
inline constexpr std::size_t kDefaultPeriodicNmax = 400;

std::size_t default_nmax(const AnySpec& spec);

struct RatioSample {
  std::size_t n;  // numerator index
  Real ratio;
};

struct RatioReport {
  std::size_t step = 1;
  Subsequence subsequence = Subsequence::all;
  std::vector<RatioSample> samples;
  Real estimate;
  std::optional<Real> reference;
  std::optional<Real> gap;
  /// |ratio - reference| never increases over the last (up to) 20 samples.
  /// False when there is no reference.
  bool monotone_tail = false;
};

class ZeroDenominatorError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Ratios t(n)/t(n-step) for every selected n up to n_max, starting past any
/// zeros among the initial terms. Throws ZeroDenominatorError if a later term
/// vanishes and std::invalid_argument if the selection is empty.
RatioReport ratio_limit(const AnySpec& spec, std::size_t step = 1, Subsequence sub = Subsequence::all,
                        std::size_t n_max = 0, unsigned precision = kDefaultPrecision);

/// Analytic limit of the selected ratios, when one is known:
///   constant coefficients under the Wu-Zhang ordering: alpha^step;
///   two-periodic with a = b > 0: ((a + sqrt(a^2 + 4)) / 2)^step;
///   two-periodic with a != b, ab > 0: (alpha + 1)^(step/2) for even steps, times
///     alpha/a (even) or alpha/b (odd) for odd steps.
/// Anything else (including the `all` selection of a non-converging
/// two-periodic ratio, and every period >= 3) has no reference.
std::optional<Real> ratio_limit_reference(const AnySpec& spec, std::size_t step, Subsequence sub,
                                          unsigned precision = kDefaultPrecision);

/// alpha = (ab + sqrt(a^2 b^2 + 4ab)) / 2; requires ab > 0.
Real periodic2_alpha(const Rational& a, const Rational& b, unsigned precision = kDefaultPrecision);

/// A stated limit claim for the two-periodic family, checked by brute force.
struct LimitClaim {
  std::string label;       // e.g. "G(2n)/G(2n-1) -> alpha/a"
  Real claimed;            // value of the claimed closed form
  Real observed;           // brute-force ratio at the last matching index
  bool matches = false;    // |observed - claimed| < 1e-6
};

/// The limit assignments stated for F(a,b) (inits 0, 1) and G(a,b) (inits g0, g1):
/// F(2n)/F(2n-1) -> alpha/b, F(2n+1)/F(2n) -> alpha/a, F(n+2)/F(n) -> alpha+1,
/// G(2n)/G(2n-1) -> alpha/a, G(2n+1)/G(2n) -> alpha/b, G(n+2)/G(n) -> alpha+1.
std::vector<LimitClaim> periodic2_limit_claims(const Rational& a, const Rational& b, const Rational& g0,
                                               const Rational& g1, std::size_t n_max = kDefaultPeriodicNmax,
                                               unsigned precision = kDefaultPrecision);

struct AsymptoticFit {
  Real alpha;
  Real c;
  /// (n, |u(n)/alpha^n - c|) over the 20 indices preceding n_max.
  std::vector<std::pair<std::size_t, Real>> residual_trend;
};

/// u(n) ~ c alpha^n with c estimated as u(n_max)/alpha^n_max. Requires the
/// Wu-Zhang ordering and non-negative inits, not all zero. The working
/// precision is raised so that the residual tail is resolved.
AsymptoticFit asymptotic_fit(const RecurrenceSpec& spec, std::size_t n_max = kDefaultConstantNmax,
                             unsigned precision = kDefaultPrecision);

}  // namespace knacci
