#include "knacci/convergence.hpp"

#include <algorithm>
#include <cmath>

namespace knacci {

namespace {

bool selected(Subsequence sub, std::size_t denominator_index) {
  switch (sub) {
    case Subsequence::all: return true;
    case Subsequence::even: return denominator_index % 2 == 0;
    case Subsequence::odd: return denominator_index % 2 == 1;
  }
  return false;
}

// Last index n <= last with t(n)/t(n-step) selected by `numerator_parity`.
Real last_ratio(const std::vector<ExactValue>& t, std::size_t step, std::optional<std::size_t> numerator_parity) {
  std::size_t n = t.size() - 1;
  while (numerator_parity && n % 2 != *numerator_parity) --n;
  if (t[n - step] == 0) throw ZeroDenominatorError("zero term at index " + std::to_string(n - step));
  return to_real(t[n] / t[n - step]);
}

}  // namespace

std::string to_string(Subsequence s) {
  switch (s) {
    case Subsequence::all: return "all";
    case Subsequence::even: return "even";
    case Subsequence::odd: return "odd";
  }
  return "all";
}

Subsequence parse_subsequence(const std::string& text) {
  if (text == "all") return Subsequence::all;
  if (text == "even") return Subsequence::even;
  if (text == "odd") return Subsequence::odd;
  throw std::invalid_argument("subsequence must be all, even or odd");
}

std::size_t default_nmax(const AnySpec& spec) {
  return std::holds_alternative<RecurrenceSpec>(spec) ? kDefaultConstantNmax : kDefaultPeriodicNmax;
}

Real periodic2_alpha(const Rational& a, const Rational& b, unsigned precision) {
  const Rational ab = a * b;
  if (ab <= 0) throw std::domain_error("two-periodic limit needs ab > 0");
  PrecisionScope scope(precision + 10);
  const Real x = to_real(ab);
  return (x + sqrt(x * x + 4 * x)) / 2;
}

std::optional<Real> ratio_limit_reference(const AnySpec& spec, std::size_t step, Subsequence sub,
                                          unsigned precision) {
  if (step == 0) throw std::invalid_argument("step must be at least 1");
  const long s = static_cast<long>(step);

  if (const auto* r = std::get_if<RecurrenceSpec>(&spec)) {
    if (!r->wu_zhang_ordered()) return std::nullopt;
    const Real alpha = dominant_root(charpoly_of(*r), precision);
    PrecisionScope scope(precision + 10);
    return pow(alpha, s);
  }

  const auto& p = std::get<PeriodicSpec>(spec);
  if (p.period() != 2 || p.order() != 2) return std::nullopt;
  const Rational& a = p.leading()[0];
  const Rational& b = p.leading()[1];
  if (a <= 0 || b <= 0) return std::nullopt;

  const Real alpha = periodic2_alpha(a, b, precision);
  PrecisionScope scope(precision + 10);
  if (a == b) return pow(alpha / to_real(a), s);

  Real value = pow(alpha + 1, s / 2);
  if (step % 2 == 1) {
    if (sub == Subsequence::all) return std::nullopt;
    value *= alpha / to_real(sub == Subsequence::even ? a : b);
  }
  return value;
}

RatioReport ratio_limit(const AnySpec& spec, std::size_t step, Subsequence sub, std::size_t n_max,
                        unsigned precision) {
  if (step == 0) throw std::invalid_argument("step must be at least 1");
  if (n_max == 0) n_max = default_nmax(spec);

  const auto t = evaluate_range(spec, n_max);
  // Zeros among the initial terms are skipped; a zero further on is an error.
  const std::size_t order = std::visit([](const auto& s) { return s.order(); }, spec);
  std::size_t start = 0;
  for (std::size_t i = 0; i < std::min(order, t.size()); ++i) {
    if (t[i] == 0) start = i + 1;
  }
  if (std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(), [](const ExactValue& v) { return v == 0; })) {
    throw ZeroDenominatorError("sequence is identically zero over the sampled range");
  }
  while (t[start] == 0) ++start;

  RatioReport report;
  report.step = step;
  report.subsequence = sub;

  PrecisionScope scope(precision);
  for (std::size_t m = start; m + step <= n_max; ++m) {
    if (!selected(sub, m)) continue;
    if (t[m] == 0) throw ZeroDenominatorError("zero term at index " + std::to_string(m));
    report.samples.push_back({m + step, to_real(t[m + step] / t[m])});
  }
  if (report.samples.empty()) throw std::invalid_argument("no ratios selected in the sampled range");

  report.estimate = report.samples.back().ratio;
  report.reference = ratio_limit_reference(spec, step, sub, precision);
  if (report.reference) {
    report.gap = abs(report.estimate - *report.reference);

    const std::size_t tail = std::min<std::size_t>(20, report.samples.size());
    const Real slack = epsilon_digits(static_cast<int>(precision) - 5);
    report.monotone_tail = true;
    for (std::size_t i = report.samples.size() - tail + 1; i < report.samples.size(); ++i) {
      const Real prev = abs(report.samples[i - 1].ratio - *report.reference);
      const Real cur = abs(report.samples[i].ratio - *report.reference);
      if (cur > prev + slack) report.monotone_tail = false;
    }
  }
  return report;
}

std::vector<LimitClaim> periodic2_limit_claims(const Rational& a, const Rational& b, const Rational& g0,
                                               const Rational& g1, std::size_t n_max, unsigned precision) {
  if (n_max < 4) throw std::invalid_argument("n_max too small for limit claims");
  const Real alpha = periodic2_alpha(a, b, precision);
  const auto f = evaluate_periodic_range(periodic2_spec(a, b), n_max);
  const auto g = evaluate_periodic_range(periodic2_spec(a, b, g0, g1), n_max);

  PrecisionScope scope(precision + 10);
  const Real over_a = alpha / to_real(a);
  const Real over_b = alpha / to_real(b);
  const Real plus_one = alpha + 1;
  const Real tolerance = epsilon_digits(6);

  std::vector<LimitClaim> claims;
  const auto add = [&](std::string label, const Real& claimed, const std::vector<ExactValue>& t, std::size_t step,
                       std::optional<std::size_t> parity) {
    LimitClaim c{std::move(label), claimed, last_ratio(t, step, parity), false};
    c.matches = abs(c.observed - c.claimed) < tolerance;
    claims.push_back(std::move(c));
  };
  add("F(2n)/F(2n-1) -> alpha/b", over_b, f, 1, 0);
  add("F(2n+1)/F(2n) -> alpha/a", over_a, f, 1, 1);
  add("F(n+2)/F(n) -> alpha+1", plus_one, f, 2, std::nullopt);
  add("G(2n)/G(2n-1) -> alpha/a", over_a, g, 1, 0);
  add("G(2n+1)/G(2n) -> alpha/b", over_b, g, 1, 1);
  add("G(n+2)/G(n) -> alpha+1", plus_one, g, 2, std::nullopt);
  return claims;
}

AsymptoticFit asymptotic_fit(const RecurrenceSpec& spec, std::size_t n_max, unsigned precision) {
  if (!spec.wu_zhang_ordered()) throw std::invalid_argument("asymptotic fit needs q1 >= ... >= qk >= 1");
  if (!spec.has_nonzero_init() ||
      std::any_of(spec.inits().begin(), spec.inits().end(), [](const Rational& v) { return v < 0; })) {
    throw std::invalid_argument("asymptotic fit needs non-negative inits, not all zero");
  }
  constexpr std::size_t kWindow = 20;
  if (n_max <= kWindow + spec.order()) throw std::invalid_argument("n_max too small for the residual window");

  const CharPoly poly = charpoly_of(spec);
  const RootSet roots = all_roots(poly, precision);
  const double alpha_d = roots.dominant.convert_to<double>();
  const double rho = std::max(roots.moduli_bound.convert_to<double>() / alpha_d, 1e-300);
  // Digits for the integer part of u(n) plus enough to resolve rho^n_max.
  const double extra = static_cast<double>(n_max) * (std::log10(alpha_d) - std::log10(rho));
  const unsigned digits = precision + 20 + static_cast<unsigned>(std::max(0.0, extra));

  const auto u = evaluate_range(spec, n_max);
  AsymptoticFit fit;
  fit.alpha = dominant_root(poly, digits);
  PrecisionScope scope(digits + 10);

  const auto scaled = [&](std::size_t n) { return to_real(u[n]) / pow(fit.alpha, static_cast<long>(n)); };
  fit.c = scaled(n_max);
  if (!(fit.c > 0)) throw std::domain_error("asymptotic constant is not positive");
  for (std::size_t n = n_max - kWindow; n < n_max; ++n) fit.residual_trend.emplace_back(n, abs(scaled(n) - fit.c));
  return fit;
}

}  // namespace knacci
