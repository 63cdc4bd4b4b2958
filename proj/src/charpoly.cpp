#include "knacci/charpoly.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace knacci {

namespace {

constexpr std::size_t kMaxRootIterations = 100000;

// Extra working digits so that rounding in x does not dominate |f(x)|.
unsigned working_digits(const CharPoly& p, unsigned precision) {
  double largest = 0;
  for (const auto& q : p.coeffs) largest = std::max(largest, std::abs(q.convert_to<double>()));
  const double per_degree = std::ceil(std::log10(2.0 + largest));
  return precision + 20 + static_cast<unsigned>(per_degree * static_cast<double>(p.degree()));
}

template <typename Scalar>
Scalar derivative(const std::vector<Real>& q, const Scalar& x) {
  // d/dx of x^k - sum qi x^(k-i)
  const std::size_t k = q.size();
  Scalar acc = Scalar(k);
  for (std::size_t i = 1; i < k; ++i) acc = acc * x - Scalar(q[i - 1] * Real(k - i));
  return acc;
}

// Bisection + safeguarded Newton on a bracket with f(lo) < 0 < f(hi).
Real refine_in_bracket(const std::vector<Real>& q, Real lo, Real hi, const Real& tolerance) {
  Real x = (lo + hi) / 2;
  const Real step_floor = tolerance * epsilon_digits(5);
  for (std::size_t it = 0; it < 20000; ++it) {
    const Real fx = evaluate_charpoly(q, x);
    if (fx == 0) return x;
    if (fx < 0) lo = x; else hi = x;
    if (hi - lo < step_floor) return x;

    const Real dfx = derivative(q, x);
    Real next = dfx != 0 ? Real(x - fx / dfx) : Real((lo + hi) / 2);
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    if (abs(fx) < tolerance && abs(next - x) < step_floor) return next;
    x = next;
  }
  throw std::runtime_error("dominant root refinement did not converge");
}

Integer round_to_integer(const Real& x) {
  Integer out;
  Real r = round(x);
  mpfr_get_z(out.backend().data(), r.backend().data(), MPFR_RNDN);
  return out;
}

}  // namespace

bool CharPoly::wu_zhang_ordered() const {
  if (coeffs.empty() || coeffs.back() < 1) return false;
  return std::is_sorted(coeffs.rbegin(), coeffs.rend());
}

CharPoly charpoly_of(const RecurrenceSpec& spec) { return CharPoly{spec.coeffs()}; }

CharPoly charpoly_of(const AnySpec& spec) {
  if (const auto* r = std::get_if<RecurrenceSpec>(&spec)) return charpoly_of(*r);
  throw std::invalid_argument("periodic sequences have no single characteristic polynomial");
}

std::vector<Real> real_coefficients(const CharPoly& p) {
  std::vector<Real> q;
  q.reserve(p.coeffs.size());
  for (const auto& c : p.coeffs) q.push_back(to_real(c));
  return q;
}

Real dominant_root(const CharPoly& p, unsigned precision) {
  if (p.degree() < 2) throw std::invalid_argument("characteristic polynomial degree must be at least 2");
  PrecisionScope scope(working_digits(p, precision));
  const auto q = real_coefficients(p);
  const Real tolerance = epsilon_digits(static_cast<int>(precision));

  Real lo, hi;
  if (p.wu_zhang_ordered()) {
    lo = q.front();
    hi = q.front() + 1;
  } else {
    // Every real root is below 1 + sum |qi|. Walk down from there to the
    // first sign change, which brackets the largest positive root.
    Real bound = 1;
    for (const auto& c : q) bound += abs(c);
    constexpr int kSteps = 4096;
    const Real h = bound / kSteps;
    hi = bound;
    bool found = false;
    for (int i = kSteps - 1; i >= 1; --i) {
      const Real x = h * i;
      const Real fx = evaluate_charpoly(q, x);
      if (fx == 0) return x;
      if (fx < 0) {
        lo = x;
        found = true;
        break;
      }
      hi = x;
    }
    if (!found) throw std::domain_error("no positive sign change for the characteristic polynomial");
  }

  if (!(evaluate_charpoly(q, lo) < 0 && evaluate_charpoly(q, hi) > 0)) {
    throw std::domain_error("characteristic polynomial does not change sign on the root bracket");
  }
  const Real bracket_lo = lo, bracket_hi = hi;
  Real alpha = refine_in_bracket(q, lo, hi, tolerance);
  if (!(abs(evaluate_charpoly(q, alpha)) < tolerance)) {
    throw std::runtime_error("dominant root residual above tolerance");
  }
  if (p.wu_zhang_ordered() && !(alpha > bracket_lo && alpha < bracket_hi)) {
    throw std::logic_error("dominant root escaped the (q1, q1 + 1) bracket");
  }
  return alpha;
}

Real knacci_constant(std::size_t k, unsigned precision) {
  const CharPoly p = charpoly_of(knacci_spec(k));
  Real alpha = dominant_root(p, precision);
  PrecisionScope scope(working_digits(p, precision));
  // x^k (2 - x) - 1 = -(x - 1) f(x), so both characterizations share the root.
  const Real check = abs(pow(alpha, static_cast<long>(k)) * (2 - alpha) - 1);
  if (!(check < epsilon_digits(static_cast<int>(precision)))) {
    throw std::logic_error("k-nacci constant fails x^k(2-x) = 1");
  }
  return alpha;
}

RootSet all_roots(const CharPoly& p, unsigned precision) {
  const std::size_t k = p.degree();
  RootSet out;
  out.ordered = p.wu_zhang_ordered();
  out.dominant = dominant_root(p, precision);

  PrecisionScope scope(working_digits(p, precision));
  const auto q = real_coefficients(p);
  const Real step_tolerance = epsilon_digits(static_cast<int>(precision));

  Real radius = 1;
  {
    Real largest = 0;
    for (const auto& c : q) largest = std::max<Real>(largest, Real(abs(c)));
    radius += largest;
  }
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  std::vector<Complex> z;
  for (std::size_t j = 0; j < k; ++j) {
    const Real theta = two_pi * Real(j) / Real(k) + Real(0.4);
    z.emplace_back(radius * cos(theta), radius * sin(theta));
  }

  std::size_t it = 0;
  for (;; ++it) {
    if (it >= kMaxRootIterations) throw std::runtime_error("root iteration did not converge");
    Real max_step = 0;
    for (std::size_t j = 0; j < k; ++j) {
      Complex denom(1);
      for (std::size_t l = 0; l < k; ++l) {
        if (l != j) denom *= z[j] - z[l];
      }
      if (denom == Complex(0)) {
        // coincident iterates; nudge apart
        z[j] += Complex(step_tolerance, step_tolerance);
        max_step = std::max<Real>(max_step, Real(1));
        continue;
      }
      const Complex delta = evaluate_charpoly(q, z[j]) / denom;
      z[j] -= delta;
      max_step = std::max<Real>(max_step, Real(abs(delta)));
    }
    if (max_step < step_tolerance) break;
  }
  out.iterations = it + 1;

  // Drop the iterate closest to the separately refined dominant root.
  const Complex dom(out.dominant, Real(0));
  auto closest = std::min_element(z.begin(), z.end(), [&](const Complex& a, const Complex& b) {
    return abs(a - dom) < abs(b - dom);
  });
  z.erase(closest);
  out.others = std::move(z);

  out.moduli_bound = 0;
  for (const auto& r : out.others) out.moduli_bound = std::max<Real>(out.moduli_bound, Real(abs(r)));
  out.residual = abs(evaluate_charpoly(q, out.dominant));
  out.near_unit_circle = out.moduli_bound > 1 - epsilon_digits(9);

  if (out.ordered && out.moduli_bound >= 1 + epsilon_digits(static_cast<int>(precision / 2))) {
    throw std::runtime_error("non-dominant root outside the unit circle for an ordered polynomial");
  }
  return out;
}

Complex dresden_coefficient(const Complex& root, std::size_t k) {
  const Complex denom = Complex(2) + Complex(Real(k + 1)) * (root - Complex(2));
  const int digits = static_cast<int>(Real::default_precision() / 2);
  if (abs(denom) < epsilon_digits(digits)) throw std::domain_error("Dresden coefficient denominator vanishes");
  return (root - Complex(1)) / denom;
}

Real dresden_exact_sum(const std::vector<Rational>& inits, std::size_t n, unsigned precision) {
  const std::size_t k = inits.size();
  if (k < 2) throw std::invalid_argument("need at least two initial terms");
  if (n < 2) throw std::invalid_argument("closed form is evaluated for n >= 2 only");

  // Terms grow like 2^n; keep `precision` digits below the integer part.
  double init_mag = 1;
  for (const auto& g : inits) init_mag += std::abs(g.convert_to<double>());
  const unsigned digits =
      precision + 20 + static_cast<unsigned>(static_cast<double>(n) * std::log10(2.0) + std::log10(init_mag));

  const CharPoly p = charpoly_of(knacci_spec(k));
  const RootSet roots = all_roots(p, digits);
  PrecisionScope scope(digits + 10);

  std::vector<Complex> alpha{Complex(roots.dominant, Real(0))};
  alpha.insert(alpha.end(), roots.others.begin(), roots.others.end());
  std::vector<Complex> coeff;
  for (const auto& r : alpha) coeff.push_back(dresden_coefficient(r, k));

  // F(m) = sum_i A(i;k) alpha_i^(m-k+1) for the 0-based k-nacci index m. The
  // exponent can be negative for the smallest n; the closed form continues
  // the recurrence backwards there.
  const auto closed_f = [&](long m) {
    Complex s(0);
    const long e = m - static_cast<long>(k) + 1;
    for (std::size_t i = 0; i < k; ++i) s += coeff[i] * pow(alpha[i], e);
    return s;
  };

  const long nn = static_cast<long>(n);
  Complex total = Complex(to_real(inits[0])) * closed_f(nn - 1);
  for (std::size_t m = 0; m + 3 <= k; ++m) {
    Complex inner(0);
    for (std::size_t j = 0; j <= m + 1; ++j) inner += closed_f(nn - 1 - static_cast<long>(j));
    total += Complex(to_real(inits[m + 1])) * inner;
  }
  total += Complex(to_real(inits[k - 1])) * closed_f(nn);

  if (abs(total.imag()) > epsilon_digits(static_cast<int>(precision / 2))) {
    throw std::range_error("closed form lost precision (imaginary residue too large)");
  }
  return total.real();
}

Integer dresden_round(std::size_t k, std::size_t n) {
  const unsigned precision = 30 + static_cast<unsigned>(static_cast<double>(n) * std::log10(2.0)) +
                             static_cast<unsigned>(k);
  const Real alpha = knacci_constant(k, precision);
  PrecisionScope scope(precision + 10);
  const Real a = dresden_coefficient(Complex(alpha, Real(0)), k).real();
  const long e = static_cast<long>(n) - static_cast<long>(k) + 1;
  return round_to_integer(a * pow(alpha, e));
}

Real horadam_binet(const Rational& p, const Rational& q, std::size_t n, unsigned precision) {
  const Rational disc = p * p + 4 * q;
  if (disc == 0) throw RepeatedRootError("x^2 - p x - q has a repeated root");
  if (disc < 0) throw std::domain_error("x^2 - p x - q has complex roots");

  const double growth = std::log10(1.0 + std::abs(p.convert_to<double>()) + std::sqrt(disc.convert_to<double>()));
  PrecisionScope scope(precision + 10 + static_cast<unsigned>(static_cast<double>(n) * growth));
  const Real root = sqrt(to_real(disc));
  const Real alpha = (to_real(p) + root) / 2;
  const Real beta = (to_real(p) - root) / 2;
  const long e = static_cast<long>(n);
  return (pow(alpha, e) - pow(beta, e)) / (alpha - beta);
}

}  // namespace knacci
