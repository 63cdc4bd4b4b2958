#include "knacci/seqcore.hpp"

#include "knacci/companion.hpp"

#include <boost/multiprecision/eigen.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace knacci {

namespace {

void require_order(std::size_t k) {
  if (k < 2) throw std::invalid_argument("recurrence order must be at least 2, got " + std::to_string(k));
}

bool any_nonzero(const std::vector<Rational>& v) {
  return std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
}

}  // namespace

RecurrenceSpec::RecurrenceSpec(std::vector<Rational> coeffs, std::vector<Rational> inits)
    : coeffs_(std::move(coeffs)), inits_(std::move(inits)) {
  require_order(coeffs_.size());
  if (inits_.size() != coeffs_.size()) {
    throw std::invalid_argument("expected " + std::to_string(coeffs_.size()) + " initial terms, got " +
                                std::to_string(inits_.size()));
  }
}

bool RecurrenceSpec::unit_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 1; });
}

bool RecurrenceSpec::wu_zhang_ordered() const {
  if (coeffs_.back() < 1) return false;
  return std::is_sorted(coeffs_.rbegin(), coeffs_.rend());
}

bool RecurrenceSpec::has_nonzero_init() const { return any_nonzero(inits_); }

PeriodicSpec::PeriodicSpec(std::vector<Rational> leading, std::size_t order, std::vector<Rational> inits)
    : leading_(std::move(leading)), order_(order), inits_(std::move(inits)) {
  if (leading_.size() < 2) throw std::invalid_argument("period must be at least 2");
  require_order(order_);
  if (inits_.size() != order_) {
    throw std::invalid_argument("expected " + std::to_string(order_) + " initial terms, got " +
                                std::to_string(inits_.size()));
  }
}

PeriodicSpec PeriodicSpec::rotated(std::size_t shift) const {
  std::vector<Rational> r(leading_);
  std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(shift % r.size()), r.end());
  return PeriodicSpec(std::move(r), order_, inits_);
}

PeriodicSpec PeriodicSpec::with_inits(std::vector<Rational> inits) const {
  return PeriodicSpec(leading_, order_, std::move(inits));
}

std::vector<Rational> basis_inits(std::size_t k) {
  std::vector<Rational> v(k, Rational(0));
  if (k > 0) v.back() = 1;
  return v;
}

RecurrenceSpec knacci_spec(std::size_t k) {
  require_order(k);
  return RecurrenceSpec(std::vector<Rational>(k, Rational(1)), basis_inits(k));
}

RecurrenceSpec horadam_spec(std::size_t k, std::vector<Rational> coeffs) {
  require_order(k);
  if (coeffs.size() != k) {
    throw std::invalid_argument("expected " + std::to_string(k) + " coefficients, got " +
                                std::to_string(coeffs.size()));
  }
  return RecurrenceSpec(std::move(coeffs), basis_inits(k));
}

RecurrenceSpec fibonacci_like_spec(std::vector<Rational> inits) {
  if (!any_nonzero(inits)) throw std::invalid_argument("Fibonacci-like sequence needs a nonzero initial term");
  std::vector<Rational> ones(inits.size(), Rational(1));
  return RecurrenceSpec(std::move(ones), std::move(inits));
}

RecurrenceSpec horadam_like_spec(std::vector<Rational> coeffs, std::vector<Rational> inits) {
  if (!any_nonzero(inits)) throw std::invalid_argument("Horadam-like sequence needs a nonzero initial term");
  return RecurrenceSpec(std::move(coeffs), std::move(inits));
}

PeriodicSpec periodic2_spec(Rational a, Rational b, Rational g0, Rational g1) {
  return PeriodicSpec({std::move(a), std::move(b)}, 2, {std::move(g0), std::move(g1)});
}

PeriodicSpec ternary_spec(Rational a, Rational b, Rational c, std::vector<Rational> inits) {
  return PeriodicSpec({std::move(a), std::move(b), std::move(c)}, 3, std::move(inits));
}

PeriodicSpec k_periodic_spec(std::vector<Rational> leading, std::vector<Rational> inits) {
  const std::size_t k = leading.size();
  if (inits.empty()) inits = basis_inits(k);
  return PeriodicSpec(std::move(leading), k, std::move(inits));
}

namespace {

// Integer form of a rational recurrence. With d the common denominator of the
// coefficients and e that of the initial terms, u(n) = d^n * e * t(n) obeys
//
//   u(n) = sum_i (d^i q_i) u(n-i)
//
// with integer weights, so the inner loop never reduces a fraction.
struct IntegerForm {
  Integer d = 1;
  Integer e = 1;
  std::vector<Integer> weights;  // d^i q_i, i = 1..k
  std::vector<Integer> seeds;    // u(0..k-1)

  explicit IntegerForm(const RecurrenceSpec& spec) {
    for (const auto& q : spec.coeffs()) d = lcm(d, Integer(denominator(q)));
    for (const auto& x : spec.inits()) e = lcm(e, Integer(denominator(x)));
    Integer dpow = 1;
    for (const auto& q : spec.coeffs()) {
      dpow *= d;
      weights.push_back(Integer(numerator(q) * (dpow / denominator(q))));
    }
    dpow = 1;
    for (const auto& x : spec.inits()) {
      seeds.push_back(Integer(numerator(x) * (e / denominator(x)) * dpow));
      dpow *= d;
    }
  }

  Integer next(const std::vector<Integer>& window, std::size_t head) const {
    const std::size_t k = weights.size();
    Integer sum = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (weights[i - 1] != 0) sum += weights[i - 1] * window[(head + k - i) % k];
    }
    return sum;
  }
};

}  // namespace

std::vector<ExactValue> evaluate_range(const RecurrenceSpec& spec, std::size_t last) {
  const std::size_t k = spec.order();
  std::vector<ExactValue> t(spec.inits().begin(), spec.inits().begin() + static_cast<std::ptrdiff_t>(std::min(k, last + 1)));
  if (last < k) return t;
  t.reserve(last + 1);

  const IntegerForm form(spec);
  std::vector<Integer> window(form.seeds);
  std::size_t head = 0;
  Integer scale = pow(form.d, static_cast<unsigned>(k - 1)) * form.e;
  for (std::size_t n = k; n <= last; ++n) {
    Integer u = form.next(window, head);
    scale *= form.d;
    t.emplace_back(u, scale);
    window[head] = std::move(u);
    head = (head + 1) % k;
  }
  return t;
}

ExactValue evaluate(const RecurrenceSpec& spec, std::size_t n) {
  const std::size_t k = spec.order();
  if (n < k) return spec.inits()[n];
  // Sliding window of the last k scaled terms; window[head] is the oldest.
  const IntegerForm form(spec);
  std::vector<Integer> window(form.seeds);
  std::size_t head = 0;
  for (std::size_t m = k; m <= n; ++m) {
    window[head] = form.next(window, head);
    head = (head + 1) % k;
  }
  return Rational(window[(head + k - 1) % k], pow(form.d, static_cast<unsigned>(n)) * form.e);
}

ExactValue evaluate_fast(const RecurrenceSpec& spec, std::size_t n) {
  const std::size_t k = spec.order();
  if (n < k) return spec.inits()[n];

  // C = M / d with M integer, so C^p = M^p / d^p and the matrix power never
  // reduces a fraction.
  const IntegerForm form(spec);
  std::vector<Integer> first_row;
  for (const auto& q : spec.coeffs()) first_row.push_back(Integer(numerator(q) * (form.d / denominator(q))));
  MatrixX<Integer> step = companion_matrix<Integer>(first_row);
  for (Eigen::Index i = 1; i < step.rows(); ++i) step(i, i - 1) = form.d;

  VectorX<Integer> state(static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < k; ++i) {
    const Rational& x = spec.inits()[k - 1 - i];
    state(static_cast<Eigen::Index>(i)) = numerator(x) * (form.e / denominator(x));
  }

  const std::size_t exponent = n - k + 1;
  const MatrixX<Integer> power = matrix_power(step, exponent);
  Integer top = 0;
  for (Eigen::Index j = 0; j < power.cols(); ++j) top += power(0, j) * state(j);
  return Rational(top, pow(form.d, static_cast<unsigned>(exponent)) * form.e);
}

std::vector<ExactValue> evaluate_periodic_range(const PeriodicSpec& spec, std::size_t last) {
  const std::size_t k = spec.order();
  std::vector<ExactValue> t(spec.inits().begin(), spec.inits().begin() + static_cast<std::ptrdiff_t>(std::min(k, last + 1)));
  t.reserve(last + 1);
  for (std::size_t n = k; n <= last; ++n) {
    ExactValue next = spec.leading_for(n) * t[n - 1];
    for (std::size_t j = 2; j <= k; ++j) next += t[n - j];
    t.push_back(std::move(next));
  }
  return t;
}

ExactValue evaluate_periodic(const PeriodicSpec& spec, std::size_t n) {
  if (n < spec.order()) return spec.inits()[n];
  return evaluate_periodic_range(spec, n).back();
}

ExactValue evaluate_floor_indexed(const PeriodicSpec& spec, double x) {
  if (!std::isfinite(x) || x < 0) throw std::invalid_argument("real index must be finite and non-negative");
  return evaluate_periodic(spec, static_cast<std::size_t>(std::floor(x)));
}

ExactValue evaluate(const AnySpec& spec, std::size_t n) {
  return std::visit(
      [n](const auto& s) -> ExactValue {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, RecurrenceSpec>) {
          return evaluate(s, n);
        } else {
          return evaluate_periodic(s, n);
        }
      },
      spec);
}

std::vector<ExactValue> evaluate_range(const AnySpec& spec, std::size_t last) {
  return std::visit(
      [last](const auto& s) -> std::vector<ExactValue> {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, RecurrenceSpec>) {
          return evaluate_range(s, last);
        } else {
          return evaluate_periodic_range(s, last);
        }
      },
      spec);
}

}  // namespace knacci
