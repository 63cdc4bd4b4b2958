#pragma once

// Sequence specifications and exact term evaluation.
//
// Indices are 0-based throughout: the k-nacci sequence starts with k-1 zeros
// followed by a one, and the recurrence applies for every n >= k.

#include "knacci/numeric.hpp"

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace knacci {

/// a(n) = q1*a(n-1) + ... + qk*a(n-k) for n >= k, with a(0..k-1) given.
class RecurrenceSpec {
 public:
  RecurrenceSpec(std::vector<Rational> coeffs, std::vector<Rational> inits);

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const std::vector<Rational>& inits() const { return inits_; }

  bool unit_coefficients() const;
  /// q1 >= q2 >= ... >= qk >= 1.
  bool wu_zhang_ordered() const;
  bool has_nonzero_init() const;

  bool operator==(const RecurrenceSpec&) const = default;

 private:
  std::vector<Rational> coeffs_;
  std::vector<Rational> inits_;
};

/// Recurrence whose leading coefficient cycles with the index:
///
///   t(n) = leading[n mod p] * t(n-1) + t(n-2) + ... + t(n-k),   n >= k.
///
/// With p = 2 this is the even/odd (a, b) sequence: `a` on even n, `b` on odd
/// n. With p = k it is the k-periodic sequence where a1 applies when
/// n = 0 (mod k), a2 when n = 1, ..., ak when n = k-1. Both read the same
/// table, leading[n mod p].
class PeriodicSpec {
 public:
  PeriodicSpec(std::vector<Rational> leading, std::size_t order, std::vector<Rational> inits);

  std::size_t period() const { return leading_.size(); }
  std::size_t order() const { return order_; }
  const std::vector<Rational>& leading() const { return leading_; }
  const std::vector<Rational>& inits() const { return inits_; }

  const Rational& leading_for(std::size_t n) const { return leading_[n % leading_.size()]; }

  /// Leading coefficients (a_{s+1}, ..., a_p, a_1, ..., a_s), same order and inits.
  PeriodicSpec rotated(std::size_t shift) const;
  PeriodicSpec with_inits(std::vector<Rational> inits) const;

  bool operator==(const PeriodicSpec&) const = default;

 private:
  std::vector<Rational> leading_;
  std::size_t order_;
  std::vector<Rational> inits_;
};

using AnySpec = std::variant<RecurrenceSpec, PeriodicSpec>;

/// (0, ..., 0, 1) of length k.
std::vector<Rational> basis_inits(std::size_t k);

RecurrenceSpec knacci_spec(std::size_t k);
RecurrenceSpec horadam_spec(std::size_t k, std::vector<Rational> coeffs);
/// Unit coefficients with arbitrary inits; at least one init must be nonzero.
RecurrenceSpec fibonacci_like_spec(std::vector<Rational> inits);
/// Given coefficients and inits; at least one init must be nonzero.
RecurrenceSpec horadam_like_spec(std::vector<Rational> coeffs, std::vector<Rational> inits);

PeriodicSpec periodic2_spec(Rational a, Rational b, Rational g0 = 0, Rational g1 = 1);
PeriodicSpec ternary_spec(Rational a, Rational b, Rational c,
                          std::vector<Rational> inits = {0, 0, 1});
/// p = k = leading.size(); inits default to the k-nacci basis.
PeriodicSpec k_periodic_spec(std::vector<Rational> leading, std::vector<Rational> inits = {});

ExactValue evaluate(const RecurrenceSpec& spec, std::size_t n);
/// Terms 0..last inclusive.
std::vector<ExactValue> evaluate_range(const RecurrenceSpec& spec, std::size_t last);

/// Companion-matrix power; always equal to evaluate().
ExactValue evaluate_fast(const RecurrenceSpec& spec, std::size_t n);

ExactValue evaluate_periodic(const PeriodicSpec& spec, std::size_t n);
std::vector<ExactValue> evaluate_periodic_range(const PeriodicSpec& spec, std::size_t last);

/// evaluate_periodic(spec, floor(x)); x must be finite and non-negative.
ExactValue evaluate_floor_indexed(const PeriodicSpec& spec, double x);

ExactValue evaluate(const AnySpec& spec, std::size_t n);
std::vector<ExactValue> evaluate_range(const AnySpec& spec, std::size_t last);

}  // namespace knacci
