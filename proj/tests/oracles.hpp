#pragma once

// Test-side reference computations.  They deliberately avoid the library's
// GMP/MPFR types and algorithms: terms come from a plain loop over
// cpp_rational, roots from bisection in cpp_bin_float.

#include "knacci/numeric.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;
using F = boost::multiprecision::cpp_bin_float_100;

inline Q from(const knacci::Rational& x) { return Q(knacci::to_string(x)); }

inline std::vector<Q> from(const std::vector<knacci::Rational>& v) {
  std::vector<Q> out;
  for (const auto& x : v) out.push_back(from(x));
  return out;
}

inline bool same(const knacci::Rational& x, const Q& y) { return knacci::to_string(x) == y.str(); }

// t(n) = sum_i q_i t(n-i)
inline std::vector<Q> linear_terms(const std::vector<Q>& q, const std::vector<Q>& inits, std::size_t last) {
  std::vector<Q> t(inits);
  while (t.size() <= last) {
    Q next = 0;
    for (std::size_t i = 1; i <= q.size(); ++i) next += q[i - 1] * t[t.size() - i];
    t.push_back(next);
  }
  t.resize(last + 1);
  return t;
}

// t(n) = lead[n mod p] t(n-1) + t(n-2) + ... + t(n-k)
inline std::vector<Q> periodic_terms(const std::vector<Q>& lead, const std::vector<Q>& inits, std::size_t last) {
  const std::size_t k = inits.size();
  std::vector<Q> t(inits);
  for (std::size_t n = k; n <= last; ++n) {
    Q next = lead[n % lead.size()] * t[n - 1];
    for (std::size_t j = 2; j <= k; ++j) next += t[n - j];
    t.push_back(next);
  }
  t.resize(last + 1);
  return t;
}

inline F poly_at(const std::vector<F>& q, const F& x) {
  F acc = 1;
  for (const auto& c : q) acc = acc * x - c;
  return acc;
}

// Positive root of x^k - q1 x^{k-1} - ... - qk inside (lo, hi) by plain bisection.
inline F bisect_root(const std::vector<F>& q, F lo, F hi) {
  for (int i = 0; i < 400; ++i) {
    const F mid = (lo + hi) / 2;
    if ((poly_at(q, mid) > 0) == (poly_at(q, hi) > 0)) hi = mid;
    else lo = mid;
  }
  return (lo + hi) / 2;
}

inline F bisect_root(const std::vector<int>& q) {
  std::vector<F> qf(q.begin(), q.end());
  F hi = 1;
  for (int c : q) hi += c;
  return bisect_root(qf, F(0), hi);
}

inline double to_double(const Q& x) { return static_cast<double>(x); }

inline std::vector<int> ordered_coeffs(std::mt19937_64& rng, std::size_t k, int top = 5) {
  std::vector<int> q(k);
  std::uniform_int_distribution<int> d(1, top);
  for (auto& x : q) x = d(rng);
  std::sort(q.rbegin(), q.rend());
  return q;
}

inline std::vector<knacci::Rational> rationals(const std::vector<int>& v) {
  return {v.begin(), v.end()};
}

inline std::vector<knacci::Rational> random_inits(std::mt19937_64& rng, std::size_t k, int top = 20) {
  std::uniform_int_distribution<int> d(0, top);
  std::vector<knacci::Rational> v;
  do {
    v.clear();
    for (std::size_t i = 0; i < k; ++i) v.emplace_back(d(rng));
  } while (std::all_of(v.begin(), v.end(), [](const knacci::Rational& x) { return x == 0; }));
  return v;
}

inline knacci::Rational random_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 12);
  int p = num(rng);
  while (nonzero && p == 0) p = num(rng);
  return knacci::Rational(p, den(rng));
}

}  // namespace oracle

namespace oracle {

inline F as_f(const knacci::Real& x) { return F(x.str(90, std::ios_base::scientific)); }

inline bool close(const knacci::Real& x, const F& y, const char* tol) {
  return abs(as_f(x) - y) < F(tol);
}

}  // namespace oracle
