#pragma once

// Decomposition identities: a sequence with arbitrary initial terms written as
// an initial-term-weighted sum of shifted basis sequences.
//
// Every function evaluates the left side by direct recursion and the right
// side from the basis sequences, and returns both in a witness. Nothing is
// asserted, so formulas of uncertain correctness can be checked the same way
// as proven ones.
//
// The *_range variants evaluate each sequence once and return one witness per
// n in [lo, hi].

#include "knacci/numeric.hpp"
#include "knacci/seqcore.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace knacci {

struct WitnessTerm {
  std::string label;
  ExactValue coefficient;
  ExactValue basis_value;
};

/// rhs is always the exact sum of coefficient * basis_value over terms.
struct DecompositionWitness {
  std::string identity;
  std::size_t n = 0;
  ExactValue lhs;
  ExactValue rhs;
  std::vector<WitnessTerm> terms;
  bool holds = false;
};

DecompositionWitness make_witness(std::string identity, std::size_t n, ExactValue lhs,
                                  std::vector<WitnessTerm> terms);

/// S(n) = S1*F(n) + S0*F(n-1) for order-2 unit-coefficient sequences, n >= 1.
DecompositionWitness decompose_canonical(const Rational& s0, const Rational& s1, std::size_t n);
std::vector<DecompositionWitness> decompose_canonical_range(const Rational& s0, const Rational& s1,
                                                            std::size_t lo, std::size_t hi);

/// G(n) = G0*F(n-1) + sum_{m=0}^{k-3} G(m+1) * sum_{j=0}^{m+1} F(n-1-j) + G(k-1)*F(n)
/// with F the k-nacci sequence. Requires unit coefficients and n >= k.
DecompositionWitness decompose_knacci_like(const RecurrenceSpec& spec, std::size_t n);
std::vector<DecompositionWitness> decompose_knacci_like_range(const RecurrenceSpec& spec,
                                                              std::size_t lo, std::size_t hi);

/// V(n) = qk*V0*U(n-1) + sum_{m=0}^{k-3} V(m+1) * sum_{j=0}^{m+1} q_{k-(m+1)+j} U(n-1-j) + V(k-1)*U(n)
/// where U is `uspec` (basis inits) and V shares its coefficients. q is 1-based.
DecompositionWitness decompose_horadam_like(const RecurrenceSpec& uspec, const std::vector<Rational>& vinits,
                                            std::size_t n);
std::vector<DecompositionWitness> decompose_horadam_like_range(const RecurrenceSpec& uspec,
                                                               const std::vector<Rational>& vinits,
                                                               std::size_t lo, std::size_t hi);

/// G(n) = G1*F(n; a,b) + G0*F(n-1; b,a), n >= 1.
DecompositionWitness decompose_periodic2(const Rational& a, const Rational& b, const Rational& g0,
                                         const Rational& g1, std::size_t n);
std::vector<DecompositionWitness> decompose_periodic2_range(const Rational& a, const Rational& b,
                                                            const Rational& g0, const Rational& g1,
                                                            std::size_t lo, std::size_t hi);

/// F(n-1; b,a) = (b/a)^(n - 2*floor(n/2)) * F(n-1; a,b), n >= 1, a != 0.
DecompositionWitness periodic2_swap_relation(const Rational& a, const Rational& b, std::size_t n);
std::vector<DecompositionWitness> periodic2_swap_relation_range(const Rational& a, const Rational& b,
                                                                std::size_t lo, std::size_t hi);

/// G(n) = G1*F(n; a,b) + G0*(b/a)^(n - 2*floor(n/2))*F(n-1; a,b), n >= 1, a != 0.
DecompositionWitness decompose_periodic2_edson(const Rational& a, const Rational& b, const Rational& g0,
                                               const Rational& g1, std::size_t n);
std::vector<DecompositionWitness> decompose_periodic2_edson_range(const Rational& a, const Rational& b,
                                                                  const Rational& g0, const Rational& g1,
                                                                  std::size_t lo, std::size_t hi);

/// Ternary (period 3) relation, taken literally:
/// U(n) = U0*T(n-1; b,c,a) + U1*(T(n-1; b,c,a) + T(n-2; c,a,b)) + U2*T(n; a,b,c), n >= 2.
DecompositionWitness decompose_periodic3(const Rational& a, const Rational& b, const Rational& c,
                                         const std::vector<Rational>& uinits, std::size_t n);
std::vector<DecompositionWitness> decompose_periodic3_range(const Rational& a, const Rational& b,
                                                            const Rational& c,
                                                            const std::vector<Rational>& uinits,
                                                            std::size_t lo, std::size_t hi);

/// Which rotation of the leading coefficients feeds each basis term of the
/// k-periodic relation. With (k;s) = (a_{s+1}, ..., a_k, a_1, ..., a_s):
///   primary:  G0 uses (k;1) at n-1, inner term j uses (k;j+1) at n-1-j
///   shifted:  G0 uses (k;0) at n-1, inner term j uses (k;j)   at n-1-j
enum class PeriodicKIndexing { primary, shifted };

/// G(n) = G0*F(n-1; k;1) + sum_{m=0}^{k-3} G(m+1) * sum_{j=0}^{m+1} F(n-1-j; k;j+1) + G(k-1)*F(n),
/// for k >= 3 and n >= k.
DecompositionWitness decompose_periodic_k(const std::vector<Rational>& leading,
                                          const std::vector<Rational>& ginits, std::size_t n,
                                          PeriodicKIndexing indexing = PeriodicKIndexing::primary);
std::vector<DecompositionWitness> decompose_periodic_k_range(const std::vector<Rational>& leading,
                                                             const std::vector<Rational>& ginits,
                                                             std::size_t lo, std::size_t hi,
                                                             PeriodicKIndexing indexing = PeriodicKIndexing::primary);

/// Outcome of checking one identity over a range of n.
struct Verdict {
  std::string identity;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<DecompositionWitness> first_counterexample;

  bool holds() const { return failures == 0; }
};

Verdict summarize(const std::vector<DecompositionWitness>& witnesses);

}  // namespace knacci
