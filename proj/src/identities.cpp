#include "knacci/identities.hpp"

#include <stdexcept>

namespace knacci {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

// "n-d" / "n" for labels
std::string shift(std::size_t d) { return d == 0 ? "n" : "n-" + std::to_string(d); }

void require_range(std::size_t lo, std::size_t hi, std::size_t min_n, const char* what) {
  if (lo < min_n) {
    throw std::invalid_argument(std::string(what) + " requires n >= " + std::to_string(min_n));
  }
  if (hi < lo) throw std::invalid_argument("empty index range");
}

Rational swap_factor(const Rational& a, const Rational& b, std::size_t n) {
  if (a == 0) throw std::invalid_argument("parameter a must be nonzero");
  return n % 2 == 0 ? Rational(1) : Rational(b / a);
}

}  // namespace

DecompositionWitness make_witness(std::string identity, std::size_t n, ExactValue lhs,
                                  std::vector<WitnessTerm> terms) {
  DecompositionWitness w;
  w.identity = std::move(identity);
  w.n = n;
  w.lhs = std::move(lhs);
  w.rhs = 0;
  for (const auto& t : terms) w.rhs += t.coefficient * t.basis_value;
  w.terms = std::move(terms);
  w.holds = w.lhs == w.rhs;
  return w;
}

std::vector<DecompositionWitness> decompose_canonical_range(const Rational& s0, const Rational& s1,
                                                            std::size_t lo, std::size_t hi) {
  require_range(lo, hi, 1, "canonical identity");
  const auto s = evaluate_range(RecurrenceSpec({1, 1}, {s0, s1}), hi);
  const auto f = evaluate_range(knacci_spec(2), hi);
  std::vector<DecompositionWitness> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    out.push_back(make_witness("canonical", n, s[n],
                               {{"S1*F(n)", s1, f[n]}, {"S0*F(n-1)", s0, f[n - 1]}}));
  }
  return out;
}

DecompositionWitness decompose_canonical(const Rational& s0, const Rational& s1, std::size_t n) {
  return decompose_canonical_range(s0, s1, n, n).front();
}

std::vector<DecompositionWitness> decompose_knacci_like_range(const RecurrenceSpec& spec,
                                                              std::size_t lo, std::size_t hi) {
  if (!spec.unit_coefficients()) {
    throw std::invalid_argument("knacci-like identity needs unit coefficients; use the Horadam-like form");
  }
  const std::size_t k = spec.order();
  require_range(lo, hi, k, "knacci-like identity");
  const auto g = evaluate_range(spec, hi);
  const auto f = evaluate_range(knacci_spec(k), hi);
  const auto& init = spec.inits();

  std::vector<DecompositionWitness> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    std::vector<WitnessTerm> terms;
    terms.push_back({"G0*F(n-1)", init[0], f[n - 1]});
    for (std::size_t m = 0; m + 3 <= k; ++m) {
      ExactValue inner = 0;
      std::string label = "G" + idx(m + 1) + "*[";
      for (std::size_t j = 0; j <= m + 1; ++j) {
        inner += f[n - 1 - j];
        label += (j ? "+F(" : "F(") + shift(1 + j) + ")";
      }
      terms.push_back({label + "]", init[m + 1], inner});
    }
    terms.push_back({"G" + idx(k - 1) + "*F(n)", init[k - 1], f[n]});
    out.push_back(make_witness("knacci-like", n, g[n], std::move(terms)));
  }
  return out;
}

DecompositionWitness decompose_knacci_like(const RecurrenceSpec& spec, std::size_t n) {
  return decompose_knacci_like_range(spec, n, n).front();
}

std::vector<DecompositionWitness> decompose_horadam_like_range(const RecurrenceSpec& uspec,
                                                               const std::vector<Rational>& vinits,
                                                               std::size_t lo, std::size_t hi) {
  const std::size_t k = uspec.order();
  if (uspec.inits() != basis_inits(k)) throw std::invalid_argument("U must start from the basis (0,...,0,1)");
  const RecurrenceSpec vspec = horadam_like_spec(uspec.coeffs(), vinits);
  require_range(lo, hi, k, "Horadam-like identity");

  const auto u = evaluate_range(uspec, hi);
  const auto v = evaluate_range(vspec, hi);
  // q(i) with 1-based i
  const auto q = [&](std::size_t i) -> const Rational& { return uspec.coeffs()[i - 1]; };

  std::vector<DecompositionWitness> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    std::vector<WitnessTerm> terms;
    terms.push_back({"V0*q" + idx(k) + "*U(n-1)", vinits[0], q(k) * u[n - 1]});
    for (std::size_t m = 0; m + 3 <= k; ++m) {
      ExactValue inner = 0;
      std::string label = "V" + idx(m + 1) + "*[";
      for (std::size_t j = 0; j <= m + 1; ++j) {
        const std::size_t qi = k - (m + 1) + j;
        inner += q(qi) * u[n - 1 - j];
        label += (j ? "+q" : "q") + idx(qi) + "*U(" + shift(1 + j) + ")";
      }
      terms.push_back({label + "]", vinits[m + 1], inner});
    }
    terms.push_back({"V" + idx(k - 1) + "*U(n)", vinits[k - 1], u[n]});
    out.push_back(make_witness("horadam-like", n, v[n], std::move(terms)));
  }
  return out;
}

DecompositionWitness decompose_horadam_like(const RecurrenceSpec& uspec, const std::vector<Rational>& vinits,
                                            std::size_t n) {
  return decompose_horadam_like_range(uspec, vinits, n, n).front();
}

std::vector<DecompositionWitness> decompose_periodic2_range(const Rational& a, const Rational& b,
                                                            const Rational& g0, const Rational& g1,
                                                            std::size_t lo, std::size_t hi) {
  require_range(lo, hi, 1, "two-periodic identity");
  const auto g = evaluate_periodic_range(periodic2_spec(a, b, g0, g1), hi);
  const auto fab = evaluate_periodic_range(periodic2_spec(a, b), hi);
  const auto fba = evaluate_periodic_range(periodic2_spec(b, a), hi);
  std::vector<DecompositionWitness> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    out.push_back(make_witness("periodic2", n, g[n],
                               {{"G1*F(n;a,b)", g1, fab[n]}, {"G0*F(n-1;b,a)", g0, fba[n - 1]}}));
  }
  return out;
}

DecompositionWitness decompose_periodic2(const Rational& a, const Rational& b, const Rational& g0,
                                         const Rational& g1, std::size_t n) {
  return decompose_periodic2_range(a, b, g0, g1, n, n).front();
}

std::vector<DecompositionWitness> periodic2_swap_relation_range(const Rational& a, const Rational& b,
                                                                std::size_t lo, std::size_t hi) {
  require_range(lo, hi, 1, "swap relation");
  if (a == 0) throw std::invalid_argument("parameter a must be nonzero");
  const auto fab = evaluate_periodic_range(periodic2_spec(a, b), hi);
  const auto fba = evaluate_periodic_range(periodic2_spec(b, a), hi);
  std::vector<DecompositionWitness> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    const Rational factor = swap_factor(a, b, n);
    out.push_back(make_witness("swap", n, fba[n - 1],
                               {{n % 2 ? "(b/a)^1*F(n-1;a,b)" : "(b/a)^0*F(n-1;a,b)", factor, fab[n - 1]}}));
  }
  return out;
}

DecompositionWitness periodic2_swap_relation(const Rational& a, const Rational& b, std::size_t n) {
  return periodic2_swap_relation_range(a, b, n, n).front();
}

std::vector<DecompositionWitness> decompose_periodic2_edson_range(const Rational& a, const Rational& b,
                                                                  const Rational& g0, const Rational& g1,
                                                                  std::size_t lo, std::size_t hi) {
  require_range(lo, hi, 1, "two-periodic identity");
  if (a == 0) throw std::invalid_argument("parameter a must be nonzero");
  const auto g = evaluate_periodic_range(periodic2_spec(a, b, g0, g1), hi);
  const auto fab = evaluate_periodic_range(periodic2_spec(a, b), hi);
  std::vector<DecompositionWitness> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    const Rational factor = swap_factor(a, b, n);
    out.push_back(make_witness("periodic2-edson", n, g[n],
                               {{"G1*F(n;a,b)", g1, fab[n]},
                                {"G0*(b/a)^(n mod 2)*F(n-1;a,b)", g0, factor * fab[n - 1]}}));
  }
  return out;
}

DecompositionWitness decompose_periodic2_edson(const Rational& a, const Rational& b, const Rational& g0,
                                               const Rational& g1, std::size_t n) {
  return decompose_periodic2_edson_range(a, b, g0, g1, n, n).front();
}

std::vector<DecompositionWitness> decompose_periodic3_range(const Rational& a, const Rational& b,
                                                            const Rational& c,
                                                            const std::vector<Rational>& uinits,
                                                            std::size_t lo, std::size_t hi) {
  if (uinits.size() != 3) throw std::invalid_argument("ternary relation needs three initial terms");
  require_range(lo, hi, 2, "ternary relation");
  const auto u = evaluate_periodic_range(ternary_spec(a, b, c, uinits), hi);
  const auto t_abc = evaluate_periodic_range(ternary_spec(a, b, c), hi);
  const auto t_bca = evaluate_periodic_range(ternary_spec(b, c, a), hi);
  const auto t_cab = evaluate_periodic_range(ternary_spec(c, a, b), hi);
  std::vector<DecompositionWitness> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    out.push_back(make_witness("periodic3", n, u[n],
                               {{"U0*T(n-1;b,c,a)", uinits[0], t_bca[n - 1]},
                                {"U1*[T(n-1;b,c,a)+T(n-2;c,a,b)]", uinits[1], t_bca[n - 1] + t_cab[n - 2]},
                                {"U2*T(n;a,b,c)", uinits[2], t_abc[n]}}));
  }
  return out;
}

DecompositionWitness decompose_periodic3(const Rational& a, const Rational& b, const Rational& c,
                                         const std::vector<Rational>& uinits, std::size_t n) {
  return decompose_periodic3_range(a, b, c, uinits, n, n).front();
}

std::vector<DecompositionWitness> decompose_periodic_k_range(const std::vector<Rational>& leading,
                                                             const std::vector<Rational>& ginits,
                                                             std::size_t lo, std::size_t hi,
                                                             PeriodicKIndexing indexing) {
  const std::size_t k = leading.size();
  if (k < 3) throw std::invalid_argument("k-periodic relation needs k >= 3");
  if (ginits.size() != k) {
    throw std::invalid_argument("expected " + idx(k) + " initial terms, got " + idx(ginits.size()));
  }
  require_range(lo, hi, k, "k-periodic relation");

  const PeriodicSpec base = k_periodic_spec(leading);
  const auto g = evaluate_periodic_range(base.with_inits(ginits), hi);
  // rotations[s] is the basis sequence with leading coefficients (k;s)
  std::vector<std::vector<ExactValue>> rotations;
  for (std::size_t s = 0; s <= k; ++s) rotations.push_back(evaluate_periodic_range(base.rotated(s), hi));

  const std::size_t offset = indexing == PeriodicKIndexing::primary ? 1 : 0;
  const std::string name = indexing == PeriodicKIndexing::primary ? "periodic-k" : "periodic-k-shifted";

  std::vector<DecompositionWitness> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    std::vector<WitnessTerm> terms;
    terms.push_back({"G0*F(n-1;k;" + idx(offset) + ")", ginits[0], rotations[offset][n - 1]});
    for (std::size_t m = 0; m + 3 <= k; ++m) {
      ExactValue inner = 0;
      std::string label = "G" + idx(m + 1) + "*[";
      for (std::size_t j = 0; j <= m + 1; ++j) {
        inner += rotations[j + offset][n - 1 - j];
        label += (j ? "+F(" : "F(") + shift(1 + j) + ";k;" + idx(j + offset) + ")";
      }
      terms.push_back({label + "]", ginits[m + 1], inner});
    }
    terms.push_back({"G" + idx(k - 1) + "*F(n)", ginits[k - 1], rotations[0][n]});
    out.push_back(make_witness(name, n, g[n], std::move(terms)));
  }
  return out;
}

DecompositionWitness decompose_periodic_k(const std::vector<Rational>& leading,
                                          const std::vector<Rational>& ginits, std::size_t n,
                                          PeriodicKIndexing indexing) {
  return decompose_periodic_k_range(leading, ginits, n, n, indexing).front();
}

Verdict summarize(const std::vector<DecompositionWitness>& witnesses) {
  Verdict v;
  if (!witnesses.empty()) v.identity = witnesses.front().identity;
  for (const auto& w : witnesses) {
    ++v.checked;
    if (!w.holds) {
      ++v.failures;
      if (!v.first_counterexample) v.first_counterexample = w;
    }
  }
  return v;
}

}  // namespace knacci
