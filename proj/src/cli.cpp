#include "knacci/cli.hpp"

#include "knacci/charpoly.hpp"
#include "knacci/convergence.hpp"
#include "knacci/identities.hpp"
#include "knacci/json_io.hpp"
#include "knacci/seqcore.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

namespace knacci::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::pair<std::size_t, std::size_t> parse_index_range(const std::string& text) {
  const auto to_index = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("malformed index range '" + text + "'");
    }
    return std::stoull(s);
  };
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = to_index(text.substr(0, dots));
    const auto hi = to_index(text.substr(dots + 2));
    if (hi < lo) throw UsageError("index range '" + text + "' is empty");
    return {lo, hi};
  }
  const auto n = to_index(text);
  return {n, n};
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

// ---------------------------------------------------------------------------
// sequence sources shared by gen, root and limit

struct SourceFlags {
  std::size_t knacci = 0;
  std::string coeffs, periodic2, ternary, periodic, spec_file, inits;

  void attach(CLI::App* app) {
    app->add_option("--knacci", knacci, "k-nacci sequence of order K");
    app->add_option("--coeffs", coeffs, "constant coefficients q1,...,qk");
    app->add_option("--periodic2", periodic2, "two-periodic parameters a,b");
    app->add_option("--ternary", ternary, "three-periodic parameters a,b,c");
    app->add_option("--periodic", periodic, "k-periodic leading coefficients a1,...,ak");
    app->add_option("--spec", spec_file, "spec JSON file");
    app->add_option("--inits", inits, "initial terms (default 0,...,0,1)");
  }

  AnySpec resolve() const {
    const int given = (knacci != 0) + !coeffs.empty() + !periodic2.empty() + !ternary.empty() + !periodic.empty() +
                      !spec_file.empty();
    if (given != 1) {
      throw UsageError("give exactly one of --knacci, --coeffs, --periodic2, --ternary, --periodic, --spec");
    }
    if (!spec_file.empty()) {
      if (!inits.empty()) throw UsageError("--inits cannot be combined with --spec");
      std::ifstream in(spec_file);
      if (!in) throw UsageError("cannot open spec file '" + spec_file + "'");
      json doc;
      try {
        in >> doc;
      } catch (const json::exception& e) {
        throw UsageError(std::string("malformed spec JSON: ") + e.what());
      }
      return spec_from_json(doc);
    }

    std::optional<std::vector<Rational>> init_values;
    if (!inits.empty()) init_values = parse_list(inits);

    if (knacci != 0 || !coeffs.empty()) {
      RecurrenceSpec base = knacci != 0 ? knacci_spec(knacci) : horadam_spec(parse_list(coeffs).size(), parse_list(coeffs));
      if (!init_values) return base;
      return RecurrenceSpec(base.coeffs(), *init_values);
    }
    if (!periodic2.empty()) {
      const auto ab = parse_list(periodic2);
      if (ab.size() != 2) throw UsageError("--periodic2 expects a,b");
      PeriodicSpec s = periodic2_spec(ab[0], ab[1]);
      return init_values ? s.with_inits(*init_values) : s;
    }
    if (!ternary.empty()) {
      const auto abc = parse_list(ternary);
      if (abc.size() != 3) throw UsageError("--ternary expects a,b,c");
      PeriodicSpec s = ternary_spec(abc[0], abc[1], abc[2]);
      return init_values ? s.with_inits(*init_values) : s;
    }
    PeriodicSpec s = k_periodic_spec(parse_list(periodic));
    return init_values ? s.with_inits(*init_values) : s;
  }
};

// ---------------------------------------------------------------------------
// gen

struct GenFlags {
  SourceFlags source;
  std::size_t from = 0;
  std::size_t to = 0;
  bool to_given = false;
  bool fast = false;
  std::optional<double> at;
};

int cmd_gen(const CliConfig& cfg, const GenFlags& f, std::ostream& out) {
  const AnySpec spec = f.source.resolve();

  if (f.at) {
    const auto* periodic = std::get_if<PeriodicSpec>(&spec);
    if (!periodic) throw UsageError("--at applies to periodic sequences");
    const ExactValue v = evaluate_floor_indexed(*periodic, *f.at);
    switch (cfg.output) {
      case OutputFormat::json: out << json{{"x", *f.at}, {"value", to_string(v)}}.dump() << '\n'; break;
      case OutputFormat::csv: out << "x,value\n" << *f.at << ',' << to_string(v) << '\n'; break;
      case OutputFormat::plain: out << to_string(v) << '\n'; break;
    }
    return kExitOk;
  }

  if (!f.to_given) throw UsageError("gen needs --to");
  if (f.to < f.from) throw UsageError("--to must not be below --from");
  if (f.fast && !std::holds_alternative<RecurrenceSpec>(spec)) {
    throw UsageError("--fast applies to constant-coefficient sequences");
  }

  std::vector<std::pair<std::size_t, ExactValue>> terms;
  if (f.fast) {
    const auto& r = std::get<RecurrenceSpec>(spec);
    for (std::size_t n = f.from; n <= f.to; ++n) terms.emplace_back(n, evaluate_fast(r, n));
  } else {
    const auto all = evaluate_range(spec, f.to);
    for (std::size_t n = f.from; n <= f.to; ++n) terms.emplace_back(n, all[n]);
  }

  switch (cfg.output) {
    case OutputFormat::json: {
      json arr = json::array();
      for (const auto& [n, v] : terms) arr.push_back({{"n", n}, {"value", to_string(v)}});
      out << json{{"spec", spec_to_json(spec)}, {"terms", std::move(arr)}}.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "n,value\n";
      for (const auto& [n, v] : terms) out << n << ',' << to_string(v) << '\n';
      break;
    case OutputFormat::plain:
      for (const auto& [n, v] : terms) out << to_string(v) << '\n';
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyFlags {
  std::string identity;
  std::size_t k = 0;
  std::string inits, coeffs, a, b, c, leading;
  std::string range;
  std::size_t trials = 1;
};

struct TrialParams {
  std::map<std::string, std::string> shown;  // for reporting, sorted by key
  std::vector<Rational> inits, coeffs, leading;
  Rational a, b, c;
  std::size_t k = 0;
};

struct TrialResult {
  TrialParams params;
  std::vector<std::vector<DecompositionWitness>> runs;  // one per formula variant
};

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{"canonical", "knacci-like", "horadam-like", "periodic2",
                                              "periodic2-edson", "swap", "periodic3", "periodic-k"};
  return names;
}

class ParamDrawer {
 public:
  explicit ParamDrawer(std::uint64_t seed) : rng_(seed) {}

  std::size_t integer(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  Rational nonzero_rational() {
    long p = 0;
    while (p == 0) p = std::uniform_int_distribution<long>(-9, 9)(rng_);
    return Rational(p, std::uniform_int_distribution<long>(1, 9)(rng_));
  }

  Rational rational() { return integer(0, 4) == 0 ? Rational(0) : nonzero_rational(); }

  std::vector<Rational> inits(std::size_t k) {
    std::vector<Rational> v;
    do {
      v.clear();
      for (std::size_t i = 0; i < k; ++i) v.emplace_back(static_cast<long>(integer(0, 9)));
    } while (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; }));
    return v;
  }

  std::vector<Rational> ordered_coeffs(std::size_t k) {
    std::vector<long> q(k);
    for (auto& x : q) x = static_cast<long>(integer(1, 5));
    std::sort(q.rbegin(), q.rend());
    return {q.begin(), q.end()};
  }

 private:
  std::mt19937_64 rng_;
};

TrialParams draw_params(const VerifyFlags& f, ParamDrawer& draw) {
  TrialParams p;
  const auto& id = f.identity;
  const auto given = [](const std::string& s) { return !s.empty(); };

  if (id == "canonical") {
    p.k = 2;
  } else if (id == "knacci-like") {
    p.k = f.k ? f.k : given(f.inits) ? parse_list(f.inits).size() : draw.integer(2, 7);
  } else if (id == "horadam-like") {
    p.coeffs = given(f.coeffs) ? parse_list(f.coeffs) : draw.ordered_coeffs(f.k ? f.k : draw.integer(2, 6));
    p.k = p.coeffs.size();
    p.shown["coeffs"] = join(p.coeffs);
  } else if (id == "periodic2" || id == "periodic2-edson" || id == "swap" || id == "periodic3") {
    p.k = id == "periodic3" ? 3 : 2;
    const bool need_nonzero_a = id != "periodic2";
    p.a = given(f.a) ? parse_rational(f.a) : need_nonzero_a ? draw.nonzero_rational() : draw.rational();
    p.b = given(f.b) ? parse_rational(f.b) : draw.rational();
    p.shown["a"] = to_string(p.a);
    p.shown["b"] = to_string(p.b);
    if (id == "periodic3") {
      p.c = given(f.c) ? parse_rational(f.c) : draw.rational();
      p.shown["c"] = to_string(p.c);
    }
  } else if (id == "periodic-k") {
    p.leading = given(f.leading) ? parse_list(f.leading) : [&] {
      std::vector<Rational> v;
      const std::size_t k = f.k ? f.k : draw.integer(3, 5);
      for (std::size_t i = 0; i < k; ++i) v.push_back(draw.rational());
      return v;
    }();
    p.k = p.leading.size();
    p.shown["leading"] = join(p.leading);
  } else {
    throw UsageError("unknown identity '" + id + "'");
  }

  if (id != "swap") {
    p.inits = given(f.inits) ? parse_list(f.inits) : draw.inits(p.k);
    if (p.inits.size() != p.k) {
      throw UsageError("--inits needs " + std::to_string(p.k) + " values for " + id);
    }
    p.shown["inits"] = join(p.inits);
  }
  p.shown["k"] = std::to_string(p.k);
  return p;
}

std::pair<std::size_t, std::size_t> default_range(const std::string& id, std::size_t k) {
  if (id == "knacci-like" || id == "horadam-like" || id == "periodic-k") return {k, k + 30};
  if (id == "periodic3") return {2, 30};
  return {1, 30};
}

TrialResult run_trial(const std::string& id, TrialParams p, std::size_t lo, std::size_t hi) {
  TrialResult r;
  if (id == "canonical") {
    r.runs.push_back(decompose_canonical_range(p.inits[0], p.inits[1], lo, hi));
  } else if (id == "knacci-like") {
    r.runs.push_back(decompose_knacci_like_range(fibonacci_like_spec(p.inits), lo, hi));
  } else if (id == "horadam-like") {
    r.runs.push_back(decompose_horadam_like_range(horadam_spec(p.k, p.coeffs), p.inits, lo, hi));
  } else if (id == "periodic2") {
    r.runs.push_back(decompose_periodic2_range(p.a, p.b, p.inits[0], p.inits[1], lo, hi));
  } else if (id == "periodic2-edson") {
    r.runs.push_back(decompose_periodic2_edson_range(p.a, p.b, p.inits[0], p.inits[1], lo, hi));
  } else if (id == "swap") {
    r.runs.push_back(periodic2_swap_relation_range(p.a, p.b, lo, hi));
  } else if (id == "periodic3") {
    r.runs.push_back(decompose_periodic3_range(p.a, p.b, p.c, p.inits, lo, hi));
  } else if (id == "periodic-k") {
    r.runs.push_back(decompose_periodic_k_range(p.leading, p.inits, lo, hi, PeriodicKIndexing::primary));
    r.runs.push_back(decompose_periodic_k_range(p.leading, p.inits, lo, hi, PeriodicKIndexing::shifted));
  }
  r.params = std::move(p);
  return r;
}

std::string describe(const std::map<std::string, std::string>& shown) {
  std::string s;
  for (const auto& [key, value] : shown) s += (s.empty() ? "" : " ") + key + "=" + value;
  return s;
}

int cmd_verify(const CliConfig& cfg, const VerifyFlags& f, std::ostream& out) {
  if (std::find(identity_names().begin(), identity_names().end(), f.identity) == identity_names().end()) {
    throw UsageError("unknown identity '" + f.identity + "'");
  }
  if (f.trials == 0) throw UsageError("--trials must be at least 1");

  // Parameters are drawn sequentially so a seed replays exactly; the trials
  // themselves run concurrently and are collected in draw order.
  ParamDrawer draw(cfg.seed);
  std::vector<TrialParams> params;
  for (std::size_t t = 0; t < f.trials; ++t) params.push_back(draw_params(f, draw));

  std::vector<std::future<TrialResult>> pending;
  for (auto& p : params) {
    const auto [lo, hi] = f.range.empty() ? default_range(f.identity, p.k) : parse_index_range(f.range);
    pending.push_back(std::async(std::launch::async, run_trial, f.identity, std::move(p), lo, hi));
  }
  std::vector<TrialResult> results;
  for (auto& fut : pending) results.push_back(fut.get());

  // Exit status follows the primary indexing (first run); the shifted
  // k-periodic variant is reported alongside.
  std::size_t primary_failures = 0;
  std::map<std::string, Verdict> totals;
  std::vector<std::string> order;
  for (const auto& r : results) {
    for (std::size_t v = 0; v < r.runs.size(); ++v) {
      const Verdict verdict = summarize(r.runs[v]);
      if (v == 0) primary_failures += verdict.failures;
      auto [it, inserted] = totals.try_emplace(verdict.identity, Verdict{verdict.identity, 0, 0, std::nullopt});
      if (inserted) order.push_back(verdict.identity);
      it->second.checked += verdict.checked;
      it->second.failures += verdict.failures;
      if (!it->second.first_counterexample && verdict.first_counterexample) {
        it->second.first_counterexample = verdict.first_counterexample;
      }
    }
  }

  switch (cfg.output) {
    case OutputFormat::json: {
      json trials = json::array();
      for (const auto& r : results) {
        json runs = json::array();
        for (const auto& run : r.runs) {
          json flags = json::array();
          for (const auto& w : run) flags.push_back({{"n", w.n}, {"holds", w.holds}});
          runs.push_back({{"verdict", verdict_to_json(summarize(run))}, {"per_n", std::move(flags)}});
        }
        trials.push_back({{"parameters", r.params.shown}, {"runs", std::move(runs)}});
      }
      json verdicts = json::array();
      for (const auto& name : order) verdicts.push_back(verdict_to_json(totals.at(name)));
      out << json{{"identity", f.identity},
                  {"seed", cfg.seed},
                  {"trials", std::move(trials)},
                  {"verdicts", std::move(verdicts)},
                  {"failures", primary_failures},
                  {"holds", primary_failures == 0}}
                 .dump()
          << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "trial,identity,n,lhs,rhs,holds\n";
      for (std::size_t t = 0; t < results.size(); ++t) {
        for (const auto& run : results[t].runs) {
          for (const auto& w : run) {
            out << t << ',' << w.identity << ',' << w.n << ',' << to_string(w.lhs) << ',' << to_string(w.rhs) << ','
                << (w.holds ? "true" : "false") << '\n';
          }
        }
      }
      break;
    case OutputFormat::plain:
      for (std::size_t t = 0; t < results.size(); ++t) {
        const auto& r = results[t];
        out << "trial " << t << ": " << describe(r.params.shown) << '\n';
        for (const auto& run : r.runs) {
          const Verdict v = summarize(run);
          out << "  " << v.identity << ": " << (v.holds() ? "holds" : "FAILS") << " (" << v.checked << " checked, "
              << v.failures << " failures)";
          if (v.first_counterexample) {
            const auto& w = *v.first_counterexample;
            out << "; first counterexample n=" << w.n << " lhs=" << to_string(w.lhs) << " rhs=" << to_string(w.rhs);
          }
          out << '\n';
          if (results.size() == 1) {
            for (const auto& w : run) out << "    n=" << w.n << ' ' << (w.holds ? "holds" : "fails") << '\n';
          }
        }
      }
      for (const auto& name : order) {
        const Verdict& v = totals.at(name);
        out << "verdict " << name << ": " << (v.holds() ? "holds" : "counterexample found") << " (" << v.checked
            << " checked, " << v.failures << " failures)\n";
      }
      break;
  }
  return primary_failures == 0 ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// root

std::string polynomial_text(const CharPoly& p) {
  const std::size_t k = p.degree();
  std::string s = "x^" + std::to_string(k);
  for (std::size_t i = 1; i <= k; ++i) {
    const Rational& q = p.coeffs[i - 1];
    if (q == 0) continue;
    s += q > 0 ? " - " : " + ";
    const Rational mag = abs(q);
    const std::size_t power = k - i;
    if (mag != 1 || power == 0) s += to_string(mag);
    if (power >= 1) s += (mag != 1 ? "*x" : "x");
    if (power >= 2) s += "^" + std::to_string(power);
  }
  return s;
}

int cmd_root(const CliConfig& cfg, const SourceFlags& source, std::ostream& out) {
  const AnySpec spec = source.resolve();
  if (!std::holds_alternative<RecurrenceSpec>(spec)) {
    throw UsageError("root: periodic sequences have no single characteristic polynomial");
  }
  const CharPoly poly = charpoly_of(spec);
  const RootSet roots = all_roots(poly, cfg.precision);
  const unsigned digits = cfg.precision;

  std::optional<bool> inside;
  if (roots.ordered) inside = roots.dominant > to_real(poly.coeffs.front()) && roots.dominant < to_real(poly.coeffs.front() + 1);

  switch (cfg.output) {
    case OutputFormat::json: {
      json doc = rootset_to_json(roots, digits);
      doc["polynomial"] = polynomial_text(poly);
      doc["bracket"] = inside ? json{{"lo", to_string(poly.coeffs.front())},
                                     {"hi", to_string(poly.coeffs.front() + 1)},
                                     {"inside", *inside}}
                              : json(nullptr);
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "root,re,im,modulus\n";
      out << "dominant," << to_decimal(roots.dominant, digits) << ",0," << to_decimal(roots.dominant, digits) << '\n';
      for (const auto& r : roots.others) {
        out << "other," << to_decimal(r.real(), digits) << ',' << to_decimal(r.imag(), digits) << ','
            << to_decimal(Real(abs(r)), digits) << '\n';
      }
      break;
    case OutputFormat::plain:
      out << "polynomial: " << polynomial_text(poly) << '\n';
      out << "dominant: " << to_decimal(roots.dominant, digits) << '\n';
      if (inside) {
        out << "bracket (" << to_string(poly.coeffs.front()) << ", " << to_string(poly.coeffs.front() + 1)
            << "): " << (*inside ? "inside" : "OUTSIDE") << '\n';
      } else {
        out << "bracket: coefficients not ordered q1 >= ... >= qk >= 1, no bracket guarantee\n";
      }
      out << "other roots:\n";
      for (const auto& r : roots.others) {
        out << "  " << to_decimal(r.real(), digits) << (r.imag() < 0 ? " - " : " + ")
            << to_decimal(Real(abs(r.imag())), digits) << "i  |z| = " << to_decimal(Real(abs(r)), digits) << '\n';
      }
      out << "max modulus: " << to_decimal(roots.moduli_bound, digits) << '\n';
      out << "residual: " << to_decimal(roots.residual, 6) << '\n';
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// limit

struct LimitFlags {
  SourceFlags source;
  std::string sub = "all";
  std::size_t step = 1;
  std::size_t nmax = 0;
  bool claims = false;
};

int cmd_limit(const CliConfig& cfg, const LimitFlags& f, std::ostream& out) {
  const AnySpec spec = f.source.resolve();
  const Subsequence sub = parse_subsequence(f.sub);
  const RatioReport report = ratio_limit(spec, f.step, sub, f.nmax, cfg.precision);
  const unsigned digits = cfg.precision;

  std::vector<LimitClaim> claims;
  if (f.claims) {
    const auto* p = std::get_if<PeriodicSpec>(&spec);
    if (!p || p->period() != 2 || p->order() != 2) throw UsageError("--claims applies to --periodic2 sequences");
    claims = periodic2_limit_claims(p->leading()[0], p->leading()[1], p->inits()[0], p->inits()[1],
                                    f.nmax ? f.nmax : default_nmax(spec), cfg.precision);
  }

  switch (cfg.output) {
    case OutputFormat::json: {
      json doc = ratio_report_to_json(report, digits);
      doc["spec"] = spec_to_json(spec);
      if (f.claims) {
        json arr = json::array();
        for (const auto& c : claims) {
          arr.push_back({{"claim", c.label},
                         {"claimed", to_decimal(c.claimed, digits)},
                         {"observed", to_decimal(c.observed, digits)},
                         {"matches", c.matches}});
        }
        doc["claims"] = std::move(arr);
      }
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << ratio_report_to_csv(report, digits);
      break;
    case OutputFormat::plain:
      out << "subsequence: " << to_string(report.subsequence) << ", step " << report.step << ", "
          << report.samples.size() << " samples up to n=" << report.samples.back().n << '\n';
      out << "estimate: " << to_decimal(report.estimate, digits) << '\n';
      out << "reference: " << (report.reference ? to_decimal(*report.reference, digits) : "none") << '\n';
      out << "gap: " << (report.gap ? to_decimal(*report.gap, 6) : "n/a") << '\n';
      out << "monotone tail: " << (report.monotone_tail ? "yes" : "no") << '\n';
      for (const auto& c : claims) {
        out << "claim " << c.label << ": " << (c.matches ? "matches" : "does not match") << " (claimed "
            << to_decimal(c.claimed, 12) << ", observed " << to_decimal(c.observed, 12) << ")\n";
      }
      break;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact k-generalized Fibonacci, Horadam and periodic recurrence toolkit", "knacci"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  std::string output = "plain";
  app.add_option("--precision", cfg.precision, "working precision in decimal digits (>= 15)");
  app.add_option("--output", output, "json, csv or plain");
  app.add_option("--seed", cfg.seed, "seed for randomized verification");

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "print exact terms");
  gen.source.attach(gen_cmd);
  gen_cmd->add_option("--from", gen.from, "first index");
  auto* to_opt = gen_cmd->add_option("--to", gen.to, "last index");
  gen_cmd->add_flag("--fast", gen.fast, "use the companion-matrix path");
  gen_cmd->add_option("--at", gen.at, "real index x (periodic sequences, term floor(x))");

  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "check a decomposition identity exactly");
  verify_cmd->add_option("identity", verify.identity, "canonical, knacci-like, horadam-like, periodic2, "
                                                      "periodic2-edson, swap, periodic3, periodic-k")
      ->required();
  verify_cmd->add_option("--k", verify.k, "order");
  verify_cmd->add_option("--inits", verify.inits, "initial terms");
  verify_cmd->add_option("--coeffs", verify.coeffs, "Horadam coefficients q1,...,qk");
  verify_cmd->add_option("--a", verify.a, "parameter a");
  verify_cmd->add_option("--b", verify.b, "parameter b");
  verify_cmd->add_option("--c", verify.c, "parameter c");
  verify_cmd->add_option("--leading", verify.leading, "k-periodic leading coefficients");
  verify_cmd->add_option("--n", verify.range, "index range LO..HI");
  verify_cmd->add_option("--trials", verify.trials, "parameter draws; missing parameters are random");

  SourceFlags root_source;
  auto* root_cmd = app.add_subcommand("root", "characteristic polynomial roots");
  root_source.attach(root_cmd);

  LimitFlags limit;
  auto* limit_cmd = app.add_subcommand("limit", "successive-ratio convergence");
  limit.source.attach(limit_cmd);
  limit_cmd->add_option("--sub", limit.sub, "all, even or odd (parity of the denominator index)");
  limit_cmd->add_option("--step", limit.step, "ratio step");
  limit_cmd->add_option("--nmax", limit.nmax, "last index sampled");
  limit_cmd->add_flag("--claims", limit.claims, "check the stated two-periodic parity limits against brute force");

  std::vector<std::string> argv_storage{"knacci"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "knacci: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (cfg.precision < 15) throw UsageError("--precision must be at least 15");
    if (output == "plain") cfg.output = OutputFormat::plain;
    else if (output == "json") cfg.output = OutputFormat::json;
    else if (output == "csv") cfg.output = OutputFormat::csv;
    else throw UsageError("--output must be json, csv or plain");

    if (*gen_cmd) {
      gen.to_given = to_opt->count() > 0;
      return cmd_gen(cfg, gen, out);
    }
    if (*verify_cmd) return cmd_verify(cfg, verify, out);
    if (*root_cmd) return cmd_root(cfg, root_source, out);
    if (*limit_cmd) return cmd_limit(cfg, limit, out);
  } catch (const std::exception& e) {
    err << "knacci: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace knacci::cli
