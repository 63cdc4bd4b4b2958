#include "knacci/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace knacci {

namespace {

using nlohmann::json;

json rationals_to_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

std::vector<Rational> rationals_from_json(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_array()) {
    throw std::invalid_argument(std::string("spec field '") + key + "' must be an array");
  }
  std::vector<Rational> out;
  for (const auto& item : doc.at(key)) {
    if (item.is_string()) {
      out.push_back(parse_rational(item.get<std::string>()));
    } else if (item.is_number_integer()) {
      out.emplace_back(item.get<long long>());
    } else {
      throw std::invalid_argument(std::string("spec field '") + key + "' must hold rational strings");
    }
  }
  return out;
}

}  // namespace

json spec_to_json(const AnySpec& spec) {
  if (const auto* r = std::get_if<RecurrenceSpec>(&spec)) {
    return {{"kind", "constant"}, {"k", r->order()}, {"coeffs", rationals_to_json(r->coeffs())},
            {"inits", rationals_to_json(r->inits())}};
  }
  const auto& p = std::get<PeriodicSpec>(spec);
  return {{"kind", "periodic"}, {"k", p.order()}, {"leading", rationals_to_json(p.leading())},
          {"inits", rationals_to_json(p.inits())}};
}

AnySpec spec_from_json(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("spec must be a JSON object");
  if (!doc.contains("kind") || !doc.at("kind").is_string()) throw std::invalid_argument("spec needs a 'kind' string");
  if (!doc.contains("k") || !doc.at("k").is_number_integer()) throw std::invalid_argument("spec needs an integer 'k'");
  const std::string kind = doc.at("kind").get<std::string>();
  const auto k = doc.at("k").get<long long>();
  if (k < 2) throw std::invalid_argument("spec order 'k' must be at least 2");
  const auto order = static_cast<std::size_t>(k);

  if (kind == "constant") {
    auto coeffs = rationals_from_json(doc, "coeffs");
    auto inits = rationals_from_json(doc, "inits");
    if (coeffs.size() != order) throw std::invalid_argument("'coeffs' length differs from 'k'");
    return RecurrenceSpec(std::move(coeffs), std::move(inits));
  }
  if (kind == "periodic") {
    auto leading = rationals_from_json(doc, "leading");
    auto inits = rationals_from_json(doc, "inits");
    return PeriodicSpec(std::move(leading), order, std::move(inits));
  }
  throw std::invalid_argument("spec kind must be 'constant' or 'periodic'");
}

json witness_to_json(const DecompositionWitness& w) {
  json terms = json::array();
  for (const auto& t : w.terms) {
    terms.push_back({{"label", t.label}, {"coefficient", to_string(t.coefficient)},
                     {"basis_value", to_string(t.basis_value)}});
  }
  return {{"identity", w.identity}, {"n", w.n},     {"lhs", to_string(w.lhs)},
          {"rhs", to_string(w.rhs)}, {"holds", w.holds}, {"terms", std::move(terms)}};
}

json verdict_to_json(const Verdict& v) {
  return {{"identity", v.identity},
          {"checked", v.checked},
          {"failures", v.failures},
          {"holds", v.holds()},
          {"first_counterexample", v.first_counterexample ? witness_to_json(*v.first_counterexample) : json(nullptr)}};
}

json rootset_to_json(const RootSet& roots, unsigned digits) {
  json others = json::array();
  for (const auto& r : roots.others) {
    others.push_back({{"re", to_decimal(r.real(), digits)},
                      {"im", to_decimal(r.imag(), digits)},
                      {"modulus", to_decimal(Real(abs(r)), digits)}});
  }
  return {{"dominant", to_decimal(roots.dominant, digits)},
          {"others", std::move(others)},
          {"moduli_bound", to_decimal(roots.moduli_bound, digits)},
          {"residual", to_decimal(roots.residual, 6)},
          {"ordered", roots.ordered},
          {"near_unit_circle", roots.near_unit_circle}};
}

json ratio_report_to_json(const RatioReport& report, unsigned digits) {
  json samples = json::array();
  for (const auto& s : report.samples) samples.push_back(json::array({s.n, to_decimal(s.ratio, digits)}));
  return {{"step", report.step},
          {"subsequence", to_string(report.subsequence)},
          {"samples", std::move(samples)},
          {"estimate", to_decimal(report.estimate, digits)},
          {"reference", report.reference ? json(to_decimal(*report.reference, digits)) : json(nullptr)},
          {"gap", report.gap ? json(to_decimal(*report.gap, 6)) : json(nullptr)},
          {"monotone_tail", report.monotone_tail}};
}

std::string ratio_report_to_csv(const RatioReport& report, unsigned digits) {
  std::ostringstream out;
  out << "n,ratio\n";
  for (const auto& s : report.samples) out << s.n << ',' << to_decimal(s.ratio, digits) << '\n';
  return out.str();
}

}  // namespace knacci
