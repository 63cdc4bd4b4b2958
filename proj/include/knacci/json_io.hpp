#pragma once

// Wire formats.
//
//   spec     {"kind": "constant", "k": 3, "coeffs": ["1","1","1"], "inits": ["0","0","1"]}
//            {"kind": "periodic", "k": 2, "leading": ["1/5","3/10"], "inits": ["2","3"]}
//   witness  {"identity", "n", "lhs", "rhs", "holds", "terms": [{"label", "coefficient", "basis_value"}]}
//   roots    {"dominant", "others": [{"re", "im", "modulus"}], "residual", ...}
//   ratios   {"samples": [[n, "decimal"], ...], "estimate", "reference" | null, "gap" | null, ...}
//
// Rationals are "p/q" strings ("p" for integers); reals are decimal strings.

#include "knacci/charpoly.hpp"
#include "knacci/convergence.hpp"
#include "knacci/identities.hpp"
#include "knacci/seqcore.hpp"

#include <json.hpp>

#include <string>

namespace knacci {

nlohmann::json spec_to_json(const AnySpec& spec);
/// Throws std::invalid_argument on a malformed document.
AnySpec spec_from_json(const nlohmann::json& doc);

nlohmann::json witness_to_json(const DecompositionWitness& w);
nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json rootset_to_json(const RootSet& roots, unsigned digits);
nlohmann::json ratio_report_to_json(const RatioReport& report, unsigned digits);
/// Header "n,ratio", one line per sample.
std::string ratio_report_to_csv(const RatioReport& report, unsigned digits);

}  // namespace knacci
