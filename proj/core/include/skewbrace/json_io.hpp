#pragma once

#include "skewbrace/extensions.hpp"

#include <json.hpp>

namespace skb {

using json = nlohmann::json;

// {"order": n, "add": [[...]], "circ": [[...]]}, identity at index 0.
json brace_to_json(const SkewBrace& b);
SkewBrace brace_from_json(const json& j);

// {"modulus": m, "alpha": [[...]], "mu": [[...]]}
json factor_set_to_json(const BraceFactorSet& fs);
BraceFactorSet factor_set_from_json(const json& j, BraceRef Q);

// {"modulus": m, "f": [[...]]}
json group_factor_set_to_json(const GroupFactorSet& fs);

// {"invariant_factors": [...], "generators": [factor-set, ...]}
json cohomology_to_json(const CohomologyGroup& H);
json multiplier_to_json(const MultiplierResult& M);

// {"K": [...factors...], "Q": brace, "cocycle": factor-set or [factor-set...]}
json extension_to_json(const AnnihilatorExtension& ext);
AnnihilatorExtension extension_from_json(const json& j);

json info_report(const BraceRef& b);

} // namespace skb
