#pragma once

#include <braidgs/rewriter.hpp>
#include <braidgs/rules.hpp>
#include <braidgs/verifier.hpp>

#include <json.hpp>

namespace braidgs {

// Every JSON document written by the CLI carries this version number.
inline constexpr int kJsonSchemaVersion = 1;

using Json = nlohmann::ordered_json;

/// {"version", "strands", "pure_parts": {"<j>": [tokens]}, "tail": {"<j>": i_j}},
/// levels j = n ... 2 always present and in that order.
Json decomposition_json(const NormalFormDecomposition& d);

Json rules_json(const RuleSet& rules);

Json report_json(const VerificationReport& report);

}  // namespace braidgs
