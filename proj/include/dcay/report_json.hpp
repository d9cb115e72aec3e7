#pragma once

// JSON forms of the library's reports. Group orders are decimal strings and
// permutations are image arrays. Key order is fixed.

#include "dcay/aut_search.hpp"
#include "dcay/connset.hpp"
#include "dcay/structure.hpp"
#include "dcay/theorems.hpp"
#include "json.hpp"

namespace dcay {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Permutation& p);
ordered_json to_json(const PermGroup& g);
ordered_json to_json(const ConnectionSet& cs);
ordered_json to_json(const NormalityEvidence& ev);
ordered_json to_json(const StructureReport& rep);
ordered_json to_json(const TheoremReport& rep);

}  // namespace dcay
