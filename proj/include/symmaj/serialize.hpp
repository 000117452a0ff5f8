#ifndef SYMMAJ_SERIALIZE_HPP
#define SYMMAJ_SERIALIZE_HPP

#include "symmaj/rules.hpp"

#include <json.hpp>

#include <string>

namespace symmaj {

using Json = nlohmann::json;

Json spec_to_json(SubgroupSpec const &spec);
SubgroupSpec spec_from_json(Json const &doc);

Json orbit_report_to_json(Group const &u, OrbitReport const &report);
Json count_to_json(Group const &u, CountReport const &report);

/// {h, n, subgroup, minimal, entries: [{representative, choice, options?}], counts}.
/// Options are written only when `with_options` is set.
Json rule_to_json(RuleTable const &rule, bool with_options = false);

/// Rebuilds a rule and checks it: every representative must be the canonical
/// form of its orbit, the orbits must cover the profile space exactly once,
/// each choice must be admissible and the stored counts must match.
/// Throws ValidationError otherwise.
RuleTable rule_from_json(Json const &doc, std::uint64_t element_cap = kDefaultElementCap);

/// Two-space indentation, sorted keys, trailing newline.
std::string dump(Json const &doc);

} // namespace symmaj

#endif // SYMMAJ_SERIALIZE_HPP
