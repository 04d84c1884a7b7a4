#pragma once

#include "joininv/linking.hpp"
#include "joininv/mvengine.hpp"

#include "json.hpp"

namespace joininv {

using json = nlohmann::ordered_json;

json to_json(const JoinParams& p);
json to_json(const CohomologyProfile& profile);
json to_json(const LinkingForm& f);
json to_json(const InvariantReport& report);

// The complete CLI document: schema tag, params, presentations, profiles,
// Euler classes, linking forms, fingerprint, checks and provenance.
json full_report_json(const InvariantReport& report);

} // namespace joininv
