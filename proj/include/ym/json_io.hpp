#pragma once

/*
 * JSON forms of the module reports.  Rationals and big integers are
 * written as decimal strings ("-3/4", "12") so that nothing is rounded;
 * every writer has a matching reader and the pair round-trips exactly.
 */

#include <json.hpp>

#include "ym/levidata.hpp"
#include "ym/nonorient.hpp"
#include "ym/strata.hpp"

namespace ym {

using Json = nlohmann::json;

Json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);

Json root_system_to_json(const RootSystem& rs);
RootSystem root_system_from_json(const Json& j);

Json levi_profile_to_json(const LeviProfile& p);
LeviProfile levi_profile_from_json(const Json& j);

Json recursion_report_to_json(const RecursionReport& r);
RecursionReport recursion_report_from_json(const Json& j);

Json component_report_to_json(const ComponentReport& r);
ComponentReport component_report_from_json(const Json& j);

}  // namespace ym
