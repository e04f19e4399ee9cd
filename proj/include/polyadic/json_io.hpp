#pragma once

#include <json.hpp>

#include "polyadic/codes.hpp"

namespace polyadic {

nlohmann::json splitting_to_json(const Splitting& sp);
nlohmann::json code_to_json(const LinearCode& code);
nlohmann::json report_to_json(const BuildReport& rep);

}  // namespace polyadic
