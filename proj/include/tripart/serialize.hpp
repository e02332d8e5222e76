#pragma once

#include "json.hpp"
#include "tripart/core.hpp"

namespace tripart {

/// {"parts":[...],"mults":[...]}
nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

}  // namespace tripart
