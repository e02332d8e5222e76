#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tripart/identities.hpp"
#include "tripart/qseries.hpp"
#include "tripart/trimap.hpp"

namespace tripart::report {

enum class Format { Text, Json, Csv };

/// "text" (or "table"), "json", "csv". Throws std::invalid_argument.
Format parse_format(std::string_view name);

nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const CountReport& r);
nlohmann::json to_json(const BijectionCertificate& c);
nlohmann::json to_json(const SeriesCoeffs& s, const std::string& name);
nlohmann::json to_json(const MapStep& s);

std::string render(const CountReport& r, Format f);
std::string render(const BijectionCertificate& c, Format f);
std::string render(const SeriesCoeffs& s, const std::string& name, Format f);
std::string render(const std::vector<SeriesCheck>& checks, Format f);
std::string render_partitions(const std::vector<Partition>& items, Format f);
std::string render_registry(Format f);

}  // namespace tripart::report
