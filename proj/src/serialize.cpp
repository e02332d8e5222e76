#include "tripart/serialize.hpp"

namespace tripart {

nlohmann::json to_json(const Partition& p) {
  return {{"parts", std::vector<Int>(p.parts().begin(), p.parts().end())},
          {"mults", std::vector<Int>(p.mults().begin(), p.mults().end())},
          {"text", to_string(p)},
          {"size", p.size()},
          {"dimension", p.dimension()}};
}

Partition partition_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_partition(j.get<std::string>());
  if (!j.is_object() || !j.contains("parts") || !j.contains("mults"))
    throw Error(Errc::BadPartitionText, "expected {\"parts\": [...], \"mults\": [...]}");
  try {
    return Partition(j.at("parts").get<std::vector<Int>>(), j.at("mults").get<std::vector<Int>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::BadPartitionText, e.what());
  }
}

}  // namespace tripart
