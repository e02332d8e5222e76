#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "tripart/core.hpp"
#include "tripart/error.hpp"

inline tripart::Partition P(const char* text) { return tripart::parse_partition(text); }

inline std::set<tripart::Partition> as_set(const std::vector<tripart::Partition>& v) { return {v.begin(), v.end()}; }

// The code carried by a thrown tripart::Error, or nothing.
template <class F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const tripart::Error& e) {
    return std::string(tripart::errc_name(e.code()));
  }
  return "no error";
}

inline std::vector<std::string> texts(const std::vector<tripart::Partition>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(tripart::to_string(p));
  std::sort(out.begin(), out.end());
  return out;
}
