#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "pinloop/io.hpp"

namespace pinloop::testing {

inline std::string fixture(const std::string& name) { return std::string(PINLOOP_FIXTURES) + "/" + name; }

inline std::vector<RegionId> regions_named(const io::MultiloopFile& file,
                                           const std::vector<std::string>& names) {
  std::vector<RegionId> out;
  for (const auto& n : names) out.push_back(file.region_labels.at(n));
  std::sort(out.begin(), out.end());
  return out;
}

// Clauses written with label names, sorted like prune() sorts them.
inline std::vector<std::vector<RegionId>> clauses_named(
    const io::MultiloopFile& file, const std::vector<std::vector<std::string>>& clauses) {
  std::vector<std::vector<RegionId>> out;
  for (const auto& c : clauses) out.push_back(regions_named(file, c));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

inline const std::vector<std::vector<std::string>>& worked_caption() {
  static const std::vector<std::vector<std::string>> caption = {
      {"3"}, {"8"}, {"9", "10"}, {"2", "6"}, {"10", "11"}, {"1", "6"},
      {"1", "4", "9"}, {"6", "5", "10"}, {"2", "7", "11"}};
  return caption;
}

}  // namespace pinloop::testing
