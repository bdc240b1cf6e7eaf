// Copyright 2026 The densecode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace densecode::testing {

inline std::filesystem::path golden_path(const std::string &name) {
  return std::filesystem::path(DENSECODE_GOLDEN_DIR) / name;
}

inline std::vector<std::string> read_lines(const std::filesystem::path &path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

inline std::vector<std::string> split_lines(const std::string &text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

// A column factor is a two-letter pair such as "IX" or "G1" for all four letters.
using Line = std::vector<std::string>;

inline std::set<std::string> expand_line(const Line &line) {
  std::set<std::string> words{""};
  for (const auto &factor : line) {
    const std::string letters = factor == "G1" ? "IXYZ" : factor;
    std::set<std::string> next;
    for (const auto &w : words) {
      for (char c : letters) next.insert(w + c);
    }
    words = std::move(next);
  }
  return words;
}

inline std::set<std::string> expand_union(const std::vector<Line> &lines) {
  std::set<std::string> out;
  for (const auto &line : lines) {
    auto part = expand_line(line);
    out.insert(part.begin(), part.end());
  }
  return out;
}

struct ListedSubgroup {
  int index;
  int equal_columns;
  std::vector<Line> lines;
};

// Order-8 subgroups of G_2 as line unions.
inline const std::vector<ListedSubgroup> &g2_listing() {
  static const std::vector<ListedSubgroup> listing = {
      {1, 1, {{"IX", "IX"}, {"YZ", "IX"}}},   {2, 1, {{"IX", "IY"}, {"YZ", "IY"}}},
      {3, 1, {{"IX", "IZ"}, {"YZ", "IZ"}}},   {4, 1, {{"IX", "IY"}, {"IX", "XZ"}}},
      {5, 1, {{"IY", "IY"}, {"IY", "XZ"}}},   {6, 1, {{"IZ", "IY"}, {"IZ", "XZ"}}},
      {7, 0, {{"IZ", "IZ"}, {"XY", "XY"}}},   {8, 0, {{"IY", "IX"}, {"XZ", "ZY"}}},
      {9, 0, {{"IX", "IY"}, {"ZY", "ZX"}}},   {10, 0, {{"IX", "IX"}, {"ZY", "ZY"}}},
      {11, 0, {{"IY", "IY"}, {"ZX", "ZX"}}},  {12, 0, {{"IX", "IZ"}, {"YZ", "YX"}}},
      {13, 0, {{"IZ", "IX"}, {"YX", "YZ"}}},  {14, 0, {{"IY", "IZ"}, {"XZ", "YX"}}},
      {15, 0, {{"IZ", "IY"}, {"XY", "ZX"}}},
  };
  return listing;
}

// Order-32 subgroups of G_3 listed for the 5-qubit cluster state.
inline const std::vector<std::pair<std::string, std::vector<Line>>> &cluster5_named_sets() {
  static const std::vector<std::pair<std::string, std::vector<Line>>> sets = {
      {"G_3^4", {{"IX", "IY", "G1"}, {"IX", "XZ", "G1"}}},
      {"G_3^5", {{"IY", "IY", "G1"}, {"IY", "XZ", "G1"}}},
      {"G_3^4'", {{"IY", "IX", "G1"}, {"XZ", "IX", "G1"}}},
      {"G_3^5'", {{"IY", "IY", "G1"}, {"XZ", "IY", "G1"}}},
      {"G_3^12", {{"IX", "IZ", "G1"}, {"YZ", "YX", "G1"}}},
      {"G_3^14", {{"IY", "IZ", "G1"}, {"XZ", "YX", "G1"}}},
      {"G_3^12'", {{"IZ", "IX", "G1"}, {"YX", "YZ", "G1"}}},
      {"G_3^14'", {{"IZ", "IY", "G1"}, {"YX", "XZ", "G1"}}},
  };
  return sets;
}

}  // namespace densecode::testing
