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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "densecode/subgroup.hpp"

namespace densecode {

/// Directory holding labels.json and orderings.json. DENSECODE_DATA_DIR
/// overrides the compiled-in default.
std::filesystem::path data_dir();

/// Display names for subgroups, keyed structurally. An alias is stored as a
/// union of tensor-product lines, e.g. [["IX","IZ"],["YZ","YX"]].
class LabelCatalog {
 public:
  LabelCatalog() = default;

  /// Throws ParseError on malformed JSON and InvariantError when a line union
  /// is not a subgroup.
  static LabelCatalog from_json(std::string_view text);
  static LabelCatalog load(const std::filesystem::path &path);
  /// DENSECODE_LABELS if set, else data_dir()/labels.json. Returns an empty
  /// catalog when neither exists.
  static LabelCatalog load_default();

  /// Aliases in file order; empty when the subgroup has none.
  std::vector<std::string> aliases(const Subgroup &h) const;
  /// First alias or the canonical key.
  std::string display_name(const Subgroup &h) const;
  /// Matches the full name or the name without its "(order)" suffix.
  std::optional<Subgroup> find(std::string_view alias) const;

  std::size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    std::string name;
    Subgroup group;
  };
  std::vector<Entry> entries_;
  std::map<std::pair<std::size_t, BasisKey>, std::vector<std::size_t>> by_key_;
};

/// Published row order of one dense-coding table.
struct PublishedOrdering {
  std::string state;
  std::string subgroup;  // alias
  std::vector<std::size_t> positions;
  std::vector<PauliString> operators;
};

std::vector<PublishedOrdering> load_orderings(const std::filesystem::path &path);
std::vector<PublishedOrdering> load_default_orderings();

/// Entry whose operators generate `h` and whose state matches, falling back to
/// any entry for `h`.
std::optional<PublishedOrdering> find_ordering(const std::vector<PublishedOrdering> &orderings,
                                           std::string_view state, const Subgroup &h);

/// Text form: header "n=<arity> order=<2^t>", then one operator per line.
/// JSON form: {n, order, elements[], basis[], provenance}.
Subgroup parse_subgroup_text(std::string_view text);
std::string format_subgroup_text(const Subgroup &h);
Subgroup parse_subgroup_json(std::string_view text);
std::string format_subgroup_json(const Subgroup &h);
/// Picks the JSON reader when the first non-blank character is '{'.
Subgroup parse_subgroup(std::string_view text);

/// Element list or union-of-lines shorthand: "II,IZ,XI,XZ,YX,YY,ZX,ZY" or
/// "IX.IZ|YZ.YX" (factor sets separated by '.', lines by '|').
Subgroup parse_subgroup_spec(std::string_view text);

std::string read_file(const std::filesystem::path &path);

}  // namespace densecode
