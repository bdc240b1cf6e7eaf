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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "densecode/catalog.hpp"
#include "densecode/state.hpp"
#include "densecode/subgroup.hpp"

namespace densecode {

enum class FilterMode { none, literal, semantic };
FilterMode parse_filter_mode(std::string_view text);
std::string to_string(FilterMode mode);

/// An element g and <s|g|s>; enough to re-check a rejection by hand.
struct Witness {
  PauliString element;
  Rational expectation;
};

enum class Verdict { accepted, rejected_condition1, rejected_orthogonality };
std::string to_string(Verdict v);

/// Condition 1 as written: no nonidentity diagonal element with an even
/// number of Z factors.
bool condition1_literal(const Subgroup &h);
std::optional<PauliString> condition1_literal_violation(const Subgroup &h);

/// Condition 1 read against the state: no nonidentity element acts as +-1.
bool condition1_semantic(const Subgroup &h, const PositionSet &p, const SymmetricState &s);
std::optional<Witness> condition1_semantic_violation(const Subgroup &h, const PositionSet &p,
                                                     const SymmetricState &s);

/// Every nonidentity g has <s|g|s> = 0. Throws ArityError unless |p| equals
/// the arity of h and |h| = 2^t.
bool verify_orthogonal(const Subgroup &h, const PositionSet &p, const SymmetricState &s);
std::optional<Witness> orthogonality_violation(const Subgroup &h, const PositionSet &p,
                                               const SymmetricState &s);

/// m * <c_i|c_j> over codewords c_i = g_i|s>, g_i in element order.
Eigen::MatrixXi codeword_gram(const Subgroup &h, const PositionSet &p, const SymmetricState &s);
/// All-pairs check: the Gram matrix equals m * I.
bool pairwise_orthogonal(const Subgroup &h, const PositionSet &p, const SymmetricState &s);

struct SelectionEntry {
  std::size_t subgroup = 0;  // index into SelectionReport::subgroups
  PositionSet positions;
  Verdict verdict = Verdict::accepted;
  std::optional<Witness> witness;
  /// Set in literal mode; the literal filter never overrides verification.
  std::optional<PauliString> literal_violation;
};

struct SelectionReport {
  std::string state_id;
  SymmetricState state;
  FilterMode filter = FilterMode::none;
  bool constraint1 = false;
  std::vector<PositionSet> position_sets;
  /// Which constraint stopped the run, if any.
  std::optional<std::string> failure;
  std::vector<Subgroup> subgroups;
  /// Position-set major, then subgroup order.
  std::vector<SelectionEntry> entries;

  std::vector<std::size_t> accepted_at(const PositionSet &p) const;
  std::size_t accepted_count() const;
};

struct SelectOptions {
  std::size_t workers = 0;  // 0 picks the hardware concurrency
};

/// Runs Constraint 1 and 2, then every (h, p) over construct_mgp_subgroups(t)
/// and valid_position_sets(s). Semantic filtering prunes pairs before
/// verification; literal filtering is recorded but advisory.
SelectionReport select(const SymmetricState &s, FilterMode filter, std::string state_id = {},
                       SelectOptions options = {});
/// Same over an explicit candidate list.
SelectionReport select_from(const SymmetricState &s, std::vector<Subgroup> candidates,
                            FilterMode filter, std::string state_id = {},
                            SelectOptions options = {});

struct MethodRow {
  PositionSet positions;
  std::vector<Subgroup> shukla;
  std::vector<Subgroup> ours;
  std::vector<Subgroup> oracle;
};

struct MethodComparison {
  std::string state_id;
  std::optional<std::string> failure;
  bool with_oracle = false;
  std::size_t oracle_total = 0;  // subgroups of order 2^t in G_n
  std::vector<MethodRow> rows;
};

/// Baseline subgroups that could serve t qubits: shukla_subgroups(n) when
/// t is odd, {G_n} when t is even.
std::vector<Subgroup> shukla_candidates(std::size_t qubits);

MethodComparison compare_methods(const SymmetricState &s, std::string state_id = {},
                                 bool with_oracle = true, SelectOptions options = {});

std::string report_json(const SelectionReport &r, const LabelCatalog &labels);
std::string report_markdown(const SelectionReport &r, const LabelCatalog &labels);
std::string comparison_json(const MethodComparison &c, const LabelCatalog &labels);
std::string comparison_markdown(const MethodComparison &c, const LabelCatalog &labels);

}  // namespace densecode
