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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "densecode/pauli.hpp"

namespace densecode {

/// Subset of {I, X, Y, Z} used as one column of a tensor-product line.
class FactorSet {
 public:
  constexpr FactorSet() = default;

  static constexpr FactorSet all() { return FactorSet(0b1111); }
  /// {I, p}
  static constexpr FactorSet pair(Pauli p) {
    return FactorSet(static_cast<std::uint8_t>(1u | (1u << static_cast<unsigned>(p))));
  }
  /// Parses "IX", "YZ", "G1", "IXYZ", or brace forms like "{I,X}".
  static FactorSet parse(std::string_view text);

  FactorSet complement() const { return FactorSet(static_cast<std::uint8_t>(~mask_ & 0b1111)); }
  bool contains(Pauli p) const { return (mask_ >> static_cast<unsigned>(p)) & 1u; }
  std::vector<Pauli> members() const;  // in I, X, Y, Z order
  std::size_t size() const;
  std::string str() const;  // "{I,X}" or "G1"

  friend bool operator==(FactorSet, FactorSet) = default;

 private:
  constexpr explicit FactorSet(std::uint8_t mask) : mask_(mask) {}
  std::uint8_t mask_ = 0;
};

/// One A-line/B-line construction: the union of two tensor-product lines.
struct Construction {
  std::vector<FactorSet> a_line;
  std::vector<FactorSet> b_line;
  std::vector<std::size_t> g1_columns;  // 0-based columns filled with G1 in step 1
  std::optional<int> equal_columns;     // s: columns where the A- and B-line agree

  std::vector<PauliString> expand() const;
  std::string describe() const;  // "({I,X}⊗{I,Z}) ∪ ({Y,Z}⊗{X,Y})"
};

enum class Origin { algorithm1, shukla, oracle, user };

std::string to_string(Origin origin);

struct Provenance {
  Origin origin = Origin::user;
  /// Every construction that produced this subgroup (algorithm1 and shukla).
  std::vector<Construction> constructions;

  std::optional<int> equal_columns() const;
};

/// Canonical key: reduced row echelon rows of the symplectic vectors, sorted
/// by pivot (most significant first). Unique per subspace.
using BasisKey = std::vector<std::uint64_t>;

/// GF(2) reduced row echelon form; zero rows dropped.
BasisKey reduced_row_echelon(std::vector<std::uint64_t> rows);

/// Multiplicative subgroup of the phaseless n-qubit Pauli group, i.e. a
/// GF(2)-linear subspace of the symplectic encoding. Elements are kept in
/// sort_key order, so the identity is always first.
class Subgroup {
 public:
  /// Validates arity, identity, and closure; throws InvariantError otherwise.
  static Subgroup from_elements(std::vector<PauliString> elements, Provenance provenance = {});
  /// Subgroup generated by `generators` (need not be independent).
  static Subgroup span(std::size_t n, std::span<const PauliString> generators,
                       Provenance provenance = {});
  static Subgroup whole_group(std::size_t n);

  std::size_t arity() const { return arity_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t order() const { return elements_.size(); }
  const std::vector<PauliString> &elements() const { return elements_; }
  const BasisKey &basis() const { return basis_; }
  std::vector<PauliString> basis_elements() const;
  bool contains(const PauliString &p) const;

  const Provenance &provenance() const { return provenance_; }
  Provenance &provenance() { return provenance_; }

  /// Canonical basis rows in bare letters, e.g. "XI,ZI,IZ".
  std::string key_string() const;

  friend bool operator==(const Subgroup &a, const Subgroup &b) {
    return a.arity_ == b.arity_ && a.basis_ == b.basis_;
  }
  friend std::strong_ordering operator<=>(const Subgroup &a, const Subgroup &b) {
    if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
    return a.basis_ <=> b.basis_;
  }

 private:
  std::size_t arity_ = 0;
  std::vector<PauliString> elements_;
  BasisKey basis_;
  Provenance provenance_;
};

/// n = ceil(t / 2), the number of operated qubits.
constexpr std::size_t arity_for(std::size_t qubits) { return (qubits + 1) / 2; }

/// Number of subgroups the two-step construction yields for t qubits, as
/// counted by the closed formula: 3 (n = 1), 15 (n = 2), 15 n(n-1)/2 for odd
/// t; 1 for even t.
std::size_t lambda_count(std::size_t qubits);

/// Raw two-step construction output, one entry per emitted candidate (with
/// repeats), in loop order. Each entry carries exactly one Construction.
std::vector<Subgroup> mgp_candidates(std::size_t qubits);

/// Distinct order-2^t subgroups from the two-step construction, merged by
/// canonical basis and sorted by it. Provenance keeps every construction that
/// produced each subgroup.
std::vector<Subgroup> construct_mgp_subgroups(std::size_t qubits);

struct ConstructionCensus {
  std::size_t raw = 0;                 // candidates emitted by the loops
  std::size_t per_column_choice = 0;   // distinct within each choice of G1 columns
  std::size_t distinct = 0;            // distinct overall
};
ConstructionCensus construction_census(std::size_t qubits);

/// G1^{⊗i} ⊗ {I,P} ⊗ G1^{⊗(n-i-1)} for every i and P: 3n subgroups of order
/// 2^{2n-1}, sorted by canonical basis.
std::vector<Subgroup> shukla_subgroups(std::size_t n);

/// Every dimension-t subspace of GF(2)^{2n}, each exactly once, obtained by
/// enumerating reduced row echelon bases. Sorted by canonical basis.
std::vector<Subgroup> enumerate_all_subgroups(std::size_t n, std::size_t t);

/// Number of k-dimensional subspaces of GF(2)^m.
std::uint64_t gaussian_binomial(std::size_t m, std::size_t k);

/// True iff the identity is present and the set is closed under mul.
bool is_closed(std::span<const PauliString> elements);

}  // namespace densecode
