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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "densecode/pauli.hpp"

namespace densecode {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational &r);  // "0", "-1", "1/9"

/// One superposition item: sign and computational-basis ket. Bit i of `ket`
/// is qubit i+1.
struct Item {
  int sign = 1;
  std::uint64_t ket = 0;

  friend bool operator==(const Item &, const Item &) = default;
};

/// Equal-weight signed superposition of distinct basis kets; the amplitude of
/// every item is sign / sqrt(m).
class SymmetricState {
 public:
  static constexpr std::size_t kMaxQubits = 63;

  SymmetricState() = default;
  /// Throws ParseError on an empty item list, a repeated ket, a sign outside
  /// {+1,-1}, or a ket wider than `qubits`.
  SymmetricState(std::size_t qubits, std::vector<Item> items);

  std::size_t qubits() const { return qubits_; }
  std::size_t size() const { return items_.size(); }
  const std::vector<Item> &items() const { return items_; }

  /// Sign of `ket` in this state, or 0 if absent.
  int sign_of(std::uint64_t ket) const;

  /// Same items irrespective of listing order.
  friend bool operator==(const SymmetricState &a, const SymmetricState &b);

 private:
  std::size_t qubits_ = 0;
  std::vector<Item> items_;   // listing order, preserved by apply()
  std::vector<Item> sorted_;  // by ket, for lookups
};

/// Bitstring of `qubits` characters, qubit 1 first.
std::string format_ket(std::uint64_t ket, std::size_t qubits);

/// Lines or comma-separated tokens of sign + bits ("+0000", "-1111"); blank
/// lines and "#" comments are skipped. ParseError::position() is the token
/// index.
SymmetricState parse_state(std::string_view text);
/// One token per line, e.g. "+000\n+111\n".
std::string format_state(const SymmetricState &s);
/// "1/√2(|000⟩ + |111⟩)", "1/2(-|1100⟩ - ...)".
std::string format_ket_sum(const SymmetricState &s);

/// Strictly increasing 1-based qubit indices.
class PositionSet {
 public:
  PositionSet() = default;
  /// Throws ArityError unless strictly increasing and within 1..qubits.
  PositionSet(std::vector<std::size_t> positions, std::size_t qubits);

  /// Parses "1,2" or "(1,2)".
  static PositionSet parse(std::string_view text, std::size_t qubits);

  std::size_t size() const { return positions_.size(); }
  std::size_t operator[](std::size_t i) const { return positions_[i]; }
  const std::vector<std::size_t> &positions() const { return positions_; }
  /// Bit mask of the selected qubits in ket layout.
  std::uint64_t mask() const;
  std::string str() const;  // "(1,2)"

  friend bool operator==(const PositionSet &, const PositionSet &) = default;
  friend auto operator<=>(const PositionSet &, const PositionSet &) = default;

 private:
  std::vector<std::size_t> positions_;
};

/// Constraint 1: an even number of superposition items.
bool check_constraint1(const SymmetricState &s);

/// All ceil(t/2)-subsets on which the items' projections are pairwise
/// distinct, in lexicographic order.
std::vector<PositionSet> valid_position_sets(const SymmetricState &s);
bool projections_distinct(const SymmetricState &s, const PositionSet &p);

/// g acting on the selected qubits, each factor read as Z^z X^x:
/// X|b> = |b^1>, Z|b> = (-1)^b |b>, Y|0> = -|1>, Y|1> = |0>.
SymmetricState apply(const PauliString &g, const PositionSet &p, const SymmetricState &s);

/// <a|b> = numerator / sqrt(norm_product), with norm_product = m_a * m_b.
struct Overlap {
  std::int64_t numerator = 0;
  std::uint64_t norm_product = 1;

  /// |<a|b>|^2
  Rational squared() const;
  /// Exact value when sqrt(norm_product) is an integer.
  std::optional<Rational> exact() const;
  double value() const;
};

Overlap inner_product(const SymmetricState &a, const SymmetricState &b);
/// <s| g |s>, always rational since both sides share m.
Rational expectation(const PauliString &g, const PositionSet &p, const SymmetricState &s);
/// D = |<a|b>|^2
Rational distinguishability(const SymmetricState &a, const SymmetricState &b);

/// True when a == b or a == -b.
bool equal_up_to_sign(const SymmetricState &a, const SymmetricState &b);

/// ghz<M> / ghzM, w_<t>, bell, w1_4, cluster4, cluster5, w3, w2_4.
SymmetricState builtin_state(std::string_view name);
std::vector<std::string> builtin_state_names();

SymmetricState ghz_state(std::size_t qubits);
/// Single excitation walking from qubit 1 to qubit t.
SymmetricState w_state(std::size_t qubits);

/// Per-site cluster check: K(a) = X on a and Z on each neighbour. Entry a-1
/// holds k_a when K(a)|s> = (-1)^{k_a}|s>, nullopt when s is not an
/// eigenstate. `neighbours[a-1]` lists the 1-based neighbours of site a.
std::vector<std::optional<int>> verify_cluster(
    const SymmetricState &s, const std::vector<std::vector<std::size_t>> &neighbours);

/// Neighbour lists of the path 1-2-...-t.
std::vector<std::vector<std::size_t>> chain_graph(std::size_t qubits);

}  // namespace densecode
