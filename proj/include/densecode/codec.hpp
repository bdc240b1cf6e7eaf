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

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "densecode/selector.hpp"
#include "densecode/state.hpp"
#include "densecode/subgroup.hpp"

namespace densecode {

/// The triple does not give orthogonal codewords (or the ordering is not a
/// permutation of the subgroup).
class CodebookError : public std::invalid_argument {
 public:
  CodebookError(const std::string &what, std::optional<Witness> witness = std::nullopt)
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  const std::optional<Witness> &witness() const { return witness_; }

 private:
  std::optional<Witness> witness_;
};

class DecodeError : public std::runtime_error {
 public:
  enum class Kind { no_match, ambiguous };
  DecodeError(Kind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Ordered operators U_0..U_{2^t-1} with U_0 = identity, and their codewords.
class Codebook {
 public:
  /// Empty `order` means canonical: identity first, then by symplectic key.
  /// Throws CodebookError with the selector's witness when the triple does
  /// not verify.
  static Codebook build(const Subgroup &h, const PositionSet &p, const SymmetricState &s,
                        std::span<const PauliString> order = {});

  const SymmetricState &base() const { return base_; }
  const PositionSet &positions() const { return positions_; }
  const std::vector<PauliString> &operators() const { return operators_; }
  const std::vector<SymmetricState> &codewords() const { return codewords_; }
  std::size_t size() const { return operators_.size(); }
  /// Classical bits per channel use (t).
  std::size_t bits() const;

  /// Throws std::out_of_range on a bad index.
  SymmetricState encode(std::size_t index) const;
  /// Index whose codeword equals `received` up to a global sign.
  std::size_t decode(const SymmetricState &received) const;

 private:
  SymmetricState base_;
  PositionSet positions_;
  std::vector<PauliString> operators_;
  std::vector<SymmetricState> codewords_;
};

/// Identity first, remaining elements by ascending symplectic vector.
std::vector<PauliString> canonical_order(const Subgroup &h);
/// Elements sorted with I < X < Y < Z, qubit 1 most significant.
std::vector<PauliString> lexicographic_order(const Subgroup &h);

struct TranscriptChunk {
  std::string bits;
  std::size_t index = 0;
  PauliString op;
  SymmetricState codeword;
  std::size_t decoded = 0;
};

struct Transcript {
  std::vector<TranscriptChunk> chunks;
  std::string output;
  std::size_t qubits_sent = 0;
  std::size_t bits_delivered = 0;
};

/// Splits `bits` into t-bit chunks (most significant bit first), encodes,
/// decodes and reassembles. Throws std::invalid_argument when the length is
/// not a multiple of t or a character is not 0/1.
Transcript simulate_roundtrip(const Codebook &cb, std::string_view bits);
std::string transcript_json(const Transcript &tr);

enum class TableFormat { markdown, csv, json, text };
TableFormat parse_table_format(std::string_view text);

struct TableRow {
  PauliString op;
  SymmetricState state;
};

/// Rows U_i|s> for any operator list; no orthogonality requirement.
std::vector<TableRow> table_rows(std::span<const PauliString> ops, const PositionSet &p,
                                 const SymmetricState &s);
std::string emit_rows(const std::vector<TableRow> &rows, const PositionSet &p, TableFormat format);
std::string emit_table(const Codebook &cb, TableFormat format);

/// order x order grid of products, rows and columns in the given order.
std::string emit_multiplication_table(std::span<const PauliString> order, TableFormat format);

}  // namespace densecode
