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
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "densecode/error.hpp"

namespace densecode {

/// Single-qubit phaseless Pauli operator in symplectic (x, z) form.
///
/// Y carries both bits and stands for Z·X with the global phase dropped, so
/// Y|0> = -|1> and Y|1> = |0>.
enum class Pauli : std::uint8_t { I = 0b00, X = 0b01, Z = 0b10, Y = 0b11 };

constexpr bool x_bit(Pauli p) { return (static_cast<std::uint8_t>(p) & 1u) != 0; }
constexpr bool z_bit(Pauli p) { return (static_cast<std::uint8_t>(p) & 2u) != 0; }
constexpr Pauli make_pauli(bool x, bool z) {
  return static_cast<Pauli>((x ? 1u : 0u) | (z ? 2u : 0u));
}

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/// Phaseless n-qubit Pauli string, 1 <= n <= kMaxQubits.
///
/// Stored as two bit-planes; bit i of each plane belongs to qubit i+1, and
/// qubit 1 is printed leftmost. Multiplication is a pair of XORs.
class PauliString {
 public:
  static constexpr std::size_t kMaxQubits = 32;

  PauliString() = default;
  /// Identity string of length n.
  explicit PauliString(std::size_t n);
  PauliString(std::size_t n, std::uint64_t x_plane, std::uint64_t z_plane);

  std::size_t size() const { return n_; }
  std::uint64_t x_plane() const { return x_; }
  std::uint64_t z_plane() const { return z_; }

  /// Factor on the 0-based qubit index.
  Pauli operator[](std::size_t qubit) const;
  void set(std::size_t qubit, Pauli p);

  bool is_identity() const { return x_ == 0 && z_ == 0; }
  bool is_diagonal() const { return x_ == 0; }
  std::size_t z_count() const;  // factors equal to Z
  std::size_t weight() const;   // non-identity factors

  /// Symplectic vector as 2n bits, qubit 1's x bit most significant, then
  /// its z bit, then qubit 2's x bit, and so on. Used for GF(2) elimination.
  std::uint64_t symplectic() const;
  static PauliString from_symplectic(std::size_t n, std::uint64_t v);

  /// Base-4 ordering key with I < X < Y < Z and qubit 1 most significant;
  /// sorting by it lists II, IX, IY, IZ, XI, ... .
  std::uint64_t sort_key() const;

  PauliString &operator*=(const PauliString &rhs);

  friend bool operator==(const PauliString &, const PauliString &) = default;
  friend std::strong_ordering operator<=>(const PauliString &a, const PauliString &b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.sort_key() <=> b.sort_key();
  }

 private:
  std::size_t n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// Phaseless product; throws ArityError on length mismatch.
PauliString mul(const PauliString &a, const PauliString &b);
inline PauliString operator*(PauliString a, const PauliString &b) { return a *= b; }

PauliString identity(std::size_t n);

/// Accepts bare letters over {I,X,Y,Z} with optional "⊗" (or '*') separators.
PauliString parse_op(std::string_view text);
/// Bare letters, e.g. "YX".
std::string format_op(const PauliString &p);
/// Tensor notation, e.g. "Y⊗X".
std::string format_tensor(const PauliString &p);

}  // namespace densecode

template <>
struct std::hash<densecode::PauliString> {
  std::size_t operator()(const densecode::PauliString &p) const noexcept {
    return std::hash<std::uint64_t>{}((p.x_plane() << 32) ^ p.z_plane() ^ (p.size() << 58));
  }
};
