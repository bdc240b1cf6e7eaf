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

#include "densecode/pauli.hpp"

#include <bit>

namespace densecode {

namespace {

constexpr std::string_view kTensor = "\xE2\x8A\x97";  // U+2297

std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_length(std::size_t n) {
  if (n == 0 || n > PauliString::kMaxQubits) {
    throw ArityError("Pauli string length must be in 1.." +
                     std::to_string(PauliString::kMaxQubits) + ", got " + std::to_string(n));
  }
}

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw ParseError(std::string("unknown Pauli factor '") + c + "'", 0);
  }
}

PauliString::PauliString(std::size_t n) : n_(n) { check_length(n); }

PauliString::PauliString(std::size_t n, std::uint64_t x_plane, std::uint64_t z_plane)
    : n_(n), x_(x_plane), z_(z_plane) {
  check_length(n);
  if ((x_ | z_) & ~low_mask(n)) throw ArityError("bit planes exceed string length");
}

Pauli PauliString::operator[](std::size_t qubit) const {
  return make_pauli((x_ >> qubit) & 1u, (z_ >> qubit) & 1u);
}

void PauliString::set(std::size_t qubit, Pauli p) {
  if (qubit >= n_) throw ArityError("qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  x_ = x_bit(p) ? (x_ | bit) : (x_ & ~bit);
  z_ = z_bit(p) ? (z_ | bit) : (z_ & ~bit);
}

std::size_t PauliString::z_count() const { return std::popcount(z_ & ~x_); }

std::size_t PauliString::weight() const { return std::popcount(x_ | z_); }

std::uint64_t PauliString::symplectic() const {
  std::uint64_t v = 0;
  for (std::size_t q = 0; q < n_; ++q) {
    v = (v << 2) | (((x_ >> q) & 1u) << 1) | ((z_ >> q) & 1u);
  }
  return v;
}

PauliString PauliString::from_symplectic(std::size_t n, std::uint64_t v) {
  check_length(n);
  std::uint64_t x = 0, z = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t shift = 2 * (n - 1 - q);
    x |= ((v >> (shift + 1)) & 1u) << q;
    z |= ((v >> shift) & 1u) << q;
  }
  return PauliString(n, x, z);
}

std::uint64_t PauliString::sort_key() const {
  std::uint64_t key = 0;
  for (std::size_t q = 0; q < n_; ++q) {
    std::uint64_t digit = 0;
    switch ((*this)[q]) {
      case Pauli::I: digit = 0; break;
      case Pauli::X: digit = 1; break;
      case Pauli::Y: digit = 2; break;
      case Pauli::Z: digit = 3; break;
    }
    key = (key << 2) | digit;
  }
  return key;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
  if (n_ != rhs.n_) {
    throw ArityError("cannot multiply Pauli strings of length " + std::to_string(n_) + " and " +
                     std::to_string(rhs.n_));
  }
  x_ ^= rhs.x_;
  z_ ^= rhs.z_;
  return *this;
}

PauliString mul(const PauliString &a, const PauliString &b) { return a * b; }

PauliString identity(std::size_t n) { return PauliString(n); }

PauliString parse_op(std::string_view text) {
  std::uint64_t x = 0, z = 0;
  std::size_t n = 0;
  std::size_t i = 0;
  bool expect_factor = true;
  while (i < text.size()) {
    if (text.substr(i, kTensor.size()) == kTensor || text[i] == '*') {
      if (expect_factor) throw ParseError("separator without a preceding factor", i);
      i += text[i] == '*' ? 1 : kTensor.size();
      expect_factor = true;
      continue;
    }
    Pauli p;
    try {
      p = pauli_from_char(text[i]);
    } catch (const ParseError &) {
      throw ParseError(std::string("unknown Pauli factor '") + text[i] + "'", i);
    }
    if (n == PauliString::kMaxQubits) throw ParseError("operator too long", i);
    x |= std::uint64_t{x_bit(p)} << n;
    z |= std::uint64_t{z_bit(p)} << n;
    ++n;
    ++i;
    expect_factor = false;
  }
  if (n == 0) throw ParseError("empty operator", 0);
  if (expect_factor) throw ParseError("trailing separator", text.size());
  return PauliString(n, x, z);
}

std::string format_op(const PauliString &p) {
  std::string out;
  out.reserve(p.size());
  for (std::size_t q = 0; q < p.size(); ++q) out.push_back(to_char(p[q]));
  return out;
}

std::string format_tensor(const PauliString &p) {
  std::string out;
  for (std::size_t q = 0; q < p.size(); ++q) {
    if (q) out += kTensor;
    out.push_back(to_char(p[q]));
  }
  return out;
}

}  // namespace densecode
