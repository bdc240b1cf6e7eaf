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

#include "densecode/subgroup.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_set>
#include <utility>

namespace densecode {

namespace {

constexpr Pauli kNonIdentity[] = {Pauli::X, Pauli::Y, Pauli::Z};
constexpr std::string_view kTensor = "\xE2\x8A\x97";
constexpr std::string_view kUnion = " \xE2\x88\xAA ";

int top_bit(std::uint64_t v) { return 63 - std::countl_zero(v); }

}  // namespace

// ---------------------------------------------------------------------------
// FactorSet

FactorSet FactorSet::parse(std::string_view text) {
  if (text == "G1" || text == "G_1") return all();
  std::uint8_t mask = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '{' || c == '}' || c == ',' || c == ' ') continue;
    Pauli p;
    try {
      p = pauli_from_char(c);
    } catch (const ParseError &) {
      throw ParseError(std::string("bad factor set '") + std::string(text) + "'", i);
    }
    mask |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(p));
  }
  if (mask == 0) throw ParseError("empty factor set", 0);
  return FactorSet(mask);
}

std::vector<Pauli> FactorSet::members() const {
  std::vector<Pauli> out;
  for (Pauli p : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
    if (contains(p)) out.push_back(p);
  }
  return out;
}

std::size_t FactorSet::size() const { return std::popcount(mask_); }

std::string FactorSet::str() const {
  if (*this == all()) return "G1";
  std::string out = "{";
  for (Pauli p : members()) {
    if (out.size() > 1) out += ',';
    out += to_char(p);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Construction

std::vector<PauliString> Construction::expand() const {
  std::vector<PauliString> out;
  for (const auto *line : {&a_line, &b_line}) {
    const std::size_t n = line->size();
    std::vector<PauliString> partial{PauliString(n)};
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<PauliString> next;
      for (const auto &prefix : partial) {
        for (Pauli p : (*line)[q].members()) {
          PauliString s = prefix;
          s.set(q, p);
          next.push_back(s);
        }
      }
      partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string Construction::describe() const {
  auto line = [](const std::vector<FactorSet> &sets) {
    std::string s = "(";
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (i) s += kTensor;
      s += sets[i].str();
    }
    return s + ")";
  };
  if (a_line == b_line) return line(a_line);
  return line(a_line) + std::string(kUnion) + line(b_line);
}

std::string to_string(Origin origin) {
  switch (origin) {
    case Origin::algorithm1: return "algorithm1";
    case Origin::shukla: return "shukla";
    case Origin::oracle: return "oracle";
    case Origin::user: return "user";
  }
  return "unknown";
}

std::optional<int> Provenance::equal_columns() const {
  if (constructions.empty()) return std::nullopt;
  return constructions.front().equal_columns;
}

// ---------------------------------------------------------------------------
// Linear algebra over GF(2)

BasisKey reduced_row_echelon(std::vector<std::uint64_t> rows) {
  BasisKey basis;
  for (std::uint64_t v : rows) {
    for (std::uint64_t b : basis) {
      if ((v >> top_bit(b)) & 1u) v ^= b;
    }
    if (v == 0) continue;
    const int pivot = top_bit(v);
    for (auto &b : basis) {
      if ((b >> pivot) & 1u) b ^= v;
    }
    basis.push_back(v);
  }
  std::sort(basis.begin(), basis.end(), std::greater<>());
  return basis;
}

bool is_closed(std::span<const PauliString> elements) {
  if (elements.empty()) return false;
  const std::size_t n = elements.front().size();
  std::unordered_set<PauliString> set;
  for (const auto &e : elements) {
    if (e.size() != n) return false;
    set.insert(e);
  }
  if (!set.contains(identity(n))) return false;
  for (const auto &a : set) {
    for (const auto &b : set) {
      if (!set.contains(a * b)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup Subgroup::from_elements(std::vector<PauliString> elements, Provenance provenance) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!is_closed(elements)) {
    throw InvariantError("element set is not a subgroup (missing identity or not closed)");
  }
  Subgroup g;
  g.arity_ = elements.front().size();
  std::vector<std::uint64_t> rows;
  rows.reserve(elements.size());
  for (const auto &e : elements) rows.push_back(e.symplectic());
  g.basis_ = reduced_row_echelon(std::move(rows));
  if ((std::size_t{1} << g.basis_.size()) != elements.size()) {
    throw InvariantError("subgroup order does not match its GF(2) rank");
  }
  g.elements_ = std::move(elements);
  g.provenance_ = std::move(provenance);
  return g;
}

Subgroup Subgroup::span(std::size_t n, std::span<const PauliString> generators,
                        Provenance provenance) {
  std::vector<std::uint64_t> rows;
  for (const auto &g : generators) {
    if (g.size() != n) throw ArityError("generator arity does not match subgroup arity");
    rows.push_back(g.symplectic());
  }
  const BasisKey basis = reduced_row_echelon(std::move(rows));
  std::vector<std::uint64_t> vectors{0};
  for (std::uint64_t b : basis) {
    const std::size_t count = vectors.size();
    for (std::size_t i = 0; i < count; ++i) vectors.push_back(vectors[i] ^ b);
  }
  std::vector<PauliString> elements;
  elements.reserve(vectors.size());
  for (std::uint64_t v : vectors) elements.push_back(PauliString::from_symplectic(n, v));
  std::sort(elements.begin(), elements.end());

  Subgroup g;
  g.arity_ = n;
  g.elements_ = std::move(elements);
  g.basis_ = basis;
  g.provenance_ = std::move(provenance);
  return g;
}

Subgroup Subgroup::whole_group(std::size_t n) {
  std::vector<PauliString> gens;
  for (std::size_t q = 0; q < n; ++q) {
    PauliString x(n), z(n);
    x.set(q, Pauli::X);
    z.set(q, Pauli::Z);
    gens.push_back(x);
    gens.push_back(z);
  }
  return span(n, gens);
}

std::vector<PauliString> Subgroup::basis_elements() const {
  std::vector<PauliString> out;
  for (std::uint64_t b : basis_) out.push_back(PauliString::from_symplectic(arity_, b));
  return out;
}

bool Subgroup::contains(const PauliString &p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::string Subgroup::key_string() const {
  std::string out;
  for (const auto &b : basis_elements()) {
    if (!out.empty()) out += ',';
    out += format_op(b);
  }
  return out.empty() ? format_op(identity(arity_)) : out;
}

// ---------------------------------------------------------------------------
// Two-step construction

std::size_t lambda_count(std::size_t qubits) {
  if (qubits == 0) throw ArityError("qubit count must be positive");
  if (qubits % 2 == 0) return 1;
  const std::size_t n = arity_for(qubits);
  if (n == 1) return 3;
  if (n == 2) return 15;
  return n * (n - 1) / 2 * 15;
}

namespace {

Subgroup from_construction(Construction c) {
  std::vector<PauliString> elements = c.expand();
  Provenance prov{Origin::algorithm1, {std::move(c)}};
  return Subgroup::from_elements(std::move(elements), std::move(prov));
}

// n = 1 and n = 2 columns without "remaining columns" are handled directly.
std::vector<Subgroup> degenerate_candidates(std::size_t qubits) {
  std::vector<Subgroup> out;
  if (qubits == 1) {
    for (Pauli p : kNonIdentity) {
      Construction c{{FactorSet::pair(p)}, {FactorSet::pair(p)}, {}, std::nullopt};
      out.push_back(from_construction(std::move(c)));
    }
  } else {
    Construction c{{FactorSet::all()}, {FactorSet::all()}, {}, std::nullopt};
    out.push_back(from_construction(std::move(c)));
  }
  return out;
}

}  // namespace

std::vector<Subgroup> mgp_candidates(std::size_t qubits) {
  if (qubits == 0) throw ArityError("qubit count must be positive");
  const std::size_t n = arity_for(qubits);
  if (n > PauliString::kMaxQubits) throw ArityError("too many qubits");
  if (n == 1) return degenerate_candidates(qubits);

  const bool odd = qubits % 2 == 1;
  std::vector<Subgroup> out;
  // Step 1: choose the two columns left open; every other column is G1.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      std::vector<std::size_t> g1_columns;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != a && k != b) g1_columns.push_back(k);
      }
      // Step 2: both orders of the remaining pair.
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        auto base = [&] {
          Construction c;
          c.a_line.assign(n, FactorSet::all());
          c.b_line.assign(n, FactorSet::all());
          c.g1_columns = g1_columns;
          return c;
        };
        if (odd) {
          // s = n - 1: column x shared, column y split into {I,Q} and its complement.
          for (Pauli p : kNonIdentity) {
            for (Pauli q : kNonIdentity) {
              Construction c = base();
              c.a_line[x] = c.b_line[x] = FactorSet::pair(p);
              c.a_line[y] = FactorSet::pair(q);
              c.b_line[y] = FactorSet::pair(q).complement();
              c.equal_columns = static_cast<int>(n - 1);
              out.push_back(from_construction(std::move(c)));
            }
          }
          // s = n - 2: both columns split.
          for (Pauli p : kNonIdentity) {
            for (Pauli q : kNonIdentity) {
              Construction c = base();
              c.a_line[x] = FactorSet::pair(p);
              c.b_line[x] = FactorSet::pair(p).complement();
              c.a_line[y] = FactorSet::pair(q);
              c.b_line[y] = FactorSet::pair(q).complement();
              c.equal_columns = static_cast<int>(n - 2);
              out.push_back(from_construction(std::move(c)));
            }
          }
        } else {
          for (Pauli q : kNonIdentity) {
            Construction c = base();
            c.a_line[y] = FactorSet::pair(q);
            c.b_line[y] = FactorSet::pair(q).complement();
            c.equal_columns = static_cast<int>(n - 1);
            out.push_back(from_construction(std::move(c)));
          }
        }
      }
    }
  }
  return out;
}

namespace {

std::vector<Subgroup> merge_by_basis(std::vector<Subgroup> candidates) {
  std::map<std::pair<std::size_t, BasisKey>, Subgroup> merged;
  for (auto &c : candidates) {
    auto key = std::pair{c.arity(), c.basis()};
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(std::move(key), std::move(c));
    } else {
      auto &dst = it->second.provenance().constructions;
      for (auto &con : c.provenance().constructions) dst.push_back(std::move(con));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(merged.size());
  for (auto &[key, g] : merged) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<Subgroup> construct_mgp_subgroups(std::size_t qubits) {
  return merge_by_basis(mgp_candidates(qubits));
}

ConstructionCensus construction_census(std::size_t qubits) {
  const auto raw = mgp_candidates(qubits);
  std::set<std::pair<std::vector<std::size_t>, BasisKey>> per_choice;
  std::set<BasisKey> distinct;
  for (const auto &g : raw) {
    per_choice.emplace(g.provenance().constructions.front().g1_columns, g.basis());
    distinct.insert(g.basis());
  }
  return {raw.size(), per_choice.size(), distinct.size()};
}

std::vector<Subgroup> shukla_subgroups(std::size_t n) {
  if (n == 0 || n > PauliString::kMaxQubits) throw ArityError("arity out of range");
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (Pauli p : kNonIdentity) {
      Construction c;
      c.a_line.assign(n, FactorSet::all());
      c.a_line[i] = FactorSet::pair(p);
      c.b_line = c.a_line;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i) c.g1_columns.push_back(k);
      }
      std::vector<PauliString> elements = c.expand();
      out.push_back(Subgroup::from_elements(std::move(elements),
                                            Provenance{Origin::shukla, {std::move(c)}}));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t gaussian_binomial(std::size_t m, std::size_t k) {
  if (k > m) return 0;
  // prod_{i<k} (2^{m-i} - 1) / (2^{i+1} - 1), accumulated so every step stays integral.
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < k; ++i) {
    result = result * ((std::uint64_t{1} << (m - i)) - 1) / ((std::uint64_t{1} << (i + 1)) - 1);
  }
  return result;
}

std::vector<Subgroup> enumerate_all_subgroups(std::size_t n, std::size_t t) {
  if (n == 0 || n > PauliString::kMaxQubits / 2 || t == 0 || t > 2 * n) {
    throw ArityError("oracle needs 1 <= t <= 2n and n <= 16");
  }
  const std::size_t width = 2 * n;
  std::vector<Subgroup> out;

  // Pivot columns p_0 > p_1 > ... > p_{t-1}; each row may carry free bits
  // at lower non-pivot columns.
  std::vector<bool> choose(width, false);
  std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(t), true);
  do {
    std::vector<int> pivots;
    for (std::size_t c = 0; c < width; ++c) {
      if (choose[c]) pivots.push_back(static_cast<int>(width - 1 - c));
    }
    std::uint64_t pivot_mask = 0;
    for (int p : pivots) pivot_mask |= std::uint64_t{1} << p;

    std::vector<std::vector<int>> free_bits(t);
    std::size_t total_free = 0;
    for (std::size_t r = 0; r < t; ++r) {
      for (int bit = pivots[r] - 1; bit >= 0; --bit) {
        if (!((pivot_mask >> bit) & 1u)) free_bits[r].push_back(bit);
      }
      total_free += free_bits[r].size();
    }
    for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << total_free); ++assign) {
      std::vector<PauliString> rows;
      std::size_t cursor = 0;
      for (std::size_t r = 0; r < t; ++r) {
        std::uint64_t v = std::uint64_t{1} << pivots[r];
        for (int bit : free_bits[r]) {
          if ((assign >> cursor++) & 1u) v |= std::uint64_t{1} << bit;
        }
        rows.push_back(PauliString::from_symplectic(n, v));
      }
      out.push_back(Subgroup::span(n, rows, Provenance{Origin::oracle, {}}));
    }
  } while (std::prev_permutation(choose.begin(), choose.end()));

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace densecode
