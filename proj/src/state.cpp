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

#include "densecode/state.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <unordered_set>

namespace densecode {

namespace {

std::uint64_t isqrt_exact(std::uint64_t v, bool &exact) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  exact = r * r == v;
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::size_t parse_index(std::string_view token) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ArityError("bad qubit index '" + std::string(token) + "'");
  }
  return v;
}

SymmetricState from_tokens(std::size_t qubits, std::initializer_list<const char *> tokens) {
  std::string text;
  for (const char *t : tokens) {
    text += t;
    text += '\n';
  }
  SymmetricState s = parse_state(text);
  if (s.qubits() != qubits) throw InvariantError("builtin state width mismatch");
  return s;
}

}  // namespace

std::string to_string(const Rational &r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// ---------------------------------------------------------------------------
// SymmetricState

SymmetricState::SymmetricState(std::size_t qubits, std::vector<Item> items)
    : qubits_(qubits), items_(std::move(items)) {
  if (qubits_ == 0 || qubits_ > kMaxQubits) throw ParseError("qubit count out of range", 0);
  if (items_.empty()) throw ParseError("state has no items", 0);
  const std::uint64_t limit = std::uint64_t{1} << qubits_;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i].sign != 1 && items_[i].sign != -1) throw ParseError("sign must be +1 or -1", i);
    if (items_[i].ket >= limit) throw ParseError("ket wider than the state", i);
  }
  sorted_ = items_;
  std::sort(sorted_.begin(), sorted_.end(),
            [](const Item &a, const Item &b) { return a.ket < b.ket; });
  for (std::size_t i = 1; i < sorted_.size(); ++i) {
    if (sorted_[i].ket == sorted_[i - 1].ket) {
      const auto it = std::find_if(items_.begin(), items_.end(),
                                   [&](const Item &x) { return x.ket == sorted_[i].ket; });
      const auto second = std::find_if(it + 1, items_.end(),
                                       [&](const Item &x) { return x.ket == sorted_[i].ket; });
      throw ParseError("duplicate ket " + format_ket(sorted_[i].ket, qubits_),
                       static_cast<std::size_t>(second - items_.begin()));
    }
  }
}

int SymmetricState::sign_of(std::uint64_t ket) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), ket,
                             [](const Item &a, std::uint64_t k) { return a.ket < k; });
  return (it != sorted_.end() && it->ket == ket) ? it->sign : 0;
}

bool operator==(const SymmetricState &a, const SymmetricState &b) {
  return a.qubits_ == b.qubits_ && a.sorted_ == b.sorted_;
}

// ---------------------------------------------------------------------------
// Text forms

std::string format_ket(std::uint64_t ket, std::size_t qubits) {
  std::string out(qubits, '0');
  for (std::size_t q = 0; q < qubits; ++q) {
    if ((ket >> q) & 1u) out[q] = '1';
  }
  return out;
}

SymmetricState parse_state(std::string_view text) {
  std::vector<Item> items;
  std::size_t width = 0;
  std::size_t index = 0;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t tok_start = 0;
    while (tok_start <= line.size()) {
      std::size_t tok_end = line.find(',', tok_start);
      if (tok_end == std::string_view::npos) tok_end = line.size();
      std::string_view token = trim(line.substr(tok_start, tok_end - tok_start));
      tok_start = tok_end + 1;
      if (token.empty()) continue;

      Item item;
      if (token.front() == '+' || token.front() == '-') {
        item.sign = token.front() == '-' ? -1 : 1;
        token.remove_prefix(1);
      } else {
        throw ParseError("item must start with '+' or '-'", index);
      }
      if (token.empty()) throw ParseError("missing ket", index);
      if (width == 0) {
        width = token.size();
        if (width > SymmetricState::kMaxQubits) throw ParseError("ket too long", index);
      } else if (token.size() != width) {
        throw ParseError("ragged ket length", index);
      }
      for (std::size_t q = 0; q < token.size(); ++q) {
        if (token[q] == '1') {
          item.ket |= std::uint64_t{1} << q;
        } else if (token[q] != '0') {
          throw ParseError("ket must be a bitstring", index);
        }
      }
      items.push_back(item);
      ++index;
    }
    line_start = line_end + 1;
  }
  if (items.empty()) throw ParseError("state has no items", 0);
  return SymmetricState(width, std::move(items));
}

std::string format_state(const SymmetricState &s) {
  std::string out;
  for (const auto &item : s.items()) {
    out += item.sign < 0 ? '-' : '+';
    out += format_ket(item.ket, s.qubits());
    out += '\n';
  }
  return out;
}

std::string format_ket_sum(const SymmetricState &s) {
  bool exact = false;
  const std::uint64_t root = isqrt_exact(s.size(), exact);
  std::string out = "1/";
  out += exact ? std::to_string(root) : "\xE2\x88\x9A" + std::to_string(s.size());
  out += '(';
  bool first = true;
  for (const auto &item : s.items()) {
    if (first) {
      if (item.sign < 0) out += '-';
    } else {
      out += item.sign < 0 ? " - " : " + ";
    }
    first = false;
    out += "|" + format_ket(item.ket, s.qubits()) + "\xE2\x9F\xA9";
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// PositionSet

PositionSet::PositionSet(std::vector<std::size_t> positions, std::size_t qubits)
    : positions_(std::move(positions)) {
  if (positions_.empty()) throw ArityError("position set is empty");
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (positions_[i] < 1 || positions_[i] > qubits) {
      throw ArityError("position " + std::to_string(positions_[i]) + " outside 1.." +
                       std::to_string(qubits));
    }
    if (i && positions_[i] <= positions_[i - 1]) {
      throw ArityError("positions must be strictly increasing");
    }
  }
}

PositionSet PositionSet::parse(std::string_view text, std::size_t qubits) {
  text = trim(text);
  if (!text.empty() && text.front() == '(') text.remove_prefix(1);
  if (!text.empty() && text.back() == ')') text.remove_suffix(1);
  std::vector<std::size_t> positions;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    positions.push_back(parse_index(trim(text.substr(start, end - start))));
    start = end + 1;
  }
  return PositionSet(std::move(positions), qubits);
}

std::uint64_t PositionSet::mask() const {
  std::uint64_t m = 0;
  for (std::size_t p : positions_) m |= std::uint64_t{1} << (p - 1);
  return m;
}

std::string PositionSet::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(positions_[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Constraints

bool check_constraint1(const SymmetricState &s) { return s.size() % 2 == 0; }

bool projections_distinct(const SymmetricState &s, const PositionSet &p) {
  const std::uint64_t mask = p.mask();
  std::unordered_set<std::uint64_t> seen;
  for (const auto &item : s.items()) {
    if (!seen.insert(item.ket & mask).second) return false;
  }
  return true;
}

std::vector<PositionSet> valid_position_sets(const SymmetricState &s) {
  const std::size_t t = s.qubits();
  const std::size_t k = (t + 1) / 2;
  std::vector<PositionSet> out;
  std::vector<bool> choose(t, false);
  std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> positions;
    for (std::size_t q = 0; q < t; ++q) {
      if (choose[q]) positions.push_back(q + 1);
    }
    PositionSet p(std::move(positions), t);
    if (projections_distinct(s, p)) out.push_back(std::move(p));
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Operator action and overlaps

SymmetricState apply(const PauliString &g, const PositionSet &p, const SymmetricState &s) {
  if (g.size() != p.size()) {
    throw ArityError("operator acts on " + std::to_string(g.size()) + " qubits but " +
                     std::to_string(p.size()) + " positions were given");
  }
  if (p.positions().back() > s.qubits()) throw ArityError("position outside the state");
  std::uint64_t xmask = 0, zmask = 0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const std::uint64_t bit = std::uint64_t{1} << (p[j] - 1);
    if (x_bit(g[j])) xmask |= bit;
    if (z_bit(g[j])) zmask |= bit;
  }
  std::vector<Item> items;
  items.reserve(s.size());
  for (const auto &item : s.items()) {
    const bool flip = std::popcount(zmask & (item.ket ^ xmask)) & 1;
    items.push_back({flip ? -item.sign : item.sign, item.ket ^ xmask});
  }
  return SymmetricState(s.qubits(), std::move(items));
}

Rational Overlap::squared() const {
  return Rational(numerator * numerator, static_cast<std::int64_t>(norm_product));
}

std::optional<Rational> Overlap::exact() const {
  bool is_square = false;
  const std::uint64_t root = isqrt_exact(norm_product, is_square);
  if (!is_square) return std::nullopt;
  return Rational(numerator, static_cast<std::int64_t>(root));
}

double Overlap::value() const {
  return static_cast<double>(numerator) / std::sqrt(static_cast<double>(norm_product));
}

Overlap inner_product(const SymmetricState &a, const SymmetricState &b) {
  if (a.qubits() != b.qubits()) throw ArityError("states have different qubit counts");
  std::int64_t sum = 0;
  for (const auto &item : a.items()) sum += item.sign * b.sign_of(item.ket);
  return {sum, static_cast<std::uint64_t>(a.size()) * b.size()};
}

Rational expectation(const PauliString &g, const PositionSet &p, const SymmetricState &s) {
  const Overlap o = inner_product(s, apply(g, p, s));
  return Rational(o.numerator, static_cast<std::int64_t>(s.size()));
}

Rational distinguishability(const SymmetricState &a, const SymmetricState &b) {
  return inner_product(a, b).squared();
}

bool equal_up_to_sign(const SymmetricState &a, const SymmetricState &b) {
  if (a.qubits() != b.qubits() || a.size() != b.size()) return false;
  const Overlap o = inner_product(a, b);
  return static_cast<std::uint64_t>(o.numerator < 0 ? -o.numerator : o.numerator) == a.size();
}

// ---------------------------------------------------------------------------
// Built-in states

SymmetricState ghz_state(std::size_t qubits) {
  if (qubits < 1 || qubits > SymmetricState::kMaxQubits) throw ArityError("bad GHZ size");
  const std::uint64_t ones = qubits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << qubits) - 1;
  return SymmetricState(qubits, {{1, 0}, {1, ones}});
}

SymmetricState w_state(std::size_t qubits) {
  if (qubits < 1 || qubits > SymmetricState::kMaxQubits) throw ArityError("bad W size");
  std::vector<Item> items;
  for (std::size_t q = 0; q < qubits; ++q) items.push_back({1, std::uint64_t{1} << q});
  return SymmetricState(qubits, std::move(items));
}

std::vector<std::string> builtin_state_names() {
  return {"bell", "ghz<M>", "w_<t>", "w1_4", "cluster4", "cluster5", "w3", "w2_4"};
}

SymmetricState builtin_state(std::string_view name) {
  if (name == "bell") return ghz_state(2);
  if (name == "w1_4") return from_tokens(4, {"+1100", "+0110", "+0011", "+1001"});
  if (name == "cluster4") return from_tokens(4, {"+0000", "+0011", "+1100", "-1111"});
  if (name == "cluster5") return from_tokens(5, {"+00000", "+00111", "+11011", "-11100"});
  if (name == "w3") return from_tokens(3, {"+001", "+010", "+100"});
  if (name == "w2_4") return from_tokens(4, {"+0001", "+0010", "+0100", "+1000"});
  auto sized = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) {
      return std::nullopt;
    }
    std::string_view digits = name.substr(prefix.size());
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
    return v;
  };
  if (auto m = sized("ghz")) {
    if (*m < 2) throw ArityError("GHZ needs at least 2 qubits");
    return ghz_state(*m);
  }
  if (auto t = sized("w_")) {
    if (*t < 2) throw ArityError("W needs at least 2 qubits");
    return w_state(*t);
  }
  throw std::invalid_argument("unknown builtin state '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Cluster check

std::vector<std::vector<std::size_t>> chain_graph(std::size_t qubits) {
  std::vector<std::vector<std::size_t>> g(qubits);
  for (std::size_t a = 1; a <= qubits; ++a) {
    if (a > 1) g[a - 1].push_back(a - 1);
    if (a < qubits) g[a - 1].push_back(a + 1);
  }
  return g;
}

std::vector<std::optional<int>> verify_cluster(
    const SymmetricState &s, const std::vector<std::vector<std::size_t>> &neighbours) {
  const std::size_t t = s.qubits();
  std::vector<std::optional<int>> out(t);
  for (std::size_t a = 1; a <= t; ++a) {
    std::vector<std::size_t> sites{a};
    if (a - 1 < neighbours.size()) {
      for (std::size_t b : neighbours[a - 1]) {
        if (b != a) sites.push_back(b);
      }
    }
    std::sort(sites.begin(), sites.end());
    sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
    PositionSet p(sites, t);
    PauliString k(sites.size());
    for (std::size_t j = 0; j < sites.size(); ++j) k.set(j, sites[j] == a ? Pauli::X : Pauli::Z);
    const Overlap o = inner_product(s, apply(k, p, s));
    if (static_cast<std::uint64_t>(o.numerator) == s.size()) {
      out[a - 1] = 0;
    } else if (o.numerator < 0 && static_cast<std::uint64_t>(-o.numerator) == s.size()) {
      out[a - 1] = 1;
    }
  }
  return out;
}

}  // namespace densecode
