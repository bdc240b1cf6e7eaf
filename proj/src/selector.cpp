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

#include "densecode/selector.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include <nlohmann/json.hpp>

namespace densecode {

using nlohmann::json;

namespace {

template <typename Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn &&fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

void check_arity(const Subgroup &h, const PositionSet &p, const SymmetricState &s) {
  if (h.arity() != p.size()) {
    throw ArityError("subgroup arity " + std::to_string(h.arity()) + " does not match " +
                     std::to_string(p.size()) + " positions");
  }
  if (p.size() && p.positions().back() > s.qubits()) {
    throw ArityError("position outside the state");
  }
}

std::vector<std::string> tensor_list(const Subgroup &h) {
  std::vector<std::string> out;
  for (const auto &e : h.elements()) out.push_back(format_tensor(e));
  return out;
}

std::string join(const std::vector<std::string> &items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

json subgroup_json(const Subgroup &h, const LabelCatalog &labels) {
  json j;
  j["key"] = h.key_string();
  j["aliases"] = labels.aliases(h);
  j["order"] = h.order();
  j["elements"] = tensor_list(h);
  if (auto s = h.provenance().equal_columns()) j["equal_columns"] = *s;
  return j;
}

std::string names_line(const std::vector<Subgroup> &groups, const LabelCatalog &labels) {
  std::vector<std::string> names;
  for (const auto &g : groups) names.push_back(labels.display_name(g));
  return names.empty() ? "(none)" : join(names, ", ");
}

}  // namespace

FilterMode parse_filter_mode(std::string_view text) {
  if (text == "none") return FilterMode::none;
  if (text == "literal") return FilterMode::literal;
  if (text == "semantic") return FilterMode::semantic;
  throw std::invalid_argument("unknown filter mode '" + std::string(text) + "'");
}

std::string to_string(FilterMode mode) {
  switch (mode) {
    case FilterMode::none: return "none";
    case FilterMode::literal: return "literal";
    case FilterMode::semantic: return "semantic";
  }
  return "none";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::accepted: return "accepted";
    case Verdict::rejected_condition1: return "rejected-condition1";
    case Verdict::rejected_orthogonality: return "rejected-orthogonality";
  }
  return "accepted";
}

// ---------------------------------------------------------------------------
// Conditions

std::optional<PauliString> condition1_literal_violation(const Subgroup &h) {
  for (const auto &g : h.elements()) {
    if (!g.is_identity() && g.is_diagonal() && g.z_count() % 2 == 0) return g;
  }
  return std::nullopt;
}

bool condition1_literal(const Subgroup &h) { return !condition1_literal_violation(h); }

std::optional<Witness> condition1_semantic_violation(const Subgroup &h, const PositionSet &p,
                                                     const SymmetricState &s) {
  check_arity(h, p, s);
  for (const auto &g : h.elements()) {
    if (g.is_identity()) continue;
    const Rational e = expectation(g, p, s);
    if (e.numerator() == e.denominator() || e.numerator() == -e.denominator()) {
      return Witness{g, e};
    }
  }
  return std::nullopt;
}

bool condition1_semantic(const Subgroup &h, const PositionSet &p, const SymmetricState &s) {
  return !condition1_semantic_violation(h, p, s);
}

std::optional<Witness> orthogonality_violation(const Subgroup &h, const PositionSet &p,
                                               const SymmetricState &s) {
  check_arity(h, p, s);
  if (h.order() != (std::size_t{1} << s.qubits())) {
    throw ArityError("subgroup order " + std::to_string(h.order()) + " is not 2^" +
                     std::to_string(s.qubits()));
  }
  for (const auto &g : h.elements()) {
    if (g.is_identity()) continue;
    const Rational e = expectation(g, p, s);
    if (e.numerator() != 0) return Witness{g, e};
  }
  return std::nullopt;
}

bool verify_orthogonal(const Subgroup &h, const PositionSet &p, const SymmetricState &s) {
  return !orthogonality_violation(h, p, s);
}

Eigen::MatrixXi codeword_gram(const Subgroup &h, const PositionSet &p, const SymmetricState &s) {
  check_arity(h, p, s);
  std::vector<SymmetricState> codewords;
  codewords.reserve(h.order());
  for (const auto &g : h.elements()) codewords.push_back(apply(g, p, s));
  const auto k = static_cast<Eigen::Index>(codewords.size());
  Eigen::MatrixXi gram(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i; j < k; ++j) {
      const auto v = static_cast<int>(inner_product(codewords[i], codewords[j]).numerator);
      gram(i, j) = v;
      gram(j, i) = v;
    }
  }
  return gram;
}

bool pairwise_orthogonal(const Subgroup &h, const PositionSet &p, const SymmetricState &s) {
  const Eigen::MatrixXi gram = codeword_gram(h, p, s);
  const auto m = static_cast<int>(s.size());
  return gram == m * Eigen::MatrixXi::Identity(gram.rows(), gram.cols());
}

// ---------------------------------------------------------------------------
// Selection

std::vector<std::size_t> SelectionReport::accepted_at(const PositionSet &p) const {
  std::vector<std::size_t> out;
  for (const auto &e : entries) {
    if (e.positions == p && e.verdict == Verdict::accepted) out.push_back(e.subgroup);
  }
  return out;
}

std::size_t SelectionReport::accepted_count() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto &e) {
    return e.verdict == Verdict::accepted;
  }));
}

SelectionReport select_from(const SymmetricState &s, std::vector<Subgroup> candidates,
                            FilterMode filter, std::string state_id, SelectOptions options) {
  SelectionReport r;
  r.state_id = std::move(state_id);
  r.state = s;
  r.filter = filter;
  r.constraint1 = check_constraint1(s);
  r.position_sets = valid_position_sets(s);
  r.subgroups = std::move(candidates);
  if (!r.constraint1) {
    r.failure = "Constraint 1 violated: the state has " + std::to_string(s.size()) +
                " superposition items, an odd number";
    return r;
  }
  if (r.position_sets.empty()) {
    r.failure = "Constraint 2 violated: no " + std::to_string(arity_for(s.qubits())) +
                " operated qubits give pairwise distinct item projections";
    return r;
  }

  const std::size_t per_position = r.subgroups.size();
  r.entries.resize(r.position_sets.size() * per_position);
  parallel_for(r.entries.size(), options.workers, [&](std::size_t i) {
    SelectionEntry &e = r.entries[i];
    e.subgroup = i % per_position;
    e.positions = r.position_sets[i / per_position];
    const Subgroup &h = r.subgroups[e.subgroup];
    if (filter == FilterMode::literal) e.literal_violation = condition1_literal_violation(h);
    if (filter == FilterMode::semantic) {
      if (auto w = condition1_semantic_violation(h, e.positions, s)) {
        e.verdict = Verdict::rejected_condition1;
        e.witness = w;
        return;
      }
    }
    if (auto w = orthogonality_violation(h, e.positions, s)) {
      e.verdict = Verdict::rejected_orthogonality;
      e.witness = w;
    }
  });
  return r;
}

SelectionReport select(const SymmetricState &s, FilterMode filter, std::string state_id,
                       SelectOptions options) {
  return select_from(s, construct_mgp_subgroups(s.qubits()), filter, std::move(state_id),
                     options);
}

std::vector<Subgroup> shukla_candidates(std::size_t qubits) {
  const std::size_t n = arity_for(qubits);
  if (qubits % 2 == 1) return shukla_subgroups(n);
  Subgroup whole = Subgroup::whole_group(n);
  whole.provenance().origin = Origin::shukla;
  return {whole};
}

MethodComparison compare_methods(const SymmetricState &s, std::string state_id, bool with_oracle,
                                 SelectOptions options) {
  MethodComparison c;
  c.state_id = state_id;
  c.with_oracle = with_oracle;
  const std::size_t t = s.qubits();
  const std::size_t n = arity_for(t);

  const SelectionReport ours = select(s, FilterMode::none, state_id, options);
  c.failure = ours.failure;
  if (ours.failure) return c;
  const SelectionReport base = select_from(s, shukla_candidates(t), FilterMode::none, state_id, options);
  std::optional<SelectionReport> oracle;
  if (with_oracle) {
    oracle = select_from(s, enumerate_all_subgroups(n, t), FilterMode::none, state_id, options);
    c.oracle_total = oracle->subgroups.size();
  }
  for (const auto &p : ours.position_sets) {
    MethodRow row;
    row.positions = p;
    for (std::size_t i : base.accepted_at(p)) row.shukla.push_back(base.subgroups[i]);
    for (std::size_t i : ours.accepted_at(p)) row.ours.push_back(ours.subgroups[i]);
    if (oracle) {
      for (std::size_t i : oracle->accepted_at(p)) row.oracle.push_back(oracle->subgroups[i]);
    }
    c.rows.push_back(std::move(row));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Rendering

std::string report_json(const SelectionReport &r, const LabelCatalog &labels) {
  json doc;
  doc["state"] = r.state_id;
  std::vector<std::string> items;
  for (const auto &it : r.state.items()) {
    items.push_back((it.sign < 0 ? "-" : "+") + format_ket(it.ket, r.state.qubits()));
  }
  doc["items"] = items;
  doc["qubits"] = r.state.qubits();
  doc["filter"] = to_string(r.filter);
  doc["constraint1"] = r.constraint1;
  std::vector<std::string> positions;
  for (const auto &p : r.position_sets) positions.push_back(p.str());
  doc["valid_position_sets"] = positions;
  doc["failure"] = r.failure ? json(*r.failure) : json(nullptr);
  doc["candidates"] = r.subgroups.size();

  json results = json::array();
  if (!r.failure) {
    for (const auto &p : r.position_sets) {
      json block;
      block["positions"] = p.str();
      json accepted = json::array();
      json rejected = json::array();
      for (const auto &e : r.entries) {
        if (!(e.positions == p)) continue;
        json g = subgroup_json(r.subgroups[e.subgroup], labels);
        if (e.literal_violation) g["condition1_literal_violation"] = format_op(*e.literal_violation);
        if (e.verdict == Verdict::accepted) {
          accepted.push_back(g);
        } else {
          g["verdict"] = to_string(e.verdict);
          g["witness"] = {{"element", format_op(e.witness->element)},
                          {"expectation", to_string(e.witness->expectation)}};
          rejected.push_back(g);
        }
      }
      block["accepted"] = accepted;
      block["rejected"] = rejected;
      results.push_back(block);
    }
  }
  doc["results"] = results;
  return doc.dump(2) + "\n";
}

std::string report_markdown(const SelectionReport &r, const LabelCatalog &labels) {
  std::string out = "# Operator sets for " + (r.state_id.empty() ? "state" : r.state_id) + "\n\n";
  out += "State: " + format_ket_sum(r.state) + "\n\n";
  out += "- Constraint 1: " + std::string(r.constraint1 ? "satisfied" : "violated") + " (m = " +
         std::to_string(r.state.size()) + ")\n";
  std::vector<std::string> ps;
  for (const auto &p : r.position_sets) ps.push_back(p.str());
  out += "- Valid position sets: " + (ps.empty() ? std::string("none") : join(ps, ", ")) + "\n";
  out += "- Filter: " + to_string(r.filter) + "\n";
  out += "- Candidates: " + std::to_string(r.subgroups.size()) + "\n\n";
  if (r.failure) return out + "**" + *r.failure + "**\n";

  for (const auto &p : r.position_sets) {
    std::vector<Subgroup> accepted;
    for (std::size_t i : r.accepted_at(p)) accepted.push_back(r.subgroups[i]);
    out += "## Operated qubits " + p.str() + "\n\n";
    out += "Appropriate sets (" + std::to_string(accepted.size()) + "): " +
           names_line(accepted, labels) + "\n\n";
    out += "| subgroup | basis | verdict | witness |\n|---|---|---|---|\n";
    for (const auto &e : r.entries) {
      if (!(e.positions == p)) continue;
      const Subgroup &h = r.subgroups[e.subgroup];
      std::string witness = "";
      if (e.witness) {
        witness = format_tensor(e.witness->element) + " (" + to_string(e.witness->expectation) + ")";
      }
      if (e.literal_violation) {
        if (!witness.empty()) witness += "; ";
        witness += "literal: " + format_tensor(*e.literal_violation);
      }
      out += "| " + labels.display_name(h) + " | " + h.key_string() + " | " +
             to_string(e.verdict) + " | " + witness + " |\n";
    }
    out += "\n";
  }
  return out;
}

std::string comparison_json(const MethodComparison &c, const LabelCatalog &labels) {
  json doc;
  doc["state"] = c.state_id;
  doc["failure"] = c.failure ? json(*c.failure) : json(nullptr);
  if (c.with_oracle) doc["oracle_total"] = c.oracle_total;
  json rows = json::array();
  for (const auto &row : c.rows) {
    json r;
    r["positions"] = row.positions.str();
    auto column = [&](const std::vector<Subgroup> &groups) {
      json arr = json::array();
      for (const auto &g : groups) arr.push_back(subgroup_json(g, labels));
      return arr;
    };
    r["shukla"] = column(row.shukla);
    r["ours"] = column(row.ours);
    if (c.with_oracle) r["oracle"] = column(row.oracle);
    rows.push_back(r);
  }
  doc["rows"] = rows;
  return doc.dump(2) + "\n";
}

std::string comparison_markdown(const MethodComparison &c, const LabelCatalog &labels) {
  std::string out = "# Method comparison for " + (c.state_id.empty() ? "state" : c.state_id) + "\n\n";
  if (c.failure) return out + "**" + *c.failure + "**\n";
  out += c.with_oracle ? "| positions | baseline | two-step | all subgroups (of " +
                             std::to_string(c.oracle_total) + ") |\n|---|---|---|---|\n"
                       : "| positions | baseline | two-step |\n|---|---|---|\n";
  for (const auto &row : c.rows) {
    out += "| " + row.positions.str() + " | " + std::to_string(row.shukla.size()) + ": " +
           names_line(row.shukla, labels) + " | " + std::to_string(row.ours.size()) + ": " +
           names_line(row.ours, labels) + " |";
    if (c.with_oracle) out += " " + std::to_string(row.oracle.size()) + " |";
    out += "\n";
  }
  return out;
}

}  // namespace densecode
