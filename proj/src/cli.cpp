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

#include "densecode/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "densecode/catalog.hpp"
#include "densecode/codec.hpp"
#include "densecode/selector.hpp"
#include "densecode/state.hpp"
#include "densecode/subgroup.hpp"

namespace densecode {

namespace {

using nlohmann::json;

/// Failure that maps to a specific exit code.
struct CliFailure : std::runtime_error {
  CliFailure(int code, const std::string &what) : std::runtime_error(what), code(code) {}
  int code;
};

struct Options {
  std::size_t qubits = 0;
  std::string state;
  std::string positions;
  std::string filter = "none";
  std::string format = "md";
  std::string ordering = "canonical";
  std::string subgroup;
  std::string bits;
  std::string out;
  std::size_t workers = 0;
  bool no_oracle = false;
  bool unverified = false;
};

struct StateSource {
  std::string id;
  SymmetricState state;
};

StateSource load_state(const std::string &source) {
  if (source.empty()) throw CliFailure(kExitUsage, "--state is required");
  if (std::filesystem::is_regular_file(source)) {
    SymmetricState state = parse_state(read_file(source));
    return {std::filesystem::path(source).stem().string(), std::move(state)};
  }
  try {
    SymmetricState state = builtin_state(source);
    return {source, std::move(state)};
  } catch (const std::invalid_argument &e) {
    throw CliFailure(kExitUsage, std::string(e.what()) + "; builtins: bell, ghz<M>, w_<t>, " +
                                     "w1_4, cluster4, cluster5, w3, w2_4, or a state file");
  }
}

Subgroup load_subgroup(const std::string &source, const LabelCatalog &labels) {
  if (source.empty()) throw CliFailure(kExitUsage, "--subgroup is required");
  if (auto g = labels.find(source)) return *g;
  if (std::filesystem::is_regular_file(source)) return parse_subgroup(read_file(source));
  return parse_subgroup_spec(source);
}

PositionSet resolve_positions(const Options &o, const SymmetricState &s, std::size_t arity) {
  if (o.positions.empty()) {
    for (const auto &p : valid_position_sets(s)) {
      if (p.size() == arity) return p;
    }
    throw CliFailure(kExitConstraint,
                     "Condition 2 violated: no valid position set for this state");
  }
  PositionSet p = PositionSet::parse(o.positions, s.qubits());
  if (p.size() != arity) {
    throw CliFailure(kExitUsage, "--positions lists " + std::to_string(p.size()) +
                                     " qubits but the subgroup acts on " + std::to_string(arity));
  }
  if (!projections_distinct(s, p)) {
    throw CliFailure(kExitConstraint, "Condition 2 violated: positions " + p.str() +
                                          " do not give pairwise distinct item projections");
  }
  return p;
}

std::vector<PauliString> resolve_ordering(const Options &o, const Subgroup &h,
                                          const std::string &state_id) {
  if (o.ordering == "canonical") return canonical_order(h);
  if (o.ordering == "lexicographic") return lexicographic_order(h);
  if (o.ordering == "paper") {
    const auto found = find_ordering(load_default_orderings(), state_id, h);
    if (!found) throw CliFailure(kExitUsage, "no published ordering for this subgroup");
    return found->operators;
  }
  std::vector<PauliString> ops;
  std::stringstream ss(o.ordering);
  for (std::string tok; std::getline(ss, tok, ',');) ops.push_back(parse_op(tok));
  return ops;
}

TableFormat table_format(const std::string &f) { return parse_table_format(f); }

void emit(const Options &o, std::ostream &out, const std::string &text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw CliFailure(kExitUsage, "cannot write " + o.out);
  file << text;
}

std::string family_label(const Subgroup &h) {
  const auto s = h.provenance().equal_columns();
  return s ? "s = " + std::to_string(*s) : "degenerate";
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_construct(const Options &o, std::ostream &out, const LabelCatalog &labels) {
  const auto groups = construct_mgp_subgroups(o.qubits);
  for (const auto &g : groups) {
    if (g.order() != (std::size_t{1} << o.qubits) ||
        !is_closed(std::span<const PauliString>(g.elements()))) {
      throw InvariantError("constructed subgroup " + g.key_string() + " is malformed");
    }
  }
  const auto census = construction_census(o.qubits);
  if (o.format == "json") {
    json doc;
    doc["qubits"] = o.qubits;
    doc["arity"] = arity_for(o.qubits);
    doc["lambda"] = lambda_count(o.qubits);
    doc["census"] = {{"raw", census.raw},
                     {"per_column_choice", census.per_column_choice},
                     {"distinct", census.distinct}};
    json arr = json::array();
    for (const auto &g : groups) {
      json j = json::parse(format_subgroup_json(g));
      j["key"] = g.key_string();
      j["aliases"] = labels.aliases(g);
      arr.push_back(j);
    }
    doc["subgroups"] = arr;
    emit(o, out, doc.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream ss;
  ss << "# Two-step construction, t = " << o.qubits << " (n = " << arity_for(o.qubits) << ")\n\n";
  ss << "- distinct subgroups: " << groups.size() << "\n";
  ss << "- lambda: " << lambda_count(o.qubits) << "\n";
  ss << "- raw candidates: " << census.raw << "; distinct per column choice: "
     << census.per_column_choice << "\n\n";
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto &g = groups[i];
    const auto names = labels.aliases(g);
    ss << "## " << (i + 1) << ". " << (names.empty() ? g.key_string() : names.front());
    for (std::size_t k = 1; k < names.size(); ++k) ss << " = " << names[k];
    ss << "\n\n";
    ss << "- basis: " << g.key_string() << "\n";
    ss << "- family: " << family_label(g) << "\n";
    std::set<std::string> seen;
    for (const auto &c : g.provenance().constructions) {
      if (seen.insert(c.describe()).second) ss << "- built as: " << c.describe() << "\n";
    }
    ss << "- elements: {";
    for (std::size_t k = 0; k < g.elements().size(); ++k) {
      ss << (k ? ", " : "") << format_tensor(g.elements()[k]);
    }
    ss << "}\n\n";
  }
  emit(o, out, ss.str());
  return kExitOk;
}

int cmd_oracle(const Options &o, std::ostream &out, const LabelCatalog &labels) {
  const std::size_t n = arity_for(o.qubits);
  const auto all = enumerate_all_subgroups(n, o.qubits);
  const auto ours = construct_mgp_subgroups(o.qubits);
  std::set<BasisKey> constructed;
  for (const auto &g : ours) constructed.insert(g.basis());
  std::vector<Subgroup> missing;
  for (const auto &g : all) {
    if (!constructed.contains(g.basis())) missing.push_back(g);
  }
  std::size_t outside = 0;
  std::set<BasisKey> oracle_keys;
  for (const auto &g : all) oracle_keys.insert(g.basis());
  for (const auto &k : constructed) outside += oracle_keys.contains(k) ? 0 : 1;
  if (outside) throw InvariantError("constructed subgroup missing from the oracle");

  if (o.format == "json") {
    json doc;
    doc["qubits"] = o.qubits;
    doc["arity"] = n;
    doc["constructed"] = ours.size();
    doc["total"] = all.size();
    doc["missing"] = missing.size();
    doc["gaussian_binomial"] = gaussian_binomial(2 * n, o.qubits);
    json arr = json::array();
    for (const auto &g : missing) {
      json j;
      j["key"] = g.key_string();
      j["aliases"] = labels.aliases(g);
      std::vector<std::string> elems;
      for (const auto &e : g.elements()) elems.push_back(format_op(e));
      j["elements"] = elems;
      arr.push_back(j);
    }
    doc["missing_subgroups"] = arr;
    emit(o, out, doc.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream ss;
  ss << "constructed " << ours.size() << " / total " << all.size() << " / missing "
     << missing.size() << "\n";
  for (const auto &g : missing) {
    ss << "missing: " << g.key_string() << " {";
    for (std::size_t k = 0; k < g.elements().size(); ++k) {
      ss << (k ? "," : "") << format_op(g.elements()[k]);
    }
    ss << "}\n";
  }
  emit(o, out, ss.str());
  return kExitOk;
}

int cmd_select(const Options &o, std::ostream &out, std::ostream &err,
               const LabelCatalog &labels) {
  const auto src = load_state(o.state);
  const auto report =
      select(src.state, parse_filter_mode(o.filter), src.id, SelectOptions{o.workers});
  emit(o, out, o.format == "json" ? report_json(report, labels) : report_markdown(report, labels));
  if (report.failure) {
    err << *report.failure << "\n";
    return kExitConstraint;
  }
  return kExitOk;
}

int cmd_compare(const Options &o, std::ostream &out, std::ostream &err,
                const LabelCatalog &labels) {
  const auto src = load_state(o.state);
  const auto c = compare_methods(src.state, src.id, !o.no_oracle, SelectOptions{o.workers});
  emit(o, out, o.format == "json" ? comparison_json(c, labels) : comparison_markdown(c, labels));
  if (c.failure) {
    err << *c.failure << "\n";
    return kExitConstraint;
  }
  return kExitOk;
}

int cmd_table(const Options &o, std::ostream &out, const LabelCatalog &labels) {
  const auto src = load_state(o.state);
  const Subgroup h = load_subgroup(o.subgroup, labels);
  const PositionSet p = resolve_positions(o, src.state, h.arity());
  const auto order = resolve_ordering(o, h, src.id);
  if (o.unverified) {
    emit(o, out, emit_rows(table_rows(order, p, src.state), p, table_format(o.format)));
    return kExitOk;
  }
  try {
    const Codebook cb = Codebook::build(h, p, src.state, order);
    emit(o, out, emit_table(cb, table_format(o.format)));
  } catch (const CodebookError &e) {
    throw CliFailure(kExitConstraint, e.what());
  }
  return kExitOk;
}

int cmd_simulate(const Options &o, std::ostream &out, const LabelCatalog &labels) {
  const auto src = load_state(o.state);
  const Subgroup h = load_subgroup(o.subgroup, labels);
  const PositionSet p = resolve_positions(o, src.state, h.arity());
  const auto order = resolve_ordering(o, h, src.id);
  std::optional<Codebook> cb;
  try {
    cb = Codebook::build(h, p, src.state, order);
  } catch (const CodebookError &e) {
    throw CliFailure(kExitConstraint, e.what());
  }
  const Transcript tr = simulate_roundtrip(*cb, o.bits);
  if (tr.output != o.bits) throw InvariantError("round trip altered the message");
  emit(o, out, transcript_json(tr));
  return kExitOk;
}

int cmd_mult_table(const Options &o, std::ostream &out, const LabelCatalog &labels) {
  const Subgroup h = load_subgroup(o.subgroup, labels);
  const auto order = resolve_ordering(o, h, o.state);
  emit(o, out, emit_multiplication_table(order, table_format(o.format)));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Construct, select and exercise operator sets for maximal dense coding"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--out", o.out, "Write output to this file");
  app.add_option("--workers", o.workers, "Worker threads (0 = all cores)");

  auto *construct = app.add_subcommand("construct", "List subgroups from the two-step construction");
  construct->add_option("--qubits", o.qubits, "Qubit count t")->required()->check(CLI::Range(1, 12));
  construct->add_option("--format", o.format)->check(CLI::IsMember({"md", "json"}));

  auto *oracle = app.add_subcommand("oracle", "Compare the construction against every subgroup");
  oracle->add_option("--qubits", o.qubits, "Qubit count t")->required()->check(CLI::Range(1, 8));
  oracle->add_option("--format", o.format)->check(CLI::IsMember({"md", "txt", "json"}));

  auto *sel = app.add_subcommand("select", "Find the operator sets that work for a state");
  sel->add_option("--state", o.state, "Builtin name or state file")->required();
  sel->add_option("--filter", o.filter)->check(CLI::IsMember({"none", "literal", "semantic"}));
  sel->add_option("--format", o.format)->check(CLI::IsMember({"md", "json"}));

  auto *cmp = app.add_subcommand("compare", "Baseline versus two-step versus exhaustive sets");
  cmp->add_option("--state", o.state, "Builtin name or state file")->required();
  cmp->add_option("--format", o.format)->check(CLI::IsMember({"md", "json"}));
  cmp->add_flag("--no-oracle", o.no_oracle, "Skip the exhaustive column");

  const std::vector<std::string> formats{"md", "markdown", "csv", "json", "txt", "text"};
  auto *table = app.add_subcommand("table", "Emit a dense-coding table");
  table->add_option("--state", o.state)->required();
  table->add_option("--subgroup", o.subgroup, "Alias, element list, or subgroup file")->required();
  table->add_option("--positions", o.positions, "Operated qubits, e.g. 1,2");
  table->add_option("--ordering", o.ordering,
                    "canonical, lexicographic, paper, or a comma-separated operator list");
  table->add_option("--format", o.format)->check(CLI::IsMember(formats));
  table->add_flag("--unverified", o.unverified, "Emit rows even when codewords overlap");

  auto *sim = app.add_subcommand("simulate", "Encode and decode a bitstring");
  sim->add_option("--state", o.state)->required();
  sim->add_option("--subgroup", o.subgroup)->required();
  sim->add_option("--positions", o.positions);
  sim->add_option("--ordering", o.ordering);
  sim->add_option("--bits", o.bits, "Message bits");

  auto *mult = app.add_subcommand("mult-table", "Emit a group multiplication table");
  mult->add_option("--subgroup", o.subgroup)->required();
  mult->add_option("--ordering", o.ordering);
  mult->add_option("--state", o.state, "State name used to look up a published ordering");
  mult->add_option("--format", o.format)->check(CLI::IsMember(formats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const LabelCatalog labels = LabelCatalog::load_default();
    if (construct->parsed()) return cmd_construct(o, out, labels);
    if (oracle->parsed()) return cmd_oracle(o, out, labels);
    if (sel->parsed()) return cmd_select(o, out, err, labels);
    if (cmp->parsed()) return cmd_compare(o, out, err, labels);
    if (table->parsed()) return cmd_table(o, out, labels);
    if (sim->parsed()) return cmd_simulate(o, out, labels);
    if (mult->parsed()) return cmd_mult_table(o, out, labels);
  } catch (const CliFailure &e) {
    err << "error: " << e.what() << "\n";
    return e.code;
  } catch (const InvariantError &e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace densecode
