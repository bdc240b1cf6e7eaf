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

#include "densecode/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#ifndef DENSECODE_DATA_DIR
#define DENSECODE_DATA_DIR "data"
#endif

namespace densecode {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

Subgroup from_lines(const std::vector<std::vector<FactorSet>> &lines, Origin origin) {
  if (lines.empty() || lines.size() > 2) throw ParseError("expected one or two lines", 0);
  Construction c;
  c.a_line = lines.front();
  c.b_line = lines.back();
  if (c.a_line.size() != c.b_line.size() || c.a_line.empty()) {
    throw ArityError("lines of a union must have equal, nonzero length");
  }
  std::vector<PauliString> elements = c.expand();
  return Subgroup::from_elements(std::move(elements), Provenance{origin, {std::move(c)}});
}

std::string strip_order_suffix(std::string_view name) {
  const auto open = name.find('(');
  if (open == std::string_view::npos || open == 0 || name.front() == '{') return std::string(name);
  return std::string(trim(name.substr(0, open)));
}

Origin origin_from_string(std::string_view s) {
  if (s == "algorithm1") return Origin::algorithm1;
  if (s == "shukla") return Origin::shukla;
  if (s == "oracle") return Origin::oracle;
  return Origin::user;
}

}  // namespace

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path data_dir() {
  if (const char *env = std::getenv("DENSECODE_DATA_DIR"); env && *env) return env;
  return DENSECODE_DATA_DIR;
}

// ---------------------------------------------------------------------------
// LabelCatalog

LabelCatalog LabelCatalog::from_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.contains("labels") || !doc["labels"].is_array()) {
    throw ParseError("label file needs a \"labels\" array", 0);
  }
  LabelCatalog cat;
  std::size_t index = 0;
  for (const auto &entry : doc["labels"]) {
    if (!entry.contains("name") || !entry.contains("lines")) {
      throw ParseError("label entry needs \"name\" and \"lines\"", index);
    }
    std::vector<std::vector<FactorSet>> lines;
    for (const auto &line : entry["lines"]) {
      std::vector<FactorSet> sets;
      for (const auto &factor : line) sets.push_back(FactorSet::parse(factor.get<std::string>()));
      lines.push_back(std::move(sets));
    }
    Subgroup g = from_lines(lines, Origin::user);
    cat.by_key_[{g.arity(), g.basis()}].push_back(cat.entries_.size());
    cat.entries_.push_back({entry["name"].get<std::string>(), std::move(g)});
    ++index;
  }
  return cat;
}

LabelCatalog LabelCatalog::load(const std::filesystem::path &path) {
  return from_json(read_file(path));
}

LabelCatalog LabelCatalog::load_default() {
  if (const char *env = std::getenv("DENSECODE_LABELS"); env && *env) return load(env);
  const auto path = data_dir() / "labels.json";
  if (!std::filesystem::exists(path)) return {};
  return load(path);
}

std::vector<std::string> LabelCatalog::aliases(const Subgroup &h) const {
  std::vector<std::string> out;
  auto it = by_key_.find({h.arity(), h.basis()});
  if (it == by_key_.end()) return out;
  for (std::size_t i : it->second) out.push_back(entries_[i].name);
  return out;
}

std::string LabelCatalog::display_name(const Subgroup &h) const {
  auto names = aliases(h);
  return names.empty() ? h.key_string() : names.front();
}

std::optional<Subgroup> LabelCatalog::find(std::string_view alias) const {
  alias = trim(alias);
  for (const auto &e : entries_) {
    if (e.name == alias) return e.group;
  }
  for (const auto &e : entries_) {
    if (strip_order_suffix(e.name) == alias) return e.group;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Orderings

std::vector<PublishedOrdering> load_orderings(const std::filesystem::path &path) {
  const json doc = parse_json(read_file(path));
  std::vector<PublishedOrdering> out;
  for (const auto &entry : doc.at("orderings")) {
    PublishedOrdering o;
    o.state = entry.at("state").get<std::string>();
    o.subgroup = entry.at("subgroup").get<std::string>();
    o.positions = entry.at("positions").get<std::vector<std::size_t>>();
    for (const auto &op : entry.at("operators")) o.operators.push_back(parse_op(op.get<std::string>()));
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<PublishedOrdering> load_default_orderings() {
  const auto path = data_dir() / "orderings.json";
  if (!std::filesystem::exists(path)) return {};
  return load_orderings(path);
}

std::optional<PublishedOrdering> find_ordering(const std::vector<PublishedOrdering> &orderings,
                                           std::string_view state, const Subgroup &h) {
  std::optional<PublishedOrdering> fallback;
  for (const auto &o : orderings) {
    if (o.operators.empty() || o.operators.front().size() != h.arity()) continue;
    if (Subgroup::span(h.arity(), o.operators) != h) continue;
    if (o.state == state) return o;
    if (!fallback) fallback = o;
  }
  return fallback;
}

// ---------------------------------------------------------------------------
// Subgroup files

Subgroup parse_subgroup_text(std::string_view text) {
  static const std::regex header(R"(^\s*n\s*=\s*(\d+)\s+order\s*=\s*(\d+)\s*$)");
  std::optional<std::size_t> n, order;
  std::vector<PauliString> elements;
  const auto lines = split(text, '\n');
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!n) {
      std::match_results<std::string_view::const_iterator> m;
      if (!std::regex_match(line.begin(), line.end(), m, header)) {
        throw ParseError("expected header \"n=<arity> order=<2^t>\"", i);
      }
      n = std::stoul(m[1].str());
      order = std::stoul(m[2].str());
      continue;
    }
    PauliString p;
    try {
      p = parse_op(line);
    } catch (const ParseError &e) {
      throw ParseError(std::string("bad operator on line: ") + e.what(), i);
    }
    if (p.size() != *n) throw ParseError("operator length differs from n", i);
    elements.push_back(p);
  }
  if (!n) throw ParseError("missing header", 0);
  Subgroup g = Subgroup::from_elements(std::move(elements), Provenance{Origin::user, {}});
  if (g.order() != *order) {
    throw InvariantError("declared order " + std::to_string(*order) + " but found " +
                         std::to_string(g.order()) + " elements");
  }
  return g;
}

std::string format_subgroup_text(const Subgroup &h) {
  std::string out = "n=" + std::to_string(h.arity()) + " order=" + std::to_string(h.order()) + "\n";
  for (const auto &e : h.elements()) out += format_op(e) + "\n";
  return out;
}

Subgroup parse_subgroup_json(std::string_view text) {
  const json doc = parse_json(text);
  const std::size_t n = doc.at("n").get<std::size_t>();
  Provenance prov{Origin::user, {}};
  if (doc.contains("provenance") && doc["provenance"].contains("origin")) {
    prov.origin = origin_from_string(doc["provenance"]["origin"].get<std::string>());
  }
  auto read_ops = [&](const json &arr) {
    std::vector<PauliString> ops;
    for (const auto &s : arr) {
      ops.push_back(parse_op(s.get<std::string>()));
      if (ops.back().size() != n) throw ArityError("operator length differs from n");
    }
    return ops;
  };
  Subgroup g = doc.contains("elements")
                   ? Subgroup::from_elements(read_ops(doc["elements"]), prov)
                   : Subgroup::span(n, read_ops(doc.at("basis")), prov);
  if (doc.contains("order") && doc["order"].get<std::size_t>() != g.order()) {
    throw InvariantError("declared order does not match the elements");
  }
  return g;
}

std::string format_subgroup_json(const Subgroup &h) {
  json doc;
  doc["n"] = h.arity();
  doc["order"] = h.order();
  json elements = json::array();
  for (const auto &e : h.elements()) elements.push_back(format_op(e));
  doc["elements"] = elements;
  json basis = json::array();
  for (const auto &b : h.basis_elements()) basis.push_back(format_op(b));
  doc["basis"] = basis;
  json prov;
  prov["origin"] = to_string(h.provenance().origin);
  json cons = json::array();
  for (const auto &c : h.provenance().constructions) cons.push_back(c.describe());
  prov["constructions"] = cons;
  if (auto s = h.provenance().equal_columns()) prov["equal_columns"] = *s;
  doc["provenance"] = prov;
  return doc.dump(2) + "\n";
}

Subgroup parse_subgroup(std::string_view text) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') return parse_subgroup_json(body);
  return parse_subgroup_text(text);
}

Subgroup parse_subgroup_spec(std::string_view text) {
  text = trim(text);
  if (text.find('|') != std::string_view::npos || text.find('.') != std::string_view::npos) {
    std::vector<std::vector<FactorSet>> lines;
    for (auto line : split(text, '|')) {
      std::vector<FactorSet> sets;
      for (auto f : split(trim(line), '.')) sets.push_back(FactorSet::parse(trim(f)));
      lines.push_back(std::move(sets));
    }
    return from_lines(lines, Origin::user);
  }
  std::vector<PauliString> elements;
  std::size_t offset = 0;
  for (auto token : split(text, ',')) {
    try {
      elements.push_back(parse_op(trim(token)));
    } catch (const ParseError &e) {
      throw ParseError(std::string("bad element: ") + e.what(), offset + e.position());
    }
    offset += token.size() + 1;
  }
  if (elements.empty()) throw ParseError("empty element list", 0);
  const std::size_t n = elements.front().size();
  for (const auto &e : elements) {
    if (e.size() != n) throw ArityError("elements have different lengths");
  }
  return Subgroup::from_elements(std::move(elements), Provenance{Origin::user, {}});
}

}  // namespace densecode
