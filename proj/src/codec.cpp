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

#include "densecode/codec.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace densecode {

using nlohmann::json;

namespace {

std::string escape_pipes(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string csv_quote(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string qubits_phrase(const PositionSet &p) {
  std::string out = p.size() == 1 ? "qubit " : "qubits ";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += i + 1 == p.size() ? " and " : ", ";
    out += std::to_string(p[i]);
  }
  return out;
}

std::vector<std::string> item_tokens(const SymmetricState &s) {
  std::vector<std::string> out;
  for (const auto &it : s.items()) {
    out.push_back((it.sign < 0 ? "-" : "+") + format_ket(it.ket, s.qubits()));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Orderings

std::vector<PauliString> canonical_order(const Subgroup &h) {
  std::vector<PauliString> out = h.elements();
  std::sort(out.begin(), out.end(), [](const PauliString &a, const PauliString &b) {
    return a.symplectic() < b.symplectic();
  });
  return out;
}

std::vector<PauliString> lexicographic_order(const Subgroup &h) { return h.elements(); }

// ---------------------------------------------------------------------------
// Codebook

Codebook Codebook::build(const Subgroup &h, const PositionSet &p, const SymmetricState &s,
                         std::span<const PauliString> order) {
  std::optional<Witness> witness;
  try {
    witness = orthogonality_violation(h, p, s);
  } catch (const ArityError &e) {
    throw CodebookError(std::string("triple cannot form a codebook: ") + e.what());
  }
  if (witness) {
    throw CodebookError("codewords are not orthogonal: <" + format_tensor(witness->element) +
                            "> = " + to_string(witness->expectation),
                        witness);
  }

  Codebook cb;
  cb.base_ = s;
  cb.positions_ = p;
  if (order.empty()) {
    cb.operators_ = canonical_order(h);
  } else {
    cb.operators_.assign(order.begin(), order.end());
    std::unordered_set<PauliString> seen;
    for (const auto &op : cb.operators_) {
      if (!h.contains(op)) {
        throw CodebookError("ordering lists " + format_op(op) + ", which is not in the subgroup");
      }
      if (!seen.insert(op).second) throw CodebookError("ordering repeats " + format_op(op));
    }
    if (cb.operators_.size() != h.order()) {
      throw CodebookError("ordering has " + std::to_string(cb.operators_.size()) +
                          " operators, subgroup has " + std::to_string(h.order()));
    }
    if (!cb.operators_.front().is_identity()) throw CodebookError("U_0 must be the identity");
  }
  for (const auto &op : cb.operators_) cb.codewords_.push_back(apply(op, p, s));
  return cb;
}

std::size_t Codebook::bits() const { return static_cast<std::size_t>(std::countr_zero(size())); }

SymmetricState Codebook::encode(std::size_t index) const {
  if (index >= codewords_.size()) {
    throw std::out_of_range("message index " + std::to_string(index) + " outside 0.." +
                            std::to_string(codewords_.size() - 1));
  }
  return codewords_[index];
}

std::size_t Codebook::decode(const SymmetricState &received) const {
  if (received.qubits() != base_.qubits()) throw ArityError("received state has the wrong width");
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < codewords_.size(); ++i) {
    if (!equal_up_to_sign(received, codewords_[i])) continue;
    if (found) {
      throw DecodeError(DecodeError::Kind::ambiguous,
                        "received state matches codewords " + std::to_string(*found) + " and " +
                            std::to_string(i));
    }
    found = i;
  }
  if (!found) throw DecodeError(DecodeError::Kind::no_match, "received state is not a codeword");
  return *found;
}

// ---------------------------------------------------------------------------
// Round trip

Transcript simulate_roundtrip(const Codebook &cb, std::string_view bits) {
  const std::size_t t = cb.bits();
  if (t == 0) throw std::invalid_argument("codebook carries no bits");
  if (bits.size() % t != 0) {
    throw std::invalid_argument("message length " + std::to_string(bits.size()) +
                                " is not a multiple of " + std::to_string(t));
  }
  Transcript tr;
  for (std::size_t start = 0; start < bits.size(); start += t) {
    TranscriptChunk chunk;
    chunk.bits = std::string(bits.substr(start, t));
    for (char c : chunk.bits) {
      if (c != '0' && c != '1') throw std::invalid_argument("message must be a bitstring");
      chunk.index = (chunk.index << 1) | static_cast<std::size_t>(c == '1');
    }
    chunk.op = cb.operators()[chunk.index];
    chunk.codeword = cb.encode(chunk.index);
    chunk.decoded = cb.decode(chunk.codeword);
    for (std::size_t b = t; b-- > 0;) tr.output += ((chunk.decoded >> b) & 1u) ? '1' : '0';
    tr.qubits_sent += cb.positions().size();
    tr.bits_delivered += t;
    tr.chunks.push_back(std::move(chunk));
  }
  return tr;
}

std::string transcript_json(const Transcript &tr) {
  json doc;
  json chunks = json::array();
  for (const auto &c : tr.chunks) {
    chunks.push_back({{"bits", c.bits},
                      {"index", c.index},
                      {"operator", format_op(c.op)},
                      {"codeword", format_ket_sum(c.codeword)},
                      {"decoded", c.decoded}});
  }
  doc["chunks"] = chunks;
  doc["output"] = tr.output;
  doc["qubits_sent"] = tr.qubits_sent;
  doc["bits_delivered"] = tr.bits_delivered;
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Tables

TableFormat parse_table_format(std::string_view text) {
  if (text == "md" || text == "markdown") return TableFormat::markdown;
  if (text == "csv") return TableFormat::csv;
  if (text == "json") return TableFormat::json;
  if (text == "txt" || text == "text") return TableFormat::text;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

std::vector<TableRow> table_rows(std::span<const PauliString> ops, const PositionSet &p,
                                 const SymmetricState &s) {
  std::vector<TableRow> rows;
  for (const auto &op : ops) rows.push_back({op, apply(op, p, s)});
  return rows;
}

std::string emit_rows(const std::vector<TableRow> &rows, const PositionSet &p, TableFormat format) {
  std::string out;
  switch (format) {
    case TableFormat::text:
      for (std::size_t i = 0; i < rows.size(); ++i) {
        out += "U_" + std::to_string(i) + " = " + format_tensor(rows[i].op) + " : " +
               format_ket_sum(rows[i].state) + "\n";
      }
      return out;
    case TableFormat::markdown:
      out = "| Unitary operators on " + qubits_phrase(p) + " | State |\n|---|---|\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        out += "| U_" + std::to_string(i) + " = " + format_tensor(rows[i].op) + " | " +
               escape_pipes(format_ket_sum(rows[i].state)) + " |\n";
      }
      return out;
    case TableFormat::csv:
      out = "index,operator,state\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        out += std::to_string(i) + "," + format_op(rows[i].op) + "," +
               csv_quote(format_ket_sum(rows[i].state)) + "\n";
      }
      return out;
    case TableFormat::json: {
      json doc;
      doc["positions"] = p.positions();
      json arr = json::array();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        arr.push_back({{"index", i},
                       {"operator", format_op(rows[i].op)},
                       {"tensor", format_tensor(rows[i].op)},
                       {"items", item_tokens(rows[i].state)},
                       {"state", format_ket_sum(rows[i].state)}});
      }
      doc["rows"] = arr;
      return doc.dump(2) + "\n";
    }
  }
  return out;
}

std::string emit_table(const Codebook &cb, TableFormat format) {
  std::vector<TableRow> rows;
  for (std::size_t i = 0; i < cb.size(); ++i) rows.push_back({cb.operators()[i], cb.codewords()[i]});
  return emit_rows(rows, cb.positions(), format);
}

std::string emit_multiplication_table(std::span<const PauliString> order, TableFormat format) {
  std::string out;
  const std::size_t k = order.size();
  auto cell = [&](std::size_t i, std::size_t j) { return order[i] * order[j]; };
  switch (format) {
    case TableFormat::text:
      out = "* :";
      for (const auto &op : order) out += " " + format_tensor(op);
      out += "\n";
      for (std::size_t i = 0; i < k; ++i) {
        out += format_tensor(order[i]) + " :";
        for (std::size_t j = 0; j < k; ++j) out += " " + format_tensor(cell(i, j));
        out += "\n";
      }
      return out;
    case TableFormat::markdown:
      out = "| Unitary operators |";
      for (const auto &op : order) out += " " + format_tensor(op) + " |";
      out += "\n|---|";
      for (std::size_t j = 0; j < k; ++j) out += "---|";
      out += "\n";
      for (std::size_t i = 0; i < k; ++i) {
        out += "| " + format_tensor(order[i]) + " |";
        for (std::size_t j = 0; j < k; ++j) out += " " + format_tensor(cell(i, j)) + " |";
        out += "\n";
      }
      return out;
    case TableFormat::csv:
      out = "*";
      for (const auto &op : order) out += "," + format_op(op);
      out += "\n";
      for (std::size_t i = 0; i < k; ++i) {
        out += format_op(order[i]);
        for (std::size_t j = 0; j < k; ++j) out += "," + format_op(cell(i, j));
        out += "\n";
      }
      return out;
    case TableFormat::json: {
      json doc;
      json header = json::array();
      for (const auto &op : order) header.push_back(format_op(op));
      doc["order"] = header;
      json cells = json::array();
      for (std::size_t i = 0; i < k; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < k; ++j) row.push_back(format_op(cell(i, j)));
        cells.push_back(row);
      }
      doc["cells"] = cells;
      return doc.dump(2) + "\n";
    }
  }
  return out;
}

}  // namespace densecode
