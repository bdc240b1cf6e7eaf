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

#include <nlohmann/json.hpp>
#include <gtest/gtest.h>

#include "densecode/codec.hpp"
#include "support.hpp"

namespace densecode {
namespace {

using testing::golden_path;
using testing::read_lines;
using testing::split_lines;

std::vector<PauliString> golden_operators(const std::vector<std::string> &rows) {
  std::vector<PauliString> ops;
  for (const auto &row : rows) {
    const auto eq = row.find(" = ");
    const auto colon = row.find(" : ");
    ops.push_back(parse_op(row.substr(eq + 3, colon - eq - 3)));
  }
  return ops;
}

struct GoldenCase {
  const char *file;
  const char *state;
  std::vector<std::size_t> positions;
  std::size_t rows;
  bool orthogonal;
};

std::string emitted(const GoldenCase &c, const std::vector<PauliString> &ops) {
  const auto s = builtin_state(c.state);
  const PositionSet p(c.positions, s.qubits());
  return emit_rows(table_rows(ops, p, s), p, TableFormat::text);
}

class GoldenTable : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(GoldenTable, MatchesRowForRow) {
  const auto &c = GetParam();
  const auto golden = read_lines(golden_path(c.file));
  ASSERT_EQ(golden.size(), c.rows);
  const auto ops = golden_operators(golden);
  EXPECT_EQ(split_lines(emitted(c, ops)), golden);

  const auto s = builtin_state(c.state);
  const PositionSet p(c.positions, s.qubits());
  const auto h = Subgroup::from_elements(ops);
  EXPECT_EQ(verify_orthogonal(h, p, s), c.orthogonal);
  if (c.orthogonal) {
    const auto cb = Codebook::build(h, p, s, ops);
    EXPECT_EQ(split_lines(emit_table(cb, TableFormat::text)), golden);
  }
}

INSTANTIATE_TEST_SUITE_P(
    Tables, GoldenTable,
    ::testing::Values(GoldenCase{"ghz3_g2_12_q12.txt", "ghz3", {1, 2}, 8, true},
                      GoldenCase{"cluster4_g2_q14.txt", "cluster4", {1, 4}, 16, true},
                      GoldenCase{"cluster5_g3_4p_q123.txt", "cluster5", {1, 2, 3}, 32, false},
                      GoldenCase{"w3_g2_4_q12.txt", "w3", {1, 2}, 8, false}));

TEST(GoldenTableW14, SwappedRowsAreTheOnlyDifference) {
  const auto golden = read_lines(golden_path("w1_4_g2_q12.txt"));
  ASSERT_EQ(golden.size(), 16u);
  const GoldenCase c{"w1_4_g2_q12.txt", "w1_4", {1, 2}, 16, true};
  const auto ours = split_lines(emitted(c, golden_operators(golden)));
  ASSERT_EQ(ours.size(), 16u);
  auto state_of = [](const std::string &row) { return row.substr(row.find(" : ") + 3); };
  std::vector<std::size_t> differing;
  for (std::size_t i = 0; i < 16; ++i) {
    if (ours[i] != golden[i]) differing.push_back(i);
  }
  EXPECT_EQ(differing, (std::vector<std::size_t>{2, 3, 8, 9, 10, 11}));
  for (auto [a, b] : {std::pair{2, 3}, std::pair{8, 9}, std::pair{10, 11}}) {
    EXPECT_EQ(state_of(ours[a]), state_of(golden[b]));
    EXPECT_EQ(state_of(ours[b]), state_of(golden[a]));
  }
}

TEST(GoldenMultiplication, MatchesAllCells) {
  const auto golden = read_lines(golden_path("mult_g2_12.txt"));
  ASSERT_EQ(golden.size(), 9u);
  std::vector<PauliString> order;
  {
    std::istringstream header(golden.front().substr(4));
    for (std::string tok; header >> tok;) order.push_back(parse_op(tok));
  }
  ASSERT_EQ(order.size(), 8u);
  const auto ours = split_lines(emit_multiplication_table(order, TableFormat::text));
  ASSERT_EQ(ours.size(), 9u);
  std::size_t cells = 0;
  for (std::size_t i = 1; i < 9; ++i) {
    std::istringstream a(ours[i]), b(golden[i]);
    std::vector<std::string> ta, tb;
    for (std::string tok; a >> tok;) ta.push_back(tok);
    for (std::string tok; b >> tok;) tb.push_back(tok);
    ASSERT_EQ(ta.size(), 10u);
    ASSERT_EQ(tb.size(), 10u);
    for (std::size_t j = 2; j < 10; ++j) {
      EXPECT_EQ(ta[j], tb[j]) << "row " << i << " column " << j - 2;
      ++cells;
    }
  }
  EXPECT_EQ(cells, 64u);
  EXPECT_EQ(ours, golden);
}

TEST(ShippedOrderings, AgreeWithGoldenOperators) {
  const std::vector<std::pair<std::string, std::string>> files{
      {"ghz3", "ghz3_g2_12_q12.txt"}, {"w1_4", "w1_4_g2_q12.txt"},
      {"cluster4", "cluster4_g2_q14.txt"}, {"cluster5", "cluster5_g3_4p_q123.txt"},
      {"w3", "w3_g2_4_q12.txt"}};
  const auto orderings = load_default_orderings();
  for (const auto &[state, file] : files) {
    const auto ops = golden_operators(read_lines(golden_path(file)));
    const auto found = find_ordering(orderings, state, Subgroup::from_elements(ops));
    ASSERT_TRUE(found) << state;
    EXPECT_EQ(found->operators, ops) << state;
  }
}

TEST(Codebook, RoundTripEveryAcceptedTriple) {
  std::size_t triples = 0;
  for (const char *name : {"bell", "ghz3", "w1_4", "cluster4", "cluster5", "ghz4", "ghz5", "w_4"}) {
    const auto s = builtin_state(name);
    const auto r = select(s, FilterMode::none);
    for (const auto &e : r.entries) {
      if (e.verdict != Verdict::accepted) continue;
      ++triples;
      for (const auto &order : {std::vector<PauliString>{}, lexicographic_order(r.subgroups[e.subgroup])}) {
        const auto cb = Codebook::build(r.subgroups[e.subgroup], e.positions, s, order);
        EXPECT_EQ(cb.size(), std::size_t{1} << s.qubits());
        EXPECT_EQ(cb.bits(), s.qubits());
        for (std::size_t i = 0; i < cb.size(); ++i) EXPECT_EQ(cb.decode(cb.encode(i)), i);
      }
    }
  }
  EXPECT_GT(triples, 100u);
}

TEST(Codebook, CanonicalOrderStartsWithIdentity) {
  const auto h = *LabelCatalog::load_default().find("G_2^12");
  const auto order = canonical_order(h);
  EXPECT_TRUE(order.front().is_identity());
  EXPECT_TRUE(std::is_sorted(order.begin(), order.end(), [](const auto &a, const auto &b) {
    return a.symplectic() < b.symplectic();
  }));
  EXPECT_EQ(lexicographic_order(h), h.elements());
}

TEST(Codebook, RejectsNonOrthogonalTripleWithWitness) {
  const auto cat = LabelCatalog::load_default();
  const auto s = builtin_state("ghz3");
  try {
    Codebook::build(*cat.find("G_2^3"), PositionSet({1, 2}, 3), s);
    FAIL() << "expected CodebookError";
  } catch (const CodebookError &e) {
    ASSERT_TRUE(e.witness());
    EXPECT_EQ(format_op(e.witness()->element), "ZZ");
    EXPECT_EQ(e.witness()->expectation, Rational(1));
  }
  EXPECT_THROW(Codebook::build(Subgroup::whole_group(2), PositionSet({1, 2}, 3), s), CodebookError);
}

TEST(Codebook, ValidatesOrderings) {
  const auto h = *LabelCatalog::load_default().find("G_2^12");
  const auto s = builtin_state("ghz3");
  const PositionSet p({1, 2}, 3);
  auto order = canonical_order(h);
  std::swap(order[0], order[1]);
  EXPECT_THROW(Codebook::build(h, p, s, order), CodebookError);
  order = canonical_order(h);
  order.pop_back();
  EXPECT_THROW(Codebook::build(h, p, s, order), CodebookError);
  order.push_back(order[1]);
  EXPECT_THROW(Codebook::build(h, p, s, order), CodebookError);
  order.back() = parse_op("ZZ");
  EXPECT_THROW(Codebook::build(h, p, s, order), CodebookError);
}

TEST(Codebook, DecodeFailures) {
  const auto h = *LabelCatalog::load_default().find("G_2^12");
  const auto s = builtin_state("ghz3");
  const auto cb = Codebook::build(h, PositionSet({1, 2}, 3), s);
  EXPECT_THROW(cb.encode(8), std::out_of_range);
  try {
    cb.decode(parse_state("+000,+011"));
    FAIL() << "expected DecodeError";
  } catch (const DecodeError &e) {
    EXPECT_EQ(e.kind(), DecodeError::Kind::no_match);
  }
  EXPECT_THROW(cb.decode(parse_state("+00,+11")), ArityError);
  const auto negated = parse_state("-000,-111");
  EXPECT_EQ(cb.decode(negated), 0u);
}

TEST(Simulation, TranscriptRoundTrip) {
  const auto h = *LabelCatalog::load_default().find("G_2^12");
  const auto cb = Codebook::build(h, PositionSet({1, 2}, 3), builtin_state("ghz3"));
  const auto tr = simulate_roundtrip(cb, "011010111");
  EXPECT_EQ(tr.output, "011010111");
  EXPECT_EQ(tr.chunks.size(), 3u);
  EXPECT_EQ(tr.chunks[0].index, 3u);
  EXPECT_EQ(tr.chunks[2].index, 7u);
  EXPECT_EQ(tr.qubits_sent, 6u);
  EXPECT_EQ(tr.bits_delivered, 9u);
  const auto doc = nlohmann::json::parse(transcript_json(tr));
  EXPECT_EQ(doc["output"], "011010111");
  EXPECT_THROW(simulate_roundtrip(cb, "0110"), std::invalid_argument);
  EXPECT_THROW(simulate_roundtrip(cb, "01a"), std::invalid_argument);
}

TEST(TableFormats, Render) {
  const auto h = *LabelCatalog::load_default().find("G_2^12");
  const auto cb = Codebook::build(h, PositionSet({1, 2}, 3), builtin_state("ghz3"));
  const auto md = emit_table(cb, TableFormat::markdown);
  EXPECT_EQ(md.substr(0, md.find('\n')), "| Unitary operators on qubits 1 and 2 | State |");
  EXPECT_NE(md.find("\\|000⟩"), std::string::npos);
  const auto csv = split_lines(emit_table(cb, TableFormat::csv));
  EXPECT_EQ(csv.front(), "index,operator,state");
  EXPECT_EQ(csv[1], "0,II,\"1/√2(|000⟩ + |111⟩)\"");
  const auto doc = nlohmann::json::parse(emit_table(cb, TableFormat::json));
  EXPECT_EQ(doc["rows"].size(), 8u);
  EXPECT_EQ(doc["rows"][0]["items"][1], "+111");
  EXPECT_EQ(parse_table_format("md"), TableFormat::markdown);
  EXPECT_EQ(parse_table_format("txt"), TableFormat::text);
  EXPECT_THROW(parse_table_format("xml"), std::invalid_argument);
  const auto order = canonical_order(h);
  EXPECT_NO_THROW(nlohmann::json::parse(emit_multiplication_table(order, TableFormat::json)));
  EXPECT_EQ(split_lines(emit_multiplication_table(order, TableFormat::csv)).size(), 9u);
}

}  // namespace
}  // namespace densecode
