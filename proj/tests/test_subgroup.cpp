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

#include <bit>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "densecode/subgroup.hpp"
#include "support.hpp"

namespace densecode {
namespace {

using testing::expand_union;
using testing::g2_listing;

std::set<std::string> words(const Subgroup &h) {
  std::set<std::string> out;
  for (const auto &e : h.elements()) out.insert(format_op(e));
  return out;
}

std::uint64_t q_pascal(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::uint64_t>> c(m + 1, std::vector<std::uint64_t>(m + 1, 0));
  for (std::size_t i = 0; i <= m; ++i) {
    c[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (std::uint64_t{1} << j) * c[i - 1][j];
  }
  return k <= m ? c[m][k] : 0;
}

std::set<std::set<std::string>> word_sets(const std::vector<Subgroup> &groups) {
  std::set<std::set<std::string>> out;
  for (const auto &g : groups) out.insert(words(g));
  return out;
}

TEST(FactorSet, ParseAndPrint) {
  EXPECT_EQ(FactorSet::parse("{I,X}").str(), "{I,X}");
  EXPECT_EQ(FactorSet::parse("YZ").str(), "{Y,Z}");
  EXPECT_EQ(FactorSet::parse("G1"), FactorSet::all());
  EXPECT_EQ(FactorSet::all().str(), "G1");
  EXPECT_EQ(FactorSet::pair(Pauli::X).complement(), FactorSet::parse("YZ"));
  EXPECT_EQ(FactorSet::all().size(), 4u);
  EXPECT_THROW(FactorSet::parse("{}"), ParseError);
  EXPECT_THROW(FactorSet::parse("IQ"), ParseError);
}

TEST(Construction, ExpandsLineUnion) {
  Construction c;
  c.a_line = {FactorSet::parse("IX"), FactorSet::parse("IZ")};
  c.b_line = {FactorSet::parse("YZ"), FactorSet::parse("XY")};
  EXPECT_EQ(c.describe(), "({I,X}⊗{I,Z}) ∪ ({Y,Z}⊗{X,Y})");
  std::set<std::string> got;
  for (const auto &p : c.expand()) got.insert(format_op(p));
  EXPECT_EQ(got, expand_union({{"IX", "IZ"}, {"YZ", "XY"}}));
}

TEST(ReducedRowEchelon, CanonicalForSpanningSets) {
  EXPECT_EQ(reduced_row_echelon({0b11, 0b01}), (BasisKey{0b10, 0b01}));
  EXPECT_EQ(reduced_row_echelon({0b01, 0b11, 0b10}), (BasisKey{0b10, 0b01}));
  EXPECT_EQ(reduced_row_echelon({0b110, 0b011}), reduced_row_echelon({0b101, 0b110}));
  EXPECT_TRUE(reduced_row_echelon({0, 0}).empty());
}

TEST(Subgroup, FromElementsValidatesClosure) {
  EXPECT_THROW(Subgroup::from_elements({parse_op("II"), parse_op("XI"), parse_op("ZI")}),
               InvariantError);
  EXPECT_THROW(Subgroup::from_elements({parse_op("XI")}), InvariantError);
  const auto h = Subgroup::from_elements(
      {parse_op("II"), parse_op("XI"), parse_op("IZ"), parse_op("XZ")});
  EXPECT_EQ(h.order(), 4u);
  EXPECT_EQ(h.dimension(), 2u);
  EXPECT_TRUE(h.contains(parse_op("XZ")));
  EXPECT_FALSE(h.contains(parse_op("ZZ")));
  EXPECT_EQ(h.key_string(), "XI,IZ");
}

TEST(Subgroup, SpanMatchesFromElements) {
  const std::vector<PauliString> gens{parse_op("XZ"), parse_op("ZX")};
  const auto a = Subgroup::span(2, gens);
  const auto b = Subgroup::from_elements(
      {parse_op("II"), parse_op("XZ"), parse_op("ZX"), parse_op("YY")});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.elements(), b.elements());
  EXPECT_THROW(Subgroup::span(3, gens), ArityError);
  EXPECT_EQ(Subgroup::whole_group(2).order(), 16u);
}

TEST(GaussianBinomial, MatchesQPascalRecurrence) {
  for (std::size_t m = 0; m <= 12; ++m) {
    for (std::size_t k = 0; k <= m + 1; ++k) {
      EXPECT_EQ(gaussian_binomial(m, k), q_pascal(m, k)) << m << " " << k;
    }
  }
  EXPECT_EQ(gaussian_binomial(4, 3), 15u);
  EXPECT_EQ(gaussian_binomial(6, 5), 63u);
}

TEST(Oracle, CountsMatchGaussianBinomial) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t t = 1; t <= 2 * n; ++t) {
      const auto all = enumerate_all_subgroups(n, t);
      EXPECT_EQ(all.size(), gaussian_binomial(2 * n, t));
      EXPECT_EQ(std::set<Subgroup>(all.begin(), all.end()).size(), all.size());
      for (const auto &g : all) {
        EXPECT_EQ(g.order(), std::size_t{1} << t);
        EXPECT_TRUE(is_closed(g.elements()));
      }
    }
  }
  EXPECT_THROW(enumerate_all_subgroups(2, 5), ArityError);
}

TEST(Oracle, TwoQubitCensusMatchesBruteForceClosure) {
  const auto group = Subgroup::whole_group(2).elements();
  std::vector<PauliString> others;
  for (const auto &p : group) {
    if (!p.is_identity()) others.push_back(p);
  }
  ASSERT_EQ(others.size(), 15u);
  std::set<std::set<std::string>> closed;
  std::size_t subsets = 0;
  for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
    if (std::popcount(mask) != 7) continue;
    ++subsets;
    std::vector<PauliString> candidate{identity(2)};
    for (std::size_t i = 0; i < 15; ++i) {
      if ((mask >> i) & 1u) candidate.push_back(others[i]);
    }
    if (!is_closed(candidate)) continue;
    std::set<std::string> w;
    for (const auto &p : candidate) w.insert(format_op(p));
    closed.insert(w);
  }
  EXPECT_EQ(subsets, 6435u);
  EXPECT_EQ(closed.size(), 15u);
  EXPECT_EQ(closed, word_sets(enumerate_all_subgroups(2, 3)));
}

TEST(Construction, LambdaFormula) {
  EXPECT_EQ(lambda_count(1), 3u);
  EXPECT_EQ(lambda_count(2), 1u);
  EXPECT_EQ(lambda_count(3), 15u);
  EXPECT_EQ(lambda_count(4), 1u);
  EXPECT_EQ(lambda_count(5), 45u);
  EXPECT_EQ(lambda_count(6), 1u);
  EXPECT_EQ(lambda_count(7), 90u);
}

TEST(Construction, DistinctCounts) {
  const std::map<std::size_t, std::size_t> expected{{1, 3}, {2, 1}, {3, 15},
                                                    {4, 1}, {5, 36}, {6, 1}};
  for (const auto &[t, count] : expected) {
    const auto groups = construct_mgp_subgroups(t);
    EXPECT_EQ(groups.size(), count) << "t=" << t;
    for (const auto &g : groups) {
      EXPECT_EQ(g.arity(), arity_for(t));
      EXPECT_EQ(g.order(), std::size_t{1} << t);
    }
  }
}

TEST(Construction, CensusSeparatesPerChoiceFromDistinct) {
  const auto c5 = construction_census(5);
  EXPECT_EQ(c5.per_column_choice, lambda_count(5));
  EXPECT_EQ(c5.distinct, 36u);
  const auto c3 = construction_census(3);
  EXPECT_EQ(c3.per_column_choice, 15u);
  EXPECT_EQ(c3.distinct, 15u);
}

TEST(Construction, ThreeQubitsEqualsOracle) {
  EXPECT_EQ(word_sets(construct_mgp_subgroups(3)), word_sets(enumerate_all_subgroups(2, 3)));
}

TEST(Construction, FiveQubitsIsStrictSubsetOfOracle) {
  const auto built = construct_mgp_subgroups(5);
  const auto oracle = enumerate_all_subgroups(3, 5);
  ASSERT_EQ(oracle.size(), 63u);
  const std::set<Subgroup> oracle_set(oracle.begin(), oracle.end());
  for (const auto &g : built) EXPECT_TRUE(oracle_set.count(g)) << g.key_string();
  std::size_t missing = 0;
  for (const auto &g : oracle) {
    if (std::find(built.begin(), built.end(), g) != built.end()) continue;
    ++missing;
    // Every missed hyperplane has a normal vector touching all three qubits.
    std::size_t touched = 0;
    for (std::size_t q = 0; q < 3; ++q) {
      PauliString x(3), z(3);
      x.set(q, Pauli::X);
      z.set(q, Pauli::Z);
      if (!(g.contains(x) && g.contains(z))) ++touched;
    }
    EXPECT_EQ(touched, 3u);
  }
  EXPECT_EQ(missing, 27u);
}

TEST(Construction, ThreeQubitListingMatchesNamedSets) {
  const auto built = construct_mgp_subgroups(3);
  std::map<std::set<std::string>, const Subgroup *> by_words;
  for (const auto &g : built) by_words[words(g)] = &g;
  std::map<int, int> family_sizes;
  for (const auto &entry : g2_listing()) {
    const auto w = expand_union(entry.lines);
    ASSERT_EQ(w.size(), 8u) << entry.index;
    auto it = by_words.find(w);
    ASSERT_NE(it, by_words.end()) << "G_2^" << entry.index;
    EXPECT_EQ(it->second->provenance().equal_columns(), entry.equal_columns)
        << "G_2^" << entry.index;
    ++family_sizes[entry.equal_columns];
  }
  EXPECT_EQ(family_sizes[1], 6);
  EXPECT_EQ(family_sizes[0], 9);
}

TEST(Construction, DegenerateSizes) {
  const auto t1 = construct_mgp_subgroups(1);
  std::set<std::set<std::string>> expected{{"I", "X"}, {"I", "Y"}, {"I", "Z"}};
  EXPECT_EQ(word_sets(t1), expected);
  EXPECT_EQ(construct_mgp_subgroups(2).front(), Subgroup::whole_group(1));
  EXPECT_EQ(construct_mgp_subgroups(4).front(), Subgroup::whole_group(2));
  EXPECT_EQ(construct_mgp_subgroups(6).front(), Subgroup::whole_group(3));
}

TEST(Shukla, TwoQubitFamilyIsEqualColumnFamily) {
  std::set<std::set<std::string>> expected;
  for (const auto &entry : g2_listing()) {
    if (entry.equal_columns == 1) expected.insert(expand_union(entry.lines));
  }
  EXPECT_EQ(word_sets(shukla_subgroups(2)), expected);
  const auto three = shukla_subgroups(3);
  EXPECT_EQ(three.size(), 9u);
  for (const auto &g : three) EXPECT_EQ(g.provenance().origin, Origin::shukla);
}

}  // namespace
}  // namespace densecode
