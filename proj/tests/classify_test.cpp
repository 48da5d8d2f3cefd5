// Copyright 2026 The fibcube Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "fibcube/classify.hpp"
#include "fibcube/cube.hpp"
#include "support/oracles.hpp"

namespace fibcube {
namespace {

Word W(const std::string& s) { return parse_word(s); }

std::vector<FourBlockParams> tuples(unsigned bound) {
  std::vector<FourBlockParams> out;
  for (unsigned r = 1; r <= bound; ++r)
    for (unsigned s = 1; s <= bound; ++s)
      for (unsigned t = 1; t <= bound; ++t)
        for (unsigned k = 1; k <= bound; ++k) out.emplace_back(r, s, t, k);
  return out;
}

std::vector<EvenBlockForm> even_forms(unsigned n, unsigned bound) {
  std::vector<EvenBlockForm> out;
  std::vector<unsigned> v(2 * n, 1);
  while (true) {
    out.emplace_back(std::vector<unsigned>(v.begin(), v.begin() + n),
                     std::vector<unsigned>(v.begin() + n, v.end()));
    std::size_t i = 0;
    while (i < v.size() && v[i] == bound) v[i++] = 1;
    if (i == v.size()) break;
    ++v[i];
  }
  return out;
}

bool is_good_row(const std::string& id) {
  return id == "T2.1" || id == "T2.2" || id == "T2.3" || id == "T2.4";
}

TEST(ThreeBlockRows, Examples) {
  const auto a = classify_table1(W("1100"));
  ASSERT_FALSE(a.empty());
  EXPECT_EQ(a.front().row.id, "T1.3'");
  EXPECT_EQ(a.front().index, 7u);

  const auto b = classify_table1(W("111000"));
  ASSERT_FALSE(b.empty());
  EXPECT_EQ(b.front().row.id, "T1.4'");
  EXPECT_EQ(b.front().index, 10u);

  const auto c = classify_table1(W("11100"));
  ASSERT_FALSE(c.empty());
  EXPECT_EQ(c.front().row.id, "T1.3'");
  EXPECT_EQ(c.front().form.str(), "11000");
  EXPECT_TRUE(c.front().row.via_reversal);
  EXPECT_EQ(c.front().index, 8u);

  const auto d = classify_table1(W("101"));
  ASSERT_FALSE(d.empty());
  EXPECT_EQ(d.front().row.id, "T1.5'");
  EXPECT_EQ(d.front().index, 4u);

  const auto e = classify_table1(W("11"));
  ASSERT_FALSE(e.empty());
  EXPECT_EQ(e.front().row.id, "T1.1'");
  EXPECT_FALSE(e.front().index);

  EXPECT_TRUE(classify_table1(W("1010")).empty());
}

TEST(ThreeBlockRows, TotalAndConsistentOnShortStrings) {
  for (const auto& s : oracle::words_up_to(12)) {
    const Word f = W(s);
    if (blocks(f).count() > 3) {
      EXPECT_TRUE(classify_table1(f).empty()) << s;
      continue;
    }
    const auto rows = classify_table1(f);
    ASSERT_FALSE(rows.empty()) << s;
    for (const auto& m : rows) EXPECT_EQ(m.index, rows.front().index) << s;
  }
}

TEST(ThreeBlockRows, AgreesWithBruteForce) {
  for (const auto& s : oracle::words_up_to(8)) {
    const Word f = W(s);
    const auto rows = classify_table1(f);
    if (rows.empty()) continue;
    const unsigned cap = 12;
    const auto expected = rows.front().index;
    unsigned brute = 0;
    for (unsigned d = f.size(); d <= cap && brute == 0; ++d) {
      if (!is_isometric({d, f}).isometric) brute = d;
    }
    if (expected && *expected <= cap) {
      EXPECT_EQ(brute, *expected) << s;
    } else if (!expected) {
      EXPECT_EQ(brute, 0u) << s;
    } else {
      EXPECT_EQ(brute, 0u) << s;
    }
  }
}

TEST(FourBlockRows, Examples) {
  const auto index_of_row = [](const FourBlockParams& p, const std::string& id) {
    for (const auto& m : classify_table2(p)) {
      if (m.row.id == id) return m.index;
    }
    ADD_FAILURE() << "no row " << id << " for " << p.str();
    return std::optional<unsigned>{};
  };
  EXPECT_EQ(index_of_row({1, 2, 1, 1}, "T2.10"), 7u);
  EXPECT_EQ(index_of_row({3, 2, 1, 1}, "T2.6"), 10u);
  EXPECT_EQ(index_of_row({1, 1, 1, 4}, "T2.9"), 10u);
  EXPECT_EQ(index_of_row({1, 1, 1, 2}, "T2.1"), std::nullopt);
}

TEST(FourBlockRows, RuleInventory) {
  EXPECT_EQ(table2_rules("T2.7").size(), 3u);
  EXPECT_EQ(table2_rules("T2.8").size(), 3u);
  EXPECT_EQ(table2_rules("T2.14").size(), 4u);
  EXPECT_EQ(table2_rules("T2.15").size(), 4u);
  EXPECT_TRUE(table2_rules("T2.16").empty());
  for (int row = 1; row <= 15; ++row) {
    EXPECT_FALSE(table2_rules("T2." + std::to_string(row)).empty()) << row;
  }
}

TEST(FourBlockRows, TotalAndConsistent) {
  for (const auto& p : tuples(6)) {
    const auto rows = classify_table2(p);
    ASSERT_FALSE(rows.empty()) << p.str();
    for (const auto& m : rows) {
      EXPECT_EQ(m.index, rows.front().index) << p.str() << " " << m.row.id;
      if (m.index) {
        EXPECT_GE(*m.index, p.length()) << p.str() << " " << m.row.id;
      }
      EXPECT_EQ(is_good_row(m.row.id), !m.index.has_value()) << m.row.id;
    }
    EXPECT_TRUE(classify(p.word()).consistent()) << p.str();
  }
}

TEST(FourBlockRows, ReversalImageHasSameVerdict) {
  for (const auto& p : tuples(5)) {
    EXPECT_EQ(classify_table2(p).front().index, classify_table2(p.reversed()).front().index)
        << p.str();
  }
}

TEST(FourBlockRows, AgreesWithBruteForce) {
  for (const auto& p : tuples(3)) {
    const Word f = p.word();
    const auto expected = classify(f).exact_index();
    const bool good = classify(f).known_good();
    ASSERT_TRUE(expected || good) << p.str();
    const unsigned cap = good ? 13 : std::min(12U, *expected);
    if (!good && *expected > 12) continue;
    unsigned brute = 0;
    for (unsigned d = f.size(); d <= cap && brute == 0; ++d) {
      if (!is_isometric({d, f}).isometric) brute = d;
    }
    if (good) {
      EXPECT_EQ(brute, 0u) << p.str();
    } else {
      EXPECT_EQ(brute, *expected) << p.str();
    }
  }
}

TEST(NecessityFilter, Examples) {
  const auto bad = theorem11_filter(EvenBlockForm({2, 1}, {1, 2}));
  ASSERT_TRUE(std::holds_alternative<BadByLemma>(bad));
  const auto& lemmas = std::get<BadByLemma>(bad);
  EXPECT_EQ(lemmas.d0, 10u);
  EXPECT_EQ(lemmas.lemmas.front().id, "L2.1");

  const auto good = theorem11_filter(EvenBlockForm({1, 1}, {1, 2}));
  ASSERT_TRUE(std::holds_alternative<GoodCandidate>(good));
  EXPECT_EQ(std::get<GoodCandidate>(good).id(), "T1.1.a");

  const auto five = theorem11_filter(EvenBlockForm({1, 1}, {2, 1}));
  ASSERT_TRUE(std::holds_alternative<BadByLemma>(five));
  EXPECT_EQ(std::get<BadByLemma>(five).d0, 7u);
  const auto& ids = std::get<BadByLemma>(five).lemmas;
  EXPECT_TRUE(std::any_of(ids.begin(), ids.end(), [](const LemmaMatch& m) { return m.id == "L2.5"; }));
}

TEST(NecessityFilter, LemmaFormulas) {
  EXPECT_EQ(lemma_d0(1, EvenBlockForm({2, 1}, {1, 2})), 10u);
  EXPECT_EQ(lemma_d0(5, EvenBlockForm({1, 1}, {2, 1})), 7u);
  EXPECT_TRUE(lemma_admits(1, EvenBlockForm({2, 1}, {1, 2})));
  EXPECT_FALSE(lemma_admits(1, EvenBlockForm({1, 1}, {1, 2})));
  EXPECT_EQ(lemma_id(3), "L2.3");
}

TEST(NecessityFilter, GoodTable2RowsAreGoodCandidates) {
  for (const auto& p : tuples(6)) {
    const auto rows = classify_table2(p);
    if (rows.front().index) continue;
    EXPECT_TRUE(std::holds_alternative<GoodCandidate>(theorem11_filter(p.as_even()))) << p.str();
  }
}

TEST(NecessityFilter, BadVerdictImpliesBadTable2Row) {
  for (const auto& p : tuples(6)) {
    const auto verdict = theorem11_filter(p.as_even());
    if (!std::holds_alternative<BadByLemma>(verdict)) continue;
    const auto rows = classify_table2(p);
    ASSERT_TRUE(rows.front().index) << p.str();
    EXPECT_LE(*rows.front().index, std::get<BadByLemma>(verdict).d0) << p.str();
  }
}

TEST(BadnessLemmas, BoundsAreSound) {
  for (unsigned n : {2u, 3u}) {
    for (const auto& e : even_forms(n, 3)) {
      for (const auto& m : lemma_matches(e)) {
        if (m.d0 > 14) continue;
        EXPECT_FALSE(is_isometric({m.d0, e.word()}).isometric) << m.id << " " << e.str();
      }
    }
  }
}

TEST(Classify, AggregateExamples) {
  const auto cf = classify(W("10010"));
  EXPECT_EQ(cf.exact_index(), 7u);
  EXPECT_TRUE(cf.consistent());

  const auto good = classify(W("10100"));
  EXPECT_TRUE(good.known_good());
  ASSERT_TRUE(good.necessity);
  EXPECT_TRUE(std::holds_alternative<GoodCandidate>(*good.necessity));

  const auto six = classify(W("110100"));
  EXPECT_EQ(six.lemma_bound(), 10u);
  EXPECT_EQ(six.exact_index(), 8u);

  EXPECT_FALSE(classify(W("1011001")).has_rows());
}

}  // namespace
}  // namespace fibcube
