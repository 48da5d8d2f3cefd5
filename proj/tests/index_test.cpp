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
#include <string>
#include <variant>

#include "fibcube/classify.hpp"
#include "fibcube/error.hpp"
#include "fibcube/index.hpp"
#include "support/oracles.hpp"

namespace fibcube {
namespace {

Word W(const std::string& s) { return parse_word(s); }

bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

TEST(BruteIndex, Examples) {
  const auto a = brute_index(W("101"), 6);
  ASSERT_TRUE(std::holds_alternative<BruteForced>(a));
  EXPECT_EQ(std::get<BruteForced>(a).index, 4u);
  EXPECT_EQ(std::get<BruteForced>(a).witness.d, 4u);

  EXPECT_EQ(index_of(brute_index(W("1100"), 8)), 7u);
  EXPECT_EQ(index_of(brute_index(W("111000"), 12)), 10u);
  EXPECT_EQ(brute_index(W("11"), 12), IndexVerdict(UndecidedUpTo{12}));
  EXPECT_EQ(kind_name(brute_index(W("11"), 12)), "undecided");
}

TEST(BruteIndex, Errors) {
  EXPECT_THROW(brute_index(W("1100"), 3), PreconditionError);
  EXPECT_THROW(brute_index(Word(), 3), PreconditionError);
  SearchOptions opts;
  opts.d_max = 10;
  EXPECT_THROW(brute_index(W("11"), 11, opts), ResourceLimitError);
}

TEST(BruteIndex, MatchesDefinition) {
  for (const auto& f : oracle::words_up_to(4)) {
    const auto v = brute_index(W(f), 8);
    const unsigned expected = oracle::index_by_definition(f, 8);
    if (expected == 0) {
      EXPECT_EQ(v, IndexVerdict(UndecidedUpTo{8})) << f;
    } else {
      EXPECT_EQ(index_of(v), expected) << f;
    }
  }
}

TEST(BruteIndex, FirstFailureIsSound) {
  for (const auto& f : oracle::words_up_to(6)) {
    if (f.size() < 2) continue;
    const auto v = brute_index(W(f), 11);
    const auto b = index_of(v);
    if (!b) continue;
    for (unsigned d = f.size(); d < *b; ++d) EXPECT_TRUE(is_isometric({d, W(f)}).isometric) << f;
    const auto& witness = std::get<BruteForced>(v).witness;
    EXPECT_EQ(witness.d, *b);
    EXPECT_FALSE(contains_factor(witness.alpha, W(f)));
    EXPECT_FALSE(contains_factor(witness.beta, W(f)));
    EXPECT_GE(witness.p, 2u);
  }
}

TEST(BruteIndex, OrbitInvariant) {
  for (const auto& f : oracle::words_up_to(6)) {
    const auto base = brute_index(W(f), 12);
    for (const auto& g : orbit(W(f))) {
      const auto other = brute_index(g, 12);
      EXPECT_EQ(kind_name(other), kind_name(base)) << f << " " << g;
      EXPECT_EQ(index_of(other), index_of(base)) << f << " " << g;
    }
  }
}

TEST(BruteIndex, LemmaBoundsHold) {
  for (unsigned a = 1; a <= 3; ++a)
    for (unsigned b = 1; b <= 3; ++b)
      for (unsigned c = 1; c <= 3; ++c)
        for (unsigned d = 1; d <= 3; ++d) {
          const EvenBlockForm e({a, c}, {b, d});
          for (const auto& m : lemma_matches(e)) {
            if (m.d0 > 14) continue;
            const auto b_of = index_of(brute_index(e.word(), m.d0));
            ASSERT_TRUE(b_of) << m.id << " " << e.str();
            EXPECT_LE(*b_of, m.d0) << m.id << " " << e.str();
          }
        }
}

TEST(ResolveIndex, KnownBadAgrees) {
  const auto r = resolve_index(W("10010"), 10);
  ASSERT_TRUE(std::holds_alternative<KnownBad>(r.verdict));
  EXPECT_EQ(std::get<KnownBad>(r.verdict).index, 7u);
  EXPECT_EQ(std::get<KnownBad>(r.verdict).row.id, "T2.10");
  EXPECT_EQ(r.agreement, Agreement::Agree);
  EXPECT_TRUE(has(r.provenance, "brute-force:B=7")) << r.provenance.size();
  EXPECT_TRUE(r.diagnostics.empty());
}

TEST(ResolveIndex, KnownGoodChecksThroughCap) {
  const auto r = resolve_index(W("10100"), 12);
  ASSERT_TRUE(std::holds_alternative<KnownGood>(r.verdict));
  EXPECT_EQ(std::get<KnownGood>(r.verdict).row.id, "T2.1");
  EXPECT_EQ(r.agreement, Agreement::Agree);
  ASSERT_TRUE(r.brute);
  EXPECT_EQ(*r.brute, IndexVerdict(UndecidedUpTo{12}));
}

TEST(ResolveIndex, IndexBeyondCapIsUnchecked) {
  const auto r = resolve_index(W("111000"), 8);
  ASSERT_TRUE(std::holds_alternative<KnownBad>(r.verdict));
  EXPECT_EQ(std::get<KnownBad>(r.verdict).index, 10u);
  EXPECT_EQ(r.agreement, Agreement::Unchecked);
}

TEST(ResolveIndex, FourBlockWithLemmaBound) {
  const auto r = resolve_index(W("110100"), 10);
  ASSERT_TRUE(index_of(r.verdict));
  EXPECT_EQ(*index_of(r.verdict), oracle::index_by_definition("110100", 10));
  EXPECT_LE(*index_of(r.verdict), 10u);
  EXPECT_EQ(r.agreement, Agreement::Agree);
  EXPECT_TRUE(has(r.provenance, "lemma:L2.1:d0=10"));
}

TEST(ResolveIndex, BruteForceFallback) {
  const auto r = resolve_index(W("1011001"), 10);
  EXPECT_EQ(r.agreement, Agreement::BruteOnly);
  EXPECT_EQ(r.verdict, brute_index(W("1011001"), 10));
}

TEST(ResolveIndex, Errors) {
  EXPECT_THROW(resolve_index(Word(), 10), PreconditionError);
  EXPECT_THROW(resolve_index(W("10010"), 4), PreconditionError);
}

}  // namespace
}  // namespace fibcube
