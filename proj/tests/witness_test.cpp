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

#include <random>
#include <string>
#include <vector>

#include "fibcube/classify.hpp"
#include "fibcube/cube.hpp"
#include "fibcube/error.hpp"
#include "fibcube/witness.hpp"
#include "support/oracles.hpp"

namespace fibcube {
namespace {

Word W(const std::string& s) { return parse_word(s); }

int lemma_number(const std::string& source) { return source[3] - '0'; }

TEST(Construct, LemmaOneExample) {
  const auto r = construct("L2.1", EvenBlockForm({2, 1}, {1, 2}));
  EXPECT_EQ(r.f.str(), "110100");
  EXPECT_EQ(r.d0, 10u);
  EXPECT_EQ(r.alpha.str(), "1101100100");
  EXPECT_EQ(r.beta.str(), "1101010100");
  const auto rep = verify_critical(r.d0, r.f, r.alpha, r.beta);
  EXPECT_TRUE(rep.pass());
  EXPECT_TRUE(rep.alpha_blocked);
  EXPECT_TRUE(rep.beta_blocked);
  EXPECT_EQ(rep.p, 2u);
}

TEST(Construct, TableTwoExample) {
  const auto r = construct("T2.9", FourBlockParams(1, 1, 1, 4));
  EXPECT_EQ(r.d0, 10u);
  EXPECT_EQ(r.alpha.str(), "1010010000");
  EXPECT_EQ(r.beta.str(), "1011000000");
  EXPECT_TRUE(verify_critical(r.d0, r.f, r.alpha, r.beta).pass());
}

TEST(Construct, LemmaFiveExample) {
  const auto r = construct("L2.5", EvenBlockForm({1, 1}, {2, 1}));
  EXPECT_EQ(r.d0, 7u);
  EXPECT_EQ(r.alpha.str(), "1000010");
  EXPECT_EQ(r.beta.str(), "1011010");
  EXPECT_TRUE(verify_critical(r.d0, r.f, r.alpha, r.beta).pass());
}

TEST(Construct, RejectsInadmissibleParameters) {
  try {
    construct("L2.1", EvenBlockForm({1, 1}, {1, 2}));
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("x1"), std::string::npos) << e.what();
  }
  EXPECT_THROW(construct("T2.9", FourBlockParams(1, 2, 1, 1)), PreconditionError);
  EXPECT_THROW(construct("T2.9", EvenBlockForm({1, 1}, {1, 1})), PreconditionError);
  EXPECT_THROW(construct("L9.9", EvenBlockForm({1, 1}, {1, 1})), PreconditionError);
}

TEST(Instantiate, NegativeExponentNamesTheRun) {
  const std::vector<TemplateRun> runs = {{1, Affine::var("r")}, {0, Affine::var("s") - 2}};
  EXPECT_EQ(instantiate(runs, {{"r", 2}, {"s", 2}}).str(), "11");
  EXPECT_EQ(instantiate(runs, {{"r", 1}, {"s", 4}}).str(), "100");
  try {
    instantiate(runs, {{"r", 1}, {"s", 1}}, "beta");
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("beta"), std::string::npos) << msg;
    EXPECT_NE(msg.find("s-2"), std::string::npos) << msg;
  }
}

TEST(Verify, ReportsEachClause) {
  const Word f = W("11");
  EXPECT_EQ(verify_critical(4, f, W("1100"), W("0101")).violated_clause(), "alpha-contains-f");
  EXPECT_EQ(verify_critical(4, f, W("0101"), W("0110")).violated_clause(), "beta-contains-f");
  EXPECT_EQ(verify_critical(4, f, W("0101"), W("0100")).violated_clause(), "distance-below-2");
  EXPECT_EQ(verify_critical(4, f, W("0000"), W("0101")).violated_clause(), "no-blocked-side");
  EXPECT_THROW(verify_critical(4, f, W("000"), W("0101")), PreconditionError);
}

TEST(Verify, AgreesWithOracleOnRandomPairs) {
  std::mt19937_64 rng(11);
  int rejected = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned d = 4 + rng() % 6;
    const std::string f = oracle::random_word(rng, 2 + rng() % 3);
    const std::string a = oracle::random_word(rng, d);
    const std::string b = oracle::random_word(rng, d);
    if (oracle::contains(a, f) || oracle::contains(b, f) || oracle::hamming(a, b) < 2) continue;
    bool a_blocked = true;
    bool b_blocked = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (a[i] == b[i]) continue;
      a_blocked = a_blocked && oracle::contains(oracle::flip(a, i), f);
      b_blocked = b_blocked && oracle::contains(oracle::flip(b, i), f);
    }
    const auto rep = verify_critical(d, W(f), W(a), W(b));
    EXPECT_EQ(rep.pass(), a_blocked || b_blocked) << f << " " << a << " " << b;
    if (!rep.pass()) {
      EXPECT_EQ(rep.violated_clause(), "no-blocked-side");
      ++rejected;
    }
  }
  EXPECT_GT(rejected, 0);
}

TEST(Templates, SymbolicLengthEqualsDimension) {
  for (unsigned n : {2u, 3u, 4u}) {
    for (const auto& source : witness_sources()) {
      if (!is_lemma_source(source)) continue;
      for (const auto& params : admissible_params(source, 2, {n})) {
        const auto tmpl = witness_template(source, params);
        const auto b = bindings(std::get<EvenBlockForm>(params));
        EXPECT_EQ(symbolic_length(tmpl.alpha).evaluate(b), tmpl.d0.evaluate(b)) << source;
        EXPECT_EQ(symbolic_length(tmpl.beta).evaluate(b), tmpl.d0.evaluate(b)) << source;
        EXPECT_EQ(tmpl.d0.evaluate(b),
                  static_cast<long long>(lemma_d0(lemma_number(source),
                                                   std::get<EvenBlockForm>(params))))
            << source << " " << describe(params);
      }
    }
  }
  for (const auto& source : witness_sources()) {
    if (is_lemma_source(source)) continue;
    for (const auto& params : admissible_params(source, 4)) {
      const auto tmpl = witness_template(source, params);
      const auto b = bindings(std::get<FourBlockParams>(params));
      EXPECT_EQ(symbolic_length(tmpl.alpha).evaluate(b), tmpl.d0.evaluate(b)) << source;
      EXPECT_EQ(symbolic_length(tmpl.beta).evaluate(b), tmpl.d0.evaluate(b)) << source;
    }
  }
}

TEST(Templates, RenderUsesRunNotation) {
  const auto tmpl = witness_template("T2.9", FourBlockParams(1, 1, 1, 4));
  EXPECT_NE(render(tmpl.alpha).find("^{"), std::string::npos);
}

TEST(Sweep, TableTwoRecipesAllPassAndCertify) {
  WitnessSweepOptions opts;
  opts.param_bound = 4;
  opts.cross_check_cap = 12;
  opts.sources = {"T2.5", "T2.6", "T2.7", "T2.8", "T2.9", "T2.10",
                  "T2.11", "T2.12", "T2.13", "T2.14", "T2.15"};
  const auto entries = sweep_witnesses(opts);
  ASSERT_FALSE(entries.empty());
  int certified = 0;
  for (const auto& e : entries) {
    EXPECT_EQ(e.status, SweepStatus::Pass) << e.source << " " << describe(e.params) << " " << e.message;
    if (e.certifies_non_isometry) {
      EXPECT_TRUE(*e.certifies_non_isometry) << e.source << " " << describe(e.params);
      ++certified;
    }
  }
  EXPECT_GT(certified, 0);
}

TEST(Sweep, LemmaTwoTemplateHasOneKnownDefectAtSmallParameters) {
  WitnessSweepOptions opts;
  opts.param_bound = 4;
  opts.lemma_n = {2};
  opts.sources = {"L2.1", "L2.2", "L2.3", "L2.4", "L2.5"};
  std::vector<std::string> failures;
  for (const auto& e : sweep_witnesses(opts)) {
    if (e.status != SweepStatus::Pass) failures.push_back(e.source + " " + describe(e.params));
  }
  ASSERT_EQ(failures.size(), 1u);
  EXPECT_EQ(failures[0], "L2.2 x=(1,1) y=(1,4)");
  // The bound itself still holds there.
  EXPECT_FALSE(is_isometric({11, W("1010000")}).isometric);
}

TEST(Sweep, LemmaTemplatesPassWithThreePairs) {
  WitnessSweepOptions opts;
  opts.param_bound = 3;
  opts.lemma_n = {3};
  opts.sources = {"L2.1", "L2.2", "L2.3", "L2.4", "L2.5"};
  const auto entries = sweep_witnesses(opts);
  ASSERT_FALSE(entries.empty());
  for (const auto& e : entries) {
    EXPECT_EQ(e.status, SweepStatus::Pass) << e.source << " " << describe(e.params) << " " << e.message;
  }
}

TEST(Sweep, DeterministicAcrossWorkers) {
  WitnessSweepOptions one;
  one.param_bound = 3;
  one.cross_check_cap = 10;
  WitnessSweepOptions four = one;
  four.search.workers = 4;
  const auto a = sweep_witnesses(one);
  const auto b = sweep_witnesses(four);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].source, b[i].source);
    EXPECT_EQ(describe(a[i].params), describe(b[i].params));
    EXPECT_EQ(a[i].status, b[i].status);
  }
}

}  // namespace
}  // namespace fibcube
