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

#ifndef FIBCUBE_CLASSIFY_HPP
#define FIBCUBE_CLASSIFY_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fibcube/affine.hpp"
#include "fibcube/blocks.hpp"
#include "fibcube/word.hpp"

namespace fibcube {

enum class Table { Table1, Table2, Lemma, Theorem11 };

std::string_view to_string(Table t) noexcept;

/// A closed-form row that fired. Row ids ("T1.3'", "T2.10", "L2.1",
/// "T1.1.c") are the public vocabulary of reports and fixtures.
struct ClassRow {
  Table table = Table::Table2;
  std::string id;
  std::string condition;  // the sub-condition that fired
  std::string formula;    // index formula; empty for good rows
  bool via_reversal = false;

  friend bool operator==(const ClassRow&, const ClassRow&) = default;
};

struct RowMatch {
  ClassRow row;
  Word form;                      // orbit member the row was evaluated on
  std::optional<unsigned> index;  // empty: good

  friend bool operator==(const RowMatch&, const RowMatch&) = default;
};

// ---------------------------------------------------------------------------
// Strings with at most three blocks.

/// Matches every 1-leading orbit member of the form 1^r 0^s 1^t against
/// rows (1')..(5'). Empty when every orbit member has four or more blocks.
std::vector<RowMatch> classify_table1(const Word& f);

// ---------------------------------------------------------------------------
// Four-block strings 1^r 0^s 1^t 0^k.

/// One (sub-)row of the four-block table. Multi-line rows contribute one
/// rule per line, sharing the id.
struct Table2Rule {
  std::string_view id;
  std::string_view condition;
  bool (*admits)(const FourBlockParams&);
  std::optional<Affine> formula;  // empty: good
};

std::span<const Table2Rule> table2_rules();

/// Rows whose id equals `id` (e.g. "T2.7" yields three rules).
std::vector<const Table2Rule*> table2_rules(std::string_view id);

Bindings bindings(const FourBlockParams& p);

/// Every rule matching p directly or its reversal image (k, t, s, r).
/// Never empty for valid parameters.
std::vector<RowMatch> classify_table2(const FourBlockParams& p);

// ---------------------------------------------------------------------------
// Strings with 2n blocks.

struct LemmaMatch {
  std::string id;  // "L2.1" .. "L2.5"
  EvenBlockForm form;
  unsigned d0 = 0;
  bool via_reversal = false;

  friend bool operator==(const LemmaMatch&, const LemmaMatch&) = default;
};

/// Badness lemmas, numbered 1..5.
inline constexpr int kLemmaCount = 5;
std::string lemma_id(int lemma);
std::string_view lemma_condition(int lemma);
bool lemma_admits(int lemma, const EvenBlockForm& e);
/// Dimension from which the lemma's construction certifies non-isometry.
unsigned lemma_d0(int lemma, const EvenBlockForm& e);

/// Lemmas applying to this exact form (no orbit normalization).
std::vector<LemmaMatch> lemma_matches(const EvenBlockForm& e);

struct GoodCandidate {
  char which = 'a';  // necessity case (a)..(d)
  EvenBlockForm form;

  std::string id() const { return std::string("T1.1.") + which; }
  friend bool operator==(const GoodCandidate&, const GoodCandidate&) = default;
};

struct BadByLemma {
  std::vector<LemmaMatch> lemmas;  // ordered by lemma id, direct form first
  unsigned d0 = 0;                 // minimum over lemmas

  friend bool operator==(const BadByLemma&, const BadByLemma&) = default;
};

using Theorem11Verdict = std::variant<GoodCandidate, BadByLemma>;

/// Applies the badness lemmas to e and to its mirrored 1-leading orbit
/// member. When none applies, e (or its mirror) has x_1 = 1 and satisfies
/// one of the necessity cases, which is returned.
Theorem11Verdict theorem11_filter(const EvenBlockForm& e);

/// The 1-leading even-block form of f or of complement(f); empty when f
/// does not have 2n >= 4 blocks.
std::optional<EvenBlockForm> even_block_form(const Word& f);

// ---------------------------------------------------------------------------
// Aggregate.

struct ClosedForm {
  std::vector<RowMatch> rows;
  std::optional<Theorem11Verdict> necessity;
  // Disagreements between matched rows, or between rows and lemma bounds.
  std::vector<std::string> diagnostics;

  bool has_rows() const noexcept { return !rows.empty(); }
  bool consistent() const noexcept { return diagnostics.empty(); }
  /// Agreed row index when rows exist, agree and are finite.
  std::optional<unsigned> exact_index() const;
  /// Rows exist, agree and say good.
  bool known_good() const;
  /// Smallest lemma d0 when the necessity filter proved badness.
  std::optional<unsigned> lemma_bound() const;
};

ClosedForm classify(const Word& f);

}  // namespace fibcube

#endif  // FIBCUBE_CLASSIFY_HPP
