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

#include "fibcube/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fibcube/error.hpp"

namespace fibcube {

std::string_view to_string(Table t) noexcept {
  switch (t) {
    case Table::Table1: return "Table1";
    case Table::Table2: return "Table2";
    case Table::Lemma: return "Lemma";
    case Table::Theorem11: return "Theorem11";
  }
  return "?";
}

namespace {

Affine v(const char* name) { return Affine::var(name); }

// 1^r 0^s 1^t, s and t possibly zero.
struct ThreeBlock {
  unsigned r = 0, s = 0, t = 0;
};

std::optional<ThreeBlock> three_block(const Word& w) {
  if (w.empty() || w.at(1) != 1) return std::nullopt;
  const auto form = blocks(w);
  if (form.count() > 3) return std::nullopt;
  ThreeBlock p;
  p.r = static_cast<unsigned>(form.runs[0].length);
  if (form.count() > 1) p.s = static_cast<unsigned>(form.runs[1].length);
  if (form.count() > 2) p.t = static_cast<unsigned>(form.runs[2].length);
  return p;
}

struct Table1Rule {
  std::string_view id;
  std::string_view condition;
  bool (*admits)(const ThreeBlock&);
  std::optional<Affine> formula;
};

const std::vector<Table1Rule>& table1_rules() {
  static const std::vector<Table1Rule> rules = {
      {"T1.1'", "r>=1, s=0, t=0", [](const ThreeBlock& p) { return p.s == 0 && p.t == 0; },
       std::nullopt},
      {"T1.2'", "r>=1, s=1, t=0", [](const ThreeBlock& p) { return p.s == 1 && p.t == 0; },
       std::nullopt},
      {"T1.3'", "r=2, s>=2, t=0",
       [](const ThreeBlock& p) { return p.r == 2 && p.s >= 2 && p.t == 0; }, v("s") + 5},
      {"T1.4'", "r>=3, s>=3, t=0",
       [](const ThreeBlock& p) { return p.r >= 3 && p.s >= 3 && p.t == 0; },
       2 * v("r") + 2 * v("s") - 2},
      {"T1.5'", "r>=1, s>=1, t>=1", [](const ThreeBlock& p) { return p.s >= 1 && p.t >= 1; },
       v("r") + v("s") + v("t") + 1},
  };
  return rules;
}

using P = FourBlockParams;

}  // namespace

std::vector<RowMatch> classify_table1(const Word& f) {
  std::vector<RowMatch> out;
  if (f.empty()) return out;
  const auto members = orbit(f);
  std::vector<Word> seen;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Word& form = members[i];
    if (std::find(seen.begin(), seen.end(), form) != seen.end()) continue;
    seen.push_back(form);
    const auto p = three_block(form);
    if (!p) continue;
    const Bindings b{{"r", p->r}, {"s", p->s}, {"t", p->t}};
    for (const auto& rule : table1_rules()) {
      if (!rule.admits(*p)) continue;
      RowMatch m;
      m.row = ClassRow{Table::Table1, std::string(rule.id), std::string(rule.condition),
                       rule.formula ? rule.formula->str() : "", i >= 2};
      m.form = form;
      if (rule.formula) m.index = static_cast<unsigned>(rule.formula->evaluate(b));
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::span<const Table2Rule> table2_rules() {
  static const std::vector<Table2Rule> rules = {
      {"T2.1", "r=1, t>=1, s>=1, k=s+1", [](const P& p) { return p.r == 1 && p.k == p.s + 1; },
       std::nullopt},
      {"T2.2", "r=1, t=1, s=k, k>=1",
       [](const P& p) { return p.r == 1 && p.t == 1 && p.s == p.k; }, std::nullopt},
      {"T2.3", "r=1, t>=2, s=k+1, k>=1",
       [](const P& p) { return p.r == 1 && p.t >= 2 && p.s == p.k + 1; }, std::nullopt},
      {"T2.4", "r=1, t=2, s>=k+2, k>=2",
       [](const P& p) { return p.r == 1 && p.t == 2 && p.s >= p.k + 2 && p.k >= 2; },
       std::nullopt},
      {"T2.5", "r>=t+3, t>=1, s>=3, k=2",
       [](const P& p) { return p.r >= p.t + 3 && p.s >= 3 && p.k == 2; },
       2 * v("r") + 2 * v("s") + v("t") + 2},
      {"T2.6", "r=t+2, t>=1, s>=2, s>=k>=1",
       [](const P& p) { return p.r == p.t + 2 && p.s >= 2 && p.s >= p.k; },
       3 * v("t") + 2 * v("s") + v("k") + 2},
      {"T2.7", "r>=t+3, t>=1, s>=3, k=1",
       [](const P& p) { return p.r >= p.t + 3 && p.s >= 3 && p.k == 1; },
       2 * v("r") + 2 * v("s") + v("t") + v("k") - 1},
      {"T2.7", "r=t+2, t>=1, s=1, k=1",
       [](const P& p) { return p.r == p.t + 2 && p.s == 1 && p.k == 1; },
       2 * v("r") + 2 * v("s") + v("t") + v("k") - 1},
      {"T2.7", "r=t+2, t>=1, s>=2, k=s+1",
       [](const P& p) { return p.r == p.t + 2 && p.s >= 2 && p.k == p.s + 1; },
       2 * v("r") + 2 * v("s") + v("t") + v("k") - 1},
      {"T2.8", "r=t+1, t>=2, s>=1, k=s+1",
       [](const P& p) { return p.r == p.t + 1 && p.t >= 2 && p.k == p.s + 1; },
       v("r") + 2 * v("s") + 2 * v("t") + v("k")},
      {"T2.8", "r=2, t=1, s>=1, k>=s+1",
       [](const P& p) { return p.r == 2 && p.t == 1 && p.k >= p.s + 1; },
       v("r") + 2 * v("s") + 2 * v("t") + v("k")},
      {"T2.8", "r>=3, t=1, s=1, k>=3",
       [](const P& p) { return p.r >= 3 && p.t == 1 && p.s == 1 && p.k >= 3; },
       v("r") + 2 * v("s") + 2 * v("t") + v("k")},
      {"T2.9", "r=1, t=1, s>=1, k>=s+3",
       [](const P& p) { return p.r == 1 && p.t == 1 && p.k >= p.s + 3; },
       2 * v("s") + v("k") + 4},
      {"T2.10", "r=1, t=1, s>=k+1, k>=1",
       [](const P& p) { return p.r == 1 && p.t == 1 && p.s >= p.k + 1; },
       2 * v("k") + v("s") + 3},
      {"T2.11", "r>=2, t=r, s>=k+1, k>=1",
       [](const P& p) { return p.r >= 2 && p.t == p.r && p.s >= p.k + 1; },
       3 * v("r") + 2 * v("s") + v("k") - 1},
      {"T2.12", "r>=1, t>=r+2, s>=k+2, k>=1",
       [](const P& p) { return p.t >= p.r + 2 && p.s >= p.k + 2; },
       2 * v("s") + 2 * v("t") + v("r") + v("k") - 2},
      {"T2.13", "2>=r>=1, t=2, s>=1, k>=s+3",
       [](const P& p) { return p.r <= 2 && p.t == 2 && p.k >= p.s + 3; },
       2 * v("s") + v("k") + v("r") + 4},
      {"T2.14", "r>=3, t=2, s>=1, k>=s+3",
       [](const P& p) { return p.r >= 3 && p.t == 2 && p.k >= p.s + 3; },
       2 * (v("r") + v("s") + v("t") + v("k") - 1)},
      {"T2.14", "r=3, t=1, s>=2, k>=s+3",
       [](const P& p) { return p.r == 3 && p.t == 1 && p.s >= 2 && p.k >= p.s + 3; },
       2 * (v("r") + v("s") + v("t") + v("k") - 1)},
      {"T2.14", "r>=t, t>=3, s>=1, k>=s+3",
       [](const P& p) { return p.r >= p.t && p.t >= 3 && p.k >= p.s + 3; },
       2 * (v("r") + v("s") + v("t") + v("k") - 1)},
      {"T2.14", "r>=3, t>=r+1, s>=1, k>=s+3",
       [](const P& p) { return p.r >= 3 && p.t >= p.r + 1 && p.k >= p.s + 3; },
       2 * (v("r") + v("s") + v("t") + v("k") - 1)},
      {"T2.15", "r>=2, t=r+1, s>=k+1, k>=2",
       [](const P& p) { return p.r >= 2 && p.t == p.r + 1 && p.s >= p.k + 1 && p.k >= 2; },
       v("r") + 2 * v("s") + 2 * v("t") + v("k") + 2},
      {"T2.15", "r=t+1, t>=1, s>=k, k>=2",
       [](const P& p) { return p.r == p.t + 1 && p.s >= p.k && p.k >= 2; },
       v("r") + 2 * v("s") + 2 * v("t") + v("k") + 2},
      {"T2.15", "r=t+2, t>=1, s>=2, k=s+2",
       [](const P& p) { return p.r == p.t + 2 && p.s >= 2 && p.k == p.s + 2; },
       v("r") + 2 * v("s") + 2 * v("t") + v("k") + 2},
      {"T2.15", "r=t, t>=2, s>=2, k=s",
       [](const P& p) { return p.r == p.t && p.t >= 2 && p.s >= 2 && p.k == p.s; },
       v("r") + 2 * v("s") + 2 * v("t") + v("k") + 2},
  };
  return rules;
}

std::vector<const Table2Rule*> table2_rules(std::string_view id) {
  std::vector<const Table2Rule*> out;
  for (const auto& rule : table2_rules()) {
    if (rule.id == id) out.push_back(&rule);
  }
  return out;
}

Bindings bindings(const FourBlockParams& p) {
  return {{"r", p.r}, {"s", p.s}, {"t", p.t}, {"k", p.k}};
}

std::vector<RowMatch> classify_table2(const FourBlockParams& p) {
  std::vector<RowMatch> out;
  const FourBlockParams mirrored = p.reversed();
  for (const bool via_reversal : {false, true}) {
    const FourBlockParams& q = via_reversal ? mirrored : p;
    if (via_reversal && q == p) break;
    const Bindings b = bindings(q);
    for (const auto& rule : table2_rules()) {
      if (!rule.admits(q)) continue;
      RowMatch m;
      m.row = ClassRow{Table::Table2, std::string(rule.id), std::string(rule.condition),
                       rule.formula ? rule.formula->str() : "", via_reversal};
      m.form = q.word();
      if (rule.formula) m.index = static_cast<unsigned>(rule.formula->evaluate(b));
      out.push_back(std::move(m));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string lemma_id(int lemma) { return "L2." + std::to_string(lemma); }

std::string_view lemma_condition(int lemma) {
  switch (lemma) {
    case 1: return "x1>=2, yn>=2";
    case 2: return "x1=1, yn>=y1+2";
    case 3: return "xn>=x1+2, y1>=yn+2";
    case 4: return "xn>=x1+1, y1=yn";
    case 5: return "x1=xn=1, y1>=yn+1";
  }
  throw PreconditionError("no lemma " + std::to_string(lemma));
}

bool lemma_admits(int lemma, const EvenBlockForm& e) {
  const unsigned x1 = e.x.front(), xn = e.x.back(), y1 = e.y.front(), yn = e.y.back();
  switch (lemma) {
    case 1: return x1 >= 2 && yn >= 2;
    case 2: return x1 == 1 && yn >= y1 + 2;
    case 3: return xn >= x1 + 2 && y1 >= yn + 2;
    case 4: return xn >= x1 + 1 && y1 == yn;
    case 5: return x1 == 1 && xn == 1 && y1 >= yn + 1;
  }
  throw PreconditionError("no lemma " + std::to_string(lemma));
}

namespace {

// Sum of v[lo..hi], 1-based inclusive; empty ranges sum to 0.
unsigned range_sum(const std::vector<unsigned>& v, std::size_t lo, std::size_t hi) {
  if (lo > hi) return 0;
  return std::accumulate(v.begin() + static_cast<std::ptrdiff_t>(lo - 1),
                         v.begin() + static_cast<std::ptrdiff_t>(hi), 0U);
}

}  // namespace

unsigned lemma_d0(int lemma, const EvenBlockForm& e) {
  const std::size_t n = e.n();
  const auto& x = e.x;
  const auto& y = e.y;
  switch (lemma) {
    case 1: return 2 * (range_sum(x, 1, n) + range_sum(y, 1, n)) - 2;
    case 2: return 2 * (range_sum(x, 2, n) + range_sum(y, 2, n)) + y[0];
    case 3: return 2 * range_sum(x, 2, n) + 2 * range_sum(y, 1, n - 1) + x[0] + y[n - 1] - 2;
    case 4: return 2 * range_sum(x, 2, n) + 2 * range_sum(y, 2, n - 1) + 3 * y[0] + x[0] - 1;
    case 5: return 2 * range_sum(x, 2, n - 1) + 2 * range_sum(y, 1, n - 1) + y[n - 1] + 2;
  }
  throw PreconditionError("no lemma " + std::to_string(lemma));
}

std::vector<LemmaMatch> lemma_matches(const EvenBlockForm& e) {
  std::vector<LemmaMatch> out;
  for (int lemma = 1; lemma <= kLemmaCount; ++lemma) {
    if (lemma_admits(lemma, e)) out.push_back({lemma_id(lemma), e, lemma_d0(lemma, e), false});
  }
  return out;
}

namespace {

std::optional<char> necessity_case(const EvenBlockForm& e) {
  const unsigned x1 = e.x.front(), xn = e.x.back(), y1 = e.y.front(), yn = e.y.back();
  if (x1 != 1) return std::nullopt;
  if (yn == y1 + 1) return 'a';
  if (xn == 1 && y1 == yn) return 'b';
  if (xn >= 2 && y1 == yn + 1) return 'c';
  if (xn == 2 && y1 >= yn + 2) return 'd';
  return std::nullopt;
}

}  // namespace

Theorem11Verdict theorem11_filter(const EvenBlockForm& e) {
  const EvenBlockForm mirror = e.mirrored();
  BadByLemma bad;
  bad.lemmas = lemma_matches(e);
  if (mirror != e) {
    for (auto m : lemma_matches(mirror)) {
      m.via_reversal = true;
      bad.lemmas.push_back(std::move(m));
    }
  }
  if (!bad.lemmas.empty()) {
    std::stable_sort(bad.lemmas.begin(), bad.lemmas.end(),
                     [](const LemmaMatch& a, const LemmaMatch& b) { return a.id < b.id; });
    bad.d0 = std::min_element(bad.lemmas.begin(), bad.lemmas.end(),
                              [](const LemmaMatch& a, const LemmaMatch& b) { return a.d0 < b.d0; })
                 ->d0;
    return bad;
  }
  for (const EvenBlockForm* form : {&e, &mirror}) {
    if (auto c = necessity_case(*form)) return GoodCandidate{*c, *form};
  }
  throw std::logic_error("no badness lemma and no necessity case applies to " + e.str());
}

std::optional<EvenBlockForm> even_block_form(const Word& f) {
  if (f.empty()) return std::nullopt;
  return EvenBlockForm::from_word(f.at(1) == 1 ? f : complement(f));
}

// ---------------------------------------------------------------------------

std::optional<unsigned> ClosedForm::exact_index() const {
  if (rows.empty() || !consistent()) return std::nullopt;
  return rows.front().index;
}

bool ClosedForm::known_good() const {
  return !rows.empty() && consistent() && !rows.front().index.has_value();
}

std::optional<unsigned> ClosedForm::lemma_bound() const {
  if (!necessity) return std::nullopt;
  if (const auto* bad = std::get_if<BadByLemma>(&*necessity)) return bad->d0;
  return std::nullopt;
}

namespace {

std::string describe(const std::optional<unsigned>& index) {
  return index ? "B=" + std::to_string(*index) : std::string("good");
}

}  // namespace

ClosedForm classify(const Word& f) {
  ClosedForm cf;
  if (f.empty()) throw PreconditionError("cannot classify the null string");
  cf.rows = classify_table1(f);
  if (cf.rows.empty()) {
    if (auto p = four_block_params(f)) cf.rows = classify_table2(*p);
  }
  if (auto e = even_block_form(f)) cf.necessity = theorem11_filter(*e);

  for (const auto& m : cf.rows) {
    if (m.index != cf.rows.front().index) {
      cf.diagnostics.push_back("row " + m.row.id + " (" + m.row.condition + ") gives " +
                               describe(m.index) + " but row " + cf.rows.front().row.id + " (" +
                               cf.rows.front().row.condition + ") gives " +
                               describe(cf.rows.front().index));
    }
  }
  if (!cf.rows.empty() && cf.diagnostics.empty()) {
    if (const auto bound = cf.lemma_bound()) {
      const auto& first = cf.rows.front();
      if (!first.index || *first.index > *bound) {
        cf.diagnostics.push_back("row " + first.row.id + " gives " + describe(first.index) +
                                 " but the badness lemmas bound B <= " + std::to_string(*bound));
      }
    }
  }
  return cf;
}

}  // namespace fibcube
