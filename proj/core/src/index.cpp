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

#include "fibcube/index.hpp"

#include "fibcube/error.hpp"

namespace fibcube {

std::optional<unsigned> index_of(const IndexVerdict& v) {
  if (const auto* bad = std::get_if<KnownBad>(&v)) return bad->index;
  if (const auto* brute = std::get_if<BruteForced>(&v)) return brute->index;
  return std::nullopt;
}

std::string_view kind_name(const IndexVerdict& v) {
  switch (v.index()) {
    case 0: return "known-good";
    case 1: return "known-bad";
    case 2: return "brute-forced";
    default: return "undecided";
  }
}

std::string_view to_string(Agreement a) noexcept {
  switch (a) {
    case Agreement::Agree: return "agree";
    case Agreement::Discrepancy: return "discrepancy";
    case Agreement::Unchecked: return "unchecked";
    case Agreement::BruteOnly: return "brute-only";
  }
  return "?";
}

IndexVerdict brute_index(const Word& f, unsigned cap, const SearchOptions& options) {
  if (f.empty()) throw PreconditionError("forbidden factor must be non-empty");
  if (cap < f.size()) {
    throw PreconditionError("cap " + std::to_string(cap) + " is below |f| = " +
                            std::to_string(f.size()));
  }
  if (cap > options.d_max) {
    throw ResourceLimitError("cap " + std::to_string(cap) + " exceeds d_max=" +
                                 std::to_string(options.d_max),
                             options.d_max);
  }
  for (auto d = static_cast<unsigned>(f.size()); d <= cap; ++d) {
    auto result = is_isometric(CubeSpec(d, f), options);
    if (!result.isometric) return BruteForced{d, std::move(*result.witness)};
  }
  return UndecidedUpTo{cap};
}

Resolution resolve_index(const Word& f, unsigned cap, const SearchOptions& options) {
  if (f.empty()) throw PreconditionError("forbidden factor must be non-empty");
  if (cap < f.size()) {
    throw PreconditionError("cap " + std::to_string(cap) + " is below |f| = " +
                            std::to_string(f.size()));
  }
  Resolution res;
  res.closed_form = classify(f);
  const ClosedForm& cf = res.closed_form;

  for (const auto& m : cf.rows) {
    res.provenance.push_back("closed-form:" + m.row.id + (m.row.via_reversal ? ":reversal" : ""));
  }
  if (cf.necessity) {
    if (const auto* bad = std::get_if<BadByLemma>(&*cf.necessity)) {
      for (const auto& l : bad->lemmas) {
        res.provenance.push_back("lemma:" + l.id + ":d0=" + std::to_string(l.d0));
      }
    } else {
      res.provenance.push_back("necessity:" + std::get<GoodCandidate>(*cf.necessity).id());
    }
  }
  res.diagnostics = cf.diagnostics;

  auto run_brute = [&](unsigned upto) -> const IndexVerdict& {
    res.brute = brute_index(f, upto, options);
    return *res.brute;
  };

  if (cf.has_rows() && cf.consistent()) {
    const RowMatch& row = cf.rows.front();
    if (row.index) {
      res.verdict = KnownBad{*row.index, row.row};
      if (*row.index <= cap) {
        const auto& brute = run_brute(*row.index);
        const auto found = index_of(brute);
        res.agreement = found == row.index ? Agreement::Agree : Agreement::Discrepancy;
        if (res.agreement == Agreement::Discrepancy) {
          res.diagnostics.push_back("row " + row.row.id + " gives B=" + std::to_string(*row.index) +
                                    " but brute force " +
                                    (found ? "finds B=" + std::to_string(*found)
                                           : std::string("finds no failure")));
        }
      } else {
        res.agreement = Agreement::Unchecked;
      }
    } else {
      res.verdict = KnownGood{row.row};
      const auto& brute = run_brute(cap);
      if (const auto found = index_of(brute)) {
        res.agreement = Agreement::Discrepancy;
        res.diagnostics.push_back("row " + row.row.id + " says good but brute force finds B=" +
                                  std::to_string(*found));
      } else {
        res.agreement = Agreement::Agree;
      }
    }
  } else {
    res.verdict = run_brute(cap);
    res.agreement = cf.has_rows() ? Agreement::Discrepancy : Agreement::BruteOnly;
    if (const auto bound = cf.lemma_bound()) {
      const auto found = index_of(*res.brute);
      const bool violated = found ? *found > *bound : *bound <= cap;
      if (violated) {
        res.agreement = Agreement::Discrepancy;
        res.diagnostics.push_back("badness lemmas bound B <= " + std::to_string(*bound) +
                                  " but brute force " +
                                  (found ? "finds B=" + std::to_string(*found)
                                         : "finds no failure up to " + std::to_string(cap)));
      } else if (res.agreement == Agreement::BruteOnly && found) {
        res.agreement = Agreement::Agree;
      }
    }
  }
  if (res.brute) {
    res.provenance.push_back(std::holds_alternative<BruteForced>(*res.brute)
                                 ? "brute-force:B=" + std::to_string(*index_of(*res.brute))
                                 : "brute-force:isometric-through-d=" +
                                       std::to_string(std::get<UndecidedUpTo>(*res.brute).cap));
  }
  return res;
}

}  // namespace fibcube
