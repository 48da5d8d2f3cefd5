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

#include "fibcube_cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <tuple>
#include <variant>

#include "fibcube/classify.hpp"
#include "fibcube/error.hpp"
#include "fibcube/index.hpp"
#include "fibcube/witness.hpp"

namespace fibcube::cli {

using nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

Word three_block_word(unsigned r, unsigned s, unsigned t) {
  Word w;
  w.append(1, r).append(0, s).append(1, t);
  return w;
}

/// Runs jobs[i] on `workers` threads; results keep job order.
std::vector<SweepRecord> parallel_map(std::size_t count, unsigned workers,
                                      const std::function<SweepRecord(std::size_t)>& job) {
  std::vector<SweepRecord> out(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) out[i] = job(i);
  };
  const unsigned n = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (n <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(work);
  }
  return out;
}

bool past(const SearchOptions& opts) { return opts.deadline && Clock::now() >= *opts.deadline; }

void mark_budget(SweepRecord& rec) {
  rec.status = "skipped";
  rec.detail["reason"] = "time budget exhausted";
}

// Closed-form rows against brute force, shared by the two table scopes.
void check_rows(SweepRecord& rec, const Word& f, const std::vector<RowMatch>& rows, unsigned cap,
                const SearchOptions& opts) {
  ordered_json ids = ordered_json::array();
  for (const auto& m : rows) ids.push_back(m.row.id + (m.row.via_reversal ? ":reversal" : ""));
  rec.detail["rows"] = ids;
  if (rows.empty()) {
    rec.status = "fail";
    rec.detail["reason"] = "no row matches";
    return;
  }
  rec.row = rows.front().row.id;
  const auto expected = rows.front().index;
  rec.detail["expected"] = expected ? ordered_json(*expected) : ordered_json(nullptr);
  for (const auto& m : rows) {
    if (m.index != expected) {
      rec.status = "fail";
      rec.detail["reason"] = "rows " + rows.front().row.id + " and " + m.row.id + " disagree";
      return;
    }
  }
  const unsigned limit = expected ? *expected : cap;
  if (limit > cap || limit < f.size()) {
    rec.status = "skipped";
    rec.detail["reason"] = expected ? "B beyond cap" : "cap below |f|";
    return;
  }
  try {
    const auto verdict = brute_index(f, limit, opts);
    const auto b = index_of(verdict);
    rec.detail["brute"] = b ? ordered_json(*b) : ordered_json("isometric-through-" + std::to_string(limit));
    rec.status = b == expected ? "pass" : "fail";
    if (rec.status == "fail") rec.detail["reason"] = "brute force disagrees";
  } catch (const DeadlineExceeded&) {
    mark_budget(rec);
  }
}

std::vector<SweepRecord> sweep_table1(const SweepConfig& cfg, const SearchOptions& opts) {
  std::vector<std::array<unsigned, 3>> tuples;
  for (unsigned r = 1; r <= cfg.bound; ++r)
    for (unsigned s = 0; s <= cfg.bound; ++s)
      for (unsigned t = 0; t <= (s == 0 ? 0 : cfg.bound); ++t) tuples.push_back({r, s, t});
  return parallel_map(tuples.size(), cfg.workers, [&](std::size_t i) {
    const auto [r, s, t] = tuples[i];
    SweepRecord rec;
    rec.params = {r, s, t};
    rec.params_text = "r=" + std::to_string(r) + " s=" + std::to_string(s) + " t=" + std::to_string(t);
    const Word f = three_block_word(r, s, t);
    rec.f = f.str();
    if (past(opts)) {
      mark_budget(rec);
      return rec;
    }
    check_rows(rec, f, classify_table1(f), cfg.cap, opts);
    return rec;
  });
}

std::vector<SweepRecord> sweep_table2(const SweepConfig& cfg, const SearchOptions& opts) {
  std::vector<FourBlockParams> tuples;
  for (unsigned r = 1; r <= cfg.bound; ++r)
    for (unsigned s = 1; s <= cfg.bound; ++s)
      for (unsigned t = 1; t <= cfg.bound; ++t)
        for (unsigned k = 1; k <= cfg.bound; ++k) tuples.emplace_back(r, s, t, k);
  return parallel_map(tuples.size(), cfg.workers, [&](std::size_t i) {
    const FourBlockParams& p = tuples[i];
    SweepRecord rec;
    rec.params = {p.r, p.s, p.t, p.k};
    rec.params_text = p.str();
    rec.f = p.word().str();
    if (past(opts)) {
      mark_budget(rec);
      return rec;
    }
    check_rows(rec, p.word(), classify_table2(p), cfg.cap, opts);
    return rec;
  });
}

std::vector<EvenBlockForm> even_forms(unsigned n, unsigned bound) {
  std::vector<EvenBlockForm> out;
  std::vector<unsigned> v(2 * n, 1);
  while (true) {
    out.emplace_back(std::vector<unsigned>(v.begin(), v.begin() + n),
                     std::vector<unsigned>(v.begin() + n, v.end()));
    std::size_t i = v.size();
    while (i > 0 && v[i - 1] == bound) v[--i] = 1;
    if (i == 0) break;
    ++v[i - 1];
  }
  return out;
}

std::vector<unsigned> flatten(const EvenBlockForm& e) {
  std::vector<unsigned> out = e.x;
  out.insert(out.end(), e.y.begin(), e.y.end());
  return out;
}

std::vector<SweepRecord> sweep_lemmas(const SweepConfig& cfg, const SearchOptions& opts) {
  std::vector<LemmaMatch> jobs;
  for (unsigned n : {2U, 3U}) {
    for (const auto& e : even_forms(n, cfg.bound)) {
      for (auto& m : lemma_matches(e)) jobs.push_back(std::move(m));
    }
  }
  return parallel_map(jobs.size(), cfg.workers, [&](std::size_t i) {
    const LemmaMatch& m = jobs[i];
    SweepRecord rec;
    rec.row = m.id;
    rec.params = flatten(m.form);
    rec.params_text = m.form.str();
    rec.f = m.form.word().str();
    rec.detail["d0"] = m.d0;
    if (past(opts)) {
      mark_budget(rec);
      return rec;
    }
    if (m.d0 > cfg.cap) {
      rec.status = "skipped";
      rec.detail["reason"] = "d0 beyond cap";
      return rec;
    }
    try {
      const bool iso = is_isometric({m.d0, m.form.word()}, opts).isometric;
      rec.detail["isometric_at_d0"] = iso;
      rec.status = iso ? "fail" : "pass";
      if (iso) rec.detail["reason"] = "Q_d0(f) is isometric";
    } catch (const DeadlineExceeded&) {
      mark_budget(rec);
    }
    return rec;
  });
}

std::vector<SweepRecord> sweep_witness_recipes(const SweepConfig& cfg, const SearchOptions& opts) {
  WitnessSweepOptions wopts;
  wopts.param_bound = cfg.bound;
  wopts.cross_check_cap = cfg.cap;
  wopts.search = opts;
  wopts.search.workers = cfg.workers;
  std::vector<SweepRecord> out;
  for (const auto& e : sweep_witnesses(wopts)) {
    SweepRecord rec;
    rec.row = e.source;
    rec.params_text = describe(e.params);
    if (const auto* p = std::get_if<FourBlockParams>(&e.params)) {
      rec.params = {p->r, p->s, p->t, p->k};
    } else {
      rec.params = flatten(std::get<EvenBlockForm>(e.params));
    }
    rec.f = forbidden_word(e.params).str();
    rec.status = std::string(to_string(e.status));
    if (e.recipe) {
      rec.detail["d0"] = e.recipe->d0;
      rec.detail["alpha"] = e.recipe->alpha.str();
      rec.detail["beta"] = e.recipe->beta.str();
    }
    if (e.report && !e.report->pass()) rec.detail["violated_clause"] = e.report->violated_clause();
    if (e.certifies_non_isometry) rec.detail["certifies_non_isometry"] = *e.certifies_non_isometry;
    if (!e.message.empty()) rec.detail["reason"] = e.message;
    out.push_back(std::move(rec));
  }
  return out;
}

// "T2.10" -> ("T2", 10); "T1.3'" -> ("T1", 3).
std::pair<std::string, unsigned> row_key(const std::string& id) {
  const auto dot = id.find('.');
  if (dot == std::string::npos) return {id, 0};
  unsigned minor = 0;
  for (std::size_t i = dot + 1; i < id.size() && std::isdigit(static_cast<unsigned char>(id[i])); ++i) {
    minor = minor * 10 + static_cast<unsigned>(id[i] - '0');
  }
  return {id.substr(0, dot), minor};
}

}  // namespace

std::optional<Scope> parse_scope(const std::string& name) {
  if (name == "table1") return Scope::Table1;
  if (name == "table2") return Scope::Table2;
  if (name == "lemmas") return Scope::Lemmas;
  if (name == "witnesses") return Scope::Witnesses;
  return std::nullopt;
}

std::string_view to_string(Scope s) noexcept {
  switch (s) {
    case Scope::Table1: return "table1";
    case Scope::Table2: return "table2";
    case Scope::Lemmas: return "lemmas";
    case Scope::Witnesses: return "witnesses";
  }
  return "?";
}

ordered_json SweepOutcome::summary(const SweepConfig& config) const {
  return {{"summary", true},
          {"scope", to_string(config.scope)},
          {"bound", config.bound},
          {"cap", config.cap},
          {"total", records.size()},
          {"pass", passed},
          {"fail", failed},
          {"skipped", skipped},
          {"budget_exhausted", budget_exhausted}};
}

ordered_json to_json(const SweepRecord& r) {
  ordered_json j = {{"row", r.row}, {"params", r.params_text}, {"f", r.f}, {"status", r.status}};
  for (const auto& [key, value] : r.detail.items()) j[key] = value;
  return j;
}

SweepOutcome run_sweep(const SweepConfig& config) {
  SearchOptions opts;
  opts.d_max = config.d_max;
  opts.workers = 1;
  if (config.max_seconds) {
    opts.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(*config.max_seconds));
  }
  SweepOutcome out;
  switch (config.scope) {
    case Scope::Table1: out.records = sweep_table1(config, opts); break;
    case Scope::Table2: out.records = sweep_table2(config, opts); break;
    case Scope::Lemmas: out.records = sweep_lemmas(config, opts); break;
    case Scope::Witnesses: out.records = sweep_witness_recipes(config, opts); break;
  }
  std::stable_sort(out.records.begin(), out.records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    return std::make_pair(row_key(a.row), a.params) < std::make_pair(row_key(b.row), b.params);
  });
  for (const auto& r : out.records) {
    if (r.status == "pass") ++out.passed;
    if (r.status == "fail") ++out.failed;
    if (r.status == "skipped") {
      ++out.skipped;
      if (r.detail.contains("reason") && r.detail["reason"] == "time budget exhausted") {
        out.budget_exhausted = true;
      }
    }
  }
  return out;
}

}  // namespace fibcube::cli
