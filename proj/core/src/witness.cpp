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

#include "fibcube/witness.hpp"

#include <algorithm>
#include <atomic>
#include <initializer_list>
#include <sstream>
#include <thread>

#include "fibcube/classify.hpp"
#include "fibcube/error.hpp"

namespace fibcube {

Affine symbolic_length(const std::vector<TemplateRun>& runs) {
  Affine total;
  for (const auto& run : runs) total += run.exponent;
  return total;
}

Word instantiate(const std::vector<TemplateRun>& runs, const Bindings& values,
                 std::string_view label) {
  Word w;
  for (const auto& run : runs) {
    const long long e = run.exponent.evaluate(values);
    if (e < 0) {
      throw PreconditionError(std::string(label) + " exponent " + std::to_string(run.digit) +
                              "^{" + run.exponent.str() + "} evaluates to " + std::to_string(e));
    }
    w.append(run.digit, static_cast<std::size_t>(e));
  }
  return w;
}

std::string render(const std::vector<TemplateRun>& runs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) os << ' ';
    os << static_cast<int>(runs[i].digit);
    if (runs[i].exponent != Affine(1)) os << "^{" << runs[i].exponent.str() << '}';
  }
  return os.str();
}

std::string describe(const WitnessParams& params) {
  return std::visit([](const auto& p) { return p.str(); }, params);
}

Word forbidden_word(const WitnessParams& params) {
  return std::visit([](const auto& p) { return p.word(); }, params);
}

Bindings bindings(const EvenBlockForm& e) {
  Bindings b;
  for (std::size_t i = 0; i < e.n(); ++i) {
    b["x" + std::to_string(i + 1)] = e.x[i];
    b["y" + std::to_string(i + 1)] = e.y[i];
  }
  return b;
}

const std::vector<std::string>& witness_sources() {
  static const std::vector<std::string> sources = {
      "L2.1", "L2.2", "L2.3", "L2.4", "L2.5",  "T2.5",  "T2.6",  "T2.7",
      "T2.8", "T2.9", "T2.10", "T2.11", "T2.12", "T2.13", "T2.14", "T2.15"};
  return sources;
}

bool is_lemma_source(std::string_view source) { return source.starts_with("L2."); }

namespace {

using Runs = std::vector<TemplateRun>;

Runs ones(Affine e = 1) { return {TemplateRun{1, std::move(e)}}; }
Runs zeros(Affine e = 1) { return {TemplateRun{0, std::move(e)}}; }

Runs cat(std::initializer_list<Runs> parts) {
  Runs out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

Affine xv(std::size_t i) { return Affine::var("x" + std::to_string(i)); }
Affine yv(std::size_t i) { return Affine::var("y" + std::to_string(i)); }

// 1^{x_i} 0^{y_i} for i = lo..hi (1-based, inclusive; empty if lo > hi).
Runs blocks_of(std::size_t lo, std::size_t hi) {
  Runs out;
  for (std::size_t i = lo; i <= hi; ++i) out = cat({out, ones(xv(i)), zeros(yv(i))});
  return out;
}

Affine sum_x(std::size_t lo, std::size_t hi) {
  Affine a;
  for (std::size_t i = lo; i <= hi; ++i) a += xv(i);
  return a;
}

Affine sum_y(std::size_t lo, std::size_t hi) {
  Affine a;
  for (std::size_t i = lo; i <= hi; ++i) a += yv(i);
  return a;
}

WitnessTemplate lemma_template(int lemma, std::size_t n) {
  WitnessTemplate t;
  switch (lemma) {
    case 1: {
      const Runs pre = cat({blocks_of(1, n - 1), ones(xv(n)), zeros(yv(n) - 2)});
      const Runs suf = cat({ones(xv(1) - 2), zeros(yv(1)), blocks_of(2, n)});
      t.alpha = cat({pre, ones(), zeros(), suf});
      t.beta = cat({pre, zeros(), ones(), suf});
      t.d0 = 2 * (sum_x(1, n) + sum_y(1, n)) - 2;
      break;
    }
    case 2: {
      const Runs pre = cat({ones(), zeros(yv(1)), blocks_of(2, n - 1), ones(xv(n)),
                            zeros(yv(n) - yv(1) - 2)});
      const Runs suf = cat({ones(xv(2) - 1), zeros(yv(2)), blocks_of(3, n)});
      t.alpha = cat({pre, zeros(), zeros(yv(1)), ones(), suf});
      t.beta = cat({pre, ones(), zeros(yv(1)), zeros(), suf});
      t.d0 = 2 * (sum_x(2, n) + sum_y(2, n)) + yv(1);
      break;
    }
    case 3: {
      const Runs pre = cat({blocks_of(1, n - 1), ones(xv(n) - 2)});
      const Runs suf = cat({zeros(yv(1) - 2), blocks_of(2, n)});
      t.alpha = cat({pre, zeros(), ones(), suf});
      t.beta = cat({pre, ones(), zeros(), suf});
      t.d0 = 2 * sum_x(2, n) + 2 * sum_y(1, n - 1) + xv(1) + yv(n) - 2;
      break;
    }
    case 4: {
      // The second copy runs over blocks 2..n with x_2 shortened by one and
      // the final zero block written as 0^{y_1} (y_1 = y_n here).
      const Runs pre = cat({blocks_of(1, n - 1), ones(xv(n) - 1)});
      Runs suf;
      for (std::size_t i = 2; i <= n; ++i) {
        suf = cat({suf, ones(i == 2 ? xv(i) - 1 : xv(i)), zeros(i == n ? yv(1) : yv(i))});
      }
      t.alpha = cat({pre, ones(), zeros(yv(1) - 1), ones(), suf});
      t.beta = cat({pre, zeros(), zeros(yv(1) - 1), zeros(), suf});
      t.d0 = 2 * sum_x(2, n) + 2 * sum_y(2, n - 1) + 3 * yv(1) + xv(1) - 1;
      break;
    }
    case 5: {
      // Blocks 1..n-1 with x_1 written as 1 and y_{n-1} shortened by one.
      Runs pre;
      for (std::size_t i = 1; i <= n - 1; ++i) {
        pre = cat({pre, ones(i == 1 ? Affine(1) : xv(i)), zeros(i == n - 1 ? yv(i) - 1 : yv(i))});
      }
      const Runs suf = cat({zeros(yv(1) - 1), blocks_of(2, n - 1), ones(), zeros(yv(n))});
      t.alpha = cat({pre, zeros(), zeros(), suf});
      t.beta = cat({pre, ones(), ones(), suf});
      t.d0 = 2 * sum_x(2, n - 1) + 2 * sum_y(1, n - 1) + yv(n) + 2;
      break;
    }
    default:
      throw PreconditionError("no lemma " + std::to_string(lemma));
  }
  return t;
}

WitnessTemplate table2_template(int row) {
  const Affine r = Affine::var("r"), s = Affine::var("s"), t = Affine::var("t"),
               k = Affine::var("k");
  WitnessTemplate w;
  switch (row) {
    case 5:
      w.alpha = cat({ones(r), zeros(s), ones(t), zeros(), ones(), ones(r - t - 2), zeros(s),
                     ones(t), zeros(2)});
      w.beta = cat({ones(r), zeros(s), ones(t), ones(), zeros(), ones(r - t - 2), zeros(s),
                    ones(t), zeros(2)});
      break;
    case 6:
      w.alpha = cat({ones(t + 2), zeros(s - 2), zeros(), ones(), ones(t), zeros(s), ones(t),
                     zeros(k)});
      w.beta = cat({ones(t + 2), zeros(s - 2), ones(), zeros(), ones(t), zeros(s), ones(t),
                    zeros(k)});
      break;
    case 7:
      w.alpha = cat({ones(r), zeros(s - 1), zeros(), ones(t), ones(), ones(r - t - 2), zeros(s),
                     ones(t), zeros(k)});
      w.beta = cat({ones(r), zeros(s - 1), ones(), ones(t), zeros(), ones(r - t - 2), zeros(s),
                    ones(t), zeros(k)});
      break;
    case 8:
      w.alpha = cat({ones(r), zeros(s - 1), zeros(), ones(t), zeros(s), ones(), ones(t - 1),
                     zeros(k)});
      w.beta = cat({ones(r), zeros(s - 1), ones(), ones(t), zeros(s), zeros(), ones(t - 1),
                    zeros(k)});
      break;
    case 9:
      w.alpha = cat({ones(), zeros(s), ones(), zeros(), zeros(s), ones(), zeros(k)});
      w.beta = cat({ones(), zeros(s), ones(), ones(), zeros(s), zeros(), zeros(k)});
      break;
    case 10:
      w.alpha = cat({ones(), zeros(k), zeros(), zeros(s - k - 1), zeros(), zeros(k), ones(),
                     zeros(k)});
      w.beta = cat({ones(), zeros(k), ones(), zeros(s - k - 1), ones(), zeros(k), ones(),
                    zeros(k)});
      break;
    case 11:
      w.alpha = cat({ones(r), zeros(s - 1), zeros(), ones(r - 1), zeros(), zeros(s - 1), ones(r),
                     zeros(k)});
      w.beta = cat({ones(r), zeros(s - 1), ones(), ones(r - 1), ones(), zeros(s - 1), ones(r),
                    zeros(k)});
      break;
    case 12:
      w.alpha = cat({ones(r), zeros(s), ones(t - 2), zeros(), ones(), zeros(s - 2), ones(t),
                     zeros(k)});
      w.beta = cat({ones(r), zeros(s), ones(t - 2), ones(), zeros(), zeros(s - 2), ones(t),
                    zeros(k)});
      break;
    case 13:
      w.alpha = cat({ones(r), zeros(s), ones(2), zeros(s), ones(), zeros(), zeros(k)});
      w.beta = cat({ones(r), zeros(s), ones(2), zeros(s), zeros(), ones(), zeros(k)});
      break;
    case 14:
      w.alpha = cat({ones(r), zeros(s), ones(t), zeros(k - 2), ones(), zeros(), ones(r - 2),
                     zeros(s), ones(t), zeros(k)});
      w.beta = cat({ones(r), zeros(s), ones(t), zeros(k - 2), zeros(), ones(), ones(r - 2),
                    zeros(s), ones(t), zeros(k)});
      break;
    case 15:
      w.alpha = cat({ones(r), zeros(s), ones(t), zeros(), ones(), zeros(s), ones(t), zeros(k)});
      w.beta = cat({ones(r), zeros(s), ones(t), ones(), zeros(), zeros(s), ones(t), zeros(k)});
      break;
    default:
      throw PreconditionError("no witness template for row T2." + std::to_string(row));
  }
  const auto rules = table2_rules("T2." + std::to_string(row));
  w.d0 = *rules.front()->formula;
  return w;
}

int source_number(std::string_view source, std::string_view prefix) {
  const std::string digits(source.substr(prefix.size()));
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
    throw PreconditionError("unknown witness source '" + std::string(source) + "'");
  }
  return std::stoi(digits);
}

void require_known(std::string_view source) {
  const auto& all = witness_sources();
  if (std::find(all.begin(), all.end(), source) == all.end()) {
    throw PreconditionError("unknown witness source '" + std::string(source) + "'");
  }
}

}  // namespace

WitnessTemplate witness_template(std::string_view source, const WitnessParams& params) {
  require_known(source);
  if (is_lemma_source(source)) {
    const auto* e = std::get_if<EvenBlockForm>(&params);
    if (!e) throw PreconditionError(std::string(source) + " takes x=(..) y=(..) parameters");
    return lemma_template(source_number(source, "L2."), e->n());
  }
  if (!std::holds_alternative<FourBlockParams>(params)) {
    throw PreconditionError(std::string(source) + " takes r, s, t, k parameters");
  }
  return table2_template(source_number(source, "T2."));
}

WitnessRecipe construct(std::string_view source, const WitnessParams& params) {
  const WitnessTemplate tmpl = witness_template(source, params);
  Bindings b;
  if (is_lemma_source(source)) {
    const auto& e = std::get<EvenBlockForm>(params);
    const int lemma = source_number(source, "L2.");
    if (!lemma_admits(lemma, e)) {
      throw PreconditionError(std::string(source) + " requires " +
                              std::string(lemma_condition(lemma)) + "; got " + e.str());
    }
    b = bindings(e);
  } else {
    const auto& p = std::get<FourBlockParams>(params);
    const auto rules = table2_rules(source);
    const bool admitted =
        std::any_of(rules.begin(), rules.end(), [&](const Table2Rule* r) { return r->admits(p); });
    if (!admitted) {
      std::string conditions;
      for (const auto* r : rules) conditions += (conditions.empty() ? "" : " or ") + std::string(r->condition);
      throw PreconditionError(std::string(source) + " requires " + conditions + "; got " + p.str());
    }
    b = bindings(p);
  }
  WitnessRecipe recipe;
  recipe.source = std::string(source);
  recipe.params = params;
  recipe.f = forbidden_word(params);
  recipe.d0 = static_cast<unsigned>(tmpl.d0.evaluate(b));
  recipe.alpha = instantiate(tmpl.alpha, b, "alpha");
  recipe.beta = instantiate(tmpl.beta, b, "beta");
  return recipe;
}

std::string VerificationReport::violated_clause() const {
  if (!alpha_avoids) return "alpha-contains-f";
  if (!beta_avoids) return "beta-contains-f";
  if (p < 2) return "distance-below-2";
  if (!alpha_blocked && !beta_blocked) return "no-blocked-side";
  return "";
}

VerificationReport verify_critical(unsigned d, const Word& f, const Word& alpha, const Word& beta) {
  if (alpha.size() != d || beta.size() != d) {
    throw PreconditionError("verify needs |alpha| = |beta| = d = " + std::to_string(d) +
                            " (got " + std::to_string(alpha.size()) + ", " +
                            std::to_string(beta.size()) + ")");
  }
  VerificationReport rep;
  rep.d = d;
  rep.alpha_avoids = !contains_factor(alpha, f);
  rep.beta_avoids = !contains_factor(beta, f);
  for (std::size_t i = 1; i <= d; ++i) {
    if (alpha.at(i) != beta.at(i)) rep.differing.push_back(i);
  }
  rep.p = static_cast<unsigned>(rep.differing.size());
  auto blocked = [&](const Word& w) {
    return std::all_of(rep.differing.begin(), rep.differing.end(),
                       [&](std::size_t i) { return contains_factor(w.flipped(i), f); });
  };
  rep.alpha_blocked = blocked(alpha);
  rep.beta_blocked = blocked(beta);
  return rep;
}

std::vector<WitnessParams> admissible_params(std::string_view source, unsigned param_bound,
                                             const std::vector<unsigned>& lemma_n) {
  require_known(source);
  std::vector<WitnessParams> out;
  if (param_bound == 0) return out;
  if (is_lemma_source(source)) {
    const int lemma = source_number(source, "L2.");
    std::vector<unsigned> ns = lemma_n;
    std::sort(ns.begin(), ns.end());
    for (unsigned n : ns) {
      if (n < 2) continue;
      std::vector<unsigned> v(2 * n, 1);
      while (true) {
        EvenBlockForm e(std::vector<unsigned>(v.begin(), v.begin() + n),
                        std::vector<unsigned>(v.begin() + n, v.end()));
        if (lemma_admits(lemma, e)) out.emplace_back(std::move(e));
        std::size_t i = v.size();
        while (i > 0 && v[i - 1] == param_bound) v[--i] = 1;
        if (i == 0) break;
        ++v[i - 1];
      }
    }
    return out;
  }
  const auto rules = table2_rules(source);
  for (unsigned r = 1; r <= param_bound; ++r) {
    for (unsigned s = 1; s <= param_bound; ++s) {
      for (unsigned t = 1; t <= param_bound; ++t) {
        for (unsigned k = 1; k <= param_bound; ++k) {
          const FourBlockParams p(r, s, t, k);
          if (std::any_of(rules.begin(), rules.end(),
                          [&](const Table2Rule* rule) { return rule->admits(p); })) {
            out.emplace_back(p);
          }
        }
      }
    }
  }
  return out;
}

std::string_view to_string(SweepStatus s) noexcept {
  switch (s) {
    case SweepStatus::Pass: return "pass";
    case SweepStatus::Fail: return "fail";
    case SweepStatus::Skipped: return "skipped";
  }
  return "?";
}

namespace {

void run_entry(WitnessSweepEntry& entry, const WitnessSweepOptions& options) {
  if (options.search.deadline && std::chrono::steady_clock::now() > *options.search.deadline) {
    entry.status = SweepStatus::Skipped;
    entry.message = "time budget exhausted";
    return;
  }
  try {
    entry.recipe = construct(entry.source, entry.params);
    const auto& rec = *entry.recipe;
    entry.report = verify_critical(rec.d0, rec.f, rec.alpha, rec.beta);
    if (!entry.report->pass()) {
      entry.status = SweepStatus::Fail;
      entry.message = entry.report->violated_clause();
      return;
    }
    if (!is_lemma_source(entry.source) && options.cross_check_cap &&
        rec.d0 <= *options.cross_check_cap) {
      SearchOptions inner = options.search;
      inner.workers = 1;
      inner.on_warning = nullptr;
      inner.d_max = std::max(inner.d_max, *options.cross_check_cap);
      entry.certifies_non_isometry = !is_isometric(CubeSpec(rec.d0, rec.f), inner).isometric;
      if (!*entry.certifies_non_isometry) {
        entry.status = SweepStatus::Fail;
        entry.message = "verified pair but is_isometric(d0) holds";
        return;
      }
    }
    entry.status = SweepStatus::Pass;
  } catch (const DeadlineExceeded&) {
    entry.status = SweepStatus::Skipped;
    entry.message = "time budget exhausted";
  } catch (const std::exception& e) {
    entry.status = SweepStatus::Fail;
    entry.message = e.what();
  }
}

}  // namespace

std::vector<WitnessSweepEntry> sweep_witnesses(const WitnessSweepOptions& options) {
  std::vector<WitnessSweepEntry> entries;
  for (const auto& source : witness_sources()) {
    if (!options.sources.empty() &&
        std::find(options.sources.begin(), options.sources.end(), source) == options.sources.end()) {
      continue;
    }
    const unsigned bound = is_lemma_source(source)
                               ? options.lemma_param_bound.value_or(options.param_bound)
                               : options.param_bound;
    for (auto& params : admissible_params(source, bound, options.lemma_n)) {
      WitnessSweepEntry e;
      e.source = source;
      e.params = std::move(params);
      entries.push_back(std::move(e));
    }
  }
  const unsigned workers = std::max(1U, options.search.workers);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) run_entry(entries[i], options);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return entries;
}

}  // namespace fibcube
