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

#include "fibcube_cli/app.hpp"

#include <charconv>
#include <cstdlib>
#include <map>
#include <ostream>
#include <set>
#include <thread>
#include <variant>

#include <CLI11.hpp>

#include "fibcube/classify.hpp"
#include "fibcube/error.hpp"
#include "fibcube/index.hpp"
#include "fibcube/witness.hpp"
#include "fibcube_cli/report.hpp"
#include "fibcube_cli/sweep.hpp"

namespace fibcube::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

unsigned parse_unsigned(std::string_view text, std::string_view what) {
  unsigned value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw UsageError(std::string(what) + ": expected a non-negative integer, got '" +
                     std::string(text) + "'");
  }
  return value;
}

std::vector<unsigned> parse_list(std::string_view text, std::string_view what) {
  std::vector<unsigned> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_unsigned(text.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// "r=1 s=1 t=1 k=4" or "x=1,1 y=2,1".
WitnessParams parse_params(const std::vector<std::string>& tokens) {
  std::map<std::string, std::string> kv;
  for (const auto& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("parameter '" + tok + "' is not key=value");
    if (!kv.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second) {
      throw UsageError("parameter '" + tok.substr(0, eq) + "' given twice");
    }
  }
  std::set<std::string> keys;
  for (const auto& [k, v] : kv) keys.insert(k);
  if (keys == std::set<std::string>{"k", "r", "s", "t"}) {
    return FourBlockParams(parse_unsigned(kv["r"], "r"), parse_unsigned(kv["s"], "s"),
                           parse_unsigned(kv["t"], "t"), parse_unsigned(kv["k"], "k"));
  }
  if (keys == std::set<std::string>{"x", "y"}) {
    return EvenBlockForm(parse_list(kv["x"], "x"), parse_list(kv["y"], "y"));
  }
  throw UsageError("parameters must be r,s,t,k or x,y lists");
}

struct Globals {
  bool json = false;
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  std::optional<unsigned> d_max_flag;
  unsigned d_max = kDefaultDMax;
};

unsigned resolve_d_max(const Globals& g, const Environment& env) {
  unsigned d = kDefaultDMax;
  if (g.d_max_flag) {
    d = *g.d_max_flag;
  } else if (const auto v = env("FIBCUBE_D_MAX")) {
    d = parse_unsigned(*v, "FIBCUBE_D_MAX");
  }
  if (d < 1 || d > kAbsoluteDMax) {
    throw UsageError("d-max must lie in [1, " + std::to_string(kAbsoluteDMax) + "], got " +
                     std::to_string(d));
  }
  return d;
}

class Runner {
 public:
  Runner(const Globals& g, std::ostream& out, std::ostream& err) : g_(g), out_(out), err_(err) {
    opts_.d_max = g.d_max;
    opts_.workers = g.workers;
    opts_.on_warning = [this](const std::string& m) { err_ << "warning: " << m << "\n"; };
  }

  int classify_cmd(const std::string& text) {
    const Word f = parse_word(text);
    if (f.empty()) throw UsageError("word must be non-empty");
    const ClosedForm cf = classify(f);
    emit(classify_report(f, cf), classify_text);
    return cf.consistent() ? kOk : kDiscrepancy;
  }

  int index_cmd(const std::string& text, unsigned cap) {
    const Word f = parse_word(text);
    const Resolution r = resolve_index(f, cap, opts_);
    emit(index_report(f, cap, r), index_text);
    if (r.agreement == Agreement::Discrepancy) return kDiscrepancy;
    if (std::holds_alternative<UndecidedUpTo>(r.verdict)) return kCapExceeded;
    return kOk;
  }

  int witness_cmd(const std::string& source, const std::vector<std::string>& tokens) {
    const WitnessParams params = parse_params(tokens);
    const WitnessRecipe recipe = construct(source, params);
    const WitnessTemplate tmpl = witness_template(source, params);
    const VerificationReport rep = verify_critical(recipe.d0, recipe.f, recipe.alpha, recipe.beta);
    emit(witness_report(recipe, tmpl, rep), witness_text);
    return rep.pass() ? kOk : kDiscrepancy;
  }

  int verify_cmd(unsigned d, const std::string& f_text, const std::string& a_text,
                 const std::string& b_text) {
    const Word f = parse_word(f_text);
    const Word a = parse_word(a_text);
    const Word b = parse_word(b_text);
    if (f.empty()) throw UsageError("forbidden factor must be non-empty");
    const VerificationReport rep = verify_critical(d, f, a, b);
    emit(to_json(rep, f, a, b), verify_text);
    return rep.pass() ? kOk : kDiscrepancy;
  }

  int isometric_cmd(unsigned d, const std::string& text) {
    const CubeSpec spec(d, parse_word(text));
    const VertexSet vs = enumerate_vertices(spec, opts_);
    const IsometryResult res = is_isometric(vs, opts_);
    nlohmann::ordered_json j = {{"d", d}, {"f", spec.f.str()}, {"vertices", vs.count()},
                                {"isometric", res.isometric}};
    if (res.witness) j["witness"] = to_json(*res.witness);
    emit(j, [](const nlohmann::ordered_json& r) {
      std::string s = "Q_" + std::to_string(r["d"].get<unsigned>()) + "(" +
                      r["f"].get<std::string>() + "): " + std::to_string(r["vertices"].get<std::uint64_t>()) +
                      " vertices, " + (r["isometric"].get<bool>() ? "isometric" : "not isometric") + "\n";
      if (r.contains("witness")) {
        const auto& w = r["witness"];
        s += "witness    p=" + std::to_string(w["p"].get<unsigned>()) + " alpha=" +
             w["alpha"].get<std::string>() + " beta=" + w["beta"].get<std::string>() + "\n";
      }
      return s;
    });
    return kOk;
  }

  int sweep_cmd(SweepConfig cfg) {
    cfg.workers = g_.workers;
    cfg.d_max = g_.d_max;
    if (cfg.bound < 1) throw UsageError("bound must be >= 1");
    if (cfg.cap > cfg.d_max) {
      throw ResourceLimitError("cap " + std::to_string(cfg.cap) + " exceeds d-max " +
                                   std::to_string(cfg.d_max),
                               cfg.d_max);
    }
    const SweepOutcome outcome = run_sweep(cfg);
    for (const auto& r : outcome.records) {
      if (g_.json) {
        out_ << to_json(r).dump() << "\n";
      } else {
        out_ << sweep_line(r) << "\n";
      }
    }
    const auto summary = outcome.summary(cfg);
    if (g_.json) {
      out_ << summary.dump() << "\n";
    } else {
      out_ << "summary    " << summary["scope"].get<std::string>() << " bound=" << cfg.bound
           << " cap=" << cfg.cap << ": " << outcome.records.size() << " total, " << outcome.passed
           << " pass, " << outcome.failed << " fail, " << outcome.skipped << " skipped"
           << (outcome.budget_exhausted ? " (time budget exhausted)" : "") << "\n";
    }
    if (outcome.failed > 0) return kDiscrepancy;
    if (outcome.budget_exhausted) return kCapExceeded;
    return kOk;
  }

 private:
  template <typename TextFn>
  void emit(const nlohmann::ordered_json& j, TextFn text) {
    if (g_.json) {
      out_ << j.dump() << "\n";
    } else {
      out_ << text(j);
    }
  }

  static std::string sweep_line(const SweepRecord& r) {
    std::string s = r.status;
    s.resize(8, ' ');
    s += r.row + "  " + r.params_text + "  f=" + r.f;
    for (const char* key : {"expected", "brute", "d0", "violated_clause", "reason"}) {
      if (!r.detail.contains(key)) continue;
      const auto& v = r.detail[key];
      s += std::string("  ") + key + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    return s;
  }

  const Globals& g_;
  std::ostream& out_;
  std::ostream& err_;
  SearchOptions opts_;
};

}  // namespace

Environment process_environment() {
  return [](const std::string& name) -> std::optional<std::string> {
    if (const char* v = std::getenv(name.c_str())) return std::string(v);
    return std::nullopt;
  };
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const Environment& env) {
  CLI::App app{"Index and isometry queries for generalized Fibonacci cubes Q_d(f)", "fibcube"};
  app.set_version_flag("--version", "fibcube 0.1.0");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  unsigned d_max_flag = 0;
  app.add_flag("--json", g.json, "Emit JSON (one object per line)");
  app.add_option("--workers", g.workers, "Worker threads")->check(CLI::PositiveNumber);
  auto* d_max_opt = app.add_option("--d-max", d_max_flag, "Enumeration hard limit (env FIBCUBE_D_MAX)");

  std::string word;
  auto* classify_sub = app.add_subcommand("classify", "Closed-form classification of a word");
  classify_sub->add_option("word", word, "Binary word")->required();

  unsigned cap = 18;
  auto* index_sub = app.add_subcommand("index", "Resolve B(f): closed form cross-checked by brute force");
  index_sub->add_option("word", word, "Binary word")->required();
  index_sub->add_option("--cap", cap, "Largest dimension to brute force")->capture_default_str();

  std::string source;
  std::vector<std::string> positional_params;
  std::vector<std::string> flag_params;
  auto* witness_sub = app.add_subcommand("witness", "Build and verify a critical pair from a template");
  witness_sub->add_option("row", source, "Template source, e.g. T2.9 or L2.5")->required();
  witness_sub->add_option("kv", positional_params, "Parameters key=value");
  witness_sub->add_option("--params", flag_params, "Parameters key=value (x=1,1 y=2,1)");

  unsigned d = 0;
  std::string f_text, alpha_text, beta_text;
  auto* verify_sub = app.add_subcommand("verify", "Check that (alpha, beta) is critical in Q_d(f)");
  verify_sub->add_option("d", d, "Dimension")->required();
  verify_sub->add_option("f", f_text, "Forbidden factor")->required();
  verify_sub->add_option("alpha", alpha_text, "First word")->required();
  verify_sub->add_option("beta", beta_text, "Second word")->required();

  auto* iso_sub = app.add_subcommand("isometric", "Decide whether Q_d(f) embeds isometrically");
  iso_sub->add_option("d", d, "Dimension")->required();
  iso_sub->add_option("word", word, "Forbidden factor")->required();

  std::string scope_name;
  SweepConfig sweep;
  double max_seconds = 0;
  auto* sweep_sub = app.add_subcommand("sweep", "Reproduce a table or verify templates over a parameter box");
  sweep_sub->add_option("scope", scope_name, "table1, table2, lemmas or witnesses")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "lemmas", "witnesses"}));
  sweep_sub->add_option("--bound", sweep.bound, "Largest run length")->capture_default_str();
  sweep_sub->add_option("--cap", sweep.cap, "Largest dimension checked")->capture_default_str();
  auto* seconds_opt = sweep_sub->add_option("--max-seconds", max_seconds, "Time budget")
                          ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (d_max_opt->count() > 0) g.d_max_flag = d_max_flag;
    g.d_max = resolve_d_max(g, env);
    Runner run(g, out, err);
    if (classify_sub->parsed()) return run.classify_cmd(word);
    if (index_sub->parsed()) return run.index_cmd(word, cap);
    if (witness_sub->parsed()) {
      positional_params.insert(positional_params.end(), flag_params.begin(), flag_params.end());
      return run.witness_cmd(source, positional_params);
    }
    if (verify_sub->parsed()) return run.verify_cmd(d, f_text, alpha_text, beta_text);
    if (iso_sub->parsed()) return run.isometric_cmd(d, word);
    sweep.scope = *parse_scope(scope_name);
    if (seconds_opt->count() > 0) sweep.max_seconds = max_seconds;
    return run.sweep_cmd(sweep);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (position " << e.position() << ")\n";
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const DeadlineExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace fibcube::cli
