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

#include "fibcube_cli/report.hpp"

#include <sstream>
#include <variant>

namespace fibcube::cli {

namespace {

ordered_json optional_index(const std::optional<unsigned>& b) {
  return b ? ordered_json(*b) : ordered_json(nullptr);
}

std::string side_name(BlockedSide s) { return s == BlockedSide::Alpha ? "alpha" : "beta"; }

std::string describe_index(const ordered_json& b) {
  return b.is_null() ? "good" : "B=" + std::to_string(b.get<unsigned>());
}

}  // namespace

std::string block_notation(const Word& f) {
  std::string out;
  for (const auto& run : blocks(f).runs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(run.digit) + "^" + std::to_string(run.length);
  }
  return out;
}

ordered_json to_json(const RowMatch& m) {
  return {{"id", m.row.id},
          {"table", to_string(m.row.table)},
          {"condition", m.row.condition},
          {"formula", m.row.formula},
          {"via_reversal", m.row.via_reversal},
          {"form", m.form.str()},
          {"B", optional_index(m.index)}};
}

ordered_json to_json(const CriticalPair& w) {
  return {{"d", w.d},
          {"alpha", w.alpha.str()},
          {"beta", w.beta.str()},
          {"p", w.p},
          {"blocked_side", side_name(w.blocked_side)}};
}

ordered_json to_json(const VerificationReport& r, const Word& f, const Word& alpha,
                     const Word& beta) {
  return {{"d", r.d},
          {"f", f.str()},
          {"alpha", alpha.str()},
          {"beta", beta.str()},
          {"p", r.p},
          {"alpha_avoids_f", r.alpha_avoids},
          {"beta_avoids_f", r.beta_avoids},
          {"alpha_blocked", r.alpha_blocked},
          {"beta_blocked", r.beta_blocked},
          {"differing", r.differing},
          {"pass", r.pass()},
          {"violated_clause", r.pass() ? ordered_json(nullptr) : ordered_json(r.violated_clause())}};
}

ordered_json to_json(const Theorem11Verdict& v) {
  if (const auto* good = std::get_if<GoodCandidate>(&v)) {
    return {{"kind", "good-candidate"}, {"case", good->id()}, {"form", good->form.str()}};
  }
  const auto& bad = std::get<BadByLemma>(v);
  ordered_json lemmas = ordered_json::array();
  for (const auto& l : bad.lemmas) {
    lemmas.push_back({{"id", l.id}, {"form", l.form.str()}, {"d0", l.d0},
                      {"via_reversal", l.via_reversal}});
  }
  return {{"kind", "bad-by-lemma"}, {"d0", bad.d0}, {"lemmas", lemmas}};
}

std::string closed_form_verdict(const ClosedForm& cf) {
  if (!cf.consistent()) return "inconsistent";
  if (cf.exact_index()) return "known-bad";
  if (cf.known_good()) return "known-good";
  if (cf.necessity) {
    return std::holds_alternative<GoodCandidate>(*cf.necessity) ? "good-candidate" : "bad-by-lemma";
  }
  return "unclassified";
}

std::vector<std::string> closed_form_provenance(const ClosedForm& cf) {
  std::vector<std::string> out;
  for (const auto& m : cf.rows) {
    out.push_back("closed-form:" + m.row.id + (m.row.via_reversal ? ":reversal" : ""));
  }
  if (cf.necessity) {
    if (const auto* good = std::get_if<GoodCandidate>(&*cf.necessity)) {
      out.push_back("necessity:" + good->id());
    } else {
      for (const auto& l : std::get<BadByLemma>(*cf.necessity).lemmas) {
        out.push_back("lemma:" + l.id + ":d0=" + std::to_string(l.d0));
      }
    }
  }
  return out;
}

ordered_json classify_report(const Word& f, const ClosedForm& cf) {
  ordered_json rows = ordered_json::array();
  for (const auto& m : cf.rows) rows.push_back(to_json(m));
  ordered_json j = {{"input", f.str()},
                    {"canonical", orbit_canonical(f).str()},
                    {"blocks", block_notation(f)},
                    {"rows", rows}};
  if (const auto b = cf.exact_index()) j["B"] = *b;
  j["verdict"] = closed_form_verdict(cf);
  if (const auto bound = cf.lemma_bound()) j["B_upper_bound"] = *bound;
  j["provenance"] = closed_form_provenance(cf);
  j["necessity"] = cf.necessity ? to_json(*cf.necessity) : ordered_json(nullptr);
  j["diagnostics"] = cf.diagnostics;
  return j;
}

ordered_json index_report(const Word& f, unsigned cap, const Resolution& r) {
  ordered_json rows = ordered_json::array();
  for (const auto& m : r.closed_form.rows) rows.push_back(to_json(m));
  ordered_json j = {{"input", f.str()},
                    {"canonical", orbit_canonical(f).str()},
                    {"cap", cap},
                    {"rows", rows}};
  if (const auto b = index_of(r.verdict)) j["B"] = *b;
  j["verdict"] = kind_name(r.verdict);
  if (const auto* good = std::get_if<KnownGood>(&r.verdict)) j["row"] = good->row.id;
  if (const auto* bad = std::get_if<KnownBad>(&r.verdict)) j["row"] = bad->row.id;
  if (const auto* u = std::get_if<UndecidedUpTo>(&r.verdict)) j["isometric_through"] = u->cap;
  j["agreement"] = to_string(r.agreement);
  j["provenance"] = r.provenance;
  const IndexVerdict* source = &r.verdict;
  if (!std::holds_alternative<BruteForced>(*source) && r.brute) source = &*r.brute;
  if (const auto* bf = std::get_if<BruteForced>(source)) j["witness"] = to_json(bf->witness);
  j["diagnostics"] = r.diagnostics;
  return j;
}

ordered_json witness_report(const WitnessRecipe& recipe, const WitnessTemplate& tmpl,
                            const VerificationReport& report) {
  return {{"source", recipe.source},
          {"params", describe(recipe.params)},
          {"f", recipe.f.str()},
          {"d0", recipe.d0},
          {"alpha", recipe.alpha.str()},
          {"beta", recipe.beta.str()},
          {"template", {{"alpha", render(tmpl.alpha)}, {"beta", render(tmpl.beta)},
                        {"d0", tmpl.d0.str()}}},
          {"verification", to_json(report, recipe.f, recipe.alpha, recipe.beta)}};
}

std::string classify_text(const ordered_json& j) {
  std::ostringstream os;
  os << "input      " << j["input"].get<std::string>() << "\n"
     << "canonical  " << j["canonical"].get<std::string>() << "\n"
     << "blocks     " << j["blocks"].get<std::string>() << "\n";
  for (const auto& row : j["rows"]) {
    os << "row        " << row["id"].get<std::string>() << "  " << row["condition"].get<std::string>()
       << "  on " << row["form"].get<std::string>()
       << (row["via_reversal"].get<bool>() ? " (via reversal)" : "") << "  -> "
       << describe_index(row["B"]);
    if (!row["formula"].get<std::string>().empty()) os << " [" << row["formula"].get<std::string>() << "]";
    os << "\n";
  }
  if (!j["necessity"].is_null()) {
    const auto& n = j["necessity"];
    if (n["kind"] == "good-candidate") {
      os << "necessity  good candidate, case " << n["case"].get<std::string>() << "\n";
    } else {
      for (const auto& l : n["lemmas"]) {
        os << "lemma      " << l["id"].get<std::string>() << " on " << l["form"].get<std::string>()
           << "  -> B <= " << l["d0"].get<unsigned>() << "\n";
      }
    }
  }
  os << "verdict    " << j["verdict"].get<std::string>();
  if (j.contains("B")) os << ", B=" << j["B"].get<unsigned>();
  os << "\n";
  for (const auto& d : j["diagnostics"]) os << "warning    " << d.get<std::string>() << "\n";
  return os.str();
}

std::string index_text(const ordered_json& j) {
  std::ostringstream os;
  os << "input      " << j["input"].get<std::string>() << "\n"
     << "verdict    " << j["verdict"].get<std::string>();
  if (j.contains("B")) os << ", B=" << j["B"].get<unsigned>();
  if (j.contains("row")) os << " (" << j["row"].get<std::string>() << ")";
  if (j.contains("isometric_through")) {
    os << ", isometric for every d <= " << j["isometric_through"].get<unsigned>();
  }
  os << "\nagreement  " << j["agreement"].get<std::string>() << " (cap " << j["cap"].get<unsigned>()
     << ")\n";
  for (const auto& p : j["provenance"]) os << "provenance " << p.get<std::string>() << "\n";
  if (j.contains("witness")) {
    const auto& w = j["witness"];
    os << "witness    d=" << w["d"].get<unsigned>() << " p=" << w["p"].get<unsigned>()
       << " alpha=" << w["alpha"].get<std::string>() << " beta=" << w["beta"].get<std::string>()
       << "\n";
  }
  for (const auto& d : j["diagnostics"]) os << "warning    " << d.get<std::string>() << "\n";
  return os.str();
}

std::string verify_text(const ordered_json& j) {
  std::ostringstream os;
  os << "d=" << j["d"].get<unsigned>() << " f=" << j["f"].get<std::string>() << "\n"
     << "alpha      " << j["alpha"].get<std::string>() << (j["alpha_avoids_f"].get<bool>() ? "" : "  contains f")
     << (j["alpha_blocked"].get<bool>() ? "  blocked" : "") << "\n"
     << "beta       " << j["beta"].get<std::string>() << (j["beta_avoids_f"].get<bool>() ? "" : "  contains f")
     << (j["beta_blocked"].get<bool>() ? "  blocked" : "") << "\n"
     << "p          " << j["p"].get<unsigned>() << "\n";
  if (j["pass"].get<bool>()) {
    os << "result     pass\n";
  } else {
    os << "result     fail: " << j["violated_clause"].get<std::string>() << "\n";
  }
  return os.str();
}

std::string witness_text(const ordered_json& j) {
  std::ostringstream os;
  os << "source     " << j["source"].get<std::string>() << "  " << j["params"].get<std::string>() << "\n"
     << "f          " << j["f"].get<std::string>() << "\n"
     << "d0         " << j["d0"].get<unsigned>() << "  [" << j["template"]["d0"].get<std::string>()
     << "]\n"
     << "alpha      " << j["template"]["alpha"].get<std::string>() << "\n"
     << "beta       " << j["template"]["beta"].get<std::string>() << "\n";
  os << verify_text(j["verification"]);
  return os.str();
}

}  // namespace fibcube::cli
