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

#ifndef FIBCUBE_CLI_REPORT_HPP
#define FIBCUBE_CLI_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "fibcube/classify.hpp"
#include "fibcube/cube.hpp"
#include "fibcube/index.hpp"
#include "fibcube/witness.hpp"

namespace fibcube::cli {

using nlohmann::ordered_json;

std::string block_notation(const Word& f);  // "1^2 0^1 1^1 0^2"

ordered_json to_json(const RowMatch& m);
ordered_json to_json(const CriticalPair& w);
ordered_json to_json(const VerificationReport& r, const Word& f, const Word& alpha,
                     const Word& beta);
ordered_json to_json(const Theorem11Verdict& v);

/// Summary verdict of the closed-form layer alone.
std::string closed_form_verdict(const ClosedForm& cf);
std::vector<std::string> closed_form_provenance(const ClosedForm& cf);

ordered_json classify_report(const Word& f, const ClosedForm& cf);
ordered_json index_report(const Word& f, unsigned cap, const Resolution& r);
ordered_json witness_report(const WitnessRecipe& recipe, const WitnessTemplate& tmpl,
                            const VerificationReport& report);

std::string classify_text(const ordered_json& report);
std::string index_text(const ordered_json& report);
std::string witness_text(const ordered_json& report);
std::string verify_text(const ordered_json& report);

}  // namespace fibcube::cli

#endif  // FIBCUBE_CLI_REPORT_HPP
