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

#ifndef FIBCUBE_CLI_SWEEP_HPP
#define FIBCUBE_CLI_SWEEP_HPP

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fibcube/cube.hpp"

namespace fibcube::cli {

enum class Scope { Table1, Table2, Lemmas, Witnesses };

std::optional<Scope> parse_scope(const std::string& name);
std::string_view to_string(Scope s) noexcept;

struct SweepConfig {
  Scope scope = Scope::Table2;
  unsigned bound = 3;
  unsigned cap = 12;
  unsigned workers = 1;
  unsigned d_max = kDefaultDMax;
  std::optional<double> max_seconds;
};

struct SweepRecord {
  std::string row;
  std::vector<unsigned> params;
  std::string params_text;
  std::string f;
  std::string status;  // "pass", "fail", "skipped"
  nlohmann::ordered_json detail;
};

struct SweepOutcome {
  std::vector<SweepRecord> records;  // ordered by (row id, params)
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  bool budget_exhausted = false;

  nlohmann::ordered_json summary(const SweepConfig& config) const;
};

SweepOutcome run_sweep(const SweepConfig& config);

nlohmann::ordered_json to_json(const SweepRecord& r);

}  // namespace fibcube::cli

#endif  // FIBCUBE_CLI_SWEEP_HPP
