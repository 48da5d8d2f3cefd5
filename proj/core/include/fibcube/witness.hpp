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

#ifndef FIBCUBE_WITNESS_HPP
#define FIBCUBE_WITNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fibcube/affine.hpp"
#include "fibcube/blocks.hpp"
#include "fibcube/cube.hpp"
#include "fibcube/word.hpp"

namespace fibcube {

// ---------------------------------------------------------------------------
// Symbolic templates.

/// digit^{exponent}; exponents may evaluate to 0 (the run vanishes) but
/// never below.
struct TemplateRun {
  std::uint8_t digit = 0;
  Affine exponent;
};

struct WitnessTemplate {
  std::vector<TemplateRun> alpha;
  std::vector<TemplateRun> beta;
  Affine d0;
};

/// Sum of the exponents, as an affine expression.
Affine symbolic_length(const std::vector<TemplateRun>& runs);

/// Substitutes `values` into the runs. Zero exponents vanish; a negative
/// one throws PreconditionError naming the run, prefixed by `label`.
Word instantiate(const std::vector<TemplateRun>& runs, const Bindings& values,
                 std::string_view label = "template");

/// "1^{r} 0^{s-1} 0 ..." rendering.
std::string render(const std::vector<TemplateRun>& runs);

using WitnessParams = std::variant<FourBlockParams, EvenBlockForm>;

std::string describe(const WitnessParams& params);
Word forbidden_word(const WitnessParams& params);

/// Variables x1..xn, y1..yn.
Bindings bindings(const EvenBlockForm& e);

/// "L2.1".."L2.5", then "T2.5".."T2.15".
const std::vector<std::string>& witness_sources();
bool is_lemma_source(std::string_view source);

/// Builds the symbolic template of `source`; lemma templates depend on n.
/// Throws PreconditionError for an unknown source or a parameter kind the
/// source does not take.
WitnessTemplate witness_template(std::string_view source, const WitnessParams& params);

// ---------------------------------------------------------------------------
// Construction.

struct WitnessRecipe {
  std::string source;
  WitnessParams params;
  Word f;
  unsigned d0 = 0;
  Word alpha;
  Word beta;
};

/// Literal template substitution. Throws PreconditionError when the
/// parameters violate the source's constraints or an exponent is negative;
/// the message names the offending condition or template run.
WitnessRecipe construct(std::string_view source, const WitnessParams& params);

// ---------------------------------------------------------------------------
// Verification.

/// Result of checking the p-critical conditions directly on the words.
struct VerificationReport {
  unsigned d = 0;
  bool alpha_avoids = false;   // (i)
  bool beta_avoids = false;    // (ii)
  unsigned p = 0;              // (iii) needs p >= 2
  bool alpha_blocked = false;  // (iv) every differing-bit flip of alpha contains f
  bool beta_blocked = false;   //      ... or of beta
  std::vector<std::size_t> differing;  // 1-based

  bool pass() const noexcept {
    return alpha_avoids && beta_avoids && p >= 2 && (alpha_blocked || beta_blocked);
  }
  /// First failing clause: "alpha-contains-f", "beta-contains-f",
  /// "distance-below-2", "no-blocked-side"; empty on pass.
  std::string violated_clause() const;
};

/// Throws PreconditionError unless |alpha| = |beta| = d.
VerificationReport verify_critical(unsigned d, const Word& f, const Word& alpha, const Word& beta);

// ---------------------------------------------------------------------------
// Sweep.

std::vector<WitnessParams> admissible_params(std::string_view source, unsigned param_bound,
                                             const std::vector<unsigned>& lemma_n = {2, 3});

enum class SweepStatus { Pass, Fail, Skipped };
std::string_view to_string(SweepStatus s) noexcept;

struct WitnessSweepEntry {
  std::string source;
  WitnessParams params;
  SweepStatus status = SweepStatus::Skipped;
  std::optional<WitnessRecipe> recipe;
  std::optional<VerificationReport> report;
  // is_isometric(d0, f) == false, when d0 was within the cross-check cap.
  std::optional<bool> certifies_non_isometry;
  std::string message;
};

struct WitnessSweepOptions {
  unsigned param_bound = 3;
  std::vector<unsigned> lemma_n = {2, 3};
  std::vector<std::string> sources;  // empty: all
  // Optional separate bound for lemma sources (defaults to param_bound).
  std::optional<unsigned> lemma_param_bound;
  // Cross-check Table 2 recipes with is_isometric when d0 <= this.
  std::optional<unsigned> cross_check_cap;
  SearchOptions search;  // search.workers parallelizes over tuples
};

/// Entries ordered by source, then parameter tuple.
std::vector<WitnessSweepEntry> sweep_witnesses(const WitnessSweepOptions& options);

}  // namespace fibcube

#endif  // FIBCUBE_WITNESS_HPP
