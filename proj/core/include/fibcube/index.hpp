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

#ifndef FIBCUBE_INDEX_HPP
#define FIBCUBE_INDEX_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fibcube/classify.hpp"
#include "fibcube/cube.hpp"
#include "fibcube/word.hpp"

namespace fibcube {

struct KnownGood {
  ClassRow row;
  friend bool operator==(const KnownGood&, const KnownGood&) = default;
};

struct KnownBad {
  unsigned index = 0;
  ClassRow row;
  friend bool operator==(const KnownBad&, const KnownBad&) = default;
};

struct BruteForced {
  unsigned index = 0;
  CriticalPair witness;  // witness.d == index
  friend bool operator==(const BruteForced&, const BruteForced&) = default;
};

/// Q_d(f) is isometric for every d up to `cap`; goodness is not implied.
struct UndecidedUpTo {
  unsigned cap = 0;
  friend bool operator==(const UndecidedUpTo&, const UndecidedUpTo&) = default;
};

using IndexVerdict = std::variant<KnownGood, KnownBad, BruteForced, UndecidedUpTo>;

/// Finite B(f) carried by the verdict, if any.
std::optional<unsigned> index_of(const IndexVerdict& v);
std::string_view kind_name(const IndexVerdict& v);

/// Checks d = |f|, |f|+1, ..., cap and stops at the first non-isometric
/// dimension, which is B(f) since non-isometry persists upwards.
/// Throws PreconditionError when cap < |f|, ResourceLimitError when cap
/// exceeds options.d_max.
IndexVerdict brute_index(const Word& f, unsigned cap, const SearchOptions& options = {});

enum class Agreement {
  Agree,        // closed form and brute force agree up to cap
  Discrepancy,  // they disagree, or the closed form is inconsistent
  Unchecked,    // closed form index lies beyond cap
  BruteOnly,    // no closed form; verdict is brute force
};

std::string_view to_string(Agreement a) noexcept;

struct Resolution {
  IndexVerdict verdict;
  ClosedForm closed_form;
  std::optional<IndexVerdict> brute;
  Agreement agreement = Agreement::BruteOnly;
  std::vector<std::string> provenance;
  std::vector<std::string> diagnostics;
};

/// Closed form first, cross-checked by brute force within cap; brute force
/// alone when no closed form applies.
Resolution resolve_index(const Word& f, unsigned cap, const SearchOptions& options = {});

}  // namespace fibcube

#endif  // FIBCUBE_INDEX_HPP
