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

#ifndef FIBCUBE_BLOCKS_HPP
#define FIBCUBE_BLOCKS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibcube/word.hpp"

namespace fibcube {

/// One maximal run of equal digits.
struct Run {
  std::uint8_t digit = 0;
  std::size_t length = 0;

  friend bool operator==(const Run&, const Run&) = default;
};

/// Run-length decomposition of a non-empty word. Adjacent runs always
/// carry different digits.
struct BlockForm {
  std::vector<Run> runs;

  std::size_t count() const noexcept { return runs.size(); }
  Word expand() const;

  friend bool operator==(const BlockForm&, const BlockForm&) = default;
};

/// Throws PreconditionError on the null string.
BlockForm blocks(const Word& w);

/// 1^{x_1} 0^{y_1} ... 1^{x_n} 0^{y_n} with n >= 2 and every exponent >= 1.
struct EvenBlockForm {
  std::vector<unsigned> x;
  std::vector<unsigned> y;

  EvenBlockForm() = default;
  /// Throws PreconditionError unless sizes match, n >= 2, and all >= 1.
  EvenBlockForm(std::vector<unsigned> ones, std::vector<unsigned> zeros);

  std::size_t n() const noexcept { return x.size(); }
  Word word() const;

  /// The other 1-leading member of the orbit: reverse(complement(word())),
  /// i.e. x' = (y_n, ..., y_1), y' = (x_n, ..., x_1).
  EvenBlockForm mirrored() const;

  /// Decodes a word that starts with 1, ends with 0 and has an even number
  /// (>= 4) of blocks; empty otherwise.
  static std::optional<EvenBlockForm> from_word(const Word& w);

  std::string str() const;  // "x=(2,1) y=(1,2)"

  friend bool operator==(const EvenBlockForm&, const EvenBlockForm&) = default;
  friend auto operator<=>(const EvenBlockForm&, const EvenBlockForm&) = default;
};

/// 1^r 0^s 1^t 0^k with r, s, t, k >= 1.
struct FourBlockParams {
  unsigned r = 1;
  unsigned s = 1;
  unsigned t = 1;
  unsigned k = 1;

  FourBlockParams() = default;
  /// Throws PreconditionError if any parameter is 0.
  FourBlockParams(unsigned r, unsigned s, unsigned t, unsigned k);

  Word word() const;
  unsigned length() const noexcept { return r + s + t + k; }

  /// Parameters of reverse(complement(word())): (k, t, s, r).
  FourBlockParams reversed() const noexcept;

  /// Decodes 1^r 0^s 1^t 0^k; empty for any other shape.
  static std::optional<FourBlockParams> from_word(const Word& w);

  EvenBlockForm as_even() const { return EvenBlockForm({r, t}, {s, k}); }

  std::string str() const;  // "r=1 s=2 t=1 k=1"

  friend bool operator==(const FourBlockParams&, const FourBlockParams&) = default;
  friend auto operator<=>(const FourBlockParams&, const FourBlockParams&) = default;
};

/// Any orbit member of a 4-block word, expressed in 1-leading form.
std::optional<FourBlockParams> four_block_params(const Word& w);

}  // namespace fibcube

#endif  // FIBCUBE_BLOCKS_HPP
