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

#ifndef FIBCUBE_WORD_HPP
#define FIBCUBE_WORD_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fibcube {

/// A finite binary string b_1 b_2 ... b_d.
///
/// Positions are 1-based and position 1 is the leftmost bit, both in the
/// text encoding and in every accessor taking a position. The null string
/// is the default-constructed Word.
class Word {
 public:
  Word() = default;

  /// Throws PreconditionError if any element is not 0 or 1.
  explicit Word(std::vector<std::uint8_t> bits);

  /// `count` copies of `digit` (0 or 1).
  static Word uniform(int digit, std::size_t count);

  /// Decodes the low `length` bits of `pattern`; the most significant of
  /// those bits becomes position 1. Requires length <= 64.
  static Word from_pattern(std::uint64_t pattern, unsigned length);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  /// Bit at 1-based `position`; throws std::out_of_range.
  int at(std::size_t position) const;

  /// This word with the bit at 1-based `position` inverted (alpha + e_i).
  Word flipped(std::size_t position) const;

  /// Inverse of from_pattern. Requires size() <= 64.
  std::uint64_t pattern() const;

  std::string str() const;
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  Word& append(int digit, std::size_t count = 1);
  Word& append(const Word& tail);

  friend bool operator==(const Word&, const Word&) = default;
  // Lexicographic with 0 < 1; a proper prefix sorts first.
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Accepts only '0' and '1'. Empty text yields the null string. Throws
/// ParseError carrying the 1-based position of the first bad character.
Word parse_word(std::string_view text);

Word complement(const Word& w);
Word reverse(const Word& w);

/// {w, complement(w), reverse(w), reverse(complement(w))}, in that order.
std::array<Word, 4> orbit(const Word& w);

/// Lexicographically smallest orbit member. Throws on the null string.
Word orbit_canonical(const Word& w);

/// True iff `f` occurs as |f| consecutive bits of `mu`. Throws
/// PreconditionError on an empty factor.
bool contains_factor(const Word& mu, const Word& f);

/// Number of differing positions. Throws PreconditionError when the
/// lengths differ.
std::size_t hamming(const Word& a, const Word& b);

}  // namespace fibcube

#endif  // FIBCUBE_WORD_HPP
