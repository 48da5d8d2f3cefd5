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

#include "fibcube/word.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "fibcube/error.hpp"

namespace fibcube {

Word::Word(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] > 1) {
      throw PreconditionError("bit " + std::to_string(i + 1) + " is not binary");
    }
  }
}

Word Word::uniform(int digit, std::size_t count) {
  Word w;
  w.append(digit, count);
  return w;
}

Word Word::from_pattern(std::uint64_t pattern, unsigned length) {
  if (length > 64) throw PreconditionError("pattern length exceeds 64 bits");
  Word w;
  w.bits_.resize(length);
  for (unsigned i = 0; i < length; ++i) {
    w.bits_[i] = static_cast<std::uint8_t>((pattern >> (length - 1 - i)) & 1U);
  }
  return w;
}

int Word::at(std::size_t position) const {
  if (position == 0 || position > bits_.size()) {
    throw std::out_of_range("position " + std::to_string(position) + " outside word of length " +
                            std::to_string(bits_.size()));
  }
  return bits_[position - 1];
}

Word Word::flipped(std::size_t position) const {
  Word w = *this;
  w.bits_.at(position - 1) ^= 1U;
  return w;
}

std::uint64_t Word::pattern() const {
  if (bits_.size() > 64) throw PreconditionError("word longer than 64 bits has no pattern");
  std::uint64_t p = 0;
  for (auto b : bits_) p = (p << 1) | b;
  return p;
}

std::string Word::str() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

Word& Word::append(int digit, std::size_t count) {
  if (digit != 0 && digit != 1) throw PreconditionError("digit must be 0 or 1");
  bits_.insert(bits_.end(), count, static_cast<std::uint8_t>(digit));
  return *this;
}

Word& Word::append(const Word& tail) {
  bits_.insert(bits_.end(), tail.bits_.begin(), tail.bits_.end());
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

Word parse_word(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw ParseError("invalid character '" + std::string(1, c) + "' at position " +
                           std::to_string(i + 1) + " (expected '0' or '1')",
                       i + 1);
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Word(std::move(bits));
}

Word complement(const Word& w) {
  std::vector<std::uint8_t> bits(w.bits().begin(), w.bits().end());
  for (auto& b : bits) b ^= 1U;
  return Word(std::move(bits));
}

Word reverse(const Word& w) {
  return Word(std::vector<std::uint8_t>(w.bits().rbegin(), w.bits().rend()));
}

std::array<Word, 4> orbit(const Word& w) {
  Word c = complement(w);
  Word r = reverse(w);
  Word rc = reverse(c);
  return {w, std::move(c), std::move(r), std::move(rc)};
}

Word orbit_canonical(const Word& w) {
  if (w.empty()) throw PreconditionError("orbit of the null string is undefined");
  auto members = orbit(w);
  return *std::min_element(members.begin(), members.end());
}

bool contains_factor(const Word& mu, const Word& f) {
  if (f.empty()) throw PreconditionError("empty factor");
  const auto hay = mu.bits();
  const auto needle = f.bits();
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

std::size_t hamming(const Word& a, const Word& b) {
  if (a.size() != b.size()) {
    throw PreconditionError("hamming distance needs equal lengths (" + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()) + ")");
  }
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a.bits()[i] != b.bits()[i];
  return n;
}

}  // namespace fibcube
