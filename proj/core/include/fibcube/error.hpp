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

#ifndef FIBCUBE_ERROR_HPP
#define FIBCUBE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fibcube {

// Non-binary input text. `position` is 1-based.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A caller violated an operation's precondition (empty factor, length
// mismatch, inadmissible witness parameters, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A dimension exceeded the configured enumeration cap.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, unsigned limit)
      : std::runtime_error(what), limit_(limit) {}

  unsigned limit() const noexcept { return limit_; }

 private:
  unsigned limit_;
};

// A search was abandoned because its deadline passed.
class DeadlineExceeded : public std::runtime_error {
 public:
  DeadlineExceeded() : std::runtime_error("deadline exceeded") {}
};

}  // namespace fibcube

#endif  // FIBCUBE_ERROR_HPP
