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

#ifndef FIBCUBE_AFFINE_HPP
#define FIBCUBE_AFFINE_HPP

#include <map>
#include <string>

namespace fibcube {

using Bindings = std::map<std::string, long long>;

/// c_0 + sum_i c_i * v_i over named integer variables. Used for index
/// formulas and for template exponents so lengths can be compared
/// symbolically.
class Affine {
 public:
  Affine() = default;
  Affine(long long constant) : constant_(constant) {}  // NOLINT(google-explicit-constructor)

  static Affine var(const std::string& name, long long coeff = 1);

  long long constant() const noexcept { return constant_; }
  const std::map<std::string, long long>& terms() const noexcept { return terms_; }

  /// Throws PreconditionError for an unbound variable.
  long long evaluate(const Bindings& values) const;

  /// "2s+k+4", "x1-2", "0". Variables print in name order.
  std::string str() const;

  Affine& operator+=(const Affine& o);
  Affine& operator-=(const Affine& o);
  Affine& operator*=(long long c);

  friend Affine operator+(Affine a, const Affine& b) { return a += b; }
  friend Affine operator-(Affine a, const Affine& b) { return a -= b; }
  friend Affine operator*(long long c, Affine a) { return a *= c; }
  friend Affine operator*(Affine a, long long c) { return a *= c; }

  friend bool operator==(const Affine&, const Affine&) = default;

 private:
  void prune();

  long long constant_ = 0;
  std::map<std::string, long long> terms_;
};

}  // namespace fibcube

#endif  // FIBCUBE_AFFINE_HPP
