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

#include "fibcube/affine.hpp"

#include <sstream>

#include "fibcube/error.hpp"

namespace fibcube {

Affine Affine::var(const std::string& name, long long coeff) {
  Affine a;
  a.terms_[name] = coeff;
  a.prune();
  return a;
}

long long Affine::evaluate(const Bindings& values) const {
  long long v = constant_;
  for (const auto& [name, coeff] : terms_) {
    auto it = values.find(name);
    if (it == values.end()) throw PreconditionError("unbound variable '" + name + "'");
    v += coeff * it->second;
  }
  return v;
}

std::string Affine::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, coeff] : terms_) {
    if (coeff < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    const long long mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) os << mag;
    os << name;
    first = false;
  }
  if (constant_ != 0 || first) {
    if (constant_ >= 0 && !first) os << '+';
    os << constant_;
  }
  return os.str();
}

Affine& Affine::operator+=(const Affine& o) {
  constant_ += o.constant_;
  for (const auto& [name, coeff] : o.terms_) terms_[name] += coeff;
  prune();
  return *this;
}

Affine& Affine::operator-=(const Affine& o) {
  constant_ -= o.constant_;
  for (const auto& [name, coeff] : o.terms_) terms_[name] -= coeff;
  prune();
  return *this;
}

Affine& Affine::operator*=(long long c) {
  constant_ *= c;
  for (auto& [name, coeff] : terms_) coeff *= c;
  prune();
  return *this;
}

void Affine::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

}  // namespace fibcube
