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

#include "fibcube/blocks.hpp"

#include <sstream>

#include "fibcube/error.hpp"

namespace fibcube {

Word BlockForm::expand() const {
  Word w;
  for (const auto& run : runs) w.append(run.digit, run.length);
  return w;
}

BlockForm blocks(const Word& w) {
  if (w.empty()) throw PreconditionError("block form of the null string is undefined");
  BlockForm form;
  for (auto b : w.bits()) {
    if (!form.runs.empty() && form.runs.back().digit == b) {
      ++form.runs.back().length;
    } else {
      form.runs.push_back({b, 1});
    }
  }
  return form;
}

EvenBlockForm::EvenBlockForm(std::vector<unsigned> ones, std::vector<unsigned> zeros)
    : x(std::move(ones)), y(std::move(zeros)) {
  if (x.size() != y.size()) throw PreconditionError("x and y must have the same length");
  if (x.size() < 2) throw PreconditionError("an even block form needs n >= 2");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0 || y[i] == 0) throw PreconditionError("block lengths must be positive");
  }
}

Word EvenBlockForm::word() const {
  Word w;
  for (std::size_t i = 0; i < x.size(); ++i) w.append(1, x[i]).append(0, y[i]);
  return w;
}

EvenBlockForm EvenBlockForm::mirrored() const {
  return EvenBlockForm(std::vector<unsigned>(y.rbegin(), y.rend()),
                       std::vector<unsigned>(x.rbegin(), x.rend()));
}

std::optional<EvenBlockForm> EvenBlockForm::from_word(const Word& w) {
  if (w.empty()) return std::nullopt;
  const auto form = blocks(w);
  if (form.count() < 4 || form.count() % 2 != 0 || form.runs.front().digit != 1) {
    return std::nullopt;
  }
  std::vector<unsigned> ones, zeros;
  for (std::size_t i = 0; i < form.count(); i += 2) {
    ones.push_back(static_cast<unsigned>(form.runs[i].length));
    zeros.push_back(static_cast<unsigned>(form.runs[i + 1].length));
  }
  return EvenBlockForm(std::move(ones), std::move(zeros));
}

namespace {

std::string join(const std::vector<unsigned>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

std::string EvenBlockForm::str() const { return "x=(" + join(x) + ") y=(" + join(y) + ")"; }

FourBlockParams::FourBlockParams(unsigned r_, unsigned s_, unsigned t_, unsigned k_)
    : r(r_), s(s_), t(t_), k(k_) {
  if (r == 0 || s == 0 || t == 0 || k == 0) {
    throw PreconditionError("r, s, t, k must all be >= 1");
  }
}

Word FourBlockParams::word() const {
  Word w;
  w.append(1, r).append(0, s).append(1, t).append(0, k);
  return w;
}

FourBlockParams FourBlockParams::reversed() const noexcept {
  FourBlockParams p;
  p.r = k;
  p.s = t;
  p.t = s;
  p.k = r;
  return p;
}

std::optional<FourBlockParams> FourBlockParams::from_word(const Word& w) {
  auto even = EvenBlockForm::from_word(w);
  if (!even || even->n() != 2) return std::nullopt;
  return FourBlockParams(even->x[0], even->y[0], even->x[1], even->y[1]);
}

std::string FourBlockParams::str() const {
  return "r=" + std::to_string(r) + " s=" + std::to_string(s) + " t=" + std::to_string(t) +
         " k=" + std::to_string(k);
}

std::optional<FourBlockParams> four_block_params(const Word& w) {
  if (w.empty()) return std::nullopt;
  return FourBlockParams::from_word(w.at(1) == 1 ? w : complement(w));
}

}  // namespace fibcube
