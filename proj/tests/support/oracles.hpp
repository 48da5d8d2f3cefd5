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

// Independent reference implementations for tests. Everything here works
// on std::string words and plain loops; nothing reuses the library's
// bitset or neighbour-descent code paths.

#ifndef FIBCUBE_TESTS_ORACLES_HPP
#define FIBCUBE_TESTS_ORACLES_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

inline bool contains(const std::string& mu, const std::string& f) {
  if (f.size() > mu.size()) return false;
  for (std::size_t o = 0; o + f.size() <= mu.size(); ++o) {
    bool match = true;
    for (std::size_t j = 0; j < f.size() && match; ++j) match = mu[o + j] == f[j];
    if (match) return true;
  }
  return false;
}

inline std::string to_bits(std::uint64_t x, unsigned d) {
  std::string s(d, '0');
  for (unsigned i = 0; i < d; ++i) {
    if ((x >> (d - 1 - i)) & 1U) s[i] = '1';
  }
  return s;
}

inline std::vector<std::string> all_words(unsigned d) {
  std::vector<std::string> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << d); ++x) out.push_back(to_bits(x, d));
  return out;
}

/// All non-empty words of length <= max_len, shortest first.
inline std::vector<std::string> words_up_to(unsigned max_len) {
  std::vector<std::string> out;
  for (unsigned len = 1; len <= max_len; ++len) {
    for (auto& w : all_words(len)) out.push_back(w);
  }
  return out;
}

inline std::vector<std::string> vertices(unsigned d, const std::string& f) {
  std::vector<std::string> out;
  for (auto& w : all_words(d)) {
    if (!contains(w, f)) out.push_back(w);
  }
  return out;
}

inline unsigned hamming(const std::string& a, const std::string& b) {
  unsigned n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a[i] != b[i];
  return n;
}

inline std::string flip(std::string w, std::size_t i0) {
  w[i0] = w[i0] == '0' ? '1' : '0';
  return w;
}

constexpr unsigned kUnreachable = std::numeric_limits<unsigned>::max();

/// BFS distances from `src` inside Q_d(f), keyed by word.
inline std::map<std::string, unsigned> bfs(const std::string& src, const std::string& f) {
  std::map<std::string, unsigned> dist{{src, 0}};
  std::queue<std::string> q;
  q.push(src);
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (std::size_t i = 0; i < u.size(); ++i) {
      auto v = flip(u, i);
      if (contains(v, f) || dist.count(v)) continue;
      dist[v] = dist[u] + 1;
      q.push(v);
    }
  }
  return dist;
}

inline unsigned distance(const std::string& a, const std::string& b, const std::string& f) {
  auto dist = bfs(a, f);
  auto it = dist.find(b);
  return it == dist.end() ? kUnreachable : it->second;
}

/// The definition: every pair of vertices is at graph distance equal to
/// Hamming distance.
inline bool isometric_by_definition(unsigned d, const std::string& f) {
  const auto vs = vertices(d, f);
  for (const auto& a : vs) {
    const auto dist = bfs(a, f);
    for (const auto& b : vs) {
      auto it = dist.find(b);
      if (it == dist.end() || it->second != hamming(a, b)) return false;
    }
  }
  return true;
}

/// Smallest B with Q_B(f) not isometric, by definition, or 0 if none up to cap.
inline unsigned index_by_definition(const std::string& f, unsigned cap) {
  for (unsigned d = 1; d <= cap; ++d) {
    if (!isometric_by_definition(d, f)) return d;
  }
  return 0;
}

struct Pair {
  unsigned p;
  std::string alpha;
  std::string beta;
  friend bool operator==(const Pair&, const Pair&) = default;
};

/// All-pairs scan for the lexicographically smallest (p, alpha, beta) with
/// alpha blocked towards beta and p <= p_max.
inline std::optional<Pair> min_critical_pair(unsigned d, const std::string& f, unsigned p_max) {
  const auto vs = vertices(d, f);
  std::optional<Pair> best;
  for (const auto& a : vs) {
    for (const auto& b : vs) {
      const unsigned p = hamming(a, b);
      if (p < 2 || p > p_max) continue;
      bool blocked = true;
      for (std::size_t i = 0; i < d && blocked; ++i) {
        if (a[i] != b[i] && !contains(flip(a, i), f)) blocked = false;
      }
      if (!blocked) continue;
      Pair c{p, a, b};
      if (!best || std::tie(c.p, c.alpha, c.beta) < std::tie(best->p, best->alpha, best->beta)) {
        best = c;
      }
    }
  }
  return best;
}

/// a_1 = 2, a_2 = 3, a_d = a_{d-1} + a_{d-2}.
inline std::uint64_t fibonacci_vertices(unsigned d) {
  std::uint64_t a = 2, b = 3;
  if (d == 1) return a;
  for (unsigned i = 2; i < d; ++i) {
    const auto c = a + b;
    a = b;
    b = c;
  }
  return b;
}

inline std::string random_word(std::mt19937_64& rng, unsigned len) {
  std::string s(len, '0');
  for (auto& c : s) c = (rng() & 1U) ? '1' : '0';
  return s;
}

}  // namespace oracle

#endif  // FIBCUBE_TESTS_ORACLES_HPP
