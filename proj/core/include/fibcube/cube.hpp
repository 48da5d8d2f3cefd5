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

#ifndef FIBCUBE_CUBE_HPP
#define FIBCUBE_CUBE_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fibcube/word.hpp"

namespace fibcube {

inline constexpr unsigned kDefaultDMax = 24;
// Hard ceiling for d_max: the vertex bitset has 2^d entries.
inline constexpr unsigned kAbsoluteDMax = 32;

/// Q_d(f): the d-cube with every vertex containing f removed.
struct CubeSpec {
  unsigned d = 1;
  Word f;

  CubeSpec() = default;
  /// Throws PreconditionError unless d >= 1 and f is non-empty.
  CubeSpec(unsigned dimension, Word factor);

  /// d < |f|: nothing is removed and Q_d(f) = Q_d.
  bool is_full_cube() const noexcept { return d < f.size(); }
};

struct SearchOptions {
  unsigned d_max = kDefaultDMax;
  // Blocked sets up to this size are explored by subset enumeration; larger
  // ones (or ones whose 2^|B| exceeds |V|) scan the vertex list instead.
  unsigned subset_threshold = 24;
  unsigned workers = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // Isometry checks above this dimension report their cost through
  // on_warning.
  unsigned warn_above = 20;
  std::function<void(const std::string&)> on_warning;
};

/// Membership bitset over all 2^d patterns of length d. A pattern is the
/// integer whose most significant of d bits is position 1.
class VertexSet {
 public:
  const CubeSpec& spec() const noexcept { return spec_; }
  unsigned dimension() const noexcept { return spec_.d; }
  std::uint64_t universe_size() const noexcept { return std::uint64_t{1} << spec_.d; }
  std::uint64_t count() const noexcept { return count_; }

  bool contains(std::uint64_t pattern) const noexcept {
    return (bits_[pattern >> 6] >> (pattern & 63)) & 1U;
  }
  /// Requires |w| = d.
  bool contains(const Word& w) const;

  /// Members in increasing pattern order.
  std::vector<std::uint64_t> members() const;

 private:
  friend VertexSet enumerate_vertices(const CubeSpec&, const SearchOptions&);

  CubeSpec spec_;
  std::vector<std::uint64_t> bits_;
  std::uint64_t count_ = 0;
};

/// Throws ResourceLimitError when d exceeds options.d_max.
VertexSet enumerate_vertices(const CubeSpec& spec, const SearchOptions& options = {});

enum class BlockedSide { Alpha, Beta };

/// Vertices alpha, beta at Hamming distance p >= 2 where every flip of a
/// differing bit of the blocked endpoint leaves Q_d(f).
struct CriticalPair {
  unsigned d = 0;
  Word alpha;
  Word beta;
  unsigned p = 0;
  BlockedSide blocked_side = BlockedSide::Alpha;

  friend bool operator==(const CriticalPair&, const CriticalPair&) = default;
};

/// Shortest-path length inside Q_d(f); empty when a and b lie in different
/// components. Throws PreconditionError when either word is not a vertex.
std::optional<unsigned> graph_distance(const VertexSet& vertices, const Word& a, const Word& b);
std::optional<unsigned> graph_distance(const CubeSpec& spec, const Word& a, const Word& b,
                                       const SearchOptions& options = {});

/// 1-based positions i such that alpha + e_i contains f.
std::vector<std::size_t> blocked_bits(const Word& alpha, const Word& f);

struct IsometryResult {
  bool isometric = true;
  std::optional<CriticalPair> witness;
};

/// Q_d(f) is isometric in Q_d iff every vertex can take a first step
/// towards every other vertex without leaving Q_d(f). On failure the
/// witness minimizes (p, alpha, beta), alpha being the blocked endpoint.
IsometryResult is_isometric(const CubeSpec& spec, const SearchOptions& options = {});
IsometryResult is_isometric(const VertexSet& vertices, const SearchOptions& options = {});

/// Smallest (p, alpha, beta) critical pair with p <= p_max, if any.
/// Throws PreconditionError when p_max < 2.
std::optional<CriticalPair> find_critical_pair(const CubeSpec& spec, unsigned p_max,
                                               const SearchOptions& options = {});
std::optional<CriticalPair> find_critical_pair(const VertexSet& vertices, unsigned p_max,
                                               const SearchOptions& options = {});

}  // namespace fibcube

#endif  // FIBCUBE_CUBE_HPP
