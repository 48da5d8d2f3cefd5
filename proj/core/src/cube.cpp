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

#include "fibcube/cube.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "fibcube/error.hpp"

namespace fibcube {

CubeSpec::CubeSpec(unsigned dimension, Word factor) : d(dimension), f(std::move(factor)) {
  if (d == 0) throw PreconditionError("dimension must be >= 1");
  if (f.empty()) throw PreconditionError("forbidden factor must be non-empty");
}

namespace {

void check_dimension(unsigned d, const SearchOptions& options) {
  const unsigned limit = std::min(options.d_max, kAbsoluteDMax);
  if (d > limit) {
    throw ResourceLimitError("dimension " + std::to_string(d) + " exceeds enumeration cap d_max=" +
                                 std::to_string(limit),
                             limit);
  }
}

void check_deadline(const SearchOptions& options) {
  if (options.deadline && std::chrono::steady_clock::now() > *options.deadline) {
    throw DeadlineExceeded();
  }
}

}  // namespace

bool VertexSet::contains(const Word& w) const {
  if (w.size() != spec_.d) {
    throw PreconditionError("word length " + std::to_string(w.size()) +
                            " does not match dimension " + std::to_string(spec_.d));
  }
  return contains(w.pattern());
}

std::vector<std::uint64_t> VertexSet::members() const {
  std::vector<std::uint64_t> out;
  out.reserve(count_);
  for (std::uint64_t x = 0; x < universe_size(); ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

VertexSet enumerate_vertices(const CubeSpec& spec, const SearchOptions& options) {
  check_dimension(spec.d, options);
  VertexSet vs;
  vs.spec_ = spec;
  const std::uint64_t universe = vs.universe_size();
  const std::size_t words = static_cast<std::size_t>(std::max<std::uint64_t>(1, universe / 64));
  const std::uint64_t tail_mask = universe >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;

  if (spec.is_full_cube()) {
    vs.bits_.assign(words, ~std::uint64_t{0});
    vs.bits_.back() &= tail_mask;
    vs.count_ = universe;
    return vs;
  }

  // bad[x] for dimension m is (x == f). Going from dimension e-1 to e, a
  // pattern x contains f iff its first e-1 bits (x >> 1) do or its last m
  // bits equal f. Descending x keeps bad[x >> 1] unoverwritten.
  std::vector<std::uint64_t> bad(words, 0);
  auto get = [&](std::uint64_t x) { return (bad[x >> 6] >> (x & 63)) & 1U; };
  auto set = [&](std::uint64_t x, std::uint64_t v) {
    bad[x >> 6] = (bad[x >> 6] & ~(std::uint64_t{1} << (x & 63))) | (v << (x & 63));
  };
  const unsigned m = static_cast<unsigned>(spec.f.size());
  const std::uint64_t fpat = spec.f.pattern();
  const std::uint64_t window = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  set(fpat, 1);
  for (unsigned e = m + 1; e <= spec.d; ++e) {
    for (std::uint64_t x = (std::uint64_t{1} << e); x-- > 0;) {
      set(x, get(x >> 1) | static_cast<std::uint64_t>((x & window) == fpat));
    }
  }

  vs.bits_.resize(words);
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < words; ++i) {
    vs.bits_[i] = ~bad[i];
    if (i + 1 == words) vs.bits_[i] &= tail_mask;
    count += static_cast<std::uint64_t>(std::popcount(vs.bits_[i]));
  }
  vs.count_ = count;
  return vs;
}

std::optional<unsigned> graph_distance(const VertexSet& vs, const Word& a, const Word& b) {
  if (!vs.contains(a) || !vs.contains(b)) {
    throw PreconditionError("graph_distance endpoints must be vertices of Q_d(f)");
  }
  const std::uint64_t src = a.pattern();
  const std::uint64_t dst = b.pattern();
  if (src == dst) return 0U;
  constexpr unsigned kUnseen = std::numeric_limits<unsigned>::max();
  std::vector<unsigned> dist(vs.universe_size(), kUnseen);
  std::deque<std::uint64_t> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    const std::uint64_t u = queue.front();
    queue.pop_front();
    for (unsigned j = 0; j < vs.dimension(); ++j) {
      const std::uint64_t v = u ^ (std::uint64_t{1} << j);
      if (!vs.contains(v) || dist[v] != kUnseen) continue;
      dist[v] = dist[u] + 1;
      if (v == dst) return dist[v];
      queue.push_back(v);
    }
  }
  return std::nullopt;
}

std::optional<unsigned> graph_distance(const CubeSpec& spec, const Word& a, const Word& b,
                                       const SearchOptions& options) {
  return graph_distance(enumerate_vertices(spec, options), a, b);
}

std::vector<std::size_t> blocked_bits(const Word& alpha, const Word& f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= alpha.size(); ++i) {
    if (contains_factor(alpha.flipped(i), f)) out.push_back(i);
  }
  return out;
}

namespace {

struct Candidate {
  unsigned p = std::numeric_limits<unsigned>::max();
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;

  bool found() const noexcept { return p != std::numeric_limits<unsigned>::max(); }
  auto key() const noexcept { return std::tuple(p, alpha, beta); }
};

class CriticalSearch {
 public:
  CriticalSearch(const VertexSet& vs, unsigned p_max, const SearchOptions& options)
      : vs_(vs), p_max_(p_max), options_(options) {}

  Candidate run() {
    const std::uint64_t universe = vs_.universe_size();
    const unsigned workers = std::max(1U, options_.workers);
    const std::uint64_t chunks = std::min<std::uint64_t>(universe, std::uint64_t{workers} * 16);
    const std::uint64_t chunk_size = (universe + chunks - 1) / chunks;

    std::atomic<std::uint64_t> next{0};
    std::vector<Candidate> best(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned w) {
      try {
        for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
          check_deadline(options_);
          const std::uint64_t lo = c * chunk_size;
          const std::uint64_t hi = std::min(universe, lo + chunk_size);
          // Chunks are claimed in increasing order, so alpha only grows
          // within one worker: later finds must have strictly smaller p.
          for (std::uint64_t a = lo; a < hi; ++a) {
            if ((a & 0xFFFF) == 0) check_deadline(options_);
            if (!vs_.contains(a)) continue;
            const unsigned limit = best[w].found() ? best[w].p - 1 : p_max_;
            if (limit < 2) continue;
            scan_vertex(a, limit, best[w]);
          }
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };

    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    Candidate result;
    for (const auto& c : best) {
      if (c.found() && (!result.found() || c.key() < result.key())) result = c;
    }
    return result;
  }

 private:
  void scan_vertex(std::uint64_t a, unsigned limit, Candidate& best) {
    const unsigned d = vs_.dimension();
    std::uint64_t blocked = 0;
    for (unsigned j = 0; j < d; ++j) {
      const std::uint64_t bit = std::uint64_t{1} << j;
      if (!vs_.contains(a ^ bit)) blocked |= bit;
    }
    const auto nb = static_cast<unsigned>(std::popcount(blocked));
    if (nb < 2) return;

    auto offer = [&](std::uint64_t diff) {
      const auto p = static_cast<unsigned>(std::popcount(diff));
      if (p < 2 || p > limit) return;
      const std::uint64_t b = a ^ diff;
      if (!vs_.contains(b)) return;
      const Candidate c{p, a, b};
      if (!best.found() || c.key() < best.key()) best = c;
    };

    const bool subsets_cheaper = nb <= options_.subset_threshold && nb < 63 &&
                                 (std::uint64_t{1} << nb) <= std::max<std::uint64_t>(vs_.count(), 64);
    if (subsets_cheaper) {
      for (std::uint64_t sub = blocked; sub != 0; sub = (sub - 1) & blocked) offer(sub);
    } else {
      for (std::uint64_t b : member_list()) {
        const std::uint64_t diff = a ^ b;
        if (diff != 0 && (diff & ~blocked) == 0) offer(diff);
      }
    }
  }

  const std::vector<std::uint64_t>& member_list() {
    std::call_once(members_once_, [this] { members_ = vs_.members(); });
    return members_;
  }

  const VertexSet& vs_;
  unsigned p_max_;
  const SearchOptions& options_;
  std::once_flag members_once_;
  std::vector<std::uint64_t> members_;
};

CriticalPair to_pair(const Candidate& c, unsigned d) {
  return CriticalPair{d, Word::from_pattern(c.alpha, d), Word::from_pattern(c.beta, d), c.p,
                      BlockedSide::Alpha};
}

void warn_cost(const CubeSpec& spec, const SearchOptions& options) {
  if (spec.d <= options.warn_above || !options.on_warning) return;
  std::ostringstream os;
  os << "isometry check at d=" << spec.d << " scans 2^" << spec.d << " patterns with "
     << spec.d << " neighbour probes each (~" << ((std::uint64_t{1} << spec.d) * spec.d) / 1000000
     << "M lookups)";
  options.on_warning(os.str());
}

}  // namespace

std::optional<CriticalPair> find_critical_pair(const VertexSet& vs, unsigned p_max,
                                               const SearchOptions& options) {
  if (p_max < 2) throw PreconditionError("p_max must be >= 2");
  check_dimension(vs.dimension(), options);
  if (vs.spec().is_full_cube()) return std::nullopt;
  const Candidate c = CriticalSearch(vs, std::min(p_max, vs.dimension()), options).run();
  if (!c.found()) return std::nullopt;
  return to_pair(c, vs.dimension());
}

std::optional<CriticalPair> find_critical_pair(const CubeSpec& spec, unsigned p_max,
                                               const SearchOptions& options) {
  if (p_max < 2) throw PreconditionError("p_max must be >= 2");
  check_dimension(spec.d, options);
  if (spec.is_full_cube()) return std::nullopt;
  return find_critical_pair(enumerate_vertices(spec, options), p_max, options);
}

IsometryResult is_isometric(const VertexSet& vs, const SearchOptions& options) {
  check_dimension(vs.dimension(), options);
  if (vs.spec().is_full_cube() || vs.dimension() < 2) return {};
  warn_cost(vs.spec(), options);
  auto witness = find_critical_pair(vs, vs.dimension(), options);
  return IsometryResult{!witness.has_value(), std::move(witness)};
}

IsometryResult is_isometric(const CubeSpec& spec, const SearchOptions& options) {
  check_dimension(spec.d, options);
  if (spec.is_full_cube() || spec.d < 2) return {};
  return is_isometric(enumerate_vertices(spec, options), options);
}

}  // namespace fibcube
