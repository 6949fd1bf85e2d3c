#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "zq/code.hpp"
#include "zq/errors.hpp"

namespace zq {

inline constexpr std::uint64_t kDefaultExhaustiveBudget = std::uint64_t{1} << 26;
inline constexpr std::uint64_t kDefaultBfsBudget = std::uint64_t{1} << 28;

enum class RadiusMethod { Exhaustive, Bfs, SampledLowerBound };

inline const char* to_string(RadiusMethod m) {
  switch (m) {
    case RadiusMethod::Exhaustive: return "exhaustive";
    case RadiusMethod::Bfs: return "bfs";
    case RadiusMethod::SampledLowerBound: return "sampled-lower-bound";
  }
  return "?";
}

struct RadiusResult {
  std::size_t value = 0;
  RadiusMethod method = RadiusMethod::Exhaustive;
  std::uint64_t states_visited = 0;
  bool exact = false;
};

namespace detail {

// Codewords flattened to a contiguous symbol table for cache-friendly scans.
inline std::vector<std::uint8_t> flatten_codewords(const LinearCode& C) {
  if (C.modulus() > 255) throw std::domain_error("covering-radius engines support q <= 255");
  std::vector<std::uint8_t> flat;
  flat.reserve(C.codewords().size() * C.length());
  for (const auto& c : C.codewords())
    for (std::size_t j = 0; j < c.size(); ++j) flat.push_back(static_cast<std::uint8_t>(c[j]));
  return flat;
}

inline std::uint64_t ambient_size_checked(const LinearCode& C, std::uint64_t limit,
                                          const char* what) {
  const auto states = checked_pow(static_cast<std::uint64_t>(C.modulus()), C.length());
  if (!states || *states > limit)
    throw BudgetExceeded(what, states.value_or(UINT64_MAX), limit);
  return *states;
}

// Plain bit array indexed by ambient state.
class StateBits {
 public:
  explicit StateBits(std::uint64_t size) : bits_((size + 63) / 64, 0) {}

  bool test(std::uint64_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
  void set(std::uint64_t i) { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void clear() { std::fill(bits_.begin(), bits_.end(), 0); }
  std::uint64_t word(std::size_t w) const { return bits_[w]; }
  std::size_t word_count() const { return bits_.size(); }

 private:
  std::vector<std::uint64_t> bits_;
};

}  // namespace detail

/// Exact covering radius by direct evaluation of
/// max over ambient u of (min over codewords c of d(u, c)).
/// Ambient vectors are walked in mixed-radix order (coordinate j is digit j,
/// base q); scans of a given u stop early once its minimum cannot raise the
/// running maximum.
inline RadiusResult covering_radius_exhaustive(const LinearCode& C,
                                               std::uint64_t limit = kDefaultExhaustiveBudget) {
  const std::uint64_t states =
      detail::ambient_size_checked(C, limit, "exhaustive covering-radius scan exceeds budget");
  const int q = C.modulus();
  const std::size_t n = C.length();
  const std::size_t m = C.codewords().size();
  const std::vector<std::uint8_t> flat = detail::flatten_codewords(C);

  std::size_t radius = 0;
  std::vector<std::uint8_t> u(n, 0);
  for (std::uint64_t t = 0;; ++t) {
    std::size_t best = n + 1;
    for (std::size_t ci = 0; ci < m; ++ci) {
      const std::uint8_t* c = flat.data() + ci * n;
      std::size_t d = 0;
      for (std::size_t j = 0; j < n && d < best; ++j) d += (u[j] != c[j]);
      if (d < best) {
        best = d;
        if (best <= radius) break;  // u can no longer raise the maximum
      }
    }
    if (best > radius) radius = best;
    if (t + 1 == states) break;
    std::size_t j = 0;
    while (u[j] == q - 1) {
      u[j] = 0;
      ++j;
    }
    ++u[j];
  }
  return {radius, RadiusMethod::Exhaustive, states, true};
}

/// Exact covering radius by level-synchronized flood fill: all codewords are
/// seeded at depth 0 and Hamming-adjacent states (change one coordinate to any
/// other residue) are expanded level by level until the ambient space is
/// covered. The final depth is the radius. Visited/frontier state is kept in
/// flat bit arrays of q^n bits each.
inline RadiusResult covering_radius_bfs(const LinearCode& C,
                                        std::uint64_t limit = kDefaultBfsBudget) {
  const std::uint64_t states =
      detail::ambient_size_checked(C, limit, "bfs covering-radius scan exceeds budget");
  const int q = C.modulus();
  const std::size_t n = C.length();

  std::vector<std::uint64_t> place(n);
  place[0] = 1;
  for (std::size_t j = 1; j < n; ++j) place[j] = place[j - 1] * static_cast<std::uint64_t>(q);

  detail::StateBits visited(states), frontier(states), next(states);
  std::uint64_t covered = 0;
  for (const auto& c : C.codewords()) {
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < n; ++j) idx += static_cast<std::uint64_t>(c[j]) * place[j];
    visited.set(idx);
    frontier.set(idx);
    ++covered;
  }

  std::size_t level = 0;
  std::vector<std::uint8_t> digits(n);
  while (covered < states) {
    std::uint64_t added = 0;
    for (std::size_t w = 0; w < frontier.word_count(); ++w) {
      std::uint64_t bits = frontier.word(w);
      while (bits) {
        const std::uint64_t s = (static_cast<std::uint64_t>(w) << 6) +
                                static_cast<std::uint64_t>(std::countr_zero(bits));
        bits &= bits - 1;
        std::uint64_t rem = s;
        for (std::size_t j = 0; j < n; ++j) {
          digits[j] = static_cast<std::uint8_t>(rem % static_cast<std::uint64_t>(q));
          rem /= static_cast<std::uint64_t>(q);
        }
        for (std::size_t j = 0; j < n; ++j) {
          const std::uint64_t base = s - static_cast<std::uint64_t>(digits[j]) * place[j];
          for (int d = 0; d < q; ++d) {
            if (d == digits[j]) continue;
            const std::uint64_t t = base + static_cast<std::uint64_t>(d) * place[j];
            if (!visited.test(t)) {
              visited.set(t);
              next.set(t);
              ++added;
            }
          }
        }
      }
    }
    if (added == 0) throw std::logic_error("flood fill stalled before covering the space");
    covered += added;
    ++level;
    std::swap(frontier, next);
    next.clear();
  }
  return {level, RadiusMethod::Bfs, covered, true};
}

/// Lower bound on the covering radius: the farthest-from-the-code distance
/// seen over `samples` pseudo-random ambient vectors. Sampling is mt19937_64
/// seeded as given, one residue per coordinate (value % q), so results are
/// reproducible per (seed, samples). Never exceeds the true radius.
inline RadiusResult sampled_radius_lower_bound(const LinearCode& C, std::uint64_t samples,
                                               std::uint64_t seed) {
  if (samples == 0) throw std::domain_error("sampled lower bound needs samples >= 1");
  const int q = C.modulus();
  const std::size_t n = C.length();
  const std::size_t m = C.codewords().size();
  const std::vector<std::uint8_t> flat = detail::flatten_codewords(C);

  std::mt19937_64 gen(seed);
  std::size_t bound = 0;
  std::vector<std::uint8_t> u(n);
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (std::size_t j = 0; j < n; ++j)
      u[j] = static_cast<std::uint8_t>(gen() % static_cast<std::uint64_t>(q));
    std::size_t best = n + 1;
    for (std::size_t ci = 0; ci < m && best > bound; ++ci) {
      const std::uint8_t* c = flat.data() + ci * n;
      std::size_t d = 0;
      for (std::size_t j = 0; j < n && d < best; ++j) d += (u[j] != c[j]);
      if (d < best) best = d;
    }
    if (best > bound && best <= n) bound = best;
  }
  return {bound, RadiusMethod::SampledLowerBound, samples, false};
}

}  // namespace zq
