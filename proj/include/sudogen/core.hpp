#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "sudogen/errors.hpp"

namespace sudogen {

/// Seedable uniform source over Z_n = {1, ..., n}.
///
/// Wraps a 64-bit Mersenne Twister seeded from a single 64-bit value. Bounded
/// draws use multiply-and-reject so every value of the range is equally
/// likely and the stream is identical across standard library vendors.
///
/// A source is single-owner: it can be moved between threads but never
/// shared. Parallel work uses one source per task with distinct seeds.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed);

  RandomSource(const RandomSource&) = delete;
  RandomSource& operator=(const RandomSource&) = delete;
  RandomSource(RandomSource&&) noexcept = default;
  RandomSource& operator=(RandomSource&&) noexcept = default;

  std::uint64_t seed() const noexcept { return seed_; }

  /// Uniform value in {1, ..., n}. Throws DomainError when n < 1.
  int uniform(int n);

  /// Uniform value in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Single fair bit.
  int bit() { return static_cast<int>(engine_() >> 63); }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// A seed drawn from system entropy. Only the CLI uses this; library code
/// always takes an explicit seed.
std::uint64_t entropy_seed();

/// Candidate n-tuple over Z_n; repeats allowed.
using Tuple = std::vector<int>;

/// An ordering of {1, ..., n}. Construction validates.
class Permutation {
 public:
  /// Throws DomainError unless `values` holds each of 1..size exactly once.
  explicit Permutation(std::vector<int> values);

  int order() const noexcept { return static_cast<int>(values_.size()); }
  std::span<const int> values() const noexcept { return values_; }
  int operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// True iff `values` contains each of 1..values.size() exactly once.
/// Out-of-range entries and repeats both yield false. O(n).
bool is_permutation(std::span<const int> values);

/// n independent uniform draws from Z_n.
Tuple random_tuple(RandomSource& src, int n);

/// Draw-without-replacement permutation. The pool starts as 1..n; each step
/// draws an index uniformly from the remaining pool, emits that value and
/// deletes it by swapping with the pool's first slot. O(n).
Permutation random_permutation_direct(RandomSource& src, int n);

/// Same draws as random_permutation_direct but deletes from the pool by
/// shifting the tail left, as an array-based implementation would. O(n^2);
/// kept for timing comparisons.
Permutation random_permutation_shift(RandomSource& src, int n);

/// Fills `out` with a uniform permutation of 1..out.size() without
/// allocating. Same stream consumption as random_permutation_direct.
void fill_random_permutation(RandomSource& src, std::span<int> out);

/// Shift-deletion counterpart of fill_random_permutation. `pool` is scratch
/// space of at least out.size() elements.
void fill_random_permutation_shift(RandomSource& src, std::span<int> out,
                                   std::span<int> pool);

}  // namespace sudogen
