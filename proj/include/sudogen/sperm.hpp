#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sudogen/pi.hpp"

namespace sudogen {

/// Block coordinates of a global position (i, j) in an n^2 x n^2 matrix:
/// i = s*n + k and j = t*n + l, with s, t naming the block and k, l the
/// offset inside it.
struct BlockIndex {
  int s = 0;
  int t = 0;
  int k = 0;
  int l = 0;

  friend bool operator==(const BlockIndex&, const BlockIndex&) = default;
};

BlockIndex to_block_index(int i, int j, int n);
std::pair<int, int> to_global(const BlockIndex& b, int n);

/// An n^2 x n^2 binary matrix with exactly one 1 per row, per column and per
/// n x n block.
///
/// Bits are packed row-major into 64-bit words (bit i*n^2 + j), so
/// disjointness and unions run word-wise.
class SPermMatrix {
 public:
  /// Dense 0/1 entries, row-major, n^4 of them. Throws DomainError on
  /// non-binary input or when the matrix is not an S-permutation matrix.
  static SPermMatrix from_dense(int n, std::span<const int> entries);

  /// Positions of the n^2 ones. Validated like from_dense.
  static SPermMatrix from_ones(int n, std::span<const std::pair<int, int>> ones);

  /// No validation; for internal producers that guarantee membership.
  static SPermMatrix unchecked(int n, std::vector<std::uint64_t> words);

  int order() const noexcept { return n_; }
  int side() const noexcept { return n_ * n_; }
  bool test(int i, int j) const {
    const auto bit = static_cast<std::size_t>(i * side() + j);
    return (words_[bit / 64] >> (bit % 64)) & 1u;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::vector<int> dense() const;
  /// (i, j) of every 1, sorted by i.
  std::vector<std::pair<int, int>> ones() const;

  friend bool operator==(const SPermMatrix&, const SPermMatrix&) = default;
  friend auto operator<=>(const SPermMatrix&, const SPermMatrix&) = default;

  static std::size_t word_count(int n);

 private:
  SPermMatrix(int n, std::vector<std::uint64_t> words) : n_(n), words_(std::move(words)) {}

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row sums, then column sums, then block sums, each exiting on the first
/// violation. `entries` holds n^4 values row-major.
///
/// Throws DomainError when an entry is not 0 or 1 or the size is not n^4;
/// a binary matrix that is simply not a member yields false.
bool is_s_permutation(std::span<const int> entries, int n);
bool is_s_permutation(const SPermMatrix& m);

/// True iff no position holds a 1 in both matrices.
bool disjoint_sperm(const SPermMatrix& a, const SPermMatrix& b);

/// Intermediate pairing used by phi: entry (s, t) is
/// <pi[s][t], pi[n+t][s]>, the top-half value and the transposed
/// bottom-half value.
struct PhiPairs {
  int n = 0;
  std::vector<std::array<int, 2>> entries;

  const std::array<int, 2>& at(int s, int t) const {
    return entries[static_cast<std::size_t>(s * n + t)];
  }
};

PhiPairs phi_pairs(const PiMatrix& m);

/// Bijection Pi_n -> Sigma_{n^2}: block (s, t) receives its single 1 at
/// local offset (pi[s][t] - 1, pi[n+t][s] - 1).
SPermMatrix phi(const PiMatrix& m);

/// Inverse of phi. Throws DomainError if `a` is not an S-permutation matrix.
PiMatrix phi_inverse(const SPermMatrix& a);

}  // namespace sudogen
