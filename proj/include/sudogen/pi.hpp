#pragma once

#include <span>
#include <vector>

#include "sudogen/core.hpp"

namespace sudogen {

/// A 2n x n matrix over Z_n whose every row is a permutation.
///
/// Cells are stored row-major in one flat vector: entry (i, j) lives at
/// i * n + j for 0 <= i < 2n, 0 <= j < n. Rows 0..n-1 form the top half,
/// rows n..2n-1 the bottom half.
class PiMatrix {
 public:
  /// Throws DomainError on a shape mismatch or a row that is not a permutation.
  PiMatrix(int n, std::vector<int> cells);

  static PiMatrix from_rows(const std::vector<std::vector<int>>& rows);

  /// Skips validation. Callers must already know every row is a permutation.
  static PiMatrix unchecked(int n, std::vector<int> cells);

  int order() const noexcept { return n_; }
  int at(int row, int col) const { return cells_[static_cast<std::size_t>(row * n_ + col)]; }
  std::span<const int> row(int r) const {
    return std::span<const int>(cells_).subspan(static_cast<std::size_t>(r * n_),
                                                static_cast<std::size_t>(n_));
  }
  std::span<const int> cells() const noexcept { return cells_; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const PiMatrix&, const PiMatrix&) = default;
  friend auto operator<=>(const PiMatrix&, const PiMatrix&) = default;

 private:
  struct Trusted {};
  PiMatrix(int n, std::vector<int> cells, Trusted) : n_(n), cells_(std::move(cells)) {}

  int n_ = 0;
  std::vector<int> cells_;
};

/// Shape-checked membership test: 2n rows of length n, each a permutation.
bool is_pi(const std::vector<std::vector<int>>& rows);
bool is_pi(int n, std::span<const int> cells);

/// 2n independent draw-without-replacement permutations.
PiMatrix random_pi(RandomSource& src, int n);

/// random_pi built from the O(n^2) shift-deletion permutation generator.
PiMatrix random_pi_shift(RandomSource& src, int n);

/// Two Pi matrices are disjoint when no (s, t) yields the same ordered pair
/// <c[s][t], c[n+t][s]> in both. Throws DomainError on an order mismatch.
bool disjoint_pi(const PiMatrix& c, const PiMatrix& d);

}  // namespace sudogen
