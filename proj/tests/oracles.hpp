#pragma once

// Test-only reference data and brute-force oracles. Nothing here calls the
// library routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

/// The 6 x 3 Pi_3 example matrix, row-major.
inline const std::vector<int> kExamplePi = {
    1, 3, 2,  //
    2, 3, 1,  //
    1, 2, 3,  //
    3, 1, 2,  //
    1, 2, 3,  //
    1, 2, 3,  //
};

/// Its b-array, (top value, transposed bottom value) per (s, t).
inline const std::vector<std::pair<int, int>> kExamplePairs = {
    {1, 3}, {3, 1}, {2, 1},  //
    {2, 1}, {3, 2}, {1, 2},  //
    {1, 2}, {2, 3}, {3, 3},  //
};

/// Positions of the 1s in its image, the displayed Sigma_9 matrix.
inline const std::vector<std::pair<int, int>> kExampleSigmaOnes = {
    {0, 2}, {1, 6}, {2, 3}, {3, 7}, {4, 0}, {5, 4}, {6, 1}, {7, 5}, {8, 8},
};

/// The published 9 x 9 Sudoku matrix.
inline const std::vector<std::vector<int>> kExampleSudoku = {
    {6, 4, 2, 3, 1, 7, 8, 9, 5},
    {5, 3, 1, 8, 2, 9, 4, 7, 6},
    {7, 8, 9, 4, 5, 6, 2, 3, 1},
    {9, 6, 7, 2, 4, 5, 1, 8, 3},
    {3, 2, 4, 6, 8, 1, 9, 5, 7},
    {1, 5, 8, 9, 7, 3, 6, 2, 4},
    {8, 9, 5, 1, 3, 4, 7, 6, 2},
    {2, 1, 3, 7, 6, 8, 5, 4, 9},
    {4, 7, 6, 5, 9, 2, 3, 1, 8},
};

inline std::vector<int> flatten(const std::vector<std::vector<int>>& rows) {
  std::vector<int> out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

/// Counts every line and every block independently; no early exit and no
/// shared helper with the library.
inline bool naive_s_permutation(const std::vector<int>& a, int n) {
  const int side = n * n;
  std::vector<int> row(side, 0), col(side, 0), block(side, 0);
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const int v = a[i * side + j];
      row[i] += v;
      col[j] += v;
      block[(i / n) * n + (j / n)] += v;
    }
  }
  for (int k = 0; k < side; ++k) {
    if (row[k] != 1 || col[k] != 1 || block[k] != 1) return false;
  }
  return true;
}

/// Membership via value layers: every value's positions must form an
/// S-permutation matrix and distinct layers must not overlap.
inline bool decomposition_sudoku(int n, const std::vector<int>& cells) {
  const int n2 = n * n;
  for (int v : cells)
    if (v < 1 || v > n2) return false;
  std::vector<std::vector<int>> layers(n2, std::vector<int>(cells.size(), 0));
  for (std::size_t c = 0; c < cells.size(); ++c) layers[cells[c] - 1][c] = 1;
  for (const auto& layer : layers)
    if (!naive_s_permutation(layer, n)) return false;
  for (int a = 0; a < n2; ++a)
    for (int b = a + 1; b < n2; ++b)
      for (std::size_t c = 0; c < cells.size(); ++c)
        if (layers[a][c] && layers[b][c]) return false;
  return true;
}

/// Sorted-copy comparison against 1..n.
inline bool naive_permutation(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != static_cast<int>(i) + 1) return false;
  return true;
}

/// Pearson statistic against a uniform expectation over `categories`
/// outcomes; unseen categories count as zero observations.
template <class Key>
double chi_square_uniform(const std::map<Key, std::uint64_t>& observed, std::size_t categories,
                          std::uint64_t samples) {
  const double expected = static_cast<double>(samples) / static_cast<double>(categories);
  double stat = 0.0;
  for (const auto& [key, count] : observed) {
    const double d = static_cast<double>(count) - expected;
    stat += d * d / expected;
  }
  stat += static_cast<double>(categories - observed.size()) * expected;
  return stat;
}

// 99.9% chi-square critical values from standard tables.
inline constexpr double kChiSquare999_5df = 20.515;
inline constexpr double kChiSquare999_15df = 39.252;

}  // namespace oracle
