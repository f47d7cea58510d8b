#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sudogen/counting.hpp"
#include "sudogen/sampler.hpp"
#include "sudogen/sudoku.hpp"

namespace sudogen {

/// Exhaustive count of a domain next to its closed form.
struct EnumerationReport {
  std::string domain_name;
  BigInt count;
  BigInt expected;
  bool match = false;
};

inline constexpr int kMaxPermutationOrder = 8;

/// All n! permutations of 1..n in lexicographic order. n <= 8.
std::vector<Permutation> enum_permutations(int n);

/// All (n!)^{2n} Pi matrices, lexicographic over the flat row-major cells.
/// n <= 2, or n = 3 (46 656 matrices) with allow_order3.
std::vector<PiMatrix> enum_pi(int n, bool allow_order3 = false);

/// Every binary n^2 x n^2 matrix that passes is_s_permutation, found by
/// scanning all 2^{n^4} candidates in increasing bit-pattern order. n <= 2.
std::vector<SPermMatrix> enum_sperm(int n);

/// Accepted / scanned tallies of the enum_sperm scan.
AcceptanceCount sperm_scan(int n);

/// Number of ordered n^2-tuples of pairwise disjoint S-permutation matrices,
/// which equals the number of Sudoku matrices. n <= 2.
std::uint64_t count_sudoku(int n);

/// The Sudoku matrices themselves, one per disjoint tuple, sorted. n <= 2.
std::vector<SudokuMatrix> enum_sudoku(int n);

EnumerationReport report_permutations(int n);
EnumerationReport report_pi(int n);
EnumerationReport report_sperm(int n);
EnumerationReport report_sudoku(int n);

}  // namespace sudogen
