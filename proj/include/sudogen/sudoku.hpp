#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sudogen/sperm.hpp"

namespace sudogen {

/// An n^2 x n^2 matrix over Z_{n^2} in which every row, column and n x n
/// block is a permutation. Cells are row-major: (i, j) at i * n^2 + j.
class SudokuMatrix {
 public:
  /// Throws DomainError naming the first violated line.
  SudokuMatrix(int n, std::vector<int> cells);

  static SudokuMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static SudokuMatrix unchecked(int n, std::vector<int> cells);

  int order() const noexcept { return n_; }
  int side() const noexcept { return n_ * n_; }
  int at(int i, int j) const { return cells_[static_cast<std::size_t>(i * side() + j)]; }
  std::span<const int> cells() const noexcept { return cells_; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const SudokuMatrix&, const SudokuMatrix&) = default;
  friend auto operator<=>(const SudokuMatrix&, const SudokuMatrix&) = default;

 private:
  struct Trusted {};
  SudokuMatrix(int n, std::vector<int> cells, Trusted) : n_(n), cells_(std::move(cells)) {}

  int n_ = 0;
  std::vector<int> cells_;
};

/// First constraint a candidate fails. Lines are checked in the order rows,
/// columns, blocks; block b covers block-row b / n and block-column b % n.
struct SudokuViolation {
  enum class Kind { Shape, Row, Column, Block };
  Kind kind = Kind::Shape;
  int index = 0;

  std::string describe() const;
};

std::optional<SudokuViolation> find_sudoku_violation(int n, std::span<const int> cells);
std::optional<SudokuViolation> find_sudoku_violation(const std::vector<std::vector<int>>& rows);

bool is_sudoku(int n, std::span<const int> cells);
/// Infers n from the row count; non-square shapes yield false.
bool is_sudoku(const std::vector<std::vector<int>>& rows);

struct AssemblyPolicy {
  /// Pi draws allowed for a single layer before the whole assembly restarts.
  std::uint64_t per_step_attempts = 100'000;
  std::uint64_t max_restarts = 100;
};

/// Instrumentation of one assemble() call.
///
/// pi_matrices_generated = n^2 + rejections + discarded_layers, where
/// discarded_layers counts accepted layers thrown away by restarts.
struct AssemblyReport {
  std::uint64_t pi_matrices_generated = 0;
  std::uint64_t rejections = 0;
  std::uint64_t restarts = 0;
  std::uint64_t discarded_layers = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct Assembly {
  SudokuMatrix matrix;
  /// The S-permutation layer accepted for each value 1..n^2, in value order.
  std::vector<SPermMatrix> layers;
  AssemblyReport report;
};

class AssemblyExhausted : public RetriesExhausted {
 public:
  explicit AssemblyExhausted(AssemblyReport report);
  const AssemblyReport& report() const noexcept { return report_; }

 private:
  AssemblyReport report_;
};

/// Random Sudoku matrix from n^2 mutually disjoint S-permutation layers.
///
/// For K = 1..n^2: draw a random Pi matrix, map it through phi, and keep it
/// as layer K if it shares no position with the layers kept so far;
/// otherwise draw again. If one layer needs more than
/// policy.per_step_attempts draws, everything is discarded and assembly
/// restarts from K = 1. Throws AssemblyExhausted after policy.max_restarts
/// restarts.
///
/// Practical for n <= 3 only: the last layer is forced, and a uniform Pi
/// draw hits it with probability 1 / (n!)^{2n}.
Assembly assemble(RandomSource& src, int n, const AssemblyPolicy& policy = {});

/// Layers A_1..A_{n^2}, A_v having a 1 exactly where the matrix holds v.
/// Throws DomainError when the input is not a Sudoku matrix.
std::vector<SPermMatrix> decompose(const SudokuMatrix& m);

/// Weighted sum 1*A_1 + ... + n^2*A_{n^2}. Throws DomainError unless the
/// layers share one order, there are n^2 of them and the sum is a Sudoku
/// matrix.
SudokuMatrix compose(std::span<const SPermMatrix> layers);

/// Deterministic Sudoku matrix of any order:
/// cell (i, j) = ((i mod n) * n + i / n + j) mod n^2 + 1.
SudokuMatrix canonical_sudoku(int n);

}  // namespace sudogen
