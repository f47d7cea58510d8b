#include "sudogen/sudoku.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>

namespace sudogen {

namespace {

std::vector<int> flatten_square(const std::vector<std::vector<int>>& rows, int& n_out) {
  n_out = 0;
  const auto side = rows.size();
  const auto n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(side))));
  if (side == 0 || static_cast<std::size_t>(n) * n != side) return {};
  std::vector<int> cells;
  cells.reserve(side * side);
  for (const auto& r : rows) {
    if (r.size() != side) return {};
    cells.insert(cells.end(), r.begin(), r.end());
  }
  n_out = n;
  return cells;
}

}  // namespace

SudokuMatrix::SudokuMatrix(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {
  if (auto v = find_sudoku_violation(n_, cells_)) {
    throw DomainError("SudokuMatrix: " + v->describe());
  }
}

SudokuMatrix SudokuMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  int n = 0;
  auto cells = flatten_square(rows, n);
  if (n == 0) throw DomainError("SudokuMatrix: expected an n^2 x n^2 matrix");
  return SudokuMatrix(n, std::move(cells));
}

SudokuMatrix SudokuMatrix::unchecked(int n, std::vector<int> cells) {
  return SudokuMatrix(n, std::move(cells), Trusted{});
}

std::vector<std::vector<int>> SudokuMatrix::rows() const {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(side()));
  for (int i = 0; i < side(); ++i) {
    auto first = cells_.begin() + i * side();
    out.emplace_back(first, first + side());
  }
  return out;
}

std::string SudokuViolation::describe() const {
  switch (kind) {
    case Kind::Shape: return "shape is not n^2 x n^2";
    case Kind::Row: return "row " + std::to_string(index) + " is not a permutation";
    case Kind::Column: return "column " + std::to_string(index) + " is not a permutation";
    case Kind::Block: return "block " + std::to_string(index) + " is not a permutation";
  }
  return "unknown violation";
}

std::optional<SudokuViolation> find_sudoku_violation(int n, std::span<const int> cells) {
  using Kind = SudokuViolation::Kind;
  if (n < 1) return SudokuViolation{Kind::Shape, 0};
  const int n2 = n * n;
  if (cells.size() != static_cast<std::size_t>(n2) * n2) return SudokuViolation{Kind::Shape, 0};

  const auto un2 = static_cast<std::size_t>(n2);
  for (int i = 0; i < n2; ++i) {
    if (!is_permutation(cells.subspan(i * un2, un2))) return SudokuViolation{Kind::Row, i};
  }
  std::vector<int> line(un2);
  for (int j = 0; j < n2; ++j) {
    for (int i = 0; i < n2; ++i) line[i] = cells[i * un2 + j];
    if (!is_permutation(line)) return SudokuViolation{Kind::Column, j};
  }
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      std::size_t w = 0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) line[w++] = cells[(s * n + k) * un2 + (t * n + l)];
      if (!is_permutation(line)) return SudokuViolation{Kind::Block, s * n + t};
    }
  }
  return std::nullopt;
}

std::optional<SudokuViolation> find_sudoku_violation(const std::vector<std::vector<int>>& rows) {
  int n = 0;
  auto cells = flatten_square(rows, n);
  if (n == 0) return SudokuViolation{SudokuViolation::Kind::Shape, 0};
  return find_sudoku_violation(n, cells);
}

bool is_sudoku(int n, std::span<const int> cells) {
  return !find_sudoku_violation(n, cells).has_value();
}

bool is_sudoku(const std::vector<std::vector<int>>& rows) {
  return !find_sudoku_violation(rows).has_value();
}

AssemblyExhausted::AssemblyExhausted(AssemblyReport report)
    : RetriesExhausted("assemble: restart budget exhausted after " +
                       std::to_string(report.restarts) + " restarts and " +
                       std::to_string(report.pi_matrices_generated) + " Pi draws"),
      report_(report) {}

Assembly assemble(RandomSource& src, int n, const AssemblyPolicy& policy) {
  if (n < 1) throw DomainError("assemble: n must be >= 1");
  if (policy.per_step_attempts == 0) throw DomainError("assemble: per_step_attempts must be >= 1");

  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const int n2 = n * n;
  const auto cell_count = static_cast<std::size_t>(n2) * n2;
  const auto word_count = SPermMatrix::word_count(n);

  AssemblyReport report;
  std::vector<int> sum(cell_count, 0);
  std::vector<std::uint64_t> support(word_count, 0);
  std::vector<SPermMatrix> layers;
  layers.reserve(static_cast<std::size_t>(n2));

  for (;;) {
    std::fill(sum.begin(), sum.end(), 0);
    std::fill(support.begin(), support.end(), 0);
    layers.clear();

    bool stalled = false;
    for (int value = 1; value <= n2 && !stalled; ++value) {
      bool placed = false;
      for (std::uint64_t attempt = 0; attempt < policy.per_step_attempts; ++attempt) {
        SPermMatrix layer = phi(random_pi(src, n));
        ++report.pi_matrices_generated;
        const auto words = layer.words();
        bool overlaps = false;
        for (std::size_t w = 0; w < word_count; ++w) {
          if (words[w] & support[w]) {
            overlaps = true;
            break;
          }
        }
        if (overlaps) {
          ++report.rejections;
          continue;
        }
        for (std::size_t w = 0; w < word_count; ++w) {
          support[w] |= words[w];
          std::uint64_t bits = words[w];
          while (bits) {
            const auto bit = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            sum[bit] += value;
            bits &= bits - 1;
          }
        }
        layers.push_back(std::move(layer));
        placed = true;
        break;
      }
      stalled = !placed;
    }

    if (!stalled) break;
    report.discarded_layers += layers.size();
    if (report.restarts >= policy.max_restarts) {
      report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
      throw AssemblyExhausted(report);
    }
    ++report.restarts;
  }

  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return Assembly{SudokuMatrix::unchecked(n, std::move(sum)), std::move(layers), report};
}

std::vector<SPermMatrix> decompose(const SudokuMatrix& m) {
  const int n = m.order();
  if (auto v = find_sudoku_violation(n, m.cells())) {
    throw DomainError("decompose: " + v->describe());
  }
  const int n2 = m.side();
  std::vector<std::vector<std::uint64_t>> words(static_cast<std::size_t>(n2),
                                                std::vector<std::uint64_t>(SPermMatrix::word_count(n), 0));
  const auto cells = m.cells();
  for (std::size_t bit = 0; bit < cells.size(); ++bit) {
    words[static_cast<std::size_t>(cells[bit] - 1)][bit / 64] |= std::uint64_t{1} << (bit % 64);
  }
  std::vector<SPermMatrix> layers;
  layers.reserve(words.size());
  for (auto& w : words) layers.push_back(SPermMatrix::unchecked(n, std::move(w)));
  return layers;
}

SudokuMatrix compose(std::span<const SPermMatrix> layers) {
  if (layers.empty()) throw DomainError("compose: no layers");
  const int n = layers.front().order();
  const int n2 = n * n;
  if (layers.size() != static_cast<std::size_t>(n2)) {
    throw DomainError("compose: expected " + std::to_string(n2) + " layers, got " +
                      std::to_string(layers.size()));
  }
  std::vector<int> cells(static_cast<std::size_t>(n2) * n2, 0);
  for (std::size_t v = 0; v < layers.size(); ++v) {
    if (layers[v].order() != n) throw DomainError("compose: layers differ in order");
    for (auto [i, j] : layers[v].ones()) {
      cells[static_cast<std::size_t>(i) * n2 + j] += static_cast<int>(v) + 1;
    }
  }
  return SudokuMatrix(n, std::move(cells));
}

SudokuMatrix canonical_sudoku(int n) {
  if (n < 1) throw DomainError("canonical_sudoku: n must be >= 1");
  const int n2 = n * n;
  std::vector<int> cells(static_cast<std::size_t>(n2) * n2);
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j) cells[static_cast<std::size_t>(i) * n2 + j] = ((i % n) * n + i / n + j) % n2 + 1;
  return SudokuMatrix::unchecked(n, std::move(cells));
}

}  // namespace sudogen
