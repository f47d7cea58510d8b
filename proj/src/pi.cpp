#include "sudogen/pi.hpp"

#include <string>
#include <utility>

namespace sudogen {

PiMatrix::PiMatrix(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {
  if (n_ < 1) throw DomainError("PiMatrix: order must be >= 1");
  if (!is_pi(n_, cells_)) {
    throw DomainError("PiMatrix: expected 2n x n matrix whose rows are permutations of 1.." +
                      std::to_string(n_));
  }
}

PiMatrix PiMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.size() % 2 != 0) {
    throw DomainError("PiMatrix: row count must be 2n with n >= 1");
  }
  const int n = static_cast<int>(rows.size() / 2);
  std::vector<int> cells;
  cells.reserve(rows.size() * static_cast<std::size_t>(n));
  for (const auto& r : rows) {
    if (r.size() != static_cast<std::size_t>(n)) {
      throw DomainError("PiMatrix: every row must have length n = " + std::to_string(n));
    }
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return PiMatrix(n, std::move(cells));
}

PiMatrix PiMatrix::unchecked(int n, std::vector<int> cells) {
  return PiMatrix(n, std::move(cells), Trusted{});
}

std::vector<std::vector<int>> PiMatrix::rows() const {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(2 * n_));
  for (int r = 0; r < 2 * n_; ++r) {
    auto span = row(r);
    out.emplace_back(span.begin(), span.end());
  }
  return out;
}

bool is_pi(int n, std::span<const int> cells) {
  if (n < 1 || cells.size() != static_cast<std::size_t>(2 * n * n)) return false;
  for (int r = 0; r < 2 * n; ++r) {
    if (!is_permutation(cells.subspan(static_cast<std::size_t>(r * n), static_cast<std::size_t>(n)))) {
      return false;
    }
  }
  return true;
}

bool is_pi(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.size() % 2 != 0) return false;
  const auto n = rows.size() / 2;
  for (const auto& r : rows) {
    if (r.size() != n || !is_permutation(r)) return false;
  }
  return true;
}

namespace {

template <class FillRow>
PiMatrix build_pi(int n, const char* op, FillRow&& fill_row) {
  if (n < 1) throw DomainError(std::string(op) + ": n must be >= 1");
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> cells(2 * un * un);
  for (std::size_t r = 0; r < 2 * un; ++r) {
    fill_row(std::span<int>(cells).subspan(r * un, un));
  }
  return PiMatrix::unchecked(n, std::move(cells));
}

}  // namespace

PiMatrix random_pi(RandomSource& src, int n) {
  return build_pi(n, "random_pi", [&](std::span<int> row) { fill_random_permutation(src, row); });
}

PiMatrix random_pi_shift(RandomSource& src, int n) {
  std::vector<int> pool(static_cast<std::size_t>(n > 0 ? n : 0));
  return build_pi(n, "random_pi_shift",
                  [&](std::span<int> row) { fill_random_permutation_shift(src, row, pool); });
}

bool disjoint_pi(const PiMatrix& c, const PiMatrix& d) {
  if (c.order() != d.order()) {
    throw DomainError("disjoint_pi: order mismatch (" + std::to_string(c.order()) + " vs " +
                      std::to_string(d.order()) + ")");
  }
  const int n = c.order();
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (c.at(s, t) == d.at(s, t) && c.at(n + t, s) == d.at(n + t, s)) return false;
    }
  }
  return true;
}

}  // namespace sudogen
