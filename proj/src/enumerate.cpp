#include "sudogen/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace sudogen {

namespace {

void require_cap(int n, int cap, const char* op) {
  if (n < 1 || n > cap) {
    throw DomainError(std::string(op) + ": n must be in [1, " + std::to_string(cap) + "], got " +
                      std::to_string(n));
  }
}

/// Visits every tuple of pairwise disjoint members, one per value 1..n^2.
void for_each_disjoint_tuple(int n, const std::function<void(const std::vector<const SPermMatrix*>&)>& visit) {
  const auto members = enum_sperm(n);
  const auto depth_goal = static_cast<std::size_t>(n * n);
  std::vector<const SPermMatrix*> chosen;
  chosen.reserve(depth_goal);

  // n <= 2, so every member fits in a single word.
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t support) {
    if (chosen.size() == depth_goal) {
      visit(chosen);
      return;
    }
    for (const auto& m : members) {
      const std::uint64_t w = m.words()[0];
      if (w & support) continue;
      chosen.push_back(&m);
      extend(support | w);
      chosen.pop_back();
    }
  };
  extend(0);
}

EnumerationReport make_report(std::string name, BigInt count, BigInt expected) {
  const bool match = count == expected;
  return EnumerationReport{std::move(name), std::move(count), std::move(expected), match};
}

}  // namespace

std::vector<Permutation> enum_permutations(int n) {
  require_cap(n, kMaxPermutationOrder, "enum_permutations");
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(values);
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

std::vector<PiMatrix> enum_pi(int n, bool allow_order3) {
  require_cap(n, allow_order3 ? 3 : 2, "enum_pi");
  const auto perms = enum_permutations(n);
  const auto rows = static_cast<std::size_t>(2 * n);
  std::vector<std::size_t> digit(rows, 0);
  std::vector<PiMatrix> out;
  for (;;) {
    std::vector<int> cells;
    cells.reserve(rows * static_cast<std::size_t>(n));
    for (auto d : digit) {
      auto v = perms[d].values();
      cells.insert(cells.end(), v.begin(), v.end());
    }
    out.push_back(PiMatrix::unchecked(n, std::move(cells)));

    // Odometer with the first row most significant.
    std::size_t pos = rows;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < perms.size()) break;
      digit[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

std::vector<SPermMatrix> enum_sperm(int n) {
  require_cap(n, 2, "enum_sperm");
  const int cells = n * n * n * n;
  const std::uint64_t total = std::uint64_t{1} << cells;
  std::vector<SPermMatrix> out;
  std::vector<int> dense(static_cast<std::size_t>(cells));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int b = 0; b < cells; ++b) dense[static_cast<std::size_t>(b)] = (mask >> b) & 1u;
    if (is_s_permutation(dense, n)) out.push_back(SPermMatrix::unchecked(n, {mask}));
  }
  return out;
}

AcceptanceCount sperm_scan(int n) {
  require_cap(n, 2, "sperm_scan");
  const int cells = n * n * n * n;
  std::uint64_t mask = 0;
  std::vector<int> dense(static_cast<std::size_t>(cells));
  auto next_candidate = [&]() -> const std::vector<int>& {
    for (int b = 0; b < cells; ++b) dense[static_cast<std::size_t>(b)] = (mask >> b) & 1u;
    ++mask;
    return dense;
  };
  auto member = [&](const std::vector<int>& d) { return is_s_permutation(d, n); };
  return count_acceptances(next_candidate, member, std::uint64_t{1} << cells);
}

std::uint64_t count_sudoku(int n) {
  require_cap(n, 2, "count_sudoku");
  std::uint64_t count = 0;
  for_each_disjoint_tuple(n, [&](const auto&) { ++count; });
  return count;
}

std::vector<SudokuMatrix> enum_sudoku(int n) {
  require_cap(n, 2, "enum_sudoku");
  std::vector<SudokuMatrix> out;
  for_each_disjoint_tuple(n, [&](const std::vector<const SPermMatrix*>& tuple) {
    std::vector<SPermMatrix> layers;
    layers.reserve(tuple.size());
    for (const auto* m : tuple) layers.push_back(*m);
    out.push_back(compose(layers));
  });
  std::sort(out.begin(), out.end());
  return out;
}

EnumerationReport report_permutations(int n) {
  return make_report("S_" + std::to_string(n), enum_permutations(n).size(), factorial(n));
}

EnumerationReport report_pi(int n) {
  return make_report("Pi_" + std::to_string(n), enum_pi(n).size(), pi_cardinality(n));
}

EnumerationReport report_sperm(int n) {
  return make_report("Sigma_" + std::to_string(n * n), enum_sperm(n).size(), sperm_cardinality(n));
}

EnumerationReport report_sudoku(int n) {
  return make_report("sigma_" + std::to_string(n), count_sudoku(n), *known_sudoku_count(n));
}

}  // namespace sudogen
