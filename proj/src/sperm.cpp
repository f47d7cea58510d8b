#include "sudogen/sperm.hpp"

#include <string>

namespace sudogen {

BlockIndex to_block_index(int i, int j, int n) {
  return BlockIndex{i / n, j / n, i % n, j % n};
}

std::pair<int, int> to_global(const BlockIndex& b, int n) {
  return {b.s * n + b.k, b.t * n + b.l};
}

std::size_t SPermMatrix::word_count(int n) {
  const auto cells = static_cast<std::size_t>(n) * n * n * n;
  return (cells + 63) / 64;
}

SPermMatrix SPermMatrix::from_dense(int n, std::span<const int> entries) {
  if (!is_s_permutation(entries, n)) {
    throw DomainError("SPermMatrix: not an S-permutation matrix");
  }
  std::vector<std::uint64_t> words(word_count(n), 0);
  for (std::size_t bit = 0; bit < entries.size(); ++bit) {
    if (entries[bit]) words[bit / 64] |= std::uint64_t{1} << (bit % 64);
  }
  return SPermMatrix(n, std::move(words));
}

SPermMatrix SPermMatrix::from_ones(int n, std::span<const std::pair<int, int>> ones) {
  if (n < 1) throw DomainError("SPermMatrix: order must be >= 1");
  const int side = n * n;
  std::vector<int> dense(static_cast<std::size_t>(side) * side, 0);
  for (auto [i, j] : ones) {
    if (i < 0 || i >= side || j < 0 || j >= side) {
      throw DomainError("SPermMatrix: position (" + std::to_string(i) + "," + std::to_string(j) +
                        ") out of range");
    }
    int& cell = dense[static_cast<std::size_t>(i) * side + j];
    if (cell) throw DomainError("SPermMatrix: duplicate position");
    cell = 1;
  }
  return from_dense(n, dense);
}

SPermMatrix SPermMatrix::unchecked(int n, std::vector<std::uint64_t> words) {
  return SPermMatrix(n, std::move(words));
}

std::vector<int> SPermMatrix::dense() const {
  const auto cells = static_cast<std::size_t>(side()) * side();
  std::vector<int> out(cells, 0);
  for (std::size_t bit = 0; bit < cells; ++bit) out[bit] = (words_[bit / 64] >> (bit % 64)) & 1u;
  return out;
}

std::vector<std::pair<int, int>> SPermMatrix::ones() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(side()));
  for (int i = 0; i < side(); ++i) {
    for (int j = 0; j < side(); ++j) {
      if (test(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

bool is_s_permutation(std::span<const int> entries, int n) {
  if (n < 1) throw DomainError("is_s_permutation: n must be >= 1");
  const int n2 = n * n;
  if (entries.size() != static_cast<std::size_t>(n2) * n2) {
    throw DomainError("is_s_permutation: expected " + std::to_string(n2 * n2) + " entries, got " +
                      std::to_string(entries.size()));
  }
  for (int v : entries) {
    if (v != 0 && v != 1) throw DomainError("is_s_permutation: entry " + std::to_string(v) + " is not binary");
  }
  auto a = [&](int i, int j) { return entries[static_cast<std::size_t>(i * n2 + j)]; };

  for (int i = 0; i < n2; ++i) {
    int r = 0;
    for (int j = 0; j < n2; ++j) {
      r += a(i, j);
      if (r > 1) return false;
    }
    if (r == 0) return false;
  }
  for (int j = 0; j < n2; ++j) {
    int r = 0;
    for (int i = 0; i < n2; ++i) {
      r += a(i, j);
      if (r > 1) return false;
    }
    if (r == 0) return false;
  }
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      int r = 0;
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) r += a(s * n + k, t * n + l);
      }
      if (r != 1) return false;
    }
  }
  return true;
}

bool is_s_permutation(const SPermMatrix& m) {
  return is_s_permutation(m.dense(), m.order());
}

bool disjoint_sperm(const SPermMatrix& a, const SPermMatrix& b) {
  if (a.order() != b.order()) {
    throw DomainError("disjoint_sperm: order mismatch (" + std::to_string(a.order()) + " vs " +
                      std::to_string(b.order()) + ")");
  }
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) {
    if (wa[w] & wb[w]) return false;
  }
  return true;
}

PhiPairs phi_pairs(const PiMatrix& m) {
  const int n = m.order();
  const auto cells = m.cells();
  const int n2 = n * n;
  PhiPairs b{n, std::vector<std::array<int, 2>>(static_cast<std::size_t>(n2))};
  auto slot = [&](int i, int j) -> std::array<int, 2>& {
    return b.entries[static_cast<std::size_t>(i * n + j)];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) slot(i, j)[0] = cells[static_cast<std::size_t>(i * n + j)];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) slot(j, i)[1] = cells[static_cast<std::size_t>(n2 + i * n + j)];
  return b;
}

SPermMatrix phi(const PiMatrix& m) {
  const int n = m.order();
  const int n2 = n * n;
  const PhiPairs b = phi_pairs(m);
  std::vector<std::uint64_t> words(SPermMatrix::word_count(n), 0);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      const int i = s * n + b.at(s, t)[0] - 1;
      const int j = t * n + b.at(s, t)[1] - 1;
      const auto bit = static_cast<std::size_t>(i * n2 + j);
      words[bit / 64] |= std::uint64_t{1} << (bit % 64);
    }
  }
  return SPermMatrix::unchecked(n, std::move(words));
}

PiMatrix phi_inverse(const SPermMatrix& a) {
  const int n = a.order();
  std::vector<int> cells(static_cast<std::size_t>(2 * n * n), 0);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      int found = 0;
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          if (!a.test(s * n + k, t * n + l)) continue;
          if (++found > 1) break;
          cells[static_cast<std::size_t>(s * n + t)] = k + 1;
          cells[static_cast<std::size_t>((n + t) * n + s)] = l + 1;
        }
      }
      if (found != 1) {
        throw DomainError("phi_inverse: block (" + std::to_string(s) + "," + std::to_string(t) +
                          ") does not hold exactly one 1");
      }
    }
  }
  try {
    return PiMatrix(n, std::move(cells));
  } catch (const DomainError&) {
    throw DomainError("phi_inverse: input is not an S-permutation matrix");
  }
}

}  // namespace sudogen
