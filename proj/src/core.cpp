#include "sudogen/core.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace sudogen {

namespace {
__extension__ using U128 = unsigned __int128;
}  // namespace

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t RandomSource::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("RandomSource::below: bound must be positive");
  // Lemire, "Fast Random Integer Generation in an Interval" (2019).
  U128 product = static_cast<U128>(engine_()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<U128>(engine_()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

int RandomSource::uniform(int n) {
  if (n < 1) throw DomainError("uniform: n must be >= 1, got " + std::to_string(n));
  return static_cast<int>(below(static_cast<std::uint64_t>(n))) + 1;
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty() || !is_permutation(values_)) {
    throw DomainError("Permutation: values are not a permutation of 1..n");
  }
}

bool is_permutation(std::span<const int> values) {
  const auto n = static_cast<long long>(values.size());
  std::vector<unsigned char> seen(values.size() + 1, 0);
  for (int v : values) {
    if (v < 1 || v > n) return false;
    if (seen[v]++) return false;
  }
  return true;
}

namespace {

void require_order(int n, const char* op) {
  if (n < 1) throw DomainError(std::string(op) + ": n must be >= 1, got " + std::to_string(n));
}

}  // namespace

Tuple random_tuple(RandomSource& src, int n) {
  require_order(n, "random_tuple");
  Tuple t(static_cast<std::size_t>(n));
  for (auto& v : t) v = src.uniform(n);
  return t;
}

void fill_random_permutation(RandomSource& src, std::span<int> out) {
  const int n = static_cast<int>(out.size());
  std::iota(out.begin(), out.end(), 1);
  // out[i..n) is the remaining pool.
  for (int i = 0; i < n; ++i) {
    const int r = src.uniform(n - i) - 1;
    std::swap(out[i], out[i + r]);
  }
}

void fill_random_permutation_shift(RandomSource& src, std::span<int> out,
                                   std::span<int> pool) {
  const int n = static_cast<int>(out.size());
  std::iota(pool.begin(), pool.begin() + n, 1);
  for (int i = 0; i < n; ++i) {
    const int remaining = n - i;
    const int r = src.uniform(remaining) - 1;
    out[i] = pool[r];
    for (int j = r; j + 1 < remaining; ++j) pool[j] = pool[j + 1];
  }
}

Permutation random_permutation_direct(RandomSource& src, int n) {
  require_order(n, "random_permutation_direct");
  std::vector<int> values(static_cast<std::size_t>(n));
  fill_random_permutation(src, values);
  return Permutation(std::move(values));
}

Permutation random_permutation_shift(RandomSource& src, int n) {
  require_order(n, "random_permutation_shift");
  std::vector<int> values(static_cast<std::size_t>(n));
  std::vector<int> pool(static_cast<std::size_t>(n));
  fill_random_permutation_shift(src, values, pool);
  return Permutation(std::move(values));
}

}  // namespace sudogen
