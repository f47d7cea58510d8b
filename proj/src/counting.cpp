#include "sudogen/counting.hpp"

#include "sudogen/errors.hpp"

namespace sudogen {

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial: negative argument");
  BigInt out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

BigInt pi_cardinality(int n) {
  if (n < 1) throw DomainError("pi_cardinality: n must be >= 1");
  return boost::multiprecision::pow(factorial(n), static_cast<unsigned>(2 * n));
}

BigInt sperm_cardinality(int n) {
  if (n < 1) throw DomainError("sperm_cardinality: n must be >= 1");
  return boost::multiprecision::pow(factorial(n), static_cast<unsigned>(2 * n));
}

std::optional<BigInt> known_sudoku_count(int n) {
  switch (n) {
    case 1: return BigInt(1);
    case 2: return BigInt(288);
    case 3: return BigInt("6670903752021072936960");
    default: return std::nullopt;
  }
}

}  // namespace sudogen
