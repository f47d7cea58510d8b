#pragma once

#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace sudogen {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

/// |Pi_n| = (n!)^{2n}.
BigInt pi_cardinality(int n);

/// |Sigma_{n^2}| = (n!)^{2n}; equal to pi_cardinality by the phi bijection.
BigInt sperm_cardinality(int n);

/// Number of n^2 x n^2 Sudoku matrices, where known: n = 1, 2, 3.
std::optional<BigInt> known_sudoku_count(int n);

}  // namespace sudogen
