#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sudogen/core.hpp"
#include "sudogen/counting.hpp"

namespace sudogen {

/// Acceptance probabilities of the plain generate-and-test schemes:
///   p1  random n-tuple over Z_n is a permutation       n! / n^n
///   p3  random 2n x n matrix over Z_n is in Pi_n        (n!)^{2n} / n^{2n^2}
///   p5  random binary n^2 x n^2 matrix is in Sigma      (n!)^{2n} / 2^{n^4}
///   p6  random n^2 x n^2 matrix over Z_{n^2} is Sudoku  sigma_n / n^{2n^4}
enum class Formula { P1, P3, P5, P6 };

std::string_view formula_id(Formula f);
std::optional<Formula> parse_formula(std::string_view id);

/// Exact closed form. Throws DomainError for n < 1 or, for p6, an order
/// whose Sudoku count is unknown (n > 3).
Rational closed_form(Formula f, int n);

struct ProbabilityRow {
  Formula formula = Formula::P1;
  int n = 0;
  Rational closed_form;
  double empirical = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double abs_error = 0.0;
  /// True when the whole candidate space was scanned instead of sampled.
  bool exhaustive = false;
};

/// Empirical acceptance rate next to the exact closed form. p5 with n <= 2
/// scans all 2^{n^4} candidates and ignores `trials`.
ProbabilityRow estimate_probability(Formula f, int n, std::uint64_t trials, RandomSource& src);

/// Generators whose acceptance probability is exactly 1.
enum class CertainGenerator { PermutationDirect, RandomPi };

/// How many of `trials` outputs pass their membership test. Equals `trials`
/// for a correct generator.
std::uint64_t count_valid_outputs(CertainGenerator g, int n, std::uint64_t trials, RandomSource& src);

enum class GrowthAlgorithm {
  IsPermutation,      // membership check alone, claimed n
  TupleRejection,     // one iteration of tuple generate-and-check, claimed n
  PermutationDirect,  // swap-deletion draw, n
  PermutationShift,   // shift-deletion draw, n^2
  PiRejection,        // 2n^2 values + 2n row checks, n^2
  RandomPiShift,      // 2n shift-deletion permutations, n^3
  IsSPermutation,     // n^4
  IsSudoku,           // n^4
};

struct GrowthAlgorithmInfo {
  std::string_view id;
  std::string_view claimed_order;
  double claimed_exponent;
};

GrowthAlgorithmInfo growth_algorithm_info(GrowthAlgorithm a);
std::optional<GrowthAlgorithm> parse_growth_algorithm(std::string_view id);
std::vector<GrowthAlgorithm> all_growth_algorithms();
/// Orders that give a readable slope at desk scale.
std::vector<int> default_orders(GrowthAlgorithm a);

struct TimingRow {
  std::string algorithm_id;
  int n = 0;
  std::chrono::duration<double, std::nano> mean_iteration_time{0};
  std::string claimed_order;
  std::uint64_t iterations_per_batch = 0;
};

struct GrowthReport {
  std::string algorithm_id;
  std::string claimed_order;
  double claimed_exponent = 0.0;
  std::vector<TimingRow> rows;
  double fitted_exponent = 0.0;
};

/// Times one iteration of `algorithm` at each order. Each batch is scaled
/// until it spans at least 1 ms; the row holds the median over `repetitions`
/// batches after a discarded warm-up. `n_values` must be strictly increasing
/// with at least 4 entries.
GrowthReport measure_growth(GrowthAlgorithm algorithm, std::span<const int> n_values,
                            std::uint64_t repetitions, std::uint64_t seed = 1);

/// Least-squares slope of log(ys) against log(xs).
double fit_power_law(std::span<const double> xs, std::span<const double> ys);

// Report emission. CSV columns:
// formula_id,n,closed_form_num,closed_form_den,empirical,trials,abs_error
std::string probability_csv_header();
std::string to_csv(const ProbabilityRow& row);
nlohmann::json to_json(const ProbabilityRow& row);

std::string growth_csv_header();
std::string to_csv(const GrowthReport& report);
nlohmann::json to_json(const GrowthReport& report);

}  // namespace sudogen
