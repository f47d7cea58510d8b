#include "sudogen/bench.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <stdexcept>

#include "sudogen/enumerate.hpp"
#include "sudogen/pi.hpp"
#include "sudogen/sampler.hpp"
#include "sudogen/sperm.hpp"
#include "sudogen/sudoku.hpp"

namespace sudogen {

namespace {

constexpr std::array<std::pair<Formula, std::string_view>, 4> kFormulaIds{{
    {Formula::P1, "p1"},
    {Formula::P3, "p3"},
    {Formula::P5, "p5"},
    {Formula::P6, "p6"},
}};

constexpr std::array<std::pair<GrowthAlgorithm, GrowthAlgorithmInfo>, 8> kGrowth{{
    {GrowthAlgorithm::IsPermutation, {"is_permutation", "n", 1.0}},
    {GrowthAlgorithm::TupleRejection, {"tuple_rejection", "n", 1.0}},
    {GrowthAlgorithm::PermutationDirect, {"perm_direct", "n", 1.0}},
    {GrowthAlgorithm::PermutationShift, {"perm_shift", "n^2", 2.0}},
    {GrowthAlgorithm::PiRejection, {"pi_rejection", "n^2", 2.0}},
    {GrowthAlgorithm::RandomPiShift, {"random_pi_shift", "n^3", 3.0}},
    {GrowthAlgorithm::IsSPermutation, {"is_s_permutation", "n^4", 4.0}},
    {GrowthAlgorithm::IsSudoku, {"is_sudoku", "n^4", 4.0}},
}};

BigInt ipow(const BigInt& base, long long exp) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::vector<int> random_values(RandomSource& src, std::size_t count, int range) {
  std::vector<int> out(count);
  for (auto& v : out) v = src.uniform(range);
  return out;
}

}  // namespace

std::string_view formula_id(Formula f) {
  for (const auto& [key, id] : kFormulaIds)
    if (key == f) return id;
  return "?";
}

std::optional<Formula> parse_formula(std::string_view id) {
  for (const auto& [key, name] : kFormulaIds)
    if (name == id) return key;
  return std::nullopt;
}

Rational closed_form(Formula f, int n) {
  if (n < 1) throw DomainError("closed_form: n must be >= 1");
  const long long nn = n;
  switch (f) {
    case Formula::P1:
      return Rational(factorial(n), ipow(BigInt(n), nn));
    case Formula::P3:
      return Rational(pi_cardinality(n), ipow(BigInt(n), 2 * nn * nn));
    case Formula::P5:
      return Rational(sperm_cardinality(n), ipow(BigInt(2), nn * nn * nn * nn));
    case Formula::P6: {
      auto sigma = known_sudoku_count(n);
      if (!sigma) throw DomainError("closed_form: Sudoku count unknown for n = " + std::to_string(n));
      return Rational(*sigma, ipow(BigInt(n), 2 * nn * nn * nn * nn));
    }
  }
  throw DomainError("closed_form: unknown formula");
}

ProbabilityRow estimate_probability(Formula f, int n, std::uint64_t trials, RandomSource& src) {
  ProbabilityRow row;
  row.formula = f;
  row.n = n;
  row.closed_form = closed_form(f, n);

  AcceptanceCount count;
  const auto un = static_cast<std::size_t>(n);
  switch (f) {
    case Formula::P1:
      count = count_acceptances([&] { return random_tuple(src, n); },
                                [](const Tuple& t) { return is_permutation(t); }, trials);
      break;
    case Formula::P3:
      count = count_acceptances([&] { return random_values(src, 2 * un * un, n); },
                                [n](const std::vector<int>& c) { return is_pi(n, c); }, trials);
      break;
    case Formula::P5:
      if (n <= 2) {
        count = sperm_scan(n);
        row.exhaustive = true;
      } else {
        const std::size_t cells = un * un * un * un;
        count = count_acceptances(
            [&] {
              std::vector<int> bits(cells);
              for (auto& b : bits) b = src.bit();
              return bits;
            },
            [n](const std::vector<int>& b) { return is_s_permutation(b, n); }, trials);
      }
      break;
    case Formula::P6:
      count = count_acceptances([&] { return random_values(src, un * un * un * un, n * n); },
                                [n](const std::vector<int>& c) { return is_sudoku(n, c); }, trials);
      break;
  }
  row.trials = count.trials;
  row.hits = count.accepted;
  row.empirical = count.rate();
  row.abs_error = std::abs(row.empirical - row.closed_form.convert_to<double>());
  return row;
}

std::uint64_t count_valid_outputs(CertainGenerator g, int n, std::uint64_t trials, RandomSource& src) {
  switch (g) {
    case CertainGenerator::PermutationDirect:
      return count_acceptances([&] { return random_permutation_direct(src, n); },
                               [](const Permutation& p) { return is_permutation(p.values()); }, trials)
          .accepted;
    case CertainGenerator::RandomPi:
      return count_acceptances([&] { return random_pi(src, n); },
                               [n](const PiMatrix& m) { return is_pi(n, m.cells()); }, trials)
          .accepted;
  }
  return 0;
}

GrowthAlgorithmInfo growth_algorithm_info(GrowthAlgorithm a) {
  for (const auto& [key, info] : kGrowth)
    if (key == a) return info;
  return {"?", "?", 0.0};
}

std::optional<GrowthAlgorithm> parse_growth_algorithm(std::string_view id) {
  for (const auto& [key, info] : kGrowth)
    if (info.id == id) return key;
  return std::nullopt;
}

std::vector<GrowthAlgorithm> all_growth_algorithms() {
  std::vector<GrowthAlgorithm> out;
  for (const auto& [key, info] : kGrowth) out.push_back(key);
  return out;
}

std::vector<int> default_orders(GrowthAlgorithm a) {
  switch (a) {
    case GrowthAlgorithm::IsPermutation:
    case GrowthAlgorithm::TupleRejection:
    case GrowthAlgorithm::PermutationDirect:
      return {1'000, 10'000, 100'000, 1'000'000};
    case GrowthAlgorithm::PermutationShift:
      return {1'024, 2'048, 4'096, 8'192};
    case GrowthAlgorithm::PiRejection:
      return {8, 16, 32, 64};
    case GrowthAlgorithm::RandomPiShift:
      return {64, 128, 256, 512};
    case GrowthAlgorithm::IsSPermutation:
      return {2, 3, 4, 5};
    case GrowthAlgorithm::IsSudoku:
      return {4, 8, 16, 32};
  }
  return {};
}

double fit_power_law(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw DomainError("fit_power_law: need at least two paired samples");
  }
  const auto m = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) throw DomainError("fit_power_law: xs are all equal");
  return (m * sxy - sx * sy) / denom;
}

namespace {

/// One iteration of the timed algorithm at a fixed order. Inputs that are
/// not part of the measured work are prepared up front.
std::function<std::uint64_t()> make_iteration(GrowthAlgorithm a, int n, RandomSource& src) {
  const auto un = static_cast<std::size_t>(n);
  switch (a) {
    case GrowthAlgorithm::IsPermutation: {
      auto p = random_permutation_direct(src, n);
      std::vector<int> values(p.values().begin(), p.values().end());
      if (!is_permutation(values)) throw std::logic_error("measure_growth: timed input is not a permutation");
      return [values = std::move(values)] { return std::uint64_t{is_permutation(values)}; };
    }
    case GrowthAlgorithm::TupleRejection:
      return [&src, n] { return std::uint64_t{is_permutation(random_tuple(src, n))}; };
    case GrowthAlgorithm::PermutationDirect: {
      auto out = std::make_shared<std::vector<int>>(un);
      return [&src, out] {
        fill_random_permutation(src, *out);
        return static_cast<std::uint64_t>(out->front());
      };
    }
    case GrowthAlgorithm::PermutationShift: {
      auto out = std::make_shared<std::vector<int>>(un);
      auto pool = std::make_shared<std::vector<int>>(un);
      return [&src, out, pool] {
        fill_random_permutation_shift(src, *out, *pool);
        return static_cast<std::uint64_t>(out->front());
      };
    }
    case GrowthAlgorithm::PiRejection:
      return [&src, n, un] { return std::uint64_t{is_pi(n, random_values(src, 2 * un * un, n))}; };
    case GrowthAlgorithm::RandomPiShift:
      return [&src, n] { return static_cast<std::uint64_t>(random_pi_shift(src, n).at(0, 0)); };
    case GrowthAlgorithm::IsSPermutation: {
      auto dense = phi(random_pi(src, n)).dense();
      if (!is_s_permutation(dense, n)) throw std::logic_error("measure_growth: timed input is not in Sigma");
      return [dense = std::move(dense), n] { return std::uint64_t{is_s_permutation(dense, n)}; };
    }
    case GrowthAlgorithm::IsSudoku: {
      const auto m = canonical_sudoku(n);
      std::vector<int> copy(m.cells().begin(), m.cells().end());
      if (!is_sudoku(n, copy)) throw std::logic_error("measure_growth: timed input is not a Sudoku");
      return [copy = std::move(copy), n] { return std::uint64_t{is_sudoku(n, copy)}; };
    }
  }
  throw DomainError("measure_growth: unknown algorithm");
}

}  // namespace

GrowthReport measure_growth(GrowthAlgorithm algorithm, std::span<const int> n_values,
                            std::uint64_t repetitions, std::uint64_t seed) {
  if (n_values.size() < 4) throw DomainError("measure_growth: need at least 4 orders");
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (n_values[i] < 1 || (i > 0 && n_values[i] <= n_values[i - 1])) {
      throw DomainError("measure_growth: orders must be positive and strictly increasing");
    }
  }
  if (repetitions == 0) throw DomainError("measure_growth: repetitions must be >= 1");

  using Clock = std::chrono::steady_clock;
  using Nanos = std::chrono::duration<double, std::nano>;
  const auto info = growth_algorithm_info(algorithm);
  GrowthReport report{std::string(info.id), std::string(info.claimed_order), info.claimed_exponent, {}, 0.0};

  RandomSource src(seed);
  volatile std::uint64_t sink = 0;
  std::vector<double> xs, ys;
  for (int n : n_values) {
    auto iteration = make_iteration(algorithm, n, src);
    auto run_batch = [&](std::uint64_t iters) {
      std::uint64_t acc = 0;
      const auto start = Clock::now();
      for (std::uint64_t i = 0; i < iters; ++i) acc += iteration();
      const Nanos elapsed = Clock::now() - start;
      sink = sink + acc;
      return elapsed;
    };

    std::uint64_t iters = 1;
    while (run_batch(iters) < std::chrono::milliseconds(1) && iters < (std::uint64_t{1} << 40)) {
      iters *= 2;
    }
    run_batch(iters);  // warm-up

    std::vector<double> per_iteration;
    per_iteration.reserve(repetitions);
    for (std::uint64_t r = 0; r < repetitions; ++r) {
      per_iteration.push_back(run_batch(iters).count() / static_cast<double>(iters));
    }
    std::nth_element(per_iteration.begin(), per_iteration.begin() + per_iteration.size() / 2,
                     per_iteration.end());
    const double median = per_iteration[per_iteration.size() / 2];

    report.rows.push_back(TimingRow{report.algorithm_id, n, Nanos(median), report.claimed_order, iters});
    xs.push_back(static_cast<double>(n));
    ys.push_back(median);
  }
  report.fitted_exponent = fit_power_law(xs, ys);
  return report;
}

std::string probability_csv_header() {
  return "formula_id,n,closed_form_num,closed_form_den,empirical,trials,abs_error";
}

std::string to_csv(const ProbabilityRow& row) {
  return std::string(formula_id(row.formula)) + "," + std::to_string(row.n) + "," +
         boost::multiprecision::numerator(row.closed_form).str() + "," +
         boost::multiprecision::denominator(row.closed_form).str() + "," +
         format_double(row.empirical) + "," + std::to_string(row.trials) + "," +
         format_double(row.abs_error);
}

nlohmann::json to_json(const ProbabilityRow& row) {
  return {
      {"formula_id", formula_id(row.formula)},
      {"n", row.n},
      {"closed_form_num", boost::multiprecision::numerator(row.closed_form).str()},
      {"closed_form_den", boost::multiprecision::denominator(row.closed_form).str()},
      {"closed_form", row.closed_form.convert_to<double>()},
      {"empirical", row.empirical},
      {"trials", row.trials},
      {"hits", row.hits},
      {"abs_error", row.abs_error},
      {"exhaustive", row.exhaustive},
  };
}

std::string growth_csv_header() {
  return "algorithm_id,n,mean_iteration_ns,claimed_order,iterations_per_batch";
}

std::string to_csv(const GrowthReport& report) {
  std::string out;
  for (const auto& r : report.rows) {
    out += r.algorithm_id + "," + std::to_string(r.n) + "," + format_double(r.mean_iteration_time.count()) +
           "," + r.claimed_order + "," + std::to_string(r.iterations_per_batch) + "\n";
  }
  return out;
}

nlohmann::json to_json(const GrowthReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.n},
                    {"mean_iteration_ns", r.mean_iteration_time.count()},
                    {"iterations_per_batch", r.iterations_per_batch}});
  }
  return {{"algorithm_id", report.algorithm_id},
          {"claimed_order", report.claimed_order},
          {"claimed_exponent", report.claimed_exponent},
          {"fitted_exponent", report.fitted_exponent},
          {"rows", rows}};
}

}  // namespace sudogen
