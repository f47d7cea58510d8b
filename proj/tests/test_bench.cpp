#include <cmath>

#include "doctest.h"
#include "sudogen/bench.hpp"
#include "sudogen/counting.hpp"

using namespace sudogen;

TEST_CASE("closed forms are exact rationals") {
  CHECK(closed_form(Formula::P1, 3) == Rational(6, 27));
  CHECK(closed_form(Formula::P1, 1) == Rational(1));
  CHECK(closed_form(Formula::P3, 2) == Rational(16, 256));
  CHECK(closed_form(Formula::P3, 3) == Rational(46'656, 387'420'489));
  CHECK(closed_form(Formula::P5, 2) == Rational(16, 65'536));
  const BigInt four_16 = boost::multiprecision::pow(BigInt(4), 16);
  const BigInt nine_81 = boost::multiprecision::pow(BigInt(9), 81);
  CHECK(closed_form(Formula::P6, 2) == Rational(BigInt(288), four_16));
  CHECK(closed_form(Formula::P6, 3) == Rational(BigInt("6670903752021072936960"), nine_81));
  CHECK_THROWS_AS(closed_form(Formula::P6, 4), DomainError);
  CHECK_THROWS_AS(closed_form(Formula::P1, 0), DomainError);
}

TEST_CASE("counting helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(pi_cardinality(2) == 16);
  CHECK(pi_cardinality(3) == 46'656);
  CHECK(sperm_cardinality(3) == 46'656);
  CHECK_FALSE(known_sudoku_count(4).has_value());
}

TEST_CASE("formula ids") {
  for (auto f : {Formula::P1, Formula::P3, Formula::P5, Formula::P6}) CHECK(parse_formula(formula_id(f)) == f);
  CHECK_FALSE(parse_formula("p2").has_value());
}

TEST_CASE("estimate_probability") {
  RandomSource src(17);
  SUBCASE("p1 at n = 3") {
    const auto row = estimate_probability(Formula::P1, 3, 100'000, src);
    CHECK(row.closed_form == Rational(6, 27));
    CHECK(row.abs_error < 0.01);
    CHECK(row.trials == 100'000);
    CHECK(row.abs_error == doctest::Approx(std::abs(row.empirical - 6.0 / 27.0)));
  }
  SUBCASE("p3 at n = 2") {
    const auto row = estimate_probability(Formula::P3, 2, 100'000, src);
    CHECK(row.closed_form.convert_to<double>() == 0.0625);
    CHECK(row.abs_error < 0.01);
  }
  SUBCASE("p5 at n = 2 is exhaustive and exact") {
    const auto row = estimate_probability(Formula::P5, 2, 10, src);
    CHECK(row.exhaustive);
    CHECK(row.trials == 65'536);
    CHECK(row.hits == 16);
    CHECK(row.abs_error == 0.0);
  }
  SUBCASE("p5 at n = 3 is sampled") {
    const auto row = estimate_probability(Formula::P5, 3, 1000, src);
    CHECK_FALSE(row.exhaustive);
    CHECK(row.hits == 0);
  }
  SUBCASE("p6 at n = 1 is certain") {
    const auto row = estimate_probability(Formula::P6, 1, 100, src);
    CHECK(row.empirical == 1.0);
  }
  SUBCASE("p6 at n = 2 reports raw hits") {
    const auto row = estimate_probability(Formula::P6, 2, 10'000'000, src);
    MESSAGE("p6(2): " << row.hits << " hits in " << row.trials << " trials, expected about 0.67");
    CHECK(row.trials == 10'000'000);
    CHECK(row.hits < 10);
  }
  SUBCASE("unknown sigma is a domain error") {
    CHECK_THROWS_AS(estimate_probability(Formula::P6, 4, 10, src), DomainError);
  }
}

TEST_CASE("doubling trials moves the estimate by less than 3 standard errors") {
  RandomSource a(101), b(202);
  const auto small = estimate_probability(Formula::P1, 4, 50'000, a);
  const auto large = estimate_probability(Formula::P1, 4, 100'000, b);
  const double p = small.closed_form.convert_to<double>();
  const double se = std::sqrt(p * (1 - p) / 50'000.0);
  CHECK(std::abs(small.empirical - large.empirical) < 3 * se);
}

TEST_CASE("certain generators never fail") {
  RandomSource src(3);
  CHECK(count_valid_outputs(CertainGenerator::PermutationDirect, 7, 10'000, src) == 10'000);
  CHECK(count_valid_outputs(CertainGenerator::RandomPi, 3, 10'000, src) == 10'000);
  CHECK(count_valid_outputs(CertainGenerator::RandomPi, 6, 1'000, src) == 1'000);
}

TEST_CASE("fit_power_law recovers an exact exponent") {
  const std::vector<double> xs{2, 4, 8, 16};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(3.0 * x * x);
  CHECK(fit_power_law(xs, ys) == doctest::Approx(2.0));
  CHECK_THROWS_AS(fit_power_law(std::vector<double>{1}, std::vector<double>{1}), DomainError);
  CHECK_THROWS_AS(fit_power_law(std::vector<double>{2, 2}, std::vector<double>{1, 3}), DomainError);
}

TEST_CASE("measure_growth validates its orders") {
  const std::vector<int> short_list{1, 2, 3};
  const std::vector<int> unsorted{1, 3, 2, 4};
  CHECK_THROWS_AS(measure_growth(GrowthAlgorithm::IsSudoku, short_list, 1), DomainError);
  CHECK_THROWS_AS(measure_growth(GrowthAlgorithm::IsSudoku, unsorted, 1), DomainError);
  CHECK_THROWS_AS(measure_growth(GrowthAlgorithm::IsSudoku, std::vector<int>{1, 2, 3, 4}, 0), DomainError);
}

TEST_CASE("measure_growth reports positive times and a finite exponent") {
  for (auto a : all_growth_algorithms()) {
    auto orders = default_orders(a);
    if (orders.back() > 10'000) orders = {100, 200, 400, 800};
    const auto report = measure_growth(a, orders, 2);
    CAPTURE(report.algorithm_id);
    REQUIRE(report.rows.size() == orders.size());
    for (const auto& r : report.rows) CHECK(r.mean_iteration_time.count() > 0.0);
    CHECK(std::isfinite(report.fitted_exponent));
    CHECK(parse_growth_algorithm(report.algorithm_id) == a);
  }
}

TEST_CASE("report emission") {
  RandomSource src(1);
  const auto row = estimate_probability(Formula::P5, 2, 1, src);
  CHECK(probability_csv_header() == "formula_id,n,closed_form_num,closed_form_den,empirical,trials,abs_error");
  CHECK(to_csv(row) == "p5,2,1,4096,0.000244140625,65536,0");
  const auto j = to_json(row);
  CHECK(j["formula_id"] == "p5");
  CHECK(j["closed_form_den"] == "4096");
  CHECK(j["hits"] == 16);
}
