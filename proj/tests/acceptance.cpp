// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "sudogen/bench.hpp"
#include "sudogen/cli.hpp"
#include "sudogen/enumerate.hpp"

using namespace sudogen;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

int failures = 0;

void criterion(int id, const char* name, const std::function<Verdict()>& body) {
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  if (!v.pass) ++failures;
  std::printf("%s %2d %s: %s\n", v.pass ? "PASS" : "FAIL", id, name, v.detail.c_str());
  std::fflush(stdout);
}

std::vector<int> cells_of(const SudokuMatrix& m) { return {m.cells().begin(), m.cells().end()}; }

Verdict sudoku_count() {
  const auto start = Clock::now();
  std::istringstream in;
  std::ostringstream out, err;
  const std::vector<std::string> args{"count", "sudoku", "--n", "2"};
  const int code = cli::run(args, in, out, err);
  const double t = seconds_since(start);
  const bool ok = code == 0 && out.str() == "sigma_2: 288 (expected 288, match=true)\n" && t < 10.0;
  auto line = out.str();
  if (!line.empty() && line.back() == '\n') line.pop_back();
  return {ok, fmt("\"%s\" exit=%d in %.3f s (limit 10 s)", line.c_str(), code, t)};
}

Verdict sigma4_scan() {
  const auto start = Clock::now();
  const auto scan = sperm_scan(2);
  const double t = seconds_since(start);
  const bool ok = scan.accepted == 16 && scan.trials == 65'536 && t < 1.0;
  return {ok, fmt("%llu of %llu binary 4x4 matrices in %.3f s (limit 1 s)",
                  static_cast<unsigned long long>(scan.accepted), static_cast<unsigned long long>(scan.trials), t)};
}

Verdict bijection() {
  const auto pis = enum_pi(2);
  const std::set<PiMatrix> distinct_pis(pis.begin(), pis.end());
  std::set<SPermMatrix> images;
  for (const auto& m : pis) images.insert(phi(m));
  const auto sigma = enum_sperm(2);
  const std::set<SPermMatrix> sigma_set(sigma.begin(), sigma.end());
  const bool ok = pis.size() == 16 && distinct_pis.size() == 16 && images.size() == pis.size() && images == sigma_set;
  return {ok, fmt("|Pi_2| = %zu, |phi(Pi_2)| = %zu, |Sigma_4| = %zu, image equals Sigma_4: %s", distinct_pis.size(),
                  images.size(), sigma_set.size(), images == sigma_set ? "yes" : "no")};
}

Verdict disjointness() {
  const auto pis = enum_pi(2);
  int agree = 0, pairs = 0, disjoint = 0;
  for (const auto& p : pis) {
    for (const auto& q : pis) {
      const bool a = disjoint_pi(p, q);
      agree += a == disjoint_sperm(phi(p), phi(q));
      disjoint += a;
      ++pairs;
    }
  }
  return {pairs == 256 && agree == 256, fmt("%d of %d ordered pairs agree (%d disjoint)", agree, pairs, disjoint)};
}

Verdict golden_phi() {
  const PiMatrix pi(3, oracle::kExamplePi);
  const auto image = phi(pi);
  const bool ones_ok = image.ones() == oracle::kExampleSigmaOnes && is_s_permutation(image);
  const bool back_ok = phi_inverse(image) == pi;
  return {ones_ok && back_ok,
          fmt("phi ones match: %s, phi_inverse round trip: %s", ones_ok ? "yes" : "no", back_ok ? "yes" : "no")};
}

Verdict golden_sudoku() {
  const auto m = SudokuMatrix::from_rows(oracle::kExampleSudoku);
  const bool valid = is_sudoku(oracle::kExampleSudoku);
  const auto layers = decompose(m);
  bool members = layers.size() == 9;
  for (const auto& l : layers) members = members && is_s_permutation(l);
  bool pairwise = true;
  for (std::size_t a = 0; a < layers.size(); ++a)
    for (std::size_t b = a + 1; b < layers.size(); ++b) pairwise = pairwise && disjoint_sperm(layers[a], layers[b]);
  std::vector<int> sum(81, 0);
  for (std::size_t k = 0; k < layers.size(); ++k) {
    const auto dense = layers[k].dense();
    for (std::size_t c = 0; c < dense.size(); ++c) sum[c] += static_cast<int>(k + 1) * dense[c];
  }
  const bool rebuilt = sum == oracle::flatten(oracle::kExampleSudoku);
  return {valid && members && pairwise && rebuilt,
          fmt("is_sudoku: %s, %zu layers, all in Sigma_9: %s, pairwise disjoint: %s, weighted sum rebuilds: %s",
              valid ? "yes" : "no", layers.size(), members ? "yes" : "no", pairwise ? "yes" : "no",
              rebuilt ? "yes" : "no")};
}

Verdict probability(Formula f, int n, double target, double limit_s) {
  RandomSource src(20'240'601);
  const auto start = Clock::now();
  const auto row = estimate_probability(f, n, 100'000, src);
  const double t = seconds_since(start);
  const double err = std::abs(row.empirical - target);
  const bool ok = err <= 0.01 && t < limit_s;
  return {ok, fmt("empirical %.5f vs %.4f (exact %.6f), |diff| %.5f (limit 0.01), %.3f s (limit %.0f s)",
                  row.empirical, target, row.closed_form.convert_to<double>(), err, t, limit_s)};
}

std::vector<SudokuMatrix> assembled_9x9;

Verdict totality() {
  int valid4 = 0, exhausted = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    RandomSource src(seed);
    try {
      valid4 += is_sudoku(2, assemble(src, 2).matrix.cells());
    } catch (const AssemblyExhausted&) {
      ++exhausted;
    }
  }
  int valid9 = 0;
  std::uint64_t restarts = 0;
  const auto start = Clock::now();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RandomSource src(seed);
    try {
      const auto a = assemble(src, 3);
      valid9 += is_sudoku(3, a.matrix.cells());
      restarts += a.report.restarts;
      assembled_9x9.push_back(a.matrix);
    } catch (const AssemblyExhausted&) {
      ++exhausted;
    }
  }
  const double t = seconds_since(start);
  const bool ok = valid4 == 1000 && valid9 == 20 && exhausted == 0 && t < 60.0;
  return {ok, fmt("4x4 valid %d/1000, 9x9 valid %d/20, budget failures %d, 9x9 restarts %llu, 9x9 time %.2f s "
                  "(limit 60 s)",
                  valid4, valid9, exhausted, static_cast<unsigned long long>(restarts), t)};
}

Verdict uniformity() {
  RandomSource src(77);
  std::map<std::vector<int>, std::uint64_t> perms;
  const std::uint64_t perm_samples = 600'000;
  for (std::uint64_t i = 0; i < perm_samples; ++i) {
    const auto p = random_permutation_direct(src, 3);
    ++perms[{p.values().begin(), p.values().end()}];
  }
  const double chi_perm = oracle::chi_square_uniform(perms, 6, perm_samples);

  std::map<std::vector<int>, std::uint64_t> pis;
  const std::uint64_t pi_samples = 320'000;
  for (std::uint64_t i = 0; i < pi_samples; ++i) {
    const auto m = random_pi(src, 2);
    ++pis[{m.cells().begin(), m.cells().end()}];
  }
  const double chi_pi = oracle::chi_square_uniform(pis, 16, pi_samples);
  const bool ok = perms.size() == 6 && pis.size() == 16 && chi_perm < oracle::kChiSquare999_5df &&
                  chi_pi < oracle::kChiSquare999_15df;
  return {ok, fmt("S_3 chi2 = %.3f (limit %.3f), Pi_2 chi2 = %.3f (limit %.3f)", chi_perm, oracle::kChiSquare999_5df,
                  chi_pi, oracle::kChiSquare999_15df)};
}

Verdict oracle_equivalence() {
  int sperm_agree = 0;
  std::vector<int> bits(16);
  for (std::uint32_t mask = 0; mask < 65'536; ++mask) {
    for (int b = 0; b < 16; ++b) bits[b] = static_cast<int>((mask >> b) & 1u);
    sperm_agree += is_s_permutation(bits, 2) == oracle::naive_s_permutation(bits, 2);
  }

  // Valid inputs: assembled 4x4 matrices, the assembled 9x9 matrices, and
  // symbol relabellings of the worked 9x9 example.
  std::vector<std::pair<int, std::vector<int>>> valid;
  for (std::uint64_t seed = 5'001; valid.size() < 500; ++seed) {
    RandomSource s(seed);
    valid.emplace_back(2, cells_of(assemble(s, 2).matrix));
  }
  for (const auto& m : assembled_9x9) valid.emplace_back(3, cells_of(m));
  RandomSource src(424'242);
  const auto example = oracle::flatten(oracle::kExampleSudoku);
  while (valid.size() < 1000) {
    const auto relabel = random_permutation_direct(src, 9);
    std::vector<int> cells(example.size());
    for (std::size_t c = 0; c < example.size(); ++c) cells[c] = relabel[example[c] - 1];
    valid.emplace_back(3, std::move(cells));
  }

  int valid_agree = 0, mutated_agree = 0, mutated_invalid = 0;
  for (const auto& [n, cells] : valid) {
    valid_agree += is_sudoku(n, cells) && oracle::decomposition_sudoku(n, cells);
    auto mutated = cells;
    const int n2 = n * n;
    const auto pos = src.below(mutated.size());
    if (src.bit()) {
      mutated[pos] = mutated[pos] % n2 + 1;
    } else {
      std::swap(mutated[pos], mutated[src.below(mutated.size())]);
    }
    const bool got = is_sudoku(n, mutated);
    mutated_agree += got == oracle::decomposition_sudoku(n, mutated);
    mutated_invalid += !got;
  }
  const bool ok = sperm_agree == 65'536 && valid_agree == 1000 && mutated_agree == 1000;
  return {ok, fmt("is_s_permutation agrees on %d/65536, is_sudoku agrees on %d/1000 valid and %d/1000 mutated "
                  "(%d mutated invalid)",
                  sperm_agree, valid_agree, mutated_agree, mutated_invalid)};
}

Verdict growth() {
  bool ok = true;
  std::string detail;
  for (auto a : {GrowthAlgorithm::IsPermutation, GrowthAlgorithm::PermutationShift, GrowthAlgorithm::IsSudoku}) {
    const auto r = measure_growth(a, default_orders(a), 3);
    ok = ok && std::isfinite(r.fitted_exponent) && r.fitted_exponent > 0.0;
    if (!detail.empty()) detail += ", ";
    detail += fmt("%s fitted %.2f (claimed %s)", r.algorithm_id.c_str(), r.fitted_exponent, r.claimed_order.c_str());
  }
  return {ok, detail + " [informational]"};
}

}  // namespace

int main() {
  criterion(1, "sigma_2 = 288", sudoku_count);
  criterion(2, "|Sigma_4| = 16 by exhaustive scan", sigma4_scan);
  criterion(3, "|Pi_2| = 16 and phi is a bijection onto Sigma_4", bijection);
  criterion(4, "disjointness correspondence over all Pi_2 pairs", disjointness);
  criterion(5, "golden phi and phi_inverse", golden_phi);
  criterion(6, "golden 9x9 Sudoku and its layer decomposition", golden_sudoku);
  criterion(7, "p1(3) = 6/27", [] { return probability(Formula::P1, 3, 0.2222, 1.0); });
  criterion(8, "p3(2) = 0.0625", [] { return probability(Formula::P3, 2, 0.0625, 5.0); });
  criterion(9, "generator totality", totality);
  criterion(10, "uniformity", uniformity);
  criterion(11, "oracle equivalence", oracle_equivalence);
  criterion(12, "timing growth", growth);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
