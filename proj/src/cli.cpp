#include "sudogen/cli.hpp"

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "sudogen/bench.hpp"
#include "sudogen/enumerate.hpp"
#include "sudogen/io.hpp"

namespace sudogen::cli {

namespace {

struct Options {
  std::string kind;
  int n = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t count = 1;
  std::string format = "grid";
  std::string input;
  std::string output;
  bool plain = false;
  bool parallel = false;
  bool report = false;
  bool allow_order3 = false;
  AssemblyPolicy policy;
  std::string formula;
  std::uint64_t trials = 100'000;
  std::string algorithm;
  std::vector<int> n_values;
  std::uint64_t repetitions = 5;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format require_format(const std::string& name) {
  auto f = parse_format(name);
  if (!f) throw UsageError("unknown format '" + name + "'");
  return *f;
}

std::uint64_t resolve_seed(const Options& opt, std::ostream& err) {
  if (opt.seed) return *opt.seed;
  const auto seed = entropy_seed();
  err << "seed: " << seed << "\n";
  return seed;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open input '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

/// Writes to --output when given, otherwise to `out`.
void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw UsageError("cannot open output '" + opt.output + "'");
  file << text;
}

// ---- gen -------------------------------------------------------------------

struct Generated {
  std::string text;
  nlohmann::json json;
};

Generated generate_one(ObjectKind kind, int n, std::uint64_t seed, const Options& opt,
                       Format format, std::ostream* report) {
  RandomSource src(seed);
  switch (kind) {
    case ObjectKind::Perm: {
      auto p = random_permutation_direct(src, n);
      return {format_permutation(p, format), to_json(p)};
    }
    case ObjectKind::Pi: {
      auto m = random_pi(src, n);
      return {format_pi(m, format), to_json(m)};
    }
    case ObjectKind::Sperm: {
      auto m = phi(random_pi(src, n));
      return {format_sperm(m, format, !opt.plain), to_json(m)};
    }
    case ObjectKind::Sudoku: {
      auto a = assemble(src, n, opt.policy);
      if (report) {
        *report << "seed " << seed << ": pi_draws=" << a.report.pi_matrices_generated
                << " rejections=" << a.report.rejections << " restarts=" << a.report.restarts
                << " discarded_layers=" << a.report.discarded_layers
                << " elapsed_ms=" << std::chrono::duration<double, std::milli>(a.report.elapsed).count()
                << "\n";
      }
      return {format_sudoku(a.matrix, format, !opt.plain), to_json(a.matrix)};
    }
  }
  return {};
}

int cmd_gen(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto kind = *parse_kind(opt.kind);
  const auto format = require_format(opt.format);
  if (opt.n < 1) throw UsageError("--n must be >= 1");
  if (opt.count < 1) throw UsageError("--count must be >= 1");
  const auto base = resolve_seed(opt, err);

  std::vector<Generated> results(opt.count);
  std::vector<std::exception_ptr> errors(opt.count);
  std::vector<std::ostringstream> reports(opt.count);
  auto work = [&](std::size_t i) {
    try {
      results[i] = generate_one(kind, opt.n, base + i, opt, format, opt.report ? &reports[i] : nullptr);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  if (opt.parallel && opt.count > 1) {
    const std::size_t workers =
        std::min<std::size_t>(opt.count, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < opt.count; i += workers) work(i);
      });
    }
    for (auto& t : pool) t.join();
  } else {
    for (std::size_t i = 0; i < opt.count; ++i) work(i);
  }

  for (std::size_t i = 0; i < opt.count; ++i) {
    err << reports[i].str();
    if (errors[i]) std::rethrow_exception(errors[i]);
  }

  std::string text;
  if (format == Format::Json && opt.count > 1) {
    nlohmann::json all = nlohmann::json::array();
    for (auto& r : results) all.push_back(std::move(r.json));
    text = all.dump() + "\n";
  } else {
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (i) text += "\n";
      text += results[i].text;
    }
  }
  emit(opt, out, text);
  return kOk;
}

// ---- validate ----------------------------------------------------------------

std::optional<std::string> perm_violation(const ParsedMatrix& m) {
  if (m.rows.size() != 1) return "expected a single row";
  const auto& v = m.rows.front();
  if (v.empty()) return "empty permutation";
  const int n = static_cast<int>(v.size());
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, -1);
  for (int i = 0; i < n; ++i) {
    if (v[i] < 1 || v[i] > n) {
      return "value " + std::to_string(v[i]) + " at position " + std::to_string(i) + " is outside 1.." +
             std::to_string(n);
    }
    if (seen[v[i]] >= 0) {
      return "value " + std::to_string(v[i]) + " repeats at positions " + std::to_string(seen[v[i]]) +
             " and " + std::to_string(i);
    }
    seen[v[i]] = i;
  }
  if (m.declared_n && *m.declared_n != n) return "declared n does not match length";
  return std::nullopt;
}

std::optional<std::string> pi_violation(const ParsedMatrix& m) {
  if (m.rows.empty() || m.rows.size() % 2 != 0) return "row count must be 2n";
  const auto n = m.rows.size() / 2;
  if (m.declared_n && static_cast<std::size_t>(*m.declared_n) != n) return "declared n does not match row count";
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    if (m.rows[r].size() != n) return "row " + std::to_string(r) + " has length " + std::to_string(m.rows[r].size());
    if (!is_permutation(m.rows[r])) return "row " + std::to_string(r) + " is not a permutation";
  }
  return std::nullopt;
}

std::optional<std::string> sperm_violation(const ParsedMatrix& m) {
  const auto side = m.rows.size();
  int n = 0;
  while (static_cast<std::size_t>(n) * n < side) ++n;
  if (side == 0 || static_cast<std::size_t>(n) * n != side) return "row count is not n^2";
  if (m.declared_n && *m.declared_n != n) return "declared n does not match shape";
  std::vector<int> dense;
  for (std::size_t i = 0; i < side; ++i) {
    if (m.rows[i].size() != side) return "row " + std::to_string(i) + " has wrong length";
    for (std::size_t j = 0; j < side; ++j) {
      const int v = m.rows[i][j];
      if (v != 0 && v != 1) {
        return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(v) +
               " is not binary";
      }
      dense.push_back(v);
    }
  }
  if (is_s_permutation(dense, n)) return std::nullopt;

  auto at = [&](std::size_t i, std::size_t j) { return m.rows[i][j]; };
  for (std::size_t i = 0; i < side; ++i) {
    int sum = 0;
    for (std::size_t j = 0; j < side; ++j) sum += at(i, j);
    if (sum != 1) return "row " + std::to_string(i) + " holds " + std::to_string(sum) + " ones";
  }
  for (std::size_t j = 0; j < side; ++j) {
    int sum = 0;
    for (std::size_t i = 0; i < side; ++i) sum += at(i, j);
    if (sum != 1) return "column " + std::to_string(j) + " holds " + std::to_string(sum) + " ones";
  }
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t s = 0; s < un; ++s) {
    for (std::size_t t = 0; t < un; ++t) {
      int sum = 0;
      for (std::size_t k = 0; k < un; ++k)
        for (std::size_t l = 0; l < un; ++l) sum += at(s * un + k, t * un + l);
      if (sum != 1) {
        return "block (" + std::to_string(s) + "," + std::to_string(t) + ") holds " + std::to_string(sum) +
               " ones";
      }
    }
  }
  return "not an S-permutation matrix";
}

std::optional<std::string> sudoku_violation(const ParsedMatrix& m) {
  if (auto v = find_sudoku_violation(m.rows)) return v->describe();
  if (m.declared_n && static_cast<std::size_t>(*m.declared_n) * *m.declared_n != m.rows.size()) {
    return "declared n does not match shape";
  }
  return std::nullopt;
}

std::optional<std::string> violation(ObjectKind kind, const ParsedMatrix& m) {
  switch (kind) {
    case ObjectKind::Perm: return perm_violation(m);
    case ObjectKind::Pi: return pi_violation(m);
    case ObjectKind::Sperm: return sperm_violation(m);
    case ObjectKind::Sudoku: return sudoku_violation(m);
  }
  return "unknown kind";
}

int cmd_validate(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto kind = *parse_kind(opt.kind);
  std::vector<ParsedMatrix> objects;
  try {
    objects = parse_objects(read_input(opt.input, in), kind);
  } catch (const ParseError& e) {
    err << "invalid: " << e.what() << "\n";
    return kInvalid;
  }
  int status = kOk;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const std::string prefix = objects.size() > 1 ? "object " + std::to_string(i) + ": " : "";
    if (auto v = violation(kind, objects[i])) {
      out << prefix << "invalid: " << *v << "\n";
      status = kInvalid;
    } else {
      out << prefix << "valid\n";
    }
  }
  return status;
}

// ---- count -------------------------------------------------------------------

int cmd_count(const Options& opt, std::ostream& out) {
  EnumerationReport report;
  if (opt.kind == "perm") {
    report = report_permutations(opt.n);
  } else if (opt.kind == "pi") {
    if (opt.allow_order3 && opt.n == 3) {
      report = EnumerationReport{"Pi_3", enum_pi(3, true).size(), pi_cardinality(3), false};
      report.match = report.count == report.expected;
    } else {
      report = report_pi(opt.n);
    }
  } else if (opt.kind == "sigma") {
    report = report_sperm(opt.n);
  } else {
    report = report_sudoku(opt.n);
  }

  if (opt.format == "json") {
    out << nlohmann::json{{"domain", report.domain_name},
                          {"count", report.count.str()},
                          {"expected", report.expected.str()},
                          {"match", report.match}}
               .dump()
        << "\n";
  } else {
    out << report.domain_name << ": " << report.count << " (expected " << report.expected
        << ", match=" << (report.match ? "true" : "false") << ")\n";
  }
  return report.match ? kOk : kInvalid;
}

// ---- bench -------------------------------------------------------------------

int cmd_bench_prob(const Options& opt, std::ostream& out, std::ostream& err) {
  auto formula = parse_formula(opt.formula);
  if (!formula) throw UsageError("unknown formula '" + opt.formula + "' (expected p1, p3, p5 or p6)");
  if (opt.trials < 1) throw UsageError("--trials must be >= 1");
  RandomSource src(resolve_seed(opt, err));
  const auto row = estimate_probability(*formula, opt.n, opt.trials, src);
  if (opt.format == "json") {
    out << to_json(row).dump() << "\n";
  } else if (opt.format == "csv") {
    out << probability_csv_header() << "\n" << to_csv(row) << "\n";
  } else {
    out << formula_id(row.formula) << "(" << row.n << "): closed_form=" << row.closed_form << " ("
        << row.closed_form.convert_to<double>() << ") empirical=" << row.empirical << " hits=" << row.hits
        << " trials=" << row.trials << " abs_error=" << row.abs_error
        << (row.exhaustive ? " [exhaustive]" : "") << "\n";
  }
  return kOk;
}

int cmd_bench_growth(const Options& opt, std::ostream& out) {
  std::vector<GrowthAlgorithm> algorithms;
  if (opt.algorithm == "all") {
    algorithms = all_growth_algorithms();
  } else if (auto a = parse_growth_algorithm(opt.algorithm)) {
    algorithms.push_back(*a);
  } else {
    throw UsageError("unknown algorithm '" + opt.algorithm + "'");
  }

  nlohmann::json all = nlohmann::json::array();
  if (opt.format == "csv") out << growth_csv_header() << "\n";
  for (auto a : algorithms) {
    const auto orders = opt.n_values.empty() ? default_orders(a) : opt.n_values;
    const auto report = measure_growth(a, orders, opt.repetitions, opt.seed.value_or(1));
    if (opt.format == "json") {
      all.push_back(to_json(report));
    } else if (opt.format == "csv") {
      out << to_csv(report);
    } else {
      out << report.algorithm_id << " (claimed " << report.claimed_order << ")\n";
      for (const auto& r : report.rows) {
        out << "  n=" << r.n << "  mean=" << r.mean_iteration_time.count() << " ns\n";
      }
      out << "  fitted exponent " << report.fitted_exponent << " vs claimed " << report.claimed_exponent
          << "\n";
    }
  }
  if (opt.format == "json") out << all.dump() << "\n";
  return kOk;
}

// ---- convert -----------------------------------------------------------------

int cmd_convert(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto format = require_format(opt.format);
  const std::string& what = opt.kind;
  ObjectKind source = ObjectKind::Sudoku;
  if (what == "pi-to-sperm" || what == "pi") source = ObjectKind::Pi;
  else if (what == "sperm-to-pi" || what == "sperm" || what == "sperm-to-sudoku") source = ObjectKind::Sperm;
  else if (what == "perm") source = ObjectKind::Perm;

  std::vector<ParsedMatrix> objects;
  try {
    objects = parse_objects(read_input(opt.input, in), source);
  } catch (const ParseError& e) {
    err << "invalid: " << e.what() << "\n";
    return kInvalid;
  }
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (auto v = violation(source, objects[i])) {
      err << "invalid " << kind_name(source) << " (object " << i << "): " << *v << "\n";
      return kInvalid;
    }
  }

  auto flat = [](const ParsedMatrix& m) {
    std::vector<int> cells;
    for (const auto& r : m.rows) cells.insert(cells.end(), r.begin(), r.end());
    return cells;
  };
  auto sperm_of = [&](const ParsedMatrix& m) {
    int n = 0;
    while (static_cast<std::size_t>(n) * n < m.rows.size()) ++n;
    return SPermMatrix::from_dense(n, flat(m));
  };

  std::vector<std::string> texts;
  std::vector<nlohmann::json> docs;
  auto push_sperm = [&](const SPermMatrix& m) {
    texts.push_back(format_sperm(m, format, !opt.plain));
    docs.push_back(to_json(m));
  };
  auto push_pi = [&](const PiMatrix& m) {
    texts.push_back(format_pi(m, format));
    docs.push_back(to_json(m));
  };
  auto push_sudoku = [&](const SudokuMatrix& m) {
    texts.push_back(format_sudoku(m, format, !opt.plain));
    docs.push_back(to_json(m));
  };

  if (what == "sperm-to-sudoku") {
    std::vector<SPermMatrix> layers;
    for (const auto& m : objects) layers.push_back(sperm_of(m));
    try {
      push_sudoku(compose(layers));
    } catch (const DomainError& e) {
      err << "invalid: " << e.what() << "\n";
      return kInvalid;
    }
  } else {
    for (const auto& m : objects) {
      if (what == "pi-to-sperm") push_sperm(phi(PiMatrix::from_rows(m.rows)));
      else if (what == "sperm-to-pi") push_pi(phi_inverse(sperm_of(m)));
      else if (what == "sudoku-to-sperm")
        for (const auto& layer : decompose(SudokuMatrix::from_rows(m.rows))) push_sperm(layer);
      else if (what == "pi") push_pi(PiMatrix::from_rows(m.rows));
      else if (what == "sperm") push_sperm(sperm_of(m));
      else if (what == "sudoku") push_sudoku(SudokuMatrix::from_rows(m.rows));
      else {
        auto p = Permutation(m.rows.front());
        texts.push_back(format_permutation(p, format));
        docs.push_back(to_json(p));
      }
    }
  }

  std::string text;
  if (format == Format::Json && docs.size() > 1) {
    text = nlohmann::json(docs).dump() + "\n";
  } else {
    for (std::size_t i = 0; i < texts.size(); ++i) {
      if (i) text += "\n";
      text += texts[i];
    }
  }
  emit(opt, out, text);
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random permutations, Pi matrices, S-permutation matrices and Sudoku matrices", "sudogen"};
  app.require_subcommand(1);
  Options opt;

  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", opt.seed, "64-bit seed; drawn from system entropy and echoed when omitted");
  };

  auto* gen = app.add_subcommand("gen", "Generate random objects");
  gen->add_option("kind", opt.kind, "perm | pi | sperm | sudoku")
      ->required()
      ->check(CLI::IsMember({"perm", "pi", "sperm", "sudoku"}));
  gen->add_option("--n", opt.n, "Order n")->required();
  add_seed(gen);
  gen->add_option("--count", opt.count, "Number of objects; object i uses seed + i");
  gen->add_option("--format", opt.format, "grid | json | csv")->check(CLI::IsMember({"grid", "json", "csv"}));
  gen->add_option("--output", opt.output, "Write to this file instead of standard output");
  gen->add_flag("--plain", opt.plain, "Grid output without block separators");
  gen->add_flag("--parallel", opt.parallel, "Generate --count objects on several threads");
  gen->add_flag("--report", opt.report, "Print Sudoku assembly statistics to standard error");
  gen->add_option("--per-step-attempts", opt.policy.per_step_attempts, "Pi draws per Sudoku layer before restarting");
  gen->add_option("--max-restarts", opt.policy.max_restarts, "Sudoku assembly restarts before giving up");

  auto* validate = app.add_subcommand("validate", "Check membership of objects read from a file");
  validate->add_option("kind", opt.kind, "perm | pi | sperm | sudoku")
      ->required()
      ->check(CLI::IsMember({"perm", "pi", "sperm", "sudoku"}));
  validate->add_option("--input", opt.input, "Input file, or - for standard input")->required();

  auto* count = app.add_subcommand("count", "Exhaustively count a small domain");
  count->add_option("domain", opt.kind, "perm | pi | sigma | sudoku")
      ->required()
      ->check(CLI::IsMember({"perm", "pi", "sigma", "sudoku"}));
  count->add_option("--n", opt.n, "Order n")->required();
  count->add_option("--format", opt.format, "table | json")->check(CLI::IsMember({"table", "grid", "json"}));
  count->add_flag("--allow-order3", opt.allow_order3, "Permit enumerating Pi_3 (46 656 matrices)");

  auto* bench = app.add_subcommand("bench", "Acceptance-rate estimates and timing growth");
  bench->require_subcommand(1);
  auto* prob = bench->add_subcommand("prob", "Empirical acceptance rate against its closed form");
  prob->add_option("--formula", opt.formula, "p1 | p3 | p5 | p6")->required();
  prob->add_option("--n", opt.n, "Order n")->required();
  prob->add_option("--trials", opt.trials, "Number of candidates");
  prob->add_option("--format", opt.format, "table | csv | json")->check(CLI::IsMember({"table", "grid", "csv", "json"}));
  add_seed(prob);
  auto* growth = bench->add_subcommand("growth", "Per-iteration time across orders with a fitted exponent");
  growth->add_option("--algorithm", opt.algorithm, "Algorithm id, or all")->required();
  growth->add_option("--n-values", opt.n_values, "Strictly increasing orders (at least 4)")->delimiter(',');
  growth->add_option("--repetitions", opt.repetitions, "Timed batches per order");
  growth->add_option("--format", opt.format, "table | csv | json")->check(CLI::IsMember({"table", "grid", "csv", "json"}));
  add_seed(growth);

  auto* convert = app.add_subcommand("convert", "Map or reformat objects");
  convert->add_option("conversion", opt.kind,
                      "pi-to-sperm | sperm-to-pi | sudoku-to-sperm | sperm-to-sudoku | perm | pi | sperm | sudoku")
      ->required()
      ->check(CLI::IsMember({"pi-to-sperm", "sperm-to-pi", "sudoku-to-sperm", "sperm-to-sudoku", "perm", "pi",
                             "sperm", "sudoku"}));
  convert->add_option("--input", opt.input, "Input file, or - for standard input")->required();
  convert->add_option("--format", opt.format, "grid | json | csv")->check(CLI::IsMember({"grid", "json", "csv"}));
  convert->add_option("--output", opt.output, "Write to this file instead of standard output");
  convert->add_flag("--plain", opt.plain, "Grid output without block separators");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("sudogen");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen(opt, out, err);
    if (*validate) return cmd_validate(opt, in, out, err);
    if (*count) return cmd_count(opt, out);
    if (*prob) return cmd_bench_prob(opt, out, err);
    if (*growth) return cmd_bench_growth(opt, out);
    if (*convert) return cmd_convert(opt, in, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const RetriesExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kRetriesExhausted;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace sudogen::cli
