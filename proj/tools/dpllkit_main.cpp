// dpllkit command line: solve, check, convert, gen, bench.
//
// Exit codes: 10 satisfiable, 20 unsatisfiable, 0 success / valid proof,
// 2 invalid proof, 1 usage, input or I/O errors.

#include <pthread.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dpllkit/bench.hpp"
#include "dpllkit/dimacs.hpp"
#include "dpllkit/oracle.hpp"
#include "dpllkit/php.hpp"
#include "dpllkit/proof_io.hpp"
#include "dpllkit/resolution.hpp"
#include "dpllkit/solver.hpp"

namespace {

using namespace dpllkit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;

// Search, checking and serialization recurse once per derivation level.
constexpr std::size_t kWorkerStack = std::size_t{1} << 30;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DimacsResult load_dimacs(const std::string &path, bool lenient) {
  DimacsOptions opts;
  opts.strict = !lenient;
  auto result = parse_dimacs(read_file(path), opts);
  for (const auto &w : result.warnings) std::cerr << "c warning: " << w << '\n';
  return result;
}

Formula load_cnf(const std::string &path, bool lenient) {
  return load_dimacs(path, lenient).formula;
}

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string &path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream &stream() { return file_.is_open() ? file_ : std::cout; }
  bool to_stdout() const { return !file_.is_open(); }

 private:
  std::ofstream file_;
};

struct SolveArgs {
  std::string input, mode = "witness", proof = "dpll", out;
  bool lenient = false, trace = false, assert_measure = false;
};

int run_solve(const SolveArgs &a) {
  DimacsResult input = load_dimacs(a.input, a.lenient);
  const Formula &f = input.formula;
  SolverConfig cfg;
  cfg.mode = a.mode == "decide" ? SolverMode::kDecide : SolverMode::kWitness;
  cfg.trace = a.trace;
  cfg.assert_measure = a.assert_measure;
  SolveResult result = solve(f, cfg);

  if (result.satisfiable) {
    std::cout << "s SATISFIABLE\n";
    if (result.verdict) {
      const Assignment &m = result.verdict->model();
      std::cout << 'v';
      // Every declared variable, so the line is a complete model.
      std::uint32_t n = std::max(max_variable(f), input.declared_variables);
      for (std::uint32_t v = 1; v <= n; ++v)
        std::cout << ' ' << Literal(Variable{v}, !m.value(Variable{v}));
      std::cout << " 0\n";
    }
    return kExitSat;
  }

  std::cout << "s UNSATISFIABLE\n";
  if (result.verdict && a.proof != "none") {
    std::cout.flush();
    Output out(a.out);
    const DpllDerivation &p = result.verdict->proof();
    if (a.proof == "res") {
      write_res(out.stream(), dpll_to_res(Valuation{}, f, p));
    } else {
      write_dpll(out.stream(), p);
      out.stream() << '\n';
    }
  }
  return kExitUnsat;
}

int run_check_dpll(const std::string &input, const std::string &proof,
                   bool lenient) {
  Formula f = load_cnf(input, lenient);
  DpllDerivation p;
  try {
    p = parse_dpll(read_file(proof));
  } catch (const ProofParseError &e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return kExitInvalid;
  }
  CheckReport report = check_dpll(Valuation{}, f, p);
  if (!report.valid()) {
    std::cerr << "invalid: " << describe(report) << '\n';
    return kExitInvalid;
  }
  std::cout << "s VERIFIED\n";
  return kExitOk;
}

int run_check_res(const std::string &input, const std::string &proof,
                  bool lenient) {
  Formula f = load_cnf(input, lenient);
  std::optional<ResDerivation> r;
  try {
    r = parse_res(read_file(proof));
  } catch (const ProofParseError &e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return kExitInvalid;
  }
  CheckReport report = check_res(f, *r);
  if (!report.valid()) {
    std::cerr << "invalid: " << describe(report) << '\n';
    return kExitInvalid;
  }
  if (!r->conclusion().empty()) {
    std::cerr << "invalid: conclusion is not the empty clause\n";
    return kExitInvalid;
  }
  std::cout << "s VERIFIED\n";
  return kExitOk;
}

int run_convert(const std::string &input, const std::string &proof,
                const std::string &out_path, bool lenient) {
  Formula f = load_cnf(input, lenient);
  DpllDerivation p;
  try {
    p = parse_dpll(read_file(proof));
  } catch (const ProofParseError &e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return kExitInvalid;
  }
  std::optional<ResDerivation> r;
  try {
    r = dpll_to_res(Valuation{}, f, p);
  } catch (const InvalidDerivation &e) {
    std::cerr << "invalid: " << describe(e.report()) << '\n';
    return kExitInvalid;
  }
  std::size_t n = dpll_size(p), m = res_size(*r);
  if (m > n) {
    std::cerr << "error: resolution size " << m << " exceeds DPLL size " << n
              << '\n';
    return kExitInvalid;
  }
  Output out(out_path);
  // Sizes go to stderr when stdout carries the proof.
  std::ostream &info = out.to_stdout() ? std::cerr : std::cout;
  info << "c dpll_size " << n << "\nc res_size " << m << '\n';
  write_res(out.stream(), *r);
  return kExitOk;
}

int run_gen(std::uint32_t n, std::uint32_t m, const std::string &out_path) {
  if (n < 1 || m < 1) throw UsageError("gen php needs N >= 1 and M >= 1");
  Output out(out_path);
  out.stream() << emit_php_dimacs(PhpSpec{n, m});
  return kExitOk;
}

int run_bench_cmd(std::uint32_t php_max, const std::string &mode) {
  BenchOptions opts;
  opts.php_max = php_max;
  opts.witness = mode != "decide";
  opts.decide = mode != "witness";
  opts.oracle_cap = oracle_cap_from_env();
  std::cout << bench_header() << '\n';
  bool ok = true;
  run_bench(opts, [&](const BenchRecord &rec) {
    std::cout << format_bench_row(rec) << '\n' << std::flush;
    ok = ok && rec.verified && rec.oracle_agrees.value_or(true);
  });
  return ok ? kExitOk : kExitInvalid;
}

int run_cli(int argc, char **argv) {
  CLI::App app{"Proof-producing DPLL solver and proof checkers", "dpllkit"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto *solve_cmd = app.add_subcommand("solve", "Solve a DIMACS CNF file");
  solve_cmd->add_option("--mode", solve_args.mode, "witness or decide")
      ->check(CLI::IsMember({"witness", "decide"}));
  solve_cmd->add_option("--proof", solve_args.proof, "dpll, res or none")
      ->check(CLI::IsMember({"dpll", "res", "none"}));
  solve_cmd->add_option("--out", solve_args.out, "Proof output file");
  solve_cmd->add_flag("--lenient", solve_args.lenient,
                      "Downgrade DIMACS bound/count errors to warnings");
  solve_cmd->add_flag("--trace", solve_args.trace, "Trace the search on stderr");
  solve_cmd->add_flag("--assert-measure", solve_args.assert_measure,
                      "Check the termination measure on every call");
  solve_cmd->add_option("INPUT", solve_args.input)->required();

  std::string input, proof, out;
  bool lenient = false;
  auto *check_cmd = app.add_subcommand("check", "Check a proof");
  check_cmd->require_subcommand(1);
  auto *check_dpll_cmd = check_cmd->add_subcommand("dpll", "Check a DPLL proof");
  auto *check_res_cmd =
      check_cmd->add_subcommand("res", "Check a resolution proof");
  for (auto *c : {check_dpll_cmd, check_res_cmd}) {
    c->add_option("INPUT", input)->required();
    c->add_option("PROOF", proof)->required();
    c->add_flag("--lenient", lenient);
  }

  auto *convert_cmd = app.add_subcommand("convert", "Translate proofs");
  convert_cmd->require_subcommand(1);
  auto *dpll2res_cmd = convert_cmd->add_subcommand(
      "dpll2res", "Translate a DPLL proof into a resolution proof");
  dpll2res_cmd->add_option("INPUT", input)->required();
  dpll2res_cmd->add_option("PROOF", proof)->required();
  dpll2res_cmd->add_option("--out", out);
  dpll2res_cmd->add_flag("--lenient", lenient);

  std::uint32_t php_n = 0, php_m = 0;
  auto *gen_cmd = app.add_subcommand("gen", "Generate benchmark formulae");
  gen_cmd->require_subcommand(1);
  auto *gen_php_cmd = gen_cmd->add_subcommand("php", "Pigeonhole PHP(N,M)");
  gen_php_cmd->add_option("N", php_n)->required();
  gen_php_cmd->add_option("M", php_m)->required();
  gen_php_cmd->add_option("--out", out);

  std::uint32_t php_max = 0;
  std::string bench_mode = "both";
  auto *bench_cmd = app.add_subcommand("bench", "Run the PHP benchmark ladder");
  bench_cmd->add_option("--php-max", php_max)->required();
  bench_cmd->add_option("--mode", bench_mode)
      ->check(CLI::IsMember({"witness", "decide", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args);
    if (*check_dpll_cmd) return run_check_dpll(input, proof, lenient);
    if (*check_res_cmd) return run_check_res(input, proof, lenient);
    if (*dpll2res_cmd) return run_convert(input, proof, out, lenient);
    if (*gen_php_cmd) return run_gen(php_n, php_m, out);
    if (*bench_cmd) return run_bench_cmd(php_max, bench_mode);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DimacsError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

struct CliCall {
  int argc;
  char **argv;
  int status;
};

void *cli_thread(void *arg) {
  auto *call = static_cast<CliCall *>(arg);
  call->status = run_cli(call->argc, call->argv);
  return nullptr;
}

}  // namespace

int main(int argc, char **argv) {
  CliCall call{argc, argv, kExitUsage};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, kWorkerStack);
  pthread_t worker;
  if (pthread_create(&worker, &attr, cli_thread, &call) != 0) {
    pthread_attr_destroy(&attr);
    return run_cli(argc, argv);
  }
  pthread_join(worker, nullptr);
  pthread_attr_destroy(&attr);
  std::cout.flush();
  return call.status;
}
