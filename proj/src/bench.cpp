#include "dpllkit/bench.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "dpllkit/oracle.hpp"
#include "dpllkit/php.hpp"
#include "dpllkit/resolution.hpp"

namespace dpllkit {

namespace {

template <class F>
double timed_ms(F &&f) {
  auto start = std::chrono::steady_clock::now();
  f();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

BenchRecord bench_instance(const std::string &name, const Formula &f,
                           SolverMode mode, std::size_t oracle_cap) {
  BenchRecord rec;
  rec.instance = name;
  rec.mode = mode;

  SolverConfig cfg;
  cfg.mode = mode;
  SolveResult result;
  rec.solve_ms = timed_ms([&] { result = solve(f, cfg); });
  rec.satisfiable = result.satisfiable;

  if (mode == SolverMode::kWitness) {
    const Verdict &v = *result.verdict;
    if (v.is_sat()) {
      rec.verified = eval(v.model(), f);
    } else {
      rec.dpll_size = dpll_size(v.proof());
      CheckReport dpll_report;
      rec.check_dpll_ms =
          timed_ms([&] { dpll_report = check_dpll(Valuation{}, f, v.proof()); });
      rec.verified = dpll_report.valid();
      if (rec.verified) {
        ResDerivation r = dpll_to_res(Valuation{}, f, v.proof());
        rec.res_size = res_size(r);
        CheckReport res_report;
        rec.check_res_ms = timed_ms([&] { res_report = check_res(f, r); });
        rec.verified = res_report.valid() && r.conclusion().empty() &&
                       *rec.res_size <= *rec.dpll_size;
      }
    }
  }

  if (oracle_cap > 0 && vars_of(f).size() <= oracle_cap)
    rec.oracle_agrees =
        brute_force_sat(f, oracle_cap).satisfiable() == rec.satisfiable;
  return rec;
}

std::vector<BenchRecord> run_bench(
    const BenchOptions &options,
    const std::function<void(const BenchRecord &)> &on_record) {
  std::vector<BenchRecord> out;
  auto record = [&](const PhpSpec &spec, const Formula &f, SolverMode mode) {
    out.push_back(bench_instance(php_name(spec), f, mode, options.oracle_cap));
    if (on_record) on_record(out.back());
  };
  for (std::uint32_t k = 1; k <= options.php_max; ++k) {
    for (PhpSpec spec : {PhpSpec{k, k}, PhpSpec{k + 1, k}}) {
      Formula f = gen_php(spec);
      if (options.witness) record(spec, f, SolverMode::kWitness);
      if (options.decide) record(spec, f, SolverMode::kDecide);
    }
  }
  return out;
}

std::string bench_header() {
  return "instance\tmode\tverdict\tdpll_size\tres_size\tsolve_ms\t"
         "check_dpll_ms\tcheck_res_ms\tverified\toracle";
}

std::string format_bench_row(const BenchRecord &r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  auto opt = [&](const auto &v) {
    if (v)
      os << *v;
    else
      os << '-';
  };
  os << r.instance << '\t'
     << (r.mode == SolverMode::kWitness ? "witness" : "decide") << '\t'
     << (r.satisfiable ? "SAT" : "UNSAT") << '\t';
  opt(r.dpll_size);
  os << '\t';
  opt(r.res_size);
  os << '\t' << r.solve_ms << '\t';
  opt(r.check_dpll_ms);
  os << '\t';
  opt(r.check_res_ms);
  os << '\t' << (r.verified ? "yes" : "NO") << '\t';
  if (r.oracle_agrees)
    os << (*r.oracle_agrees ? "agree" : "DISAGREE");
  else
    os << '-';
  return os.str();
}

}  // namespace dpllkit
