#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dpllkit/cnf.hpp"
#include "dpllkit/solver.hpp"

namespace dpllkit {

struct BenchRecord {
  std::string instance;
  SolverMode mode = SolverMode::kWitness;
  bool satisfiable = false;
  // Witness mode only.
  std::optional<std::size_t> dpll_size;
  std::optional<std::size_t> res_size;
  double solve_ms = 0;
  std::optional<double> check_dpll_ms;
  std::optional<double> check_res_ms;
  // Every produced model/proof checked, and res_size <= dpll_size.
  bool verified = true;
  // Unset when the instance exceeds the oracle cap.
  std::optional<bool> oracle_agrees;
};

struct BenchOptions {
  std::uint32_t php_max = 4;
  bool witness = true;
  bool decide = true;
  std::size_t oracle_cap = 0;  // 0 disables the oracle comparison
};

// Runs PHP(k,k) and PHP(k+1,k) for k = 1..php_max, in order. on_record sees
// each row as soon as it is measured.
std::vector<BenchRecord> run_bench(
    const BenchOptions &options,
    const std::function<void(const BenchRecord &)> &on_record = {});

BenchRecord bench_instance(const std::string &name, const Formula &f,
                           SolverMode mode, std::size_t oracle_cap);

std::string bench_header();
// Tab-separated; absent values print as "-".
std::string format_bench_row(const BenchRecord &r);

}  // namespace dpllkit
