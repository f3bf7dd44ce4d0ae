#include "dpllkit/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace dpllkit {

std::size_t oracle_cap_from_env() {
  const char *raw = std::getenv("DPLLKIT_ORACLE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultOracleCap;
  char *end = nullptr;
  unsigned long v = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0' || v > 63) return kDefaultOracleCap;
  return static_cast<std::size_t>(v);
}

OracleCapExceeded::OracleCapExceeded(std::size_t vars, std::size_t cap)
    : std::runtime_error("oracle cap exceeded: " + std::to_string(vars) +
                         " variables (cap " + std::to_string(cap) + ")"),
      vars_(vars) {}

OracleVerdict compatible(const Valuation &g, const Formula &d,
                         std::size_t cap) {
  std::vector<Variable> vars = vars_of(d);
  for (auto v : vars_of(g)) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.size() > cap) throw OracleCapExceeded(vars.size(), cap);

  auto index_of = [&](Literal l) {
    return static_cast<std::size_t>(
        std::lower_bound(vars.begin(), vars.end(), l.var()) - vars.begin());
  };
  // Literals rewritten as (variable position, wanted value).
  using Probe = std::pair<std::size_t, bool>;
  std::vector<Probe> unit_probes;
  for (auto l : g) unit_probes.emplace_back(index_of(l), l.is_positive());
  std::vector<std::vector<Probe>> clause_probes;
  for (const auto &c : d) {
    auto &probes = clause_probes.emplace_back();
    for (auto l : c) probes.emplace_back(index_of(l), l.is_positive());
  }

  const std::size_t n = vars.size();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> values(n);
  auto holds = [&](const Probe &p) { return values[p.first] == p.second; };
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    // vars[0] is the most significant digit.
    for (std::size_t i = 0; i < n; ++i) values[i] = (bits >> (n - 1 - i)) & 1u;
    bool ok = std::all_of(unit_probes.begin(), unit_probes.end(), holds) &&
              std::all_of(clause_probes.begin(), clause_probes.end(),
                          [&](const std::vector<Probe> &probes) {
                            return std::any_of(probes.begin(), probes.end(),
                                               holds);
                          });
    if (!ok) continue;
    Assignment m;
    for (std::size_t i = 0; i < n; ++i) m = m.with(vars[i], values[i]);
    return OracleVerdict{m};
  }
  return OracleVerdict{};
}

OracleVerdict brute_force_sat(const Formula &d, std::size_t cap) {
  return compatible(Valuation{}, d, cap);
}

}  // namespace dpllkit
