#include "dpllkit/php.hpp"

#include <sstream>
#include <stdexcept>

#include "dpllkit/dimacs.hpp"

namespace dpllkit {

Variable php_variable(const PhpSpec &spec, std::uint32_t pigeon,
                      std::uint32_t hole) {
  return Variable{(pigeon - 1) * spec.holes + hole};
}

Formula gen_php(const PhpSpec &spec) {
  if (spec.pigeons < 1 || spec.holes < 1)
    throw std::invalid_argument("PHP needs at least one pigeon and one hole");
  const std::uint32_t n = spec.pigeons, m = spec.holes;
  std::vector<Clause> clauses;
  for (std::uint32_t i = 1; i <= n; ++i) {
    std::vector<Literal> pigeon;
    for (std::uint32_t k = 1; k <= m; ++k)
      pigeon.push_back(Literal::positive(php_variable(spec, i, k)));
    clauses.push_back(Clause::canonicalize(std::move(pigeon)));
  }
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i + 1; j <= n; ++j)
      for (std::uint32_t k = 1; k <= m; ++k)
        clauses.push_back(Clause::canonicalize(
            {Literal::negative(php_variable(spec, i, k)),
             Literal::negative(php_variable(spec, j, k))}));
  return Formula::from_clauses(std::move(clauses));
}

std::string emit_php_dimacs(const PhpSpec &spec) {
  std::ostringstream os;
  os << "c " << php_name(spec) << ": variable (i-1)*" << spec.holes
     << "+k means pigeon i sits in hole k\n";
  for (std::uint32_t i = 1; i <= spec.pigeons; ++i)
    for (std::uint32_t k = 1; k <= spec.holes; ++k)
      os << "c " << php_variable(spec, i, k).id << " = (" << i << "," << k
         << ")\n";
  os << emit_dimacs(gen_php(spec));
  return os.str();
}

std::string php_name(const PhpSpec &spec) {
  return "PHP(" + std::to_string(spec.pigeons) + "," +
         std::to_string(spec.holes) + ")";
}

}  // namespace dpllkit
