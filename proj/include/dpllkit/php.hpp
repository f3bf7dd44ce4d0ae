#pragma once

#include <cstdint>
#include <string>

#include "dpllkit/cnf.hpp"

namespace dpllkit {

// n pigeons, m holes; both at least 1.
struct PhpSpec {
  std::uint32_t pigeons = 1;
  std::uint32_t holes = 1;
};

// "pigeon i sits in hole k" is variable (i-1)*m + k.
Variable php_variable(const PhpSpec &spec, std::uint32_t pigeon,
                      std::uint32_t hole);

// Pigeon clauses [v(i,1) .. v(i,m)] for each i, then hole clauses
// [-v(i,k), -v(j,k)] for i < j, looping i, then j, then k. Throws
// std::invalid_argument on a zero dimension.
Formula gen_php(const PhpSpec &spec);

// DIMACS with a leading comment block mapping variables to (pigeon, hole).
std::string emit_php_dimacs(const PhpSpec &spec);

std::string php_name(const PhpSpec &spec);

}  // namespace dpllkit
