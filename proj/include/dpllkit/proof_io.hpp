#pragma once

// Text formats for both proof systems.
//
// DPLL derivations are one s-expression:
//
//   node   := "conflict" | "(unit" lit node ")" | "(elim" clause lit node ")"
//           | "(red" clause lit node ")" | "(split" lit node node ")"
//   clause := "[" lit* "]"          lit := nonzero signed decimal
//
// e.g. (unit 1 (unit 2 (red [ -1 -2 ] 1 (red [ -2 ] 2 conflict))))
//
// Resolution derivations are one line per node in post-order, ids from 1,
// root last:
//
//   <id> S <premise> <lits...> 0
//   <id> R <pivot> <left-id> <right-id> <lits...> 0

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dpllkit/dpll_proof.hpp"
#include "dpllkit/resolution.hpp"

namespace dpllkit {

class ProofParseError : public std::runtime_error {
 public:
  ProofParseError(std::size_t line, std::size_t column,
                  const std::string &message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

void write_dpll(std::ostream &os, const DpllDerivation &p);
std::string serialize_dpll(const DpllDerivation &p);
DpllDerivation parse_dpll(std::string_view text);

void write_res(std::ostream &os, const ResDerivation &r);
std::string serialize_res(const ResDerivation &r);
ResDerivation parse_res(std::string_view text);

}  // namespace dpllkit
