#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dpllkit/cnf.hpp"

namespace dpllkit {

enum class DimacsErrorKind { kMalformedHeader, kToken, kBounds, kCount };

std::string_view to_string(DimacsErrorKind kind);

class DimacsError : public std::runtime_error {
 public:
  DimacsError(DimacsErrorKind kind, std::size_t line, std::size_t column,
              const std::string &message);

  DimacsErrorKind kind() const { return kind_; }
  // 1-based; column 0 when the error concerns the whole input.
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  DimacsErrorKind kind_;
  std::size_t line_, column_;
};

struct DimacsOptions {
  // Lenient mode downgrades bounds and count violations (and a missing final
  // terminator) to warnings.
  bool strict = true;
};

struct DimacsResult {
  Formula formula;
  std::uint32_t declared_variables = 0;
  std::size_t declared_clauses = 0;
  std::vector<std::string> warnings;
};

DimacsResult parse_dimacs(std::string_view text,
                          const DimacsOptions &options = {});

// Header "p cnf V C" with V the largest variable id, then one clause per
// line.
std::string emit_dimacs(const Formula &f);

}  // namespace dpllkit
