#include "dpllkit/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace dpllkit {

std::string_view to_string(DimacsErrorKind kind) {
  switch (kind) {
    case DimacsErrorKind::kMalformedHeader: return "malformed-header";
    case DimacsErrorKind::kToken: return "token";
    case DimacsErrorKind::kBounds: return "bounds";
    case DimacsErrorKind::kCount: return "count";
  }
  return "?";
}

namespace {

std::string located(DimacsErrorKind kind, std::size_t line, std::size_t column,
                    const std::string &message) {
  std::ostringstream os;
  os << "dimacs " << to_string(kind) << " error";
  if (line) os << " at " << line << ':' << column;
  os << ": " << message;
  return os.str();
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_line(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::optional<std::int64_t> to_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

DimacsError::DimacsError(DimacsErrorKind kind, std::size_t line,
                         std::size_t column, const std::string &message)
    : std::runtime_error(located(kind, line, column, message)),
      kind_(kind),
      line_(line),
      column_(column) {}

DimacsResult parse_dimacs(std::string_view text, const DimacsOptions &options) {
  DimacsResult result;
  bool have_header = false;
  std::vector<Clause> clauses;
  std::size_t raw_clause_count = 0;
  std::vector<Literal> pending;
  std::size_t pending_line = 0, pending_column = 0;

  auto violation = [&](DimacsErrorKind kind, std::size_t line,
                       std::size_t column, const std::string &message) {
    if (options.strict) throw DimacsError(kind, line, column, message);
    result.warnings.push_back(located(kind, line, column, message));
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = split_line(line);
    if (tokens.empty()) continue;
    const Token &first = tokens.front();

    if (first.text.front() == 'c') continue;
    if (first.text.front() == '%' && !options.strict) break;  // SATLIB trailer

    if (first.text == "p") {
      if (have_header)
        throw DimacsError(DimacsErrorKind::kMalformedHeader, line_no,
                          first.column, "duplicate header");
      if (tokens.size() != 4 || tokens[1].text != "cnf")
        throw DimacsError(DimacsErrorKind::kMalformedHeader, line_no,
                          first.column, "expected 'p cnf <vars> <clauses>'");
      auto vars = to_int(tokens[2].text);
      auto count = to_int(tokens[3].text);
      if (!vars || *vars < 0 || *vars > 0x7fffffff)
        throw DimacsError(DimacsErrorKind::kMalformedHeader, line_no,
                          tokens[2].column, "bad variable count");
      if (!count || *count < 0)
        throw DimacsError(DimacsErrorKind::kMalformedHeader, line_no,
                          tokens[3].column, "bad clause count");
      result.declared_variables = static_cast<std::uint32_t>(*vars);
      result.declared_clauses = static_cast<std::size_t>(*count);
      have_header = true;
      continue;
    }

    if (!have_header)
      throw DimacsError(DimacsErrorKind::kMalformedHeader, line_no,
                        first.column, "clause data before header");

    for (const auto &tok : tokens) {
      auto v = to_int(tok.text);
      if (!v || *v < -0x7fffffffLL || *v > 0x7fffffffLL)
        throw DimacsError(DimacsErrorKind::kToken, line_no, tok.column,
                          "expected an integer literal, got '" +
                              std::string(tok.text) + "'");
      if (*v == 0) {
        clauses.push_back(Clause::canonicalize(std::move(pending)));
        pending.clear();
        ++raw_clause_count;
        continue;
      }
      std::int64_t magnitude = *v < 0 ? -*v : *v;
      if (magnitude > static_cast<std::int64_t>(result.declared_variables))
        violation(DimacsErrorKind::kBounds, line_no, tok.column,
                  "literal " + std::string(tok.text) + " exceeds " +
                      std::to_string(result.declared_variables) +
                      " declared variables");
      if (pending.empty()) {
        pending_line = line_no;
        pending_column = tok.column;
      }
      pending.push_back(Literal::from_dimacs(*v));
    }
  }

  if (!have_header)
    throw DimacsError(DimacsErrorKind::kMalformedHeader, 0, 0,
                      "missing 'p cnf' header");
  if (!pending.empty()) {
    violation(DimacsErrorKind::kToken, pending_line, pending_column,
              "clause not terminated by 0");
    clauses.push_back(Clause::canonicalize(std::move(pending)));
    ++raw_clause_count;
  }
  if (raw_clause_count != result.declared_clauses)
    violation(DimacsErrorKind::kCount, 0, 0,
              "header declares " + std::to_string(result.declared_clauses) +
                  " clauses, found " + std::to_string(raw_clause_count));

  result.formula = Formula::from_clauses(std::move(clauses));
  return result;
}

std::string emit_dimacs(const Formula &f) {
  std::ostringstream os;
  os << "p cnf " << max_variable(f) << ' ' << f.size() << '\n';
  for (const auto &c : f) {
    for (auto l : c) os << l << ' ';
    os << "0\n";
  }
  return os.str();
}

}  // namespace dpllkit
