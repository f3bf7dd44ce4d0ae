#include "dpllkit/proof_io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace dpllkit {

ProofParseError::ProofParseError(std::size_t line, std::size_t column,
                                 const std::string &message)
    : std::runtime_error("proof parse error at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

void write_clause(std::ostream &os, const Clause &c) {
  os << '[';
  for (auto l : c) os << ' ' << l;
  os << " ]";
}

void write_dpll_node(std::ostream &os, const DpllDerivation &p) {
  using Rule = DpllDerivation::Rule;
  switch (p.rule()) {
    case Rule::kConflict:
      os << "conflict";
      return;
    case Rule::kUnit:
      os << "(unit " << p.literal() << ' ';
      write_dpll_node(os, p.sub());
      os << ')';
      return;
    case Rule::kElim:
    case Rule::kRed:
      os << '(' << to_string(p.rule()) << ' ';
      write_clause(os, p.clause());
      os << ' ' << p.literal() << ' ';
      write_dpll_node(os, p.sub());
      os << ')';
      return;
    case Rule::kSplit:
      os << "(split " << p.literal() << ' ';
      write_dpll_node(os, p.left());
      os << ' ';
      write_dpll_node(os, p.right());
      os << ')';
      return;
  }
}

std::optional<Literal> to_literal(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  if (v == 0 || v > 0x7fffffffLL || v < -0x7fffffffLL) return std::nullopt;
  return Literal::from_dimacs(v);
}

// Tokens are "(", ")", "[", "]" and maximal runs of other non-space
// characters.
class SexprLexer {
 public:
  struct Token {
    std::string_view text;
    std::size_t line = 0, column = 0;
  };

  explicit SexprLexer(std::string_view text) : text_(text) { advance(); }

  const Token &peek() const { return current_; }
  bool at_end() const { return current_.text.empty(); }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void error(const Token &t, const std::string &message) const {
    throw ProofParseError(t.line, t.column, message);
  }

 private:
  static bool is_delim(char c) {
    return c == '(' || c == ')' || c == '[' || c == ']';
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      bump();
    current_ = Token{{}, line_, column_};
    if (pos_ >= text_.size()) return;
    std::size_t start = pos_;
    if (is_delim(text_[pos_])) {
      bump();
    } else {
      while (pos_ < text_.size() && !is_delim(text_[pos_]) &&
             !std::isspace(static_cast<unsigned char>(text_[pos_])))
        bump();
    }
    current_.text = text_.substr(start, pos_ - start);
  }

  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, column_ = 1;
  Token current_;
};

class DpllParser {
 public:
  explicit DpllParser(std::string_view text) : lex_(text) {}

  DpllDerivation parse() {
    if (lex_.at_end()) lex_.error(lex_.peek(), "empty derivation");
    DpllDerivation d = node();
    if (!lex_.at_end()) lex_.error(lex_.peek(), "trailing input");
    return d;
  }

 private:
  void expect(std::string_view what) {
    auto t = lex_.next();
    if (t.text != what)
      lex_.error(t, "expected '" + std::string(what) + "', got '" +
                        std::string(t.text) + "'");
  }

  Literal literal() {
    auto t = lex_.next();
    auto l = to_literal(t.text);
    if (!l) lex_.error(t, "expected a literal, got '" + std::string(t.text) + "'");
    return *l;
  }

  Clause clause() {
    expect("[");
    std::vector<Literal> lits;
    while (!lex_.at_end() && lex_.peek().text != "]") lits.push_back(literal());
    expect("]");
    return Clause::canonicalize(std::move(lits));
  }

  DpllDerivation node() {
    auto t = lex_.next();
    if (t.text == "conflict") return DpllDerivation::conflict();
    if (t.text != "(")
      lex_.error(t, "expected 'conflict' or '(', got '" + std::string(t.text) +
                        "'");
    auto kw = lex_.next();
    DpllDerivation out;
    if (kw.text == "unit") {
      Literal l = literal();
      out = DpllDerivation::unit(l, node());
    } else if (kw.text == "elim" || kw.text == "red") {
      Clause c = clause();
      Literal l = literal();
      DpllDerivation sub = node();
      out = kw.text == "elim" ? DpllDerivation::elim(std::move(c), l, sub)
                              : DpllDerivation::red(std::move(c), l, sub);
    } else if (kw.text == "split") {
      Literal l = literal();
      DpllDerivation a = node();
      DpllDerivation b = node();
      out = DpllDerivation::split(l, std::move(a), std::move(b));
    } else {
      lex_.error(kw, "unknown rule '" + std::string(kw.text) + "'");
    }
    expect(")");
    return out;
  }

  SexprLexer lex_;
};

std::size_t write_res_node(std::ostream &os, const ResDerivation &r,
                           std::size_t &next_id) {
  if (r.rule() == ResDerivation::Rule::kSub) {
    std::size_t id = next_id++;
    os << id << " S " << r.premise_index();
    for (auto l : r.conclusion()) os << ' ' << l;
    os << " 0\n";
    return id;
  }
  std::size_t left = write_res_node(os, r.left(), next_id);
  std::size_t right = write_res_node(os, r.right(), next_id);
  std::size_t id = next_id++;
  os << id << " R " << r.pivot() << ' ' << left << ' ' << right;
  for (auto l : r.conclusion()) os << ' ' << l;
  os << " 0\n";
  return id;
}

}  // namespace

void write_dpll(std::ostream &os, const DpllDerivation &p) {
  write_dpll_node(os, p);
}

std::string serialize_dpll(const DpllDerivation &p) {
  std::ostringstream os;
  write_dpll(os, p);
  return os.str();
}

DpllDerivation parse_dpll(std::string_view text) {
  return DpllParser(text).parse();
}

void write_res(std::ostream &os, const ResDerivation &r) {
  std::size_t next_id = 1;
  write_res_node(os, r, next_id);
}

std::string serialize_res(const ResDerivation &r) {
  std::ostringstream os;
  write_res(os, r);
  return os.str();
}

ResDerivation parse_res(std::string_view text) {
  std::vector<ResDerivation> nodes;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      std::size_t start = i;
      while (i < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      if (i > start) tokens.emplace_back(line.substr(start, i - start), start + 1);
    }
    if (tokens.empty() || tokens[0].first == "c") continue;

    auto fail = [&](std::size_t k, const std::string &message) {
      std::size_t column = k < tokens.size() ? tokens[k].second : line.size() + 1;
      throw ProofParseError(line_no, column, message);
    };
    auto number = [&](std::size_t k) -> std::size_t {
      if (k >= tokens.size()) fail(k, "line ends early");
      std::size_t v = 0;
      auto s = tokens[k].first;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || ptr != s.data() + s.size())
        fail(k, "expected a non-negative integer, got '" + std::string(s) + "'");
      return v;
    };
    auto literal = [&](std::size_t k) {
      if (k >= tokens.size()) fail(k, "line ends early");
      auto l = to_literal(tokens[k].first);
      if (!l) fail(k, "expected a literal, got '" + std::string(tokens[k].first) + "'");
      return *l;
    };
    auto child = [&](std::size_t k) {
      std::size_t id = number(k);
      if (id < 1 || id > nodes.size())
        fail(k, "reference to undefined node " + std::to_string(id));
      return nodes[id - 1];
    };

    std::size_t id = number(0);
    if (id != nodes.size() + 1)
      fail(0, "expected node id " + std::to_string(nodes.size() + 1));
    if (tokens.size() < 2) fail(1, "missing node kind");

    std::size_t k = 0;
    bool is_sub = tokens[1].first == "S";
    if (!is_sub && tokens[1].first != "R")
      fail(1, "node kind must be S or R");
    std::size_t premise = 0;
    Literal pivot;
    std::optional<ResDerivation> left, right;
    if (is_sub) {
      premise = number(2);
      k = 3;
    } else {
      pivot = literal(2);
      left = child(3);
      right = child(4);
      k = 5;
    }
    std::vector<Literal> lits;
    for (;; ++k) {
      if (k >= tokens.size()) fail(k, "missing terminating 0");
      if (tokens[k].first == "0") break;
      lits.push_back(literal(k));
    }
    if (k + 1 != tokens.size()) fail(k + 1, "trailing tokens after 0");
    Clause conclusion = Clause::canonicalize(std::move(lits));
    nodes.push_back(is_sub ? ResDerivation::sub(premise, std::move(conclusion))
                           : ResDerivation::res(pivot, std::move(*left),
                                                std::move(*right),
                                                std::move(conclusion)));
  }
  if (nodes.empty()) throw ProofParseError(line_no, 1, "empty derivation");
  return nodes.back();
}

}  // namespace dpllkit
