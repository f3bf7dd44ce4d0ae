#pragma once

// Literals, clauses, formulae, valuations and total assignments.
//
// Every collection here is kept in a canonical form so that equality is
// decidable by comparing sequences:
//
//   Clause     sorted by (variable, positive < negative), no duplicates
//   Formula    first-insertion order, no two set-equal clauses
//   Valuation  insertion order, no duplicate literals
//
// All values are immutable once built.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpllkit {

struct Variable {
  std::uint32_t id = 0;

  constexpr auto operator<=>(const Variable &) const = default;
};

// A literal is packed as 2*var + sign, which makes the natural integer order
// coincide with the global ordering key (var.id, positive < negative).
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(Variable v, bool negative)
      : code_(2 * v.id + (negative ? 1u : 0u)) {}

  static Literal positive(Variable v) { return Literal(v, false); }
  static Literal negative(Variable v) { return Literal(v, true); }

  // Throws std::invalid_argument on 0 or on magnitudes that do not fit.
  static Literal from_dimacs(std::int64_t value);

  constexpr Variable var() const { return Variable{code_ >> 1}; }
  constexpr bool is_negative() const { return (code_ & 1u) != 0; }
  constexpr bool is_positive() const { return !is_negative(); }
  constexpr Literal complement() const { return from_code(code_ ^ 1u); }
  constexpr std::uint32_t code() const { return code_; }
  std::int64_t to_dimacs() const {
    auto id = static_cast<std::int64_t>(var().id);
    return is_negative() ? -id : id;
  }

  static constexpr Literal from_code(std::uint32_t code) {
    Literal l;
    l.code_ = code;
    return l;
  }

  constexpr auto operator<=>(const Literal &) const = default;

 private:
  std::uint32_t code_ = 0;
};

inline constexpr Literal complement(Literal l) { return l.complement(); }

std::ostream &operator<<(std::ostream &os, Literal l);

class Clause {
 public:
  Clause() = default;

  // Sorts and deduplicates; idempotent.
  static Clause canonicalize(std::vector<Literal> raw);
  static Clause from_dimacs(std::initializer_list<std::int64_t> lits);

  std::span<const Literal> literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }
  Literal operator[](std::size_t i) const { return lits_[i]; }

  bool contains(Literal l) const;
  bool subset_of(const Clause &other) const;
  Clause without(Literal l) const;
  Clause with(Literal l) const;

  auto operator<=>(const Clause &) const = default;
  bool operator==(const Clause &) const = default;

 private:
  explicit Clause(std::vector<Literal> sorted) : lits_(std::move(sorted)) {}
  std::vector<Literal> lits_;
};

std::ostream &operator<<(std::ostream &os, const Clause &c);

struct ClauseHash {
  std::size_t operator()(const Clause &c) const noexcept;
};

class Formula {
 public:
  Formula() = default;

  // Drops later clauses that are set-equal to an earlier one.
  static Formula from_clauses(std::vector<Clause> clauses);
  static Formula from_dimacs(
      std::initializer_list<std::initializer_list<std::int64_t>> clauses);

  std::span<const Clause> clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }
  const Clause &operator[](std::size_t i) const { return clauses_[i]; }

  bool contains(const Clause &c) const;
  // Zero-based position of c, or npos.
  std::size_t index_of(const Clause &c) const;

  bool operator==(const Formula &) const = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Clause> clauses_;
};

std::ostream &operator<<(std::ostream &os, const Formula &f);

// Order-preserving union: clauses of a, then clauses of b not already in a.
Formula formula_union(const Formula &a, const Formula &b);

class Valuation {
 public:
  Valuation() = default;
  static Valuation from_literals(std::vector<Literal> lits);
  static Valuation from_dimacs(std::initializer_list<std::int64_t> lits);

  std::span<const Literal> literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  bool contains(Literal l) const;
  // Appends l unless already present.
  Valuation with(Literal l) const;

  bool operator==(const Valuation &) const = default;

 private:
  std::vector<Literal> lits_;
};

std::ostream &operator<<(std::ostream &os, const Valuation &g);

// Total truth assignment. Variables not explicitly set take the default
// value, so M(l) = !M(complement(l)) holds for every literal by
// construction.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(bool default_value) : default_value_(default_value) {}

  // Throws std::invalid_argument if g mentions a variable with both signs.
  static Assignment from_valuation(const Valuation &g,
                                   bool default_value = true);

  bool value(Variable v) const;
  bool value(Literal l) const { return value(l.var()) != l.is_negative(); }
  bool default_value() const { return default_value_; }

  // Explicitly set variables as true literals, ascending by variable.
  std::span<const Literal> explicit_literals() const { return true_lits_; }

  Assignment with(Variable v, bool value) const;

  bool operator==(const Assignment &) const = default;

 private:
  std::vector<Literal> true_lits_;
  bool default_value_ = true;
};

std::vector<Variable> vars_of(const Clause &c);
std::vector<Variable> vars_of(const Formula &f);
std::vector<Variable> vars_of(const Valuation &g);
std::uint32_t max_variable(const Formula &f);

bool is_consistent(const Valuation &g);

bool eval(const Assignment &m, Literal l);
bool eval(const Assignment &m, const Clause &c);
bool eval(const Assignment &m, const Valuation &g);
bool eval(const Assignment &m, const Formula &f);

// Literals occurring in f whose variable is not in vs (vs sorted ascending).
std::vector<Literal> literals_outside(const Formula &f,
                                      std::span<const Variable> vs);

std::size_t weight(const Formula &f);

// Termination measure of the search state (valuation, pending, clean).
std::size_t measure(const Valuation &g, const Formula &pending,
                    const Formula &clean);

Clause negate_valuation(const Valuation &g);

// Resolvent of a (containing complement(pivot)) and b (containing pivot).
Clause resolvent(Literal pivot, const Clause &a, const Clause &b);

}  // namespace dpllkit

template <>
struct std::hash<dpllkit::Clause> : dpllkit::ClauseHash {};
