#include "dpllkit/cnf.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <unordered_set>

namespace dpllkit {

Literal Literal::from_dimacs(std::int64_t value) {
  if (value == 0) throw std::invalid_argument("literal 0 is not a literal");
  std::int64_t magnitude = value < 0 ? -value : value;
  if (magnitude > 0x7fffffff)
    throw std::invalid_argument("literal out of range: " +
                                std::to_string(value));
  return Literal(Variable{static_cast<std::uint32_t>(magnitude)}, value < 0);
}

std::ostream &operator<<(std::ostream &os, Literal l) {
  return os << l.to_dimacs();
}

// ---------------------------------------------------------------------------

Clause Clause::canonicalize(std::vector<Literal> raw) {
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  return Clause(std::move(raw));
}

Clause Clause::from_dimacs(std::initializer_list<std::int64_t> lits) {
  std::vector<Literal> raw;
  raw.reserve(lits.size());
  for (auto v : lits) raw.push_back(Literal::from_dimacs(v));
  return canonicalize(std::move(raw));
}

bool Clause::contains(Literal l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool Clause::subset_of(const Clause &other) const {
  return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(),
                       lits_.end());
}

Clause Clause::without(Literal l) const {
  std::vector<Literal> out;
  out.reserve(lits_.size());
  for (auto x : lits_)
    if (x != l) out.push_back(x);
  return Clause(std::move(out));
}

Clause Clause::with(Literal l) const {
  auto it = std::lower_bound(lits_.begin(), lits_.end(), l);
  if (it != lits_.end() && *it == l) return *this;
  std::vector<Literal> out;
  out.reserve(lits_.size() + 1);
  out.insert(out.end(), lits_.begin(), it);
  out.push_back(l);
  out.insert(out.end(), it, lits_.end());
  return Clause(std::move(out));
}

std::ostream &operator<<(std::ostream &os, const Clause &c) {
  os << '[';
  for (auto l : c) os << ' ' << l;
  return os << " ]";
}

std::size_t ClauseHash::operator()(const Clause &c) const noexcept {
  // FNV-1a over literal codes.
  std::uint64_t h = 1469598103934665603ull;
  for (auto l : c) {
    h ^= l.code();
    h *= 1099511628211ull;
  }
  h ^= c.size();
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------

Formula Formula::from_clauses(std::vector<Clause> clauses) {
  Formula f;
  std::unordered_set<Clause, ClauseHash> seen;
  seen.reserve(clauses.size());
  f.clauses_.reserve(clauses.size());
  for (auto &c : clauses)
    if (seen.insert(c).second) f.clauses_.push_back(std::move(c));
  return f;
}

Formula Formula::from_dimacs(
    std::initializer_list<std::initializer_list<std::int64_t>> clauses) {
  std::vector<Clause> cs;
  for (auto c : clauses) cs.push_back(Clause::from_dimacs(c));
  return from_clauses(std::move(cs));
}

bool Formula::contains(const Clause &c) const { return index_of(c) != npos; }

std::size_t Formula::index_of(const Clause &c) const {
  auto it = std::find(clauses_.begin(), clauses_.end(), c);
  return it == clauses_.end() ? npos
                              : static_cast<std::size_t>(it - clauses_.begin());
}

std::ostream &operator<<(std::ostream &os, const Formula &f) {
  os << '{';
  bool first = true;
  for (const auto &c : f) {
    os << (first ? "" : ",") << c;
    first = false;
  }
  return os << '}';
}

Formula formula_union(const Formula &a, const Formula &b) {
  std::vector<Clause> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return Formula::from_clauses(std::move(all));
}

// ---------------------------------------------------------------------------

Valuation Valuation::from_literals(std::vector<Literal> lits) {
  Valuation g;
  std::unordered_set<std::uint32_t> seen;
  for (auto l : lits)
    if (seen.insert(l.code()).second) g.lits_.push_back(l);
  return g;
}

Valuation Valuation::from_dimacs(std::initializer_list<std::int64_t> lits) {
  std::vector<Literal> raw;
  for (auto v : lits) raw.push_back(Literal::from_dimacs(v));
  return from_literals(std::move(raw));
}

bool Valuation::contains(Literal l) const {
  return std::find(lits_.begin(), lits_.end(), l) != lits_.end();
}

Valuation Valuation::with(Literal l) const {
  if (contains(l)) return *this;
  Valuation g = *this;
  g.lits_.push_back(l);
  return g;
}

std::ostream &operator<<(std::ostream &os, const Valuation &g) {
  os << '<';
  for (auto l : g) os << ' ' << l;
  return os << " >";
}

// ---------------------------------------------------------------------------

Assignment Assignment::from_valuation(const Valuation &g, bool default_value) {
  if (!is_consistent(g))
    throw std::invalid_argument("cannot build a model from an inconsistent "
                                "valuation");
  Assignment m(default_value);
  m.true_lits_.assign(g.begin(), g.end());
  std::sort(m.true_lits_.begin(), m.true_lits_.end());
  return m;
}

bool Assignment::value(Variable v) const {
  auto it = std::lower_bound(
      true_lits_.begin(), true_lits_.end(), Literal::positive(v));
  if (it != true_lits_.end() && it->var() == v) return it->is_positive();
  return default_value_;
}

Assignment Assignment::with(Variable v, bool value) const {
  Assignment m = *this;
  Literal l(v, !value);
  auto it = std::lower_bound(m.true_lits_.begin(), m.true_lits_.end(),
                             Literal::positive(v));
  if (it != m.true_lits_.end() && it->var() == v)
    *it = l;
  else
    m.true_lits_.insert(it, l);
  return m;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Variable> sorted_vars(std::vector<Variable> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace

std::vector<Variable> vars_of(const Clause &c) {
  std::vector<Variable> vs;
  for (auto l : c) vs.push_back(l.var());
  return sorted_vars(std::move(vs));
}

std::vector<Variable> vars_of(const Formula &f) {
  std::vector<Variable> vs;
  for (const auto &c : f)
    for (auto l : c) vs.push_back(l.var());
  return sorted_vars(std::move(vs));
}

std::vector<Variable> vars_of(const Valuation &g) {
  std::vector<Variable> vs;
  for (auto l : g) vs.push_back(l.var());
  return sorted_vars(std::move(vs));
}

std::uint32_t max_variable(const Formula &f) {
  std::uint32_t v = 0;
  for (const auto &c : f)
    if (!c.empty()) v = std::max(v, c.literals().back().var().id);
  return v;
}

bool is_consistent(const Valuation &g) {
  std::unordered_set<std::uint32_t> seen;
  for (auto l : g) seen.insert(l.code());
  for (auto l : g)
    if (seen.count(l.complement().code())) return false;
  return true;
}

bool eval(const Assignment &m, Literal l) { return m.value(l); }

bool eval(const Assignment &m, const Clause &c) {
  return std::any_of(c.begin(), c.end(),
                     [&](Literal l) { return m.value(l); });
}

bool eval(const Assignment &m, const Valuation &g) {
  return std::all_of(g.begin(), g.end(),
                     [&](Literal l) { return m.value(l); });
}

bool eval(const Assignment &m, const Formula &f) {
  return std::all_of(f.begin(), f.end(),
                     [&](const Clause &c) { return eval(m, c); });
}

std::vector<Literal> literals_outside(const Formula &f,
                                      std::span<const Variable> vs) {
  std::vector<Literal> out;
  for (const auto &c : f)
    for (auto l : c)
      if (!std::binary_search(vs.begin(), vs.end(), l.var())) out.push_back(l);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t weight(const Formula &f) {
  std::size_t w = 0;
  for (const auto &c : f) w += c.size();
  return w;
}

std::size_t measure(const Valuation &g, const Formula &pending,
                    const Formula &clean) {
  auto vs = vars_of(g);
  return literals_outside(formula_union(pending, clean), vs).size() +
         weight(pending) + weight(clean);
}

Clause negate_valuation(const Valuation &g) {
  std::vector<Literal> out;
  for (auto l : g) out.push_back(l.complement());
  return Clause::canonicalize(std::move(out));
}

Clause resolvent(Literal pivot, const Clause &a, const Clause &b) {
  std::vector<Literal> out;
  out.reserve(a.size() + b.size());
  for (auto l : a)
    if (l != pivot.complement()) out.push_back(l);
  for (auto l : b)
    if (l != pivot) out.push_back(l);
  return Clause::canonicalize(std::move(out));
}

}  // namespace dpllkit
