#pragma once

// Test-only helpers: seeded random formulae, derivation rewriting, and
// reference checkers that rebuild contexts with plain immutable values.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dpllkit/check_report.hpp"
#include "dpllkit/cnf.hpp"
#include "dpllkit/dpll_proof.hpp"
#include "dpllkit/oracle.hpp"
#include "dpllkit/resolution.hpp"

namespace dpllkit::testing {

using Rng = std::mt19937_64;
using Path = std::vector<std::size_t>;

inline std::size_t uniform(Rng &rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Literal random_literal(Rng &rng, std::uint32_t vars) {
  auto v = static_cast<std::uint32_t>(uniform(rng, 1, vars));
  return Literal(Variable{v}, uniform(rng, 0, 1) == 1);
}

struct CnfShape {
  std::uint32_t max_vars = 8;
  std::size_t max_clauses = 12;
  std::size_t min_width = 1;
  std::size_t max_width = 4;
  // Chance (per mille) that a clause is forced empty.
  std::size_t empty_per_mille = 5;
};

inline Clause random_clause(Rng &rng, std::uint32_t vars, const CnfShape &s) {
  if (uniform(rng, 0, 999) < s.empty_per_mille) return Clause{};
  std::size_t width = uniform(rng, s.min_width, s.max_width);
  std::vector<Literal> lits;
  for (std::size_t i = 0; i < width; ++i) lits.push_back(random_literal(rng, vars));
  return Clause::canonicalize(std::move(lits));
}

inline Formula random_cnf(Rng &rng, const CnfShape &s = {}) {
  auto vars = static_cast<std::uint32_t>(uniform(rng, 1, s.max_vars));
  std::size_t n = uniform(rng, 0, s.max_clauses);
  std::vector<Clause> cs;
  for (std::size_t i = 0; i < n; ++i) cs.push_back(random_clause(rng, vars, s));
  return Formula::from_clauses(std::move(cs));
}

// Draws until the oracle says unsatisfiable.
inline Formula random_unsat_cnf(Rng &rng, std::uint32_t max_vars = 8,
                                std::size_t max_clauses = 20) {
  CnfShape s{max_vars, max_clauses, 1, 3, 0};
  for (;;) {
    auto vars = static_cast<std::uint32_t>(uniform(rng, 1, max_vars));
    std::size_t n = uniform(rng, std::min<std::size_t>(max_clauses, vars + 1),
                            max_clauses);
    std::vector<Clause> cs;
    for (std::size_t i = 0; i < n; ++i) cs.push_back(random_clause(rng, vars, s));
    Formula f = Formula::from_clauses(std::move(cs));
    if (!brute_force_sat(f).satisfiable()) return f;
  }
}

inline Valuation random_consistent_valuation(Rng &rng, std::uint32_t vars,
                                             std::size_t max_len) {
  std::vector<Literal> lits;
  std::size_t n = uniform(rng, 0, max_len);
  for (std::size_t i = 0; i < n; ++i) {
    Literal l = random_literal(rng, vars);
    bool clash = false;
    for (auto k : lits) clash = clash || k == l.complement();
    if (!clash) lits.push_back(l);
  }
  return Valuation::from_literals(std::move(lits));
}

// ---------------------------------------------------------------------------
// Derivation rewriting

inline DpllDerivation rebuild(const DpllDerivation &d, std::size_t i,
                              DpllDerivation child) {
  using R = DpllDerivation::Rule;
  switch (d.rule()) {
    case R::kUnit: return DpllDerivation::unit(d.literal(), std::move(child));
    case R::kElim:
      return DpllDerivation::elim(d.clause(), d.literal(), std::move(child));
    case R::kRed:
      return DpllDerivation::red(d.clause(), d.literal(), std::move(child));
    case R::kSplit:
      return i == 0 ? DpllDerivation::split(d.literal(), std::move(child), d.right())
                    : DpllDerivation::split(d.literal(), d.left(), std::move(child));
    case R::kConflict: break;
  }
  return d;
}

inline const DpllDerivation &node_at(const DpllDerivation &d, const Path &p,
                                     std::size_t from = 0) {
  return from == p.size() ? d : node_at(d.child(p[from]), p, from + 1);
}

inline DpllDerivation replace_at(const DpllDerivation &d, const Path &p,
                                 const DpllDerivation &repl,
                                 std::size_t from = 0) {
  if (from == p.size()) return repl;
  return rebuild(d, p[from], replace_at(d.child(p[from]), p, repl, from + 1));
}

inline void all_paths(const DpllDerivation &d, Path &cur, std::vector<Path> &out) {
  out.push_back(cur);
  for (std::size_t i = 0; i < d.arity(); ++i) {
    cur.push_back(i);
    all_paths(d.child(i), cur, out);
    cur.pop_back();
  }
}

inline std::vector<Path> all_paths(const DpllDerivation &d) {
  std::vector<Path> out;
  Path cur;
  all_paths(d, cur, out);
  return out;
}

inline const ResDerivation &node_at(const ResDerivation &d, const Path &p,
                                    std::size_t from = 0) {
  if (from == p.size()) return d;
  return node_at(p[from] == 0 ? d.left() : d.right(), p, from + 1);
}

// Replaces the node at p without recomputing any conclusion above it.
inline ResDerivation replace_at(const ResDerivation &d, const Path &p,
                                const ResDerivation &repl, std::size_t from = 0) {
  if (from == p.size()) return repl;
  auto l = d.left(), r = d.right();
  if (p[from] == 0)
    l = replace_at(l, p, repl, from + 1);
  else
    r = replace_at(r, p, repl, from + 1);
  return ResDerivation::res(d.pivot(), l, r, d.conclusion());
}

inline void all_paths(const ResDerivation &d, Path &cur, std::vector<Path> &out) {
  out.push_back(cur);
  if (d.rule() == ResDerivation::Rule::kSub) return;
  for (std::size_t i = 0; i < 2; ++i) {
    cur.push_back(i);
    all_paths(i == 0 ? d.left() : d.right(), cur, out);
    cur.pop_back();
  }
}

inline std::vector<Path> all_paths(const ResDerivation &d) {
  std::vector<Path> out;
  Path cur;
  all_paths(d, cur, out);
  return out;
}

// ---------------------------------------------------------------------------
// Reference checkers. Slow, value-based, written against the rule table and
// not against the library's checkers.

struct RefFailure {
  Path path;
  CheckFailure reason;
};

namespace detail {

inline Formula erase(const Formula &f, const Clause &c) {
  std::vector<Clause> cs;
  for (const auto &k : f)
    if (k != c) cs.push_back(k);
  return Formula::from_clauses(std::move(cs));
}

inline std::optional<RefFailure> ref_dpll(const Valuation &g, const Formula &d,
                                          const DpllDerivation &p, Path &path) {
  using R = DpllDerivation::Rule;
  auto fail = [&](CheckFailure r) { return RefFailure{path, r}; };
  auto sub = [&](std::size_t i, const Valuation &g2, const Formula &d2)
      -> std::optional<RefFailure> {
    path.push_back(i);
    auto r = ref_dpll(g2, d2, p.child(i), path);
    path.pop_back();
    return r;
  };
  Literal l = p.literal();
  switch (p.rule()) {
    case R::kConflict:
      if (!d.contains(Clause{})) return fail(CheckFailure::kConflictMissing);
      return std::nullopt;
    case R::kUnit: {
      Clause u = Clause::canonicalize({l});
      if (!d.contains(u)) return fail(CheckFailure::kUnitClauseMissing);
      if (g.contains(l.complement()))
        return fail(CheckFailure::kInconsistentContext);
      return sub(0, g.with(l), erase(d, u));
    }
    case R::kElim:
      if (!g.contains(l)) return fail(CheckFailure::kLiteralNotInValuation);
      if (!p.clause().contains(l)) return fail(CheckFailure::kLiteralNotInClause);
      if (!d.contains(p.clause())) return fail(CheckFailure::kClauseNotInFormula);
      return sub(0, g, erase(d, p.clause()));
    case R::kRed: {
      if (!g.contains(l)) return fail(CheckFailure::kLiteralNotInValuation);
      if (!p.clause().contains(l.complement()))
        return fail(CheckFailure::kLiteralNotInClause);
      if (!d.contains(p.clause())) return fail(CheckFailure::kClauseNotInFormula);
      Formula reduced = Formula::from_clauses({p.clause().without(l.complement())});
      return sub(0, g, formula_union(erase(d, p.clause()), reduced));
    }
    case R::kSplit:
      if (g.contains(l) || g.contains(l.complement()))
        return fail(CheckFailure::kInconsistentContext);
      if (auto r = sub(0, g.with(l), d)) return r;
      return sub(1, g.with(l.complement()), d);
  }
  return std::nullopt;
}

inline std::optional<RefFailure> ref_res(const Formula &d0,
                                         const ResDerivation &r, Path &path) {
  auto fail = [&](CheckFailure why) { return RefFailure{path, why}; };
  if (r.rule() == ResDerivation::Rule::kSub) {
    std::size_t i = r.premise_index();
    if (i == 0 || i > d0.size()) return fail(CheckFailure::kPremiseIndex);
    for (auto l : d0[i - 1])
      if (!r.conclusion().contains(l)) return fail(CheckFailure::kSubsumption);
    return std::nullopt;
  }
  const Clause &a = r.left().conclusion();
  const Clause &b = r.right().conclusion();
  Literal p = r.pivot();
  if (!a.contains(p.complement())) return fail(CheckFailure::kPivotLeft);
  if (!b.contains(p)) return fail(CheckFailure::kPivotRight);
  std::vector<Literal> lits;
  for (auto l : a)
    if (l != p.complement()) lits.push_back(l);
  for (auto l : b)
    if (l != p) lits.push_back(l);
  if (Clause::canonicalize(lits) != r.conclusion())
    return fail(CheckFailure::kResolventMismatch);
  for (std::size_t i = 0; i < 2; ++i) {
    path.push_back(i);
    auto f = ref_res(d0, i == 0 ? r.left() : r.right(), path);
    if (f) return f;
    path.pop_back();
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<RefFailure> reference_check_dpll(const Valuation &g,
                                                      const Formula &d,
                                                      const DpllDerivation &p) {
  if (!is_consistent(g)) return RefFailure{{}, CheckFailure::kInconsistentContext};
  Path path;
  return detail::ref_dpll(g, d, p, path);
}

inline std::optional<RefFailure> reference_check_res(const Formula &d0,
                                                     const ResDerivation &r) {
  Path path;
  return detail::ref_res(d0, r, path);
}

inline bool same_verdict(const CheckReport &rep,
                         const std::optional<RefFailure> &ref) {
  if (rep.valid() || !ref) return rep.valid() == !ref.has_value();
  return rep.failure->path == ref->path && rep.failure->reason == ref->reason;
}

// d0 entails c: no model of d0 falsifies every literal of c.
inline bool entails(const Formula &d0, const Clause &c) {
  std::vector<Literal> neg;
  for (auto l : c) neg.push_back(l.complement());
  return !compatible(Valuation::from_literals(neg), d0).satisfiable();
}

inline bool is_prefix(const Path &a, const Path &b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

// ---------------------------------------------------------------------------
// Single-node mutations

struct DpllMutation {
  DpllDerivation proof;
  Path path;
  std::string kind;
};

inline DpllMutation mutate_dpll(Rng &rng, const DpllDerivation &p,
                                std::uint32_t vars) {
  using R = DpllDerivation::Rule;
  auto paths = all_paths(p);
  for (;;) {
    Path at = paths[uniform(rng, 0, paths.size() - 1)];
    const DpllDerivation &n = node_at(p, at);
    std::size_t kind = uniform(rng, 0, 6);
    DpllDerivation m;
    std::string name;
    switch (kind) {
      case 0:  // flip the literal payload
        if (n.rule() == R::kConflict) continue;
        name = "flip-literal";
        if (n.rule() == R::kUnit) m = DpllDerivation::unit(n.literal().complement(), n.sub());
        if (n.rule() == R::kElim) m = DpllDerivation::elim(n.clause(), n.literal().complement(), n.sub());
        if (n.rule() == R::kRed) m = DpllDerivation::red(n.clause(), n.literal().complement(), n.sub());
        if (n.rule() == R::kSplit) m = DpllDerivation::split(n.literal().complement(), n.left(), n.right());
        break;
      case 1: {  // replace the literal payload with a random one
        if (n.rule() == R::kConflict) continue;
        name = "random-literal";
        Literal l = random_literal(rng, vars + 1);
        if (n.rule() == R::kUnit) m = DpllDerivation::unit(l, n.sub());
        if (n.rule() == R::kElim) m = DpllDerivation::elim(n.clause(), l, n.sub());
        if (n.rule() == R::kRed) m = DpllDerivation::red(n.clause(), l, n.sub());
        if (n.rule() == R::kSplit) m = DpllDerivation::split(l, n.left(), n.right());
        break;
      }
      case 2:  // swap split children
        if (n.rule() != R::kSplit) continue;
        name = "swap-children";
        m = DpllDerivation::split(n.literal(), n.right(), n.left());
        break;
      case 3:  // delete the subtree
        if (n.rule() == R::kConflict) continue;
        name = "delete-subtree";
        break;
      case 4:  // skip the rule
        if (n.rule() == R::kConflict) continue;
        name = "skip-rule";
        m = n.child(uniform(rng, 0, n.arity() - 1));
        break;
      case 5: {  // add or drop one clause literal
        if (n.rule() != R::kElim && n.rule() != R::kRed) continue;
        Clause c = n.clause();
        if (!c.empty() && uniform(rng, 0, 1) == 0) {
          c = c.without(c[uniform(rng, 0, c.size() - 1)]);
          name = "drop-clause-literal";
        } else {
          c = c.with(random_literal(rng, vars + 1));
          name = "add-clause-literal";
        }
        if (c == n.clause()) continue;
        m = n.rule() == R::kElim ? DpllDerivation::elim(c, n.literal(), n.sub())
                                 : DpllDerivation::red(c, n.literal(), n.sub());
        break;
      }
      case 6:  // exchange Elim and Red
        if (n.rule() != R::kElim && n.rule() != R::kRed) continue;
        name = "swap-elim-red";
        m = n.rule() == R::kElim ? DpllDerivation::red(n.clause(), n.literal(), n.sub())
                                 : DpllDerivation::elim(n.clause(), n.literal(), n.sub());
        break;
    }
    if (m == n) continue;
    return {replace_at(p, at, m), at, name};
  }
}

struct ResMutation {
  ResDerivation proof;
  Path path;
  std::string kind;
};

inline ResMutation mutate_res(Rng &rng, const ResDerivation &r,
                              std::size_t premises, std::uint32_t vars) {
  using R = ResDerivation::Rule;
  auto paths = all_paths(r);
  for (;;) {
    Path at = paths[uniform(rng, 0, paths.size() - 1)];
    const ResDerivation &n = node_at(r, at);
    std::size_t kind = uniform(rng, 0, 4);
    Clause c = n.conclusion();
    std::optional<ResDerivation> m;
    std::string name;
    switch (kind) {
      case 0:  // change the premise index
        if (n.rule() != R::kSub) continue;
        name = "premise-index";
        m = ResDerivation::sub(uniform(rng, 0, premises + 1), c);
        break;
      case 1: {  // change the pivot
        if (n.rule() != R::kRes) continue;
        name = "pivot";
        Literal p = uniform(rng, 0, 1) ? n.pivot().complement()
                                       : random_literal(rng, vars + 1);
        m = ResDerivation::res(p, n.left(), n.right(), c);
        break;
      }
      case 2:  // add or drop one conclusion literal
        if (!c.empty() && uniform(rng, 0, 1) == 0) {
          c = c.without(c[uniform(rng, 0, c.size() - 1)]);
          name = "drop-conclusion-literal";
        } else {
          c = c.with(random_literal(rng, vars + 1));
          name = "add-conclusion-literal";
        }
        m = n.rule() == R::kSub ? ResDerivation::sub(n.premise_index(), c)
                                : ResDerivation::res(n.pivot(), n.left(), n.right(), c);
        break;
      case 3:  // swap children
        if (n.rule() != R::kRes) continue;
        name = "swap-children";
        m = ResDerivation::res(n.pivot(), n.right(), n.left(), c);
        break;
      case 4:  // collapse into a leaf citing a random premise
        if (n.rule() != R::kRes) continue;
        name = "collapse";
        m = ResDerivation::sub(uniform(rng, 1, premises), c);
        break;
    }
    if (*m == n) continue;
    return {replace_at(r, at, *m), at, name};
  }
}

}  // namespace dpllkit::testing
