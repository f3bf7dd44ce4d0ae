#pragma once

// Refutation trees for the five-rule DPLL calculus
//
//   Conflict                         {} in D
//   Unit(l, s)      s : G,l |- D\{[l]}         [l] in D
//   Elim(C, l, s)   s : G   |- D\{C}           l in G, l in C, C in D
//   Red(C, l, s)    s : G   |- D\{C} + C\{~l}  l in G, ~l in C, C in D
//   Split(l, a, b)  a : G,l |- D   b : G,~l |- D
//
// Nodes carry only the literal/clause each rule consumes; valuations and
// formulae are reconstructed top-down by the checker.

#include <cstddef>
#include <memory>

#include "dpllkit/check_report.hpp"
#include "dpllkit/cnf.hpp"

namespace dpllkit {

class DpllDerivation {
 public:
  enum class Rule { kConflict, kUnit, kElim, kRed, kSplit };

  // Defaults to Conflict.
  DpllDerivation();

  static DpllDerivation conflict();
  static DpllDerivation unit(Literal lit, DpllDerivation sub);
  static DpllDerivation elim(Clause clause, Literal lit, DpllDerivation sub);
  static DpllDerivation red(Clause clause, Literal lit, DpllDerivation sub);
  static DpllDerivation split(Literal lit, DpllDerivation left,
                              DpllDerivation right);

  Rule rule() const;
  // Unit/Elim/Red/Split only.
  Literal literal() const;
  // Elim/Red only.
  const Clause &clause() const;
  // Unit/Elim/Red: the premise. Split: the (G,l) branch.
  const DpllDerivation &sub() const { return child(0); }
  const DpllDerivation &left() const { return child(0); }
  const DpllDerivation &right() const { return child(1); }
  std::size_t arity() const;
  const DpllDerivation &child(std::size_t i) const;

  bool operator==(const DpllDerivation &other) const;

 private:
  struct Node;
  explicit DpllDerivation(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  // Placeholder for absent children; never escapes the class.
  static DpllDerivation none() { return DpllDerivation(nullptr); }

  std::shared_ptr<const Node> node_;
};

struct DpllDerivation::Node {
  Rule rule = Rule::kConflict;
  Literal lit;
  Clause clause;
  DpllDerivation children[2];

  Node(Rule r, Literal l, Clause c, DpllDerivation a, DpllDerivation b)
      : rule(r), lit(l), clause(std::move(c)),
        children{std::move(a), std::move(b)} {}
};

inline DpllDerivation::Rule DpllDerivation::rule() const { return node_->rule; }
inline Literal DpllDerivation::literal() const { return node_->lit; }
inline const Clause &DpllDerivation::clause() const { return node_->clause; }
inline const DpllDerivation &DpllDerivation::child(std::size_t i) const {
  return node_->children[i];
}

std::string_view to_string(DpllDerivation::Rule rule);

// Number of rule applications; Conflict counts 0.
std::size_t dpll_size(const DpllDerivation &d);

// Validates every side condition, visiting children left to right and
// reporting the first violation.
CheckReport check_dpll(const Valuation &g0, const Formula &d0,
                       const DpllDerivation &d);

}  // namespace dpllkit
