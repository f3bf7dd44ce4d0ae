#pragma once

// Sized resolution derivations.
//
//   Sub(i, C)            premise i (1-based) of the input is a subset of C
//   Res(p, L, R, C)      ~p in concl(L), p in concl(R),
//                        C = (concl(L) \ {~p}) + (concl(R) \ {p})
//
// Every node stores its conclusion, so checking is pure verification.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <variant>

#include "dpllkit/check_report.hpp"
#include "dpllkit/cnf.hpp"
#include "dpllkit/dpll_proof.hpp"

namespace dpllkit {

class ResDerivation {
 public:
  enum class Rule { kSub, kRes };

  static ResDerivation sub(std::size_t premise_index, Clause conclusion);
  static ResDerivation res(Literal pivot, ResDerivation left,
                           ResDerivation right, Clause conclusion);
  // Res with the conclusion computed as the resolvent of the children.
  static ResDerivation resolve(Literal pivot, ResDerivation left,
                               ResDerivation right);

  Rule rule() const;
  // Sub only; 1-based.
  std::size_t premise_index() const;
  // Res only.
  Literal pivot() const;
  const ResDerivation &left() const;
  const ResDerivation &right() const;
  const Clause &conclusion() const;

  bool operator==(const ResDerivation &other) const;

  // Identity of the underlying node, for memoizing over shared subtrees.
  const void *identity() const { return node_.get(); }

 private:
  struct Node;
  explicit ResDerivation(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct ResDerivation::Node {
  Rule rule = Rule::kSub;
  std::size_t premise = 0;
  Literal pivot;
  // Empty (null) for Sub leaves.
  ResDerivation children[2];
  Clause conclusion;

  Node(Rule r, std::size_t i, Literal p, ResDerivation a, ResDerivation b,
       Clause c)
      : rule(r), premise(i), pivot(p), children{std::move(a), std::move(b)},
        conclusion(std::move(c)) {}
};

inline ResDerivation::Rule ResDerivation::rule() const { return node_->rule; }
inline std::size_t ResDerivation::premise_index() const {
  return node_->premise;
}
inline Literal ResDerivation::pivot() const { return node_->pivot; }
inline const ResDerivation &ResDerivation::left() const {
  return node_->children[0];
}
inline const ResDerivation &ResDerivation::right() const {
  return node_->children[1];
}
inline const Clause &ResDerivation::conclusion() const {
  return node_->conclusion;
}

std::size_t res_size(const ResDerivation &d);
const Clause &res_conclusion(const ResDerivation &d);

CheckReport check_res(const Formula &d0, const ResDerivation &d);

// Rewrites d for the formula in which premise `old` is replaced by
// `new_clause` = old + {added}: every Sub leaf citing old gains `added`, and
// resolvents above it are recomputed. Size is unchanged and the root
// conclusion grows by at most `added`. Throws std::invalid_argument if old
// is not a premise or new_clause != old + {added}.
ResDerivation lift_clause(const ResDerivation &d, const Formula &premises,
                          const Clause &old, const Clause &new_clause,
                          Literal added);

// Raised by dpll_to_res for derivations that do not check.
class InvalidDerivation : public std::invalid_argument {
 public:
  explicit InvalidDerivation(CheckReport report);
  const CheckReport &report() const { return report_; }

 private:
  CheckReport report_;
};

// Translates a checked refutation of g against d0 into a resolution
// derivation from d0 whose conclusion is a subset of negate_valuation(g) and
// whose size is at most dpll_size(p).
ResDerivation dpll_to_res(const Valuation &g, const Formula &d0,
                          const DpllDerivation &p);

class ResVerdict {
 public:
  static ResVerdict sat(Assignment m) { return ResVerdict(std::move(m)); }
  static ResVerdict unsat(ResDerivation r) { return ResVerdict(std::move(r)); }

  bool is_sat() const { return std::holds_alternative<Assignment>(outcome_); }
  const Assignment &model() const { return std::get<Assignment>(outcome_); }
  const ResDerivation &proof() const {
    return std::get<ResDerivation>(outcome_);
  }

 private:
  explicit ResVerdict(std::variant<Assignment, ResDerivation> v)
      : outcome_(std::move(v)) {}
  std::variant<Assignment, ResDerivation> outcome_;
};

// Model, or a resolution refutation of d0 (conclusion is the empty clause).
ResVerdict refute(const Formula &d0);

}  // namespace dpllkit
