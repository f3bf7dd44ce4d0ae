#include "dpllkit/dpll_proof.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace dpllkit {

DpllDerivation::DpllDerivation() : DpllDerivation(conflict()) {}

DpllDerivation DpllDerivation::conflict() {
  static const auto leaf = std::make_shared<const Node>(
      Rule::kConflict, Literal{}, Clause{}, none(), none());
  return DpllDerivation(leaf);
}

DpllDerivation DpllDerivation::unit(Literal lit, DpllDerivation sub) {
  return DpllDerivation(std::make_shared<const Node>(
      Rule::kUnit, lit, Clause{}, std::move(sub), none()));
}

DpllDerivation DpllDerivation::elim(Clause clause, Literal lit,
                                    DpllDerivation sub) {
  return DpllDerivation(std::make_shared<const Node>(
      Rule::kElim, lit, std::move(clause), std::move(sub), none()));
}

DpllDerivation DpllDerivation::red(Clause clause, Literal lit,
                                   DpllDerivation sub) {
  return DpllDerivation(std::make_shared<const Node>(
      Rule::kRed, lit, std::move(clause), std::move(sub), none()));
}

DpllDerivation DpllDerivation::split(Literal lit, DpllDerivation left,
                                     DpllDerivation right) {
  return DpllDerivation(std::make_shared<const Node>(
      Rule::kSplit, lit, Clause{}, std::move(left), std::move(right)));
}

std::size_t DpllDerivation::arity() const {
  switch (rule()) {
    case Rule::kConflict: return 0;
    case Rule::kSplit: return 2;
    default: return 1;
  }
}

bool DpllDerivation::operator==(const DpllDerivation &other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  const Node &a = *node_;
  const Node &b = *other.node_;
  if (a.rule != b.rule) return false;
  switch (a.rule) {
    case Rule::kConflict:
      return true;
    case Rule::kUnit:
      return a.lit == b.lit && a.children[0] == b.children[0];
    case Rule::kElim:
    case Rule::kRed:
      return a.lit == b.lit && a.clause == b.clause &&
             a.children[0] == b.children[0];
    case Rule::kSplit:
      return a.lit == b.lit && a.children[0] == b.children[0] &&
             a.children[1] == b.children[1];
  }
  return false;
}

std::string_view to_string(DpllDerivation::Rule rule) {
  switch (rule) {
    case DpllDerivation::Rule::kConflict: return "conflict";
    case DpllDerivation::Rule::kUnit: return "unit";
    case DpllDerivation::Rule::kElim: return "elim";
    case DpllDerivation::Rule::kRed: return "red";
    case DpllDerivation::Rule::kSplit: return "split";
  }
  return "?";
}

std::size_t dpll_size(const DpllDerivation &d) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < d.arity(); ++i) n += dpll_size(d.child(i));
  return d.rule() == DpllDerivation::Rule::kConflict ? 0 : n + 1;
}

// ---------------------------------------------------------------------------

std::string_view to_string(CheckFailure reason) {
  switch (reason) {
    case CheckFailure::kConflictMissing: return "conflict-missing";
    case CheckFailure::kUnitClauseMissing: return "unit-clause-missing";
    case CheckFailure::kLiteralNotInValuation: return "literal-not-in-valuation";
    case CheckFailure::kLiteralNotInClause: return "literal-not-in-clause";
    case CheckFailure::kClauseNotInFormula: return "clause-not-in-formula";
    case CheckFailure::kInconsistentContext: return "inconsistent-context";
    case CheckFailure::kPremiseIndex: return "premise-index";
    case CheckFailure::kSubsumption: return "subsumption";
    case CheckFailure::kPivotLeft: return "pivot-left";
    case CheckFailure::kPivotRight: return "pivot-right";
    case CheckFailure::kResolventMismatch: return "resolvent-mismatch";
  }
  return "?";
}

std::string describe(const CheckReport &report) {
  if (report.valid()) return "valid";
  const auto &f = *report.failure;
  std::ostringstream os;
  os << to_string(f.reason) << " at path [";
  for (std::size_t i = 0; i < f.path.size(); ++i)
    os << (i ? " " : "") << f.path[i];
  os << "]";
  if (!f.detail.empty()) os << ": " << f.detail;
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// Mutable (valuation, formula) context with exact undo. Formula entries keep
// an insertion stamp so a report can list them in stored order.
class Context {
 public:
  Context(const Valuation &g0, const Formula &d0) {
    for (auto l : g0) push_literal(l);
    for (const auto &c : d0) clauses_.emplace(c, stamp_++);
  }

  bool has_literal(Literal l) const { return gamma_set_.count(l.code()) != 0; }
  bool has_clause(const Clause &c) const { return clauses_.count(c) != 0; }

  // Returns whether l was actually added.
  bool push_literal(Literal l) {
    if (!gamma_set_.insert(l.code()).second) return false;
    gamma_.push_back(l);
    return true;
  }
  void pop_literal() {
    gamma_set_.erase(gamma_.back().code());
    gamma_.pop_back();
  }

  std::uint64_t remove_clause(const Clause &c) {
    auto it = clauses_.find(c);
    std::uint64_t stamp = it->second;
    clauses_.erase(it);
    return stamp;
  }
  void restore_clause(const Clause &c, std::uint64_t stamp) {
    clauses_.emplace(c, stamp);
  }
  // Returns whether c was actually added.
  bool add_clause(const Clause &c) {
    return clauses_.emplace(c, stamp_++).second;
  }
  void drop_clause(const Clause &c) { clauses_.erase(c); }

  Valuation valuation() const { return Valuation::from_literals(gamma_); }
  Formula formula() const {
    std::vector<std::pair<std::uint64_t, const Clause *>> order;
    order.reserve(clauses_.size());
    for (const auto &[c, stamp] : clauses_) order.emplace_back(stamp, &c);
    std::sort(order.begin(), order.end());
    std::vector<Clause> cs;
    cs.reserve(order.size());
    for (const auto &entry : order) cs.push_back(*entry.second);
    return Formula::from_clauses(std::move(cs));
  }

 private:
  std::vector<Literal> gamma_;
  std::unordered_set<std::uint32_t> gamma_set_;
  std::unordered_map<Clause, std::uint64_t, ClauseHash> clauses_;
  std::uint64_t stamp_ = 0;
};

class DpllChecker {
 public:
  DpllChecker(const Valuation &g0, const Formula &d0) : ctx_(g0, d0) {}

  CheckReport run(const DpllDerivation &d) {
    visit(d);
    return std::move(report_);
  }

 private:
  bool fail(CheckFailure reason, std::string detail) {
    report_.failure = CheckFailureInfo{path_, reason, ctx_.valuation(),
                                       ctx_.formula(), std::move(detail)};
    return false;
  }

  bool descend(std::size_t index, const DpllDerivation &d) {
    path_.push_back(index);
    bool ok = visit(d);
    if (ok) path_.pop_back();
    return ok;
  }

  static std::string show(const auto &x) {
    std::ostringstream os;
    os << x;
    return os.str();
  }

  bool visit(const DpllDerivation &d) {
    using Rule = DpllDerivation::Rule;
    switch (d.rule()) {
      case Rule::kConflict:
        if (!ctx_.has_clause(Clause{}))
          return fail(CheckFailure::kConflictMissing,
                      "empty clause not in formula");
        return true;

      case Rule::kUnit: {
        Literal l = d.literal();
        Clause unit = Clause::canonicalize({l});
        if (!ctx_.has_clause(unit))
          return fail(CheckFailure::kUnitClauseMissing,
                      "unit clause " + show(unit) + " not in formula");
        if (ctx_.has_literal(l.complement()))
          return fail(CheckFailure::kInconsistentContext,
                      "unit literal " + show(l) + " contradicts valuation");
        bool pushed = ctx_.push_literal(l);
        auto stamp = ctx_.remove_clause(unit);
        if (!descend(0, d.sub())) return false;
        ctx_.restore_clause(unit, stamp);
        if (pushed) ctx_.pop_literal();
        return true;
      }

      case Rule::kElim: {
        Literal l = d.literal();
        const Clause &c = d.clause();
        if (!ctx_.has_literal(l))
          return fail(CheckFailure::kLiteralNotInValuation,
                      "elim literal " + show(l) + " not in valuation");
        if (!c.contains(l))
          return fail(CheckFailure::kLiteralNotInClause,
                      "elim literal " + show(l) + " not in " + show(c));
        if (!ctx_.has_clause(c))
          return fail(CheckFailure::kClauseNotInFormula,
                      "elim clause " + show(c) + " not in formula");
        auto stamp = ctx_.remove_clause(c);
        if (!descend(0, d.sub())) return false;
        ctx_.restore_clause(c, stamp);
        return true;
      }

      case Rule::kRed: {
        Literal l = d.literal();
        const Clause &c = d.clause();
        if (!ctx_.has_literal(l))
          return fail(CheckFailure::kLiteralNotInValuation,
                      "red literal " + show(l) + " not in valuation");
        if (!c.contains(l.complement()))
          return fail(CheckFailure::kLiteralNotInClause,
                      "red clause " + show(c) + " lacks " +
                          show(l.complement()));
        if (!ctx_.has_clause(c))
          return fail(CheckFailure::kClauseNotInFormula,
                      "red clause " + show(c) + " not in formula");
        auto stamp = ctx_.remove_clause(c);
        Clause reduced = c.without(l.complement());
        bool added = ctx_.add_clause(reduced);
        if (!descend(0, d.sub())) return false;
        if (added) ctx_.drop_clause(reduced);
        ctx_.restore_clause(c, stamp);
        return true;
      }

      case Rule::kSplit: {
        Literal l = d.literal();
        // Either branch literal already decided makes one side inconsistent.
        if (ctx_.has_literal(l) || ctx_.has_literal(l.complement()))
          return fail(CheckFailure::kInconsistentContext,
                      "split literal " + show(l) +
                          " already decided in valuation");
        for (std::size_t branch = 0; branch < 2; ++branch) {
          Literal chosen = branch == 0 ? l : l.complement();
          bool pushed = ctx_.push_literal(chosen);
          if (!descend(branch, d.child(branch))) return false;
          if (pushed) ctx_.pop_literal();
        }
        return true;
      }
    }
    return true;
  }

  Context ctx_;
  std::vector<std::size_t> path_;
  CheckReport report_;
};

}  // namespace

CheckReport check_dpll(const Valuation &g0, const Formula &d0,
                       const DpllDerivation &d) {
  if (!is_consistent(g0)) {
    return CheckReport{CheckFailureInfo{{}, CheckFailure::kInconsistentContext,
                                        g0, d0, "initial valuation"}};
  }
  return DpllChecker(g0, d0).run(d);
}

}  // namespace dpllkit
