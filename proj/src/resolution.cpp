#include "dpllkit/resolution.hpp"

#include <sstream>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dpllkit/solver.hpp"

namespace dpllkit {

ResDerivation ResDerivation::sub(std::size_t premise_index, Clause conclusion) {
  return ResDerivation(std::make_shared<const Node>(
      Rule::kSub, premise_index, Literal{}, ResDerivation(nullptr),
      ResDerivation(nullptr), std::move(conclusion)));
}

ResDerivation ResDerivation::res(Literal pivot, ResDerivation left,
                                 ResDerivation right, Clause conclusion) {
  return ResDerivation(std::make_shared<const Node>(
      Rule::kRes, 0, pivot, std::move(left), std::move(right),
      std::move(conclusion)));
}

ResDerivation ResDerivation::resolve(Literal pivot, ResDerivation left,
                                     ResDerivation right) {
  Clause c = resolvent(pivot, left.conclusion(), right.conclusion());
  return res(pivot, std::move(left), std::move(right), std::move(c));
}

bool ResDerivation::operator==(const ResDerivation &other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  const Node &a = *node_;
  const Node &b = *other.node_;
  if (a.rule != b.rule || a.conclusion != b.conclusion) return false;
  if (a.rule == Rule::kSub) return a.premise == b.premise;
  return a.pivot == b.pivot && a.children[0] == b.children[0] &&
         a.children[1] == b.children[1];
}

std::size_t res_size(const ResDerivation &d) {
  if (d.rule() == ResDerivation::Rule::kSub) return 0;
  return 1 + res_size(d.left()) + res_size(d.right());
}

const Clause &res_conclusion(const ResDerivation &d) { return d.conclusion(); }

// ---------------------------------------------------------------------------

namespace {

class ResChecker {
 public:
  explicit ResChecker(const Formula &d0) : d0_(d0) {}

  CheckReport run(const ResDerivation &d) {
    visit(d);
    return std::move(report_);
  }

 private:
  template <class T>
  static std::string show(const T &x) {
    std::ostringstream os;
    os << x;
    return os.str();
  }

  bool fail(CheckFailure reason, Formula premises, std::string detail) {
    report_.failure = CheckFailureInfo{path_, reason, Valuation{},
                                       std::move(premises), std::move(detail)};
    return false;
  }

  bool visit(const ResDerivation &d) {
    const Clause &concl = d.conclusion();
    if (d.rule() == ResDerivation::Rule::kSub) {
      std::size_t i = d.premise_index();
      if (i < 1 || i > d0_.size())
        return fail(CheckFailure::kPremiseIndex, Formula{},
                    "premise " + std::to_string(i) + " out of range 1.." +
                        std::to_string(d0_.size()));
      const Clause &premise = d0_[i - 1];
      if (!premise.subset_of(concl))
        return fail(CheckFailure::kSubsumption,
                    Formula::from_clauses({premise}),
                    "premise " + show(premise) + " not a subset of " +
                        show(concl));
      return true;
    }

    const Clause &lc = d.left().conclusion();
    const Clause &rc = d.right().conclusion();
    Literal p = d.pivot();
    auto premises = [&] { return Formula::from_clauses({lc, rc}); };
    if (!lc.contains(p.complement()))
      return fail(CheckFailure::kPivotLeft, premises(),
                  "left premise " + show(lc) + " lacks " +
                      show(p.complement()));
    if (!rc.contains(p))
      return fail(CheckFailure::kPivotRight, premises(),
                  "right premise " + show(rc) + " lacks " + show(p));
    Clause expected = resolvent(p, lc, rc);
    if (expected != concl)
      return fail(CheckFailure::kResolventMismatch, premises(),
                  "conclusion " + show(concl) + " but resolvent is " +
                      show(expected));
    for (std::size_t branch = 0; branch < 2; ++branch) {
      path_.push_back(branch);
      if (!visit(branch == 0 ? d.left() : d.right())) return false;
      path_.pop_back();
    }
    return true;
  }

  const Formula &d0_;
  std::vector<std::size_t> path_;
  CheckReport report_;
};

// Re-points Sub leaves: a leaf citing premise k becomes a leaf citing
// target[k].index whose conclusion gains target[k].extra. Resolvents on the
// affected paths are recomputed; untouched subtrees are shared.
struct Relink {
  std::size_t index;
  Clause extra;
};

class Relinker {
 public:
  explicit Relinker(const std::unordered_map<std::size_t, Relink> &targets)
      : targets_(targets) {}

  ResDerivation apply(const ResDerivation &d) {
    if (auto it = memo_.find(d.identity()); it != memo_.end())
      return it->second;
    ResDerivation out = rebuild(d);
    memo_.emplace(d.identity(), out);
    return out;
  }

 private:
  ResDerivation rebuild(const ResDerivation &d) {
    if (d.rule() == ResDerivation::Rule::kSub) {
      auto it = targets_.find(d.premise_index());
      if (it == targets_.end()) return d;
      Clause c = d.conclusion();
      for (auto l : it->second.extra) c = c.with(l);
      return ResDerivation::sub(it->second.index, std::move(c));
    }
    ResDerivation l = apply(d.left());
    ResDerivation r = apply(d.right());
    if (l.identity() == d.left().identity() &&
        r.identity() == d.right().identity())
      return d;
    return ResDerivation::resolve(d.pivot(), std::move(l), std::move(r));
  }

  const std::unordered_map<std::size_t, Relink> &targets_;
  std::unordered_map<const void *, ResDerivation> memo_;
};

ResDerivation relink(const ResDerivation &d,
                     const std::unordered_map<std::size_t, Relink> &targets) {
  if (targets.empty()) return d;
  return Relinker(targets).apply(d);
}

// Walks a checked DPLL derivation, reconstructing the formula context with
// stable premise ids: 1..n for the input, fresh ids above n for clauses
// shortened by Red. Leaves citing shortened clauses are lifted back onto
// their input ancestors in one pass at the end.
// Derived clauses (from Red) are cited through the input clause they were
// reduced from. That clause only adds negations of literals already in the
// valuation, so every conclusion stays inside the negated valuation and the
// Unit/Split skip tests below look at the real lifted clauses.
class Translator {
 public:
  explicit Translator(const Formula &d0) : d0_(d0) {
    origin_.push_back(0);  // ids are 1-based
    for (std::size_t i = 0; i < d0.size(); ++i) {
      origin_.push_back(i + 1);
      ids_.emplace(d0[i], i + 1);
    }
  }

  ResDerivation run(const DpllDerivation &p) { return translate(p); }

 private:
  std::size_t take(const Clause &c) {
    auto it = ids_.find(c);
    std::size_t id = it->second;
    ids_.erase(it);
    return id;
  }
  void put(const Clause &c, std::size_t id) { ids_.emplace(c, id); }

  ResDerivation premise(std::size_t id) const {
    std::size_t o = origin_[id];
    return ResDerivation::sub(o, d0_[o - 1]);
  }

  ResDerivation translate(const DpllDerivation &p) {
    using Rule = DpllDerivation::Rule;
    switch (p.rule()) {
      case Rule::kConflict:
        return premise(ids_.at(Clause{}));

      case Rule::kUnit: {
        Literal l = p.literal();
        Clause unit = Clause::canonicalize({l});
        std::size_t id = take(unit);
        ResDerivation s = translate(p.sub());
        put(unit, id);
        if (!s.conclusion().contains(l.complement())) return s;
        return ResDerivation::resolve(l, std::move(s), premise(id));
      }

      case Rule::kElim: {
        std::size_t id = take(p.clause());
        ResDerivation s = translate(p.sub());
        put(p.clause(), id);
        return s;
      }

      case Rule::kRed: {
        const Clause &c = p.clause();
        std::size_t id = take(c);
        Clause reduced = c.without(p.literal().complement());
        bool fresh = ids_.find(reduced) == ids_.end();
        if (fresh) {
          std::size_t k = origin_.size();
          origin_.push_back(origin_[id]);
          ids_.emplace(reduced, k);
        }
        ResDerivation s = translate(p.sub());
        if (fresh) ids_.erase(reduced);
        put(c, id);
        return s;
      }

      case Rule::kSplit: {
        Literal l = p.literal();
        ResDerivation a = translate(p.left());
        if (!a.conclusion().contains(l.complement())) return a;
        ResDerivation b = translate(p.right());
        if (!b.conclusion().contains(l)) return b;
        return ResDerivation::resolve(l, std::move(a), std::move(b));
      }
    }
    throw std::logic_error("unreachable");
  }

  const Formula &d0_;
  std::vector<std::size_t> origin_;
  std::unordered_map<Clause, std::size_t, ClauseHash> ids_;
};

}  // namespace

CheckReport check_res(const Formula &d0, const ResDerivation &d) {
  return ResChecker(d0).run(d);
}

ResDerivation lift_clause(const ResDerivation &d, const Formula &premises,
                          const Clause &old, const Clause &new_clause,
                          Literal added) {
  std::size_t pos = premises.index_of(old);
  if (pos == Formula::npos)
    throw std::invalid_argument("lift_clause: old clause is not a premise");
  if (old.with(added) != new_clause)
    throw std::invalid_argument("lift_clause: new clause must be old + added");
  std::unordered_map<std::size_t, Relink> targets;
  targets.emplace(pos + 1, Relink{pos + 1, Clause::canonicalize({added})});
  return relink(d, targets);
}

InvalidDerivation::InvalidDerivation(CheckReport report)
    : std::invalid_argument("invalid DPLL derivation: " + describe(report)),
      report_(std::move(report)) {}

ResDerivation dpll_to_res(const Valuation &g, const Formula &d0,
                          const DpllDerivation &p) {
  CheckReport report = check_dpll(g, d0, p);
  if (!report.valid()) throw InvalidDerivation(std::move(report));
  return Translator(d0).run(p);
}

ResVerdict refute(const Formula &d0) {
  Verdict v = solve_witness(d0);
  if (v.is_sat()) return ResVerdict::sat(v.model());
  return ResVerdict::unsat(dpll_to_res(Valuation{}, d0, v.proof()));
}

}  // namespace dpllkit
