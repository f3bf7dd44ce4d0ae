#include "dpllkit/solver.hpp"

#include <algorithm>
#include <deque>
#include <iostream>
#include <sstream>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dpllkit {

Assignment complete_model(const Valuation &g) {
  return Assignment::from_valuation(g, /*default_value=*/true);
}

Literal choose_split(const Formula &t) {
  if (t.empty()) throw std::invalid_argument("choose_split: no clean clauses");
  if (t[0].empty())
    throw std::invalid_argument("choose_split: empty clean clause");
  return t[0][0];
}

namespace {

#ifdef NDEBUG
constexpr bool kDebugBuild = false;
#else
constexpr bool kDebugBuild = true;
#endif

// Evidence builders. The witness policy assembles real models and
// derivations; the decide policy threads empty tokens through the same
// control flow.
struct WitnessPolicy {
  using Model = Assignment;
  using Proof = DpllDerivation;

  static Model model(const std::vector<Literal> &gamma) {
    return complete_model(Valuation::from_literals(gamma));
  }
  static Proof conflict() { return DpllDerivation::conflict(); }
  static Proof unit(Literal l, Proof p) {
    return DpllDerivation::unit(l, std::move(p));
  }
  static Proof elim(const Clause &c, Literal l, Proof p) {
    return DpllDerivation::elim(c, l, std::move(p));
  }
  static Proof red(const Clause &c, Literal l, Proof p) {
    return DpllDerivation::red(c, l, std::move(p));
  }
  static Proof split(Literal l, Proof a, Proof b) {
    return DpllDerivation::split(l, std::move(a), std::move(b));
  }
};

struct DecidePolicy {
  struct Model {};
  struct Proof {};

  static Model model(const std::vector<Literal> &) { return {}; }
  static Proof conflict() { return {}; }
  static Proof unit(Literal, Proof) { return {}; }
  static Proof elim(const Clause &, Literal, Proof) { return {}; }
  static Proof red(const Clause &, Literal, Proof) { return {}; }
  static Proof split(Literal, Proof, Proof) { return {}; }
};

// Lexicographic termination key.
struct Rank {
  std::size_t measure = 0;
  std::size_t pending = 0;
  auto operator<=>(const Rank &) const = default;
};

template <class Policy>
class Engine {
 public:
  using Model = typename Policy::Model;
  using Proof = typename Policy::Proof;
  using Outcome = std::variant<Model, Proof>;

  Engine(const Valuation &g, const Formula &d, const Formula &t,
         const SolverConfig &cfg)
      : cfg_(cfg), checked_(cfg.assert_measure || kDebugBuild) {
    std::uint32_t max_var = std::max(max_variable(d), max_variable(t));
    for (auto l : g) max_var = std::max(max_var, l.var().id);
    value_.assign(static_cast<std::size_t>(max_var) + 1, 0);
    literal_mark_.assign(2 * (static_cast<std::size_t>(max_var) + 1), 0);

    for (auto l : g) assign(l);
    for (const auto &c : t) {
      auto id = intern(c);
      if (in_context_[id]++ == 0) theta_.push_back(id);
    }
    for (const auto &c : d) {
      auto id = intern(c);
      if (in_context_[id] == 0) {
        ++in_context_[id];
        delta_.push_back(id);
      }
    }
    if (cfg_.trace) trace_ = cfg_.trace_stream ? cfg_.trace_stream : &std::clog;
  }

  Outcome run() {
    std::optional<Rank> none;
    return step(none, 0);
  }

  const SolverStats &stats() const { return stats_; }

 private:
  using ClauseId = std::uint32_t;

  // --- valuation --------------------------------------------------------

  static std::int8_t sign(Literal l) { return l.is_negative() ? -1 : 1; }
  bool holds(Literal l) const { return value_[l.var().id] == sign(l); }
  bool falsified(Literal l) const { return value_[l.var().id] == -sign(l); }
  bool assigned(Variable v) const { return value_[v.id] != 0; }

  void assign(Literal l) {
    // Callers only assign unassigned variables, except when seeding from a
    // caller-supplied valuation, which the precondition check inspects.
    if (value_[l.var().id] == 0) {
      value_[l.var().id] = sign(l);
      gamma_.push_back(l);
    } else if (value_[l.var().id] != sign(l)) {
      inconsistent_seed_ = true;
    }
  }
  void unassign() {
    value_[gamma_.back().var().id] = 0;
    gamma_.pop_back();
  }

  // --- clause store -----------------------------------------------------

  ClauseId intern(const Clause &c) {
    auto [it, inserted] =
        ids_.try_emplace(c, static_cast<ClauseId>(store_.size()));
    if (inserted) {
      store_.push_back(c);
      in_context_.push_back(0);
    }
    return it->second;
  }

  // --- instrumentation --------------------------------------------------

  Rank rank() {
    ++mark_generation_;
    std::size_t outside = 0, total_weight = 0;
    auto count = [&](ClauseId id) {
      for (auto l : store_[id]) {
        ++total_weight;
        if (assigned(l.var())) continue;
        auto &mark = literal_mark_[l.code()];
        if (mark != mark_generation_) {
          mark = mark_generation_;
          ++outside;
        }
      }
    };
    for (auto id : delta_) count(id);
    for (auto id : theta_) count(id);
    return Rank{outside + total_weight, delta_.size()};
  }

  void check_state(std::optional<Rank> &parent, Rank &self) {
    if (inconsistent_seed_)
      throw InvariantViolation("valuation is inconsistent");
    for (auto id : theta_) {
      const Clause &c = store_[id];
      if (c.empty())
        throw InvariantViolation("empty clause among clean clauses");
      for (auto l : c)
        if (assigned(l.var()))
          throw InvariantViolation("clean clause shares a variable with the "
                                   "valuation");
    }
    self = rank();
    ++stats_.measure_checks;
    if (parent && !(self < *parent)) {
      std::ostringstream os;
      os << "measure did not decrease: (" << parent->measure << ", "
         << parent->pending << ") -> (" << self.measure << ", "
         << self.pending << ")";
      throw MeasureViolation(os.str());
    }
  }

  void note(std::size_t depth, const char *what, Literal l = {}) {
    if (!trace_) return;
    *trace_ << "c " << std::string(depth, ' ') << what;
    if (l.var().id != 0) *trace_ << ' ' << l;
    *trace_ << " |G|=" << gamma_.size() << " |D|=" << delta_.size()
            << " |T|=" << theta_.size() << '\n';
  }

  static bool is_sat(const Outcome &o) {
    return std::holds_alternative<Model>(o);
  }
  static Proof take_proof(Outcome &o) {
    return std::move(std::get<Proof>(o));
  }

  // --- the search -------------------------------------------------------

  Outcome step(std::optional<Rank> parent, std::size_t depth) {
    ++stats_.calls;
    stats_.max_depth = std::max<std::uint64_t>(stats_.max_depth, depth);
    std::optional<Rank> here;
    if (checked_) {
      Rank self;
      check_state(parent, self);
      here = self;
    }

    if (delta_.empty()) {
      if (theta_.empty()) {
        note(depth, "model");
        return Model(Policy::model(gamma_));
      }
      // Split on the first literal of the clean clauses.
      Literal l = store_[theta_.front()][0];
      note(depth, "split", l);
      ++stats_.splits;
      std::vector<ClauseId> saved = std::move(theta_);
      theta_.clear();
      delta_.assign(saved.begin(), saved.end());

      assign(l);
      Outcome left = step(here, depth + 1);
      unassign();
      if (is_sat(left)) {
        restore_clean(std::move(saved));
        return left;
      }
      assign(l.complement());
      Outcome right = step(here, depth + 1);
      unassign();
      restore_clean(std::move(saved));
      if (is_sat(right)) return right;
      return Proof(
          Policy::split(l, take_proof(left), take_proof(right)));
    }

    const ClauseId head = delta_.front();
    const Clause &c = store_[head];

    auto common =
        std::find_if(c.begin(), c.end(), [&](Literal l) { return holds(l); });
    if (common != c.end()) {
      // Satisfied by the valuation: drop it.
      Literal l = *common;
      note(depth, "elim", l);
      pop_head();
      Outcome sub = step(here, depth + 1);
      push_head(head);
      if (is_sat(sub)) return sub;
      return Proof(Policy::elim(c, l, take_proof(sub)));
    }

    if (c.empty()) {
      note(depth, "conflict");
      return Proof(Policy::conflict());
    }

    if (c.size() == 1) {
      Literal l = c[0];
      if (falsified(l)) {
        note(depth, "red+conflict", l);
        return Proof(Policy::red(c, l.complement(), Policy::conflict()));
      }
      note(depth, "unit", l);
      pop_head();
      // Clean clauses rejoin the pending ones.
      std::vector<ClauseId> saved = std::move(theta_);
      theta_.clear();
      delta_.insert(delta_.end(), saved.begin(), saved.end());
      assign(l);
      Outcome sub = step(here, depth + 1);
      unassign();
      delta_.erase(delta_.end() - static_cast<std::ptrdiff_t>(saved.size()),
                   delta_.end());
      theta_ = std::move(saved);
      push_head(head);
      if (is_sat(sub)) return sub;
      return Proof(Policy::unit(l, take_proof(sub)));
    }

    auto refuted = std::find_if(c.begin(), c.end(),
                                [&](Literal l) { return falsified(l); });
    if (refuted != c.end()) {
      // Strip a literal the valuation falsifies.
      Literal l = *refuted;
      note(depth, "red", l.complement());
      ClauseId reduced = intern(c.without(l));
      pop_head();
      bool added = in_context_[reduced] == 0;
      if (added) {
        ++in_context_[reduced];
        delta_.push_back(reduced);
      }
      Outcome sub = step(here, depth + 1);
      if (added) {
        delta_.pop_back();
        --in_context_[reduced];
      }
      push_head(head);
      if (is_sat(sub)) return sub;
      return Proof(Policy::red(c, l.complement(), take_proof(sub)));
    }

    // Clean: shares no variable with the valuation.
    note(depth, "clean");
    delta_.pop_front();
    theta_.push_back(head);
    Outcome sub = step(here, depth + 1);
    theta_.pop_back();
    delta_.push_front(head);
    return sub;
  }

  void pop_head() {
    --in_context_[delta_.front()];
    delta_.pop_front();
  }
  void push_head(ClauseId id) {
    ++in_context_[id];
    delta_.push_front(id);
  }
  void restore_clean(std::vector<ClauseId> saved) {
    delta_.clear();
    theta_ = std::move(saved);
  }

  const SolverConfig &cfg_;
  const bool checked_;
  std::ostream *trace_ = nullptr;

  // deque: references stay valid while recursion interns new clauses.
  std::deque<Clause> store_;
  std::unordered_map<Clause, ClauseId, ClauseHash> ids_;
  std::vector<std::uint32_t> in_context_;

  std::deque<ClauseId> delta_;
  std::vector<ClauseId> theta_;

  std::vector<Literal> gamma_;
  std::vector<std::int8_t> value_;
  bool inconsistent_seed_ = false;

  std::vector<std::uint64_t> literal_mark_;
  std::uint64_t mark_generation_ = 0;

  SolverStats stats_;
};

template <class Policy>
SolveResult run_engine(const Valuation &g, const Formula &d, const Formula &t,
                       const SolverConfig &cfg) {
  Engine<Policy> engine(g, d, t, cfg);
  auto outcome = engine.run();
  SolveResult result;
  result.satisfiable = std::holds_alternative<typename Policy::Model>(outcome);
  result.stats = engine.stats();
  if constexpr (std::is_same_v<Policy, WitnessPolicy>) {
    if (result.satisfiable)
      result.verdict = Verdict::sat(std::get<Assignment>(std::move(outcome)));
    else
      result.verdict =
          Verdict::unsat(std::get<DpllDerivation>(std::move(outcome)));
  }
  return result;
}

}  // namespace

SolveResult solve_aux(const Valuation &g, const Formula &d, const Formula &t,
                      const SolverConfig &cfg) {
  if (!is_consistent(g)) throw InvariantViolation("valuation is inconsistent");
  auto gamma_vars = vars_of(g);
  for (const auto &c : t) {
    if (c.empty()) throw InvariantViolation("empty clause among clean clauses");
    for (auto l : c)
      if (std::binary_search(gamma_vars.begin(), gamma_vars.end(), l.var()))
        throw InvariantViolation("clean clause shares a variable with the "
                                 "valuation");
  }
  if (cfg.mode == SolverMode::kDecide)
    return run_engine<DecidePolicy>(g, d, t, cfg);
  return run_engine<WitnessPolicy>(g, d, t, cfg);
}

SolveResult solve(const Formula &d, const SolverConfig &cfg) {
  return solve_aux(Valuation{}, d, Formula{}, cfg);
}

Verdict solve_witness(const Formula &d) { return *solve(d).verdict; }

bool decide(const Formula &d) {
  SolverConfig cfg;
  cfg.mode = SolverMode::kDecide;
  return solve(d, cfg).satisfiable;
}

}  // namespace dpllkit
