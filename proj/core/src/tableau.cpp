#include "alcnr/tableau.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace alcnr {

std::string_view to_string(RuleKind rule) {
  switch (rule) {
    case RuleKind::kAnd:
      return "and";
    case RuleKind::kOr:
      return "or";
    case RuleKind::kForAll:
      return "forall";
    case RuleKind::kExists:
      return "exists";
    case RuleKind::kAtLeast:
      return "atleast";
    case RuleKind::kAtMost:
      return "atmost";
    case RuleKind::kUniversal:
      return "forall-x";
  }
  return "?";
}

bool is_generating(RuleKind rule) noexcept {
  return rule == RuleKind::kExists || rule == RuleKind::kAtLeast;
}

bool is_nondeterministic(RuleKind rule) noexcept {
  return rule == RuleKind::kOr || rule == RuleKind::kAtMost;
}

std::string_view to_string(ClashKind kind) {
  switch (kind) {
    case ClashKind::kBottomMember:
      return "bottom-member";
    case ClashKind::kComplementPair:
      return "complement-pair";
    case ClashKind::kNumberViolation:
      return "number-violation";
  }
  return "?";
}

std::size_t RuleInstance::choice_count() const {
  switch (rule) {
    case RuleKind::kOr:
      return 2;
    case RuleKind::kAtMost:
      return merges.size();
    default:
      return 1;
  }
}

std::string describe(const RuleInstance& r) {
  std::string out(to_string(r.rule));
  out += " on " + r.target.to_string() + " : " + to_string(r.concept_expr);
  return out;
}

// ---------------------------------------------------------------------------
// Separation cliques

namespace {

bool extend_clique(const ConstraintSystem& s, const std::vector<Object>& candidates,
                   std::size_t from, std::uint64_t k, std::vector<Object>& clique) {
  if (clique.size() == k) return true;
  for (std::size_t i = from; i < candidates.size(); ++i) {
    if (candidates.size() - i < k - clique.size()) return false;
    const Object& c = candidates[i];
    bool ok = std::all_of(clique.begin(), clique.end(),
                          [&](const Object& m) { return s.separated(m, c); });
    if (!ok) continue;
    clique.push_back(c);
    if (extend_clique(s, candidates, i + 1, k, clique)) return true;
    clique.pop_back();
  }
  return false;
}

std::optional<std::vector<Object>> separated_clique(const ConstraintSystem& s,
                                                    const std::vector<Object>& succs,
                                                    std::uint64_t k) {
  std::vector<Object> clique;
  if (k == 0) return clique;
  if (succs.size() < k) return std::nullopt;
  // Greedy pass first; it settles the common all-separated case.
  for (const auto& c : succs) {
    if (std::all_of(clique.begin(), clique.end(),
                    [&](const Object& m) { return s.separated(m, c); })) {
      clique.push_back(c);
      if (clique.size() == k) return clique;
    }
  }
  clique.clear();
  if (extend_clique(s, succs, 0, k, clique)) return clique;
  return std::nullopt;
}

}  // namespace

bool has_separated_successors(const ConstraintSystem& s, const Object& o, const Role& role,
                              std::uint64_t k) {
  return separated_clique(s, s.r_successors(o, role), k).has_value();
}

// ---------------------------------------------------------------------------
// Rule instances

namespace {

enum class Phase { kDeterministic, kNondeterministic, kGenerating };

RuleInstance instance(RuleKind rule, const Object& target, const Concept& c) {
  RuleInstance r;
  r.rule = rule;
  r.target = target;
  r.concept_expr = c;
  return r;
}

// Instances of one phase on one object, in a fixed order. Generating
// instances are produced regardless of blocking; callers decide.
void collect(const ConstraintSystem& s, const Object& o, Phase phase,
             std::vector<RuleInstance>& out) {
  const auto& label = s.sigma(o);
  switch (phase) {
    case Phase::kDeterministic:
      for (const auto& c : label) {
        if (c.is(ConceptKind::kAnd) && !(label.count(c.lhs()) && label.count(c.rhs()))) {
          out.push_back(instance(RuleKind::kAnd, o, c));
        }
      }
      for (const auto& c : label) {
        if (!c.is(ConceptKind::kAll)) continue;
        for (const auto& t : s.r_successors(o, c.role())) {
          if (!s.has_member(t, c.operand())) {
            RuleInstance r = instance(RuleKind::kForAll, o, c);
            r.successor = t;
            out.push_back(std::move(r));
          }
        }
      }
      for (const auto& c : s.universals()) {
        if (!label.count(c)) out.push_back(instance(RuleKind::kUniversal, o, c));
      }
      break;
    case Phase::kNondeterministic:
      for (const auto& c : label) {
        if (c.is(ConceptKind::kOr) && !label.count(c.lhs()) && !label.count(c.rhs())) {
          out.push_back(instance(RuleKind::kOr, o, c));
        }
      }
      for (const auto& c : label) {
        if (!c.is(ConceptKind::kAtMost)) continue;
        const auto succs = s.r_successors(o, c.role());
        if (succs.size() <= c.number()) continue;
        // n+1 separated successors is a clash, not a merge opportunity.
        if (separated_clique(s, succs, c.number() + 1)) continue;
        RuleInstance r = instance(RuleKind::kAtMost, o, c);
        for (std::size_t i = 0; i < succs.size(); ++i) {
          for (std::size_t j = i + 1; j < succs.size(); ++j) {
            // succs is in object order, so succs[j] is the ≺-larger one and
            // the only possible variable when exactly one of them is.
            if (succs[j].is_variable() && !s.separated(succs[i], succs[j])) {
              r.merges.emplace_back(succs[j], succs[i]);
            }
          }
        }
        std::sort(r.merges.begin(), r.merges.end());
        if (!r.merges.empty()) out.push_back(std::move(r));
      }
      break;
    case Phase::kGenerating:
      for (const auto& c : label) {
        if (c.is(ConceptKind::kSome)) {
          const auto succs = s.r_successors(o, c.role());
          bool satisfied = std::any_of(succs.begin(), succs.end(), [&](const Object& t) {
            return s.has_member(t, c.operand());
          });
          if (!satisfied) out.push_back(instance(RuleKind::kExists, o, c));
        } else if (c.is(ConceptKind::kAtLeast)) {
          if (c.number() > 0 && !has_separated_successors(s, o, c.role(), c.number())) {
            out.push_back(instance(RuleKind::kAtLeast, o, c));
          }
        }
      }
      break;
  }
}

// Walks objects in strategy order. Stops after the first instance when
// `first_only`. Variables whose generating instances were suppressed by
// blocking are reported through `suppressed`.
std::vector<RuleInstance> scan(const ConstraintSystem& s, bool first_only,
                               std::vector<Object>* suppressed) {
  std::vector<RuleInstance> out;
  auto done = [&] { return first_only && !out.empty(); };

  const auto& objects = s.objects();
  const auto first_var = objects.lower_bound(Object::variable(0));
  for (Phase phase : {Phase::kDeterministic, Phase::kNondeterministic, Phase::kGenerating}) {
    for (auto it = objects.begin(); it != first_var; ++it) {
      collect(s, *it, phase, out);
      if (done()) return out;
    }
  }
  for (auto it = first_var; it != objects.end(); ++it) {
    collect(s, *it, Phase::kDeterministic, out);
    if (done()) return out;
    collect(s, *it, Phase::kNondeterministic, out);
    if (done()) return out;
    std::vector<RuleInstance> generating;
    collect(s, *it, Phase::kGenerating, generating);
    if (generating.empty()) continue;
    if (s.is_blocked(*it)) {
      if (suppressed) suppressed->push_back(*it);
      continue;
    }
    out.insert(out.end(), generating.begin(), generating.end());
    if (done()) return out;
  }
  return out;
}

}  // namespace

std::vector<RuleInstance> applicable_rule_instances(const ConstraintSystem& s) {
  return scan(s, false, nullptr);
}

std::optional<RuleInstance> next_rule_instance(const ConstraintSystem& s) {
  auto found = scan(s, true, nullptr);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

bool is_applicable(const ConstraintSystem& s, const RuleInstance& r) {
  if (!s.contains(r.target)) return false;
  std::vector<RuleInstance> candidates;
  const Phase phase = is_generating(r.rule)         ? Phase::kGenerating
                      : is_nondeterministic(r.rule) ? Phase::kNondeterministic
                                                    : Phase::kDeterministic;
  collect(s, r.target, phase, candidates);
  if (phase == Phase::kGenerating && s.is_blocked(r.target)) return false;
  return std::find(candidates.begin(), candidates.end(), r) != candidates.end();
}

// ---------------------------------------------------------------------------
// Application

namespace {

void add_member(ConstraintSystem& s, const Object& o, const Concept& c, Application& app) {
  if (s.add_member(o, c)) app.added.push_back(o.to_string() + " : " + to_string(c));
}

void add_links(ConstraintSystem& s, const Object& from, const Role& role, const Object& to,
               Application& app) {
  for (const auto& p : role.names()) {
    if (s.add_link(from, p, to)) {
      app.added.push_back(from.to_string() + ' ' + p + ' ' + to.to_string());
    }
  }
}

}  // namespace

Application apply_in_place(ConstraintSystem& s, const RuleInstance& r, std::size_t choice) {
  if (choice >= r.choice_count()) throw std::invalid_argument("invalid choice index");
  if (!is_applicable(s, r)) throw std::invalid_argument("rule instance is not applicable");
  Application app;
  const Concept& c = r.concept_expr;
  switch (r.rule) {
    case RuleKind::kAnd:
      add_member(s, r.target, c.lhs(), app);
      add_member(s, r.target, c.rhs(), app);
      break;
    case RuleKind::kOr:
      add_member(s, r.target, choice == 0 ? c.lhs() : c.rhs(), app);
      break;
    case RuleKind::kForAll:
      add_member(s, *r.successor, c.operand(), app);
      break;
    case RuleKind::kUniversal:
      add_member(s, r.target, c, app);
      break;
    case RuleKind::kExists: {
      Object y = s.fresh_variable();
      app.fresh.push_back(y);
      add_links(s, r.target, c.role(), y, app);
      add_member(s, y, c.operand(), app);
      break;
    }
    case RuleKind::kAtLeast: {
      std::vector<Object> fresh;
      for (std::uint64_t i = 0; i < c.number(); ++i) {
        Object y = s.fresh_variable();
        add_links(s, r.target, c.role(), y, app);
        fresh.push_back(y);
      }
      for (std::size_t i = 0; i < fresh.size(); ++i) {
        for (std::size_t j = i + 1; j < fresh.size(); ++j) {
          if (s.add_distinct(fresh[i], fresh[j])) {
            app.added.push_back(fresh[i].to_string() + " != " + fresh[j].to_string());
          }
        }
      }
      app.fresh = std::move(fresh);
      break;
    }
    case RuleKind::kAtMost: {
      const auto& [y, t] = r.merges[choice];
      s.substitute_in_place(y, t);
      app.substitution = r.merges[choice];
      break;
    }
  }
  return app;
}

ConstraintSystem apply_rule_instance(const ConstraintSystem& s, const RuleInstance& r,
                                     std::size_t choice) {
  ConstraintSystem out = s;
  apply_in_place(out, r, choice);
  return out;
}

// ---------------------------------------------------------------------------
// Clashes

std::optional<ClashReport> detect_clash(const ConstraintSystem& s) {
  for (const auto& [o, label] : s.labels()) {
    for (const auto& c : label) {
      ClashReport report;
      report.object = o;
      report.concept_expr = c;
      if (c.is(ConceptKind::kBottom)) {
        report.kind = ClashKind::kBottomMember;
        return report;
      }
      if (c.is(ConceptKind::kNot) && label.count(c.operand())) {
        report.kind = ClashKind::kComplementPair;
        return report;
      }
      if (c.is(ConceptKind::kAtMost)) {
        const auto succs = s.r_successors(o, c.role());
        if (succs.size() <= c.number()) continue;
        if (auto clique = separated_clique(s, succs, c.number() + 1)) {
          report.kind = ClashKind::kNumberViolation;
          report.successors = std::move(*clique);
          return report;
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Search

void Trace::add(std::string line) {
  lines_.push_back(std::move(line));
  if (limit_ != 0 && lines_.size() > limit_) {
    lines_.pop_front();
    ++dropped_;
  }
}

std::string Trace::str() const {
  std::string out;
  if (dropped_ != 0) out += "... " + std::to_string(dropped_) + " earlier lines dropped\n";
  for (const auto& l : lines_) out += l + '\n';
  return out;
}

namespace {

struct PathState {
  std::set<Object> logged_blocks;
  // Invariant checking: σ of every variable that has fired a generating rule.
  std::map<Object, std::set<Concept>> frozen;
};

struct Frame {
  ConstraintSystem system;
  RuleInstance instance;
  std::size_t next_choice;
  std::size_t step;
  PathState path;
};

std::string clash_text(const ClashReport& clash) {
  return std::string(to_string(clash.kind)) + " on " + clash.object.to_string();
}

class Searcher {
 public:
  Searcher(const ConstraintSystem& s, const SearchOptions& options)
      : options_(options), current_(s) {
    result_.trace = Trace(options.trace_limit);
  }

  CompletionResult run() {
    result_.stats.n_s = current_.measure().n_s;
    if (auto clash = detect_clash(current_)) {
      result_.trace.add("clash: " + clash_text(*clash));
      return finish(CompletionStatus::kUnsatisfiable);
    }
    for (;;) {
      std::vector<Object> suppressed;
      auto found = scan(current_, true, &suppressed);
      log_blocks(suppressed);
      if (found.empty()) {
        if (options_.check_invariants) check_completion();
        update_bound_stats();
        result_.completion = current_;
        return finish(CompletionStatus::kSatisfiable);
      }
      RuleInstance inst = std::move(found.front());
      if (inst.choice_count() > 1) {
        if (++result_.stats.branch_points > options_.guards.max_branches) {
          return exceeded("branch guard (" + std::to_string(options_.guards.max_branches) +
                          " branch points)");
        }
        frames_.push_back({current_, inst, 1, result_.stats.steps + 1, path_});
      }
      bool clash = apply(inst, 0);
      while (clash) {
        if (frames_.empty()) return finish(CompletionStatus::kUnsatisfiable);
        Frame& f = frames_.back();
        const std::size_t choice = f.next_choice++;
        RuleInstance retry = f.instance;
        result_.trace.add("backtrack to step " + std::to_string(f.step));
        ++result_.stats.backtracks;
        if (f.next_choice >= retry.choice_count()) {
          current_ = std::move(f.system);
          path_ = std::move(f.path);
          frames_.pop_back();
        } else {
          current_ = f.system;
          path_ = f.path;
        }
        clash = apply(retry, choice);
      }
      if (auto guard = check_guards()) return exceeded(*guard);
    }
  }

 private:
  // Returns true if the resulting system contains a clash.
  bool apply(const RuleInstance& inst, std::size_t choice) {
    const std::size_t step = ++result_.stats.steps;
    if (options_.check_invariants) check_target(inst);
    Application app = apply_in_place(current_, inst, choice);
    result_.stats.variables_created += app.fresh.size();

    std::string line = "step " + std::to_string(step) + ": " + describe(inst);
    if (inst.rule == RuleKind::kForAll) line += " -> " + inst.successor->to_string();
    if (inst.choice_count() > 1) {
      line += " choice " + std::to_string(choice + 1) + "/" + std::to_string(inst.choice_count());
    }
    if (!app.added.empty()) {
      line += " | added: ";
      for (std::size_t i = 0; i < app.added.size(); ++i) {
        if (i) line += "; ";
        line += app.added[i];
      }
    }
    if (app.substitution) {
      line += " | subst: " + app.substitution->first.to_string() + " -> " +
              app.substitution->second.to_string();
    }
    auto clash = detect_clash(current_);
    if (clash) line += " | clash: " + clash_text(*clash);
    result_.trace.add(std::move(line));

    if (options_.check_invariants) {
      if (is_generating(inst.rule) && inst.target.is_variable()) {
        path_.frozen.emplace(inst.target, current_.sigma(inst.target));
      }
      check_stability();
      update_bound_stats();
    }
    return clash.has_value();
  }

  void log_blocks(const std::vector<Object>& suppressed) {
    for (const auto& v : suppressed) {
      if (!path_.logged_blocks.insert(v).second) continue;
      auto w = current_.witness(v);
      ++result_.stats.blocking_events;
      result_.trace.add("step " + std::to_string(result_.stats.steps) + ": block on " +
                        v.to_string() + " | witness: " + w->to_string());
    }
  }

  std::optional<std::string> check_guards() const {
    if (current_.next_variable_index() > options_.guards.max_variables) {
      return "variable guard (" + std::to_string(options_.guards.max_variables) +
             " variables); completions are finite but may reach O(2^{4n}) size in the KB size n";
    }
    if (current_.constraint_count() > options_.guards.max_constraints) {
      return "constraint guard (" + std::to_string(options_.guards.max_constraints) +
             " constraints)";
    }
    return std::nullopt;
  }

  void update_bound_stats() {
    auto m = current_.measure();
    result_.stats.max_non_blocked = std::max(result_.stats.max_non_blocked, m.non_blocked_count);
    if (options_.check_invariants && result_.stats.n_s < 63 &&
        m.non_blocked_count > (std::size_t{1} << result_.stats.n_s)) {
      throw std::logic_error("more than 2^n_S non-blocked variables");
    }
  }

  // No rule may fire on a variable ≺ one that already fired a generating rule.
  void check_target(const RuleInstance& inst) const {
    if (path_.frozen.empty() || !inst.target.is_variable()) return;
    const Object& latest = path_.frozen.rbegin()->first;
    if (inst.target < latest) {
      throw std::logic_error("strategy violated: rule on " + inst.target.to_string() +
                             " after generating on " + latest.to_string());
    }
  }

  void check_stability() const {
    for (const auto& [x, label] : path_.frozen) {
      if (!current_.contains(x) || current_.sigma(x) != label) {
        throw std::logic_error("sigma of " + x.to_string() + " changed after generating");
      }
    }
  }

  void check_completion() const {
    for (const auto& v : current_.variables()) {
      if (auto w = current_.witness(v)) {
        if (!current_.direct_successors(v).empty()) {
          throw std::logic_error("blocked variable " + v.to_string() + " has successors");
        }
        if (current_.witness(*w)) {
          throw std::logic_error("witness " + w->to_string() + " is itself blocked");
        }
      }
    }
  }

  CompletionResult exceeded(std::string guard) {
    result_.guard = std::move(guard);
    return finish(CompletionStatus::kResourceExceeded);
  }

  CompletionResult finish(CompletionStatus status) {
    result_.status = status;
    switch (status) {
      case CompletionStatus::kSatisfiable:
        result_.trace.add("result: SAT");
        break;
      case CompletionStatus::kUnsatisfiable:
        result_.trace.add("result: UNSAT");
        break;
      case CompletionStatus::kResourceExceeded:
        result_.trace.add("result: UNKNOWN (" + result_.guard + ")");
        break;
    }
    return std::move(result_);
  }

  const SearchOptions& options_;
  ConstraintSystem current_;
  PathState path_;
  std::vector<Frame> frames_;
  CompletionResult result_;
};

}  // namespace

CompletionResult complete(const ConstraintSystem& s, const SearchOptions& options) {
  return Searcher(s, options).run();
}

}  // namespace alcnr
