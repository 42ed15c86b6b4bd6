// Propagation rules, strategy, clash detection and the backtracking search
// for a clash-free completion.

#ifndef ALCNR_TABLEAU_HPP_
#define ALCNR_TABLEAU_HPP_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alcnr/constraint_system.hpp"

namespace alcnr {

enum class RuleKind { kAnd, kOr, kForAll, kExists, kAtLeast, kAtMost, kUniversal };

std::string_view to_string(RuleKind rule);
bool is_generating(RuleKind rule) noexcept;
bool is_nondeterministic(RuleKind rule) noexcept;

/// One way a rule can fire on the current system.
struct RuleInstance {
  RuleKind rule = RuleKind::kAnd;
  Object target = Object::individual("");
  // Triggering s:C, or the C of ∀x.x:C for kUniversal.
  Concept concept_expr = Concept::top();
  // kForAll: the R-successor that receives the filler.
  std::optional<Object> successor;
  // kAtMost: candidate merges (y, t); y is a variable and is replaced by t.
  std::vector<std::pair<Object, Object>> merges;

  std::size_t choice_count() const;

  friend bool operator==(const RuleInstance&, const RuleInstance&) = default;
};

std::string describe(const RuleInstance& r);

enum class ClashKind { kBottomMember, kComplementPair, kNumberViolation };

std::string_view to_string(ClashKind kind);

struct ClashReport {
  ClashKind kind = ClashKind::kBottomMember;
  Object object = Object::individual("");
  Concept concept_expr = Concept::bottom();
  // kNumberViolation: n+1 pairwise separated R-successors.
  std::vector<Object> successors;
};

/// Every applicable rule instance, ordered by the strategy:
/// individuals first (deterministic nongenerating, then nondeterministic,
/// then generating); then variables in ≺ order, each with its nongenerating
/// instances ahead of its generating ones. Generating instances on blocked
/// variables are suppressed. Empty iff the system is complete.
std::vector<RuleInstance> applicable_rule_instances(const ConstraintSystem& s);

/// The first element of applicable_rule_instances(s), computed lazily.
std::optional<RuleInstance> next_rule_instance(const ConstraintSystem& s);

bool is_applicable(const ConstraintSystem& s, const RuleInstance& r);

/// What an application changed, for tracing.
struct Application {
  std::vector<std::string> added;
  std::optional<std::pair<Object, Object>> substitution;
  std::vector<Object> fresh;
};

/// Applies choice `choice` of `r` in place. Throws std::invalid_argument if
/// `r` is not applicable or `choice` is out of range.
Application apply_in_place(ConstraintSystem& s, const RuleInstance& r, std::size_t choice = 0);
ConstraintSystem apply_rule_instance(const ConstraintSystem& s, const RuleInstance& r,
                                     std::size_t choice = 0);

std::optional<ClashReport> detect_clash(const ConstraintSystem& s);

/// True iff `role`-successors of `s` contain `k` pairwise separated objects.
bool has_separated_successors(const ConstraintSystem& s, const Object& o, const Role& role,
                              std::uint64_t k);

// ---------------------------------------------------------------------------
// Search

struct Guards {
  std::size_t max_variables = 50'000;
  std::size_t max_constraints = 2'000'000;
  std::size_t max_branches = 1'000'000;
};

struct SearchOptions {
  Guards guards;
  // Re-check the stability and bound invariants after every application.
  bool check_invariants = false;
  // Keep at most this many trace lines (the most recent); 0 keeps all.
  std::size_t trace_limit = 4096;
};

class Trace {
 public:
  explicit Trace(std::size_t limit = 0) : limit_(limit) {}

  void add(std::string line);
  const std::deque<std::string>& lines() const noexcept { return lines_; }
  std::size_t dropped() const noexcept { return dropped_; }
  std::string str() const;

 private:
  std::size_t limit_;
  std::size_t dropped_ = 0;
  std::deque<std::string> lines_;
};

struct SearchStats {
  std::size_t steps = 0;
  std::size_t branch_points = 0;
  std::size_t backtracks = 0;
  std::size_t variables_created = 0;
  std::size_t blocking_events = 0;
  // n_S of the input system and the largest non-blocked variable count seen.
  std::size_t n_s = 0;
  std::size_t max_non_blocked = 0;
};

enum class CompletionStatus { kSatisfiable, kUnsatisfiable, kResourceExceeded };

struct CompletionResult {
  CompletionStatus status = CompletionStatus::kUnsatisfiable;
  std::optional<ConstraintSystem> completion;
  Trace trace;
  SearchStats stats;
  // Which guard fired, for kResourceExceeded.
  std::string guard;
};

/// Depth-first search for a clash-free completion of `s`. Deterministic
/// rules are applied as the strategy selects them; kOr branches try the
/// left disjunct first and kAtMost branches follow the merge list order.
/// Throws std::logic_error if invariant checking is on and one fails.
CompletionResult complete(const ConstraintSystem& s, const SearchOptions& options = {});

}  // namespace alcnr

#endif  // ALCNR_TABLEAU_HPP_
