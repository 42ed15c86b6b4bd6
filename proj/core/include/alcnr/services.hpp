// Reasoning services, all reduced to knowledge-base satisfiability.

#ifndef ALCNR_SERVICES_HPP_
#define ALCNR_SERVICES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alcnr/canonical_model.hpp"
#include "alcnr/constraint_system.hpp"
#include "alcnr/semantics.hpp"
#include "alcnr/syntax.hpp"
#include "alcnr/tableau.hpp"

namespace alcnr {

enum class Satisfiability { kSat, kUnsat, kUnknown };
enum class Truth { kTrue, kFalse, kUnknown };

std::string_view to_string(Satisfiability s);  // SAT, UNSAT, UNKNOWN
std::string_view to_string(Truth t);           // true, false, unknown

struct ServiceOptions {
  SearchOptions search;
  // On SAT, check the canonical model against the completion and the KB;
  // a failure throws std::logic_error.
  bool self_check = true;
};

struct Verdict {
  Satisfiability status = Satisfiability::kUnknown;
  // The KB that was actually decided (the input plus any reduction assertion).
  KnowledgeBase decided;
  std::optional<ConstraintSystem> completion;  // SAT only
  std::optional<CanonicalModel> model;         // SAT only
  std::string guard;                           // UNKNOWN only
  Trace trace;
  SearchStats stats;
};

/// Answer of a yes/no service; `verdict` is the satisfiability verdict of
/// the reduced KB (true answers correspond to UNSAT).
struct Answer {
  Truth value = Truth::kUnknown;
  Verdict verdict;
};

struct InstancesResult {
  std::vector<std::string> members;
  // Individuals whose check hit a guard.
  std::vector<std::string> unknown;
};

Verdict kb_satisfiable(const KnowledgeBase& kb, const ServiceOptions& options = {});

/// Satisfiability of ⟨T, A ∪ {C(__fresh)}⟩.
Verdict concept_satisfiable(const KnowledgeBase& kb, const Concept& c,
                            const ServiceOptions& options = {});

/// Whether C is subsumed by D w.r.t. `kb`: ⟨T, A ∪ {(C ⊓ ¬D)(__fresh)}⟩ is
/// unsatisfiable.
Answer subsumed_by(const KnowledgeBase& kb, const Concept& c, const Concept& d,
                   const ServiceOptions& options = {});

/// Whether `kb` entails C(a): ⟨T, A ∪ {(¬C)(a)}⟩ is unsatisfiable. Throws
/// std::invalid_argument if `a` is not an individual of `kb`.
Answer instance_of(const KnowledgeBase& kb, const std::string& a, const Concept& c,
                   const ServiceOptions& options = {});

/// Individuals a of `kb` with instance_of(kb, a, c) true, in name order.
InstancesResult instances(const KnowledgeBase& kb, const Concept& c,
                          const ServiceOptions& options = {});

/// The KBs each service hands to kb_satisfiable.
KnowledgeBase with_assertion(const KnowledgeBase& kb, const std::string& a, const Concept& c);
KnowledgeBase concept_query(const KnowledgeBase& kb, const Concept& c);
KnowledgeBase subsumption_query(const KnowledgeBase& kb, const Concept& c, const Concept& d);
KnowledgeBase instance_query(const KnowledgeBase& kb, const std::string& a, const Concept& c);

/// Cross-checks a verdict on `decided` against the bounded model finder with
/// domains up to max(bound, |individuals|). Returns a description of the
/// contradiction if the oracle found a model for an UNSAT verdict, or if a
/// SAT verdict's model fails is_model. Budget exhaustion is not a
/// contradiction.
std::optional<std::string> oracle_contradiction(const Verdict& verdict, int bound,
                                                std::uint64_t node_budget = 2'000'000);

}  // namespace alcnr

#endif  // ALCNR_SERVICES_HPP_
