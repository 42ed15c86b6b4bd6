#include "alcnr/services.hpp"

#include <algorithm>
#include <stdexcept>

namespace alcnr {

std::string_view to_string(Satisfiability s) {
  switch (s) {
    case Satisfiability::kSat:
      return "SAT";
    case Satisfiability::kUnsat:
      return "UNSAT";
    case Satisfiability::kUnknown:
      return "UNKNOWN";
  }
  return "?";
}

std::string_view to_string(Truth t) {
  switch (t) {
    case Truth::kTrue:
      return "true";
    case Truth::kFalse:
      return "false";
    case Truth::kUnknown:
      return "unknown";
  }
  return "?";
}

Verdict kb_satisfiable(const KnowledgeBase& kb, const ServiceOptions& options) {
  Verdict v;
  v.decided = kb;
  CompletionResult r = complete(translate_kb(kb), options.search);
  v.trace = std::move(r.trace);
  v.stats = r.stats;
  switch (r.status) {
    case CompletionStatus::kUnsatisfiable:
      v.status = Satisfiability::kUnsat;
      break;
    case CompletionStatus::kResourceExceeded:
      v.status = Satisfiability::kUnknown;
      v.guard = std::move(r.guard);
      break;
    case CompletionStatus::kSatisfiable: {
      v.status = Satisfiability::kSat;
      CanonicalModel m = extract_model(*r.completion);
      if (options.self_check) {
        if (!satisfies_system(m.interpretation, m.assignment, *r.completion)) {
          throw std::logic_error("canonical model does not satisfy the completion");
        }
        if (!is_model(m.interpretation, kb)) {
          throw std::logic_error("canonical model is not a model of the knowledge base");
        }
      }
      v.completion = std::move(r.completion);
      v.model = std::move(m);
      break;
    }
  }
  return v;
}

KnowledgeBase with_assertion(const KnowledgeBase& kb, const std::string& a, const Concept& c) {
  KnowledgeBase out = kb;
  out.abox.insert(ConceptAssertion{a, c});
  return out;
}

KnowledgeBase concept_query(const KnowledgeBase& kb, const Concept& c) {
  return with_assertion(kb, std::string(kReservedIndividual), c);
}

KnowledgeBase subsumption_query(const KnowledgeBase& kb, const Concept& c, const Concept& d) {
  return concept_query(kb, Concept::conj(c, Concept::negate(d)));
}

KnowledgeBase instance_query(const KnowledgeBase& kb, const std::string& a, const Concept& c) {
  if (!kb.individuals().count(a)) {
    throw std::invalid_argument("unknown individual: " + a);
  }
  return with_assertion(kb, a, Concept::negate(c));
}

Verdict concept_satisfiable(const KnowledgeBase& kb, const Concept& c,
                            const ServiceOptions& options) {
  return kb_satisfiable(concept_query(kb, c), options);
}

namespace {

Answer entailment(Verdict v) {
  Answer a;
  switch (v.status) {
    case Satisfiability::kSat:
      a.value = Truth::kFalse;
      break;
    case Satisfiability::kUnsat:
      a.value = Truth::kTrue;
      break;
    case Satisfiability::kUnknown:
      a.value = Truth::kUnknown;
      break;
  }
  a.verdict = std::move(v);
  return a;
}

}  // namespace

Answer subsumed_by(const KnowledgeBase& kb, const Concept& c, const Concept& d,
                   const ServiceOptions& options) {
  return entailment(kb_satisfiable(subsumption_query(kb, c, d), options));
}

Answer instance_of(const KnowledgeBase& kb, const std::string& a, const Concept& c,
                   const ServiceOptions& options) {
  return entailment(kb_satisfiable(instance_query(kb, a, c), options));
}

InstancesResult instances(const KnowledgeBase& kb, const Concept& c,
                          const ServiceOptions& options) {
  InstancesResult out;
  for (const auto& a : kb.individuals()) {
    switch (instance_of(kb, a, c, options).value) {
      case Truth::kTrue:
        out.members.push_back(a);
        break;
      case Truth::kUnknown:
        out.unknown.push_back(a);
        break;
      case Truth::kFalse:
        break;
    }
  }
  return out;
}

std::optional<std::string> oracle_contradiction(const Verdict& verdict, int bound,
                                                std::uint64_t node_budget) {
  if (verdict.status == Satisfiability::kSat && verdict.model &&
      !is_model(verdict.model->interpretation, verdict.decided)) {
    return "engine model is not a model of the knowledge base";
  }
  if (verdict.status == Satisfiability::kSat) return std::nullopt;
  const int individuals = static_cast<int>(verdict.decided.individuals().size());
  const int domain = std::max({bound, individuals, 1});
  OracleResult r = find_model_bounded(verdict.decided, domain, node_budget);
  if (r.status == OracleStatus::kFound && verdict.status == Satisfiability::kUnsat) {
    return "engine says UNSAT but a model with " + std::to_string(r.domain_size) +
           " elements exists:\n" + format_model(*r.model);
  }
  return std::nullopt;
}

}  // namespace alcnr
