#include "alcnr/encodings.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace alcnr {

Concept c_of_tbox(const std::set<Inclusion>& tbox) {
  std::optional<Concept> out;
  for (const auto& inc : tbox) {
    Concept conjunct = Concept::disj(Concept::negate(inc.lhs), inc.rhs);
    out = out ? Concept::conj(*out, conjunct) : conjunct;
  }
  return out ? *out : Concept::top();
}

std::string fresh_concept_name(const KnowledgeBase& kb) {
  std::set<std::string> used = kb.concept_names();
  for (const auto& r : kb.role_names()) used.insert(r);
  for (const auto& i : kb.individuals()) used.insert(i);
  for (std::size_t k = 0;; ++k) {
    std::string name = "__aux" + std::to_string(k);
    if (!used.count(name)) return name;
  }
}

namespace {

std::string fresh_individual(const KnowledgeBase& kb, const std::string& taken) {
  std::set<std::string> used = kb.concept_names();
  for (const auto& r : kb.role_names()) used.insert(r);
  used.insert(taken);
  for (std::size_t k = 0;; ++k) {
    std::string name = "__ind" + std::to_string(k);
    if (!used.count(name)) return name;
  }
}

}  // namespace

KnowledgeBase inclusions_to_introduction(const KnowledgeBase& kb) {
  const std::string aux = fresh_concept_name(kb);
  const Concept a = Concept::name(aux);

  Concept rhs = c_of_tbox(kb.tbox);
  for (const auto& p : kb.role_names()) rhs = Concept::conj(rhs, Concept::all(Role(p), a));

  KnowledgeBase out;
  out.tbox.insert(Inclusion{a, rhs});
  out.abox = kb.abox;
  auto individuals = kb.individuals();
  if (individuals.empty()) individuals.insert(fresh_individual(kb, aux));
  for (const auto& b : individuals) out.abox.insert(ConceptAssertion{b, a});
  return out;
}

std::pair<Inclusion, Inclusion> domain_range_inclusions(const Role& r, const Concept& domain,
                                                        const Concept& range) {
  return {Inclusion{Concept::some(r, Concept::top()), domain},
          Inclusion{Concept::top(), Concept::all(r, range)}};
}

Role subrole(const std::string& sub, const Role& super) {
  if (!is_valid_name(sub)) throw std::invalid_argument("invalid role name: " + sub);
  if (super.contains(sub)) {
    throw std::invalid_argument("role name " + sub + " already occurs in the super role");
  }
  std::vector<std::string> names = super.names();
  names.push_back(sub);
  return Role(names);
}

}  // namespace alcnr
