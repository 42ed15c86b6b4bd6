#include "alcnr/canonical_model.hpp"

#include <stdexcept>
#include <unordered_map>

#include "alcnr/tableau.hpp"

namespace alcnr {

CanonicalModel extract_model(const ConstraintSystem& s) {
  if (auto clash = detect_clash(s)) {
    throw std::invalid_argument("constraint system contains a clash");
  }
  if (next_rule_instance(s)) throw std::invalid_argument("constraint system is not complete");

  CanonicalModel out;
  Interpretation& interp = out.interpretation;
  for (const auto& o : s.objects()) {
    out.assignment.emplace(o, interp.add_element(o.to_string()));
  }

  const auto& source = s.source();
  if (source) {
    for (const auto& a : source->individuals()) {
      auto it = out.assignment.find(Object::individual(a));
      if (it != out.assignment.end()) interp.map_individual(a, it->second);
    }
    for (const auto& name : source->concept_names()) interp.declare_concept(name);
    for (const auto& name : source->role_names()) interp.declare_role(name);
  } else {
    for (const auto& o : s.objects()) {
      if (o.is_individual() && o.name() != kRootIndividual) {
        interp.map_individual(o.name(), out.assignment.at(o));
      }
    }
  }

  for (const auto& [o, label] : s.labels()) {
    for (const auto& c : label) {
      if (c.is(ConceptKind::kName)) interp.add_to_concept(c.concept_name(), out.assignment.at(o));
    }
  }

  auto add_pairs = [&](const Object& from, const Object& via, const RolePairKind& kind) {
    auto row = s.links().find(via);
    if (row == s.links().end()) return;
    for (const auto& [to, names] : row->second) {
      for (const auto& p : names) {
        interp.add_role_pair(p, out.assignment.at(from), out.assignment.at(to));
        out.pairs.push_back({from, p, to, kind});
      }
    }
  };
  for (const auto& o : s.objects()) {
    if (auto w = s.witness(o)) {
      add_pairs(o, *w, RolePairKind{*w});
    } else {
      add_pairs(o, o, RolePairKind{});
    }
  }
  return out;
}

bool satisfies_system(const Interpretation& interp, const Assignment& alpha,
                      const ConstraintSystem& s) {
  std::unordered_map<Concept, ElementSet, ConceptHash> cache;
  auto extension = [&](const Concept& c) -> const ElementSet& {
    auto it = cache.find(c);
    if (it == cache.end()) it = cache.emplace(c, eval_concept(interp, c)).first;
    return it->second;
  };
  auto element = [&](const Object& o) -> std::optional<Element> {
    auto it = alpha.find(o);
    if (it == alpha.end()) return std::nullopt;
    return it->second;
  };

  for (const auto& [o, label] : s.labels()) {
    auto e = element(o);
    if (!e) return false;
    for (const auto& c : label) {
      if (!extension(c)[*e]) return false;
    }
  }
  for (const auto& [from, row] : s.links()) {
    auto a = element(from);
    if (!a) return false;
    for (const auto& [to, names] : row) {
      auto b = element(to);
      if (!b) return false;
      for (const auto& p : names) {
        if (!interp.has_pair(p, *a, *b)) return false;
      }
    }
  }
  for (const auto& c : s.universals()) {
    const auto& ext = extension(c);
    for (std::size_t e = 0; e < interp.size(); ++e) {
      if (!ext[e]) return false;
    }
  }
  for (const auto& [x, y] : s.distinct_pairs()) {
    auto a = element(x);
    auto b = element(y);
    if (!a || !b || *a == *b) return false;
  }
  return true;
}

}  // namespace alcnr
