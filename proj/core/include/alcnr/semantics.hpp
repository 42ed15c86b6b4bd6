// Finite interpretations, concept evaluation, model checking, and a bounded
// brute-force model finder used as a test oracle.

#ifndef ALCNR_SEMANTICS_HPP_
#define ALCNR_SEMANTICS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alcnr/syntax.hpp"

namespace alcnr {

using Element = int;

/// Characteristic vector over the domain of one interpretation.
using ElementSet = std::vector<bool>;

/// A finite interpretation. Elements are dense ids 0..size()-1, each with a
/// printable name. Individuals map injectively onto elements.
class Interpretation {
 public:
  Interpretation() = default;

  Element add_element(std::string name);
  std::size_t size() const noexcept { return elements_.size(); }
  const std::string& element_name(Element e) const { return elements_.at(e); }
  std::optional<Element> find_element(std::string_view name) const;

  void add_to_concept(const std::string& concept_name, Element e);
  void add_role_pair(const std::string& role_name, Element from, Element to);
  // Throws std::invalid_argument if another individual already maps to `e`.
  void map_individual(const std::string& individual, Element e);

  // Registers a name with an empty extension so it shows up in listings.
  void declare_concept(const std::string& concept_name);
  void declare_role(const std::string& role_name);

  bool in_concept(const std::string& concept_name, Element e) const;
  bool has_pair(const std::string& role_name, Element from, Element to) const;
  std::optional<Element> individual(const std::string& name) const;

  const std::map<std::string, std::set<Element>>& concepts() const noexcept { return concepts_; }
  const std::map<std::string, std::set<std::pair<Element, Element>>>& roles() const noexcept {
    return roles_;
  }
  const std::map<std::string, Element>& individuals() const noexcept { return individuals_; }

  /// R-successors of `e`, i.e. elements related by every name of the role.
  std::vector<Element> successors(const Role& role, Element e) const;

 private:
  std::vector<std::string> elements_;
  std::map<std::string, Element> element_ids_;
  std::map<std::string, std::set<Element>> concepts_;
  std::map<std::string, std::set<std::pair<Element, Element>>> roles_;
  std::map<std::string, Element> individuals_;
  std::set<Element> used_by_individuals_;
};

/// Extension of `c` in `interp`. Names absent from the interpretation have
/// empty extensions.
ElementSet eval_concept(const Interpretation& interp, const Concept& c);

bool satisfies(const Interpretation& interp, const Inclusion& inclusion);
bool satisfies(const Interpretation& interp, const Assertion& assertion);

/// True iff every inclusion and assertion of `kb` holds. Throws
/// std::invalid_argument if an individual of `kb` is not mapped.
bool is_model(const Interpretation& interp, const KnowledgeBase& kb);

// ---------------------------------------------------------------------------
// Model text format:
//   domain: e1 e2 ...
//   individual a = e1
//   concept A = {e1,e2}
//   role P = {(e1,e2),(e2,e2)}

std::string format_model(const Interpretation& interp);
/// Throws ParseError on malformed input.
Interpretation parse_model(std::string_view text);

// ---------------------------------------------------------------------------
// Bounded model search.

enum class OracleStatus { kFound, kNotFound, kBudgetExceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::kNotFound;
  std::optional<Interpretation> model;
  // Largest domain size fully explored (or where the model was found).
  int domain_size = 0;
  std::uint64_t nodes = 0;
};

/// Searches all interpretations of up to `max_domain` elements for a model of
/// `kb`. NotFound is exhaustive; BudgetExceeded means `node_budget` search
/// nodes were spent first. Throws std::invalid_argument if `max_domain` is
/// smaller than the number of individuals (UNA) or not positive.
OracleResult find_model_bounded(const KnowledgeBase& kb, int max_domain,
                                std::uint64_t node_budget = 2'000'000);

std::string_view to_string(OracleStatus status);

}  // namespace alcnr

#endif  // ALCNR_SEMANTICS_HPP_
