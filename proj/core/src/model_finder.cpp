// Bounded model search over explicit interpretations.
//
// Concept-name memberships and role pairs are boolean unknowns assigned in a
// fixed order. After each assignment every axiom is evaluated under Kleene
// three-valued semantics; a definitely false axiom prunes the subtree. Open
// bits are then probed: a bit whose one value is immediately refuted is set
// to the other. This shares no code with the tableau engine.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "alcnr/semantics.hpp"

namespace alcnr {

namespace {

// Ordered so that min/max give Kleene conjunction/disjunction.
enum Tri : std::uint8_t { kFalse = 0, kUnknown = 1, kTrue = 2 };

Tri tri_not(Tri v) { return static_cast<Tri>(2 - v); }

struct BudgetExceeded {};

class Search {
 public:
  Search(const KnowledgeBase& kb, std::uint64_t budget) : budget_(budget) {
    const auto cn = kb.concept_names();
    const auto rn = kb.role_names();
    concept_names_.assign(cn.begin(), cn.end());
    role_names_.assign(rn.begin(), rn.end());
    const auto inds = kb.individuals();
    individuals_.assign(inds.begin(), inds.end());
    for (const auto& inc : kb.tbox) {
      axioms_.push_back(to_simple_form(Concept::disj(Concept::negate(inc.lhs), inc.rhs)));
    }
    for (const auto& a : kb.abox) {
      if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
        assertions_.push_back({index_of(individuals_, ca->individual), to_simple_form(ca->expr)});
      } else {
        const auto& ra = std::get<RoleAssertion>(a);
        for (const auto& p : ra.role.names()) {
          forced_pairs_.push_back({index_of(role_names_, p), index_of(individuals_, ra.from),
                                   index_of(individuals_, ra.to)});
        }
      }
    }
  }

  std::uint64_t nodes() const { return nodes_; }

  // Returns true and fills `model` if a model with `n` elements exists.
  bool run(int n, Interpretation& model) {
    n_ = n;
    const std::size_t concept_bits = static_cast<std::size_t>(n) * concept_names_.size();
    const std::size_t role_bits = static_cast<std::size_t>(n) * n * role_names_.size();
    role_offset_ = concept_bits;
    values_.assign(concept_bits + role_bits, kUnknown);
    for (const auto& f : forced_pairs_) values_[role_index(f.role, f.from, f.to)] = kTrue;
    order_.clear();
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] == kUnknown) order_.push_back(i);
    }
    trail_.clear();
    if (!consistent() || !propagate()) return false;
    if (!assign(0)) return false;
    model = build();
    return true;
  }

 private:
  struct Forced {
    std::size_t role;
    std::size_t from;
    std::size_t to;
  };

  static std::size_t index_of(const std::vector<std::string>& v, const std::string& s) {
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), s) - v.begin());
  }

  std::size_t concept_index(std::size_t c, std::size_t e) const {
    return e * concept_names_.size() + c;
  }
  std::size_t role_index(std::size_t p, std::size_t a, std::size_t b) const {
    return role_offset_ + (p * n_ + a) * n_ + b;
  }

  bool assign(std::size_t depth) {
    while (depth < order_.size() && values_[order_[depth]] != kUnknown) ++depth;
    if (depth == order_.size()) return true;
    const std::size_t var = order_[depth];
    for (Tri v : {kFalse, kTrue}) {
      if (++nodes_ > budget_) throw BudgetExceeded{};
      const std::size_t mark = trail_.size();
      values_[var] = v;
      if (symmetric_ok(var) && consistent() && propagate() && assign(depth + 1)) return true;
      undo(mark);
    }
    values_[var] = kUnknown;
    return false;
  }

  // Failed-literal probing to a fixpoint. False iff some open bit is refuted
  // both ways.
  bool propagate() {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t var : order_) {
        if (values_[var] != kUnknown) continue;
        values_[var] = kFalse;
        const bool false_ok = consistent();
        values_[var] = kTrue;
        const bool true_ok = consistent();
        values_[var] = kUnknown;
        if (!false_ok && !true_ok) return false;
        if (false_ok && true_ok) continue;
        values_[var] = false_ok ? kFalse : kTrue;
        trail_.push_back(var);
        changed = true;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      values_[trail_.back()] = kUnknown;
      trail_.pop_back();
    }
  }

  // Anonymous elements are interchangeable; require their concept signatures
  // to be non-decreasing once an element's signature is complete.
  bool symmetric_ok(std::size_t var) const {
    const std::size_t nc = concept_names_.size();
    if (nc == 0 || var >= role_offset_) return true;
    const std::size_t e = var / nc;
    if (var % nc != nc - 1) return true;
    if (e == 0 || e - 1 < individuals_.size()) return true;
    for (std::size_t c = 0; c < nc; ++c) {
      Tri prev = values_[concept_index(c, e - 1)];
      Tri cur = values_[concept_index(c, e)];
      if (prev != cur) return prev < cur;
    }
    return true;
  }

  bool consistent() const {
    for (const auto& axiom : axioms_) {
      for (Tri v : eval(axiom)) {
        if (v == kFalse) return false;
      }
    }
    for (const auto& [ind, c] : assertions_) {
      if (eval(c)[ind] == kFalse) return false;
    }
    return true;
  }

  Tri pair(const Role& role, std::size_t a, std::size_t b) const {
    Tri out = kTrue;
    for (const auto& p : role.names()) {
      out = std::min(out, values_[role_index(index_of(role_names_, p), a, b)]);
    }
    return out;
  }

  std::vector<Tri> eval(const Concept& c) const {
    const std::size_t n = n_;
    std::vector<Tri> out(n, kFalse);
    switch (c.kind()) {
      case ConceptKind::kName: {
        const std::size_t idx = index_of(concept_names_, c.concept_name());
        for (std::size_t e = 0; e < n; ++e) out[e] = values_[concept_index(idx, e)];
        break;
      }
      case ConceptKind::kTop:
        out.assign(n, kTrue);
        break;
      case ConceptKind::kBottom:
        break;
      case ConceptKind::kNot: {
        auto inner = eval(c.operand());
        for (std::size_t e = 0; e < n; ++e) out[e] = tri_not(inner[e]);
        break;
      }
      case ConceptKind::kAnd:
      case ConceptKind::kOr: {
        auto l = eval(c.lhs());
        auto r = eval(c.rhs());
        for (std::size_t e = 0; e < n; ++e) {
          out[e] = c.is(ConceptKind::kAnd) ? std::min(l[e], r[e]) : std::max(l[e], r[e]);
        }
        break;
      }
      case ConceptKind::kAll:
      case ConceptKind::kSome: {
        auto filler = eval(c.operand());
        const bool universal = c.is(ConceptKind::kAll);
        for (std::size_t d = 0; d < n; ++d) {
          Tri acc = universal ? kTrue : kFalse;
          for (std::size_t e = 0; e < n; ++e) {
            Tri link = pair(c.role(), d, e);
            if (universal) {
              acc = std::min(acc, std::max(tri_not(link), filler[e]));
            } else {
              acc = std::max(acc, std::min(link, filler[e]));
            }
          }
          out[d] = acc;
        }
        break;
      }
      case ConceptKind::kAtLeast:
      case ConceptKind::kAtMost:
        for (std::size_t d = 0; d < n; ++d) {
          std::uint64_t definite = 0;
          std::uint64_t possible = 0;
          for (std::size_t e = 0; e < n; ++e) {
            Tri link = pair(c.role(), d, e);
            if (link == kTrue) ++definite;
            if (link != kFalse) ++possible;
          }
          const std::uint64_t k = c.number();
          if (c.is(ConceptKind::kAtLeast)) {
            out[d] = definite >= k ? kTrue : (possible < k ? kFalse : kUnknown);
          } else {
            out[d] = possible <= k ? kTrue : (definite > k ? kFalse : kUnknown);
          }
        }
        break;
    }
    return out;
  }

  Interpretation build() const {
    Interpretation model;
    for (std::size_t e = 0; e < n_; ++e) {
      if (e < individuals_.size()) {
        Element id = model.add_element(individuals_[e]);
        model.map_individual(individuals_[e], id);
      } else {
        model.add_element("_e" + std::to_string(e - individuals_.size()));
      }
    }
    for (std::size_t c = 0; c < concept_names_.size(); ++c) {
      model.declare_concept(concept_names_[c]);
      for (std::size_t e = 0; e < n_; ++e) {
        if (values_[concept_index(c, e)] == kTrue) {
          model.add_to_concept(concept_names_[c], static_cast<Element>(e));
        }
      }
    }
    for (std::size_t p = 0; p < role_names_.size(); ++p) {
      model.declare_role(role_names_[p]);
      for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < n_; ++b) {
          if (values_[role_index(p, a, b)] == kTrue) {
            model.add_role_pair(role_names_[p], static_cast<Element>(a), static_cast<Element>(b));
          }
        }
      }
    }
    return model;
  }

  std::vector<std::string> concept_names_;
  std::vector<std::string> role_names_;
  std::vector<std::string> individuals_;
  std::vector<Concept> axioms_;
  std::vector<std::pair<std::size_t, Concept>> assertions_;
  std::vector<Forced> forced_pairs_;

  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t n_ = 0;
  std::size_t role_offset_ = 0;
  std::vector<Tri> values_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> trail_;
};

}  // namespace

OracleResult find_model_bounded(const KnowledgeBase& kb, int max_domain,
                                std::uint64_t node_budget) {
  const int individuals = static_cast<int>(kb.individuals().size());
  if (max_domain < 1) throw std::invalid_argument("max_domain must be positive");
  if (max_domain < individuals) {
    throw std::invalid_argument("max_domain is smaller than the number of individuals");
  }
  OracleResult result;
  Search search(kb, node_budget);
  try {
    for (int n = std::max(1, individuals); n <= max_domain; ++n) {
      Interpretation model;
      if (search.run(n, model)) {
        if (!is_model(model, kb)) throw std::logic_error("model finder produced a non-model");
        result.status = OracleStatus::kFound;
        result.model = std::move(model);
        result.domain_size = n;
        result.nodes = search.nodes();
        return result;
      }
      result.domain_size = n;
    }
    result.status = OracleStatus::kNotFound;
  } catch (const BudgetExceeded&) {
    result.status = OracleStatus::kBudgetExceeded;
  }
  result.nodes = search.nodes();
  return result;
}

}  // namespace alcnr
