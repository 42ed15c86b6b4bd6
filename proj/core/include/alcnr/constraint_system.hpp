// Constraint systems: the working state of the tableau.

#ifndef ALCNR_CONSTRAINT_SYSTEM_HPP_
#define ALCNR_CONSTRAINT_SYSTEM_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "alcnr/syntax.hpp"

namespace alcnr {

/// Individual standing in for the root object when the ABox is empty.
inline constexpr std::string_view kRootIndividual = "__fresh";

/// An individual or a variable. Individuals order before variables;
/// variables order by creation index, which realizes x ≺ y.
class Object {
 public:
  static Object individual(std::string name);
  static Object variable(std::uint32_t index);

  bool is_variable() const noexcept { return variable_; }
  bool is_individual() const noexcept { return !variable_; }
  const std::string& name() const noexcept { return name_; }
  std::uint32_t index() const noexcept { return index_; }

  // Individual name or `_v<index>`.
  std::string to_string() const;

  friend bool operator==(const Object&, const Object&) = default;
  friend std::strong_ordering operator<=>(const Object&, const Object&) = default;

 private:
  Object(bool variable, std::string name, std::uint32_t index)
      : variable_(variable), name_(std::move(name)), index_(index) {}

  bool variable_ = false;
  std::string name_;
  std::uint32_t index_ = 0;
};

struct SystemMetrics {
  // Distinct concepts in Member/Universal constraints, sub-expressions included.
  std::size_t n_s = 0;
  std::size_t variable_count = 0;
  std::size_t non_blocked_count = 0;
};

/// A finite set of constraints s:C, sPt, ∀x.x:C and s≠t.
///
/// Concepts in Member and Universal constraints must be simple. Distinct
/// constraints are symmetric. Indexed views (labels by object, links by
/// source) are maintained on every update.
class ConstraintSystem {
 public:
  ConstraintSystem() = default;

  bool add_member(const Object& s, const Concept& c);
  bool add_link(const Object& s, const std::string& role_name, const Object& t);
  bool add_universal(const Concept& c);
  bool add_distinct(const Object& s, const Object& t);

  /// Fresh variable, ≺-greater than every variable created so far.
  Object fresh_variable();

  bool has_member(const Object& s, const Concept& c) const;
  bool has_link(const Object& s, const std::string& role_name, const Object& t) const;

  /// σ(S, s): the concepts C with s:C in S.
  const std::set<Concept>& sigma(const Object& s) const;

  /// {t | sPt in S for every name P of `role`}, in object order.
  std::vector<Object> r_successors(const Object& s, const Role& role) const;
  /// Objects t with sPt for some P.
  std::vector<Object> direct_successors(const Object& s) const;

  bool separated(const Object& s, const Object& t) const;
  bool s_equivalent(const Object& x, const Object& y) const;

  /// ≺-least variable w ≺ x with σ(w) = σ(x).
  std::optional<Object> witness(const Object& x) const;
  bool is_blocked(const Object& x) const { return x.is_variable() && witness(x).has_value(); }

  /// S[y/t]. Throws std::invalid_argument if y is not a variable or y == t.
  ConstraintSystem substitute(const Object& y, const Object& t) const;
  void substitute_in_place(const Object& y, const Object& t);

  SystemMetrics measure() const;

  const std::set<Object>& objects() const noexcept { return objects_; }
  std::vector<Object> variables() const;
  bool contains(const Object& o) const { return objects_.count(o) != 0; }
  const std::set<Concept>& universals() const noexcept { return universals_; }
  const std::map<Object, std::set<Concept>>& labels() const noexcept { return labels_; }
  /// source -> target -> role names
  const std::map<Object, std::map<Object, std::set<std::string>>>& links() const noexcept {
    return links_;
  }
  const std::set<std::pair<Object, Object>>& distinct_pairs() const noexcept { return distinct_; }

  std::size_t constraint_count() const noexcept { return count_; }
  std::uint32_t next_variable_index() const noexcept { return next_var_; }

  void set_source(std::shared_ptr<const KnowledgeBase> kb) { source_ = std::move(kb); }
  const std::shared_ptr<const KnowledgeBase>& source() const noexcept { return source_; }

  /// One constraint per line, sorted: `s : C`, `s P t`, `forall : C`, `s != t`.
  std::string dump() const;

  friend bool operator==(const ConstraintSystem& a, const ConstraintSystem& b) {
    return a.labels_ == b.labels_ && a.links_ == b.links_ && a.universals_ == b.universals_ &&
           a.distinct_ == b.distinct_;
  }

 private:
  void touch(const Object& o) { objects_.insert(o); }
  std::uint64_t fingerprint(const Object& o) const;

  std::map<Object, std::set<Concept>> labels_;
  std::map<Object, std::map<Object, std::set<std::string>>> links_;
  std::set<Concept> universals_;
  std::set<std::pair<Object, Object>> distinct_;
  std::set<Object> objects_;
  // Order-independent hash of σ(S, o); kept in step with labels_.
  std::map<Object, std::uint64_t> fingerprints_;
  std::size_t count_ = 0;
  std::uint32_t next_var_ = 0;
  std::shared_ptr<const KnowledgeBase> source_;
};

/// S_Σ: every C ⊑ D becomes ∀x.x:simple(¬C ⊔ D), every C(a) becomes
/// a:simple(C), every R(a,b) becomes aP1b ... aPkb, and all ABox individuals
/// are pairwise separated. An empty ABox contributes a root individual
/// asserted to ⊤ so that the system has an object to expand.
ConstraintSystem translate_kb(const KnowledgeBase& kb);

std::string to_string(const Object& o);

}  // namespace alcnr

#endif  // ALCNR_CONSTRAINT_SYSTEM_HPP_
