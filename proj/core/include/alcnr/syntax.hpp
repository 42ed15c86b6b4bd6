// ALCNR abstract syntax: concepts, roles, knowledge bases.

#ifndef ALCNR_SYNTAX_HPP_
#define ALCNR_SYNTAX_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace alcnr {

/// A role is a conjunction of role names P1 ⊓ ... ⊓ Pk (k >= 1).
///
/// The name set is kept sorted and deduplicated, so structural equality is
/// set equality.
class Role {
 public:
  Role(std::string name);  // NOLINT(google-explicit-constructor)
  explicit Role(std::vector<std::string> names);

  const std::vector<std::string>& names() const noexcept { return names_; }
  bool contains(std::string_view name) const;

  friend bool operator==(const Role&, const Role&) = default;
  friend std::strong_ordering operator<=>(const Role&, const Role&) = default;

 private:
  std::vector<std::string> names_;
};

enum class ConceptKind : std::uint8_t {
  kName,
  kTop,
  kBottom,
  kAnd,
  kOr,
  kNot,
  kAll,
  kSome,
  kAtLeast,
  kAtMost,
};

namespace detail {
struct ConceptNode;
}
class ConceptFactory;

/// Immutable concept expression with structural equality and a total order.
/// Copies share structure.
class Concept {
 public:
  static Concept name(std::string name);
  static Concept top();
  static Concept bottom();
  static Concept conj(Concept lhs, Concept rhs);
  static Concept disj(Concept lhs, Concept rhs);
  static Concept negate(Concept operand);
  static Concept all(Role role, Concept filler);
  static Concept some(Role role, Concept filler);
  static Concept at_least(std::uint64_t n, Role role);
  static Concept at_most(std::uint64_t n, Role role);

  ConceptKind kind() const noexcept;
  // kName only.
  const std::string& concept_name() const;
  // kAnd / kOr.
  const Concept& lhs() const;
  const Concept& rhs() const;
  // kNot operand, or the filler of kAll / kSome.
  const Concept& operand() const;
  // kAll, kSome, kAtLeast, kAtMost.
  const Role& role() const;
  // kAtLeast, kAtMost.
  std::uint64_t number() const;

  std::size_t hash() const noexcept;
  // Number of AST nodes.
  std::size_t size() const noexcept;
  // Every Not node wraps a Name node.
  bool is_simple() const noexcept;

  bool is(ConceptKind k) const noexcept { return kind() == k; }

  friend bool operator==(const Concept& a, const Concept& b) noexcept;
  friend std::strong_ordering operator<=>(const Concept& a,
                                          const Concept& b) noexcept;

 private:
  friend class ConceptFactory;
  explicit Concept(std::shared_ptr<const detail::ConceptNode> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const detail::ConceptNode> node_;
};

struct ConceptHash {
  std::size_t operator()(const Concept& c) const noexcept { return c.hash(); }
};

// Exchange-format rendering, e.g. `(some FRIEND Italian)`.
std::string to_string(const Role& role);
std::string to_string(const Concept& c);

/// Negation normal form: complements only occur directly above names.
Concept to_simple_form(const Concept& c);

/// All sub-expressions of `concept`, including itself.
std::set<Concept> subconcepts(const Concept& c);
void collect_subconcepts(const Concept& c, std::set<Concept>& out);

// C ⊑ D
struct Inclusion {
  Concept lhs;
  Concept rhs;

  friend bool operator==(const Inclusion&, const Inclusion&) = default;
  friend std::strong_ordering operator<=>(const Inclusion&,
                                          const Inclusion&) = default;
};

// C(a)
struct ConceptAssertion {
  std::string individual;
  Concept expr;

  friend bool operator==(const ConceptAssertion&,
                         const ConceptAssertion&) = default;
  friend std::strong_ordering operator<=>(const ConceptAssertion&,
                                          const ConceptAssertion&) = default;
};

// R(a, b)
struct RoleAssertion {
  std::string from;
  std::string to;
  Role role;

  friend bool operator==(const RoleAssertion&, const RoleAssertion&) = default;
  friend std::strong_ordering operator<=>(const RoleAssertion&,
                                          const RoleAssertion&) = default;
};

using Assertion = std::variant<ConceptAssertion, RoleAssertion>;

struct KnowledgeBase {
  std::set<Inclusion> tbox;
  std::set<Assertion> abox;

  std::set<std::string> individuals() const;
  std::set<std::string> concept_names() const;
  std::set<std::string> role_names() const;
  bool empty() const noexcept { return tbox.empty() && abox.empty(); }

  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;
};

void collect_names(const Concept& c, std::set<std::string>* concepts,
                   std::set<std::string>* roles);

// ---------------------------------------------------------------------------
// Exchange format.

/// Individual name reserved for the reasoning services; rejected in input.
inline constexpr std::string_view kReservedIndividual = "__fresh";

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

struct ParseOptions {
  std::uint64_t number_cap = std::uint64_t{1} << 20;
};

KnowledgeBase parse_kb(std::string_view text, const ParseOptions& options = {});
Concept parse_concept(std::string_view text, const ParseOptions& options = {});
Role parse_role(std::string_view text);

/// Deterministic rendering: inclusions, then concept assertions, then role
/// assertions, each in sorted order. One statement per line.
std::string render_kb(const KnowledgeBase& kb);

bool is_valid_name(std::string_view token) noexcept;

}  // namespace alcnr

#endif  // ALCNR_SYNTAX_HPP_
