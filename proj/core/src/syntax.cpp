#include "alcnr/syntax.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <utility>

namespace alcnr {

namespace detail {

struct ConceptNode {
  ConceptKind kind;
  std::string name;
  std::optional<Role> role;
  std::uint64_t number = 0;
  std::vector<Concept> children;
  std::size_t hash = 0;
  std::size_t size = 1;
  bool simple = true;
};

}  // namespace detail

namespace {

std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t combine(std::uint64_t seed, std::uint64_t value) {
  return mix(seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}

}  // namespace

// ---------------------------------------------------------------------------
// Role

Role::Role(std::string name) : Role(std::vector<std::string>{std::move(name)}) {}

Role::Role(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("role needs at least one name");
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
}

bool Role::contains(std::string_view name) const {
  return std::binary_search(names_.begin(), names_.end(), name);
}

// ---------------------------------------------------------------------------
// Concept

class ConceptFactory {
 public:
  static Concept build(detail::ConceptNode node) {
    std::uint64_t h = mix(static_cast<std::uint64_t>(node.kind) + 1);
    h = combine(h, fnv1a(node.name));
    if (node.role) {
      for (const auto& r : node.role->names()) h = combine(h, fnv1a(r));
    }
    h = combine(h, node.number);
    node.size = 1;
    node.simple = true;
    for (const auto& c : node.children) {
      h = combine(h, c.hash());
      node.size += c.size();
      node.simple = node.simple && c.is_simple();
    }
    if (node.kind == ConceptKind::kNot && !node.children.front().is(ConceptKind::kName)) {
      node.simple = false;
    }
    node.hash = static_cast<std::size_t>(h);
    return Concept(std::make_shared<const detail::ConceptNode>(std::move(node)));
  }
};

namespace {

Concept make(detail::ConceptNode node) { return ConceptFactory::build(std::move(node)); }

detail::ConceptNode node_of(ConceptKind kind) {
  detail::ConceptNode n;
  n.kind = kind;
  return n;
}

}  // namespace

Concept Concept::name(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty concept name");
  detail::ConceptNode n = node_of(ConceptKind::kName);
  n.name = std::move(name);
  return make(std::move(n));
}

Concept Concept::top() {
  static const Concept kTop = make(node_of(ConceptKind::kTop));
  return kTop;
}

Concept Concept::bottom() {
  static const Concept kBottom = make(node_of(ConceptKind::kBottom));
  return kBottom;
}

Concept Concept::conj(Concept lhs, Concept rhs) {
  detail::ConceptNode n = node_of(ConceptKind::kAnd);
  n.children = {std::move(lhs), std::move(rhs)};
  return make(std::move(n));
}

Concept Concept::disj(Concept lhs, Concept rhs) {
  detail::ConceptNode n = node_of(ConceptKind::kOr);
  n.children = {std::move(lhs), std::move(rhs)};
  return make(std::move(n));
}

Concept Concept::negate(Concept operand) {
  detail::ConceptNode n = node_of(ConceptKind::kNot);
  n.children = {std::move(operand)};
  return make(std::move(n));
}

Concept Concept::all(Role role, Concept filler) {
  detail::ConceptNode n = node_of(ConceptKind::kAll);
  n.role = std::move(role);
  n.children = {std::move(filler)};
  return make(std::move(n));
}

Concept Concept::some(Role role, Concept filler) {
  detail::ConceptNode n = node_of(ConceptKind::kSome);
  n.role = std::move(role);
  n.children = {std::move(filler)};
  return make(std::move(n));
}

Concept Concept::at_least(std::uint64_t number, Role role) {
  detail::ConceptNode n = node_of(ConceptKind::kAtLeast);
  n.role = std::move(role);
  n.number = number;
  return make(std::move(n));
}

Concept Concept::at_most(std::uint64_t number, Role role) {
  detail::ConceptNode n = node_of(ConceptKind::kAtMost);
  n.role = std::move(role);
  n.number = number;
  return make(std::move(n));
}

ConceptKind Concept::kind() const noexcept { return node_->kind; }

const std::string& Concept::concept_name() const {
  assert(kind() == ConceptKind::kName);
  return node_->name;
}

const Concept& Concept::lhs() const {
  assert(kind() == ConceptKind::kAnd || kind() == ConceptKind::kOr);
  return node_->children[0];
}

const Concept& Concept::rhs() const {
  assert(kind() == ConceptKind::kAnd || kind() == ConceptKind::kOr);
  return node_->children[1];
}

const Concept& Concept::operand() const {
  assert(kind() == ConceptKind::kNot || kind() == ConceptKind::kAll ||
         kind() == ConceptKind::kSome);
  return node_->children[0];
}

const Role& Concept::role() const {
  assert(node_->role.has_value());
  return *node_->role;
}

std::uint64_t Concept::number() const {
  assert(kind() == ConceptKind::kAtLeast || kind() == ConceptKind::kAtMost);
  return node_->number;
}

std::size_t Concept::hash() const noexcept { return node_->hash; }
std::size_t Concept::size() const noexcept { return node_->size; }
bool Concept::is_simple() const noexcept { return node_->simple; }

bool operator==(const Concept& a, const Concept& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Concept& a, const Concept& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = x.name <=> y.name; c != 0) return c;
  if (auto c = x.number <=> y.number; c != 0) return c;
  if (auto c = x.role <=> y.role; c != 0) return c;
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (auto c = x.children[i] <=> y.children[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const Role& role) {
  const auto& names = role.names();
  if (names.size() == 1) return names.front();
  std::string out = "(and";
  for (const auto& n : names) {
    out += ' ';
    out += n;
  }
  out += ')';
  return out;
}

namespace {

void print(const Concept& c, std::string& out) {
  switch (c.kind()) {
    case ConceptKind::kName:
      out += c.concept_name();
      return;
    case ConceptKind::kTop:
      out += "TOP";
      return;
    case ConceptKind::kBottom:
      out += "BOTTOM";
      return;
    case ConceptKind::kAnd:
    case ConceptKind::kOr:
      out += c.is(ConceptKind::kAnd) ? "(and " : "(or ";
      print(c.lhs(), out);
      out += ' ';
      print(c.rhs(), out);
      out += ')';
      return;
    case ConceptKind::kNot:
      out += "(not ";
      print(c.operand(), out);
      out += ')';
      return;
    case ConceptKind::kAll:
    case ConceptKind::kSome:
      out += c.is(ConceptKind::kAll) ? "(all " : "(some ";
      out += to_string(c.role());
      out += ' ';
      print(c.operand(), out);
      out += ')';
      return;
    case ConceptKind::kAtLeast:
    case ConceptKind::kAtMost:
      out += c.is(ConceptKind::kAtLeast) ? "(atleast " : "(atmost ";
      out += std::to_string(c.number());
      out += ' ';
      out += to_string(c.role());
      out += ')';
      return;
  }
}

}  // namespace

std::string to_string(const Concept& c) {
  std::string out;
  print(c, out);
  return out;
}

// ---------------------------------------------------------------------------
// Simple form

namespace {

Concept negated_simple(const Concept& c);

Concept simple(const Concept& c) {
  if (c.is_simple()) return c;
  switch (c.kind()) {
    case ConceptKind::kAnd:
      return Concept::conj(simple(c.lhs()), simple(c.rhs()));
    case ConceptKind::kOr:
      return Concept::disj(simple(c.lhs()), simple(c.rhs()));
    case ConceptKind::kNot:
      return negated_simple(c.operand());
    case ConceptKind::kAll:
      return Concept::all(c.role(), simple(c.operand()));
    case ConceptKind::kSome:
      return Concept::some(c.role(), simple(c.operand()));
    default:
      return c;
  }
}

// Simple form of ¬c.
Concept negated_simple(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::kName:
      return Concept::negate(c);
    case ConceptKind::kTop:
      return Concept::bottom();
    case ConceptKind::kBottom:
      return Concept::top();
    case ConceptKind::kNot:
      return simple(c.operand());
    case ConceptKind::kAnd:
      return Concept::disj(negated_simple(c.lhs()), negated_simple(c.rhs()));
    case ConceptKind::kOr:
      return Concept::conj(negated_simple(c.lhs()), negated_simple(c.rhs()));
    case ConceptKind::kAll:
      return Concept::some(c.role(), negated_simple(c.operand()));
    case ConceptKind::kSome:
      return Concept::all(c.role(), negated_simple(c.operand()));
    case ConceptKind::kAtLeast:
      // (≥ 0 R) ≡ ⊤
      if (c.number() == 0) return Concept::bottom();
      return Concept::at_most(c.number() - 1, c.role());
    case ConceptKind::kAtMost:
      return Concept::at_least(c.number() + 1, c.role());
  }
  return c;
}

}  // namespace

Concept to_simple_form(const Concept& c) { return simple(c); }

void collect_subconcepts(const Concept& c, std::set<Concept>& out) {
  if (!out.insert(c).second) return;
  switch (c.kind()) {
    case ConceptKind::kAnd:
    case ConceptKind::kOr:
      collect_subconcepts(c.lhs(), out);
      collect_subconcepts(c.rhs(), out);
      break;
    case ConceptKind::kNot:
    case ConceptKind::kAll:
    case ConceptKind::kSome:
      collect_subconcepts(c.operand(), out);
      break;
    default:
      break;
  }
}

std::set<Concept> subconcepts(const Concept& c) {
  std::set<Concept> out;
  collect_subconcepts(c, out);
  return out;
}

// ---------------------------------------------------------------------------
// Knowledge bases

void collect_names(const Concept& c, std::set<std::string>* concepts,
                   std::set<std::string>* roles) {
  switch (c.kind()) {
    case ConceptKind::kName:
      if (concepts) concepts->insert(c.concept_name());
      break;
    case ConceptKind::kAnd:
    case ConceptKind::kOr:
      collect_names(c.lhs(), concepts, roles);
      collect_names(c.rhs(), concepts, roles);
      break;
    case ConceptKind::kNot:
      collect_names(c.operand(), concepts, roles);
      break;
    case ConceptKind::kAll:
    case ConceptKind::kSome:
      if (roles) roles->insert(c.role().names().begin(), c.role().names().end());
      collect_names(c.operand(), concepts, roles);
      break;
    case ConceptKind::kAtLeast:
    case ConceptKind::kAtMost:
      if (roles) roles->insert(c.role().names().begin(), c.role().names().end());
      break;
    default:
      break;
  }
}

std::set<std::string> KnowledgeBase::individuals() const {
  std::set<std::string> out;
  for (const auto& a : abox) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
      out.insert(ca->individual);
    } else {
      const auto& ra = std::get<RoleAssertion>(a);
      out.insert(ra.from);
      out.insert(ra.to);
    }
  }
  return out;
}

std::set<std::string> KnowledgeBase::concept_names() const {
  std::set<std::string> out;
  for (const auto& inc : tbox) {
    collect_names(inc.lhs, &out, nullptr);
    collect_names(inc.rhs, &out, nullptr);
  }
  for (const auto& a : abox) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
      collect_names(ca->expr, &out, nullptr);
    }
  }
  return out;
}

std::set<std::string> KnowledgeBase::role_names() const {
  std::set<std::string> out;
  for (const auto& inc : tbox) {
    collect_names(inc.lhs, nullptr, &out);
    collect_names(inc.rhs, nullptr, &out);
  }
  for (const auto& a : abox) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
      collect_names(ca->expr, nullptr, &out);
    } else {
      const auto& names = std::get<RoleAssertion>(a).role.names();
      out.insert(names.begin(), names.end());
    }
  }
  return out;
}

std::string render_kb(const KnowledgeBase& kb) {
  std::string out;
  for (const auto& inc : kb.tbox) {
    out += "(implies " + to_string(inc.lhs) + ' ' + to_string(inc.rhs) + ")\n";
  }
  for (const auto& a : kb.abox) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
      out += "(instance " + ca->individual + ' ' + to_string(ca->expr) + ")\n";
    } else {
      const auto& ra = std::get<RoleAssertion>(a);
      out += "(related " + ra.from + ' ' + ra.to + ' ' + to_string(ra.role) + ")\n";
    }
  }
  return out;
}

}  // namespace alcnr
