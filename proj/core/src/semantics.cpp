#include "alcnr/semantics.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace alcnr {

Element Interpretation::add_element(std::string name) {
  if (element_ids_.count(name) != 0) {
    throw std::invalid_argument("duplicate element '" + name + "'");
  }
  const auto id = static_cast<Element>(elements_.size());
  element_ids_.emplace(name, id);
  elements_.push_back(std::move(name));
  return id;
}

std::optional<Element> Interpretation::find_element(std::string_view name) const {
  auto it = element_ids_.find(std::string(name));
  if (it == element_ids_.end()) return std::nullopt;
  return it->second;
}

void Interpretation::add_to_concept(const std::string& concept_name, Element e) {
  if (e < 0 || static_cast<std::size_t>(e) >= size()) throw std::out_of_range("element id");
  concepts_[concept_name].insert(e);
}

void Interpretation::add_role_pair(const std::string& role_name, Element from, Element to) {
  if (from < 0 || to < 0 || static_cast<std::size_t>(std::max(from, to)) >= size()) {
    throw std::out_of_range("element id");
  }
  roles_[role_name].insert({from, to});
}

void Interpretation::map_individual(const std::string& individual, Element e) {
  if (e < 0 || static_cast<std::size_t>(e) >= size()) throw std::out_of_range("element id");
  if (auto it = individuals_.find(individual); it != individuals_.end()) {
    if (it->second == e) return;
    throw std::invalid_argument("individual '" + individual + "' mapped twice");
  }
  if (!used_by_individuals_.insert(e).second) {
    throw std::invalid_argument("unique name assumption violated at element '" +
                                element_name(e) + "'");
  }
  individuals_.emplace(individual, e);
}

void Interpretation::declare_concept(const std::string& concept_name) {
  concepts_[concept_name];
}

void Interpretation::declare_role(const std::string& role_name) { roles_[role_name]; }

bool Interpretation::in_concept(const std::string& concept_name, Element e) const {
  auto it = concepts_.find(concept_name);
  return it != concepts_.end() && it->second.count(e) != 0;
}

bool Interpretation::has_pair(const std::string& role_name, Element from, Element to) const {
  auto it = roles_.find(role_name);
  return it != roles_.end() && it->second.count({from, to}) != 0;
}

std::optional<Element> Interpretation::individual(const std::string& name) const {
  auto it = individuals_.find(name);
  if (it == individuals_.end()) return std::nullopt;
  return it->second;
}

std::vector<Element> Interpretation::successors(const Role& role, Element e) const {
  std::vector<Element> out;
  const auto& names = role.names();
  auto first = roles_.find(names.front());
  if (first == roles_.end()) return out;
  auto lo = first->second.lower_bound({e, std::numeric_limits<Element>::min()});
  for (auto it = lo; it != first->second.end() && it->first == e; ++it) {
    bool all = true;
    for (std::size_t i = 1; i < names.size() && all; ++i) {
      all = has_pair(names[i], e, it->second);
    }
    if (all) out.push_back(it->second);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

ElementSet eval_concept(const Interpretation& interp, const Concept& c) {
  const std::size_t n = interp.size();
  ElementSet out(n, false);
  switch (c.kind()) {
    case ConceptKind::kName: {
      auto it = interp.concepts().find(c.concept_name());
      if (it != interp.concepts().end()) {
        for (Element e : it->second) out[e] = true;
      }
      break;
    }
    case ConceptKind::kTop:
      out.assign(n, true);
      break;
    case ConceptKind::kBottom:
      break;
    case ConceptKind::kAnd:
    case ConceptKind::kOr: {
      ElementSet l = eval_concept(interp, c.lhs());
      ElementSet r = eval_concept(interp, c.rhs());
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = c.is(ConceptKind::kAnd) ? (l[i] && r[i]) : (l[i] || r[i]);
      }
      break;
    }
    case ConceptKind::kNot: {
      ElementSet inner = eval_concept(interp, c.operand());
      for (std::size_t i = 0; i < n; ++i) out[i] = !inner[i];
      break;
    }
    case ConceptKind::kAll:
    case ConceptKind::kSome: {
      ElementSet filler = eval_concept(interp, c.operand());
      const bool universal = c.is(ConceptKind::kAll);
      for (std::size_t i = 0; i < n; ++i) {
        bool value = universal;
        for (Element d : interp.successors(c.role(), static_cast<Element>(i))) {
          if (universal && !filler[d]) {
            value = false;
            break;
          }
          if (!universal && filler[d]) {
            value = true;
            break;
          }
        }
        out[i] = value;
      }
      break;
    }
    case ConceptKind::kAtLeast:
    case ConceptKind::kAtMost:
      for (std::size_t i = 0; i < n; ++i) {
        const auto count = interp.successors(c.role(), static_cast<Element>(i)).size();
        out[i] = c.is(ConceptKind::kAtLeast) ? count >= c.number() : count <= c.number();
      }
      break;
  }
  return out;
}

bool satisfies(const Interpretation& interp, const Inclusion& inclusion) {
  ElementSet lhs = eval_concept(interp, inclusion.lhs);
  ElementSet rhs = eval_concept(interp, inclusion.rhs);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] && !rhs[i]) return false;
  }
  return true;
}

namespace {

Element require_individual(const Interpretation& interp, const std::string& name) {
  auto e = interp.individual(name);
  if (!e) throw std::invalid_argument("individual '" + name + "' is not mapped");
  return *e;
}

}  // namespace

bool satisfies(const Interpretation& interp, const Assertion& assertion) {
  if (const auto* ca = std::get_if<ConceptAssertion>(&assertion)) {
    Element a = require_individual(interp, ca->individual);
    return eval_concept(interp, ca->expr)[a];
  }
  const auto& ra = std::get<RoleAssertion>(assertion);
  Element a = require_individual(interp, ra.from);
  Element b = require_individual(interp, ra.to);
  for (const auto& p : ra.role.names()) {
    if (!interp.has_pair(p, a, b)) return false;
  }
  return true;
}

bool is_model(const Interpretation& interp, const KnowledgeBase& kb) {
  for (const auto& name : kb.individuals()) require_individual(interp, name);
  if (interp.size() == 0) return false;
  for (const auto& inc : kb.tbox) {
    if (!satisfies(interp, inc)) return false;
  }
  for (const auto& a : kb.abox) {
    if (!satisfies(interp, a)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Model text format

std::string format_model(const Interpretation& interp) {
  std::ostringstream out;
  out << "domain:";
  for (std::size_t i = 0; i < interp.size(); ++i) out << ' ' << interp.element_name(static_cast<Element>(i));
  out << '\n';
  for (const auto& [name, e] : interp.individuals()) {
    out << "individual " << name << " = " << interp.element_name(e) << '\n';
  }
  for (const auto& [name, ext] : interp.concepts()) {
    out << "concept " << name << " = {";
    bool first = true;
    for (Element e : ext) {
      if (!first) out << ',';
      first = false;
      out << interp.element_name(e);
    }
    out << "}\n";
  }
  for (const auto& [name, ext] : interp.roles()) {
    out << "role " << name << " = {";
    bool first = true;
    for (const auto& [a, b] : ext) {
      if (!first) out << ',';
      first = false;
      out << '(' << interp.element_name(a) << ',' << interp.element_name(b) << ')';
    }
    out << "}\n";
  }
  return out.str();
}

namespace {

class ModelReader {
 public:
  ModelReader(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  void skip_space() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }
  std::string token() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < line_.size() && is_valid_name(line_.substr(pos_, 1))) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(line_.substr(start, pos_ - start));
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= line_.size() || line_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < line_.size() && line_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_no_, pos_ + 1);
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

Interpretation parse_model(std::string_view text) {
  Interpretation interp;
  bool have_domain = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    ModelReader r(line, line_no);
    if (r.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    std::string keyword = r.token();
    auto element = [&](const std::string& name) {
      auto e = interp.find_element(name);
      if (!e) r.fail("unknown element '" + name + "'");
      return *e;
    };
    if (keyword == "domain") {
      if (have_domain) r.fail("duplicate domain line");
      r.expect(':');
      while (!r.at_end()) interp.add_element(r.token());
      have_domain = true;
      continue;
    }
    if (!have_domain) r.fail("domain line must come first");
    std::string name = r.token();
    r.expect('=');
    if (keyword == "individual") {
      interp.map_individual(name, element(r.token()));
    } else if (keyword == "concept") {
      interp.declare_concept(name);
      r.expect('{');
      if (!r.accept('}')) {
        do {
          interp.add_to_concept(name, element(r.token()));
        } while (r.accept(','));
        r.expect('}');
      }
    } else if (keyword == "role") {
      interp.declare_role(name);
      r.expect('{');
      if (!r.accept('}')) {
        do {
          r.expect('(');
          Element a = element(r.token());
          r.expect(',');
          Element b = element(r.token());
          r.expect(')');
          interp.add_role_pair(name, a, b);
        } while (r.accept(','));
        r.expect('}');
      }
    } else {
      r.fail("unknown line kind '" + keyword + "'");
    }
    if (!r.at_end()) r.fail("trailing input");
  }
  if (!have_domain) throw ParseError("missing domain line", 1, 1);
  if (interp.size() == 0) throw ParseError("domain must be nonempty", 1, 1);
  return interp;
}

std::string_view to_string(OracleStatus status) {
  switch (status) {
    case OracleStatus::kFound:
      return "found";
    case OracleStatus::kNotFound:
      return "not-found";
    case OracleStatus::kBudgetExceeded:
      return "budget-exceeded";
  }
  return "?";
}

}  // namespace alcnr
