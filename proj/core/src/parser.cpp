// S-expression reader for the knowledge-base exchange format.

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alcnr/syntax.hpp"

namespace alcnr {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      detail_(message),
      line_(line),
      column_(column) {}

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '\'';
}

}  // namespace

bool is_valid_name(std::string_view token) noexcept {
  if (token.empty()) return false;
  for (char c : token) {
    if (!is_name_char(c)) return false;
  }
  return true;
}

namespace {

struct SExpr {
  bool is_atom = false;
  std::string atom;
  std::vector<SExpr> items;
  std::size_t line = 0;
  std::size_t column = 0;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  // Reads every top-level form.
  std::vector<SExpr> read_all() {
    std::vector<SExpr> forms;
    for (;;) {
      skip_blank();
      if (pos_ >= text_.size()) break;
      forms.push_back(read());
    }
    return forms;
  }

  SExpr read_one() {
    skip_blank();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", line_, column_);
    SExpr e = read();
    skip_blank();
    if (pos_ < text_.size()) throw ParseError("trailing input", line_, column_);
    return e;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  SExpr read() {
    SExpr e;
    e.line = line_;
    e.column = column_;
    char c = text_[pos_];
    if (c == '(') {
      advance();
      for (;;) {
        skip_blank();
        if (pos_ >= text_.size()) throw ParseError("unbalanced '('", e.line, e.column);
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        e.items.push_back(read());
      }
      return e;
    }
    if (c == ')') throw ParseError("unexpected ')'", line_, column_);
    if (!is_name_char(c)) {
      throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
    }
    e.is_atom = true;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) {
      e.atom += text_[pos_];
      advance();
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

enum class Namespace { kConcept, kRole, kIndividual };

const char* namespace_label(Namespace ns) {
  switch (ns) {
    case Namespace::kConcept:
      return "concept";
    case Namespace::kRole:
      return "role";
    case Namespace::kIndividual:
      return "individual";
  }
  return "?";
}

class Interpreter {
 public:
  explicit Interpreter(const ParseOptions& options) : options_(options) {}

  void statement(const SExpr& form, KnowledgeBase& kb) {
    if (form.is_atom || form.items.empty() || !form.items.front().is_atom) {
      throw ParseError("expected a statement form", form.line, form.column);
    }
    const std::string& head = form.items.front().atom;
    if (head == "implies") {
      arity(form, 3);
      kb.tbox.insert({concept_expr(form.items[1]), concept_expr(form.items[2])});
    } else if (head == "define-concept" || head == "define-primitive") {
      arity(form, 3);
      const SExpr& lhs = form.items[1];
      if (!lhs.is_atom || lhs.atom == "TOP" || lhs.atom == "BOTTOM") {
        throw ParseError(head + " expects a concept name", lhs.line, lhs.column);
      }
      Concept defined = concept_expr(lhs);
      Concept body = concept_expr(form.items[2]);
      kb.tbox.insert({defined, body});
      if (head == "define-concept") kb.tbox.insert({body, defined});
    } else if (head == "instance") {
      arity(form, 3);
      std::string a = name(form.items[1], Namespace::kIndividual);
      kb.abox.insert(ConceptAssertion{std::move(a), concept_expr(form.items[2])});
    } else if (head == "related") {
      arity(form, 4);
      std::string a = name(form.items[1], Namespace::kIndividual);
      std::string b = name(form.items[2], Namespace::kIndividual);
      kb.abox.insert(RoleAssertion{std::move(a), std::move(b), role(form.items[3])});
    } else {
      throw ParseError("unknown statement '" + head + "'", form.line, form.column);
    }
  }

  Concept concept_expr(const SExpr& e) {
    if (e.is_atom) {
      if (e.atom == "TOP") return Concept::top();
      if (e.atom == "BOTTOM") return Concept::bottom();
      return Concept::name(name(e, Namespace::kConcept));
    }
    if (e.items.empty() || !e.items.front().is_atom) {
      throw ParseError("expected a concept", e.line, e.column);
    }
    const std::string& op = e.items.front().atom;
    if (op == "and" || op == "or") {
      if (e.items.size() < 3) throw ParseError("'" + op + "' needs at least two operands", e.line, e.column);
      Concept acc = concept_expr(e.items[1]);
      for (std::size_t i = 2; i < e.items.size(); ++i) {
        Concept next = concept_expr(e.items[i]);
        acc = op == "and" ? Concept::conj(std::move(acc), std::move(next))
                          : Concept::disj(std::move(acc), std::move(next));
      }
      return acc;
    }
    if (op == "not") {
      arity(e, 2);
      return Concept::negate(concept_expr(e.items[1]));
    }
    if (op == "all" || op == "some") {
      arity(e, 3);
      Role r = role(e.items[1]);
      Concept filler = concept_expr(e.items[2]);
      return op == "all" ? Concept::all(std::move(r), std::move(filler))
                         : Concept::some(std::move(r), std::move(filler));
    }
    if (op == "atleast" || op == "atmost") {
      arity(e, 3);
      std::uint64_t n = number(e.items[1]);
      Role r = role(e.items[2]);
      return op == "atleast" ? Concept::at_least(n, std::move(r))
                             : Concept::at_most(n, std::move(r));
    }
    throw ParseError("unknown concept constructor '" + op + "'", e.line, e.column);
  }

  Role role(const SExpr& e) {
    if (e.is_atom) return Role(name(e, Namespace::kRole));
    if (e.items.size() < 2 || !e.items.front().is_atom || e.items.front().atom != "and") {
      throw ParseError("expected a role name or (and P ...)", e.line, e.column);
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      names.push_back(name(e.items[i], Namespace::kRole));
    }
    return Role(std::move(names));
  }

 private:
  static void arity(const SExpr& e, std::size_t n) {
    if (e.items.size() != n) {
      throw ParseError("'" + e.items.front().atom + "' expects " + std::to_string(n - 1) +
                           " argument(s), got " + std::to_string(e.items.size() - 1),
                       e.line, e.column);
    }
  }

  std::string name(const SExpr& e, Namespace ns) {
    if (!e.is_atom) {
      throw ParseError(std::string("expected ") + namespace_label(ns) + " name", e.line, e.column);
    }
    if (e.atom == "TOP" || e.atom == "BOTTOM") {
      throw ParseError("'" + e.atom + "' is not a " + namespace_label(ns) + " name", e.line, e.column);
    }
    if (e.atom == kReservedIndividual) {
      throw ParseError("'" + e.atom + "' is a reserved name", e.line, e.column);
    }
    auto [it, inserted] = namespaces_.emplace(e.atom, ns);
    if (!inserted && it->second != ns) {
      throw ParseError("'" + e.atom + "' used as " + namespace_label(ns) + " but already used as " +
                           namespace_label(it->second),
                       e.line, e.column);
    }
    return e.atom;
  }

  std::uint64_t number(const SExpr& e) const {
    if (!e.is_atom) throw ParseError("expected a number", e.line, e.column);
    std::uint64_t value = 0;
    for (char c : e.atom) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("expected a number, got '" + e.atom + "'", e.line, e.column);
      }
      const auto digit = static_cast<std::uint64_t>(c - '0');
      if (value > (UINT64_MAX - digit) / 10) {
        throw ParseError("number " + e.atom + " does not fit in 64 bits", e.line, e.column);
      }
      value = value * 10 + digit;
      if (value > options_.number_cap) {
        throw ParseError("number " + e.atom + " exceeds the cap of " +
                             std::to_string(options_.number_cap),
                         e.line, e.column);
      }
    }
    return value;
  }

  const ParseOptions& options_;
  std::map<std::string, Namespace> namespaces_;
};

}  // namespace

KnowledgeBase parse_kb(std::string_view text, const ParseOptions& options) {
  KnowledgeBase kb;
  Interpreter interp(options);
  for (const auto& form : Reader(text).read_all()) interp.statement(form, kb);
  return kb;
}

Concept parse_concept(std::string_view text, const ParseOptions& options) {
  Interpreter interp(options);
  return interp.concept_expr(Reader(text).read_one());
}

Role parse_role(std::string_view text) {
  ParseOptions options;
  Interpreter interp(options);
  return interp.role(Reader(text).read_one());
}

}  // namespace alcnr
