#include "alcnr/constraint_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace alcnr {

Object Object::individual(std::string name) { return Object(false, std::move(name), 0); }
Object Object::variable(std::uint32_t index) { return Object(true, std::string(), index); }

std::string Object::to_string() const {
  return variable_ ? "_v" + std::to_string(index_) : name_;
}

std::string to_string(const Object& o) { return o.to_string(); }

namespace {

std::uint64_t scramble(std::uint64_t h) {
  h += 0x9e3779b97f4a7c15ULL;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

const std::set<Concept>& empty_label() {
  static const std::set<Concept> kEmpty;
  return kEmpty;
}

}  // namespace

bool ConstraintSystem::add_member(const Object& s, const Concept& c) {
  if (!c.is_simple()) throw std::invalid_argument("member constraint needs a simple concept");
  touch(s);
  if (!labels_[s].insert(c).second) return false;
  fingerprints_[s] += scramble(c.hash());
  ++count_;
  return true;
}

bool ConstraintSystem::add_link(const Object& s, const std::string& role_name, const Object& t) {
  touch(s);
  touch(t);
  if (!links_[s][t].insert(role_name).second) return false;
  ++count_;
  return true;
}

bool ConstraintSystem::add_universal(const Concept& c) {
  if (!c.is_simple()) throw std::invalid_argument("universal constraint needs a simple concept");
  if (!universals_.insert(c).second) return false;
  ++count_;
  return true;
}

bool ConstraintSystem::add_distinct(const Object& s, const Object& t) {
  if (s == t) throw std::invalid_argument("an object cannot be separated from itself");
  touch(s);
  touch(t);
  if (!distinct_.insert(std::minmax(s, t)).second) return false;
  ++count_;
  return true;
}

Object ConstraintSystem::fresh_variable() { return Object::variable(next_var_++); }

bool ConstraintSystem::has_member(const Object& s, const Concept& c) const {
  auto it = labels_.find(s);
  return it != labels_.end() && it->second.count(c) != 0;
}

bool ConstraintSystem::has_link(const Object& s, const std::string& role_name,
                                const Object& t) const {
  auto it = links_.find(s);
  if (it == links_.end()) return false;
  auto jt = it->second.find(t);
  return jt != it->second.end() && jt->second.count(role_name) != 0;
}

const std::set<Concept>& ConstraintSystem::sigma(const Object& s) const {
  auto it = labels_.find(s);
  return it == labels_.end() ? empty_label() : it->second;
}

std::vector<Object> ConstraintSystem::r_successors(const Object& s, const Role& role) const {
  std::vector<Object> out;
  auto it = links_.find(s);
  if (it == links_.end()) return out;
  for (const auto& [t, names] : it->second) {
    bool all = std::all_of(role.names().begin(), role.names().end(),
                           [&](const std::string& p) { return names.count(p) != 0; });
    if (all) out.push_back(t);
  }
  return out;
}

std::vector<Object> ConstraintSystem::direct_successors(const Object& s) const {
  std::vector<Object> out;
  auto it = links_.find(s);
  if (it == links_.end()) return out;
  for (const auto& [t, names] : it->second) {
    if (!names.empty()) out.push_back(t);
  }
  return out;
}

bool ConstraintSystem::separated(const Object& s, const Object& t) const {
  return distinct_.count(std::minmax(s, t)) != 0;
}

bool ConstraintSystem::s_equivalent(const Object& x, const Object& y) const {
  if (x == y) return true;
  if (fingerprint(x) != fingerprint(y)) return false;
  return sigma(x) == sigma(y);
}

std::uint64_t ConstraintSystem::fingerprint(const Object& o) const {
  auto it = fingerprints_.find(o);
  return it == fingerprints_.end() ? 0 : it->second;
}

std::optional<Object> ConstraintSystem::witness(const Object& x) const {
  if (!x.is_variable()) return std::nullopt;
  const auto fx = fingerprint(x);
  const auto& sx = sigma(x);
  for (auto it = objects_.lower_bound(Object::variable(0)); it != objects_.end(); ++it) {
    if (!(*it < x)) break;
    if (fingerprint(*it) == fx && sigma(*it) == sx) return *it;
  }
  return std::nullopt;
}

std::vector<Object> ConstraintSystem::variables() const {
  return {objects_.lower_bound(Object::variable(0)), objects_.end()};
}

void ConstraintSystem::substitute_in_place(const Object& y, const Object& t) {
  if (!y.is_variable()) throw std::invalid_argument("only variables can be substituted");
  if (y == t) throw std::invalid_argument("cannot substitute a variable by itself");
  auto rename = [&](const Object& o) -> const Object& { return o == y ? t : o; };

  if (auto it = labels_.find(y); it != labels_.end()) {
    auto moved = std::move(it->second);
    labels_.erase(it);
    fingerprints_.erase(y);
    auto& target = labels_[t];
    auto& fp = fingerprints_[t];
    for (const auto& c : moved) {
      if (target.insert(c).second) fp += scramble(c.hash());
    }
  }

  std::map<Object, std::map<Object, std::set<std::string>>> links;
  for (const auto& [s, row] : links_) {
    auto& out_row = links[rename(s)];
    for (const auto& [u, names] : row) {
      out_row[rename(u)].insert(names.begin(), names.end());
    }
  }
  links_ = std::move(links);

  std::set<std::pair<Object, Object>> distinct;
  for (const auto& [a, b] : distinct_) {
    const Object& ra = rename(a);
    const Object& rb = rename(b);
    if (ra == rb) throw std::logic_error("substitution merges separated objects");
    distinct.insert(std::minmax(ra, rb));
  }
  distinct_ = std::move(distinct);

  objects_.erase(y);
  objects_.insert(t);

  count_ = universals_.size() + distinct_.size();
  for (const auto& [o, label] : labels_) count_ += label.size();
  for (const auto& [s, row] : links_) {
    for (const auto& [u, names] : row) count_ += names.size();
  }
}

ConstraintSystem ConstraintSystem::substitute(const Object& y, const Object& t) const {
  ConstraintSystem out = *this;
  out.substitute_in_place(y, t);
  return out;
}

SystemMetrics ConstraintSystem::measure() const {
  SystemMetrics m;
  std::set<Concept> concepts;
  for (const auto& [o, label] : labels_) {
    for (const auto& c : label) collect_subconcepts(c, concepts);
  }
  for (const auto& c : universals_) collect_subconcepts(c, concepts);
  m.n_s = concepts.size();
  for (const auto& v : variables()) {
    ++m.variable_count;
    if (!witness(v)) ++m.non_blocked_count;
  }
  return m;
}

std::string ConstraintSystem::dump() const {
  std::vector<std::string> lines;
  for (const auto& [o, label] : labels_) {
    for (const auto& c : label) lines.push_back(o.to_string() + " : " + to_string(c));
  }
  for (const auto& [s, row] : links_) {
    for (const auto& [t, names] : row) {
      for (const auto& p : names) lines.push_back(s.to_string() + ' ' + p + ' ' + t.to_string());
    }
  }
  for (const auto& c : universals_) lines.push_back("forall : " + to_string(c));
  for (const auto& [a, b] : distinct_) lines.push_back(a.to_string() + " != " + b.to_string());
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + '\n';
  return out;
}

ConstraintSystem translate_kb(const KnowledgeBase& kb) {
  ConstraintSystem s;
  s.set_source(std::make_shared<const KnowledgeBase>(kb));
  for (const auto& inc : kb.tbox) {
    s.add_universal(to_simple_form(Concept::disj(Concept::negate(inc.lhs), inc.rhs)));
  }
  for (const auto& a : kb.abox) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
      s.add_member(Object::individual(ca->individual), to_simple_form(ca->expr));
    } else {
      const auto& ra = std::get<RoleAssertion>(a);
      for (const auto& p : ra.role.names()) {
        s.add_link(Object::individual(ra.from), p, Object::individual(ra.to));
      }
    }
  }
  const auto individuals = kb.individuals();
  for (auto i = individuals.begin(); i != individuals.end(); ++i) {
    for (auto j = std::next(i); j != individuals.end(); ++j) {
      s.add_distinct(Object::individual(*i), Object::individual(*j));
    }
  }
  if (individuals.empty()) {
    s.add_member(Object::individual(std::string(kRootIndividual)), Concept::top());
  }
  return s;
}

}  // namespace alcnr
