#include <gtest/gtest.h>

#include "alcnr/encodings.hpp"
#include "alcnr/semantics.hpp"
#include "alcnr/services.hpp"

namespace alcnr {
namespace {

Concept C(const std::string& text) { return parse_concept(text); }

const char* kExample33 =
    "(implies Italian (some FRIEND Italian)) (related peter susan FRIEND) "
    "(instance peter (all FRIEND (not Italian))) (instance susan (some FRIEND Italian))";

TEST(COfTbox, Example33) {
  KnowledgeBase kb = parse_kb(kExample33);
  EXPECT_EQ(c_of_tbox(kb.tbox), C("(or (not Italian) (some FRIEND Italian))"));
}

TEST(COfTbox, EmptyIsTop) { EXPECT_EQ(c_of_tbox({}), Concept::top()); }

TEST(COfTbox, OneConjunctPerInclusion) {
  KnowledgeBase kb = parse_kb("(implies A B) (implies B C) (implies C A) (implies A (not C))");
  Concept c = c_of_tbox(kb.tbox);
  std::size_t conjuncts = 1;
  for (Concept cur = c; cur.is(ConceptKind::kAnd); cur = cur.lhs()) ++conjuncts;
  EXPECT_EQ(conjuncts, 4u);
}

TEST(Transform, Example33) {
  KnowledgeBase out = inclusions_to_introduction(parse_kb(kExample33));
  EXPECT_EQ(out.tbox,
            (std::set<Inclusion>{{C("__aux0"), C("(and (or (not Italian) (some FRIEND Italian)) "
                                                 "(all FRIEND __aux0))")}}));
  EXPECT_TRUE(out.abox.count(ConceptAssertion{"peter", C("__aux0")}));
  EXPECT_TRUE(out.abox.count(ConceptAssertion{"susan", C("__aux0")}));
  EXPECT_EQ(out.abox.size(), 5u);
}

TEST(Transform, NoRoles) {
  KnowledgeBase out = inclusions_to_introduction(parse_kb("(instance a A)"));
  EXPECT_EQ(out.tbox, (std::set<Inclusion>{{C("__aux0"), Concept::top()}}));
  EXPECT_TRUE(out.abox.count(ConceptAssertion{"a", C("__aux0")}));
}

TEST(Transform, FreshNameSkipsCollisions) {
  KnowledgeBase out = inclusions_to_introduction(parse_kb("(instance a __aux0)"));
  EXPECT_EQ(out.tbox.begin()->lhs, C("__aux1"));
}

TEST(Transform, RolesInLexicographicOrder) {
  KnowledgeBase out = inclusions_to_introduction(parse_kb("(related a b Q) (related a b P)"));
  EXPECT_EQ(out.tbox.begin()->rhs, C("(and (and TOP (all P __aux0)) (all Q __aux0))"));
}

TEST(Transform, EmptyAboxGetsAnIndividual) {
  // Without one, the transformed KB would be satisfiable for any TBox.
  KnowledgeBase kb = parse_kb("(implies TOP BOTTOM)");
  EXPECT_EQ(kb_satisfiable(kb).status, Satisfiability::kUnsat);
  EXPECT_EQ(kb_satisfiable(inclusions_to_introduction(kb)).status, Satisfiability::kUnsat);
}

TEST(Transform, OutputReparses) {
  KnowledgeBase out = inclusions_to_introduction(parse_kb(kExample33));
  EXPECT_EQ(parse_kb(render_kb(out)), out);
}

TEST(Transform, PreservesVerdictOnExamples) {
  KnowledgeBase ex21 = parse_kb(
      "(implies (some TEACHES Course) (or (and Student (some DEGREE BS)) Prof))"
      "(implies Prof (some DEGREE MS)) (implies (some DEGREE MS) (some DEGREE BS))"
      "(implies (and MS BS) BOTTOM) (related john cs156 TEACHES)"
      "(instance john (atmost 1 DEGREE)) (instance cs156 Course)");
  EXPECT_EQ(kb_satisfiable(ex21).status, Satisfiability::kSat);
  EXPECT_EQ(kb_satisfiable(inclusions_to_introduction(ex21)).status, Satisfiability::kSat);
}

TEST(DomainRange, Instantiation) {
  auto [dom, ran] = domain_range_inclusions(Role("TEACHES"), C("(or Prof Student)"), C("Course"));
  EXPECT_EQ(dom.lhs, C("(some TEACHES TOP)"));
  EXPECT_EQ(dom.rhs, C("(or Prof Student)"));
  EXPECT_EQ(ran.lhs, Concept::top());
  EXPECT_EQ(ran.rhs, C("(all TEACHES Course)"));
}

TEST(DomainRange, ModelsRespectTheSignature) {
  auto [dom, ran] = domain_range_inclusions(Role("R"), C("A"), C("B"));
  KnowledgeBase kb;
  kb.tbox = {dom, ran};
  Interpretation good = parse_model(
      "domain: x y\nconcept A = {x}\nconcept B = {y}\nrole R = {(x,y)}\n");
  Interpretation bad = parse_model(
      "domain: x y\nconcept A = {x}\nconcept B = {}\nrole R = {(x,y)}\n");
  EXPECT_TRUE(is_model(good, kb));
  EXPECT_FALSE(is_model(bad, kb));
}

TEST(DomainRange, TopRangeIsVacuous) {
  auto ran = domain_range_inclusions(Role("R"), Concept::top(), Concept::top()).second;
  Interpretation any = parse_model("domain: x\nrole R = {(x,x)}\n");
  EXPECT_TRUE(satisfies(any, ran));
}

TEST(Subrole, Conjunction) {
  Role r = subrole("ADOPTEDCHILD'", Role("CHILD"));
  EXPECT_EQ(r, Role(std::vector<std::string>{"CHILD", "ADOPTEDCHILD'"}));
  EXPECT_EQ(subrole("S2", subrole("S1", Role("P"))),
            Role(std::vector<std::string>{"P", "S1", "S2"}));
  EXPECT_THROW(subrole("CHILD", Role("CHILD")), std::invalid_argument);
  EXPECT_THROW(subrole("bad name", Role("CHILD")), std::invalid_argument);
}

TEST(Subrole, ExtensionIsContainedInSuper) {
  Interpretation i = parse_model(
      "domain: x y z\nrole CHILD = {(x,y),(x,z)}\nrole ADOPTED = {(x,z),(y,z)}\n");
  Role r = subrole("ADOPTED", Role("CHILD"));
  for (Element e = 0; e < 3; ++e) {
    for (Element t : i.successors(r, e)) EXPECT_TRUE(i.has_pair("CHILD", e, t));
  }
  EXPECT_EQ(i.successors(r, 0), std::vector<Element>{2});
}

}  // namespace
}  // namespace alcnr
