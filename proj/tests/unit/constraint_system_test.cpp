#include <gtest/gtest.h>

#include "alcnr/constraint_system.hpp"

namespace alcnr {
namespace {

const Object a = Object::individual("a");
const Object b = Object::individual("b");
const Concept A = Concept::name("A");
const Concept B = Concept::name("B");

TEST(Object, OrderPutsIndividualsFirst) {
  EXPECT_LT(Object::individual("z"), Object::variable(0));
  EXPECT_LT(Object::variable(0), Object::variable(1));
  EXPECT_EQ(Object::variable(3).to_string(), "_v3");
}

TEST(Translate, Example33) {
  KnowledgeBase kb = parse_kb(
      "(implies Italian (some FRIEND Italian)) (related peter susan FRIEND) "
      "(instance peter (all FRIEND (not Italian))) (instance susan (some FRIEND Italian))");
  ConstraintSystem s = translate_kb(kb);
  EXPECT_EQ(s.dump(),
            "forall : (or (not Italian) (some FRIEND Italian))\n"
            "peter != susan\n"
            "peter : (all FRIEND (not Italian))\n"
            "peter FRIEND susan\n"
            "susan : (some FRIEND Italian)\n");
}

TEST(Translate, EmptyKbGetsRootObject) {
  ConstraintSystem s = translate_kb(KnowledgeBase{});
  EXPECT_EQ(s.dump(), "__fresh : TOP\n");
}

TEST(Translate, RoleConjunctionBecomesSeveralLinks) {
  ConstraintSystem s = translate_kb(parse_kb("(related a b (and P Q))"));
  EXPECT_TRUE(s.has_link(a, "P", b));
  EXPECT_TRUE(s.has_link(a, "Q", b));
  EXPECT_EQ(s.r_successors(a, Role(std::vector<std::string>{"P", "Q"})), std::vector<Object>{b});
}

TEST(Translate, UniversitySeparatesIndividuals) {
  ConstraintSystem s = translate_kb(parse_kb(
      "(related john cs156 TEACHES) (instance john (atmost 1 DEGREE)) (instance cs156 Course)"));
  EXPECT_TRUE(s.separated(Object::individual("john"), Object::individual("cs156")));
  EXPECT_TRUE(s.has_link(Object::individual("john"), "TEACHES", Object::individual("cs156")));
}

TEST(Translate, EmptyAboxWithTbox) {
  ConstraintSystem s = translate_kb(parse_kb("(implies A B)"));
  EXPECT_EQ(s.dump(), "__fresh : TOP\nforall : (or (not A) B)\n");
}

TEST(Measure, Example33Translation) {
  ConstraintSystem s = translate_kb(parse_kb(
      "(implies Italian (some FRIEND Italian)) (related peter susan FRIEND) "
      "(instance peter (all FRIEND (not Italian))) (instance susan (some FRIEND Italian))"));
  EXPECT_EQ(s.measure().n_s, 5u);
  EXPECT_EQ(ConstraintSystem().measure().n_s, 0u);
  EXPECT_TRUE(s.sigma(Object::variable(7)).empty());
}

TEST(ConstraintSystem, MembersMustBeSimple) {
  ConstraintSystem s;
  EXPECT_THROW(s.add_member(a, Concept::negate(Concept::conj(A, B))), std::invalid_argument);
  EXPECT_THROW(s.add_universal(Concept::negate(Concept::top())), std::invalid_argument);
}

TEST(ConstraintSystem, SuccessorsNeedEveryName) {
  ConstraintSystem s;
  Object x = s.fresh_variable();
  s.add_link(a, "P", x);
  s.add_link(a, "P", b);
  s.add_link(a, "Q", b);
  EXPECT_EQ(s.r_successors(a, Role("P")), (std::vector<Object>{b, x}));
  EXPECT_EQ(s.r_successors(a, Role(std::vector<std::string>{"P", "Q"})), std::vector<Object>{b});
}

TEST(ConstraintSystem, SeparationIsSymmetric) {
  ConstraintSystem s;
  s.add_distinct(b, a);
  EXPECT_TRUE(s.separated(a, b));
  EXPECT_TRUE(s.separated(b, a));
  EXPECT_THROW(s.add_distinct(a, a), std::invalid_argument);
}

TEST(ConstraintSystem, WitnessIsLeastEarlierEquivalentVariable) {
  ConstraintSystem s;
  Object x = s.fresh_variable();
  Object y = s.fresh_variable();
  Object z = s.fresh_variable();
  s.add_member(x, A);
  s.add_member(y, A);
  s.add_member(z, A);
  s.add_member(a, A);  // individuals never witness
  EXPECT_FALSE(s.witness(x));
  EXPECT_EQ(s.witness(y), x);
  EXPECT_EQ(s.witness(z), x);
  EXPECT_FALSE(s.is_blocked(a));
  s.add_member(z, B);
  EXPECT_FALSE(s.witness(z));
  EXPECT_TRUE(s.s_equivalent(x, y));
  EXPECT_FALSE(s.s_equivalent(x, z));
}

TEST(ConstraintSystem, SubstitutionRenamesEverywhere) {
  ConstraintSystem s;
  Object x = s.fresh_variable();
  Object y = s.fresh_variable();
  s.add_member(y, A);
  s.add_link(a, "R", y);
  s.add_link(y, "R", x);
  s.add_distinct(y, b);
  ConstraintSystem t = s.substitute(y, x);
  EXPECT_FALSE(t.contains(y));
  EXPECT_TRUE(t.has_member(x, A));
  EXPECT_TRUE(t.has_link(a, "R", x));
  EXPECT_TRUE(t.has_link(x, "R", x));
  EXPECT_TRUE(t.separated(x, b));
  EXPECT_EQ(t.constraint_count(), 4u);
  // The original is untouched.
  EXPECT_TRUE(s.has_member(y, A));
}

TEST(ConstraintSystem, SubstitutionPreconditions) {
  ConstraintSystem s;
  Object x = s.fresh_variable();
  Object y = s.fresh_variable();
  s.add_distinct(x, y);
  EXPECT_THROW(s.substitute(a, x), std::invalid_argument);
  EXPECT_THROW(s.substitute(x, x), std::invalid_argument);
  EXPECT_THROW(s.substitute(y, x), std::logic_error);
}

TEST(ConstraintSystem, MeasureCountsDistinctSubconcepts) {
  ConstraintSystem s;
  Object x = s.fresh_variable();
  Object y = s.fresh_variable();
  s.add_member(x, Concept::conj(A, B));
  s.add_member(y, Concept::conj(A, B));
  s.add_universal(Concept::negate(A));
  SystemMetrics m = s.measure();
  EXPECT_EQ(m.n_s, 4u);  // A ⊓ B, A, B, ¬A
  EXPECT_EQ(m.variable_count, 2u);
  EXPECT_EQ(m.non_blocked_count, 1u);
}

}  // namespace
}  // namespace alcnr
