#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "alcnr/services.hpp"

namespace alcnr {
namespace {

KnowledgeBase load(const std::string& name) {
  std::ifstream in(std::string(ALCNR_TEST_DATA_DIR) + "/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_kb(buf.str());
}

Concept C(const std::string& text) { return parse_concept(text); }

TEST(KbSatisfiable, Examples) {
  Verdict v21 = kb_satisfiable(load("example21.kb"));
  EXPECT_EQ(v21.status, Satisfiability::kSat);
  ASSERT_TRUE(v21.model);
  EXPECT_TRUE(is_model(v21.model->interpretation, load("example21.kb")));
  EXPECT_EQ(kb_satisfiable(load("example33.kb")).status, Satisfiability::kSat);
  EXPECT_EQ(kb_satisfiable(parse_kb("(instance a BOTTOM)")).status, Satisfiability::kUnsat);
  EXPECT_EQ(kb_satisfiable(KnowledgeBase{}).status, Satisfiability::kSat);
}

TEST(KbSatisfiable, GuardsGiveUnknown) {
  ServiceOptions options;
  options.search.guards.max_variables = 2;
  Verdict v = kb_satisfiable(parse_kb("(instance a (atleast 5 R))"), options);
  EXPECT_EQ(v.status, Satisfiability::kUnknown);
  EXPECT_FALSE(v.guard.empty());
}

TEST(ConceptSatisfiable, Examples) {
  KnowledgeBase kb = load("example21.kb");
  EXPECT_EQ(concept_satisfiable(kb, C("(and Prof (atmost 1 DEGREE))")).status,
            Satisfiability::kUnsat);
  EXPECT_EQ(concept_satisfiable(kb, Concept::top()).status, Satisfiability::kSat);
  Verdict prof = concept_satisfiable(kb, C("Prof"));
  ASSERT_EQ(prof.status, Satisfiability::kSat);
  const auto& model = prof.model->interpretation;
  Element b = *model.individual("__fresh");
  EXPECT_TRUE(model.in_concept("Prof", b));
  EXPECT_GE(model.successors(Role("DEGREE"), b).size(), 2u);
}

TEST(SubsumedBy, Examples) {
  KnowledgeBase kb = load("example21.kb");
  EXPECT_EQ(subsumed_by(kb, C("(some DEGREE MS)"), C("(some DEGREE BS)")).value, Truth::kTrue);
  EXPECT_EQ(subsumed_by(kb, C("Student"), C("Student")).value, Truth::kTrue);
  EXPECT_EQ(subsumed_by(kb, C("Student"), C("Prof")).value, Truth::kFalse);
  EXPECT_EQ(subsumed_by(kb, C("Prof"), C("(atleast 2 DEGREE)")).value, Truth::kTrue);
}

TEST(InstanceOf, Examples) {
  KnowledgeBase kb = load("example21.kb");
  EXPECT_EQ(instance_of(kb, "john", C("Student")).value, Truth::kTrue);
  EXPECT_EQ(instance_of(kb, "john", C("Prof")).value, Truth::kFalse);
  EXPECT_EQ(instance_of(kb, "cs156", C("Course")).value, Truth::kTrue);
  EXPECT_THROW(instance_of(kb, "mary", C("Student")), std::invalid_argument);
}

TEST(Instances, Examples) {
  KnowledgeBase kb = load("example21.kb");
  EXPECT_EQ(instances(kb, C("Student")).members, std::vector<std::string>{"john"});
  EXPECT_EQ(instances(kb, Concept::top()).members,
            (std::vector<std::string>{"cs156", "john"}));
  EXPECT_TRUE(instances(kb, Concept::bottom()).members.empty());
}

TEST(Services, UnsatisfiableKbEntailsEverything) {
  KnowledgeBase kb = parse_kb("(instance a A) (instance a (not A))");
  EXPECT_EQ(subsumed_by(kb, C("TOP"), C("BOTTOM")).value, Truth::kTrue);
  EXPECT_EQ(instance_of(kb, "a", C("BOTTOM")).value, Truth::kTrue);
  EXPECT_EQ(concept_satisfiable(kb, C("TOP")).status, Satisfiability::kUnsat);
}

TEST(Services, Duality) {
  KnowledgeBase kb = load("example21.kb");
  for (const auto& [c, d] : std::vector<std::pair<std::string, std::string>>{
           {"Student", "Prof"}, {"Prof", "(some DEGREE BS)"}, {"MS", "(not BS)"}}) {
    const bool subsumed = subsumed_by(kb, C(c), C(d)).value == Truth::kTrue;
    const bool unsat =
        concept_satisfiable(kb, Concept::conj(C(c), Concept::negate(C(d)))).status ==
        Satisfiability::kUnsat;
    EXPECT_EQ(subsumed, unsat) << c << " / " << d;
  }
}

TEST(Services, TboxAxiomsAreSubsumptions) {
  KnowledgeBase kb = load("example21.kb");
  for (const auto& inc : kb.tbox) {
    EXPECT_EQ(subsumed_by(kb, inc.lhs, inc.rhs).value, Truth::kTrue) << to_string(inc.lhs);
  }
}

TEST(OracleContradiction, NoneOnExamples) {
  EXPECT_FALSE(oracle_contradiction(kb_satisfiable(load("example21.kb")), 4));
  Verdict unsat = concept_satisfiable(load("example21.kb"), C("(and Prof (atmost 1 DEGREE))"));
  EXPECT_FALSE(oracle_contradiction(unsat, 3));
}

TEST(OracleContradiction, FlagsAWrongUnsat) {
  Verdict forged;
  forged.status = Satisfiability::kUnsat;
  forged.decided = parse_kb("(instance a A)");
  EXPECT_TRUE(oracle_contradiction(forged, 2));
}

}  // namespace
}  // namespace alcnr
