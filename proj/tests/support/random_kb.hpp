// Seeded generators for small random knowledge bases and interpretations.

#ifndef ALCNR_TESTS_RANDOM_KB_HPP_
#define ALCNR_TESTS_RANDOM_KB_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "alcnr/semantics.hpp"
#include "alcnr/syntax.hpp"

namespace alcnr::testing {

struct RandomKbParams {
  int concept_names = 3;
  int role_names = 2;
  int individuals = 3;
  std::uint64_t max_number = 3;
  int max_depth = 3;
  int max_inclusions = 2;
  int max_concept_assertions = 3;
  int max_role_assertions = 3;
};

class RandomKbGenerator {
 public:
  explicit RandomKbGenerator(std::uint64_t seed, RandomKbParams params = {});

  KnowledgeBase kb();
  Concept concept_expr(int depth);
  Role role();
  std::set<Inclusion> tbox();
  // `elements` anonymous elements named e0, e1, ...; names from the params.
  Interpretation interpretation(int elements);

  const std::vector<std::string>& concept_pool() const { return concepts_; }
  const std::vector<std::string>& role_pool() const { return roles_; }
  const std::vector<std::string>& individual_pool() const { return individuals_; }

 private:
  int uniform(int lo, int hi);
  bool chance(double p);

  std::mt19937_64 rng_;
  RandomKbParams params_;
  std::vector<std::string> concepts_;
  std::vector<std::string> roles_;
  std::vector<std::string> individuals_;
};

/// The fixed suite shared by the property and acceptance tests.
std::vector<KnowledgeBase> random_suite(std::size_t count, std::uint64_t seed = 20240601);

}  // namespace alcnr::testing

#endif  // ALCNR_TESTS_RANDOM_KB_HPP_
