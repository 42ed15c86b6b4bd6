#include <benchmark/benchmark.h>

#include <string>

#include "alcnr/encodings.hpp"
#include "alcnr/services.hpp"

namespace {

using namespace alcnr;

const char* kUniversity =
    "(implies (some TEACHES Course) (or (and Student (some DEGREE BS)) Prof))"
    "(implies Prof (some DEGREE MS)) (implies (some DEGREE MS) (some DEGREE BS))"
    "(implies (and MS BS) BOTTOM) (related john cs156 TEACHES)"
    "(instance john (atmost 1 DEGREE)) (instance cs156 Course)";

const char* kItalians =
    "(implies Italian (some FRIEND Italian)) (related peter susan FRIEND) "
    "(instance peter (all FRIEND (not Italian))) (instance susan (some FRIEND Italian))";

ServiceOptions quiet() {
  ServiceOptions o;
  o.search.trace_limit = 1;
  o.self_check = false;
  return o;
}

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_kb(kUniversity));
}
BENCHMARK(BM_Parse);

void BM_UniversitySat(benchmark::State& state) {
  KnowledgeBase kb = parse_kb(kUniversity);
  for (auto _ : state) benchmark::DoNotOptimize(kb_satisfiable(kb, quiet()).status);
}
BENCHMARK(BM_UniversitySat);

void BM_UniversityInstance(benchmark::State& state) {
  KnowledgeBase kb = parse_kb(kUniversity);
  Concept student = Concept::name("Student");
  for (auto _ : state) benchmark::DoNotOptimize(instance_of(kb, "john", student, quiet()).value);
}
BENCHMARK(BM_UniversityInstance);

void BM_ItalianModel(benchmark::State& state) {
  KnowledgeBase kb = parse_kb(kItalians);
  ServiceOptions o = quiet();
  o.self_check = true;
  for (auto _ : state) benchmark::DoNotOptimize(kb_satisfiable(kb, o).model);
}
BENCHMARK(BM_ItalianModel);

// (atleast n R) against (atmost n-1 R) on fresh successors: every merge
// branch has to be refuted.
void BM_PigeonholeMerges(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  KnowledgeBase kb;
  Role r("R");
  for (int i = 0; i < n; ++i) {
    kb.abox.insert(ConceptAssertion{
        "a", Concept::some(r, Concept::name("A" + std::to_string(i)))});
    for (int j = 0; j < i; ++j) {
      kb.tbox.insert(Inclusion{Concept::conj(Concept::name("A" + std::to_string(i)),
                                             Concept::name("A" + std::to_string(j))),
                               Concept::bottom()});
    }
  }
  kb.abox.insert(ConceptAssertion{"a", Concept::at_most(n - 1, r)});
  for (auto _ : state) benchmark::DoNotOptimize(kb_satisfiable(kb, quiet()).status);
  state.SetComplexityN(n);
}
BENCHMARK(BM_PigeonholeMerges)->DenseRange(2, 5);

// A cyclic TBox whose completion grows with the number of concept names
// before blocking sets in.
void BM_CyclicChain(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  KnowledgeBase kb;
  Role r("R");
  for (int i = 0; i < n; ++i) {
    Concept cur = Concept::name("A" + std::to_string(i));
    Concept next = Concept::name("A" + std::to_string((i + 1) % n));
    kb.tbox.insert(Inclusion{cur, Concept::some(r, next)});
  }
  kb.abox.insert(ConceptAssertion{"a", Concept::name("A0")});
  for (auto _ : state) benchmark::DoNotOptimize(kb_satisfiable(kb, quiet()).status);
}
BENCHMARK(BM_CyclicChain)->RangeMultiplier(2)->Range(2, 32);

void BM_Transform(benchmark::State& state) {
  KnowledgeBase kb = parse_kb(kUniversity);
  for (auto _ : state) benchmark::DoNotOptimize(inclusions_to_introduction(kb));
}
BENCHMARK(BM_Transform);

void BM_OracleUniversity(benchmark::State& state) {
  KnowledgeBase kb = parse_kb(kUniversity);
  const auto bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_model_bounded(kb, bound).status);
}
BENCHMARK(BM_OracleUniversity)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
