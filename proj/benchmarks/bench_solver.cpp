#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "xasp/asp/ground.hpp"
#include "xasp/asp/solve.hpp"
#include "xasp/asp/text.hpp"
#include "xasp/analysis.hpp"
#include "xasp/policy.hpp"
#include "xasp/transform.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

xasp::asp::Program hospital_program() {
  auto tree = xasp::parse_policy(slurp(XASP_DATA_DIR "/hospital/hospital.pol"));
  auto q = xasp::parse_request(slurp(XASP_DATA_DIR "/hospital/q1.req"));
  return xasp::transform_all(tree, q);
}

// Chain a0 <- not a1 <- ... of the given length: acyclic, one answer set.
xasp::asp::Program chain(int n) {
  std::string text = "a" + std::to_string(n) + ".\n";
  for (int i = 0; i < n; ++i) {
    text += "a" + std::to_string(i) + " :- not a" + std::to_string(i + 1) + ".\n";
  }
  return xasp::asp::parse_program(text);
}

void BM_GroundHospital(benchmark::State& state) {
  const auto p = hospital_program();
  for (auto _ : state) benchmark::DoNotOptimize(xasp::asp::ground(p));
}
BENCHMARK(BM_GroundHospital);

void BM_SolveHospital(benchmark::State& state) {
  const auto gp = xasp::asp::ground(hospital_program());
  for (auto _ : state) benchmark::DoNotOptimize(xasp::asp::answer_sets(gp));
}
BENCHMARK(BM_SolveHospital);

void BM_SolveChain(benchmark::State& state) {
  const auto gp = xasp::asp::ground(chain(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(xasp::asp::answer_sets(gp));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveChain)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_BruteforceEvenLoops(benchmark::State& state) {
  std::string text;
  for (int i = 0; i < state.range(0); ++i) {
    const auto s = std::to_string(i);
    text += "a" + s + " :- not b" + s + ".\nb" + s + " :- not a" + s + ".\n";
  }
  const auto gp = xasp::asp::ground(xasp::asp::parse_program(text));
  for (auto _ : state) benchmark::DoNotOptimize(xasp::asp::answer_sets_bruteforce(gp));
}
BENCHMARK(BM_BruteforceEvenLoops)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
