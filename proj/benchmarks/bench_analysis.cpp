#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "xasp/analysis.hpp"
#include "xasp/policy.hpp"
#include "xasp/asp/text.hpp"
#include "xasp/semantics.hpp"
#include "xasp/transform.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Sample {
  xasp::PolicyTree tree = xasp::parse_policy(slurp(XASP_DATA_DIR "/hospital/hospital.pol"));
  xasp::Request request = xasp::parse_request(slurp(XASP_DATA_DIR "/hospital/q1.req"));
  xasp::AttributeDomain domain = xasp::parse_domain(slurp(XASP_DATA_DIR "/hospital/hospital.dom"));
};

const Sample& sample() {
  static const Sample s;
  return s;
}

void BM_EvalRoot(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(xasp::eval_root(sample().tree, sample().request));
}
BENCHMARK(BM_EvalRoot);

void BM_TransformEmit(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(xasp::asp::emit_text(xasp::transform_all(sample().tree, sample().request)));
  }
}
BENCHMARK(BM_TransformEmit);

void BM_CrossCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(xasp::cross_check(sample().tree, sample().request));
}
BENCHMARK(BM_CrossCheck);

void BM_CheckGap(benchmark::State& state) {
  xasp::AnalysisOptions o;
  o.path = static_cast<xasp::AnalysisPath>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(xasp::check_gap(sample().tree, sample().domain, o));
}
BENCHMARK(BM_CheckGap)
    ->Arg(static_cast<int>(xasp::AnalysisPath::Asp))
    ->Arg(static_cast<int>(xasp::AnalysisPath::Oracle))
    ->Unit(benchmark::kMillisecond);

}  // namespace
