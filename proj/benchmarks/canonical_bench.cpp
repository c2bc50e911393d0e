#include <benchmark/benchmark.h>

#include <string>

#include "rrs/canonical.hpp"
#include "rrs/json_io.hpp"
#include "rrs/statements.hpp"

namespace {

rrs::Model fixture(const char* name) {
  return rrs::load_model(std::string(RRS_FIXTURE_DIR) + "/" + name + ".json");
}

void BM_Canonicalize(benchmark::State& state, const char* name) {
  const rrs::Model m = fixture(name);
  for (auto _ : state) benchmark::DoNotOptimize(rrs::canonicalize(m));
}

void BM_RunAllStatements(benchmark::State& state, const char* name) {
  const rrs::Model m = fixture(name);
  for (auto _ : state) benchmark::DoNotOptimize(rrs::run_all_statements(m));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Canonicalize, G3, "G3");
BENCHMARK_CAPTURE(BM_Canonicalize, D5, "D5")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_RunAllStatements, P3, "P3")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_RunAllStatements, D5, "D5")->Unit(benchmark::kMicrosecond);
