// Copyright 2026 The xaieval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "xaieval/consistency.h"
#include "xaieval/contrastivity.h"
#include "xaieval/ha.h"
#include "xaieval/ingest.h"
#include "xaieval/records.h"
#include "xaieval/robustness.h"

namespace xaieval {
namespace {

ExplanationRecord synthetic_record(std::mt19937_64& rng, std::size_t k,
                                   const std::string& id) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> word(0, 499);
  ExplanationRecord r;
  r.dataset_id = "bench";
  r.instance_id = id;
  r.model_id = "m";
  r.method_id = "lime";
  r.predicted_class = "pos";
  for (std::size_t i = 0; i < k; ++i) {
    r.tokens.push_back("w" + std::to_string(word(rng)));
    r.scores.push_back(u(rng));
  }
  return r;
}

void BM_AveragePrecision(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto expl = synthetic_record(rng, k, "i");
  RationaleAnnotation rat{"bench", "i", "a", {}};
  for (std::size_t i = 0; i < k; i += 4) rat.rationale_words.insert(expl.tokens[i]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(average_precision(expl, rat));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AveragePrecision)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_AverageDifference(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto k = static_cast<std::size_t>(state.range(0));
  PerturbationPair pair;
  pair.original = synthetic_record(rng, k, "i");
  pair.perturbed = pair.original;
  for (std::size_t i = 0; i < k; i += 7) pair.perturbed.tokens[i] = "[mask]";
  pair.relevance_mask = compute_relevance_mask(pair.original, pair.perturbed);
  for (auto _ : state) {
    benchmark::DoNotOptimize(average_difference(pair));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AverageDifference)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_SpearmanRho(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x(static_cast<std::size_t>(state.range(0)));
  std::vector<double> y(x.size());
  for (auto& v : x) v = u(rng);
  for (auto& v : y) v = u(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spearman_rho(x, y));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpearmanRho)->RangeMultiplier(8)->Range(8, 32768)->Complexity();

void BM_KlDivergence(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> s(static_cast<std::size_t>(state.range(0)));
  std::vector<double> t(s.size());
  for (auto& v : s) v = u(rng);
  for (auto& v : t) v = u(rng);
  for (auto _ : state) {
    const auto p = to_distribution(s, kDefaultEpsilon);
    const auto q = to_distribution(t, kDefaultEpsilon);
    benchmark::DoNotOptimize(kl_divergence(p, q));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KlDivergence)->RangeMultiplier(8)->Range(8, 32768)->Complexity();

void BM_LoadCorpus(benchmark::State& state) {
  std::mt19937_64 rng(5);
  CorpusIndex corpus;
  for (int i = 0; i < state.range(0); ++i) {
    auto r = synthetic_record(rng, 64, "i" + std::to_string(i));
    corpus.explanations[key_of(r)] = r;
  }
  const std::vector<SourceText> sources{{"bench.jsonl", write_corpus(corpus)}};
  LoadOptions options;
  options.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(load_corpus(std::span<const SourceText>(sources), options));
  }
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(sources[0].content.size()));
}
BENCHMARK(BM_LoadCorpus)->Args({1000, 1})->Args({1000, 4})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace xaieval

BENCHMARK_MAIN();
