// Copyright 2026 The entrench Authors
// SPDX-License-Identifier: Apache-2.0
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

#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>
#include <string>

#include "entrench/agent.hpp"
#include "entrench/io.hpp"
#include "entrench/logic.hpp"
#include "entrench/transmutation.hpp"

namespace {

using namespace entrench;

const std::filesystem::path kData = ENTRENCH_BENCH_DATA;

Formula atom(int k) { return Formula::atom("p", "c" + std::to_string(k)); }

// Chain c0 -> c1 -> ... -> c(n-1) with c0 asserted; entails the last atom.
void BM_EntailChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Formula> premises{atom(0)};
  for (int k = 0; k + 1 < n; ++k) premises.push_back(Formula::implication(atom(k), atom(k + 1)));
  const Formula goal = atom(n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(entails(premises, goal));
  state.SetComplexityN(n);
}
BENCHMARK(BM_EntailChain)->RangeMultiplier(2)->Range(8, 256)->Complexity();

// Random ranking of `n` literals and two-literal clauses over 12 atoms.
EntrenchmentRanking random_ranking(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 11);
  std::uniform_int_distribution<int> rank(1, 999);
  EntrenchmentRanking r;
  for (int k = 0; k < n; ++k) {
    Formula a = atom(pick(rng));
    if (rng() & 1) a = Formula::negation(a);
    if (rng() & 1) a = Formula::disjunction(a, atom(pick(rng)));
    if (!is_contingent(a)) continue;
    r = maxi_adjust(r, a, Rank::quantized(rank(rng) / 1000.0)).ranking;
  }
  return r;
}

void BM_MaxiAdjust(benchmark::State& state) {
  const EntrenchmentRanking r = random_ranking(static_cast<int>(state.range(0)), 7);
  const Formula a = Formula::negation(atom(3));
  for (auto _ : state) benchmark::DoNotOptimize(maxi_adjust(r, a, Rank(0.6)));
}
BENCHMARK(BM_MaxiAdjust)->Arg(8)->Arg(16)->Arg(32);

void BM_Degree(benchmark::State& state) {
  const EntrenchmentRanking r = random_ranking(static_cast<int>(state.range(0)), 11);
  const Formula a = Formula::disjunction(atom(1), atom(2));
  for (auto _ : state) benchmark::DoNotOptimize(degree(r, a));
}
BENCHMARK(BM_Degree)->Arg(8)->Arg(16)->Arg(32);

// Learning the three golden corpora from the domain rules.
void BM_ReplayGolden(benchmark::State& state) {
  const AgentProfile start = make_profile(read_belief_base(read_file(kData / "domain.tsv")));
  std::vector<Document> docs;
  for (const char* name : {"t1.tsv", "t2.tsv", "t3.tsv"}) {
    for (auto& d : read_corpus(read_file(kData / name))) docs.push_back(std::move(d));
  }
  for (auto _ : state) benchmark::DoNotOptimize(replay(start, docs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(docs.size()));
}
BENCHMARK(BM_ReplayGolden)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
