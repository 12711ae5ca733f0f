/* Copyright 2026 The gsb Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <benchmark/benchmark.h>

#include "gsb/catalog.hpp"
#include "gsb/completion.hpp"

namespace {

using namespace gsb;

const RewriteSystem& at_pos3() {
  static const RewriteSystem s = rewrite_system(adyan_thurston_pos(3));
  return s;
}

const RewriteSystem& rows33() {
  static const RewriteSystem s = rewrite_system(plactic_rows(3, 3));
  return s;
}

void BM_IsGsb_AT3(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_gsb(at_pos3(), 0, threads).is_gsb);
}

void BM_IsGsbSerial_AT3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(is_gsb_serial(at_pos3()).is_gsb);
}

void BM_IsGsb_Rows33(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_gsb(rows33(), 0, threads).is_gsb);
}

void BM_IsGsbSerial_Rows33(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(is_gsb_serial(rows33()).is_gsb);
}

CompletionBudget plactic_budget() {
  CompletionBudget b;
  b.max_deg = 7;
  return b;
}

void BM_Complete_Plactic4(benchmark::State& state) {
  const Presentation pr = plactic_standard(4);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(complete(pr.relations, pr.alphabet.size(), plactic_budget(), threads).system.size());
  }
}

void BM_CompleteSerial_Plactic4(benchmark::State& state) {
  const Presentation pr = plactic_standard(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(complete_serial(pr.relations, pr.alphabet.size(), plactic_budget()).system.size());
  }
}

void BM_Complete_S4(benchmark::State& state) {
  const Presentation pr = symmetric_group(4);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(complete(pr.relations, pr.alphabet.size(), {}, threads).system.size());
}

void BM_CompleteSerial_S4(benchmark::State& state) {
  const Presentation pr = symmetric_group(4);
  for (auto _ : state) benchmark::DoNotOptimize(complete_serial(pr.relations, pr.alphabet.size()).system.size());
}

}  // namespace

BENCHMARK(BM_IsGsb_AT3)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsGsbSerial_AT3)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsGsb_Rows33)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsGsbSerial_Rows33)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Complete_Plactic4)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompleteSerial_Plactic4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Complete_S4)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompleteSerial_S4)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
