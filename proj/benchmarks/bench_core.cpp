// SPDX-License-Identifier: Apache-2.0
//
// eegame - energy-efficiency games on MIMO interference channels
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "eegame/best_response.hpp"
#include "eegame/equilibrium_analysis.hpp"
#include "eegame/game_engine.hpp"
#include "eegame/rng.hpp"

using namespace eegame;

namespace {

CMat random_complex(int rows, int cols, std::uint64_t seed) {
    RngStream rng(seed);
    CMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.next_cnormal();
    return m;
}

ChannelSet table1_instance(std::uint64_t seed) {
    NetworkConfig cfg;
    cfg.seed = seed;
    const Topology topo = generate_topology(cfg, TopologyMode::random_square());
    return sample_channels(topo, cfg, PathLossModel::from_config(cfg), seed);
}

}  // namespace

static void BM_Waterfill(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    std::vector<double> d(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) d[static_cast<std::size_t>(i)] = 10.0 / (i + 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(waterfill(d, 0.4, 1.0));
    }
}
BENCHMARK(BM_Waterfill)->Arg(2)->Arg(4)->Arg(8);

static void BM_DinkelbachBestResponse(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const CMat h = random_complex(m, m, 1);
    const CMat a = random_complex(m, m, 2);
    const CMat r = hermitize(CMat::Identity(m, m) + 0.2 * a * a.adjoint());
    for (auto _ : state) {
        benchmark::DoNotOptimize(dinkelbach_best_response(h, r, 1.0, 0.2, 1e-5));
    }
}
BENCHMARK(BM_DinkelbachBestResponse)->Arg(2)->Arg(4)->Arg(8);

static void BM_AdeeRound(benchmark::State& state) {
    NetworkConfig cfg;
    cfg.seed = 5;
    const ChannelSet ch = table1_instance(5);
    const Schedule sched = make_schedule(Schedule::Kind::simultaneous, cfg.K, cfg.T_max);
    const StrategyProfile q0 = default_initial_profile(ch, cfg.p_t_w());
    EngineOptions opts;
    opts.skip_ne_residual = true;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_adee(ch, sched, cfg, q0, opts));
    }
}
BENCHMARK(BM_AdeeRound);

static void BM_JacobianSpectralNorm(benchmark::State& state) {
    const ChannelSet ch = table1_instance(9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(jacobian_spectral_norm(ch, 0));
    }
}
BENCHMARK(BM_JacobianSpectralNorm);

BENCHMARK_MAIN();
