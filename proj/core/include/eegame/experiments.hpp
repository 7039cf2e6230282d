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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "eegame/channel_model.hpp"
#include "eegame/game_engine.hpp"

namespace eegame {

enum class SweepKind { none, P_T_dBm, P_C_dBm, antennas, D_direct, K, D_cross };
enum class Algorithm { ADEE, ADSE };
enum class ScenarioTopology { random_square, symmetric_two_link, isolated };

const char* to_string(SweepKind kind);
const char* to_string(Algorithm alg);

/// One experiment description: a base configuration plus an optional
/// one-dimensional sweep, the algorithms and schedules to run, and the
/// Monte Carlo averaging count.
struct ScenarioSpec {
    NetworkConfig base;
    SweepKind sweep = SweepKind::none;
    std::vector<double> sweep_values;  ///< ascending; empty only for sweep = none
    std::vector<Algorithm> algorithms = {Algorithm::ADEE};
    std::vector<Schedule::Kind> schedules = {Schedule::Kind::simultaneous};
    int n_channel_draws = 50;
    std::string output_path = "sweep.csv";
    std::string name = "scenario";
    ScenarioTopology topology = ScenarioTopology::random_square;
    double d_cross = 0.0;  ///< symmetric_two_link topology only
    bool dump_traces = false;

    void validate() const;
};

/// One aggregated table row: means over exactly n_channel_draws draws.
struct SweepRow {
    double sweep_value = 0.0;
    Algorithm algorithm = Algorithm::ADEE;
    Schedule::Kind schedule = Schedule::Kind::simultaneous;
    double sum_ee = 0.0;    ///< mean of sum_k EE_k, bits/Hz/Joule
    double sum_se = 0.0;    ///< mean of sum_k C_k, bits/s/Hz
    double mean_iters = 0.0;
    double conv_frac = 0.0;
};

inline constexpr const char* kSweepCsvHeader =
    "sweep_value,algorithm,schedule,sum_EE,sum_SE,mean_iters,conv_frac";

/// Runs every (sweep value x algorithm x schedule x draw) combination and
/// aggregates. Deterministic given spec.base.seed. Non-converged runs lower
/// conv_frac but are not fatal. When trace_dir is non-null and
/// spec.dump_traces is set, per-run GameTrace CSVs are written there.
std::vector<SweepRow> run_scenario(const ScenarioSpec& spec,
                                   const std::string* trace_dir = nullptr);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

enum class PlotMetric { sum_ee, sum_se, mean_iters };

/// One two-column (x, y) series file per (algorithm, schedule) curve, named
/// <scenario>_<algorithm>_<schedule>.dat with x ascending. Returns the
/// created file names. Throws std::runtime_error when out_dir is not
/// writable.
std::vector<std::string> emit_plotdata(const std::vector<SweepRow>& rows,
                                       const std::string& scenario_name, PlotMetric metric,
                                       const std::string& out_dir);

}  // namespace eegame
