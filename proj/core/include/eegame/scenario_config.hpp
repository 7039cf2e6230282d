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

#include <istream>
#include <string>

#include "eegame/equilibrium_analysis.hpp"
#include "eegame/experiments.hpp"
#include "eegame/single_link.hpp"

namespace eegame {

// Flat key/value scenario files: one `key = value` per line, `#` comments,
// keys mirror the NetworkConfig field names. Unknown keys are rejected with
// ConfigError.

/// Scenario keys: the NetworkConfig fields plus name, topology
/// (random_square | symmetric_two_link | isolated), d_cross, sweep,
/// sweep_values, algorithms, schedules, n_channel_draws, output_path,
/// dump_traces, and the uniqueness-sweep keys d_cross_list, trials.
struct ParsedScenario {
    ScenarioSpec spec;
    // uniqueness-prob extras
    std::vector<double> d_cross_list;
    int trials = 2000;
};

ParsedScenario parse_scenario(std::istream& in);
ParsedScenario load_scenario(const std::string& path);

/// Spectrum files for the single-link analytics: keys d (comma list,
/// descending), P_C_W_list (comma list), optional P_T_W (default +inf).
struct SpectrumScenario {
    std::vector<double> d;
    std::vector<double> P_C_W_list;
    double P_T_W = std::numeric_limits<double>::infinity();
};

SpectrumScenario parse_spectrum(std::istream& in);
SpectrumScenario load_spectrum(const std::string& path);

}  // namespace eegame
