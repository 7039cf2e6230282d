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

#include <stdexcept>
#include <string>

namespace eegame {

/// Scenario/spectrum configuration problems (bad value, unknown key).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rejection sampling for a topology exceeded its retry cap.
struct InfeasibleGeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A custom update schedule violates A1 (causality) or A3 (nonempty sets).
struct InvalidScheduleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A direct channel is numerically rank deficient where full column rank is
/// required; callers should reduce the game first.
struct RankDeficiencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace eegame
