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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "eegame/best_response.hpp"
#include "eegame/channel_model.hpp"

namespace eegame {

/// Totally asynchronous update schedule: per-link update-time sets T^k and a
/// staleness map tau(k, r, t) = committed timestamp of link r's covariance
/// as seen by link k at time t. Built-in kinds read the current committed
/// state (tau = t); custom schedules carry a bounded per-pair lag so that
/// tau(k, r, t) = max(0, t - lag(k, r)). Invariants: 0 <= tau <= t (A1),
/// t - tau <= staleness_bound (A2 surrogate), every T^k nonempty (A3 at a
/// finite horizon).
struct Schedule {
    enum class Kind { sequential, simultaneous, unbalanced, custom };

    Kind kind = Kind::simultaneous;
    int K = 1;
    int T_max = 20;
    std::vector<std::vector<int>> update_sets;  ///< sorted times within [0, T_max]
    RMat lag;                                   ///< K x K nonnegative integer lags
    int staleness_bound = 0;

    bool updates_at(int k, int t) const;
    int tau(int k, int r, int t) const;
};

const char* to_string(Schedule::Kind kind);

/// Built-in schedules over t in {0..T_max} with 1-indexed link patterns:
/// sequential T^k = {k, K+k, 2K+k, ...}; simultaneous T^k = all t;
/// unbalanced T^k = {k, 2k, 3k, ...} (lower-numbered links update more often).
Schedule make_schedule(Schedule::Kind kind, int K, int T_max);

/// Custom schedule from explicit update sets and a per-pair lag map.
/// Throws InvalidScheduleError when a set is empty, a time is outside
/// [0, T_max], or a lag is negative.
Schedule make_custom_schedule(int K, int T_max, std::vector<std::vector<int>> update_sets,
                              RMat lag);

enum class StopReason { converged, t_max_reached };

/// Iteration-indexed history of one game run. Row 0 holds the initial
/// profile; row t+1 the state committed after time step t.
struct GameTrace {
    std::vector<std::vector<double>> ee;     ///< [iter][link], bits/Hz/Joule
    std::vector<std::vector<double>> se;     ///< [iter][link], bits/s/Hz
    std::vector<std::vector<double>> power;  ///< [iter][link], watts
    StrategyProfile final_profile;
    bool converged = false;
    int iters_to_converge = 0;  ///< time steps executed before stopping
    double ne_residual = 0.0;   ///< max_k ||F_k(Q_-k) - Q_k||_F at termination
    StopReason stop_reason = StopReason::t_max_reached;

    int iterations() const { return static_cast<int>(ee.size()); }
    double sum_ee_final() const;
    double sum_se_final() const;
};

/// Writes the trace as CSV with header t,link,EE_bits_per_Hz_J,SE_bits_per_s_Hz,power_W.
void write_trace_csv(std::ostream& os, const GameTrace& trace);

/// Feasible interior default Q_k = (P_T/(2 M_k)) I.
StrategyProfile default_initial_profile(const ChannelSet& ch, double P_T_W);

/// Random feasible profile (PSD, trace uniformly in (0, P_T]).
StrategyProfile random_feasible_profile(const ChannelSet& ch, double P_T_W, std::uint64_t seed);

struct EngineOptions {
    /// Full-round profile-change stop threshold; negative means 1e-6 * P_T.
    double conv_tol = -1.0;
    /// Skip the closing best-response sweep that fills ne_residual.
    bool skip_ne_residual = false;
};

/// Asynchronous best-response dynamics for the EE game: at every t, each
/// link with t in T^k recomputes its Dinkelbach best response against the
/// interference built from the (possibly stale) committed profile; all other
/// links carry their covariance over. Stops once every link's most recent
/// update moved it by at most conv_tol in Frobenius norm, or at T_max.
/// Deterministic given (ch, schedule, cfg, Q_init).
GameTrace run_adee(const ChannelSet& ch, const Schedule& schedule, const NetworkConfig& cfg,
                   const StrategyProfile& Q_init, const EngineOptions& opts = {});

/// Same loop with the full-power spectral-efficiency update: water-filling
/// at kappa = 0 with the multiplier chosen so tr(Q) = P_T exactly.
GameTrace run_adse(const ChannelSet& ch, const Schedule& schedule, const NetworkConfig& cfg,
                   const StrategyProfile& Q_init, const EngineOptions& opts = {});

struct NeReport {
    bool is_ne = false;
    std::vector<double> residual;  ///< ||F_k - Q_k||_F per link
    std::vector<double> ee_gap;    ///< EE_k(F_k) - EE_k(Q_k) per link
    double max_gap() const;
    double max_residual() const;
};

/// Checks the fixed-point property of a profile: recomputes every link's
/// best response and reports residuals and EE gaps; is_ne iff the largest
/// gap is <= eps_ne.
NeReport verify_ne(const ChannelSet& ch, const StrategyProfile& profile,
                   const NetworkConfig& cfg, double eps_ne);

/// Ratio ||F(Q1) - F(Q2)|| / ||Q1 - Q2|| in the block-maximum norm
/// (max over links of the per-link Frobenius norm). Returns a negative
/// value when the pair coincides and the ratio is undefined.
double contraction_ratio(const ChannelSet& ch, const NetworkConfig& cfg,
                         const StrategyProfile& q1, const StrategyProfile& q2);

/// Empirical contraction modulus of the joint best-response map: max ratio
/// over n_pairs sampled pairs of random feasible profiles (identical pairs
/// are skipped).
double estimate_contraction(const ChannelSet& ch, const NetworkConfig& cfg, int n_pairs,
                            std::uint64_t seed);

}  // namespace eegame
