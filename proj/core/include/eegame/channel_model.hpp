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
#include <vector>

#include "eegame/linalg.hpp"

namespace eegame {

inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watt_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

/// Full scenario parameterization. Defaults reproduce the reference
/// ad hoc network setup: 4 links, 4x4 antennas, 250 m square, 80 m direct
/// distance, 35 m minimum cross distance, -106 dBm noise, 23 dBm circuit
/// power, 30 dBm power budget, path loss 38.46 + 35 log10(d).
struct NetworkConfig {
    int K = 4;  ///< number of links (tx/rx pairs)
    int M = 4;  ///< transmit antennas
    int N = 4;  ///< receive antennas
    double P_T_dBm = 30.0;
    double P_C_dBm = 23.0;
    double noise_dBm = -106.0;
    double area_m = 250.0;
    double min_cross_dist_m = 35.0;
    double direct_dist_m = 80.0;
    double pathloss_offset_dB = 38.46;
    double pathloss_slope = 35.0;
    std::uint64_t seed = 1;
    double eps = 1e-5;  ///< Dinkelbach tolerance
    int T_max = 20;     ///< max game iterations

    double p_t_w() const { return dbm_to_watt(P_T_dBm); }
    double p_c_w() const { return dbm_to_watt(P_C_dBm); }
    double sigma2_w() const { return dbm_to_watt(noise_dBm); }

    /// Throws std::invalid_argument on broken invariants (K,M,N >= 1,
    /// finite powers, positive distances and tolerances).
    void validate() const;
};

/// dB path loss at distance d_m (meters): offset_dB + slope * log10(d_m).
struct PathLossModel {
    double offset_dB = 38.46;
    double slope = 35.0;

    static PathLossModel table1() { return {38.46, 35.0}; }
    static PathLossModel exponent(double gamma) { return {0.0, 10.0 * gamma}; }
    static PathLossModel from_config(const NetworkConfig& cfg) {
        return {cfg.pathloss_offset_dB, cfg.pathloss_slope};
    }
};

/// Path loss in dB. d_m = +inf is accepted as the zero-gain limit;
/// d_m <= 0 throws std::domain_error.
double path_loss_dB(double d_m, const PathLossModel& model);

/// Linear power gain 10^(-PL/10); zero in the d -> inf limit.
double path_gain_linear(double d_m, const PathLossModel& model);

struct Topology {
    std::vector<Eigen::Vector2d> tx_pos;
    std::vector<Eigen::Vector2d> rx_pos;
    /// dist(j, k) = distance from transmitter j to receiver k, meters.
    RMat dist;

    int links() const { return static_cast<int>(dist.rows()); }
};

struct TopologyMode {
    enum class Kind { random_square, symmetric_two_link };
    Kind kind = Kind::random_square;
    double d_direct = 0.0;  // symmetric mode only
    double d_cross = 0.0;   // symmetric mode only

    static TopologyMode random_square() { return {}; }
    static TopologyMode symmetric_two_link(double d_direct, double d_cross) {
        return {Kind::symmetric_two_link, d_direct, d_cross};
    }
};

/// Places links. Random mode: transmitters uniform in the square, each
/// receiver at distance direct_dist_m from its transmitter at a uniform
/// angle, redrawn until every cross distance is >= min_cross_dist_m and the
/// receiver stays in the area (cap 10000 retries, then
/// InfeasibleGeometryError). Symmetric mode (K=2 only): dist diagonal is
/// d_direct, off-diagonal d_cross; d_cross = +inf marks isolated links.
Topology generate_topology(const NetworkConfig& cfg, const TopologyMode& mode);

/// K x K grid of noise-normalized complex N x M channel matrices.
/// H[j][k] couples transmitter j into receiver k; after division by
/// sqrt(sigma2_W) the additive noise has identity covariance.
struct ChannelSet {
    std::vector<std::vector<CMat>> H;
    double sigma2_W = 1.0;

    int links() const { return static_cast<int>(H.size()); }
    /// Transmit dimension of link j (columns of its channels).
    int tx_dim(int j) const { return static_cast<int>(H[j][j].cols()); }
    int rx_dim(int k) const { return static_cast<int>(H[k][k].rows()); }
};

/// Independent Rayleigh fading: each entry of H[j][k] is CN(0,1) scaled by
/// sqrt(linear path gain) and divided by sqrt(sigma2_W). Pure function of
/// (topology, cfg, model, seed); per-pair substreams make the draw
/// independent of iteration order.
ChannelSet sample_channels(const Topology& topo, const NetworkConfig& cfg,
                           const PathLossModel& model, std::uint64_t seed);

// StrategyProfile lives in best_response.hpp; forward declared here so the
// interference assembly can consume it.
struct StrategyProfile;

/// Interference-plus-noise covariance at receiver k:
/// R_k = I + sum_{j != k} H[j][k] Q_j H[j][k]^H. Hermitian, eigenvalues >= 1.
/// Throws std::invalid_argument on dimension mismatch.
CMat interference_covariance(const ChannelSet& ch, const StrategyProfile& profile, int k);

}  // namespace eegame
