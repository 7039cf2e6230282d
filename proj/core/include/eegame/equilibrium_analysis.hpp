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

#include "eegame/channel_model.hpp"

namespace eegame {

/// Per-link certificate pieces for the analytic NE-uniqueness test:
/// alpha_k = rho(H_kk^H H_kk) ||D_{Q_-k} R_k||_2 / lambda_min(H_kk^H T_k H_kk)^2
/// with T_k = (I + P_T sum_i H_ik H_ik^H)^{-1}. The NE is certified unique
/// when every alpha_k < sqrt(1/(K-1)).
struct AlphaParts {
    double alpha = 0.0;
    double rho_direct = 0.0;       ///< rho(H_kk^H H_kk)
    double jacobian_norm = 0.0;    ///< ||D_{Q_-k} R_k||_2
    double lambda_min_tk = 0.0;    ///< lambda_min(H_kk^H T_k H_kk)
};

struct UniquenessReport {
    std::vector<double> alpha;       ///< K values
    std::vector<AlphaParts> parts;   ///< per-link breakdown
    double bound = 0.0;              ///< sqrt(1/(K-1)); +inf sentinel for K=1
    bool satisfied = false;          ///< all alpha_k < bound
};

/// Spectral norm of the interference Jacobian
/// [H_1k^* (x) H_1k, ..., H_Kk^* (x) H_Kk] (j != k), which is constant in
/// Q_-k. Computed through the N^2 x N^2 Hermitian Gram matrix
/// sum_j (H^* H^T) (x) (H H^H). Throws std::invalid_argument for K = 1.
double jacobian_spectral_norm(const ChannelSet& ch, int k);

/// Same value from the explicitly assembled N^2 x (K-1)M^2 block matrix via
/// SVD; retained as an independent route for cross-checking.
double jacobian_spectral_norm_dense(const ChannelSet& ch, int k);

/// Assembles alpha_k from its three parts. Throws RankDeficiencyError when
/// H_kk^H T_k H_kk is numerically singular (reduce the game first).
AlphaParts compute_alpha(const ChannelSet& ch, int k, double P_T_W);

/// Evaluates the uniqueness condition for every link. K = 1 reports the
/// +inf-bound sentinel and is trivially satisfied.
UniquenessReport check_uniqueness(const ChannelSet& ch, double P_T_W);

/// Projection of the game onto the row spaces of the direct channels:
/// V_k holds the right singular vectors of H_kk for nonzero singular values
/// (sigma < 1e-12 sigma_max dropped), reduced channels are H_jk V_j, and
/// original-space covariances lift back as Q_k = V_k Qbar_k V_k^H.
struct ReducedGame {
    ChannelSet channels;
    std::vector<CMat> basis;  ///< V_k, M x rbar_k
    std::vector<int> rank;    ///< rbar_k; zero flags an inactive link

    /// Lift a reduced covariance of link k back to the original M x M space.
    CMat lift(int k, const CMat& q_reduced) const;
};
ReducedGame reduce_general_rank(const ChannelSet& ch);

struct SymmetricSweepSpec {
    int M = 2;  ///< transmit antennas
    int N = 2;  ///< receive antennas
    double d_direct = 1.0;
    std::vector<double> d_cross;   ///< sweep points
    double P_T_W = 1e-2;
    double sigma2_W = 1e-3;
    double pathloss_exponent = 3.5;
};

struct UniquenessProbPoint {
    double d_cross = 0.0;
    int trials = 0;
    int successes = 0;
    double probability = 0.0;
};

/// Monte Carlo probability that random symmetric two-link channels satisfy
/// the uniqueness condition, per cross distance. Fat or rank-deficient
/// direct channels are reduced before the test. Deterministic per seed.
std::vector<UniquenessProbPoint> uniqueness_probability(const SymmetricSweepSpec& spec,
                                                        int trials, std::uint64_t seed);

}  // namespace eegame
