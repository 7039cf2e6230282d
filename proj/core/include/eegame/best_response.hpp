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
#include <vector>

#include "eegame/linalg.hpp"

namespace eegame {

/// Per-link transmit covariances (watts) under a shared trace budget.
struct StrategyProfile {
    std::vector<CMat> Q;
    double P_T_W = 1.0;

    int links() const { return static_cast<int>(Q.size()); }

    /// Hermitian within 1e-10, lambda_min >= -1e-10, tr <= P_T_W + 1e-9.
    void validate() const;
};

struct BestResponseResult {
    CMat Q_star;
    double kappa_star = 0.0;  ///< achieved EE, bits/Hz/Joule
    double rate = 0.0;        ///< SE at Q_star, bits/s/Hz
    double power = 0.0;       ///< tr(Q_star), watts
    int dinkelbach_iters = 0;
};

/// Dinkelbach loop exceeded its iteration cap; carries the last iterate.
struct NonConvergenceError : std::runtime_error {
    NonConvergenceError(const std::string& what, BestResponseResult last_arg)
        : std::runtime_error(what), last(std::move(last_arg)) {}
    BestResponseResult last;
};

/// log2 det(I + H_kk^H R_k^{-1} H_kk Q_k), evaluated through Hermitian
/// eigenvalues so the result is exactly real and nonnegative.
/// Throws std::runtime_error if R_k is not positive definite.
double link_rate(const CMat& Q_k, const CMat& H_kk, const CMat& R_k);

/// link_rate / (tr(Q_k) + P_C_W). Throws std::domain_error when the
/// denominator is not positive.
double link_ee(const CMat& Q_k, const CMat& H_kk, const CMat& R_k, double P_C_W);

/// Eigendecomposition H_kk^H R_k^{-1} H_kk = U diag(d) U^H restricted to the
/// numerically nonzero spectrum (threshold 1e-12 * d_max).
struct EffectiveChannel {
    CMat U;              ///< M x r, semi-unitary columns
    std::vector<double> d;  ///< r positive eigenvalues, descending
    int rank() const { return static_cast<int>(d.size()); }
};
EffectiveChannel effective_channel_evd(const CMat& H_kk, const CMat& R_k);

/// Water-filling powers q_m = [1/((kappa+lambda) ln2) - 1/d_m]^+ over
/// descending positive gains d. lambda >= 0 is found by bisection so that
/// either lambda = 0 with sum q <= P_T, or sum q = P_T (complementary
/// slackness within 1e-10 * P_T).
struct WaterfillResult {
    std::vector<double> q;
    double lambda = 0.0;
    double total() const;
};
WaterfillResult waterfill(const std::vector<double>& d, double kappa, double P_T_W);

/// Solution of the fixed-kappa subproblem: Q = U diag(waterfill(d,kappa)) U^H.
CMat inner_solve(const CMat& H_kk, const CMat& R_k, double kappa, double P_T_W);
CMat inner_solve(const EffectiveChannel& eff, double kappa, double P_T_W);

/// Dinkelbach iteration for the per-link EE maximizer. Starts at kappa = 0
/// (so G(kappa_0) >= 0 holds) and stops once |G(kappa_n)| <= eps; the
/// reported kappa_star is the EE actually achieved by the returned
/// covariance. kappa_trace, when non-null, receives the parameter sequence,
/// which is nondecreasing. Throws NonConvergenceError after max_iters.
BestResponseResult dinkelbach_best_response(const CMat& H_kk, const CMat& R_k,
                                            double P_T_W, double P_C_W, double eps,
                                            int max_iters = 100,
                                            std::vector<double>* kappa_trace = nullptr);

}  // namespace eegame
