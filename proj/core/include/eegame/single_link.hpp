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

#include <limits>
#include <vector>

namespace eegame {

// Closed-form machinery for one isolated link: the water-filled SE of a
// fixed spectrum is piecewise-smooth in the total power P, with breakpoints
// where an extra eigen-stream activates. Everything here is analytic; no
// iterative solver is involved except the 1-D root find for the EE optimum.

/// Descending positive eigenvalues of H^H H plus the activation breakpoints
/// g_1 = 0 <= g_2 <= ... <= g_r < g_{r+1} = +inf.
struct Spectrum {
    std::vector<double> d;
    std::vector<double> g;

    int streams() const { return static_cast<int>(d.size()); }

    /// Validates d and computes the breakpoints.
    static Spectrum from_gains(const std::vector<double>& d);
};

/// g_l = l/d_l - sum_{m<=l} 1/d_m for l = 1..r, followed by +inf.
/// Throws std::domain_error for unsorted or nonpositive gains.
std::vector<double> breakpoints(const std::vector<double>& d);

struct SeValue {
    double C = 0.0;       ///< bits/s/Hz
    int active_streams = 0;  ///< segment index l of P
};

/// Water-filled SE at total power P >= 0:
/// C(P) = sum_{m<=l} log2((d_m/l)(P + sum_{m<=l} 1/d_m)) on [g_l, g_{l+1}].
SeValue se_closed_form(const Spectrum& spec, double P);

/// dC/dP = l / (ln2 (P + sum_{m<=l} 1/d_m)); one-sided limits agree at the
/// breakpoints where the value is d_{l+1}/ln2.
double se_derivative(const Spectrum& spec, double P);

/// d2C/dP2 inside segment l; discontinuous across breakpoints.
double se_second_derivative(const Spectrum& spec, double P);

struct EeOptimum {
    double P_star = 0.0;
    double EE_star = 0.0;
    double SE_star = 0.0;
    bool budget_clamped = false;
};

/// Maximizer of EE(P) = C(P)/(P + P_C). Unconstrained (P_T_W = +inf): the
/// unique root of the strictly increasing f(P) = (C - P C')/C' = P_C,
/// bracketed by doubling and bisected to 1e-10 relative in P. With a finite
/// budget the unimodality of EE makes the answer min(root, P_T_W).
EeOptimum optimal_ee_power(const Spectrum& spec, double P_C_W,
                           double P_T_W = std::numeric_limits<double>::infinity());

/// High-power sum-SE limit of the full-power game on the symmetric channel
/// construction: K log2(1 + 1/(alpha^2 (K-1))). Throws for K < 2.
double symmetric_high_power_limit(double alpha_sym, int K);

struct LowPowerReport {
    bool full_power_used = false;
    double EE_slope_at_zero = 0.0;  ///< d_1 / (ln2 P_C)
};

/// EE'(0+) and whether the unconstrained EE optimum sits at or beyond the
/// budget (so a budget-limited link transmits at full power).
LowPowerReport low_power_regime_check(const Spectrum& spec, double P_C_W, double P_T_W);

}  // namespace eegame
