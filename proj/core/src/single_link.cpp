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

#include "eegame/single_link.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace eegame {

namespace {
constexpr double kLn2 = std::numbers::ln2;
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_gains(const std::vector<double>& d) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (!(d[i] > 0.0) || !std::isfinite(d[i]))
            throw std::domain_error("spectrum gains must be positive and finite");
        if (i > 0 && d[i] > d[i - 1])
            throw std::domain_error("spectrum gains must be sorted descending");
    }
}

/// Largest l in 1..r with g_l <= P. Zero-width segments (repeated gains)
/// are skipped because the largest index wins.
int segment_of(const Spectrum& spec, double P) {
    int l = 1;
    for (int i = 2; i <= spec.streams(); ++i) {
        if (spec.g[static_cast<std::size_t>(i) - 1] <= P) l = i;
    }
    return l;
}

double inv_gain_prefix(const Spectrum& spec, int l) {
    double s = 0.0;
    for (int m = 0; m < l; ++m) s += 1.0 / spec.d[static_cast<std::size_t>(m)];
    return s;
}

}  // namespace

std::vector<double> breakpoints(const std::vector<double>& d) {
    check_gains(d);
    std::vector<double> g;
    g.reserve(d.size() + 1);
    double inv_sum = 0.0;
    for (std::size_t l = 1; l <= d.size(); ++l) {
        inv_sum += 1.0 / d[l - 1];
        g.push_back(static_cast<double>(l) / d[l - 1] - inv_sum);
    }
    if (!g.empty()) g[0] = 0.0;  // exactly, by construction l/d_1 - 1/d_1
    g.push_back(kInf);
    return g;
}

Spectrum Spectrum::from_gains(const std::vector<double>& d) {
    Spectrum s;
    s.d = d;
    s.g = breakpoints(d);
    return s;
}

SeValue se_closed_form(const Spectrum& spec, double P) {
    if (P < 0.0) throw std::domain_error("se_closed_form: P must be >= 0");
    if (spec.streams() == 0) return {0.0, 0};
    const int l = segment_of(spec, P);
    const double inv_sum = inv_gain_prefix(spec, l);
    double c = 0.0;
    for (int m = 0; m < l; ++m)
        c += std::log2(spec.d[static_cast<std::size_t>(m)] / l * (P + inv_sum));
    return {c, l};
}

double se_derivative(const Spectrum& spec, double P) {
    if (P < 0.0) throw std::domain_error("se_derivative: P must be >= 0");
    if (spec.streams() == 0) return 0.0;
    const int l = segment_of(spec, P);
    return l / (kLn2 * (P + inv_gain_prefix(spec, l)));
}

double se_second_derivative(const Spectrum& spec, double P) {
    if (P < 0.0) throw std::domain_error("se_second_derivative: P must be >= 0");
    if (spec.streams() == 0) return 0.0;
    const int l = segment_of(spec, P);
    const double t = P + inv_gain_prefix(spec, l);
    return -l / (kLn2 * t * t);
}

EeOptimum optimal_ee_power(const Spectrum& spec, double P_C_W, double P_T_W) {
    if (!(P_C_W > 0.0)) throw std::domain_error("optimal_ee_power: P_C_W must be > 0");

    EeOptimum out;
    if (spec.streams() == 0) {
        out.EE_star = 0.0;
        return out;
    }

    // f(P) = (C - P C')/C' is continuous, strictly increasing, f(0) = 0 and
    // f -> inf, so f(P) = P_C always has a unique root.
    auto f = [&](double P) {
        const double c = se_closed_form(spec, P).C;
        const double cp = se_derivative(spec, P);
        return c / cp - P;
    };

    double hi = 1.0;
    while (f(hi) <= P_C_W) {
        hi *= 2.0;
        if (hi > 1e300) throw std::runtime_error("optimal_ee_power: bracketing failed");
    }
    double lo = 0.0;
    while (hi - lo > 1e-10 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < P_C_W ? lo : hi) = mid;
    }
    double p_star = 0.5 * (lo + hi);

    if (p_star > P_T_W) {
        p_star = P_T_W;  // EE is unimodal, so the clamp is the constrained max
        out.budget_clamped = true;
    }
    out.P_star = p_star;
    out.SE_star = se_closed_form(spec, p_star).C;
    out.EE_star = out.SE_star / (p_star + P_C_W);
    return out;
}

double symmetric_high_power_limit(double alpha_sym, int K) {
    if (K < 2) throw std::domain_error("symmetric_high_power_limit: needs K >= 2");
    if (!(alpha_sym > 0.0))
        throw std::domain_error("symmetric_high_power_limit: alpha must be > 0");
    return K * std::log2(1.0 + 1.0 / (alpha_sym * alpha_sym * (K - 1)));
}

LowPowerReport low_power_regime_check(const Spectrum& spec, double P_C_W, double P_T_W) {
    if (!(P_C_W > 0.0)) throw std::domain_error("low_power_regime_check: P_C_W must be > 0");
    LowPowerReport rep;
    if (spec.streams() == 0) return rep;
    rep.EE_slope_at_zero = spec.d.front() / (kLn2 * P_C_W);
    const EeOptimum unconstrained = optimal_ee_power(spec, P_C_W);
    rep.full_power_used = unconstrained.P_star >= P_T_W;
    return rep;
}

}  // namespace eegame
