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

#include "eegame/game_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "eegame/errors.hpp"
#include "eegame/rng.hpp"

namespace eegame {

bool Schedule::updates_at(int k, int t) const {
    const auto& set = update_sets[static_cast<std::size_t>(k)];
    return std::binary_search(set.begin(), set.end(), t);
}

int Schedule::tau(int k, int r, int t) const {
    const int lagged = t - static_cast<int>(lag(k, r));
    return std::max(0, lagged);  // A1: 0 <= tau <= t
}

const char* to_string(Schedule::Kind kind) {
    switch (kind) {
        case Schedule::Kind::sequential: return "sequential";
        case Schedule::Kind::simultaneous: return "simultaneous";
        case Schedule::Kind::unbalanced: return "unbalanced";
        case Schedule::Kind::custom: return "custom";
    }
    return "unknown";
}

Schedule make_schedule(Schedule::Kind kind, int K, int T_max) {
    if (K < 1 || T_max < 1) throw std::invalid_argument("make_schedule: K, T_max must be >= 1");
    if (kind == Schedule::Kind::custom)
        throw std::invalid_argument("make_schedule: use make_custom_schedule for custom kinds");

    Schedule s;
    s.kind = kind;
    s.K = K;
    s.T_max = T_max;
    s.lag = RMat::Zero(K, K);
    s.staleness_bound = 0;
    s.update_sets.assign(static_cast<std::size_t>(K), {});

    for (int k = 0; k < K; ++k) {
        const int k1 = k + 1;  // 1-indexed link id in the update patterns
        auto& set = s.update_sets[static_cast<std::size_t>(k)];
        switch (kind) {
            case Schedule::Kind::sequential:
                for (int t = k1; t <= T_max; t += K) set.push_back(t);
                break;
            case Schedule::Kind::simultaneous:
                for (int t = 0; t <= T_max; ++t) set.push_back(t);
                break;
            case Schedule::Kind::unbalanced:
                for (int t = k1; t <= T_max; t += k1) set.push_back(t);
                break;
            case Schedule::Kind::custom: break;
        }
        if (set.empty())
            throw InvalidScheduleError("make_schedule: T_max too small, link " +
                                       std::to_string(k1) + " never updates");
    }
    return s;
}

Schedule make_custom_schedule(int K, int T_max, std::vector<std::vector<int>> update_sets,
                              RMat lag) {
    if (K < 1 || T_max < 1) throw std::invalid_argument("make_custom_schedule: K, T_max >= 1");
    if (static_cast<int>(update_sets.size()) != K)
        throw InvalidScheduleError("make_custom_schedule: need one update set per link");
    if (lag.rows() != K || lag.cols() != K)
        throw InvalidScheduleError("make_custom_schedule: lag map must be K x K");

    Schedule s;
    s.kind = Schedule::Kind::custom;
    s.K = K;
    s.T_max = T_max;

    int max_lag = 0;
    for (int k = 0; k < K; ++k) {
        for (int r = 0; r < K; ++r) {
            const double l = lag(k, r);
            if (l < 0.0 || l != std::floor(l))
                throw InvalidScheduleError("make_custom_schedule: lags must be nonnegative integers");
            max_lag = std::max(max_lag, static_cast<int>(l));
        }
    }
    for (auto& set : update_sets) {
        if (set.empty())
            throw InvalidScheduleError("make_custom_schedule: empty update set violates A3");
        std::sort(set.begin(), set.end());
        if (set.front() < 0 || set.back() > T_max)
            throw InvalidScheduleError("make_custom_schedule: update times must lie in [0, T_max]");
    }
    s.update_sets = std::move(update_sets);
    s.lag = std::move(lag);
    s.staleness_bound = max_lag;
    return s;
}

double GameTrace::sum_ee_final() const {
    double s = 0.0;
    for (double v : ee.back()) s += v;
    return s;
}

double GameTrace::sum_se_final() const {
    double s = 0.0;
    for (double v : se.back()) s += v;
    return s;
}

void write_trace_csv(std::ostream& os, const GameTrace& trace) {
    os << "t,link,EE_bits_per_Hz_J,SE_bits_per_s_Hz,power_W\n";
    char buf[160];
    for (std::size_t t = 0; t < trace.ee.size(); ++t) {
        for (std::size_t k = 0; k < trace.ee[t].size(); ++k) {
            std::snprintf(buf, sizeof(buf), "%zu,%zu,%.12g,%.12g,%.12g\n", t, k + 1,
                          trace.ee[t][k], trace.se[t][k], trace.power[t][k]);
            os << buf;
        }
    }
}

StrategyProfile default_initial_profile(const ChannelSet& ch, double P_T_W) {
    StrategyProfile p;
    p.P_T_W = P_T_W;
    p.Q.reserve(static_cast<std::size_t>(ch.links()));
    for (int k = 0; k < ch.links(); ++k) {
        const int m = ch.tx_dim(k);
        p.Q.push_back(m > 0 ? CMat(P_T_W / (2.0 * m) * CMat::Identity(m, m)) : CMat(0, 0));
    }
    return p;
}

StrategyProfile random_feasible_profile(const ChannelSet& ch, double P_T_W, std::uint64_t seed) {
    StrategyProfile p;
    p.P_T_W = P_T_W;
    for (int k = 0; k < ch.links(); ++k) {
        const int m = ch.tx_dim(k);
        RngStream rng(derive_seed(seed, "profile", static_cast<std::uint64_t>(k)));
        CMat a(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) a(i, j) = rng.next_cnormal();
        CMat q = a * a.adjoint();
        const double tr = q.trace().real();
        const double target = rng.next_uniform(0.0, 1.0) * P_T_W;
        if (tr > 0.0) q *= target / tr;
        p.Q.push_back(hermitize(q));
    }
    return p;
}

namespace {

/// Per-link metrics of the committed profile, appended as one trace row.
void record_row(GameTrace& trace, const ChannelSet& ch, const StrategyProfile& prof,
                double P_C_W) {
    const int K = ch.links();
    std::vector<double> ee(static_cast<std::size_t>(K));
    std::vector<double> se(static_cast<std::size_t>(K));
    std::vector<double> pw(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        const CMat r = interference_covariance(ch, prof, k);
        se[static_cast<std::size_t>(k)] = link_rate(prof.Q[static_cast<std::size_t>(k)], ch.H[k][k], r);
        pw[static_cast<std::size_t>(k)] = prof.Q[static_cast<std::size_t>(k)].trace().real();
        ee[static_cast<std::size_t>(k)] =
            se[static_cast<std::size_t>(k)] / (pw[static_cast<std::size_t>(k)] + P_C_W);
    }
    trace.ee.push_back(std::move(ee));
    trace.se.push_back(std::move(se));
    trace.power.push_back(std::move(pw));
}

/// Shared asynchronous loop; `full_power` switches the per-link update from
/// the Dinkelbach EE response to the kappa = 0 full-budget water-filling.
GameTrace run_dynamics(const ChannelSet& ch, const Schedule& schedule, const NetworkConfig& cfg,
                       const StrategyProfile& Q_init, const EngineOptions& opts,
                       bool full_power) {
    cfg.validate();
    Q_init.validate();
    const int K = ch.links();
    if (schedule.K != K) throw std::invalid_argument("run: schedule link count mismatch");
    if (Q_init.links() != K) throw std::invalid_argument("run: Q_init link count mismatch");

    const double P_T = cfg.p_t_w();
    const double P_C = cfg.p_c_w();
    const double conv_tol = opts.conv_tol >= 0.0 ? opts.conv_tol : 1e-6 * P_T;

    // Ring of the last B+1 committed profiles; stale reads index into it.
    const int depth = schedule.staleness_bound + 1;
    std::vector<StrategyProfile> ring(static_cast<std::size_t>(depth), Q_init);

    StrategyProfile current = Q_init;
    GameTrace trace;
    record_row(trace, ch, current, P_C);

    std::vector<double> last_change(static_cast<std::size_t>(K),
                                    std::numeric_limits<double>::infinity());
    std::vector<bool> updated_once(static_cast<std::size_t>(K), false);

    int steps = 0;
    bool converged = false;
    for (int t = 0; t <= schedule.T_max && !converged; ++t) {
        StrategyProfile next = current;
        for (int k = 0; k < K; ++k) {
            if (!schedule.updates_at(k, t)) continue;

            // Assemble the interference this link measured: covariances of
            // the other links at their (possibly stale) committed times.
            // No update at time t observes another commit from time t.
            StrategyProfile seen = current;
            for (int r = 0; r < K; ++r) {
                if (r == k) continue;
                const int tr = schedule.tau(k, r, t);
                seen.Q[static_cast<std::size_t>(r)] =
                    ring[static_cast<std::size_t>(tr % depth)].Q[static_cast<std::size_t>(r)];
            }
            const CMat r_k = interference_covariance(ch, seen, k);

            CMat q_new;
            try {
                if (full_power) {
                    q_new = inner_solve(ch.H[k][k], r_k, 0.0, P_T);
                } else {
                    q_new = dinkelbach_best_response(ch.H[k][k], r_k, P_T, P_C, cfg.eps).Q_star;
                }
            } catch (const NonConvergenceError& e) {
                throw std::runtime_error("best response failed at t=" + std::to_string(t) +
                                         " link=" + std::to_string(k + 1) + ": " + e.what());
            }

            last_change[static_cast<std::size_t>(k)] =
                (q_new - current.Q[static_cast<std::size_t>(k)]).norm();
            updated_once[static_cast<std::size_t>(k)] = true;
            next.Q[static_cast<std::size_t>(k)] = std::move(q_new);
        }

        current = std::move(next);
        ring[static_cast<std::size_t>((t + 1) % depth)] = current;
        record_row(trace, ch, current, P_C);
        steps = t + 1;

        // Stop once a full round of updates moved every link by <= conv_tol.
        converged = std::all_of(updated_once.begin(), updated_once.end(), [](bool b) { return b; }) &&
                    *std::max_element(last_change.begin(), last_change.end()) <= conv_tol;
    }

    trace.final_profile = current;
    trace.converged = converged;
    trace.stop_reason = converged ? StopReason::converged : StopReason::t_max_reached;
    trace.iters_to_converge = steps;

    if (!opts.skip_ne_residual) {
        double res = 0.0;
        for (int k = 0; k < K; ++k) {
            const CMat r_k = interference_covariance(ch, current, k);
            CMat f_k;
            if (full_power)
                f_k = inner_solve(ch.H[k][k], r_k, 0.0, P_T);
            else
                f_k = dinkelbach_best_response(ch.H[k][k], r_k, P_T, P_C, cfg.eps).Q_star;
            res = std::max(res, (f_k - current.Q[static_cast<std::size_t>(k)]).norm());
        }
        trace.ne_residual = res;
    }
    return trace;
}

}  // namespace

GameTrace run_adee(const ChannelSet& ch, const Schedule& schedule, const NetworkConfig& cfg,
                   const StrategyProfile& Q_init, const EngineOptions& opts) {
    return run_dynamics(ch, schedule, cfg, Q_init, opts, /*full_power=*/false);
}

GameTrace run_adse(const ChannelSet& ch, const Schedule& schedule, const NetworkConfig& cfg,
                   const StrategyProfile& Q_init, const EngineOptions& opts) {
    return run_dynamics(ch, schedule, cfg, Q_init, opts, /*full_power=*/true);
}

double NeReport::max_gap() const {
    double m = -std::numeric_limits<double>::infinity();
    for (double g : ee_gap) m = std::max(m, g);
    return m;
}

double NeReport::max_residual() const {
    double m = 0.0;
    for (double r : residual) m = std::max(m, r);
    return m;
}

NeReport verify_ne(const ChannelSet& ch, const StrategyProfile& profile,
                   const NetworkConfig& cfg, double eps_ne) {
    profile.validate();
    const int K = ch.links();
    const double P_C = cfg.p_c_w();

    NeReport rep;
    for (int k = 0; k < K; ++k) {
        const CMat r_k = interference_covariance(ch, profile, k);
        const BestResponseResult br =
            dinkelbach_best_response(ch.H[k][k], r_k, cfg.p_t_w(), P_C, cfg.eps);
        const double ee_now = link_ee(profile.Q[static_cast<std::size_t>(k)], ch.H[k][k], r_k, P_C);
        rep.residual.push_back((br.Q_star - profile.Q[static_cast<std::size_t>(k)]).norm());
        rep.ee_gap.push_back(br.kappa_star - ee_now);
    }
    rep.is_ne = rep.max_gap() <= eps_ne;
    return rep;
}

double contraction_ratio(const ChannelSet& ch, const NetworkConfig& cfg,
                         const StrategyProfile& q1, const StrategyProfile& q2) {
    const int K = ch.links();
    double den = 0.0;
    for (int k = 0; k < K; ++k)
        den = std::max(den, (q1.Q[static_cast<std::size_t>(k)] - q2.Q[static_cast<std::size_t>(k)]).norm());
    if (den == 0.0) return -1.0;  // identical pair, ratio undefined

    double num = 0.0;
    for (int k = 0; k < K; ++k) {
        const CMat f1 = dinkelbach_best_response(ch.H[k][k], interference_covariance(ch, q1, k),
                                                 cfg.p_t_w(), cfg.p_c_w(), cfg.eps)
                            .Q_star;
        const CMat f2 = dinkelbach_best_response(ch.H[k][k], interference_covariance(ch, q2, k),
                                                 cfg.p_t_w(), cfg.p_c_w(), cfg.eps)
                            .Q_star;
        num = std::max(num, (f1 - f2).norm());
    }
    return num / den;
}

double estimate_contraction(const ChannelSet& ch, const NetworkConfig& cfg, int n_pairs,
                            std::uint64_t seed) {
    if (n_pairs < 1) throw std::invalid_argument("estimate_contraction: n_pairs must be >= 1");
    const double P_T = cfg.p_t_w();
    double modulus = 0.0;
    for (int i = 0; i < n_pairs; ++i) {
        const auto s = static_cast<std::uint64_t>(i);
        const StrategyProfile a = random_feasible_profile(ch, P_T, derive_seed(seed, "pairA", s));
        const StrategyProfile b = random_feasible_profile(ch, P_T, derive_seed(seed, "pairB", s));
        const double ratio = contraction_ratio(ch, cfg, a, b);
        if (ratio >= 0.0) modulus = std::max(modulus, ratio);
    }
    return modulus;
}

}  // namespace eegame
