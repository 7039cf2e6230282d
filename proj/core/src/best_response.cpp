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

#include "eegame/best_response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace eegame {

namespace {
constexpr double kLn2 = std::numbers::ln2;
}

void StrategyProfile::validate() const {
    if (!(P_T_W > 0.0)) throw std::invalid_argument("StrategyProfile: P_T_W must be positive");
    for (const CMat& q : Q) {
        if (q.rows() != q.cols()) throw std::invalid_argument("StrategyProfile: Q_k not square");
        if ((q - q.adjoint()).norm() > 1e-10 * std::max(1.0, q.norm()))
            throw std::invalid_argument("StrategyProfile: Q_k not Hermitian");
        if (q.rows() > 0 && min_eigenvalue(q) < -1e-10 * std::max(1.0, q.norm()))
            throw std::invalid_argument("StrategyProfile: Q_k not PSD");
        if (q.trace().real() > P_T_W + 1e-9)
            throw std::invalid_argument("StrategyProfile: trace budget exceeded");
    }
}

double link_rate(const CMat& Q_k, const CMat& H_kk, const CMat& R_k) {
    Eigen::LLT<CMat> llt(R_k);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("link_rate: R_k is not positive definite");
    if (Q_k.rows() == 0 || H_kk.cols() == 0) return 0.0;  // inactive link

    // log2 det(I + H^H R^-1 H Q) = sum log2(1 + eig(S W S)) with Q = V S^2 V^H,
    // keeping the argument Hermitian PSD so the log-det is exactly real.
    const CMat w = H_kk.adjoint() * llt.solve(H_kk);
    Eigen::SelfAdjointEigenSolver<CMat> eq(hermitize(Q_k));
    if (eq.info() != Eigen::Success) throw std::runtime_error("link_rate: eigensolver failed");
    RVec s = eq.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const CMat b = s.asDiagonal() * (eq.eigenvectors().adjoint() * w * eq.eigenvectors()) *
                   s.asDiagonal();

    Eigen::SelfAdjointEigenSolver<CMat> eb(hermitize(b), Eigen::EigenvaluesOnly);
    double rate = 0.0;
    for (double lam : eb.eigenvalues()) rate += std::log2(1.0 + std::max(lam, 0.0));
    return rate;
}

double link_ee(const CMat& Q_k, const CMat& H_kk, const CMat& R_k, double P_C_W) {
    const double denom = Q_k.trace().real() + P_C_W;
    if (!(denom > 0.0))
        throw std::domain_error("link_ee: nonpositive total power, P_C_W must be > 0");
    return link_rate(Q_k, H_kk, R_k) / denom;
}

EffectiveChannel effective_channel_evd(const CMat& H_kk, const CMat& R_k) {
    Eigen::LLT<CMat> llt(R_k);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("effective_channel_evd: R_k is not positive definite");
    if (H_kk.cols() == 0) {  // inactive link, empty spectrum
        EffectiveChannel eff;
        eff.U.resize(0, 0);
        return eff;
    }
    const CMat w = hermitize(H_kk.adjoint() * llt.solve(H_kk));

    Eigen::SelfAdjointEigenSolver<CMat> es(w);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("effective_channel_evd: eigensolver failed");

    const RVec& ev = es.eigenvalues();  // ascending
    const double d_max = ev.size() > 0 ? ev.maxCoeff() : 0.0;
    const double threshold = 1e-12 * d_max;

    EffectiveChannel eff;
    const int m = static_cast<int>(ev.size());
    for (int i = m - 1; i >= 0; --i) {
        if (ev(i) > threshold && ev(i) > 0.0) eff.d.push_back(ev(i));
    }
    const int r = static_cast<int>(eff.d.size());
    eff.U.resize(H_kk.cols(), r);
    for (int i = 0; i < r; ++i) eff.U.col(i) = es.eigenvectors().col(m - 1 - i);
    return eff;
}

double WaterfillResult::total() const {
    double s = 0.0;
    for (double v : q) s += v;
    return s;
}

WaterfillResult waterfill(const std::vector<double>& d, double kappa, double P_T_W) {
    if (kappa < 0.0) throw std::domain_error("waterfill: kappa must be >= 0");
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (!(d[i] > 0.0)) throw std::domain_error("waterfill: gains must be positive");
        if (i > 0 && d[i] > d[i - 1] * (1.0 + 1e-12))
            throw std::domain_error("waterfill: gains must be sorted descending");
    }

    WaterfillResult res;
    res.q.assign(d.size(), 0.0);
    if (d.empty()) return res;

    auto alloc = [&](double lambda) {
        double total = 0.0;
        const double level = 1.0 / ((kappa + lambda) * kLn2);
        for (std::size_t m = 0; m < d.size(); ++m) {
            res.q[m] = std::max(0.0, level - 1.0 / d[m]);
            total += res.q[m];
        }
        return total;
    };

    if (kappa > 0.0 && alloc(0.0) <= P_T_W) {
        res.lambda = 0.0;  // budget slack, multiplier inactive
        return res;
    }
    if (kappa == 0.0 && std::isinf(P_T_W))
        throw std::domain_error("waterfill: kappa = 0 with unbounded budget is ill-posed");

    // Budget binds: bisect on lambda. level(lambda_hi) <= 1/d_max empties
    // every stream, so [0, lambda_hi] brackets the root of sum q = P_T.
    double lo = 0.0;
    double hi = d.front() / kLn2;
    double mid = hi;
    for (int it = 0; it < 500; ++it) {
        mid = 0.5 * (lo + hi);
        const double total = alloc(mid);
        if (std::abs(total - P_T_W) <= 1e-10 * P_T_W || (hi - lo) < 1e-14) break;
        (total > P_T_W ? lo : hi) = mid;
    }
    alloc(mid);
    res.lambda = mid;
    return res;
}

namespace {

CMat assemble_covariance(const EffectiveChannel& eff, const WaterfillResult& wf) {
    const int m = static_cast<int>(eff.U.rows());
    if (eff.rank() == 0) return CMat::Zero(m, m);
    RVec q = Eigen::Map<const RVec>(wf.q.data(), static_cast<Eigen::Index>(wf.q.size()));
    return hermitize(eff.U * q.asDiagonal() * eff.U.adjoint());
}

}  // namespace

CMat inner_solve(const EffectiveChannel& eff, double kappa, double P_T_W) {
    return assemble_covariance(eff, waterfill(eff.d, kappa, P_T_W));
}

CMat inner_solve(const CMat& H_kk, const CMat& R_k, double kappa, double P_T_W) {
    return inner_solve(effective_channel_evd(H_kk, R_k), kappa, P_T_W);
}

BestResponseResult dinkelbach_best_response(const CMat& H_kk, const CMat& R_k,
                                            double P_T_W, double P_C_W, double eps,
                                            int max_iters,
                                            std::vector<double>* kappa_trace) {
    if (!(eps > 0.0)) throw std::invalid_argument("dinkelbach_best_response: eps must be > 0");
    if (!(P_C_W > 0.0)) throw std::invalid_argument("dinkelbach_best_response: P_C_W must be > 0");

    // R_k is fixed for the whole loop, so the eigen-basis is computed once;
    // each iteration only re-waterfills the spectrum.
    const EffectiveChannel eff = effective_channel_evd(H_kk, R_k);

    auto build_result = [&](const WaterfillResult& wf, double rate, double power, int iters) {
        BestResponseResult out;
        out.Q_star = assemble_covariance(eff, wf);
        out.rate = rate;
        out.power = power;
        out.kappa_star = rate / (power + P_C_W);
        out.dinkelbach_iters = iters;
        return out;
    };

    double kappa = 0.0;
    WaterfillResult wf;
    double rate = 0.0;
    double power = 0.0;
    for (int n = 0; n < max_iters; ++n) {
        if (kappa_trace) kappa_trace->push_back(kappa);
        wf = waterfill(eff.d, kappa, P_T_W);
        rate = 0.0;
        power = 0.0;
        for (std::size_t m = 0; m < wf.q.size(); ++m) {
            rate += std::log2(1.0 + eff.d[m] * wf.q[m]);
            power += wf.q[m];
        }
        const double g = rate - kappa * (power + P_C_W);
        if (std::abs(g) <= eps) return build_result(wf, rate, power, n + 1);
        kappa = rate / (power + P_C_W);
    }
    throw NonConvergenceError("dinkelbach_best_response: iteration cap exceeded",
                              build_result(wf, rate, power, max_iters));
}

}  // namespace eegame
