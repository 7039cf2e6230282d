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

#include "eegame/equilibrium_analysis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "eegame/errors.hpp"
#include "eegame/rng.hpp"

namespace eegame {

double jacobian_spectral_norm(const ChannelSet& ch, int k) {
    const int K = ch.links();
    if (K < 2) throw std::invalid_argument("jacobian_spectral_norm: undefined for K = 1");
    if (k < 0 || k >= K) throw std::invalid_argument("jacobian_spectral_norm: bad link index");

    const int n = ch.rx_dim(k);
    CMat gram = CMat::Zero(n * n, n * n);
    for (int j = 0; j < K; ++j) {
        if (j == k) continue;
        const CMat& h = ch.H[j][k];
        gram += kronecker(h.conjugate() * h.transpose(), h * h.adjoint());
    }
    return std::sqrt(std::max(0.0, max_eigenvalue(hermitize(gram))));
}

double jacobian_spectral_norm_dense(const ChannelSet& ch, int k) {
    const int K = ch.links();
    if (K < 2) throw std::invalid_argument("jacobian_spectral_norm_dense: undefined for K = 1");

    const int n = ch.rx_dim(k);
    Eigen::Index cols = 0;
    for (int j = 0; j < K; ++j)
        if (j != k) cols += static_cast<Eigen::Index>(ch.tx_dim(j)) * ch.tx_dim(j);

    CMat jac(n * n, cols);
    Eigen::Index at = 0;
    for (int j = 0; j < K; ++j) {
        if (j == k) continue;
        const CMat& h = ch.H[j][k];
        const Eigen::Index w = static_cast<Eigen::Index>(h.cols()) * h.cols();
        jac.block(0, at, n * n, w) = kronecker(h.conjugate(), h);
        at += w;
    }
    Eigen::JacobiSVD<CMat> svd(jac);
    return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

AlphaParts compute_alpha(const ChannelSet& ch, int k, double P_T_W) {
    const int K = ch.links();
    if (k < 0 || k >= K) throw std::invalid_argument("compute_alpha: bad link index");
    const CMat& h_kk = ch.H[k][k];
    if (h_kk.cols() == 0) return AlphaParts{};  // inactive link, no coupling
    const int n = ch.rx_dim(k);

    CMat t_inv = CMat::Identity(n, n);
    for (int i = 0; i < K; ++i)
        t_inv.noalias() += P_T_W * ch.H[i][k] * ch.H[i][k].adjoint();

    // H^H T H with T = t_inv^{-1}, evaluated through a solve.
    const CMat htk = hermitize(h_kk.adjoint() * Eigen::LLT<CMat>(hermitize(t_inv)).solve(h_kk));

    AlphaParts parts;
    parts.rho_direct = std::max(0.0, max_eigenvalue(hermitize(h_kk.adjoint() * h_kk)));
    parts.jacobian_norm = K >= 2 ? jacobian_spectral_norm(ch, k) : 0.0;
    const double lam_min = min_eigenvalue(htk);
    const double lam_max = std::max(0.0, max_eigenvalue(htk));
    parts.lambda_min_tk = lam_min;

    if (lam_min <= 1e-12 * lam_max || lam_min <= 0.0)
        throw RankDeficiencyError(
            "compute_alpha: direct channel of link " + std::to_string(k + 1) +
            " is rank deficient; apply reduce_general_rank first");

    parts.alpha = parts.rho_direct * parts.jacobian_norm / (lam_min * lam_min);
    return parts;
}

UniquenessReport check_uniqueness(const ChannelSet& ch, double P_T_W) {
    const int K = ch.links();
    UniquenessReport rep;
    if (K == 1) {
        rep.bound = std::numeric_limits<double>::infinity();
        rep.alpha = {0.0};
        rep.parts = {AlphaParts{}};
        rep.satisfied = true;
        return rep;
    }
    rep.bound = std::sqrt(1.0 / (K - 1));
    rep.satisfied = true;
    for (int k = 0; k < K; ++k) {
        const AlphaParts parts = compute_alpha(ch, k, P_T_W);
        rep.parts.push_back(parts);
        rep.alpha.push_back(parts.alpha);
        if (!(parts.alpha < rep.bound)) rep.satisfied = false;
    }
    return rep;
}

CMat ReducedGame::lift(int k, const CMat& q_reduced) const {
    const CMat& v = basis[static_cast<std::size_t>(k)];
    if (q_reduced.rows() != v.cols())
        throw std::invalid_argument("ReducedGame::lift: reduced covariance size mismatch");
    return hermitize(v * q_reduced * v.adjoint());
}

ReducedGame reduce_general_rank(const ChannelSet& ch) {
    const int K = ch.links();
    ReducedGame red;
    red.basis.reserve(static_cast<std::size_t>(K));
    red.rank.reserve(static_cast<std::size_t>(K));

    for (int k = 0; k < K; ++k) {
        Eigen::JacobiSVD<CMat> svd(ch.H[k][k], Eigen::ComputeThinV);
        const auto& sv = svd.singularValues();
        const double s_max = sv.size() > 0 ? sv(0) : 0.0;
        int r = 0;
        while (r < sv.size() && sv(r) > 1e-12 * s_max && sv(r) > 0.0) ++r;
        red.rank.push_back(r);
        red.basis.push_back(svd.matrixV().leftCols(r));
    }

    red.channels.sigma2_W = ch.sigma2_W;
    red.channels.H.assign(static_cast<std::size_t>(K), std::vector<CMat>(static_cast<std::size_t>(K)));
    for (int j = 0; j < K; ++j)
        for (int k = 0; k < K; ++k)
            red.channels.H[j][k] = ch.H[j][k] * red.basis[static_cast<std::size_t>(j)];
    return red;
}

std::vector<UniquenessProbPoint> uniqueness_probability(const SymmetricSweepSpec& spec,
                                                        int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("uniqueness_probability: trials must be >= 1");

    NetworkConfig cfg;
    cfg.K = 2;
    cfg.M = spec.M;
    cfg.N = spec.N;
    cfg.noise_dBm = watt_to_dbm(spec.sigma2_W);
    cfg.P_T_dBm = watt_to_dbm(spec.P_T_W);
    const PathLossModel model = PathLossModel::exponent(spec.pathloss_exponent);

    std::vector<UniquenessProbPoint> out;
    for (std::size_t i = 0; i < spec.d_cross.size(); ++i) {
        const Topology topo = generate_topology(
            cfg, TopologyMode::symmetric_two_link(spec.d_direct, spec.d_cross[i]));

        int successes = 0;
        for (int t = 0; t < trials; ++t) {
            const std::uint64_t trial_seed =
                derive_seed(seed, "uniq", i, static_cast<std::uint64_t>(t));
            const ChannelSet ch = sample_channels(topo, cfg, model, trial_seed);

            // Fat or rank-deficient direct channels go through the reduced
            // game; the projection leaves alpha unchanged for full-rank links.
            bool ok = false;
            try {
                if (spec.M > spec.N) {
                    ok = check_uniqueness(reduce_general_rank(ch).channels, spec.P_T_W).satisfied;
                } else {
                    ok = check_uniqueness(ch, spec.P_T_W).satisfied;
                }
            } catch (const RankDeficiencyError&) {
                ok = check_uniqueness(reduce_general_rank(ch).channels, spec.P_T_W).satisfied;
            }
            if (ok) ++successes;
        }
        out.push_back({spec.d_cross[i], trials, successes,
                       static_cast<double>(successes) / trials});
    }
    return out;
}

}  // namespace eegame
