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

#include "eegame/channel_model.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "eegame/best_response.hpp"
#include "eegame/errors.hpp"
#include "eegame/rng.hpp"

namespace eegame {

void NetworkConfig::validate() const {
    if (K < 1 || M < 1 || N < 1)
        throw std::invalid_argument("NetworkConfig: K, M, N must all be >= 1");
    for (double v : {P_T_dBm, P_C_dBm, noise_dBm})
        if (!std::isfinite(v)) throw std::invalid_argument("NetworkConfig: powers must be finite");
    if (p_t_w() <= 0.0)
        throw std::invalid_argument("NetworkConfig: P_T must convert to positive watts");
    if (area_m <= 0.0 || direct_dist_m <= 0.0 || min_cross_dist_m < 0.0)
        throw std::invalid_argument("NetworkConfig: distances must be positive");
    if (eps <= 0.0) throw std::invalid_argument("NetworkConfig: eps must be > 0");
    if (T_max < 1) throw std::invalid_argument("NetworkConfig: T_max must be >= 1");
}

double path_loss_dB(double d_m, const PathLossModel& model) {
    if (!(d_m > 0.0)) throw std::domain_error("path_loss_dB: distance must be positive");
    return model.offset_dB + model.slope * std::log10(d_m);
}

double path_gain_linear(double d_m, const PathLossModel& model) {
    if (std::isinf(d_m)) return 0.0;  // d -> inf limit: zero gain
    return std::pow(10.0, -path_loss_dB(d_m, model) / 10.0);
}

namespace {

RMat distances_from_positions(const std::vector<Eigen::Vector2d>& tx,
                              const std::vector<Eigen::Vector2d>& rx) {
    const int k = static_cast<int>(tx.size());
    RMat d(k, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) d(j, i) = (tx[j] - rx[i]).norm();
    return d;
}

}  // namespace

Topology generate_topology(const NetworkConfig& cfg, const TopologyMode& mode) {
    cfg.validate();

    if (mode.kind == TopologyMode::Kind::symmetric_two_link) {
        if (cfg.K != 2)
            throw std::invalid_argument("generate_topology: symmetric_two_link requires K=2");
        Topology topo;
        topo.dist = RMat::Constant(2, 2, mode.d_cross);
        topo.dist(0, 0) = topo.dist(1, 1) = mode.d_direct;
        // Positions are synthetic in this mode; only the distances matter.
        topo.tx_pos = {{0.0, 0.0}, {mode.d_direct, 0.0}};
        topo.rx_pos = {{0.0, mode.d_direct}, {mode.d_direct, mode.d_direct}};
        return topo;
    }

    RngStream rng(derive_seed(cfg.seed, "topology"));
    constexpr int kRetryCap = 10000;

    std::vector<Eigen::Vector2d> tx;
    std::vector<Eigen::Vector2d> rx;
    tx.reserve(cfg.K);
    rx.reserve(cfg.K);

    int retries = 0;
    while (static_cast<int>(tx.size()) < cfg.K) {
        Eigen::Vector2d t{rng.next_uniform(0.0, cfg.area_m), rng.next_uniform(0.0, cfg.area_m)};
        double angle = rng.next_uniform(0.0, 2.0 * std::numbers::pi);
        Eigen::Vector2d r = t + cfg.direct_dist_m * Eigen::Vector2d{std::cos(angle), std::sin(angle)};

        bool ok = r.x() >= 0.0 && r.x() <= cfg.area_m && r.y() >= 0.0 && r.y() <= cfg.area_m;
        for (std::size_t j = 0; ok && j < tx.size(); ++j) {
            ok = (tx[j] - r).norm() >= cfg.min_cross_dist_m &&
                 (t - rx[j]).norm() >= cfg.min_cross_dist_m;
        }
        if (ok) {
            tx.push_back(t);
            rx.push_back(r);
        } else if (++retries > kRetryCap) {
            throw InfeasibleGeometryError(
                "generate_topology: rejection sampling exceeded 10000 retries; "
                "area too small for the requested link count and distances");
        }
    }

    Topology topo;
    topo.tx_pos = std::move(tx);
    topo.rx_pos = std::move(rx);
    topo.dist = distances_from_positions(topo.tx_pos, topo.rx_pos);
    return topo;
}

ChannelSet sample_channels(const Topology& topo, const NetworkConfig& cfg,
                           const PathLossModel& model, std::uint64_t seed) {
    cfg.validate();
    const int k_links = topo.links();
    if (k_links != cfg.K)
        throw std::invalid_argument("sample_channels: topology link count differs from cfg.K");

    ChannelSet ch;
    ch.sigma2_W = cfg.sigma2_w();
    ch.H.assign(k_links, std::vector<CMat>(k_links));

    for (int j = 0; j < k_links; ++j) {
        for (int k = 0; k < k_links; ++k) {
            const double gain = path_gain_linear(topo.dist(j, k), model);
            const double scale = std::sqrt(gain / ch.sigma2_W);
            // One substream per (j,k) pair: draws do not depend on loop order.
            RngStream rng(derive_seed(seed, "fading", static_cast<std::uint64_t>(j),
                                      static_cast<std::uint64_t>(k)));
            CMat h(cfg.N, cfg.M);
            for (int row = 0; row < cfg.N; ++row)
                for (int col = 0; col < cfg.M; ++col) h(row, col) = scale * rng.next_cnormal();
            ch.H[j][k] = std::move(h);
        }
    }
    return ch;
}

CMat interference_covariance(const ChannelSet& ch, const StrategyProfile& profile, int k) {
    const int k_links = ch.links();
    if (k < 0 || k >= k_links) throw std::invalid_argument("interference_covariance: bad link index");
    if (profile.links() != k_links)
        throw std::invalid_argument("interference_covariance: profile size mismatch");

    const int n = ch.rx_dim(k);
    CMat r = CMat::Identity(n, n);
    for (int j = 0; j < k_links; ++j) {
        if (j == k) continue;
        const CMat& h = ch.H[j][k];
        const CMat& q = profile.Q[j];
        if (h.rows() != n || h.cols() != q.rows() || q.rows() != q.cols())
            throw std::invalid_argument("interference_covariance: dimension mismatch");
        r.noalias() += h * q * h.adjoint();
    }
    return hermitize(r);
}

}  // namespace eegame
