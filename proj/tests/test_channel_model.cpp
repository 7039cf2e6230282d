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

#include <cmath>
#include <limits>

#include "doctest.h"
#include "eegame/best_response.hpp"
#include "eegame/channel_model.hpp"
#include "eegame/errors.hpp"
#include "eegame/rng.hpp"

using namespace eegame;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("path loss: table1 and exponent models") {
    CHECK(path_loss_dB(1.0, PathLossModel::table1()) == doctest::Approx(38.46));
    CHECK(path_loss_dB(80.0, PathLossModel::table1()) ==
          doctest::Approx(38.46 + 35.0 * std::log10(80.0)));
    CHECK(path_loss_dB(10.0, PathLossModel::exponent(3.5)) == doctest::Approx(35.0));
    CHECK_THROWS_AS(path_loss_dB(0.0, PathLossModel::table1()), std::domain_error);
    CHECK_THROWS_AS(path_loss_dB(-3.0, PathLossModel::table1()), std::domain_error);
}

TEST_CASE("path loss is strictly increasing in distance") {
    for (const auto model : {PathLossModel::table1(), PathLossModel::exponent(3.5)}) {
        double prev = path_loss_dB(0.5, model);
        for (double d = 1.0; d < 600.0; d *= 1.7) {
            const double cur = path_loss_dB(d, model);
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("symmetric two-link topology") {
    NetworkConfig cfg;
    cfg.K = 2;
    const Topology topo = generate_topology(cfg, TopologyMode::symmetric_two_link(1.0, 5.0));
    CHECK(topo.dist(0, 0) == 1.0);
    CHECK(topo.dist(1, 1) == 1.0);
    CHECK(topo.dist(0, 1) == 5.0);
    CHECK(topo.dist(1, 0) == 5.0);

    NetworkConfig bad = cfg;
    bad.K = 3;
    CHECK_THROWS_AS(generate_topology(bad, TopologyMode::symmetric_two_link(1.0, 5.0)),
                    std::invalid_argument);
}

TEST_CASE("random topology: deterministic, respects distances") {
    NetworkConfig cfg;  // Table-I defaults: K=4, 250 m square, 35 m cross floor
    cfg.seed = 42;
    const Topology a = generate_topology(cfg, TopologyMode::random_square());
    const Topology b = generate_topology(cfg, TopologyMode::random_square());
    CHECK(a.dist == b.dist);

    for (int j = 0; j < cfg.K; ++j) {
        CHECK(a.dist(j, j) == doctest::Approx(cfg.direct_dist_m).epsilon(1e-12));
        for (int k = 0; k < cfg.K; ++k) {
            if (j != k) CHECK(a.dist(j, k) >= cfg.min_cross_dist_m);
        }
    }

    NetworkConfig impossible = cfg;
    impossible.K = 40;
    impossible.area_m = 90.0;  // cannot fit 40 links with 35 m separations
    impossible.direct_dist_m = 10.0;
    CHECK_THROWS_AS(generate_topology(impossible, TopologyMode::random_square()),
                    InfeasibleGeometryError);
}

TEST_CASE("sample_channels: determinism and zero-gain limit") {
    NetworkConfig cfg;
    cfg.K = 2;
    cfg.seed = 7;
    Topology topo = generate_topology(cfg, TopologyMode::symmetric_two_link(80.0, kInf));

    const ChannelSet ch1 = sample_channels(topo, cfg, PathLossModel::table1(), 123);
    const ChannelSet ch2 = sample_channels(topo, cfg, PathLossModel::table1(), 123);
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) CHECK(ch1.H[j][k] == ch2.H[j][k]);

    // d -> inf flag gives exactly zero cross matrices.
    CHECK(ch1.H[0][1].norm() == 0.0);
    CHECK(ch1.H[1][0].norm() == 0.0);
    CHECK(ch1.H[0][0].norm() > 0.0);
    CHECK(ch1.H[0][0].rows() == cfg.N);
    CHECK(ch1.H[0][0].cols() == cfg.M);
}

TEST_CASE("sample_channels: empirical entry variance matches the path gain") {
    // Monte Carlo oracle: mean |entry|^2 over ~1e5 draws at linear gain g
    // and sigma^2 = 1 must be g within 3 standard errors (|e|^2 ~ g Exp(1),
    // so SE = g / sqrt(n)).
    NetworkConfig cfg;
    cfg.K = 1;
    cfg.M = 4;
    cfg.N = 4;
    cfg.noise_dBm = 30.0;  // 1 W, so normalization divides by 1
    Topology topo;
    topo.tx_pos = {{0.0, 0.0}};
    topo.rx_pos = {{10.0, 0.0}};
    topo.dist = RMat::Constant(1, 1, 10.0);

    const PathLossModel model = PathLossModel::exponent(2.0);  // 20 dB at d=10
    const double g = path_gain_linear(10.0, model);
    REQUIRE(g == doctest::Approx(1e-2));

    const int draws = 6250;  // 6250 * 16 entries = 1e5 samples
    double sum = 0.0;
    for (int i = 0; i < draws; ++i) {
        const ChannelSet ch = sample_channels(topo, cfg, model, 1000 + static_cast<std::uint64_t>(i));
        sum += ch.H[0][0].squaredNorm();
    }
    const double n = draws * 16.0;
    const double mean = sum / n;
    const double se = g / std::sqrt(n);
    CHECK(std::abs(mean - g) <= 3.0 * se);
}

TEST_CASE("interference covariance") {
    NetworkConfig cfg;
    cfg.K = 2;
    cfg.M = cfg.N = 2;
    cfg.seed = 5;
    const Topology topo = generate_topology(cfg, TopologyMode::symmetric_two_link(1.0, 2.0));
    const ChannelSet ch = sample_channels(topo, cfg, PathLossModel::exponent(2.0), 99);

    StrategyProfile zero;
    zero.P_T_W = 1.0;
    zero.Q = {CMat::Zero(2, 2), CMat::Zero(2, 2)};

    SUBCASE("all Q zero gives the identity") {
        const CMat r = interference_covariance(ch, zero, 0);
        CHECK((r - CMat::Identity(2, 2)).norm() == doctest::Approx(0.0));
    }

    SUBCASE("K=1 has no cross terms") {
        NetworkConfig c1;
        c1.K = 1;
        c1.M = c1.N = 2;
        Topology t1;
        t1.tx_pos = {{0, 0}};
        t1.rx_pos = {{1, 0}};
        t1.dist = RMat::Constant(1, 1, 1.0);
        const ChannelSet one = sample_channels(t1, c1, PathLossModel::exponent(2.0), 3);
        StrategyProfile p;
        p.P_T_W = 1.0;
        p.Q = {CMat::Identity(2, 2)};
        CHECK((interference_covariance(one, p, 0) - CMat::Identity(2, 2)).norm() ==
              doctest::Approx(0.0));
    }

    SUBCASE("rank-1 interferer matches direct arithmetic") {
        CVec v(2);
        v << std::complex<double>(0.6, 0.3), std::complex<double>(-0.2, 0.7);
        const double p = 0.8;
        StrategyProfile prof = zero;
        prof.Q[1] = p * v * v.adjoint();

        const CMat r = interference_covariance(ch, prof, 0);
        const CVec hv = ch.H[1][0] * v;
        const CMat expected = CMat::Identity(2, 2) + p * hv * hv.adjoint();
        CHECK((r - expected).norm() <= 1e-12 * expected.norm());
    }

    SUBCASE("R - I stays PSD for random PSD profiles") {
        for (int i = 0; i < 25; ++i) {
            RngStream rng(derive_seed(11, "psd", static_cast<std::uint64_t>(i)));
            CMat a(2, 2), b(2, 2);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    a(r, c) = rng.next_cnormal();
                    b(r, c) = rng.next_cnormal();
                }
            StrategyProfile prof;
            prof.P_T_W = 10.0;
            prof.Q = {hermitize(a * a.adjoint()), hermitize(b * b.adjoint())};
            for (int k = 0; k < 2; ++k) {
                const CMat r_k = interference_covariance(ch, prof, k);
                CHECK(min_eigenvalue(r_k) >= 1.0 - 1e-10);
            }
        }
    }

    SUBCASE("dimension mismatch is rejected") {
        StrategyProfile bad = zero;
        bad.Q[1] = CMat::Zero(3, 3);
        CHECK_THROWS_AS(interference_covariance(ch, bad, 0), std::invalid_argument);
    }
}

TEST_CASE("config validation and dBm conversion") {
    NetworkConfig cfg;
    CHECK(cfg.p_t_w() == doctest::Approx(1.0));          // 30 dBm
    CHECK(cfg.p_c_w() == doctest::Approx(0.19952623149688797));  // 23 dBm
    CHECK(cfg.sigma2_w() == doctest::Approx(std::pow(10.0, -13.6)));
    cfg.validate();

    NetworkConfig bad = cfg;
    bad.K = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.eps = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.noise_dBm = kInf;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
