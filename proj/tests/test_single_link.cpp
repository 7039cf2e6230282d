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
#include <numbers>

#include "doctest.h"
#include "eegame/best_response.hpp"
#include "eegame/rng.hpp"
#include "eegame/single_link.hpp"

using namespace eegame;

namespace {
constexpr double kLn2 = std::numbers::ln2;
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("breakpoints") {
    SUBCASE("two unequal gains") {
        const auto g = breakpoints({4.0, 1.0});
        REQUIRE(g.size() == 3);
        CHECK(g[0] == 0.0);
        CHECK(g[1] == doctest::Approx(0.75).epsilon(1e-14));  // 2/1 - (1/4 + 1)
        CHECK(std::isinf(g[2]));
    }
    SUBCASE("single stream") {
        const auto g = breakpoints({3.0});
        REQUIRE(g.size() == 2);
        CHECK(g[0] == 0.0);
        CHECK(std::isinf(g[1]));
    }
    SUBCASE("equal gains activate together") {
        const auto g = breakpoints({2.0, 2.0});
        CHECK(g[0] == 0.0);
        CHECK(g[1] == doctest::Approx(0.0));
        CHECK(std::isinf(g[2]));
    }
    SUBCASE("bad input") {
        CHECK_THROWS_AS(breakpoints({1.0, 4.0}), std::domain_error);
        CHECK_THROWS_AS(breakpoints({-1.0}), std::domain_error);
    }
}

TEST_CASE("closed-form SE") {
    const Spectrum spec = Spectrum::from_gains({4.0, 1.0});
    SUBCASE("continuity at the activation point, both segment formulas") {
        // at P = g_2 = 0.75 both adjacent segments evaluate to 2 bits
        const SeValue v = se_closed_form(spec, 0.75);
        CHECK(v.C == doctest::Approx(2.0).epsilon(1e-12));
        const double left = std::log2(4.0 * (0.7499999 + 0.25));
        CHECK(left == doctest::Approx(2.0).epsilon(1e-5));
    }
    SUBCASE("P = 0 gives zero") { CHECK(se_closed_form(spec, 0.0).C == doctest::Approx(0.0)); }
    SUBCASE("single unit gain at unit power gives 1 bit") {
        const Spectrum one = Spectrum::from_gains({1.0});
        CHECK(se_closed_form(one, 1.0).C == doctest::Approx(1.0));
    }
    SUBCASE("matches budget-bound water-filling") {
        for (double p : {0.05, 0.4, 0.75, 1.3, 7.0}) {
            const WaterfillResult wf = waterfill({4.0, 1.0}, 0.0, p);
            double rate = 0.0;
            rate += std::log2(1.0 + 4.0 * wf.q[0]);
            rate += std::log2(1.0 + 1.0 * wf.q[1]);
            CHECK(se_closed_form(spec, p).C == doctest::Approx(rate).epsilon(1e-9));
        }
    }
}

TEST_CASE("SE derivative") {
    const Spectrum spec = Spectrum::from_gains({4.0, 1.0});
    SUBCASE("one-sided limits agree at the breakpoint with value d_{l+1}/ln2") {
        const double left = se_derivative(spec, 0.75 - 1e-12);
        const double right = se_derivative(spec, 0.75 + 1e-12);
        CHECK(left == doctest::Approx(1.0 / kLn2).epsilon(1e-9));
        CHECK(right == doctest::Approx(1.0 / kLn2).epsilon(1e-9));
    }
    SUBCASE("at the origin the first segment rules") {
        CHECK(se_derivative(spec, 0.0) == doctest::Approx(4.0 / kLn2).epsilon(1e-12));
    }
    SUBCASE("matches centered finite differences away from breakpoints") {
        const double h = 1e-6;
        for (double p : {0.1, 0.4, 1.5, 3.0, 9.0}) {
            const double fd = (se_closed_form(spec, p + h).C - se_closed_form(spec, p - h).C) /
                              (2.0 * h);
            CHECK(se_derivative(spec, p) == doctest::Approx(fd).epsilon(1e-4));
        }
    }
    SUBCASE("strictly positive") {
        for (double p = 0.0; p < 20.0; p += 0.37) CHECK(se_derivative(spec, p) > 0.0);
    }
}

TEST_CASE("second derivative vs finite differences inside segments") {
    const Spectrum spec = Spectrum::from_gains({4.0, 1.0});
    const double h = 1e-4;
    for (double p : {0.2, 0.5, 1.2, 2.5, 6.0}) {
        const double fd = (se_closed_form(spec, p + h).C - 2.0 * se_closed_form(spec, p).C +
                           se_closed_form(spec, p - h).C) /
                          (h * h);
        CHECK(se_second_derivative(spec, p) == doctest::Approx(fd).epsilon(1e-3));
        CHECK(se_second_derivative(spec, p) < 0.0);
    }
}

TEST_CASE("SE is strictly concave") {
    const Spectrum spec = Spectrum::from_gains({5.0, 2.0, 0.7});
    RngStream rng(99);
    for (int i = 0; i < 100; ++i) {
        const double p1 = 10.0 * rng.next_double();
        double p2 = 10.0 * rng.next_double();
        if (std::abs(p1 - p2) < 1e-3) p2 += 0.1;
        const double theta = 0.05 + 0.9 * rng.next_double();
        const double mix = theta * p1 + (1.0 - theta) * p2;
        const double lhs = se_closed_form(spec, mix).C;
        const double rhs =
            theta * se_closed_form(spec, p1).C + (1.0 - theta) * se_closed_form(spec, p2).C;
        CHECK(lhs - rhs >= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("f(P) = (C - P C')/C' is strictly increasing") {
    const Spectrum spec = Spectrum::from_gains({4.0, 1.0});
    auto f = [&](double p) {
        return se_closed_form(spec, p).C / se_derivative(spec, p) - p;
    };
    double prev = f(1e-6);
    for (double p = 0.05; p < 12.0; p += 0.05) {
        const double cur = f(p);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("optimal EE power") {
    SUBCASE("unit gain closed form") {
        const Spectrum spec = Spectrum::from_gains({1.0});
        const EeOptimum opt = optimal_ee_power(spec, 1.0);
        CHECK(opt.P_star == doctest::Approx(std::numbers::e - 1.0).epsilon(1e-9));
        CHECK(opt.EE_star ==
              doctest::Approx(std::log2(std::numbers::e) / std::numbers::e).epsilon(1e-10));
        CHECK_FALSE(opt.budget_clamped);
    }
    SUBCASE("vanishing circuit power drives the optimum to zero") {
        const Spectrum spec = Spectrum::from_gains({2.0});
        double prev = kInf;
        for (double pc : {1e-2, 1e-4, 1e-6}) {
            const double p = optimal_ee_power(spec, pc).P_star;
            CHECK(p < prev);
            prev = p;
        }
        CHECK(prev < 2e-3);  // root of f(P) ~ P^2 = 1e-6 sits near 1e-3
    }
    SUBCASE("grid oracle on a two-stream spectrum") {
        const Spectrum spec = Spectrum::from_gains({4.0, 1.0});
        const EeOptimum opt = optimal_ee_power(spec, 0.8);
        double best = 0.0;
        for (double p = 0.0; p <= 20.0; p += 1e-4)
            best = std::max(best, se_closed_form(spec, p).C / (p + 0.8));
        CHECK(opt.EE_star >= best - 1e-8);
    }
    SUBCASE("monotone trends in the circuit power") {
        const Spectrum spec = Spectrum::from_gains({4.0, 1.0});
        double prev_p = -1.0, prev_se = -1.0, prev_ee = kInf;
        for (double pc : {0.1, 0.5, 1.0, 2.0, 5.0}) {
            const EeOptimum opt = optimal_ee_power(spec, pc);
            CHECK(opt.P_star > prev_p);
            CHECK(opt.SE_star > prev_se);
            CHECK(opt.EE_star < prev_ee);
            prev_p = opt.P_star;
            prev_se = opt.SE_star;
            prev_ee = opt.EE_star;
        }
    }
    SUBCASE("budget clamp") {
        const Spectrum spec = Spectrum::from_gains({1.0});
        const EeOptimum opt = optimal_ee_power(spec, 1.0, 0.5);
        CHECK(opt.P_star == 0.5);
        CHECK(opt.budget_clamped);
    }
}

TEST_CASE("EE decreases across any circuit-power increase") {
    const Spectrum spec = Spectrum::from_gains({3.0, 0.5});
    const EeOptimum a = optimal_ee_power(spec, 2.0);
    const EeOptimum b = optimal_ee_power(spec, 0.7);
    CHECK(a.EE_star < b.EE_star);
}

TEST_CASE("symmetric high-power limit") {
    CHECK(symmetric_high_power_limit(1.0, 2) == doctest::Approx(2.0));
    CHECK(symmetric_high_power_limit(1e6, 2) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK_THROWS_AS(symmetric_high_power_limit(0.5, 1), std::domain_error);
}

TEST_CASE("low power regime") {
    const Spectrum spec = Spectrum::from_gains({1.0});
    SUBCASE("slope formula") {
        const LowPowerReport rep = low_power_regime_check(spec, 1.0, 1.0);
        CHECK(rep.EE_slope_at_zero == doctest::Approx(1.0 / kLn2));
    }
    SUBCASE("tiny budget forces full power") {
        const LowPowerReport rep = low_power_regime_check(spec, 1.0, 0.01);
        CHECK(rep.full_power_used);  // root e-1 >> 0.01
    }
    SUBCASE("slope doubles when the circuit power halves") {
        const LowPowerReport full = low_power_regime_check(spec, 1.0, 1.0);
        const LowPowerReport half = low_power_regime_check(spec, 0.5, 1.0);
        CHECK(half.EE_slope_at_zero == doctest::Approx(2.0 * full.EE_slope_at_zero));
    }
}
