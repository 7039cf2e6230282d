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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "eegame/equilibrium_analysis.hpp"
#include "eegame/errors.hpp"
#include "eegame/experiments.hpp"
#include "eegame/rng.hpp"
#include "eegame/scenario_config.hpp"
#include "eegame/single_link.hpp"

namespace {

using namespace eegame;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct GlobalFlags {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<int> draws;
    bool quiet = false;
};

void apply_overrides(ScenarioSpec& spec, const GlobalFlags& flags) {
    if (flags.seed) spec.base.seed = *flags.seed;
    if (flags.out) spec.output_path = *flags.out;
    if (flags.draws) spec.n_channel_draws = *flags.draws;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::ios_base::failure("cannot write output file: " + path);
    return f;
}

/// One channel instance from the scenario's base config and seed.
ChannelSet instantiate(const ScenarioSpec& spec) {
    const NetworkConfig& cfg = spec.base;
    Topology topo;
    switch (spec.topology) {
        case ScenarioTopology::random_square:
            topo = generate_topology(cfg, TopologyMode::random_square());
            break;
        case ScenarioTopology::symmetric_two_link:
            topo = generate_topology(
                cfg, TopologyMode::symmetric_two_link(cfg.direct_dist_m, spec.d_cross));
            break;
        case ScenarioTopology::isolated: {
            topo = generate_topology(cfg, TopologyMode::random_square());
            for (int j = 0; j < topo.links(); ++j)
                for (int k = 0; k < topo.links(); ++k)
                    if (j != k) topo.dist(j, k) = std::numeric_limits<double>::infinity();
            break;
        }
    }
    return sample_channels(topo, cfg, PathLossModel::from_config(cfg),
                           derive_seed(cfg.seed, "cli-fading"));
}

int cmd_run(const std::string& cfg_path, const GlobalFlags& flags) {
    ParsedScenario ps = load_scenario(cfg_path);
    apply_overrides(ps.spec, flags);
    ps.spec.validate();

    const std::string trace_dir =
        std::filesystem::path(ps.spec.output_path).parent_path().string();
    const std::string dir = trace_dir.empty() ? "." : trace_dir;
    const auto rows = run_scenario(ps.spec, &dir);

    auto f = open_output(ps.spec.output_path);
    write_sweep_csv(f, rows);
    if (!flags.quiet)
        std::cout << "wrote " << rows.size() << " rows to " << ps.spec.output_path << "\n";
    return kExitOk;
}

int cmd_check_uniqueness(const std::string& cfg_path, const GlobalFlags& flags) {
    ParsedScenario ps = load_scenario(cfg_path);
    apply_overrides(ps.spec, flags);
    const NetworkConfig& cfg = ps.spec.base;

    ChannelSet ch = instantiate(ps.spec);
    bool reduced = false;
    UniquenessReport rep;
    try {
        rep = check_uniqueness(ch, cfg.p_t_w());
    } catch (const RankDeficiencyError&) {
        ch = reduce_general_rank(ch).channels;
        rep = check_uniqueness(ch, cfg.p_t_w());
        reduced = true;
    }

    std::printf("uniqueness bound sqrt(1/(K-1)) = %.6g%s\n", rep.bound,
                reduced ? "  (rank-reduced game)" : "");
    for (std::size_t k = 0; k < rep.alpha.size(); ++k) {
        const AlphaParts& p = rep.parts[k];
        std::printf("link %zu: alpha = %.6g  [rho = %.6g, ||D R||_2 = %.6g, lambda_min = %.6g]\n",
                    k + 1, p.alpha, p.rho_direct, p.jacobian_norm, p.lambda_min_tk);
    }
    std::printf("condition satisfied: %s\n", rep.satisfied ? "yes" : "no");

    // The certificate assumes a large power budget; warn when the EE
    // solution actually exhausts it.
    const Schedule sched = make_schedule(Schedule::Kind::simultaneous, cfg.K, cfg.T_max);
    const GameTrace trace = run_adee(ch, sched, cfg, default_initial_profile(ch, cfg.p_t_w()));
    for (int k = 0; k < cfg.K; ++k) {
        const double p = trace.final_profile.Q[static_cast<std::size_t>(k)].trace().real();
        if (p >= (1.0 - 1e-6) * cfg.p_t_w())
            std::printf("warning: link %d transmits at full power; the large-budget hypothesis "
                        "behind the certificate may not hold\n",
                        k + 1);
    }
    return kExitOk;
}

int cmd_uniqueness_prob(const std::string& cfg_path, const GlobalFlags& flags) {
    ParsedScenario ps = load_scenario(cfg_path);
    apply_overrides(ps.spec, flags);
    if (ps.d_cross_list.empty())
        throw ConfigError("uniqueness-prob needs a d_cross_list key");

    SymmetricSweepSpec sweep;
    sweep.M = ps.spec.base.M;
    sweep.N = ps.spec.base.N;
    sweep.d_direct = ps.spec.base.direct_dist_m;
    sweep.d_cross = ps.d_cross_list;
    sweep.P_T_W = ps.spec.base.p_t_w();
    sweep.sigma2_W = ps.spec.base.sigma2_w();
    sweep.pathloss_exponent = ps.spec.base.pathloss_slope / 10.0;

    const auto points = uniqueness_probability(sweep, ps.trials, ps.spec.base.seed);

    auto f = open_output(ps.spec.output_path);
    f << "D_cross,trials,successes,probability\n";
    char buf[128];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof(buf), "%.12g,%d,%d,%.12g\n", p.d_cross, p.trials, p.successes,
                      p.probability);
        f << buf;
        if (!flags.quiet)
            std::printf("D_cross = %-8g probability = %.4f (%d/%d)\n", p.d_cross, p.probability,
                        p.successes, p.trials);
    }
    return kExitOk;
}

int cmd_single_link(const std::string& cfg_path, const GlobalFlags& flags) {
    const SpectrumScenario sc = load_spectrum(cfg_path);
    const Spectrum spec = Spectrum::from_gains(sc.d);

    const std::string out = flags.out.value_or("single_link.csv");
    auto f = open_output(out);
    f << "P_C_W,P_star_W,SE,EE\n";
    char buf[160];
    for (double pc : sc.P_C_W_list) {
        const EeOptimum opt = optimal_ee_power(spec, pc, sc.P_T_W);
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g\n", pc, opt.P_star,
                      opt.SE_star, opt.EE_star);
        f << buf;
        if (!flags.quiet)
            std::printf("P_C = %-10g P* = %-12g SE = %-10g EE = %g%s\n", pc, opt.P_star,
                        opt.SE_star, opt.EE_star,
                        opt.budget_clamped ? "  (budget-clamped)" : "");
    }
    return kExitOk;
}

int cmd_convergence(const std::string& cfg_path, const GlobalFlags& flags) {
    ParsedScenario ps = load_scenario(cfg_path);
    apply_overrides(ps.spec, flags);
    const NetworkConfig& cfg = ps.spec.base;
    const ChannelSet ch = instantiate(ps.spec);
    const StrategyProfile q0 = default_initial_profile(ch, cfg.p_t_w());

    const std::filesystem::path base(ps.spec.output_path);
    for (const Schedule::Kind kind : ps.spec.schedules) {
        const Schedule sched = make_schedule(kind, cfg.K, cfg.T_max);
        const GameTrace trace = run_adee(ch, sched, cfg, q0);

        std::filesystem::path path = base;
        path.replace_filename(base.stem().string() + "_" + to_string(kind) +
                              base.extension().string());
        auto f = open_output(path.string());
        write_trace_csv(f, trace);
        if (!flags.quiet)
            std::printf("%-13s %s after %d iterations, ne_residual = %.3g -> %s\n",
                        to_string(kind), trace.converged ? "converged" : "hit T_max",
                        trace.iters_to_converge, trace.ne_residual, path.c_str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"energy-efficiency game solver for MIMO interference channels"};
    app.require_subcommand(1);

    GlobalFlags flags;
    std::uint64_t seed_val = 0;
    std::string out_val;
    int draws_val = 0;
    auto* seed_opt = app.add_option("--seed", seed_val, "override the scenario seed");
    auto* out_opt = app.add_option("--out", out_val, "override the output path");
    auto* draws_opt = app.add_option("--draws", draws_val, "override n_channel_draws");
    app.add_flag("--quiet", flags.quiet, "suppress progress output");

    std::string cfg_path;
    auto* run = app.add_subcommand("run", "run a scenario sweep and write the CSV table");
    run->add_option("scenario", cfg_path, "scenario config file")->required();
    auto* chk = app.add_subcommand("check-uniqueness", "evaluate the NE-uniqueness condition");
    chk->add_option("scenario", cfg_path, "scenario config file")->required();
    auto* prob = app.add_subcommand("uniqueness-prob", "Monte Carlo uniqueness probability sweep");
    prob->add_option("scenario", cfg_path, "scenario config file")->required();
    auto* single = app.add_subcommand("single-link", "closed-form single-link EE/SE sweep");
    single->add_option("spectrum", cfg_path, "spectrum config file")->required();
    auto* conv = app.add_subcommand("convergence", "per-link EE traces for each schedule");
    conv->add_option("scenario", cfg_path, "scenario config file")->required();
    for (auto* sub : {run, chk, prob, single, conv}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (*seed_opt) flags.seed = seed_val;
    if (*out_opt) flags.out = out_val;
    if (*draws_opt) flags.draws = draws_val;

    try {
        if (run->parsed()) return cmd_run(cfg_path, flags);
        if (chk->parsed()) return cmd_check_uniqueness(cfg_path, flags);
        if (prob->parsed()) return cmd_uniqueness_prob(cfg_path, flags);
        if (single->parsed()) return cmd_single_link(cfg_path, flags);
        if (conv->parsed()) return cmd_convergence(cfg_path, flags);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
