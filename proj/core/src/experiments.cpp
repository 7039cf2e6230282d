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

#include "eegame/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "eegame/errors.hpp"
#include "eegame/rng.hpp"

namespace eegame {

const char* to_string(SweepKind kind) {
    switch (kind) {
        case SweepKind::none: return "none";
        case SweepKind::P_T_dBm: return "P_T_dBm";
        case SweepKind::P_C_dBm: return "P_C_dBm";
        case SweepKind::antennas: return "antennas";
        case SweepKind::D_direct: return "D_direct";
        case SweepKind::K: return "K";
        case SweepKind::D_cross: return "D_cross";
    }
    return "unknown";
}

const char* to_string(Algorithm alg) { return alg == Algorithm::ADEE ? "ADEE" : "ADSE"; }

void ScenarioSpec::validate() const {
    base.validate();
    if (sweep != SweepKind::none) {
        if (sweep_values.empty()) throw std::invalid_argument("scenario: sweep list is empty");
        if (!std::is_sorted(sweep_values.begin(), sweep_values.end()))
            throw std::invalid_argument("scenario: sweep list must be ascending");
    }
    if (algorithms.empty()) throw std::invalid_argument("scenario: no algorithms selected");
    if (schedules.empty()) throw std::invalid_argument("scenario: no schedules selected");
    if (n_channel_draws < 1) throw std::invalid_argument("scenario: n_channel_draws must be >= 1");
    if (topology == ScenarioTopology::symmetric_two_link) {
        if (base.K != 2) throw std::invalid_argument("scenario: symmetric topology requires K = 2");
        if (sweep != SweepKind::D_cross && !(d_cross > 0.0))
            throw std::invalid_argument("scenario: symmetric topology needs d_cross > 0");
    }
    if (sweep == SweepKind::D_cross && topology != ScenarioTopology::symmetric_two_link)
        throw std::invalid_argument("scenario: D_cross sweep requires the symmetric topology");
}

namespace {

NetworkConfig apply_sweep(const NetworkConfig& base, SweepKind kind, double value) {
    NetworkConfig cfg = base;
    switch (kind) {
        case SweepKind::none: break;
        case SweepKind::P_T_dBm: cfg.P_T_dBm = value; break;
        case SweepKind::P_C_dBm: cfg.P_C_dBm = value; break;
        case SweepKind::antennas:
            cfg.M = cfg.N = static_cast<int>(value);
            break;
        case SweepKind::D_direct: cfg.direct_dist_m = value; break;
        case SweepKind::K: cfg.K = static_cast<int>(value); break;
        case SweepKind::D_cross: break;  // handled by the topology
    }
    return cfg;
}

Topology build_topology(const ScenarioSpec& spec, const NetworkConfig& cfg, double sweep_value,
                        std::uint64_t draw_seed) {
    NetworkConfig seeded = cfg;
    seeded.seed = draw_seed;
    switch (spec.topology) {
        case ScenarioTopology::random_square:
            return generate_topology(seeded, TopologyMode::random_square());
        case ScenarioTopology::symmetric_two_link: {
            const double cross = spec.sweep == SweepKind::D_cross ? sweep_value : spec.d_cross;
            return generate_topology(seeded,
                                     TopologyMode::symmetric_two_link(cfg.direct_dist_m, cross));
        }
        case ScenarioTopology::isolated: {
            // Random direct-link geometry with the cross gains forced to the
            // d -> inf zero limit: K independent point-to-point links.
            Topology topo = generate_topology(seeded, TopologyMode::random_square());
            for (int j = 0; j < topo.links(); ++j)
                for (int k = 0; k < topo.links(); ++k)
                    if (j != k) topo.dist(j, k) = std::numeric_limits<double>::infinity();
            return topo;
        }
    }
    throw std::logic_error("build_topology: unreachable");
}

void format_row(std::ostream& os, const SweepRow& row) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%.12g,%s,%s,%.12g,%.12g,%.12g,%.12g\n", row.sweep_value,
                  to_string(row.algorithm), to_string(row.schedule), row.sum_ee, row.sum_se,
                  row.mean_iters, row.conv_frac);
    os << buf;
}

}  // namespace

std::vector<SweepRow> run_scenario(const ScenarioSpec& spec, const std::string* trace_dir) {
    spec.validate();

    std::vector<double> values = spec.sweep == SweepKind::none
                                     ? std::vector<double>{0.0}
                                     : spec.sweep_values;
    std::vector<SweepRow> rows;

    for (std::size_t vi = 0; vi < values.size(); ++vi) {
        const NetworkConfig cfg = apply_sweep(spec.base, spec.sweep, values[vi]);
        cfg.validate();
        const PathLossModel model = PathLossModel::from_config(cfg);

        struct Acc {
            double ee = 0.0, se = 0.0, iters = 0.0;
            int converged = 0;
        };
        std::vector<Acc> acc(spec.algorithms.size() * spec.schedules.size());

        for (int draw = 0; draw < spec.n_channel_draws; ++draw) {
            // Seeds depend on the draw index only, so sweep points share
            // channel realizations (paired comparison along the sweep).
            const std::uint64_t topo_seed =
                derive_seed(cfg.seed, "scenario-topo", static_cast<std::uint64_t>(draw));
            const std::uint64_t fade_seed =
                derive_seed(cfg.seed, "scenario-fade", static_cast<std::uint64_t>(draw));
            const Topology topo = build_topology(spec, cfg, values[vi], topo_seed);
            const ChannelSet ch = sample_channels(topo, cfg, model, fade_seed);
            const StrategyProfile q0 = default_initial_profile(ch, cfg.p_t_w());

            std::size_t cell = 0;
            for (const Algorithm alg : spec.algorithms) {
                for (const Schedule::Kind sk : spec.schedules) {
                    const Schedule schedule = make_schedule(sk, cfg.K, cfg.T_max);
                    EngineOptions opts;
                    opts.skip_ne_residual = true;
                    const GameTrace trace = alg == Algorithm::ADEE
                                                ? run_adee(ch, schedule, cfg, q0, opts)
                                                : run_adse(ch, schedule, cfg, q0, opts);
                    Acc& a = acc[cell];
                    a.ee += trace.sum_ee_final();
                    a.se += trace.sum_se_final();
                    a.iters += trace.iters_to_converge;
                    a.converged += trace.converged ? 1 : 0;

                    if (trace_dir && spec.dump_traces) {
                        char name[256];
                        std::snprintf(name, sizeof(name), "%s/%s_v%zu_%s_%s_draw%d.csv",
                                      trace_dir->c_str(), spec.name.c_str(), vi, to_string(alg),
                                      to_string(sk), draw);
                        std::ofstream f(name);
                        if (!f)
                            throw std::ios_base::failure(std::string("cannot write trace file ") +
                                                         name);
                        write_trace_csv(f, trace);
                    }
                    ++cell;
                }
            }
        }

        std::size_t cell = 0;
        for (const Algorithm alg : spec.algorithms) {
            for (const Schedule::Kind sk : spec.schedules) {
                const Acc& a = acc[cell++];
                const double n = spec.n_channel_draws;
                rows.push_back({values[vi], alg, sk, a.ee / n, a.se / n, a.iters / n,
                                a.converged / n});
            }
        }
    }
    return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << kSweepCsvHeader << "\n";
    for (const SweepRow& row : rows) format_row(os, row);
}

std::vector<std::string> emit_plotdata(const std::vector<SweepRow>& rows,
                                       const std::string& scenario_name, PlotMetric metric,
                                       const std::string& out_dir) {
    if (rows.empty()) throw std::invalid_argument("emit_plotdata: no rows");

    auto metric_of = [metric](const SweepRow& r) {
        switch (metric) {
            case PlotMetric::sum_ee: return r.sum_ee;
            case PlotMetric::sum_se: return r.sum_se;
            case PlotMetric::mean_iters: return r.mean_iters;
        }
        return 0.0;
    };

    // One file per (algorithm, schedule) pair present in the table.
    std::vector<std::pair<Algorithm, Schedule::Kind>> curves;
    for (const SweepRow& r : rows) {
        const auto key = std::make_pair(r.algorithm, r.schedule);
        if (std::find(curves.begin(), curves.end(), key) == curves.end()) curves.push_back(key);
    }

    std::vector<std::string> files;
    for (const auto& [alg, sk] : curves) {
        std::vector<std::pair<double, double>> series;
        for (const SweepRow& r : rows)
            if (r.algorithm == alg && r.schedule == sk)
                series.emplace_back(r.sweep_value, metric_of(r));
        std::sort(series.begin(), series.end());

        const std::string path = out_dir + "/" + scenario_name + "_" + to_string(alg) + "_" +
                                 to_string(sk) + ".dat";
        std::ofstream f(path);
        if (!f) throw std::ios_base::failure("emit_plotdata: cannot write " + path);
        char buf[128];
        for (const auto& [x, y] : series) {
            std::snprintf(buf, sizeof(buf), "%.12g %.12g\n", x, y);
            f << buf;
        }
        files.push_back(path);
    }
    return files;
}

}  // namespace eegame
