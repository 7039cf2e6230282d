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

#include "eegame/scenario_config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "eegame/errors.hpp"

namespace eegame {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad numeric value for key '" + key + "': " + value);
    }
}

int parse_int(const std::string& key, const std::string& value) {
    const double v = parse_double(key, value);
    if (v != std::floor(v)) throw ConfigError("key '" + key + "' expects an integer");
    return static_cast<int>(v);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const auto v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad seed value for key '" + key + "': " + value);
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("key '" + key + "' expects true/false");
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        if (item == "inf") {
            out.push_back(std::numeric_limits<double>::infinity());
        } else {
            out.push_back(parse_double(key, item));
        }
    }
    if (out.empty()) throw ConfigError("key '" + key + "' expects a nonempty comma list");
    return out;
}

/// Iterates `key = value` lines, dispatching each to the handler; the
/// handler returns false for keys it does not know.
template <typename Handler>
void parse_lines(std::istream& in, Handler&& handle) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
        if (!handle(key, value))
            throw ConfigError("unknown key '" + key + "' (line " + std::to_string(lineno) + ")");
    }
}

SweepKind sweep_from_string(const std::string& v) {
    if (v == "none") return SweepKind::none;
    if (v == "P_T_dBm") return SweepKind::P_T_dBm;
    if (v == "P_C_dBm") return SweepKind::P_C_dBm;
    if (v == "antennas") return SweepKind::antennas;
    if (v == "D_direct") return SweepKind::D_direct;
    if (v == "K") return SweepKind::K;
    if (v == "D_cross") return SweepKind::D_cross;
    throw ConfigError("unknown sweep kind: " + v);
}

Algorithm algorithm_from_string(const std::string& v) {
    if (v == "ADEE") return Algorithm::ADEE;
    if (v == "ADSE") return Algorithm::ADSE;
    throw ConfigError("unknown algorithm: " + v);
}

Schedule::Kind schedule_from_string(const std::string& v) {
    if (v == "sequential") return Schedule::Kind::sequential;
    if (v == "simultaneous") return Schedule::Kind::simultaneous;
    if (v == "unbalanced") return Schedule::Kind::unbalanced;
    throw ConfigError("unknown schedule: " + v);
}

ScenarioTopology topology_from_string(const std::string& v) {
    if (v == "random_square") return ScenarioTopology::random_square;
    if (v == "symmetric_two_link") return ScenarioTopology::symmetric_two_link;
    if (v == "isolated") return ScenarioTopology::isolated;
    throw ConfigError("unknown topology: " + v);
}

std::vector<std::string> split_names(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

ParsedScenario parse_scenario(std::istream& in) {
    ParsedScenario ps;
    NetworkConfig& cfg = ps.spec.base;

    parse_lines(in, [&](const std::string& key, const std::string& value) -> bool {
        if (key == "K") cfg.K = parse_int(key, value);
        else if (key == "M") cfg.M = parse_int(key, value);
        else if (key == "N") cfg.N = parse_int(key, value);
        else if (key == "P_T_dBm") cfg.P_T_dBm = parse_double(key, value);
        else if (key == "P_C_dBm") cfg.P_C_dBm = parse_double(key, value);
        else if (key == "noise_dBm") cfg.noise_dBm = parse_double(key, value);
        else if (key == "area_m") cfg.area_m = parse_double(key, value);
        else if (key == "min_cross_dist_m") cfg.min_cross_dist_m = parse_double(key, value);
        else if (key == "direct_dist_m") cfg.direct_dist_m = parse_double(key, value);
        else if (key == "pathloss_offset_dB") cfg.pathloss_offset_dB = parse_double(key, value);
        else if (key == "pathloss_slope") cfg.pathloss_slope = parse_double(key, value);
        else if (key == "seed") cfg.seed = parse_u64(key, value);
        else if (key == "eps") cfg.eps = parse_double(key, value);
        else if (key == "T_max") cfg.T_max = parse_int(key, value);
        else if (key == "name") ps.spec.name = value;
        else if (key == "topology") ps.spec.topology = topology_from_string(value);
        else if (key == "d_cross") ps.spec.d_cross = parse_double(key, value);
        else if (key == "sweep") ps.spec.sweep = sweep_from_string(value);
        else if (key == "sweep_values") ps.spec.sweep_values = parse_list(key, value);
        else if (key == "algorithms") {
            ps.spec.algorithms.clear();
            for (const auto& name : split_names(value))
                ps.spec.algorithms.push_back(algorithm_from_string(name));
        } else if (key == "schedules") {
            ps.spec.schedules.clear();
            for (const auto& name : split_names(value))
                ps.spec.schedules.push_back(schedule_from_string(name));
        } else if (key == "n_channel_draws") ps.spec.n_channel_draws = parse_int(key, value);
        else if (key == "output_path") ps.spec.output_path = value;
        else if (key == "dump_traces") ps.spec.dump_traces = parse_bool(key, value);
        else if (key == "d_cross_list") ps.d_cross_list = parse_list(key, value);
        else if (key == "trials") ps.trials = parse_int(key, value);
        else return false;
        return true;
    });

    try {
        ps.spec.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return ps;
}

ParsedScenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file: " + path);
    return parse_scenario(in);
}

SpectrumScenario parse_spectrum(std::istream& in) {
    SpectrumScenario sc;
    parse_lines(in, [&](const std::string& key, const std::string& value) -> bool {
        if (key == "d") sc.d = parse_list(key, value);
        else if (key == "P_C_W_list") sc.P_C_W_list = parse_list(key, value);
        else if (key == "P_T_W") sc.P_T_W = parse_double(key, value);
        else return false;
        return true;
    });
    if (sc.d.empty()) throw ConfigError("spectrum file needs a 'd' gain list");
    if (sc.P_C_W_list.empty()) throw ConfigError("spectrum file needs a 'P_C_W_list'");
    return sc;
}

SpectrumScenario load_spectrum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open spectrum file: " + path);
    return parse_spectrum(in);
}

}  // namespace eegame
