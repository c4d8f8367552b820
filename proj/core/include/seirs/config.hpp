// Copyright (c) 2026 the seirs authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEIRS_CONFIG_HPP
#define SEIRS_CONFIG_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "seirs/incidence.hpp"
#include "seirs/model.hpp"

namespace seirs {

namespace toml {

/// Minimal TOML subset: [section] headers with dotted paths,
/// [[table-array]] headers, and key = value lines where value is a
/// number, a quoted string, true/false, or a flat array of numbers.
/// Unknown syntax is a hard error; # starts a comment.
struct Value;
using Table = std::map<std::string, Value>;

struct Value {
    enum class Kind { Number, String, Boolean, NumberArray, Table, TableArray };
    Kind kind = Kind::Number;
    double number = 0.0;
    std::string string;
    bool boolean = false;
    std::vector<double> array;
    std::shared_ptr<Table> table;                    // Kind::Table
    std::vector<std::shared_ptr<Table>> table_array; // Kind::TableArray
};

Table parse(const std::string& text);
Table parse_file(const std::string& path);

} // namespace toml

struct IncidenceConfig {
    std::string family = "mass-action";
    std::optional<double> alpha;
    std::optional<double> p;
    std::optional<double> q;
    std::optional<std::string> contact; // C(N) for michaelis-menten
};

struct SimulateConfig {
    double t0 = 0.0;
    double horizon = 200.0;
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    int samples = 2001;
    std::vector<std::array<double, 4>> initial_conditions{{0.1, 0.1, 0.1, 0.1}};
};

struct AnalyzeConfig {
    double bisect_tol = 1e-8;
};

struct EndemicConfig {
    double burn_in = 100.0;
    double horizon = 300.0;
    int runs = 10;
};

struct OrbitConfig {
    int max_newton = 25;
    double settle_periods = 200.0; // pre-integration before shooting
    int samples = 256;
    std::optional<std::array<double, 4>> guess;
};

struct SweepConfig {
    std::vector<double> beta{5.9, 6.9};
    std::vector<double> b{0.1, 0.6};
};

struct HypothesesConfig {
    int grid = 64;
};

struct OutputConfig {
    std::string dir = "out";
    std::uint64_t seed = 1;
};

/// Full run configuration parsed from a config file.  Unknown keys are
/// rejected with a ConfigError naming the offending path.
struct RunConfig {
    double omega = 1.0;
    ModelParams model;
    IncidenceConfig incidence;
    SimulateConfig simulate;
    AnalyzeConfig analyze;
    EndemicConfig endemic;
    OrbitConfig orbit;
    SweepConfig sweep;
    HypothesesConfig hypotheses;
    OutputConfig output;

    /// Build the incidence spec on the model's invariant box.
    IncidenceSpec make_incidence() const;
};

RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& text);

} // namespace seirs

#endif
