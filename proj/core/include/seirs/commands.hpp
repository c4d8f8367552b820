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

#ifndef SEIRS_COMMANDS_HPP
#define SEIRS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "seirs/config.hpp"

namespace seirs {

/// Command-line overrides applied on top of the config file.
struct CliOverrides {
    std::optional<std::string> out_dir; // --out
    std::optional<std::uint64_t> seed;  // --seed
    std::optional<double> tol;          // --tol (reproduction-ratio bisection)
    std::optional<int> jobs;            // --jobs (sweep worker pool)
};

/// Exit codes: 0 success, 2 configuration error, 3 integration failure,
/// 1 anything else.  Diagnostics go to err; out carries one final
/// summary line.
int cmd_simulate(const RunConfig& cfg, const CliOverrides& ov, std::ostream& out, std::ostream& err);
int cmd_analyze(const RunConfig& cfg, const CliOverrides& ov, std::ostream& out, std::ostream& err);
int cmd_endemic(const RunConfig& cfg, const CliOverrides& ov, std::ostream& out, std::ostream& err);
int cmd_orbit(const RunConfig& cfg, const CliOverrides& ov, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, const CliOverrides& ov, std::ostream& out, std::ostream& err);
int cmd_check_hypotheses(const RunConfig& cfg, const CliOverrides& ov, std::ostream& out, std::ostream& err);

/// Dispatch by subcommand name ("simulate", "analyze", "endemic",
/// "orbit", "sweep", "check-hypotheses").
int run_command(const std::string& name, const RunConfig& cfg, const CliOverrides& ov,
                std::ostream& out, std::ostream& err);

} // namespace seirs

#endif
