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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "seirs/commands.hpp"
#include "seirs/errors.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"periodic SEIRS threshold analysis and simulation"};
    app.require_subcommand(1);
    app.fallthrough(); // allow global flags after the subcommand

    std::string config_path;
    seirs::CliOverrides overrides;
    std::string out_dir;
    std::uint64_t seed = 0;
    double tol = 0.0;
    int jobs = 0;

    app.add_option("--config", config_path, "path to the run configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    auto* out_opt = app.add_option("--out", out_dir, "output directory (overrides [output] dir)");
    auto* seed_opt = app.add_option("--seed", seed, "seed for randomized checks (overrides [output] seed)");
    auto* tol_opt = app.add_option("--tol", tol, "reproduction-ratio bisection tolerance (overrides [analyze] bisect_tol)");
    auto* jobs_opt = app.add_option("--jobs", jobs, "sweep worker pool size")->check(CLI::PositiveNumber);

    const char* commands[] = {"simulate", "analyze", "endemic", "orbit", "sweep", "check-hypotheses"};
    const char* blurbs[] = {
        "integrate configured initial conditions and write trajectory CSVs",
        "reproduction ratio, threshold classification and existence verdict",
        "full threshold report with persistence floor and a priori bounds",
        "locate a periodic orbit by shooting and write it as CSV + JSON",
        "grid of (beta, b) cells -> CSV of thresholds and verdicts",
        "audit the incidence function on the invariant box",
    };
    for (std::size_t i = 0; i < std::size(commands); ++i) app.add_subcommand(commands[i], blurbs[i]);

    CLI11_PARSE(app, argc, argv);

    if (*out_opt) overrides.out_dir = out_dir;
    if (*seed_opt) overrides.seed = seed;
    if (*tol_opt) overrides.tol = tol;
    if (*jobs_opt) overrides.jobs = jobs;

    seirs::RunConfig cfg;
    try {
        cfg = seirs::load_config(config_path);
    } catch (const seirs::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    return seirs::run_command(app.get_subcommands().front()->get_name(), cfg, overrides, std::cout,
                              std::cerr);
}
