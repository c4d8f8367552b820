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

#include "seirs/commands.hpp"

#include <atomic>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "seirs/endemic.hpp"
#include "seirs/errors.hpp"
#include "seirs/hypotheses.hpp"
#include "seirs/report.hpp"

namespace seirs {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string resolve_out_dir(const RunConfig& cfg, const CliOverrides& ov)
{
    std::string dir = ov.out_dir.value_or(cfg.output.dir);
    fs::create_directories(dir);
    return dir;
}

std::uint64_t resolve_seed(const RunConfig& cfg, const CliOverrides& ov)
{
    return ov.seed.value_or(cfg.output.seed);
}

double resolve_tol(const RunConfig& cfg, const CliOverrides& ov)
{
    return ov.tol.value_or(cfg.analyze.bisect_tol);
}

json point_json(const EndemicAlgebraicPoint& pt)
{
    json j;
    j["r"] = pt.r;
    j["p"] = pt.p;
    j["q"] = pt.q;
    j["s"] = pt.s;
    j["d"] = pt.d;
    j["d0"] = pt.d0;
    j["bars"] = {{"lambda", pt.bars.Lambda}, {"mu", pt.bars.mu},       {"beta", pt.bars.beta},
                 {"eta", pt.bars.eta},       {"epsilon", pt.bars.epsilon}, {"gamma", pt.bars.gamma}};
    return j;
}

json matrix_json(const ThresholdMatrix& tm)
{
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int c = 0; c < 4; ++c) row.push_back(tm.m(i, c));
        rows.push_back(row);
    }
    json j;
    j["entries"] = rows;
    j["det"] = tm.det;
    j["k110"] = tm.k110;
    j["k010"] = tm.k010;
    j["k011"] = tm.k011;
    return j;
}

json threshold_json(const ThresholdReport& rep)
{
    json j;
    j["rho_fv"] = rep.r0.rho_fv;
    j["r0"] = rep.r0.r0;
    j["classification"] = to_string(rep.r0.classification);
    j["bisection_residual"] = rep.r0.bisection_residual;
    j["bisection_evals"] = rep.r0.bisection_evals;
    j["comparison_quantity"] = rep.comparison_quantity;
    j["verdict"] = to_string(rep.verdict);
    if (!rep.shortcut.empty()) j["shortcut"] = rep.shortcut;
    if (rep.point) j["endemic_point"] = point_json(*rep.point);
    if (rep.matrix) j["threshold_matrix"] = matrix_json(*rep.matrix);
    if (rep.det_closed_form) j["det_closed_form"] = *rep.det_closed_form;
    return j;
}

std::vector<std::pair<std::string, std::string>> threshold_text(const ThresholdReport& rep)
{
    std::vector<std::pair<std::string, std::string>> lines;
    lines.emplace_back("rho_fv", format_full(rep.r0.rho_fv));
    lines.emplace_back("r0", format_full(rep.r0.r0));
    lines.emplace_back("classification", to_string(rep.r0.classification));
    lines.emplace_back("bisection_residual", format_full(rep.r0.bisection_residual));
    lines.emplace_back("comparison_quantity", format_full(rep.comparison_quantity));
    lines.emplace_back("verdict", to_string(rep.verdict));
    if (!rep.shortcut.empty()) lines.emplace_back("shortcut", rep.shortcut);
    if (rep.point) {
        lines.emplace_back("endemic_r", format_full(rep.point->r));
        lines.emplace_back("endemic_p", format_full(rep.point->p));
        lines.emplace_back("endemic_q", format_full(rep.point->q));
        lines.emplace_back("endemic_s", format_full(rep.point->s));
    }
    if (rep.matrix) lines.emplace_back("det_m", format_full(rep.matrix->det));
    if (rep.det_closed_form) lines.emplace_back("det_closed_form", format_full(*rep.det_closed_form));
    return lines;
}

void write_json(const std::string& path, const json& j) { write_file(path, j.dump(2) + "\n"); }

std::vector<std::vector<double>> sample_rows(const Trajectory& traj, double t0, double t1, int samples)
{
    std::vector<std::vector<double>> rows;
    rows.reserve(samples);
    for (int k = 0; k < samples; ++k) {
        double t = samples == 1 ? t0 : t0 + (t1 - t0) * k / (samples - 1);
        auto x = traj.at(t);
        rows.push_back({t, x[0], x[1], x[2], x[3], x[0] + x[1] + x[2] + x[3]});
    }
    return rows;
}

const std::vector<std::string> kTrajectoryHeader = {"t", "S", "E", "I", "R", "N"};

std::string gnuplot_script(const std::vector<std::string>& csv_files, const std::string& title)
{
    std::string s;
    s += "set datafile separator ','\n";
    s += "set key outside\n";
    s += "set xlabel 't'\n";
    s += "set ylabel 'I(t)'\n";
    s += "set title '" + title + "'\n";
    s += "plot \\\n";
    for (std::size_t i = 0; i < csv_files.size(); ++i) {
        s += "  '" + csv_files[i] + "' using 1:4 with lines title 'run " + std::to_string(i) + "'";
        s += i + 1 < csv_files.size() ? ", \\\n" : "\n";
    }
    return s;
}

} // namespace

int cmd_simulate(const RunConfig& cfg, const CliOverrides& ov, std::ostream& out, std::ostream&)
{
    const std::string dir = resolve_out_dir(cfg, ov);
    IncidenceSpec inc = cfg.make_incidence();

    IntegratorOptions opts;
    opts.rel_tol = cfg.simulate.rel_tol;
    opts.abs_tol = cfg.simulate.abs_tol;

    std::vector<std::string> files;
    for (std::size_t k = 0; k < cfg.simulate.initial_conditions.size(); ++k) {
        const auto& ic = cfg.simulate.initial_conditions[k];
        StateVec x0{ic[0], ic[1], ic[2], ic[3]};
        std::string name = "trajectory_" + std::to_string(k) + ".csv";

        std::vector<std::vector<double>> rows;
        if (cfg.simulate.horizon == 0.0) {
            rows.push_back({cfg.simulate.t0, x0.S, x0.E, x0.I, x0.R, x0.N()});
        } else {
            Trajectory traj =
                simulate(cfg.model, inc, x0, cfg.simulate.t0, cfg.simulate.t0 + cfg.simulate.horizon, opts);
            rows = sample_rows(traj, cfg.simulate.t0, cfg.simulate.t0 + cfg.simulate.horizon,
                               cfg.simulate.samples);
        }
        write_csv((fs::path(dir) / name).string(), kTrajectoryHeader, rows);
        files.push_back(name);
    }
    write_file((fs::path(dir) / "plot_simulate.gp").string(), gnuplot_script(files, "infective trajectories"));

    out << "simulate: wrote " << files.size() << " trajectory file(s) to " << dir << "\n";
    return 0;
}

int cmd_analyze(const RunConfig& cfg, const CliOverrides& ov, std::ostream& out, std::ostream&)
{
    const std::string dir = resolve_out_dir(cfg, ov);
    IncidenceSpec inc = cfg.make_incidence();

    ThresholdReport rep = existence_report(cfg.model, inc, resolve_tol(cfg, ov));
    write_json((fs::path(dir) / "analysis.json").string(), threshold_json(rep));
    write_text((fs::path(dir) / "analysis.txt").string(), threshold_text(rep));

    out << "analyze: r0=" << format_full(rep.r0.r0) << " classification=" << to_string(rep.r0.classification)
        << " verdict=" << to_string(rep.verdict) << " -> " << dir << "/analysis.json\n";
    return 0;
}

int cmd_endemic(const RunConfig& cfg, const CliOverrides& ov, std::ostream& out, std::ostream&)
{
    const std::string dir = resolve_out_dir(cfg, ov);
    IncidenceSpec inc = cfg.make_incidence();

    ThresholdReport rep = existence_report(cfg.model, inc, resolve_tol(cfg, ov));
    json j = threshold_json(rep);
    auto lines = threshold_text(rep);

    if (rep.verdict == Verdict::EndemicGuaranteed) {
        PersistenceEstimate pe = persistence_estimate(cfg.model, inc, cfg.endemic.burn_in,
                                                      cfg.endemic.horizon, cfg.endemic.runs,
                                                      resolve_seed(cfg, ov));
        j["persistence"] = {{"k_lower", pe.k_lower},
                            {"min_infective", pe.min_infective},
                            {"degenerate", pe.degenerate},
                            {"runs", pe.runs}};
        lines.emplace_back("k_lower", format_full(pe.k_lower));
        if (!pe.degenerate && rep.point) {
            AprioriBounds ab = apriori_bounds(cfg.model, inc.c1(), inc.c2(), pe.k_lower, *rep.point);
            j["apriori_bounds"] = {{"a1_xi", ab.a1_xi}, {"a1_chi", ab.a1_chi}, {"a2_xi", ab.a2_xi},
                                   {"a2_chi", ab.a2_chi}, {"a3_xi", ab.a3_xi}, {"a3_chi", ab.a3_chi},
                                   {"a4_xi", ab.a4_xi}, {"a4_chi", ab.a4_chi}, {"m0", ab.m0},
                                   {"m1", ab.m1},       {"m2", ab.m2},         {"m3", ab.m3},
                                   {"m4", ab.m4},       {"radius", ab.radius}};
            lines.emplace_back("radius_m", format_full(ab.radius));
        }
    }

    write_json((fs::path(dir) / "threshold_report.json").string(), j);
    write_text((fs::path(dir) / "threshold_report.txt").string(), lines);

    out << "endemic: verdict=" << to_string(rep.verdict) << " -> " << dir << "/threshold_report.json\n";
    return 0;
}

int cmd_orbit(const RunConfig& cfg, const CliOverrides& ov, std::ostream& out, std::ostream&)
{
    const std::string dir = resolve_out_dir(cfg, ov);
    IncidenceSpec inc = cfg.make_incidence();

    StateVec guess;
    if (cfg.orbit.guess) {
        const auto& g = *cfg.orbit.guess;
        guess = {g[0], g[1], g[2], g[3]};
    } else {
        guess = flow(cfg.model, inc, {0.1, 0.1, 0.1, 0.1}, 0.0, cfg.orbit.settle_periods * cfg.model.omega);
        for (int i = 0; i < 4; ++i)
            if (guess[i] <= 0.0) guess[i] = 1e-12;
    }

    PeriodicOrbit orbit = find_periodic_orbit(cfg.model, inc, guess, cfg.orbit.max_newton);

    std::vector<std::vector<double>> rows;
    for (int k = 0; k < cfg.orbit.samples; ++k) {
        double t = cfg.model.omega * k / cfg.orbit.samples;
        auto x = orbit.orbit.at(t);
        rows.push_back({t, x[0], x[1], x[2], x[3], x[0] + x[1] + x[2] + x[3]});
    }
    write_csv((fs::path(dir) / "orbit.csv").string(), kTrajectoryHeader, rows);

    json j;
    j["anchor"] = {orbit.anchor.S, orbit.anchor.E, orbit.anchor.I, orbit.anchor.R};
    j["residual"] = orbit.residual;
    j["floquet_moduli"] = orbit.floquet_moduli;
    j["endemic"] = orbit.endemic;
    j["newton_iterations"] = orbit.newton_iterations;
    j["period"] = cfg.model.omega;
    write_json((fs::path(dir) / "orbit.json").string(), j);
    write_file((fs::path(dir) / "plot_orbit.gp").string(), gnuplot_script({"orbit.csv"}, "periodic orbit"));

    out << "orbit: endemic=" << (orbit.endemic ? "true" : "false")
        << " residual=" << format_full(orbit.residual) << " -> " << dir << "/orbit.csv\n";
    return 0;
}

int cmd_sweep(const RunConfig& cfg, const CliOverrides& ov, std::ostream& out, std::ostream&)
{
    const std::string dir = resolve_out_dir(cfg, ov);
    const double tol = resolve_tol(cfg, ov);

    // Cells scale the contact coefficient: constant beta with one k=1
    // harmonic of amplitude beta*b, keeping the configured phase.
    double phase = cfg.model.beta.harmonics().empty() ? 0.0 : cfg.model.beta.harmonics().front().phase;

    struct Cell {
        double beta, b;
        double r0 = std::nan(""), rho = std::nan(""), det = std::nan("");
        std::string verdict = "-", status = "ok";
    };
    std::vector<Cell> cells;
    for (double beta : cfg.sweep.beta)
        for (double b : cfg.sweep.b) cells.push_back({beta, b});

    auto run_cell = [&](Cell& cell) {
        try {
            ModelParams params = cfg.model;
            std::vector<Harmonic> harmonics;
            if (cell.b != 0.0) harmonics.push_back({cell.beta * cell.b, 1, phase});
            params.beta = PeriodicCoefficient(cell.beta, harmonics, cfg.model.omega);
            params.validate();
            RunConfig cell_cfg = cfg;
            cell_cfg.model = params;
            IncidenceSpec inc = cell_cfg.make_incidence();

            ThresholdReport rep = existence_report(params, inc, tol);
            cell.r0 = rep.r0.r0;
            cell.rho = rep.r0.rho_fv;
            if (rep.matrix) cell.det = rep.matrix->det;
            cell.verdict = to_string(rep.verdict);
        } catch (const std::exception& e) {
            cell.status = e.what();
        }
    };

    const int jobs = std::max(1, ov.jobs.value_or(1));
    if (jobs == 1) {
        for (auto& cell : cells) run_cell(cell);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
                    run_cell(cells[i]);
            });
        }
        for (auto& th : pool) th.join();
    }

    // Assemble in grid order regardless of completion order.
    std::string csv = "beta,b,r0,rho_fv,det_m,verdict,status\n";
    for (const auto& c : cells) {
        csv += format_full(c.beta) + "," + format_full(c.b) + "," + format_full(c.r0) + "," +
               format_full(c.rho) + "," + format_full(c.det) + "," + c.verdict + "," + c.status + "\n";
    }
    write_file((fs::path(dir) / "sweep.csv").string(), csv);

    out << "sweep: " << cells.size() << " cell(s) -> " << dir << "/sweep.csv\n";
    return 0;
}

int cmd_check_hypotheses(const RunConfig& cfg, const CliOverrides& ov, std::ostream& out, std::ostream&)
{
    const std::string dir = resolve_out_dir(cfg, ov);
    IncidenceSpec inc = cfg.make_incidence();
    NBox box = cfg.model.population_box();

    HypothesisReport rep = check_hypotheses(inc, box, cfg.hypotheses.grid);

    auto check_json = [](const HypothesisCheck& c) {
        json j;
        j["passed"] = c.passed;
        j["detail"] = c.detail;
        if (c.has_witness) j["witness"] = {c.witness[0], c.witness[1], c.witness[2]};
        return j;
    };
    json j;
    j["family"] = inc.name();
    j["box"] = {{"n_min", box.n_min}, {"n_max", box.n_max}};
    j["partials_consistent"] = check_json(rep.partials_consistent);
    j["vanishes_on_boundary"] = check_json(rep.vanishes_on_boundary);
    j["ratio_bounded"] = check_json(rep.ratio_bounded);
    j["monotone"] = check_json(rep.monotone);
    j["ratio_nonincreasing_in_i"] = check_json(rep.ratio_nonincreasing_in_i);
    j["tight_c1"] = rep.tight_c1;
    j["tight_c2"] = rep.tight_c2;
    j["all_passed"] = rep.all_passed();
    write_json((fs::path(dir) / "hypotheses.json").string(), j);

    out << "check-hypotheses: " << (rep.all_passed() ? "all checks passed" : "violations found")
        << " (tightest c1=" << format_full(rep.tight_c1) << ", c2=" << format_full(rep.tight_c2)
        << ") -> " << dir << "/hypotheses.json\n";
    return 0;
}

int run_command(const std::string& name, const RunConfig& cfg, const CliOverrides& ov,
                std::ostream& out, std::ostream& err)
{
    try {
        if (name == "simulate") return cmd_simulate(cfg, ov, out, err);
        if (name == "analyze") return cmd_analyze(cfg, ov, out, err);
        if (name == "endemic") return cmd_endemic(cfg, ov, out, err);
        if (name == "orbit") return cmd_orbit(cfg, ov, out, err);
        if (name == "sweep") return cmd_sweep(cfg, ov, out, err);
        if (name == "check-hypotheses") return cmd_check_hypotheses(cfg, ov, out, err);
        err << "error: unknown command '" << name << "'\n";
        return 2;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const IntegrationError& e) {
        err << "integration error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace seirs
