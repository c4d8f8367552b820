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

#include "seirs/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "seirs/errors.hpp"

namespace seirs {

namespace toml {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line)
{
    bool in_str = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_str = !in_str;
        if (line[i] == '#' && !in_str) return line.substr(0, i);
    }
    return line;
}

std::vector<std::string> split_path(const std::string& path, int lineno)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : path) {
        if (c == '.') {
            if (cur.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty path segment");
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (cur.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty path segment");
    out.push_back(cur);
    return out;
}

// Walk/create intermediate tables; a table-array component descends
// into its last element.
Table* descend(Table* root, const std::vector<std::string>& path, std::size_t count, int lineno)
{
    Table* cur = root;
    for (std::size_t i = 0; i < count; ++i) {
        auto& slot = (*cur)[path[i]];
        if (slot.table == nullptr && slot.table_array.empty() && slot.kind != Value::Kind::Table &&
            slot.kind != Value::Kind::TableArray) {
            slot.kind = Value::Kind::Table;
            slot.table = std::make_shared<Table>();
        }
        if (slot.kind == Value::Kind::Table) {
            cur = slot.table.get();
        } else if (slot.kind == Value::Kind::TableArray) {
            cur = slot.table_array.back().get();
        } else {
            throw ConfigError("config line " + std::to_string(lineno) + ": '" + path[i] +
                              "' is not a section");
        }
    }
    return cur;
}

double parse_number(const std::string& text, int lineno)
{
    const char* begin = text.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw ConfigError("config line " + std::to_string(lineno) + ": expected a number, got '" + text + "'");
    return v;
}

Value parse_value(const std::string& text, int lineno)
{
    Value v;
    if (text.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": missing value");
    if (text.front() == '"') {
        if (text.size() < 2 || text.back() != '"')
            throw ConfigError("config line " + std::to_string(lineno) + ": unterminated string");
        v.kind = Value::Kind::String;
        v.string = text.substr(1, text.size() - 2);
        return v;
    }
    if (text == "true" || text == "false") {
        v.kind = Value::Kind::Boolean;
        v.boolean = text == "true";
        return v;
    }
    if (text.front() == '[') {
        if (text.back() != ']')
            throw ConfigError("config line " + std::to_string(lineno) + ": unterminated array");
        v.kind = Value::Kind::NumberArray;
        std::string body = text.substr(1, text.size() - 2);
        std::string item;
        std::istringstream is(body);
        while (std::getline(is, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            v.array.push_back(parse_number(item, lineno));
        }
        return v;
    }
    v.kind = Value::Kind::Number;
    v.number = parse_number(text, lineno);
    return v;
}

} // namespace

Table parse(const std::string& text)
{
    Table root;
    Table* current = &root;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;

        if (line.size() >= 4 && line.substr(0, 2) == "[[" && line.substr(line.size() - 2) == "]]") {
            auto path = split_path(line.substr(2, line.size() - 4), lineno);
            Table* parent = descend(&root, path, path.size() - 1, lineno);
            auto& slot = (*parent)[path.back()];
            if (slot.table_array.empty() && slot.kind != Value::Kind::TableArray) {
                if (slot.table || slot.kind == Value::Kind::Table)
                    throw ConfigError("config line " + std::to_string(lineno) + ": '" + path.back() +
                                      "' already defined as a section");
                slot.kind = Value::Kind::TableArray;
            }
            slot.table_array.push_back(std::make_shared<Table>());
            current = slot.table_array.back().get();
            continue;
        }
        if (line.front() == '[' && line.back() == ']') {
            auto path = split_path(line.substr(1, line.size() - 2), lineno);
            current = descend(&root, path, path.size(), lineno);
            continue;
        }

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
        if (current->count(key))
            throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        (*current)[key] = parse_value(val, lineno);
    }
    return root;
}

Table parse_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

} // namespace toml

namespace {

using toml::Table;
using toml::Value;

/// Tracks which keys a loader consumed so leftovers can be rejected.
class Cursor {
  public:
    Cursor(const Table& table, std::string path) : table_(table), path_(std::move(path)) {}

    ~Cursor() = default;

    const Value* find(const std::string& key)
    {
        used_.insert(key);
        auto it = table_.find(key);
        return it == table_.end() ? nullptr : &it->second;
    }

    double number(const std::string& key, double fallback)
    {
        const Value* v = find(key);
        if (!v) return fallback;
        if (v->kind != Value::Kind::Number) throw ConfigError(path_ + key + ": expected a number");
        return v->number;
    }

    double require_number(const std::string& key)
    {
        const Value* v = find(key);
        if (!v) throw ConfigError(path_ + key + ": required key missing");
        if (v->kind != Value::Kind::Number) throw ConfigError(path_ + key + ": expected a number");
        return v->number;
    }

    int integer(const std::string& key, int fallback)
    {
        double d = number(key, fallback);
        if (d != std::floor(d)) throw ConfigError(path_ + key + ": expected an integer");
        return static_cast<int>(d);
    }

    std::string string(const std::string& key, const std::string& fallback)
    {
        const Value* v = find(key);
        if (!v) return fallback;
        if (v->kind != Value::Kind::String) throw ConfigError(path_ + key + ": expected a string");
        return v->string;
    }

    std::optional<std::vector<double>> array(const std::string& key)
    {
        const Value* v = find(key);
        if (!v) return std::nullopt;
        if (v->kind != Value::Kind::NumberArray) throw ConfigError(path_ + key + ": expected an array of numbers");
        return v->array;
    }

    std::optional<Cursor> section(const std::string& key)
    {
        const Value* v = find(key);
        if (!v) return std::nullopt;
        if (v->kind != Value::Kind::Table) throw ConfigError(path_ + key + ": expected a [section]");
        return Cursor(*v->table, path_ + key + ".");
    }

    std::vector<Cursor> sections(const std::string& key)
    {
        const Value* v = find(key);
        std::vector<Cursor> out;
        if (!v) return out;
        if (v->kind != Value::Kind::TableArray)
            throw ConfigError(path_ + key + ": expected repeated [[" + path_ + key + "]] blocks");
        for (const auto& t : v->table_array) out.emplace_back(*t, path_ + key + ".");
        return out;
    }

    void reject_unknown() const
    {
        for (const auto& [key, value] : table_) {
            if (!used_.count(key)) throw ConfigError("unknown config key '" + path_ + key + "'");
        }
    }

    const std::string& path() const { return path_; }

  private:
    const Table& table_;
    std::string path_;
    std::set<std::string> used_;
};

PeriodicCoefficient load_coefficient(Cursor cur, double omega)
{
    double constant = cur.require_number("constant");
    std::vector<Harmonic> harmonics;
    for (auto& h : cur.sections("harmonic")) {
        Harmonic harm;
        harm.amplitude = h.require_number("amplitude");
        harm.k = h.integer("k", 1);
        harm.phase = h.number("phase", 0.0);
        if (harm.k < 1) throw ConfigError(h.path() + "k: frequency multiple must be >= 1");
        h.reject_unknown();
        harmonics.push_back(harm);
    }
    cur.reject_unknown();
    return {constant, std::move(harmonics), omega};
}

std::array<double, 4> load_state4(Cursor& cur, const std::string& key)
{
    auto arr = cur.array(key);
    if (!arr || arr->size() != 4)
        throw ConfigError(cur.path() + key + ": expected an array of 4 numbers [S, E, I, R]");
    return {(*arr)[0], (*arr)[1], (*arr)[2], (*arr)[3]};
}

} // namespace

IncidenceSpec RunConfig::make_incidence() const
{
    NBox box = model.population_box();
    const std::string& f = incidence.family;
    if (f == "mass-action") return IncidenceSpec::mass_action();
    if (f == "standard") return IncidenceSpec::standard(box);
    if (f == "michaelis-menten") {
        if (!incidence.contact) throw ConfigError("incidence.cn required for michaelis-menten");
        return IncidenceSpec::michaelis_menten(RationalLinear::parse(*incidence.contact), box);
    }
    if (f == "holling2") {
        if (!incidence.alpha) throw ConfigError("incidence.alpha required for holling2");
        return IncidenceSpec::holling2(*incidence.alpha, box);
    }
    if (f == "power") {
        if (!incidence.p || !incidence.q) throw ConfigError("incidence.p and incidence.q required for power");
        return IncidenceSpec::power_law(*incidence.p, *incidence.q, box);
    }
    if (f == "saturated-power") {
        if (!incidence.p || !incidence.q || !incidence.alpha)
            throw ConfigError("incidence.p, incidence.q and incidence.alpha required for saturated-power");
        return IncidenceSpec::saturated_power(*incidence.p, *incidence.q, *incidence.alpha, box);
    }
    throw ConfigError("unknown incidence family '" + f + "'");
}

RunConfig parse_config(const std::string& text)
{
    Table root = toml::parse(text);
    Cursor top(root, "");
    RunConfig cfg;

    auto model = top.section("model");
    if (!model) throw ConfigError("config: [model] section is required");
    cfg.omega = model->require_number("omega");
    if (!(cfg.omega > 0.0)) throw ConfigError("model.omega must be positive");
    cfg.model.omega = cfg.omega;

    auto coeff = [&](const char* name, PeriodicCoefficient& dst) {
        auto sec = model->section(name);
        if (!sec) throw ConfigError(std::string("config: [model.") + name + "] section is required");
        dst = load_coefficient(std::move(*sec), cfg.omega);
    };
    coeff("lambda", cfg.model.Lambda);
    coeff("mu", cfg.model.mu);
    coeff("beta", cfg.model.beta);
    coeff("eta", cfg.model.eta);
    coeff("epsilon", cfg.model.epsilon);
    coeff("gamma", cfg.model.gamma);
    model->reject_unknown();
    try {
        cfg.model.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    auto inc = top.section("incidence");
    if (!inc) throw ConfigError("config: [incidence] section is required");
    cfg.incidence.family = inc->string("family", "");
    if (cfg.incidence.family.empty()) throw ConfigError("incidence.family is required");
    auto opt_number = [](const Value* v, const char* what) {
        if (v && v->kind != Value::Kind::Number) throw ConfigError(std::string(what) + ": expected a number");
        return v ? std::optional<double>(v->number) : std::nullopt;
    };
    cfg.incidence.alpha = opt_number(inc->find("alpha"), "incidence.alpha");
    cfg.incidence.p = opt_number(inc->find("p"), "incidence.p");
    cfg.incidence.q = opt_number(inc->find("q"), "incidence.q");
    if (const Value* v = inc->find("cn")) {
        if (v->kind != Value::Kind::String) throw ConfigError("incidence.cn: expected a string");
        cfg.incidence.contact = v->string;
    }
    inc->reject_unknown();

    if (auto sim = top.section("simulate")) {
        cfg.simulate.t0 = sim->number("t0", cfg.simulate.t0);
        cfg.simulate.horizon = sim->number("horizon", cfg.simulate.horizon);
        cfg.simulate.rel_tol = sim->number("rel_tol", cfg.simulate.rel_tol);
        cfg.simulate.abs_tol = sim->number("abs_tol", cfg.simulate.abs_tol);
        cfg.simulate.samples = sim->integer("samples", cfg.simulate.samples);
        auto ics = sim->sections("ic");
        if (!ics.empty()) {
            cfg.simulate.initial_conditions.clear();
            for (auto& ic : ics) {
                cfg.simulate.initial_conditions.push_back(load_state4(ic, "state"));
                ic.reject_unknown();
            }
        }
        if (cfg.simulate.horizon < 0.0) throw ConfigError("simulate.horizon must be >= 0");
        if (cfg.simulate.samples < 1) throw ConfigError("simulate.samples must be >= 1");
        sim->reject_unknown();
    }

    if (auto an = top.section("analyze")) {
        cfg.analyze.bisect_tol = an->number("bisect_tol", cfg.analyze.bisect_tol);
        if (!(cfg.analyze.bisect_tol > 0.0)) throw ConfigError("analyze.bisect_tol must be positive");
        an->reject_unknown();
    }

    if (auto en = top.section("endemic")) {
        cfg.endemic.burn_in = en->number("burn_in", cfg.endemic.burn_in);
        cfg.endemic.horizon = en->number("horizon", cfg.endemic.horizon);
        cfg.endemic.runs = en->integer("runs", cfg.endemic.runs);
        if (!(cfg.endemic.horizon > cfg.endemic.burn_in) || cfg.endemic.burn_in < 0.0)
            throw ConfigError("endemic: need 0 <= burn_in < horizon");
        if (cfg.endemic.runs < 1) throw ConfigError("endemic.runs must be >= 1");
        en->reject_unknown();
    }

    if (auto orb = top.section("orbit")) {
        cfg.orbit.max_newton = orb->integer("max_newton", cfg.orbit.max_newton);
        cfg.orbit.settle_periods = orb->number("settle_periods", cfg.orbit.settle_periods);
        cfg.orbit.samples = orb->integer("samples", cfg.orbit.samples);
        if (const Value* v = orb->find("guess")) {
            if (v->kind != Value::Kind::NumberArray || v->array.size() != 4)
                throw ConfigError("orbit.guess: expected an array of 4 numbers [S, E, I, R]");
            cfg.orbit.guess = std::array<double, 4>{v->array[0], v->array[1], v->array[2], v->array[3]};
        }
        if (cfg.orbit.max_newton < 1) throw ConfigError("orbit.max_newton must be >= 1");
        if (cfg.orbit.samples < 2) throw ConfigError("orbit.samples must be >= 2");
        orb->reject_unknown();
    }

    if (auto sw = top.section("sweep")) {
        if (auto beta = sw->array("beta")) cfg.sweep.beta = *beta;
        if (auto b = sw->array("b")) cfg.sweep.b = *b;
        if (cfg.sweep.beta.empty() || cfg.sweep.b.empty())
            throw ConfigError("sweep: beta and b grids must be nonempty");
        sw->reject_unknown();
    }

    if (auto hy = top.section("hypotheses")) {
        cfg.hypotheses.grid = hy->integer("grid", cfg.hypotheses.grid);
        if (cfg.hypotheses.grid < 2) throw ConfigError("hypotheses.grid must be >= 2");
        hy->reject_unknown();
    }

    if (auto out = top.section("output")) {
        cfg.output.dir = out->string("dir", cfg.output.dir);
        double seed = out->number("seed", static_cast<double>(cfg.output.seed));
        if (seed < 0 || seed != std::floor(seed)) throw ConfigError("output.seed must be a nonnegative integer");
        cfg.output.seed = static_cast<std::uint64_t>(seed);
        out->reject_unknown();
    }

    top.reject_unknown();

    // Fail early if the incidence section is inconsistent.
    (void)cfg.make_incidence();
    return cfg;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

} // namespace seirs
