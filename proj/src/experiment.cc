// Copyright 2026 The bosonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bosonlab/experiment.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bosonlab/bosonic.h"
#include "bosonlab/classical.h"
#include "bosonlab/matrix_io.h"
#include "bosonlab/permanent.h"

namespace bosonlab {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto p = s.find(sep, start);
        out.push_back(trim(std::string_view(s).substr(start, p == std::string::npos ? std::string::npos : p - start)));
        if (p == std::string::npos) {
            return out;
        }
        start = p + 1;
    }
}

template <typename T>
T parse_number(const std::string &s, const std::string &key) {
    T v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
        throw std::invalid_argument("config key '" + key + "': bad value '" + s + "'");
    }
    return v;
}

template <typename T>
std::vector<T> parse_list(const std::string &s, const std::string &key) {
    std::vector<T> out;
    if (s.empty()) {
        return out;
    }
    for (const auto &item : split(s, ',')) {
        out.push_back(parse_number<T>(item, key));
    }
    return out;
}

// "start:step:stop", inclusive of stop up to roundoff.
std::vector<double> parse_grid(const std::string &s, const std::string &key) {
    auto parts = split(s, ':');
    if (parts.size() != 3) {
        throw std::invalid_argument("config key '" + key + "' expects start:step:stop");
    }
    double a = parse_number<double>(parts[0], key);
    double h = parse_number<double>(parts[1], key);
    double b = parse_number<double>(parts[2], key);
    if (!(h > 0.0) || b < a) {
        throw std::invalid_argument("config key '" + key + "' needs step > 0 and stop >= start");
    }
    std::vector<double> out;
    long steps = std::lround(std::floor((b - a) / h + 1e-9));
    if (steps > 1'000'000) {
        throw GuardExceeded("time grid has more than 10^6 points");
    }
    for (long k = 0; k <= steps; ++k) {
        out.push_back(a + k * h);
    }
    return out;
}

// "a..b" or a comma list.
std::vector<std::uint64_t> parse_seeds(const std::string &s, const std::string &key) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        return parse_list<std::uint64_t>(s, key);
    }
    auto lo = parse_number<std::uint64_t>(trim(s.substr(0, dots)), key);
    auto hi = parse_number<std::uint64_t>(trim(s.substr(dots + 2)), key);
    if (hi < lo || hi - lo > 100000) {
        throw std::invalid_argument("config key '" + key + "': bad seed range");
    }
    std::vector<std::uint64_t> out;
    for (auto v = lo; v <= hi; ++v) {
        out.push_back(v);
    }
    return out;
}

const char *schedule_name(ScheduleKind k) {
    switch (k) {
        case ScheduleKind::Clean:
            return "clean";
        case ScheduleKind::Anderson:
            return "anderson";
        case ScheduleKind::Random:
            return "random";
        case ScheduleKind::File:
            return "file";
    }
    return "?";
}

bool uses_seed(ScheduleKind k) {
    return k == ScheduleKind::Anderson || k == ScheduleKind::Random;
}

HoppingSchedule load_schedule_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open schedule file '" + path + "'");
    }
    return read_schedule(in);
}

// Cached file schedule so grid points do not reread the file.
struct ScheduleSource {
    const ExperimentConfig &config;
    const LatticeSpec &spec;
    HoppingSchedule file;

    ScheduleSource(const ExperimentConfig &c, const LatticeSpec &s) : config(c), spec(s) {
        if (config.schedule == ScheduleKind::File) {
            file = load_schedule_file(config.schedule_file);
            if (file.modes() != spec.m && !file.segments.empty()) {
                throw std::invalid_argument("schedule file has " + std::to_string(file.modes()) +
                                            " modes but the lattice has " + std::to_string(spec.m));
            }
            auto report = validate_schedule(file, spec);
            if (!report.ok()) {
                throw std::invalid_argument("schedule file is invalid: " + report.describe());
            }
            double last = config.times.empty() ? 0.0 : config.times.back();
            if (last > file.total_time() * (1.0 + 1e-12)) {
                throw std::invalid_argument("time grid extends past the schedule file's total time " +
                                            fmt(file.total_time()));
            }
        }
    }

    Propagator at(std::uint64_t seed, double t) const {
        HoppingSchedule sched = config.schedule == ScheduleKind::File ? prefix(file, t)
                                                                      : schedule_at(config, spec, seed, t);
        if (sched.segments.empty()) {
            return {ComplexMatrix::Identity(spec.m, spec.m), 0.0};
        }
        return evolve(sched);
    }
};

struct GridPoint {
    std::uint64_t seed;
    double t;
};

std::vector<GridPoint> grid_points(const ExperimentConfig &config) {
    std::vector<GridPoint> out;
    std::vector<std::uint64_t> seeds = uses_seed(config.schedule) ? config.hopping_seeds
                                                                  : std::vector<std::uint64_t>{0};
    for (auto s : seeds) {
        for (double t : config.times) {
            out.push_back({s, t});
        }
    }
    return out;
}

void validate_config(const ExperimentConfig &c) {
    if (c.times.empty()) {
        throw std::invalid_argument("time grid is empty");
    }
    for (std::size_t k = 0; k < c.times.size(); ++k) {
        if (!(c.times[k] >= 0.0) || !std::isfinite(c.times[k])) {
            throw std::invalid_argument("time grid entries must be finite and non-negative");
        }
        if (k && !(c.times[k] > c.times[k - 1])) {
            throw std::invalid_argument("time grid must be strictly increasing");
        }
    }
    if (uses_seed(c.schedule) && c.hopping_seeds.empty()) {
        throw std::invalid_argument("schedule needs at least one hopping seed");
    }
    if (c.schedule == ScheduleKind::File && c.schedule_file.empty()) {
        throw std::invalid_argument("schedule = file needs schedule_file");
    }
    if (!(c.W >= 0.0)) {
        throw std::invalid_argument("W must be non-negative");
    }
    if (!(c.easy_fraction > 0.0)) {
        throw std::invalid_argument("easy_fraction must be positive");
    }
    c.bound_params().validate();
}

}  // namespace

BoundParams ExperimentConfig::bound_params() const {
    int dim = lattice == LatticeKind::Grid ? static_cast<int>(dims.size()) : (lattice == LatticeKind::Chain ? 1 : d);
    return {v.value_or(lieb_robinson_velocity(dim)), xi};
}

ExperimentConfig parse_config(std::istream &in) {
    ExperimentConfig c;
    std::string line;
    int lineno = 0;
    bool n_set = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto eq = line.find('=');
        std::string key, value;
        if (eq != std::string::npos) {
            key = trim(std::string_view(line).substr(0, eq));
            value = trim(std::string_view(line).substr(eq + 1));
        } else {
            auto sp = line.find_first_of(" \t");
            key = line.substr(0, sp);
            value = sp == std::string::npos ? "" : trim(std::string_view(line).substr(sp));
        }
        try {
            if (key == "lattice") {
                if (value == "sparse") {
                    c.lattice = LatticeKind::Sparse;
                } else if (value == "chain") {
                    c.lattice = LatticeKind::Chain;
                } else if (value == "grid") {
                    c.lattice = LatticeKind::Grid;
                } else {
                    throw std::invalid_argument("lattice must be sparse, chain or grid");
                }
            } else if (key == "n") {
                c.n = parse_number<int>(value, key);
                n_set = true;
            } else if (key == "beta") {
                c.beta = parse_number<double>(value, key);
            } else if (key == "c1") {
                c.c1 = parse_number<double>(value, key);
            } else if (key == "d") {
                c.d = parse_number<int>(value, key);
            } else if (key == "m") {
                c.m = parse_number<int>(value, key);
            } else if (key == "dims") {
                std::string v = value;
                std::replace(v.begin(), v.end(), 'x', ',');
                c.dims = parse_list<int>(v, key);
            } else if (key == "occupied") {
                c.occupied = parse_list<int>(value, key);
            } else if (key == "schedule") {
                if (value == "clean") {
                    c.schedule = ScheduleKind::Clean;
                } else if (value == "anderson") {
                    c.schedule = ScheduleKind::Anderson;
                } else if (value == "random") {
                    c.schedule = ScheduleKind::Random;
                } else if (value == "file") {
                    c.schedule = ScheduleKind::File;
                } else {
                    throw std::invalid_argument("schedule must be clean, anderson, random or file");
                }
            } else if (key == "W") {
                c.W = parse_number<double>(value, key);
            } else if (key == "hopping_seed" || key == "hopping_seeds") {
                c.hopping_seeds = parse_seeds(value, key);
            } else if (key == "schedule_file") {
                c.schedule_file = value;
            } else if (key == "times") {
                c.times = parse_list<double>(value, key);
            } else if (key == "time_grid") {
                c.times = parse_grid(value, key);
            } else if (key == "v") {
                c.v = parse_number<double>(value, key);
            } else if (key == "xi") {
                c.xi = parse_number<double>(value, key);
            } else if (key == "easy_fraction") {
                c.easy_fraction = parse_number<double>(value, key);
            } else if (key == "samples") {
                c.samples = parse_number<std::size_t>(value, key);
            } else if (key == "sampler") {
                if (value == "exact") {
                    c.sampler = SamplerKind::Exact;
                } else if (value == "dp") {
                    c.sampler = SamplerKind::Dp;
                } else {
                    throw std::invalid_argument("sampler must be exact or dp");
                }
            } else if (key == "seed") {
                c.seed = parse_number<std::uint64_t>(value, key);
            } else if (key == "sum_L") {
                c.sum_L = parse_list<double>(value, key);
            } else if (key == "collision_ratio_max") {
                c.collision_ratio_max = parse_number<double>(value, key);
            } else {
                throw std::invalid_argument("unknown config key '" + key + "'");
            }
        } catch (const GuardExceeded &) {
            throw;
        } catch (const std::exception &e) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (c.lattice != LatticeKind::Sparse) {
        if (n_set && static_cast<int>(c.occupied.size()) != c.n) {
            throw std::invalid_argument("n does not match the number of occupied sites");
        }
        c.n = static_cast<int>(c.occupied.size());
    }
    validate_config(c);
    return c;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    return parse_config(in);
}

LatticeSpec make_lattice(const ExperimentConfig &config) {
    switch (config.lattice) {
        case LatticeKind::Sparse:
            return build_lattice(config.n, config.beta, config.c1, config.d);
        case LatticeKind::Chain:
            return make_chain(config.m, config.occupied);
        case LatticeKind::Grid:
            return make_grid(config.dims, config.occupied);
    }
    throw std::invalid_argument("unknown lattice kind");
}

void check_guards(const ExperimentConfig &config, const LatticeSpec &spec, bool fock) {
    const int n = static_cast<int>(spec.occupied.size());
    if (n > kMaxBosons) {
        throw GuardExceeded(std::to_string(n) + " bosons exceed the limit of " + std::to_string(kMaxBosons));
    }
    std::size_t outcomes = fock_dimension(spec.m, n);
    if (outcomes > kMaxOutcomes) {
        throw GuardExceeded("n = " + std::to_string(n) + ", m = " + std::to_string(spec.m) + " has " +
                            std::to_string(outcomes) + " outcomes; the limit is " + std::to_string(kMaxOutcomes));
    }
    if (fock && outcomes > kMaxFockDimension) {
        throw GuardExceeded("Fock dimension " + std::to_string(outcomes) + " exceeds " +
                            std::to_string(kMaxFockDimension));
    }
    (void)config;
}

HoppingSchedule schedule_at(const ExperimentConfig &config, const LatticeSpec &spec, std::uint64_t hopping_seed,
                            double t) {
    if (t < 0.0) {
        throw std::invalid_argument("negative time");
    }
    if (config.schedule == ScheduleKind::File) {
        return prefix(load_schedule_file(config.schedule_file), t);
    }
    if (t == 0.0) {
        return {};
    }
    switch (config.schedule) {
        case ScheduleKind::Clean:
            return {clean_hopping(spec), t};
        case ScheduleKind::Anderson:
            return {anderson_hopping(spec, config.W, hopping_seed), t};
        case ScheduleKind::Random:
            return {random_hopping(spec, hopping_seed), t};
        case ScheduleKind::File:
            break;
    }
    throw std::invalid_argument("unknown schedule kind");
}

Propagator propagator_at(const ExperimentConfig &config, const LatticeSpec &spec, std::uint64_t hopping_seed,
                         double t) {
    ScheduleSource source(config, spec);
    return source.at(hopping_seed, t);
}

CommandResult cmd_phase_diagram(const ExperimentConfig &config, unsigned threads) {
    validate_config(config);
    const LatticeSpec spec = make_lattice(config);
    check_guards(config, spec);
    const ScheduleSource source(config, spec);
    const BoundParams params = config.bound_params();
    const Timescales ts = timescales(spec, params, config.easy_fraction);
    const Configuration r = initial_configuration(spec);
    const auto points = grid_points(config);

    std::vector<std::string> rows(points.size());
    parallel_for(points.size(), threads, [&](std::size_t k) {
        const auto [seed, t] = points[k];
        Propagator R = source.at(seed, t);
        double distance = tvd(exact_distribution(R, r), dp_distribution(markov_matrix(R), r));
        std::string row;
        row += std::to_string(spec.n) + "," + std::to_string(spec.m) + "," + fmt(spec.L) + "," + fmt(t) + "," +
               fmt(params.v * t / spec.L) + "," + fmt(distance) + "," +
               fmt(tvd_bound(spec.L, params.v * t, params.xi, spec.d)) + "," + fmt(ts.t_easy) + "," +
               fmt(ts.t_hard_scale) + "," + std::to_string(spec.d) + "," + fmt(spec.beta) + "," + fmt(spec.c1) +
               "," + fmt(params.v) + "," + fmt(params.xi) + "," + schedule_name(config.schedule) + "," +
               fmt(config.W) + "," + std::to_string(seed) + "\n";
        rows[k] = std::move(row);
    });
    CommandResult out;
    out.csv = "n,m,L,t,vt_over_L,tvd,tvd_bound,t_easy,t_hard_scale,d,beta,c1,v,xi,schedule,W,seed\n";
    for (auto &row : rows) {
        out.csv += row;
    }
    return out;
}

CommandResult cmd_check(const ExperimentConfig &config, unsigned threads) {
    validate_config(config);
    const LatticeSpec spec = make_lattice(config);
    check_guards(config, spec);
    const ScheduleSource source(config, spec);
    const BoundParams params = config.bound_params();
    const Configuration r = initial_configuration(spec);
    const auto points = grid_points(config);
    for (double L : config.sum_L) {
        if (!(L / params.xi >= 1.0)) {
            throw std::invalid_argument("sum_L entries need L / xi >= 1");
        }
    }

    struct Rows {
        std::string text;
        bool ok = true;
    };
    auto row = [&](Rows &out, const char *check, double L, const std::string &t, double measured, double envelope,
                   double ratio, bool pass) {
        out.text += std::string(check) + "," + std::to_string(spec.d) + "," + std::to_string(spec.n) + "," +
                    std::to_string(spec.m) + "," + fmt(L) + "," + t + "," + fmt(params.v) + "," + fmt(params.xi) +
                    "," + fmt(measured) + "," + fmt(envelope) + "," + fmt(ratio) + "," + (pass ? "1" : "0") + "\n";
        out.ok = out.ok && pass;
    };

    std::vector<Rows> results(points.size() + 1);
    parallel_for(points.size(), threads, [&](std::size_t k) {
        const auto [seed, t] = points[k];
        Propagator R = source.at(seed, t);
        Rows &out = results[k];
        EnvelopeReport lr = lr_envelope_check(R, t, params, spec);
        row(out, "lr_envelope", spec.L, fmt(t), lr.max_excess, kEnvelopeTolerance,
            static_cast<double>(lr.violations.size()), lr.ok());
        CollisionReport col = collision_check(R, r, spec, params, t);
        row(out, "collision", spec.L, fmt(t), col.max_C, col.envelope, col.ratio,
            std::isfinite(col.ratio) && col.ratio <= config.collision_ratio_max);
        if (config.schedule == ScheduleKind::Anderson) {
            EnvelopeReport loc = localization_check(R, spec);
            row(out, "localization", spec.L, fmt(t), loc.fitted_xi, loc.envelope_xi, loc.fitted_xi / loc.envelope_xi,
                loc.fitted_xi > 0.0 && std::isfinite(loc.fitted_xi));
        }
    });

    Rows &sums = results.back();
    for (double L : config.sum_L) {
        const double xi = params.xi;
        LatticeSum tail = lattice_tail_sum(L, xi, spec.d);
        bool tail_ok = std::isfinite(tail.ratio);
        if (spec.d == 1) {
            double closed = 2.0 * std::exp(-std::ceil(L) / xi) / (1.0 - std::exp(-1.0 / xi)) /
                            (xi * std::exp(-L / xi));
            tail_ok = std::abs(tail.ratio - closed) <= 1e-12 * closed;
        }
        row(sums, "lattice_tail", L, "", tail.sum, xi * std::pow(L, spec.d - 1) * std::exp(-L / xi), tail.ratio,
            tail_ok);
        LatticeSum scaled = scaled_lattice_sum(L, xi, spec.d);
        bool scaled_ok = std::isfinite(scaled.ratio);
        if (spec.d == 1) {
            scaled_ok = scaled.ratio <= 2.1 / (1.0 - std::exp(-2.0 * L / xi));
        }
        row(sums, "scaled_sum", L, "", scaled.sum, std::exp(-2.0 * L / xi), scaled.ratio, scaled_ok);
    }

    CommandResult out;
    out.csv = "check,d,n,m,L,t,v,xi,measured,envelope,ratio,pass\n";
    for (auto &res : results) {
        out.csv += res.text;
        out.ok = out.ok && res.ok;
    }
    return out;
}

CommandResult cmd_evolve(const ExperimentConfig &config) {
    validate_config(config);
    const LatticeSpec spec = make_lattice(config);
    const ScheduleSource source(config, spec);
    const auto points = grid_points(config);
    Propagator R = source.at(points.front().seed, points.front().t);
    std::ostringstream out;
    write_matrix(out, R.R);
    return {out.str(), true};
}

CommandResult cmd_sample(const ExperimentConfig &config) {
    validate_config(config);
    const LatticeSpec spec = make_lattice(config);
    if (config.sampler == SamplerKind::Exact) {
        check_guards(config, spec);
    }
    if (config.samples > 100'000'000) {
        throw GuardExceeded("more than 10^8 samples requested");
    }
    const ScheduleSource source(config, spec);
    const auto points = grid_points(config);
    Propagator R = source.at(points.front().seed, points.front().t);
    const Configuration r = initial_configuration(spec);
    std::vector<Configuration> draws = config.sampler == SamplerKind::Exact
                                           ? sample_exact(exact_distribution(R, r), config.seed, config.samples)
                                           : sample_dp(markov_matrix(R), r, config.seed, config.samples);
    std::string csv = "sample,occ\n";
    for (std::size_t k = 0; k < draws.size(); ++k) {
        csv += std::to_string(k) + "," + draws[k].to_string() + "\n";
    }
    return {std::move(csv), true};
}

CommandResult cmd_tvd(const ExperimentConfig &config, unsigned threads) {
    validate_config(config);
    const LatticeSpec spec = make_lattice(config);
    check_guards(config, spec);
    const ScheduleSource source(config, spec);
    const Configuration r = initial_configuration(spec);
    const auto points = grid_points(config);
    std::vector<std::string> rows(points.size());
    parallel_for(points.size(), threads, [&](std::size_t k) {
        const auto [seed, t] = points[k];
        Propagator R = source.at(seed, t);
        double distance = tvd(exact_distribution(R, r), dp_distribution(markov_matrix(R), r));
        rows[k] = std::to_string(seed) + "," + fmt(t) + "," + fmt(distance) + "\n";
    });
    CommandResult out;
    out.csv = "seed,t,tvd\n";
    for (auto &row : rows) {
        out.csv += row;
    }
    return out;
}

CommandResult cmd_tvd_files(const std::string &p_path, const std::string &q_path) {
    auto load = [](const std::string &path) {
        std::ifstream in(path);
        if (!in) {
            throw std::invalid_argument("cannot open distribution file '" + path + "'");
        }
        return read_distribution_csv(in);
    };
    OutcomeDistribution p = load(p_path);
    OutcomeDistribution q = load(q_path);
    return {"tvd\n" + fmt(tvd(p, q)) + "\n", true};
}

CompileResult cmd_compile(const ComplexMatrix &U, int n, double beta, int d) {
    CompileResult res;
    res.circuit = clements_decompose(U);
    res.reconstruction_error = max_abs_diff(reconstruct(res.circuit), U);
    HoppingSchedule sched = circuit_to_schedule(res.circuit);
    ComplexMatrix realized = sched.segments.empty() ? ComplexMatrix::Identity(U.rows(), U.cols())
                                                    : evolve(sched).R;
    res.schedule_error = max_abs_diff(realized, U);

    std::ostringstream circuit_text;
    write_circuit(circuit_text, res.circuit);
    res.circuit_csv = circuit_text.str();
    std::ostringstream schedule_text;
    write_schedule(schedule_text, sched);
    res.schedule_text = schedule_text.str();

    DepthReport rep = depth_report(res.circuit, n, beta, d);
    std::ostringstream report;
    report << "m " << rep.m << "\n"
           << "layers " << rep.layers << "\n"
           << "two_mode_gates " << rep.two_mode_gates << "\n"
           << "phase_gates " << rep.phase_gates << "\n"
           << "sequential_depth " << rep.sequential_depth << "\n"
           << "total_time " << fmt(rep.total_time) << "\n"
           << "t_hard_scale " << fmt(rep.t_hard_scale) << "\n"
           << "reconstruction_error " << fmt(res.reconstruction_error) << "\n"
           << "schedule_error " << fmt(res.schedule_error) << "\n";
    res.report = report.str();
    return res;
}

}  // namespace bosonlab
