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

// Exit codes: 0 success, 1 validation failure, 2 guard exceeded.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "bosonlab/dynamics.h"
#include "bosonlab/experiment.h"
#include "bosonlab/matrix_io.h"

namespace {

using namespace bosonlab;

void write_text(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot open output file '" + path + "'");
    }
    out << text;
    if (!out) {
        throw std::invalid_argument("failed writing '" + path + "'");
    }
}

struct Options {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out;
    unsigned threads = 1;
};

ExperimentConfig load(const Options &o) {
    if (o.config.empty()) {
        throw std::invalid_argument("--config is required");
    }
    ExperimentConfig c = load_config(o.config);
    if (o.seed) {
        c.seed = *o.seed;
    }
    return c;
}

void add_common(CLI::App *cmd, Options &o, bool needs_config) {
    auto *opt = cmd->add_option("--config", o.config, "key = value experiment config");
    if (needs_config) {
        opt->required();
    }
    cmd->add_option("--seed", o.seed, "sampling / Haar seed");
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--threads", o.threads, "worker threads, 0 = all cores");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Free-boson dynamics, sampling and bound checks"};
    app.require_subcommand(1);

    Options o;
    auto *phase = app.add_subcommand("phase-diagram", "tvd(D_U, D_DP) over the (seed, t) grid");
    add_common(phase, o, true);
    auto *check = app.add_subcommand("check", "light-cone, collision and lattice-sum checks");
    add_common(check, o, true);
    auto *evolve_cmd = app.add_subcommand("evolve", "single-particle propagator at the first time");
    add_common(evolve_cmd, o, true);
    auto *sample = app.add_subcommand("sample", "draw outcomes at the first time");
    add_common(sample, o, true);

    auto *tvd_cmd = app.add_subcommand("tvd", "tvd between two distribution files, or D_U vs D_DP for a config");
    add_common(tvd_cmd, o, false);
    std::vector<std::string> dist_files;
    tvd_cmd->add_option("files", dist_files, "two distribution CSV files")->expected(0, 2);

    auto *compile = app.add_subcommand("compile", "compile a unitary into a nearest-neighbour circuit");
    add_common(compile, o, false);
    std::string unitary_file;
    int haar_m = 0;
    int report_n = 1;
    double report_beta = 1.0;
    int report_d = 1;
    compile->add_option("--unitary", unitary_file, "matrix file");
    compile->add_option("--haar", haar_m, "compile a seeded Haar-random unitary of this size");
    compile->add_option("--n", report_n, "n for the reported hardness scale");
    compile->add_option("--beta", report_beta, "beta for the reported hardness scale");
    compile->add_option("--d", report_d, "d for the reported hardness scale");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (phase->parsed()) {
            write_text(o.out, cmd_phase_diagram(load(o), o.threads).csv);
        } else if (check->parsed()) {
            CommandResult res = cmd_check(load(o), o.threads);
            write_text(o.out, res.csv);
            return res.ok ? 0 : 1;
        } else if (evolve_cmd->parsed()) {
            write_text(o.out, cmd_evolve(load(o)).csv);
        } else if (sample->parsed()) {
            write_text(o.out, cmd_sample(load(o)).csv);
        } else if (tvd_cmd->parsed()) {
            if (dist_files.size() == 2) {
                write_text(o.out, cmd_tvd_files(dist_files[0], dist_files[1]).csv);
            } else if (dist_files.empty() && !o.config.empty()) {
                write_text(o.out, cmd_tvd(load(o), o.threads).csv);
            } else {
                throw std::invalid_argument("tvd needs two distribution files or --config");
            }
        } else if (compile->parsed()) {
            ComplexMatrix U;
            if (!unitary_file.empty() && haar_m == 0) {
                std::ifstream in(unitary_file);
                if (!in) {
                    throw std::invalid_argument("cannot open unitary file '" + unitary_file + "'");
                }
                U = read_matrix(in);
            } else if (unitary_file.empty() && haar_m > 0) {
                U = haar_unitary(haar_m, o.seed.value_or(1));
            } else {
                throw std::invalid_argument("compile needs exactly one of --unitary or --haar");
            }
            CompileResult res = cmd_compile(U, report_n, report_beta, report_d);
            if (o.out.empty()) {
                std::cout << res.report;
            } else {
                write_text(o.out + ".circuit.csv", res.circuit_csv);
                write_text(o.out + ".schedule", res.schedule_text);
                write_text(o.out + ".report", res.report);
                std::cout << res.report;
            }
        }
    } catch (const GuardExceeded &e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
