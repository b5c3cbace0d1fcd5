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

#ifndef BOSONLAB_EXPERIMENT_H
#define BOSONLAB_EXPERIMENT_H

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bosonlab/bounds.h"
#include "bosonlab/compiler.h"
#include "bosonlab/dynamics.h"
#include "bosonlab/lattice.h"

namespace bosonlab {

enum class LatticeKind { Sparse, Chain, Grid };
enum class ScheduleKind { Clean, Anderson, Random, File };
enum class SamplerKind { Exact, Dp };

/// Everything a command needs; parsed from "key = value" lines.
struct ExperimentConfig {
    LatticeKind lattice = LatticeKind::Sparse;
    int n = 2;
    double beta = 1.0;
    double c1 = 1.0;
    int d = 1;
    int m = 0;
    std::vector<int> dims;
    std::vector<int> occupied;

    ScheduleKind schedule = ScheduleKind::Clean;
    double W = 0.0;
    /// Seeds for the anderson and random hopping draws; one grid row per (seed, t).
    std::vector<std::uint64_t> hopping_seeds{1};
    std::string schedule_file;

    /// Strictly increasing, non-negative.
    std::vector<double> times{1.0};

    /// Defaults to the nearest-neighbour Lieb-Robinson velocity for d when unset.
    std::optional<double> v;
    double xi = 1.0;
    double easy_fraction = 0.9;

    std::size_t samples = 1000;
    SamplerKind sampler = SamplerKind::Exact;
    std::uint64_t seed = 1;

    /// Side lengths for the lattice-sum rows of `check`.
    std::vector<double> sum_L;
    /// Upper limit on the collision ratio in `check`; +inf accepts any finite ratio.
    double collision_ratio_max = std::numeric_limits<double>::infinity();

    BoundParams bound_params() const;
};

/// Throws std::invalid_argument naming the offending line on unknown keys,
/// malformed values, or an invalid time grid.
ExperimentConfig parse_config(std::istream &in);
ExperimentConfig load_config(const std::string &path);

/// Builds the geometry described by the config.
LatticeSpec make_lattice(const ExperimentConfig &config);

/// Throws GuardExceeded if any grid point would exceed an enumeration,
/// permanent, or Fock-space guard. `fock` also checks the Fock oracle size.
void check_guards(const ExperimentConfig &config, const LatticeSpec &spec, bool fock = false);

/// Hopping schedule of total time t for one disorder seed.
HoppingSchedule schedule_at(const ExperimentConfig &config, const LatticeSpec &spec, std::uint64_t hopping_seed,
                            double t);

/// Propagator at time t; the identity at t = 0.
Propagator propagator_at(const ExperimentConfig &config, const LatticeSpec &spec, std::uint64_t hopping_seed,
                         double t);

struct CommandResult {
    std::string csv;
    bool ok = true;
};

// Each command validates and guard-checks before computing and returns the full
// CSV text, so a failing command never produces partial output.
CommandResult cmd_phase_diagram(const ExperimentConfig &config, unsigned threads = 1);
CommandResult cmd_check(const ExperimentConfig &config, unsigned threads = 1);
/// R at the first grid time.
CommandResult cmd_evolve(const ExperimentConfig &config);
/// `config.samples` draws at the first grid time, header "sample,occ".
CommandResult cmd_sample(const ExperimentConfig &config);
/// tvd(D_U, D_DP) per grid point, header "seed,t,tvd".
CommandResult cmd_tvd(const ExperimentConfig &config, unsigned threads = 1);
/// tvd between two distribution tables, header "tvd".
CommandResult cmd_tvd_files(const std::string &p_path, const std::string &q_path);

struct CompileResult {
    CompiledCircuit circuit;
    std::string circuit_csv;
    std::string schedule_text;
    std::string report;
    double reconstruction_error = 0.0;
    double schedule_error = 0.0;
};

/// Throws std::invalid_argument (with the max deviation) for non-unitary input.
CompileResult cmd_compile(const ComplexMatrix &U, int n = 1, double beta = 1.0, int d = 1);

}  // namespace bosonlab

#endif  // BOSONLAB_EXPERIMENT_H
