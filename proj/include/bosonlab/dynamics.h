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

#ifndef BOSONLAB_DYNAMICS_H
#define BOSONLAB_DYNAMICS_H

#include <cstdint>
#include <string>
#include <vector>

#include "bosonlab/common.h"
#include "bosonlab/lattice.h"

namespace bosonlab {

/// Constant Hermitian hopping matrix J held for `duration`.
struct Segment {
    double duration = 0.0;
    ComplexMatrix J;
};

/// Piecewise-constant hopping Hamiltonian H(t) = sum_ij J_ij(t) a_i^dag a_j.
/// Segments are applied in order; an empty schedule is the identity over zero time.
struct HoppingSchedule {
    std::vector<Segment> segments;

    HoppingSchedule() = default;
    HoppingSchedule(ComplexMatrix J, double duration);

    /// Mode count; 0 for an empty schedule.
    int modes() const;
    double total_time() const;
    /// This schedule followed by `later`.
    HoppingSchedule then(const HoppingSchedule &later) const;
};

/// Single-particle propagator with the convention a(t) = R a(0), i.e.
/// R = exp(-i J_k tau_k) ... exp(-i J_1 tau_1). R(j, k) is the amplitude for a
/// boson starting on site k to be found on site j.
struct Propagator {
    ComplexMatrix R;
    double t = 0.0;

    static constexpr const char *kConvention = "a(t) = R a(0)";
    int modes() const {
        return static_cast<int>(R.rows());
    }
};

enum class ViolationKind { NonHermitian, NonAdjacent, Magnitude };

struct ScheduleViolation {
    ViolationKind kind;
    int segment;
    int i;
    int j;
    double value;
};

struct ValidationReport {
    std::vector<ScheduleViolation> violations;
    bool ok() const {
        return violations.empty();
    }
    std::string describe() const;
};

/// Lists every Hermiticity, adjacency and |J_ij| <= 1 violation, once per unordered pair (off-diagonal
/// only for the last two).
/// Throws std::invalid_argument if a segment's dimensions differ from spec.m.
ValidationReport validate_schedule(const HoppingSchedule &sched, const LatticeSpec &spec);

/// exp(-i J tau) by Hermitian eigendecomposition.
ComplexMatrix hermitian_exp(const ComplexMatrix &J, double tau);

/// Time-ordered product of the segment exponentials.
/// Throws std::invalid_argument on non-Hermitian J, inconsistent sizes, or non-positive durations.
Propagator evolve(const HoppingSchedule &sched);

/// The first `t` units of time of `sched` (a partial final segment is shortened).
/// Throws std::invalid_argument if t is negative or exceeds the total time.
HoppingSchedule prefix(const HoppingSchedule &sched, double t);

/// J_ij = -i, J_ji = +i for pi/4; evolves to (1/sqrt2)[[1,-1],[1,1]] on (i, j).
HoppingSchedule beamsplitter_schedule(const LatticeSpec &spec, int i, int j);

/// J_kk = phi for unit time; evolves to e^{-i phi} on site k.
HoppingSchedule phase_schedule(int m, int k, double phi);

/// Unit hopping on every lattice edge, on-site energies iid uniform in [-W, W].
ComplexMatrix anderson_hopping(const LatticeSpec &spec, double W, std::uint64_t seed);

/// Unit hopping on every lattice edge, zero on-site energies.
ComplexMatrix clean_hopping(const LatticeSpec &spec);

/// Hermitian J on lattice edges with modulus uniform in [0, 1) and uniform phase.
ComplexMatrix random_hopping(const LatticeSpec &spec, std::uint64_t seed);

/// Haar-random m x m unitary from the QR decomposition of a complex Gaussian matrix.
ComplexMatrix haar_unitary(int m, std::uint64_t seed);

}  // namespace bosonlab

#endif  // BOSONLAB_DYNAMICS_H
