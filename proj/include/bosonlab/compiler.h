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

#ifndef BOSONLAB_COMPILER_H
#define BOSONLAB_COMPILER_H

#include <iosfwd>
#include <span>
#include <vector>

#include "bosonlab/common.h"
#include "bosonlab/dynamics.h"
#include "bosonlab/lattice.h"

namespace bosonlab {

enum class GateKind { TwoMode, Phase };

/// Two-mode gate on (i, i+1):
///   [[e^{i phi} cos theta, -sin theta],
///    [e^{i phi} sin theta,  cos theta]]
/// with theta in [0, pi/2] and phi in [0, 2 pi). theta = pi/4, phi = 0 is the
/// balanced beamsplitter (1/sqrt2)[[1,-1],[1,1]].
/// Phase gate on site i (j == i): multiplies mode i by e^{-i phi}; theta is unused.
struct Gate {
    GateKind kind = GateKind::TwoMode;
    int i = 0;
    int j = 1;
    double theta = 0.0;
    double phi = 0.0;

    static Gate two_mode(int i, double theta, double phi) {
        return {GateKind::TwoMode, i, i + 1, theta, phi};
    }
    static Gate phase(int k, double phi) {
        return {GateKind::Phase, k, k, 0.0, phi};
    }
    /// 2x2 block for a two-mode gate, 1x1 for a phase gate.
    ComplexMatrix block() const;
};

/// Layers are applied in order; gates within a layer act on disjoint modes.
struct CompiledCircuit {
    int m = 0;
    std::vector<std::vector<Gate>> layers;

    std::size_t two_mode_gate_count() const;
    std::size_t phase_gate_count() const;
    /// Layers containing at least one two-mode gate.
    std::size_t two_mode_depth() const;
};

inline constexpr int kMaxCompileModes = 64;
inline constexpr double kCompileUnitarityTolerance = 1e-10;

/// Throws std::invalid_argument on out-of-range sites, non-adjacent two-mode
/// gates, angles outside their ranges, or overlapping gates within a layer.
void validate_circuit(const CompiledCircuit &circuit);

/// Rectangular nearest-neighbour mesh: m(m-1)/2 two-mode gates packed into at
/// most m layers, then one layer with the nontrivial output phases. Gates equal
/// to the identity are dropped, so U = I compiles to an empty circuit.
/// Throws std::invalid_argument if U is not square and unitary to
/// kCompileUnitarityTolerance, GuardExceeded if m > kMaxCompileModes.
CompiledCircuit clements_decompose(const ComplexMatrix &U);

/// Product of the layer embeddings, last layer leftmost.
ComplexMatrix reconstruct(const CompiledCircuit &circuit);

/// Per layer: a unit-time diagonal segment carrying the gate phases (omitted if
/// all are zero), then one hopping segment of duration max theta with couplings
/// J(i, i+1) = -i theta / tau, J(i+1, i) = +i theta / tau (omitted if all theta are zero).
/// Circuit mode k is placed on site path[k]; the identity placement is used when
/// `path` is empty.
HoppingSchedule circuit_to_schedule(const CompiledCircuit &circuit, std::span<const int> path = {});

/// Places circuit modes along serpentine_path(spec); requires circuit.m == spec.m.
HoppingSchedule circuit_to_schedule(const CompiledCircuit &circuit, const LatticeSpec &spec);

struct DepthReport {
    int m = 0;
    /// Parallel layers of two-mode gates.
    std::size_t layers = 0;
    std::size_t two_mode_gates = 0;
    std::size_t phase_gates = 0;
    /// Depth if the two-mode gates were applied one at a time.
    std::size_t sequential_depth = 0;
    double total_time = 0.0;
    double t_hard_scale = 0.0;
};

DepthReport depth_report(const CompiledCircuit &circuit, int n, double beta, int d);

/// One line per gate, "layer,kind,i,j,theta,phi" with kind "bs" or "phase"; no header.
void write_circuit(std::ostream &out, const CompiledCircuit &circuit);
CompiledCircuit read_circuit(std::istream &in, int m);

}  // namespace bosonlab

#endif  // BOSONLAB_COMPILER_H
