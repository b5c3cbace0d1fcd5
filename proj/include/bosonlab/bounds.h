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

#ifndef BOSONLAB_BOUNDS_H
#define BOSONLAB_BOUNDS_H

#include <vector>

#include "bosonlab/bosonic.h"
#include "bosonlab/dynamics.h"
#include "bosonlab/lattice.h"

namespace bosonlab {

/// 4 (1 + 2 d e): velocity bound for nearest-neighbour hopping with |J_ij| <= 1 and xi = 1.
double lieb_robinson_velocity(int d);

/// Light-cone parameters: |R_ij(t)| <= min(1, exp((v t - l_ij) / xi)).
struct BoundParams {
    double v = 0.0;
    double xi = 1.0;

    static BoundParams lieb_robinson(int d) {
        return {lieb_robinson_velocity(d), 1.0};
    }
    void validate() const;
};

/// Half the L1 distance between the two tables; outcomes missing from one side count as zero.
/// Throws std::invalid_argument if the mode or particle counts differ.
double tvd(const OutcomeDistribution &p, const OutcomeDistribution &q);

struct EnvelopeViolation {
    int i;
    int j;
    double value;
    double envelope;
};

struct EnvelopeReport {
    /// Pairs with |R_ij| above the envelope by more than kEnvelopeTolerance.
    std::vector<EnvelopeViolation> violations;
    /// max over pairs of |R_ij| - envelope(i, j); negative when every pair is strictly inside.
    double max_excess = 0.0;
    /// -1 / slope of the least-squares line through (l_ij, log |R_ij|) over off-diagonal pairs
    /// with |R_ij| > kFitFloor that lie inside the envelope. 0 when no pair qualifies,
    /// +inf when the slope is not negative.
    double fitted_xi = 0.0;
    /// Smallest xi for which |R_ij| <= exp(-l_ij / xi) holds on every pair above kFitFloor.
    double envelope_xi = 0.0;
    std::size_t fitted_pairs = 0;

    bool ok() const {
        return violations.empty();
    }
};

inline constexpr double kEnvelopeTolerance = 1e-12;
inline constexpr double kFitFloor = 1e-14;

EnvelopeReport lr_envelope_check(const Propagator &R, double t, const BoundParams &params, const LatticeSpec &spec);

/// Zero-velocity envelope: violations are measured against exp(-l_ij / envelope_xi),
/// so the report has none by construction; the fitted and envelope lengths are the output.
EnvelopeReport localization_check(const Propagator &R, const LatticeSpec &spec);

/// exp(2 (vt - L) / xi + 2 (d - 1) ln L), the variation-distance envelope shape with unit prefactor.
double tvd_bound(double L, double vt, double xi, int d);

struct CollisionStrength {
    /// sum_j sum_{k != i} |amp(in_i -> j)| |amp(j -> in_k)| over boson indices k.
    double C = 0.0;
    /// sum_j |amp(in_i -> j)|^2, which is 1 for unitary R.
    double D = 0.0;
};

CollisionStrength collision_strength(const Propagator &R, const Configuration &r, int boson);

struct CollisionReport {
    double L = 0.0;
    double max_C = 0.0;
    /// L^(d-1) exp((v t - L) / xi).
    double envelope = 0.0;
    double ratio = 0.0;
};

CollisionReport collision_check(const Propagator &R, const Configuration &r, const LatticeSpec &spec,
                             const BoundParams &params, double t);

struct LatticeSum {
    double sum = 0.0;
    double ratio = 0.0;
    /// Half-width of the enumerated cube.
    int radius = 0;
    /// Certified upper bound on everything outside the cube.
    double remainder_bound = 0.0;
};

/// sum over x in Z^d with |x| >= L of exp(-|x| / xi); ratio = sum / (xi L^(d-1) exp(-L / xi)).
LatticeSum lattice_tail_sum(double L, double xi, int d);

/// f_d = sum over |x| >= 1 of exp(-2 L |x| / xi); ratio = f_d exp(2 L / xi).
LatticeSum scaled_lattice_sum(double L, double xi, int d);

struct Timescales {
    double t_easy = 0.0;
    double t_hard_scale = 0.0;
};

/// t_easy = easy_fraction * L / v (infinite for v = 0) and t_hard_scale = n^(1 + beta/d),
/// using the realized L of the geometry.
Timescales timescales(const LatticeSpec &spec, const BoundParams &params, double easy_fraction = 0.9);
Timescales timescales(int n, double beta, double c1, int d, const BoundParams &params, double easy_fraction = 0.9);

}  // namespace bosonlab

#endif  // BOSONLAB_BOUNDS_H
