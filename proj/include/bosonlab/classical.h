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

#ifndef BOSONLAB_CLASSICAL_H
#define BOSONLAB_CLASSICAL_H

#include <cstdint>
#include <random>
#include <vector>

#include "bosonlab/bosonic.h"
#include "bosonlab/common.h"
#include "bosonlab/dynamics.h"

namespace bosonlab {

/// Doubly stochastic single-step transition matrix: P(k, l) is the probability
/// that a lone boson starting on site k is found on site l.
struct MarkovMatrix {
    RealMatrix P;

    /// Validates non-negativity and unit row and column sums to `tol`.
    explicit MarkovMatrix(RealMatrix P, double tol = 1e-10);
    int modes() const {
        return static_cast<int>(P.rows());
    }
};

/// P(k, l) = |R(l, k)|^2. Throws std::invalid_argument if R is not unitary
/// (row or column sums of |R|^2 off by more than 1e-8).
MarkovMatrix markov_matrix(const Propagator &R);

/// One step of n independent walkers: each input boson, in nondecreasing site
/// order, picks its destination by inverse CDF over increasing site index.
Configuration sample_dp(const MarkovMatrix &P, const Configuration &r, std::mt19937_64 &rng);
Configuration sample_dp(const MarkovMatrix &P, const Configuration &r, std::uint64_t seed);
/// `count` draws from one generator seeded with `seed`.
std::vector<Configuration> sample_dp(const MarkovMatrix &P, const Configuration &r, std::uint64_t seed,
                                     std::size_t count);

/// Distinguishable-particle output distribution: Per(P[in, out]) / s! per outcome.
OutcomeDistribution dp_distribution(const MarkovMatrix &P, const Configuration &r, unsigned threads = 1);

}  // namespace bosonlab

#endif  // BOSONLAB_CLASSICAL_H
