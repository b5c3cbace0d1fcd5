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

// Independent reference implementations for the test suites. Nothing here
// calls the library routine it is meant to check.

#ifndef BOSONLAB_TESTS_ORACLES_H
#define BOSONLAB_TESTS_ORACLES_H

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "bosonlab/common.h"
#include "bosonlab/dynamics.h"
#include "bosonlab/lattice.h"

namespace bosonlab::oracle {

/// sum over permutations of prod_i M(i, sigma(i)).
template <typename Scalar>
Scalar naive_permanent(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> &M) {
    const int k = static_cast<int>(M.rows());
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Scalar total(0);
    do {
        Scalar term(1);
        for (int i = 0; i < k; ++i) {
            term *= M(i, perm[i]);
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline ComplexMatrix gaussian_matrix(int rows, int cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix M(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            M(i, j) = Complex(g(rng), g(rng));
        }
    }
    return M;
}

/// Random convex combination of permutation matrices (Birkhoff), doubly stochastic by construction.
inline RealMatrix birkhoff_matrix(int m, int terms, std::mt19937_64 &rng) {
    RealMatrix P = RealMatrix::Zero(m, m);
    std::uniform_real_distribution<double> u(0.1, 1.0);
    std::vector<double> w(terms);
    double total = 0.0;
    for (auto &x : w) {
        x = u(rng);
        total += x;
    }
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < terms; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int i = 0; i < m; ++i) {
            P(i, perm[i]) += w[t] / total;
        }
    }
    return P;
}

/// Distinguishable walkers by brute force: every one of the m^n destination
/// tuples, weighted by prod_i P(from_i, to_i), binned by occupation vector.
inline std::map<std::vector<int>, double> tuple_distribution(const RealMatrix &P, const std::vector<int> &from) {
    const int m = static_cast<int>(P.rows());
    const int n = static_cast<int>(from.size());
    std::map<std::vector<int>, double> out;
    std::vector<int> to(n, 0);
    while (true) {
        double w = 1.0;
        std::vector<int> occ(m, 0);
        for (int i = 0; i < n; ++i) {
            w *= P(from[i], to[i]);
            ++occ[to[i]];
        }
        out[occ] += w;
        int pos = 0;
        while (pos < n && ++to[pos] == m) {
            to[pos++] = 0;
        }
        if (pos == n) {
            break;
        }
    }
    return out;
}

/// Piecewise-constant schedule of `segments` random Hermitian hoppings on the lattice edges,
/// durations uniform in (0, 2 * mean_duration).
inline HoppingSchedule random_schedule(const LatticeSpec &spec, int segments, double mean_duration,
                                       std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> mod(0.0, 1.0);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> dur(0.05, 2.0 * mean_duration);
    std::uniform_real_distribution<double> onsite(-1.0, 1.0);
    HoppingSchedule s;
    for (int k = 0; k < segments; ++k) {
        ComplexMatrix J = ComplexMatrix::Zero(spec.m, spec.m);
        for (int i = 0; i < spec.m; ++i) {
            J(i, i) = onsite(rng);
            for (int j : spec.neighbors[i]) {
                if (j > i) {
                    Complex z = std::polar(mod(rng), ph(rng));
                    J(i, j) = z;
                    J(j, i) = std::conj(z);
                }
            }
        }
        s.segments.push_back({dur(rng), std::move(J)});
    }
    return s;
}

/// Rescales the durations of `s` so the total time is exactly t.
inline HoppingSchedule rescale_to(HoppingSchedule s, double t) {
    double total = s.total_time();
    for (auto &seg : s.segments) {
        seg.duration *= t / total;
    }
    return s;
}

/// Dense matrix exponential by scaling and squaring of a Taylor series; independent of
/// the eigendecomposition used by the library.
inline ComplexMatrix taylor_exp(const ComplexMatrix &A) {
    double norm = A.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = std::max(0, static_cast<int>(std::ceil(std::log2(std::max(norm, 1e-300)))) + 4);
    ComplexMatrix B = A / std::ldexp(1.0, squarings);
    ComplexMatrix term = ComplexMatrix::Identity(A.rows(), A.cols());
    ComplexMatrix sum = term;
    for (int k = 1; k < 30; ++k) {
        term = term * B / static_cast<double>(k);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) {
        sum = sum * sum;
    }
    return sum;
}

}  // namespace bosonlab::oracle

#endif  // BOSONLAB_TESTS_ORACLES_H
