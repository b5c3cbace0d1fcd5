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

#include "bosonlab/permanent.h"

#include <bit>
#include <cmath>

namespace bosonlab {

namespace {

// Per(M) = 2^{1-k} sum_{delta, delta_0 = +1} (prod_i delta_i) prod_j sum_i delta_i M_ij.
// Consecutive delta vectors differ in one row (binary reflected Gray code), so the
// column sums are updated in O(k) per term.
template <typename Scalar>
Scalar glynn(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> &M) {
    const Eigen::Index k = M.rows();
    if (M.cols() != k) {
        throw std::invalid_argument("permanent of a non-square matrix");
    }
    if (k > kMaxPermanentSize) {
        throw GuardExceeded("permanent size " + std::to_string(k) + " exceeds the limit of " +
                            std::to_string(kMaxPermanentSize));
    }
    if (k == 0) {
        return Scalar(1);
    }
    if (k == 1) {
        return M(0, 0);
    }
    if (k == 2) {
        return M(0, 0) * M(1, 1) + M(0, 1) * M(1, 0);
    }

    // Row-major copy so that "add row r" is a contiguous sweep.
    std::vector<Scalar> rows(static_cast<std::size_t>(k * k));
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            rows[i * k + j] = M(i, j);
        }
    }
    std::vector<Scalar> colsum(k, Scalar(0));
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            colsum[j] += rows[i * k + j];
        }
    }
    std::vector<signed char> delta(k, 1);

    auto column_product = [&]() {
        Scalar p = colsum[0];
        for (Eigen::Index j = 1; j < k; ++j) {
            p *= colsum[j];
        }
        return p;
    };

    Scalar total = column_product();
    int sign = 1;
    const std::uint64_t terms = std::uint64_t{1} << (k - 1);
    for (std::uint64_t g = 1; g < terms; ++g) {
        const Eigen::Index r = std::countr_zero(g) + 1;
        const Scalar *row = &rows[r * k];
        if (delta[r] > 0) {
            for (Eigen::Index j = 0; j < k; ++j) {
                colsum[j] -= Scalar(2) * row[j];
            }
        } else {
            for (Eigen::Index j = 0; j < k; ++j) {
                colsum[j] += Scalar(2) * row[j];
            }
        }
        delta[r] = static_cast<signed char>(-delta[r]);
        sign = -sign;
        if (sign > 0) {
            total += column_product();
        } else {
            total -= column_product();
        }
    }
    return total / static_cast<double>(terms);
}

}  // namespace

Complex permanent(const ComplexMatrix &M) {
    return glynn(M);
}

double permanent(const RealMatrix &M) {
    return glynn(M);
}

TransitionMatrix submatrix_for_transition(const Propagator &R, const Configuration &r, const Configuration &s) {
    if (r.modes() != R.modes() || s.modes() != R.modes()) {
        throw std::invalid_argument("configuration length does not match the propagator");
    }
    if (r.particles() != s.particles()) {
        throw std::invalid_argument("input and output particle numbers differ");
    }
    auto in = r.sites();
    auto out = s.sites();
    TransitionMatrix t;
    t.A = repeat_submatrix(R.R.transpose(), in, out);
    t.input = r;
    t.output = s;
    return t;
}

}  // namespace bosonlab
