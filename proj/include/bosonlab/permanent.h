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

#ifndef BOSONLAB_PERMANENT_H
#define BOSONLAB_PERMANENT_H

#include <span>

#include "bosonlab/common.h"
#include "bosonlab/dynamics.h"
#include "bosonlab/lattice.h"

namespace bosonlab {

/// Largest matrix accepted by permanent(); beyond this the 2^k cost is impractical here.
inline constexpr int kMaxPermanentSize = 30;

/// Permanent by Glynn's formula with Gray-code ordered sign vectors, O(2^(k-1) k).
/// The 0x0 permanent is 1. Throws std::invalid_argument for non-square input and
/// GuardExceeded for k > kMaxPermanentSize.
Complex permanent(const ComplexMatrix &M);
double permanent(const RealMatrix &M);

/// n x n matrix for the transition r -> s. Row i belongs to the i-th input boson,
/// column j to the j-th output boson (both in nondecreasing site order), and the
/// entry is the single-particle amplitude for that hop, R(out_j, in_i).
struct TransitionMatrix {
    ComplexMatrix A;
    Configuration input;
    Configuration output;
};

TransitionMatrix submatrix_for_transition(const Propagator &R, const Configuration &r, const Configuration &s);

/// M(rows[i], cols[j]) with repetition.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> repeat_submatrix(
    const Eigen::MatrixBase<Derived> &M, std::span<const int> rows, std::span<const int> cols) {
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out(i, j) = M(rows[i], cols[j]);
        }
    }
    return out;
}

}  // namespace bosonlab

#endif  // BOSONLAB_PERMANENT_H
