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

#ifndef BOSONLAB_COMMON_H
#define BOSONLAB_COMMON_H

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace bosonlab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using ComplexVector = Eigen::VectorXcd;

/// Thrown when a problem size exceeds one of the enumeration or cost guards.
/// Distinct from std::invalid_argument so front ends can map it to its own exit code.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Uniform double in [0, 1) built from the top 53 bits of a 64-bit draw.
/// Unlike std::uniform_real_distribution this is identical on every standard library.
inline double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

/// Largest entrywise modulus of U^dagger U - I.
inline double unitarity_defect(const ComplexMatrix &u) {
    if (u.rows() != u.cols()) {
        throw std::invalid_argument("unitarity_defect: matrix is not square");
    }
    if (u.size() == 0) {
        return 0.0;
    }
    ComplexMatrix id = ComplexMatrix::Identity(u.rows(), u.cols());
    return max_abs_diff(u.adjoint() * u, id);
}

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 = hardware concurrency).
/// Indices are dealt in contiguous blocks; body must only write state owned by index i.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body &&body) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    std::size_t workers = std::min<std::size_t>(threads, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::size_t block = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * block;
        std::size_t end = std::min(count, begin + block);
        if (begin >= end) {
            break;
        }
        pool.emplace_back([begin, end, w, &body, &errors]() {
            try {
                for (std::size_t i = begin; i < end; ++i) {
                    body(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    // Rethrow the failure from the lowest block so the reported error does not depend on timing.
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace bosonlab

#endif  // BOSONLAB_COMMON_H
