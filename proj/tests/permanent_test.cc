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

#include <gtest/gtest.h>

#include <chrono>
#include <numeric>
#include <random>

#include "bosonlab/permanent.h"
#include "oracles.h"

namespace bosonlab {
namespace {

double rel_err(Complex a, Complex b) {
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

TEST(Permanent, SmallCases) {
    EXPECT_EQ(permanent(ComplexMatrix(0, 0)), Complex(1.0));
    ComplexMatrix one(1, 1);
    one << Complex(2.0, -3.0);
    EXPECT_EQ(permanent(one), Complex(2.0, -3.0));
    ComplexMatrix two(2, 2);
    two << 1.0, 2.0, 3.0, 4.0;
    EXPECT_EQ(permanent(two), Complex(10.0));
    EXPECT_NEAR(std::abs(permanent(ComplexMatrix(ComplexMatrix::Ones(3, 3))) - 6.0), 0.0, 1e-13);
    for (int k = 1; k <= 8; ++k) {
        EXPECT_NEAR(std::abs(permanent(ComplexMatrix(ComplexMatrix::Identity(k, k))) - 1.0), 0.0, 1e-13);
    }
    EXPECT_NEAR(permanent(RealMatrix(RealMatrix::Ones(5, 5))), 120.0, 1e-11);
}

TEST(Permanent, MatchesNaiveExpansion) {
    std::mt19937_64 rng(21);
    for (int k = 1; k <= 7; ++k) {
        for (int rep = 0; rep < 10; ++rep) {
            ComplexMatrix M = oracle::gaussian_matrix(k, k, rng);
            EXPECT_LE(rel_err(permanent(M), oracle::naive_permanent<Complex>(M)), 1e-10) << "k=" << k;
        }
    }
}

TEST(Permanent, RealKernelMatchesNaive) {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 1; k <= 6; ++k) {
        RealMatrix M(k, k);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                M(i, j) = u(rng);
            }
        }
        double ref = oracle::naive_permanent<double>(M);
        EXPECT_NEAR(permanent(M), ref, 1e-12 * ref);
    }
}

TEST(Permanent, InvariantUnderRowAndColumnPermutations) {
    std::mt19937_64 rng(23);
    for (int k = 2; k <= 8; ++k) {
        ComplexMatrix M = oracle::gaussian_matrix(k, k, rng);
        std::vector<int> rows(k), cols(k);
        std::iota(rows.begin(), rows.end(), 0);
        std::iota(cols.begin(), cols.end(), 0);
        std::shuffle(rows.begin(), rows.end(), rng);
        std::shuffle(cols.begin(), cols.end(), rng);
        ComplexMatrix P(k, k);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                P(i, j) = M(rows[i], cols[j]);
            }
        }
        EXPECT_LE(rel_err(permanent(P), permanent(M)), 1e-12) << "k=" << k;
    }
}

TEST(Permanent, LinearInEachRow) {
    std::mt19937_64 rng(24);
    for (int k = 2; k <= 7; ++k) {
        ComplexMatrix A = oracle::gaussian_matrix(k, k, rng);
        ComplexMatrix B = A;
        B.row(k / 2) = oracle::gaussian_matrix(1, k, rng);
        ComplexMatrix S = A;
        S.row(k / 2) = A.row(k / 2) + B.row(k / 2);
        Complex lhs = permanent(S);
        Complex rhs = permanent(A) + permanent(B);
        EXPECT_LE(std::abs(lhs - rhs), 1e-11 * (std::abs(permanent(A)) + std::abs(permanent(B))));
    }
}

TEST(Permanent, ZeroRowGivesZero) {
    std::mt19937_64 rng(25);
    ComplexMatrix M = oracle::gaussian_matrix(6, 6, rng);
    M.row(3).setZero();
    EXPECT_LE(std::abs(permanent(M)), 1e-12);
}

TEST(Permanent, Guards) {
    EXPECT_THROW(permanent(ComplexMatrix(ComplexMatrix::Zero(31, 31))), GuardExceeded);
    EXPECT_THROW(permanent(ComplexMatrix(ComplexMatrix::Zero(2, 3))), std::invalid_argument);
}

TEST(Permanent, SizeTwentyIsFast) {
    std::mt19937_64 rng(26);
    ComplexMatrix M = oracle::gaussian_matrix(20, 20, rng);
    auto start = std::chrono::steady_clock::now();
    Complex p = permanent(M);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_TRUE(std::isfinite(std::abs(p)));
    EXPECT_LT(secs, 5.0);
}

TEST(TransitionMatrix, Shapes) {
    ComplexMatrix R(2, 2);
    R << Complex(1, 1), Complex(2, 0), Complex(3, 0), Complex(4, -1);
    Propagator P{R, 1.0};
    auto single = submatrix_for_transition(P, Configuration({0, 1}), Configuration({0, 1}));
    ASSERT_EQ(single.A.rows(), 1);
    EXPECT_EQ(single.A(0, 0), R(1, 1));

    auto full = submatrix_for_transition(P, Configuration({1, 1}), Configuration({1, 1}));
    // A(i, j) is the amplitude in_i -> out_j, i.e. R(out_j, in_i).
    EXPECT_EQ(full.A, R.transpose());

    auto doubled = submatrix_for_transition(P, Configuration({1, 1}), Configuration({2, 0}));
    ASSERT_EQ(doubled.A.rows(), 2);
    EXPECT_EQ(doubled.A(0, 0), R(0, 0));
    EXPECT_EQ(doubled.A(0, 1), R(0, 0));
    EXPECT_EQ(doubled.A(1, 0), R(0, 1));
    EXPECT_EQ(doubled.A(1, 1), R(0, 1));
    EXPECT_EQ(doubled.input, Configuration({1, 1}));
    EXPECT_EQ(doubled.output, Configuration({2, 0}));

    EXPECT_THROW(submatrix_for_transition(P, Configuration({1, 1}), Configuration({1, 0})), std::invalid_argument);
    EXPECT_THROW(submatrix_for_transition(P, Configuration({1, 1, 0}), Configuration({1, 1, 0})),
                 std::invalid_argument);
}

}  // namespace
}  // namespace bosonlab
