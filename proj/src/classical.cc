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

#include "bosonlab/classical.h"

#include <cmath>

#include "bosonlab/permanent.h"

namespace bosonlab {

namespace {

double max_stochastic_defect(const RealMatrix &P) {
    if (P.size() == 0) {
        return 0.0;
    }
    double rows = (P.rowwise().sum().array() - 1.0).abs().maxCoeff();
    double cols = (P.colwise().sum().array() - 1.0).abs().maxCoeff();
    return std::max(rows, cols);
}

}  // namespace

MarkovMatrix::MarkovMatrix(RealMatrix matrix, double tol) : P(std::move(matrix)) {
    if (P.rows() != P.cols()) {
        throw std::invalid_argument("Markov matrix must be square");
    }
    if (P.size() && P.minCoeff() < 0.0) {
        throw std::invalid_argument("Markov matrix has a negative entry");
    }
    double defect = max_stochastic_defect(P);
    if (!(defect <= tol)) {
        throw std::invalid_argument("matrix is not doubly stochastic (max row/column sum defect " +
                                    std::to_string(defect) + ")");
    }
}

MarkovMatrix markov_matrix(const Propagator &R) {
    RealMatrix P = R.R.cwiseAbs2().transpose();
    double defect = max_stochastic_defect(P);
    if (!(defect <= 1e-8)) {
        throw std::invalid_argument("propagator is not unitary (|R|^2 row/column sums off by " +
                                    std::to_string(defect) + ")");
    }
    return MarkovMatrix(std::move(P), 1e-8);
}

Configuration sample_dp(const MarkovMatrix &P, const Configuration &r, std::mt19937_64 &rng) {
    const int m = P.modes();
    if (r.modes() != m) {
        throw std::invalid_argument("configuration length does not match the Markov matrix");
    }
    std::vector<int> out(m, 0);
    for (int from : r.sites()) {
        double row_total = 0.0;
        int last_positive = 0;
        for (int l = 0; l < m; ++l) {
            row_total += P.P(from, l);
            if (P.P(from, l) > 0.0) {
                last_positive = l;
            }
        }
        double u = uniform01(rng) * row_total;
        double acc = 0.0;
        int dest = last_positive;
        for (int l = 0; l < m; ++l) {
            acc += P.P(from, l);
            if (u < acc) {
                dest = l;
                break;
            }
        }
        ++out[dest];
    }
    return Configuration(std::move(out));
}

Configuration sample_dp(const MarkovMatrix &P, const Configuration &r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_dp(P, r, rng);
}

std::vector<Configuration> sample_dp(const MarkovMatrix &P, const Configuration &r, std::uint64_t seed,
                                     std::size_t count) {
    std::mt19937_64 rng(seed);
    std::vector<Configuration> out;
    out.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        out.push_back(sample_dp(P, r, rng));
    }
    return out;
}

OutcomeDistribution dp_distribution(const MarkovMatrix &P, const Configuration &r, unsigned threads) {
    const int m = P.modes();
    const int n = r.particles();
    if (r.modes() != m) {
        throw std::invalid_argument("configuration length does not match the Markov matrix");
    }
    if (n > kMaxBosons) {
        throw GuardExceeded("at most " + std::to_string(kMaxBosons) + " bosons are supported");
    }
    auto outcomes = enumerate_configurations(m, n);
    const auto in = r.sites();
    std::vector<double> probs(outcomes.size(), 0.0);
    parallel_for(outcomes.size(), threads, [&](std::size_t k) {
        const auto out = outcomes[k].sites();
        RealMatrix A = repeat_submatrix(P.P, in, out);
        // Per of a non-negative matrix is non-negative; Glynn's signed sum can leave -1e-17 residue.
        probs[k] = std::max(0.0, permanent(A)) / static_cast<double>(outcomes[k].factorial_product());
    });
    return OutcomeDistribution(m, n, std::move(outcomes), std::move(probs));
}

}  // namespace bosonlab
