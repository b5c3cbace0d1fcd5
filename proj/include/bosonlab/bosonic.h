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

#ifndef BOSONLAB_BOSONIC_H
#define BOSONLAB_BOSONIC_H

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "bosonlab/common.h"
#include "bosonlab/dynamics.h"
#include "bosonlab/lattice.h"

namespace bosonlab {

inline constexpr int kMaxBosons = 10;
inline constexpr std::size_t kMaxOutcomes = 1'000'000;
inline constexpr std::size_t kMaxFockDimension = 5000;

/// C(m + n - 1, n), saturating at SIZE_MAX.
std::size_t fock_dimension(int m, int n);

/// All n-boson configurations on m modes in increasing lexicographic order of
/// the occupation vector. Throws GuardExceeded beyond `limit` configurations.
std::vector<Configuration> enumerate_configurations(int m, int n, std::size_t limit = kMaxOutcomes);

/// Probability table over n-boson outcomes, stored in lexicographic order.
/// Outcomes absent from the table have probability zero.
class OutcomeDistribution {
   public:
    OutcomeDistribution() = default;
    /// `outcomes` must be strictly increasing and all hold n bosons on m modes.
    OutcomeDistribution(int m, int n, std::vector<Configuration> outcomes, std::vector<double> probabilities);

    /// Relative frequencies of the given samples.
    static OutcomeDistribution empirical(int m, int n, std::span<const Configuration> samples);

    int modes() const {
        return m_;
    }
    int particles() const {
        return n_;
    }
    std::size_t size() const {
        return outcomes_.size();
    }
    bool empty() const {
        return outcomes_.empty();
    }
    const std::vector<Configuration> &outcomes() const {
        return outcomes_;
    }
    const std::vector<double> &probabilities() const {
        return probabilities_;
    }
    double probability(const Configuration &s) const;
    double total() const;

   private:
    int m_ = 0;
    int n_ = 0;
    std::vector<Configuration> outcomes_;
    std::vector<double> probabilities_;
};

/// Header "occ,probability", one row per outcome in lexicographic order.
void write_distribution_csv(std::ostream &out, const OutcomeDistribution &dist);
OutcomeDistribution read_distribution_csv(std::istream &in);

/// |Per(A)|^2 / (r! s!) for the transition r -> s.
double transition_probability(const Propagator &R, const Configuration &r, const Configuration &s);

/// Indistinguishable-boson output distribution over every outcome.
OutcomeDistribution exact_distribution(const Propagator &R, const Configuration &r, unsigned threads = 1);

/// Inverse-CDF draws over the table's lexicographic order.
std::vector<Configuration> sample_exact(const OutcomeDistribution &dist, std::uint64_t seed, std::size_t count);

/// Output distribution from evolving |r> under the second-quantized Hamiltonian
/// in the full n-boson Fock space. Never evaluates a permanent.
OutcomeDistribution fock_oracle_distribution(const HoppingSchedule &sched, const Configuration &r);

}  // namespace bosonlab

#endif  // BOSONLAB_BOSONIC_H
