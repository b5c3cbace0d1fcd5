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

#include "bosonlab/bosonic.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <string>

#include "bosonlab/permanent.h"

namespace bosonlab {

std::size_t fock_dimension(int m, int n) {
    if (m < 0 || n < 0) {
        throw std::invalid_argument("negative mode or particle count");
    }
    if (m == 0) {
        return n == 0 ? 1 : 0;
    }
    // C(m + n - 1, n) built as a running product of exact binomials.
    unsigned __int128 c = 1;
    constexpr auto cap = static_cast<unsigned __int128>(std::numeric_limits<std::size_t>::max());
    for (int k = 1; k <= n; ++k) {
        c = c * static_cast<unsigned>(m - 1 + k) / static_cast<unsigned>(k);
        if (c > cap) {
            return std::numeric_limits<std::size_t>::max();
        }
    }
    return static_cast<std::size_t>(c);
}

std::vector<Configuration> enumerate_configurations(int m, int n, std::size_t limit) {
    std::size_t count = fock_dimension(m, n);
    if (count > limit) {
        throw GuardExceeded("outcome space of " + std::to_string(n) + " bosons on " + std::to_string(m) +
                            " modes has " + std::to_string(count) + " configurations (limit " +
                            std::to_string(limit) + ")");
    }
    std::vector<Configuration> out;
    out.reserve(count);
    if (m == 0) {
        if (n == 0) {
            out.emplace_back();
        }
        return out;
    }
    // Iterative odometer: the earliest mode is the most significant digit.
    std::vector<int> occ(m, 0);
    occ[m - 1] = n;
    while (true) {
        out.emplace_back(occ);
        // Find the rightmost position p < m - 1 that can be incremented: raise occ[p] by one,
        // put the whole remainder of the tail on the last mode.
        int tail = occ[m - 1];
        int p = m - 2;
        while (p >= 0 && tail == 0) {
            tail += occ[p];
            occ[p] = 0;
            --p;
        }
        if (p < 0) {
            break;
        }
        ++occ[p];
        occ[m - 1] = 0;
        for (int q = p + 1; q < m - 1; ++q) {
            occ[q] = 0;
        }
        occ[m - 1] = tail - 1;
    }
    return out;
}

OutcomeDistribution::OutcomeDistribution(int m, int n, std::vector<Configuration> outcomes,
                                         std::vector<double> probabilities)
    : m_(m), n_(n), outcomes_(std::move(outcomes)), probabilities_(std::move(probabilities)) {
    if (outcomes_.size() != probabilities_.size()) {
        throw std::invalid_argument("outcome and probability counts differ");
    }
    for (std::size_t k = 0; k < outcomes_.size(); ++k) {
        if (outcomes_[k].modes() != m_ || outcomes_[k].particles() != n_) {
            throw std::invalid_argument("outcome " + outcomes_[k].to_string() + " is not an " + std::to_string(n_) +
                                        "-boson configuration on " + std::to_string(m_) + " modes");
        }
        if (k && !(outcomes_[k - 1] < outcomes_[k])) {
            throw std::invalid_argument("outcomes must be strictly increasing");
        }
        if (!(probabilities_[k] >= 0.0) || !std::isfinite(probabilities_[k])) {
            throw std::invalid_argument("probabilities must be finite and non-negative");
        }
    }
}

OutcomeDistribution OutcomeDistribution::empirical(int m, int n, std::span<const Configuration> samples) {
    std::map<Configuration, std::size_t> counts;
    for (const auto &s : samples) {
        ++counts[s];
    }
    std::vector<Configuration> outcomes;
    std::vector<double> probs;
    const double total = static_cast<double>(samples.size());
    for (const auto &[config, c] : counts) {
        outcomes.push_back(config);
        probs.push_back(static_cast<double>(c) / total);
    }
    return OutcomeDistribution(m, n, std::move(outcomes), std::move(probs));
}

double OutcomeDistribution::probability(const Configuration &s) const {
    auto it = std::lower_bound(outcomes_.begin(), outcomes_.end(), s);
    if (it == outcomes_.end() || !(*it == s)) {
        return 0.0;
    }
    return probabilities_[static_cast<std::size_t>(it - outcomes_.begin())];
}

double OutcomeDistribution::total() const {
    double t = 0.0;
    for (double p : probabilities_) {
        t += p;
    }
    return t;
}

void write_distribution_csv(std::ostream &out, const OutcomeDistribution &dist) {
    char buf[40];
    out << "occ,probability\n";
    for (std::size_t k = 0; k < dist.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "%.17g", dist.probabilities()[k]);
        out << dist.outcomes()[k].to_string() << ',' << buf << "\n";
    }
}

OutcomeDistribution read_distribution_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line.substr(0, 15) != "occ,probability") {
        throw std::invalid_argument("distribution CSV must start with header 'occ,probability'");
    }
    std::vector<Configuration> outcomes;
    std::vector<double> probs;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("bad distribution row '" + line + "'");
        }
        outcomes.push_back(Configuration::parse(std::string_view(line).substr(0, comma)));
        double p = 0.0;
        const char *begin = line.data() + comma + 1;
        const char *end = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(begin, end, p);
        if (ec != std::errc() || ptr != end) {
            throw std::invalid_argument("bad probability in row '" + line + "'");
        }
        probs.push_back(p);
    }
    if (outcomes.empty()) {
        throw std::invalid_argument("distribution CSV has no rows");
    }
    // Rows may come in any order; duplicates are still rejected by the constructor.
    std::vector<std::size_t> order(outcomes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return outcomes[a] < outcomes[b]; });
    std::vector<Configuration> sorted;
    std::vector<double> sorted_probs;
    sorted.reserve(order.size());
    sorted_probs.reserve(order.size());
    for (std::size_t k : order) {
        sorted.push_back(std::move(outcomes[k]));
        sorted_probs.push_back(probs[k]);
    }
    int m = sorted.front().modes();
    int n = sorted.front().particles();
    return OutcomeDistribution(m, n, std::move(sorted), std::move(sorted_probs));
}

double transition_probability(const Propagator &R, const Configuration &r, const Configuration &s) {
    if (r.particles() != s.particles()) {
        throw std::invalid_argument("input and output particle numbers differ");
    }
    if (r.particles() > kMaxBosons) {
        throw GuardExceeded("at most " + std::to_string(kMaxBosons) + " bosons are supported");
    }
    TransitionMatrix t = submatrix_for_transition(R, r, s);
    double amp2 = std::norm(permanent(t.A));
    return amp2 / static_cast<double>(r.factorial_product() * s.factorial_product());
}

OutcomeDistribution exact_distribution(const Propagator &R, const Configuration &r, unsigned threads) {
    const int m = R.modes();
    const int n = r.particles();
    if (r.modes() != m) {
        throw std::invalid_argument("configuration length does not match the propagator");
    }
    if (n > kMaxBosons) {
        throw GuardExceeded("at most " + std::to_string(kMaxBosons) + " bosons are supported");
    }
    auto outcomes = enumerate_configurations(m, n);
    std::vector<double> probs(outcomes.size(), 0.0);
    parallel_for(outcomes.size(), threads, [&](std::size_t k) { probs[k] = transition_probability(R, r, outcomes[k]); });
    return OutcomeDistribution(m, n, std::move(outcomes), std::move(probs));
}

std::vector<Configuration> sample_exact(const OutcomeDistribution &dist, std::uint64_t seed, std::size_t count) {
    if (dist.empty()) {
        throw std::invalid_argument("cannot sample from an empty distribution");
    }
    const auto &probs = dist.probabilities();
    std::vector<double> cdf(probs.size());
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        acc += probs[k];
        cdf[k] = acc;
        if (probs[k] > 0.0) {
            last_positive = k;
        }
    }
    if (!(acc > 0.0)) {
        throw std::invalid_argument("distribution has no probability mass");
    }
    std::mt19937_64 rng(seed);
    std::vector<Configuration> out;
    out.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        double u = uniform01(rng) * acc;
        auto k = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        out.push_back(dist.outcomes()[std::min(k, last_positive)]);
    }
    return out;
}

OutcomeDistribution fock_oracle_distribution(const HoppingSchedule &sched, const Configuration &r) {
    const int m = r.modes();
    const int n = r.particles();
    if (!sched.segments.empty() && sched.modes() != m) {
        throw std::invalid_argument("schedule size does not match the configuration");
    }
    auto basis = enumerate_configurations(m, n, kMaxFockDimension);
    const auto dim = static_cast<Eigen::Index>(basis.size());
    std::map<Configuration, Eigen::Index> index;
    for (Eigen::Index b = 0; b < dim; ++b) {
        index.emplace(basis[b], b);
    }

    ComplexVector psi = ComplexVector::Zero(dim);
    psi[index.at(r)] = 1.0;

    for (const auto &seg : sched.segments) {
        if (!(seg.duration > 0.0)) {
            throw std::invalid_argument("segment durations must be positive");
        }
        const ComplexMatrix &J = seg.J;
        // H = sum_ij J_ij a_i^dag a_j; a_i^dag a_j |s> = sqrt(s_j (s_i + 1)) |s - e_j + e_i> for i != j.
        ComplexMatrix H = ComplexMatrix::Zero(dim, dim);
        for (Eigen::Index b = 0; b < dim; ++b) {
            const auto &s = basis[b].occ;
            Complex diag = 0.0;
            for (int i = 0; i < m; ++i) {
                diag += J(i, i) * static_cast<double>(s[i]);
            }
            H(b, b) += diag;
            for (int j = 0; j < m; ++j) {
                if (s[j] == 0) {
                    continue;
                }
                for (int i = 0; i < m; ++i) {
                    if (i == j || J(i, j) == Complex(0.0)) {
                        continue;
                    }
                    std::vector<int> t = s;
                    --t[j];
                    ++t[i];
                    double amp = std::sqrt(static_cast<double>(s[j]) * static_cast<double>(s[i] + 1));
                    H(index.at(Configuration(std::move(t))), b) += J(i, j) * amp;
                }
            }
        }
        psi = hermitian_exp(H, seg.duration) * psi;
    }

    std::vector<double> probs(dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        probs[b] = std::norm(psi[b]);
    }
    return OutcomeDistribution(m, n, std::move(basis), std::move(probs));
}

}  // namespace bosonlab
