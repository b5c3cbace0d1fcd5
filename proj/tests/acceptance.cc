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

// Acceptance gate: one PASS/FAIL line per criterion; exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "bosonlab/bosonic.h"
#include "bosonlab/bounds.h"
#include "bosonlab/classical.h"
#include "bosonlab/compiler.h"
#include "bosonlab/dynamics.h"
#include "bosonlab/lattice.h"
#include "bosonlab/permanent.h"
#include "oracles.h"

namespace {

using namespace bosonlab;
using Clock = std::chrono::steady_clock;

// Pinned tolerances.
constexpr double kHomTolerance = 1e-12;
constexpr double kOracleTolerance = 1e-8;
constexpr double kPermanentRelTolerance = 1e-10;
constexpr double kPermanent20Seconds = 5.0;
constexpr double kDpTolerance = 1e-12;
constexpr double kSamplerTvd = 0.02;
constexpr std::size_t kSamples = 100000;
constexpr double kUnitarityTolerance = 1e-9;
constexpr double kBeamsplitterTolerance = 1e-15;
constexpr double kDecayFactor = 0.1;
constexpr double kCrossoverFactor = 100.0;
constexpr double kAndersonFactor = 0.1;
constexpr double kXiStability = 0.2;
constexpr double kClosedFormRel = 1e-10;
constexpr double kBoundedSpread = 3.0;
constexpr double kCompileTolerance = 1e-8;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string f(const char *format, double a) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), format, a);
    return buf;
}

double tvd_at(const Propagator &R, const Configuration &r) {
    return tvd(exact_distribution(R, r), dp_distribution(markov_matrix(R), r));
}

Outcome criterion1() {
    auto start = Clock::now();
    LatticeSpec spec = make_chain(2, {0, 1});
    Propagator R = evolve(beamsplitter_schedule(spec, 0, 1));
    Configuration r({1, 1});
    auto du = exact_distribution(R, r);
    auto dp = dp_distribution(markov_matrix(R), r);
    Configuration s20({2, 0}), s02({0, 2}), s11({1, 1});
    double err = std::max({std::abs(du.probability(s20) - 0.5), std::abs(du.probability(s02) - 0.5),
                           std::abs(du.probability(s11) - 0.0), std::abs(dp.probability(s20) - 0.25),
                           std::abs(dp.probability(s02) - 0.25), std::abs(dp.probability(s11) - 0.5)});
    double d = tvd(du, dp);
    double secs = seconds_since(start);
    bool pass = err <= kHomTolerance && std::abs(d - 0.5) <= kHomTolerance && secs < 1.0;
    return {pass, "max table error " + f("%.2e", err) + ", tvd " + f("%.15f", d) + ", " + f("%.3f", secs) + " s"};
}

Outcome criterion2() {
    auto start = Clock::now();
    std::mt19937_64 rng(2002);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        int m = 4 + trial % 3;
        int n = 1 + trial % 3;
        LatticeSpec spec = trial % 2 ? make_chain(m, {0}) : make_grid({2, m / 2}, {0});
        m = spec.m;
        std::uniform_int_distribution<int> site(0, m - 1);
        std::vector<int> occ(m, 0);
        for (int b = 0; b < n; ++b) {
            ++occ[site(rng)];
        }
        Configuration r(occ);
        HoppingSchedule sched = oracle::random_schedule(spec, 3, 0.7, rng);
        auto exact = exact_distribution(evolve(sched), r);
        auto fock = fock_oracle_distribution(sched, r);
        for (std::size_t k = 0; k < exact.size(); ++k) {
            worst = std::max(worst, std::abs(exact.probabilities()[k] - fock.probability(exact.outcomes()[k])));
        }
        if (exact.size() != fock.size()) {
            worst = 1.0;
        }
    }
    double secs = seconds_since(start);
    return {worst <= kOracleTolerance && secs < 30.0,
            "max |exact - fock| " + f("%.2e", worst) + ", " + f("%.2f", secs) + " s"};
}

Outcome criterion3() {
    std::mt19937_64 rng(3003);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        int k = 1 + trial % 6;
        ComplexMatrix M = oracle::gaussian_matrix(k, k, rng);
        Complex ref = oracle::naive_permanent<Complex>(M);
        worst = std::max(worst, std::abs(permanent(M) - ref) / std::abs(ref));
    }
    ComplexMatrix big = oracle::gaussian_matrix(20, 20, rng);
    auto start = Clock::now();
    Complex p20 = permanent(big);
    double secs = seconds_since(start);
    bool finite = std::isfinite(p20.real()) && std::isfinite(p20.imag());
    return {worst <= kPermanentRelTolerance && secs < kPermanent20Seconds && finite,
            "max rel error " + f("%.2e", worst) + ", k = 20 in " + f("%.3f", secs) + " s"};
}

Outcome criterion4() {
    std::mt19937_64 rng(4004);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        int m = 3 + trial % 4;
        int n = 1 + trial % 3;
        RealMatrix P = oracle::birkhoff_matrix(m, 4, rng);
        std::uniform_int_distribution<int> site(0, m - 1);
        std::vector<int> from(n);
        for (auto &s : from) {
            s = site(rng);
        }
        std::sort(from.begin(), from.end());
        auto ref = oracle::tuple_distribution(P, from);
        auto dist = dp_distribution(MarkovMatrix(P), Configuration::from_sites(m, from));
        for (std::size_t k = 0; k < dist.size(); ++k) {
            auto it = ref.find(dist.outcomes()[k].occ);
            double expected = it == ref.end() ? 0.0 : it->second;
            worst = std::max(worst, std::abs(dist.probabilities()[k] - expected));
        }
        if (dist.size() != ref.size()) {
            worst = 1.0;
        }
    }
    return {worst <= kDpTolerance, "max |dp - tuple oracle| " + f("%.2e", worst)};
}

Outcome criterion5() {
    struct Case {
        LatticeSpec spec;
        double t;
    };
    std::vector<Case> cases{{make_chain(6, {1, 2, 4}), 0.9}, {make_chain(12, {4, 7}), 1.5}};
    double worst = 0.0;
    std::size_t largest = 0;
    std::uint64_t seed = 5005;
    for (const auto &c : cases) {
        Configuration r = initial_configuration(c.spec);
        Propagator R = evolve(HoppingSchedule(random_hopping(c.spec, seed), c.t));
        auto exact = exact_distribution(R, r);
        auto draws = sample_exact(exact, seed + 1, kSamples);
        worst = std::max(worst, tvd(OutcomeDistribution::empirical(c.spec.m, r.particles(), draws), exact));

        MarkovMatrix P = markov_matrix(R);
        auto dp = dp_distribution(P, r);
        auto dp_draws = sample_dp(P, r, seed + 2, kSamples);
        worst = std::max(worst, tvd(OutcomeDistribution::empirical(c.spec.m, r.particles(), dp_draws), dp));
        largest = std::max(largest, exact.size());
        seed += 10;
    }
    return {worst < kSamplerTvd && largest <= 500,
            "max empirical tvd " + f("%.4f", worst) + " over supports up to " + std::to_string(largest)};
}

Outcome criterion6() {
    std::mt19937_64 rng(6006);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        LatticeSpec spec = trial % 2 ? make_chain(8, {0}) : make_grid({3, 3}, {0});
        worst = std::max(worst, unitarity_defect(evolve(oracle::random_schedule(spec, 20, 0.5, rng)).R));
    }
    LatticeSpec pair = make_chain(2, {0, 1});
    ComplexMatrix R = evolve(beamsplitter_schedule(pair, 0, 1)).R;
    ComplexMatrix expected(2, 2);
    const double h = 1.0 / std::sqrt(2.0);
    expected << h, -h, h, h;
    double bs_err = max_abs_diff(R, expected);
    double transpose_err = max_abs_diff(R, expected.transpose());
    bool pass = worst <= kUnitarityTolerance && bs_err <= kBeamsplitterTolerance && transpose_err > 1.0;
    return {pass, "max unitarity defect " + f("%.2e", worst) + ", beamsplitter error " + f("%.2e", bs_err) +
                      ", transpose distance " + f("%.3f", transpose_err)};
}

Outcome criterion7() {
    std::mt19937_64 rng(7007);
    std::size_t violations = 0;
    double max_excess = -1.0;
    std::vector<LatticeSpec> lattices{make_chain(40, {0}), make_grid({6, 6}, {0})};
    for (const auto &spec : lattices) {
        BoundParams params = BoundParams::lieb_robinson(spec.d);
        for (double t : {0.5, 1.0, 2.0, 5.0}) {
            for (int trial = 0; trial < 5; ++trial) {
                HoppingSchedule s = oracle::rescale_to(oracle::random_schedule(spec, 4, 1.0, rng), t);
                s.segments.front().J.diagonal().setZero();
                EnvelopeReport rep = lr_envelope_check(evolve(s), t, params, spec);
                violations += rep.violations.size();
                max_excess = std::max(max_excess, rep.max_excess);
            }
        }
    }
    return {violations == 0, std::to_string(violations) + " violations, max excess " + f("%.3e", max_excess)};
}

Outcome criterion8() {
    auto start = Clock::now();
    std::vector<double> values;
    std::vector<double> fock_values;
    for (int sep : {6, 10, 14}) {
        LatticeSpec spec = make_chain(40, {20 - sep / 2, 20 + sep / 2});
        HoppingSchedule s(clean_hopping(spec), 1.0);
        Configuration r = initial_configuration(spec);
        Propagator R = evolve(s);
        values.push_back(tvd_at(R, r));
        fock_values.push_back(tvd(fock_oracle_distribution(s, r), dp_distribution(markov_matrix(R), r)));
    }
    double secs = seconds_since(start);
    bool decreasing = values[0] > values[1] && values[1] > values[2];
    bool fock_agrees = std::abs(values[0] - fock_values[0]) <= kOracleTolerance &&
                       std::abs(values[1] - fock_values[1]) <= kOracleTolerance;
    bool pass = decreasing && values[2] <= kDecayFactor * values[0] && fock_agrees && secs < 120.0;
    return {pass, "tvd(2L=6,10,14) = " + f("%.3e", values[0]) + ", " + f("%.3e", values[1]) + ", " +
                      f("%.3e", values[2]) + " (Fock " + f("%.3e", fock_values[0]) + ", " +
                      f("%.3e", fock_values[1]) + "), " + f("%.2f", secs) + " s"};
}

Outcome criterion9() {
    LatticeSpec spec = make_chain(40, {12, 28});
    Configuration r = initial_configuration(spec);
    double early = tvd_at(evolve(HoppingSchedule(clean_hopping(spec), 1.0)), r);
    double late = tvd_at(evolve(HoppingSchedule(clean_hopping(spec), 20.0)), r);
    return {late >= kCrossoverFactor * early, "tvd(t=1) " + f("%.3e", early) + ", tvd(t=20) " + f("%.3e", late)};
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t k = v.size() / 2;
    return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

Outcome criterion10() {
    const std::vector<double> times{10.0, 25.0, 50.0};
    const double W = 10.0;
    auto averaged = [&](int a, int b, std::vector<double> *xi_by_t) {
        LatticeSpec spec = make_chain(41, {a, b});
        Configuration r = initial_configuration(spec);
        std::vector<double> per_t;
        for (double t : times) {
            double mean = 0.0;
            std::vector<double> xis;
            for (std::uint64_t seed = 1; seed <= 10; ++seed) {
                Propagator R = evolve(HoppingSchedule(anderson_hopping(spec, W, seed), t));
                mean += tvd_at(R, r) / 10.0;
                xis.push_back(localization_check(R, spec).fitted_xi);
            }
            per_t.push_back(mean);
            if (xi_by_t) {
                xi_by_t->push_back(median(xis));
            }
        }
        return median(per_t);
    };
    std::vector<double> xi_by_t;
    double near = averaged(18, 22, &xi_by_t);
    double far = averaged(10, 30, nullptr);
    double xi_mean = (xi_by_t[0] + xi_by_t[1] + xi_by_t[2]) / 3.0;
    double spread = 0.0;
    for (double x : xi_by_t) {
        spread = std::max(spread, std::abs(x / xi_mean - 1.0));
    }
    bool pass = far <= kAndersonFactor * near && spread <= kXiStability && std::isfinite(xi_mean) && xi_mean > 0.0;
    return {pass, "median tvd sep 20 " + f("%.3e", far) + " vs sep 4 " + f("%.3e", near) + ", fitted xi " +
                      f("%.3f", xi_by_t[0]) + "/" + f("%.3f", xi_by_t[1]) + "/" + f("%.3f", xi_by_t[2]) +
                      " (spread " + f("%.1f", 100 * spread) + "%)"};
}

Outcome criterion11() {
    const double closed_tail = 2.0 / (1.0 - std::exp(-1.0));
    double tail_err = 0.0;
    for (double L : {5.0, 10.0, 20.0, 40.0}) {
        tail_err = std::max(tail_err, std::abs(lattice_tail_sum(L, 1.0, 1).ratio - closed_tail) / closed_tail);
    }
    bool f1_ok = true;
    double f1_at3 = 0.0;
    for (double ratio : {1.0, 2.0, 3.0, 5.0, 10.0}) {
        double r = scaled_lattice_sum(ratio, 1.0, 1).ratio;
        f1_ok = f1_ok && r <= 2.1 / (1.0 - std::exp(-2.0 * ratio));
        if (ratio >= 3.0) {
            f1_ok = f1_ok && r <= 2.1;
        }
        if (ratio == 3.0) {
            f1_at3 = r;
        }
    }
    double worst_spread = 0.0;
    for (int d : {2, 3}) {
        std::vector<double> tails, scaled;
        for (double L : {5.0, 10.0, 20.0, 40.0}) {
            tails.push_back(lattice_tail_sum(L, 1.0, d).ratio);
            scaled.push_back(scaled_lattice_sum(L, 1.0, d).ratio);
        }
        for (auto *v : {&tails, &scaled}) {
            auto [lo, hi] = std::minmax_element(v->begin(), v->end());
            worst_spread = std::max(worst_spread, *hi / *lo);
        }
    }
    bool pass = tail_err <= kClosedFormRel && f1_ok && worst_spread < kBoundedSpread;
    return {pass, "d=1 tail ratio error " + f("%.2e", tail_err) + ", f1 ratio at L/xi=3 " + f("%.4f", f1_at3) +
                      ", d=2,3 max/min " + f("%.3f", worst_spread)};
}

Outcome criterion12() {
    double rec = 0.0, sched_err = 0.0;
    bool counts = true, depth = true, valid = true;
    for (int k = 0; k < 50; ++k) {
        int m = std::vector<int>{4, 8, 12}[k % 3];
        ComplexMatrix U = haar_unitary(m, 1200 + k);
        CompiledCircuit c = clements_decompose(U);
        rec = std::max(rec, max_abs_diff(reconstruct(c), U));
        counts = counts && c.two_mode_gate_count() == static_cast<std::size_t>(m * (m - 1) / 2);
        depth = depth && c.two_mode_depth() <= static_cast<std::size_t>(m);
        HoppingSchedule s = circuit_to_schedule(c);
        sched_err = std::max(sched_err, max_abs_diff(evolve(s).R, U));
        valid = valid && validate_schedule(s, make_chain(m, {0})).ok();
    }
    bool pass = rec <= kCompileTolerance && sched_err <= kCompileTolerance && counts && depth && valid;
    return {pass, "reconstruction " + f("%.2e", rec) + ", schedule " + f("%.2e", sched_err) + ", gate counts " +
                      (counts ? "exact" : "WRONG") + ", depth " + (depth ? "<= m" : "> m") + ", validation " +
                      (valid ? "clean" : "violations")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"Hong-Ou-Mandel ground truth", criterion1},
        {"permanent formula vs Fock-space oracle", criterion2},
        {"permanent kernel vs naive expansion", criterion3},
        {"distinguishable distribution vs tuple enumeration", criterion4},
        {"samplers vs exact tables", criterion5},
        {"unitarity and propagator convention", criterion6},
        {"Lieb-Robinson envelope", criterion7},
        {"easy-regime decay with separation", criterion8},
        {"crossover trend in time", criterion9},
        {"Anderson easiness", criterion10},
        {"lattice-sum numerics", criterion11},
        {"compiler round trip", criterion12},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("%s criterion %zu: %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures;
}
