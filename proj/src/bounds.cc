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

#include "bosonlab/bounds.h"

#include <cmath>
#include <limits>
#include <numbers>

namespace bosonlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Fills the least-squares and envelope localization lengths from off-diagonal
// pairs with |R_ij| above the fit floor. `inside` filters pairs for the fit.
template <typename Inside>
void fit_lengths(const Propagator &R, const LatticeSpec &spec, Inside inside, EnvelopeReport &report) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t count = 0;
    double envelope_xi = 0.0;
    for (int i = 0; i < spec.m; ++i) {
        for (int j = 0; j < spec.m; ++j) {
            if (i == j) {
                continue;
            }
            double a = std::abs(R.R(i, j));
            if (!(a > kFitFloor)) {
                continue;
            }
            double l = site_distance(spec, i, j);
            envelope_xi = (a >= 1.0) ? kInf : std::max(envelope_xi, l / -std::log(a));
            if (!inside(i, j, a)) {
                continue;
            }
            double y = std::log(a);
            sx += l;
            sy += y;
            sxx += l * l;
            sxy += l * y;
            ++count;
        }
    }
    report.envelope_xi = envelope_xi;
    report.fitted_pairs = count;
    if (count == 0) {
        report.fitted_xi = 0.0;
        return;
    }
    double nn = static_cast<double>(count);
    double var = sxx - sx * sx / nn;
    double slope = (var > 1e-12 * sxx) ? (sxy - sx * sy / nn) / var : sxy / sxx;
    report.fitted_xi = slope < 0.0 ? -1.0 / slope : kInf;
}

// Certified lattice sum of exp(-|x| / decay) over x in Z^d with |x| >= threshold.
LatticeSum lattice_sum(double threshold, double decay, int d) {
    if (d < 1 || d > 3) {
        throw std::invalid_argument("lattice sums support d = 1, 2, 3");
    }
    if (!(decay > 0.0) || !(threshold > 0.0)) {
        throw std::invalid_argument("lattice sums need positive length scales");
    }
    // Points outside the cube [-Q, Q]^d have sup-norm q > Q, hence |x| >= q; there are
    // (2q+1)^d - (2q-1)^d of them at sup-norm q.
    auto remainder = [&](int Q) {
        double total = 0.0;
        for (long q = Q + 1;; ++q) {
            double shell = std::pow(2.0 * q + 1.0, d) - std::pow(2.0 * q - 1.0, d);
            double term = shell * std::exp(-static_cast<double>(q) / decay);
            total += term;
            if (term < 1e-25 * total || term < 1e-300) {
                break;
            }
        }
        return total;
    };
    const double t2 = threshold * threshold;
    auto enumerate = [&](int Q) {
        double sum = 0.0;
        int hi1 = d > 1 ? Q : 0;
        int hi2 = d > 2 ? Q : 0;
        for (int z = 0; z <= hi2; ++z) {
            for (int y = 0; y <= hi1; ++y) {
                for (int x = 0; x <= Q; ++x) {
                    double n2 = static_cast<double>(x) * x + static_cast<double>(y) * y + static_cast<double>(z) * z;
                    if (n2 < t2) {
                        continue;
                    }
                    int weight = (x ? 2 : 1) * (y ? 2 : 1) * (z ? 2 : 1);
                    sum += weight * std::exp(-std::sqrt(n2) / decay);
                }
            }
        }
        return sum;
    };
    int Q = static_cast<int>(std::ceil(threshold)) + 1;
    while (true) {
        double sum = enumerate(Q);
        double rem = remainder(Q);
        if (sum > 0.0 && rem <= 1e-15 * sum) {
            LatticeSum out;
            out.sum = sum;
            out.radius = Q;
            out.remainder_bound = rem;
            return out;
        }
        if (Q > 4000) {
            throw GuardExceeded("lattice sum cutoff radius grew beyond 4000");
        }
        Q += std::max(5, Q / 4);
    }
}

}  // namespace

double lieb_robinson_velocity(int d) {
    return 4.0 * (1.0 + 2.0 * d * std::numbers::e);
}

void BoundParams::validate() const {
    if (!(v >= 0.0) || !(xi > 0.0)) {
        throw std::invalid_argument("bound parameters need v >= 0 and xi > 0");
    }
}

double tvd(const OutcomeDistribution &p, const OutcomeDistribution &q) {
    if (p.modes() != q.modes() || p.particles() != q.particles()) {
        throw std::invalid_argument("distributions are over different (n, m)");
    }
    const auto &po = p.outcomes();
    const auto &qo = q.outcomes();
    const auto &pp = p.probabilities();
    const auto &qp = q.probabilities();
    double total = 0.0;
    std::size_t a = 0, b = 0;
    while (a < po.size() || b < qo.size()) {
        if (b == qo.size() || (a < po.size() && po[a] < qo[b])) {
            total += std::abs(pp[a++]);
        } else if (a == po.size() || qo[b] < po[a]) {
            total += std::abs(qp[b++]);
        } else {
            total += std::abs(pp[a++] - qp[b++]);
        }
    }
    return 0.5 * total;
}

EnvelopeReport lr_envelope_check(const Propagator &R, double t, const BoundParams &params, const LatticeSpec &spec) {
    params.validate();
    if (R.modes() != spec.m) {
        throw std::invalid_argument("propagator size does not match the lattice");
    }
    EnvelopeReport report;
    report.max_excess = -kInf;
    auto envelope = [&](int i, int j) {
        return std::min(1.0, std::exp((params.v * t - site_distance(spec, i, j)) / params.xi));
    };
    for (int i = 0; i < spec.m; ++i) {
        for (int j = 0; j < spec.m; ++j) {
            double a = std::abs(R.R(i, j));
            double env = envelope(i, j);
            report.max_excess = std::max(report.max_excess, a - env);
            if (a > env + kEnvelopeTolerance) {
                report.violations.push_back({i, j, a, env});
            }
        }
    }
    fit_lengths(
        R, spec, [&](int i, int j, double a) { return a <= envelope(i, j) + kEnvelopeTolerance; }, report);
    return report;
}

EnvelopeReport localization_check(const Propagator &R, const LatticeSpec &spec) {
    if (R.modes() != spec.m) {
        throw std::invalid_argument("propagator size does not match the lattice");
    }
    EnvelopeReport report;
    fit_lengths(R, spec, [](int, int, double) { return true; }, report);
    const double xi = report.envelope_xi;
    report.max_excess = -kInf;
    for (int i = 0; i < spec.m; ++i) {
        for (int j = 0; j < spec.m; ++j) {
            double a = std::abs(R.R(i, j));
            double l = site_distance(spec, i, j);
            double env = (i == j) ? 1.0 : (xi > 0.0 ? std::exp(-l / xi) : 0.0);
            if (i != j && !(a > kFitFloor)) {
                // Below the floor the entry is roundoff, not signal.
                continue;
            }
            report.max_excess = std::max(report.max_excess, a - env);
            if (a > env * (1.0 + 1e-9) + kEnvelopeTolerance) {
                report.violations.push_back({i, j, a, env});
            }
        }
    }
    return report;
}

double tvd_bound(double L, double vt, double xi, int d) {
    if (!(L > 0.0)) {
        throw std::invalid_argument("L must be positive");
    }
    return std::exp(2.0 * (vt - L) / xi + 2.0 * (d - 1) * std::log(L));
}

CollisionStrength collision_strength(const Propagator &R, const Configuration &r, int boson) {
    const auto in = r.sites();
    if (r.modes() != R.modes()) {
        throw std::invalid_argument("configuration length does not match the propagator");
    }
    if (boson < 0 || boson >= static_cast<int>(in.size())) {
        throw std::out_of_range("boson index out of range");
    }
    const int start = in[boson];
    CollisionStrength cs;
    // amp(x -> y) = R(y, x).
    for (int j = 0; j < R.modes(); ++j) {
        double out_amp = std::abs(R.R(j, start));
        cs.D += out_amp * out_amp;
        double back = 0.0;
        for (int k = 0; k < static_cast<int>(in.size()); ++k) {
            if (k != boson) {
                back += std::abs(R.R(in[k], j));
            }
        }
        cs.C += out_amp * back;
    }
    return cs;
}

CollisionReport collision_check(const Propagator &R, const Configuration &r, const LatticeSpec &spec,
                             const BoundParams &params, double t) {
    params.validate();
    CollisionReport rep;
    rep.L = spec.L;
    for (int b = 0; b < r.particles(); ++b) {
        rep.max_C = std::max(rep.max_C, collision_strength(R, r, b).C);
    }
    rep.envelope = std::pow(spec.L, spec.d - 1) * std::exp((params.v * t - spec.L) / params.xi);
    rep.ratio = rep.max_C / rep.envelope;
    return rep;
}

LatticeSum lattice_tail_sum(double L, double xi, int d) {
    if (!(L / xi >= 1.0)) {
        throw std::invalid_argument("lattice_tail_sum needs L / xi >= 1");
    }
    LatticeSum s = lattice_sum(L, xi, d);
    s.ratio = s.sum / (xi * std::pow(L, d - 1) * std::exp(-L / xi));
    return s;
}

LatticeSum scaled_lattice_sum(double L, double xi, int d) {
    if (!(L / xi >= 1.0)) {
        throw std::invalid_argument("scaled_lattice_sum needs L / xi >= 1");
    }
    LatticeSum s = lattice_sum(1.0, xi / (2.0 * L), d);
    s.ratio = s.sum * std::exp(2.0 * L / xi);
    return s;
}

Timescales timescales(const LatticeSpec &spec, const BoundParams &params, double easy_fraction) {
    params.validate();
    Timescales ts;
    ts.t_easy = params.v > 0.0 ? easy_fraction * spec.L / params.v : kInf;
    ts.t_hard_scale = std::pow(static_cast<double>(spec.n), 1.0 + spec.beta / spec.d);
    return ts;
}

Timescales timescales(int n, double beta, double c1, int d, const BoundParams &params, double easy_fraction) {
    return timescales(build_lattice(n, beta, c1, d), params, easy_fraction);
}

}  // namespace bosonlab
