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

#include "bosonlab/dynamics.h"

#include <cmath>
#include <numbers>
#include <sstream>

namespace bosonlab {

namespace {

constexpr double kHermitianTol = 1e-12;

double hermitian_defect(const ComplexMatrix &J) {
    if (J.size() == 0) {
        return 0.0;
    }
    return (J - J.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

HoppingSchedule::HoppingSchedule(ComplexMatrix J, double duration) {
    segments.push_back(Segment{duration, std::move(J)});
}

int HoppingSchedule::modes() const {
    return segments.empty() ? 0 : static_cast<int>(segments.front().J.rows());
}

double HoppingSchedule::total_time() const {
    double t = 0.0;
    for (const auto &s : segments) {
        t += s.duration;
    }
    return t;
}

HoppingSchedule HoppingSchedule::then(const HoppingSchedule &later) const {
    HoppingSchedule out = *this;
    out.segments.insert(out.segments.end(), later.segments.begin(), later.segments.end());
    return out;
}

std::string ValidationReport::describe() const {
    std::ostringstream out;
    for (const auto &v : violations) {
        switch (v.kind) {
            case ViolationKind::NonHermitian:
                out << "non-Hermitian";
                break;
            case ViolationKind::NonAdjacent:
                out << "non-adjacent hop";
                break;
            case ViolationKind::Magnitude:
                out << "|J_ij| > 1";
                break;
        }
        out << " in segment " << v.segment << " at (" << v.i << "," << v.j << ") value " << v.value << "\n";
    }
    return out.str();
}

ValidationReport validate_schedule(const HoppingSchedule &sched, const LatticeSpec &spec) {
    ValidationReport report;
    for (std::size_t s = 0; s < sched.segments.size(); ++s) {
        const ComplexMatrix &J = sched.segments[s].J;
        if (J.rows() != spec.m || J.cols() != spec.m) {
            throw std::invalid_argument("schedule segment " + std::to_string(s) + " is " + std::to_string(J.rows()) +
                                        "x" + std::to_string(J.cols()) + " but the lattice has " +
                                        std::to_string(spec.m) + " sites");
        }
        const int seg = static_cast<int>(s);
        for (int i = 0; i < spec.m; ++i) {
            for (int j = 0; j < spec.m; ++j) {
                double herm = std::abs(J(i, j) - std::conj(J(j, i)));
                if (i <= j && herm > kHermitianTol) {
                    report.violations.push_back({ViolationKind::NonHermitian, seg, i, j, herm});
                }
                if (i >= j) {
                    continue;
                }
                double mag = std::max(std::abs(J(i, j)), std::abs(J(j, i)));
                if (mag != 0.0 && !spec.adjacent(i, j)) {
                    report.violations.push_back({ViolationKind::NonAdjacent, seg, i, j, mag});
                }
                if (mag > 1.0) {
                    report.violations.push_back({ViolationKind::Magnitude, seg, i, j, mag});
                }
            }
        }
    }
    return report;
}

ComplexMatrix hermitian_exp(const ComplexMatrix &J, double tau) {
    if (J.rows() != J.cols()) {
        throw std::invalid_argument("hopping matrix is not square");
    }
    double scale = J.size() ? std::max(1.0, J.cwiseAbs().maxCoeff()) : 1.0;
    if (hermitian_defect(J) > kHermitianTol * scale) {
        throw std::invalid_argument("hopping matrix is not Hermitian");
    }
    if (J.size() == 0) {
        return J;
    }
    ComplexMatrix Jh = (J + J.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(Jh);
    if (eig.info() != Eigen::Success) {
        throw std::invalid_argument("Hermitian eigendecomposition failed");
    }
    const auto &vals = eig.eigenvalues();
    ComplexVector phases(vals.size());
    for (Eigen::Index k = 0; k < vals.size(); ++k) {
        phases[k] = std::polar(1.0, -vals[k] * tau);
    }
    const ComplexMatrix &V = eig.eigenvectors();
    return V * phases.asDiagonal() * V.adjoint();
}

Propagator evolve(const HoppingSchedule &sched) {
    Propagator p;
    const int m = sched.modes();
    p.R = ComplexMatrix::Identity(m, m);
    for (const auto &seg : sched.segments) {
        if (seg.J.rows() != m || seg.J.cols() != m) {
            throw std::invalid_argument("schedule segments have inconsistent sizes");
        }
        if (!(seg.duration > 0.0) || !std::isfinite(seg.duration)) {
            throw std::invalid_argument("segment durations must be positive and finite");
        }
        p.R = hermitian_exp(seg.J, seg.duration) * p.R;
        p.t += seg.duration;
    }
    return p;
}

HoppingSchedule prefix(const HoppingSchedule &sched, double t) {
    if (t < 0.0) {
        throw std::invalid_argument("negative time");
    }
    HoppingSchedule out;
    double remaining = t;
    for (const auto &seg : sched.segments) {
        if (remaining <= 0.0) {
            break;
        }
        Segment s = seg;
        s.duration = std::min(seg.duration, remaining);
        remaining -= s.duration;
        out.segments.push_back(std::move(s));
    }
    if (remaining > 1e-12 * std::max(1.0, t)) {
        throw std::invalid_argument("requested time exceeds the schedule duration");
    }
    return out;
}

HoppingSchedule beamsplitter_schedule(const LatticeSpec &spec, int i, int j) {
    if (!spec.adjacent(i, j)) {
        throw std::invalid_argument("beamsplitter sites are not adjacent");
    }
    ComplexMatrix J = ComplexMatrix::Zero(spec.m, spec.m);
    J(i, j) = Complex(0.0, -1.0);
    J(j, i) = Complex(0.0, 1.0);
    return HoppingSchedule(std::move(J), std::numbers::pi / 4);
}

HoppingSchedule phase_schedule(int m, int k, double phi) {
    if (k < 0 || k >= m) {
        throw std::out_of_range("phase site out of range");
    }
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("phase must be finite");
    }
    ComplexMatrix J = ComplexMatrix::Zero(m, m);
    J(k, k) = phi;
    return HoppingSchedule(std::move(J), 1.0);
}

ComplexMatrix clean_hopping(const LatticeSpec &spec) {
    ComplexMatrix J = ComplexMatrix::Zero(spec.m, spec.m);
    for (int i = 0; i < spec.m; ++i) {
        for (int j : spec.neighbors[i]) {
            J(i, j) = 1.0;
        }
    }
    return J;
}

ComplexMatrix anderson_hopping(const LatticeSpec &spec, double W, std::uint64_t seed) {
    if (!(W >= 0.0)) {
        throw std::invalid_argument("disorder strength must be non-negative");
    }
    ComplexMatrix J = clean_hopping(spec);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < spec.m; ++i) {
        J(i, i) = W * (2.0 * uniform01(rng) - 1.0);
    }
    return J;
}

ComplexMatrix random_hopping(const LatticeSpec &spec, std::uint64_t seed) {
    ComplexMatrix J = ComplexMatrix::Zero(spec.m, spec.m);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < spec.m; ++i) {
        for (int j : spec.neighbors[i]) {
            if (j <= i) {
                continue;
            }
            double mag = uniform01(rng);
            double phase = 2.0 * std::numbers::pi * uniform01(rng);
            J(i, j) = std::polar(mag, phase);
            J(j, i) = std::conj(J(i, j));
        }
    }
    return J;
}

ComplexMatrix haar_unitary(int m, std::uint64_t seed) {
    if (m < 0) {
        throw std::invalid_argument("negative dimension");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix Z(m, m);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            double re = gauss(rng);
            double im = gauss(rng);
            Z(i, j) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(Z);
    ComplexMatrix Q = qr.householderQ() * ComplexMatrix::Identity(m, m);
    ComplexMatrix Rm = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < m; ++k) {
        Complex d = Rm(k, k);
        double a = std::abs(d);
        Q.col(k) *= (a > 0.0) ? d / a : Complex(1.0, 0.0);
    }
    return Q;
}

}  // namespace bosonlab
