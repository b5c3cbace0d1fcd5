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

#include "bosonlab/compiler.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>

#include "bosonlab/bounds.h"

namespace bosonlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kIdentityTolerance = 1e-14;

double wrap_angle(double a) {
    double w = std::fmod(a, kTwoPi);
    if (w < 0.0) {
        w += kTwoPi;
    }
    // fmod of a value just below zero can round up to exactly 2 pi.
    return w >= kTwoPi ? 0.0 : w;
}

bool is_identity(const Gate &g) {
    bool trivial_phase = std::abs(std::polar(1.0, g.phi) - 1.0) <= kIdentityTolerance;
    if (g.kind == GateKind::Phase) {
        return trivial_phase;
    }
    return std::sin(g.theta) <= kIdentityTolerance && trivial_phase;
}

// Column operation U <- U T^{-1} on (c, c+1) zeroing U(x, c).
Gate null_from_right(ComplexMatrix &U, int x, int c) {
    Complex a = U(x, c);
    Complex b = U(x, c + 1);
    double theta = std::atan2(std::abs(a), std::abs(b));
    double phi = (a == 0.0 || b == 0.0) ? (a == 0.0 ? 0.0 : std::arg(a)) : std::arg(a) - std::arg(b);
    Gate g = Gate::two_mode(c, theta, wrap_angle(phi));
    ComplexMatrix Tinv = g.block().adjoint();
    U.middleCols(c, 2) = U.middleCols(c, 2) * Tinv;
    U(x, c) = 0.0;
    return g;
}

// Row operation U <- T U on (x-1, x) zeroing U(x, c).
Gate null_from_left(ComplexMatrix &U, int x, int c) {
    Complex a = U(x - 1, c);
    Complex b = U(x, c);
    double theta = std::atan2(std::abs(b), std::abs(a));
    double phi = (a == 0.0 || b == 0.0) ? 0.0 : std::arg(-b / a);
    Gate g = Gate::two_mode(x - 1, theta, wrap_angle(phi));
    U.middleRows(x - 1, 2) = g.block() * U.middleRows(x - 1, 2);
    U(x, c) = 0.0;
    return g;
}

}  // namespace

ComplexMatrix Gate::block() const {
    if (kind == GateKind::Phase) {
        ComplexMatrix b(1, 1);
        b(0, 0) = std::polar(1.0, -phi);
        return b;
    }
    const Complex e = std::polar(1.0, phi);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    ComplexMatrix b(2, 2);
    b << e * c, -s, e * s, c;
    return b;
}

std::size_t CompiledCircuit::two_mode_gate_count() const {
    std::size_t count = 0;
    for (const auto &layer : layers) {
        for (const auto &g : layer) {
            count += g.kind == GateKind::TwoMode;
        }
    }
    return count;
}

std::size_t CompiledCircuit::phase_gate_count() const {
    std::size_t count = 0;
    for (const auto &layer : layers) {
        for (const auto &g : layer) {
            count += g.kind == GateKind::Phase;
        }
    }
    return count;
}

std::size_t CompiledCircuit::two_mode_depth() const {
    std::size_t count = 0;
    for (const auto &layer : layers) {
        count += std::any_of(layer.begin(), layer.end(), [](const Gate &g) { return g.kind == GateKind::TwoMode; });
    }
    return count;
}

void validate_circuit(const CompiledCircuit &circuit) {
    if (circuit.m < 0) {
        throw std::invalid_argument("circuit has a negative mode count");
    }
    for (std::size_t l = 0; l < circuit.layers.size(); ++l) {
        std::vector<char> used(circuit.m, 0);
        auto claim = [&](int site) {
            if (site < 0 || site >= circuit.m) {
                throw std::invalid_argument("layer " + std::to_string(l) + " has a gate on site " +
                                            std::to_string(site) + " outside 0.." + std::to_string(circuit.m - 1));
            }
            if (used[site]) {
                throw std::invalid_argument("layer " + std::to_string(l) + " has overlapping gates on site " +
                                            std::to_string(site));
            }
            used[site] = 1;
        };
        for (const auto &g : circuit.layers[l]) {
            if (!std::isfinite(g.theta) || !std::isfinite(g.phi)) {
                throw std::invalid_argument("layer " + std::to_string(l) + " has a non-finite angle");
            }
            if (g.kind == GateKind::Phase) {
                if (g.j != g.i) {
                    throw std::invalid_argument("phase gate must have i == j");
                }
                claim(g.i);
                continue;
            }
            if (g.j != g.i + 1) {
                throw std::invalid_argument("two-mode gate on non-adjacent pair (" + std::to_string(g.i) + ", " +
                                            std::to_string(g.j) + ")");
            }
            if (g.theta < 0.0 || g.theta > std::numbers::pi / 2 + 1e-12) {
                throw std::invalid_argument("two-mode gate angle theta outside [0, pi/2]");
            }
            claim(g.i);
            claim(g.j);
        }
    }
}

CompiledCircuit clements_decompose(const ComplexMatrix &U_in) {
    if (U_in.rows() != U_in.cols()) {
        throw std::invalid_argument("unitary must be square");
    }
    const int N = static_cast<int>(U_in.rows());
    if (N > kMaxCompileModes) {
        throw GuardExceeded("compiler supports at most " + std::to_string(kMaxCompileModes) + " modes, got " +
                            std::to_string(N));
    }
    double defect = unitarity_defect(U_in);
    if (!(defect <= kCompileUnitarityTolerance)) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.3e", defect);
        throw std::invalid_argument(std::string("input is not unitary: max |U^dag U - I| = ") + buf);
    }

    ComplexMatrix U = U_in;
    std::vector<Gate> right;  // in nulling order; U_in = ... T_p ... T_1 on the right
    std::vector<Gate> left;   // in nulling order
    for (int i = 0; i + 1 < N; ++i) {
        if (i % 2 == 0) {
            for (int j = 0; j <= i; ++j) {
                right.push_back(null_from_right(U, N - 1 - j, i - j));
            }
        } else {
            for (int j = 1; j <= i + 1; ++j) {
                left.push_back(null_from_left(U, N + j - i - 2, j - 1));
            }
        }
    }

    // Now L_q ... L_1 U_in T_1^{-1} ... T_p^{-1} = D. Push each L^{-1} through D
    // using T^{-1}(theta, phi) D = D' T(theta, phi') with
    // phi' = arg(-d1 / d2), d1' = -e^{-i phi} d2, d2' = d2.
    ComplexVector D = U.diagonal();
    std::vector<Gate> moved;  // T'_q, ..., T'_1
    for (auto it = left.rbegin(); it != left.rend(); ++it) {
        const Gate &g = *it;
        Complex &d1 = D(g.i);
        Complex &d2 = D(g.i + 1);
        const Complex e_minus = std::polar(1.0, -g.phi);
        if (std::sin(g.theta) == 0.0) {
            d1 *= e_minus * std::cos(g.theta);
            moved.push_back(Gate::two_mode(g.i, 0.0, 0.0));
            continue;
        }
        double phi_prime = wrap_angle(std::arg(-d1 / d2));
        d1 = -e_minus * d2;
        moved.push_back(Gate::two_mode(g.i, g.theta, phi_prime));
    }
    // U_in = D T'_1 ... T'_q T_p ... T_1, so T'_q (built first) acts right after T_p.
    std::vector<Gate> sequence = right;
    sequence.insert(sequence.end(), moved.begin(), moved.end());

    CompiledCircuit circuit;
    circuit.m = N;
    std::vector<int> depth(N, 0);
    for (const Gate &g : sequence) {
        if (is_identity(g)) {
            continue;
        }
        int layer = std::max(depth[g.i], depth[g.i + 1]);
        if (layer >= static_cast<int>(circuit.layers.size())) {
            circuit.layers.resize(layer + 1);
        }
        circuit.layers[layer].push_back(g);
        depth[g.i] = depth[g.i + 1] = layer + 1;
    }
    std::vector<Gate> phases;
    for (int k = 0; k < N; ++k) {
        Gate p = Gate::phase(k, wrap_angle(-std::arg(D(k))));
        if (!is_identity(p)) {
            phases.push_back(p);
        }
    }
    if (!phases.empty()) {
        circuit.layers.push_back(std::move(phases));
    }
    return circuit;
}

ComplexMatrix reconstruct(const CompiledCircuit &circuit) {
    validate_circuit(circuit);
    ComplexMatrix U = ComplexMatrix::Identity(circuit.m, circuit.m);
    for (const auto &layer : circuit.layers) {
        for (const auto &g : layer) {
            if (g.kind == GateKind::Phase) {
                U.row(g.i) *= g.block()(0, 0);
            } else {
                U.middleRows(g.i, 2) = g.block() * U.middleRows(g.i, 2);
            }
        }
    }
    return U;
}

HoppingSchedule circuit_to_schedule(const CompiledCircuit &circuit, std::span<const int> path) {
    validate_circuit(circuit);
    const int m = circuit.m;
    std::vector<int> place(m);
    if (path.empty()) {
        for (int k = 0; k < m; ++k) {
            place[k] = k;
        }
    } else {
        if (static_cast<int>(path.size()) != m) {
            throw std::invalid_argument("path length does not match the circuit mode count");
        }
        place.assign(path.begin(), path.end());
    }
    HoppingSchedule sched;
    for (const auto &layer : circuit.layers) {
        ComplexMatrix phases = ComplexMatrix::Zero(m, m);
        bool any_phase = false;
        double tau = 0.0;
        for (const auto &g : layer) {
            // The two-mode gate factors as rotation(theta) * diag(e^{i phi}, 1);
            // a phase gate is diag(e^{-i phi}).
            double angle = g.kind == GateKind::Phase ? wrap_angle(g.phi) : wrap_angle(-g.phi);
            if (angle != 0.0) {
                phases(place[g.i], place[g.i]) = angle;
                any_phase = true;
            }
            if (g.kind == GateKind::TwoMode) {
                tau = std::max(tau, g.theta);
            }
        }
        if (any_phase) {
            sched.segments.push_back({1.0, std::move(phases)});
        }
        if (tau > 0.0) {
            ComplexMatrix J = ComplexMatrix::Zero(m, m);
            for (const auto &g : layer) {
                if (g.kind != GateKind::TwoMode || g.theta == 0.0) {
                    continue;
                }
                double rate = std::min(1.0, g.theta / tau);
                J(place[g.i], place[g.j]) = Complex(0.0, -rate);
                J(place[g.j], place[g.i]) = Complex(0.0, rate);
            }
            sched.segments.push_back({tau, std::move(J)});
        }
    }
    return sched;
}

HoppingSchedule circuit_to_schedule(const CompiledCircuit &circuit, const LatticeSpec &spec) {
    if (circuit.m != spec.m) {
        throw std::invalid_argument("circuit has " + std::to_string(circuit.m) + " modes but the lattice has " +
                                    std::to_string(spec.m) + " sites");
    }
    auto path = serpentine_path(spec);
    return circuit_to_schedule(circuit, path);
}

DepthReport depth_report(const CompiledCircuit &circuit, int n, double beta, int d) {
    if (n < 1 || d < 1) {
        throw std::invalid_argument("depth_report needs n >= 1 and d >= 1");
    }
    DepthReport r;
    r.m = circuit.m;
    r.layers = circuit.two_mode_depth();
    r.two_mode_gates = circuit.two_mode_gate_count();
    r.phase_gates = circuit.phase_gate_count();
    r.sequential_depth = r.two_mode_gates;
    r.total_time = circuit_to_schedule(circuit).total_time();
    r.t_hard_scale = std::pow(static_cast<double>(n), 1.0 + beta / d);
    return r;
}

void write_circuit(std::ostream &out, const CompiledCircuit &circuit) {
    char buf[160];
    for (std::size_t l = 0; l < circuit.layers.size(); ++l) {
        for (const auto &g : circuit.layers[l]) {
            std::snprintf(buf, sizeof(buf), "%zu,%s,%d,%d,%.17g,%.17g\n", l,
                          g.kind == GateKind::Phase ? "phase" : "bs", g.i, g.j, g.theta, g.phi);
            out << buf;
        }
    }
}

CompiledCircuit read_circuit(std::istream &in, int m) {
    CompiledCircuit circuit;
    circuit.m = m;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            auto comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
        auto bad = [&](const std::string &why) {
            return std::invalid_argument("circuit line " + std::to_string(lineno) + ": " + why);
        };
        if (fields.size() != 6) {
            throw bad("expected 6 comma-separated fields");
        }
        auto to_int = [&](const std::string &s) {
            int v = 0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
                throw bad("bad integer '" + s + "'");
            }
            return v;
        };
        auto to_double = [&](const std::string &s) {
            double v = 0.0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
                throw bad("bad number '" + s + "'");
            }
            return v;
        };
        int layer = to_int(fields[0]);
        if (layer < 0) {
            throw bad("negative layer index");
        }
        Gate g;
        if (fields[1] == "bs") {
            g.kind = GateKind::TwoMode;
        } else if (fields[1] == "phase") {
            g.kind = GateKind::Phase;
        } else {
            throw bad("unknown gate kind '" + fields[1] + "'");
        }
        g.i = to_int(fields[2]);
        g.j = to_int(fields[3]);
        g.theta = to_double(fields[4]);
        g.phi = to_double(fields[5]);
        if (layer >= static_cast<int>(circuit.layers.size())) {
            circuit.layers.resize(layer + 1);
        }
        circuit.layers[layer].push_back(g);
    }
    validate_circuit(circuit);
    return circuit;
}

}  // namespace bosonlab
