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

#include "bosonlab/lattice.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bosonlab {

namespace {

constexpr long long kMaxCells = 1LL << 26;

long long int_pow(long long base, int exp) {
    long long r = 1;
    for (int k = 0; k < exp; ++k) {
        r *= base;
    }
    return r;
}

// Smallest s with s^d >= value.
int ceil_root(long long value, int d) {
    auto s = static_cast<long long>(std::floor(std::pow(static_cast<double>(value), 1.0 / d)));
    s = std::max(0LL, s - 1);
    while (int_pow(s, d) < value) {
        ++s;
    }
    return static_cast<int>(s);
}

// Largest s with s^d * den <= num.
int floor_root_ratio(long long num, long long den, int d) {
    auto s = static_cast<long long>(std::ceil(std::pow(static_cast<double>(num) / den, 1.0 / d))) + 1;
    while (s > 0 && int_pow(s, d) * den > num) {
        --s;
    }
    return static_cast<int>(s);
}

long long cell_index(const Coord &c, int side, int d) {
    long long idx = 0;
    for (int a = d - 1; a >= 0; --a) {
        idx = idx * side + c[a];
    }
    return idx;
}

Coord cell_coord(long long idx, int side, int d) {
    Coord c{0, 0, 0};
    for (int a = 0; a < d; ++a) {
        c[a] = static_cast<int>(idx % side);
        idx /= side;
    }
    return c;
}

bool in_box(const Coord &c, int side, int d) {
    for (int a = 0; a < d; ++a) {
        if (c[a] < 0 || c[a] >= side) {
            return false;
        }
    }
    return true;
}

double coord_distance(const Coord &a, const Coord &b) {
    double s = 0.0;
    for (int k = 0; k < 3; ++k) {
        double diff = a[k] - b[k];
        s += diff * diff;
    }
    return std::sqrt(s);
}

// Fills neighbors and L from coords, ancilla_coords, occupied.
void finalize(LatticeSpec &spec) {
    const int d = spec.d;
    const int side = spec.side;
    long long cells = int_pow(side, d);
    if (cells > kMaxCells) {
        throw std::invalid_argument("lattice too large");
    }
    // -1 empty, -2 ancilla, otherwise ordinary site index.
    std::vector<int> grid(static_cast<std::size_t>(cells), -1);
    for (int i = 0; i < spec.m; ++i) {
        const Coord &c = spec.coords[i];
        if (!in_box(c, side, d)) {
            throw std::invalid_argument("site coordinate outside the lattice box");
        }
        int &slot = grid[cell_index(c, side, d)];
        if (slot != -1) {
            throw std::invalid_argument("duplicate site coordinate");
        }
        slot = i;
    }
    for (const Coord &c : spec.ancilla_coords) {
        if (!in_box(c, side, d)) {
            throw std::invalid_argument("ancilla coordinate outside the lattice box");
        }
        int &slot = grid[cell_index(c, side, d)];
        if (slot != -1) {
            throw std::invalid_argument("ancilla overlaps another cell");
        }
        slot = -2;
    }

    // Unit steps, and steps across a single ancilla cell so that ancillas never cut the graph.
    spec.neighbors.assign(spec.m, {});
    for (int i = 0; i < spec.m; ++i) {
        for (int a = 0; a < d; ++a) {
            for (int dir : {-1, 1}) {
                Coord c = spec.coords[i];
                c[a] += dir;
                if (!in_box(c, side, d)) {
                    continue;
                }
                int slot = grid[cell_index(c, side, d)];
                if (slot == -2) {
                    c[a] += dir;
                    if (!in_box(c, side, d)) {
                        continue;
                    }
                    slot = grid[cell_index(c, side, d)];
                }
                if (slot >= 0) {
                    spec.neighbors[i].push_back(slot);
                }
            }
        }
        std::sort(spec.neighbors[i].begin(), spec.neighbors[i].end());
    }

    std::sort(spec.occupied.begin(), spec.occupied.end());
    if (std::adjacent_find(spec.occupied.begin(), spec.occupied.end()) != spec.occupied.end()) {
        throw std::invalid_argument("occupied sites must be distinct");
    }
    for (int s : spec.occupied) {
        spec.check_index(s);
    }
    spec.n = static_cast<int>(spec.occupied.size());
    if (spec.n == 1) {
        spec.L = spec.side / 2.0;
    } else {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < spec.occupied.size(); ++a) {
            for (std::size_t b = a + 1; b < spec.occupied.size(); ++b) {
                best = std::min(best, coord_distance(spec.coords[spec.occupied[a]], spec.coords[spec.occupied[b]]));
            }
        }
        spec.L = best / 2.0;
    }
}

// Exponent so that m == n^beta exactly (with c1 = 1) for hand-built geometries.
void set_custom_density(LatticeSpec &spec) {
    if (spec.n >= 2) {
        spec.c1 = 1.0;
        spec.beta = std::log(static_cast<double>(spec.m)) / std::log(static_cast<double>(spec.n));
    } else {
        spec.beta = 1.0;
        spec.c1 = spec.m;
    }
}

}  // namespace

bool LatticeSpec::adjacent(int i, int j) const {
    check_index(i);
    check_index(j);
    const auto &nb = neighbors[i];
    return std::binary_search(nb.begin(), nb.end(), j);
}

void LatticeSpec::check_index(int i) const {
    if (i < 0 || i >= m) {
        throw std::out_of_range("site index " + std::to_string(i) + " out of range for m=" + std::to_string(m));
    }
}

Configuration::Configuration(std::vector<int> occupations) : occ(std::move(occupations)) {
    for (int v : occ) {
        if (v < 0) {
            throw std::invalid_argument("negative occupation");
        }
    }
}

int Configuration::particles() const {
    int total = 0;
    for (int v : occ) {
        total += v;
    }
    return total;
}

std::vector<int> Configuration::sites() const {
    std::vector<int> out;
    for (int j = 0; j < modes(); ++j) {
        for (int k = 0; k < occ[j]; ++k) {
            out.push_back(j);
        }
    }
    return out;
}

unsigned long long Configuration::factorial_product() const {
    unsigned long long p = 1;
    for (int v : occ) {
        if (v > 20) {
            throw std::overflow_error("occupation too large for exact factorial");
        }
        for (int k = 2; k <= v; ++k) {
            p *= static_cast<unsigned long long>(k);
        }
    }
    return p;
}

std::string Configuration::to_string() const {
    std::string s;
    for (std::size_t j = 0; j < occ.size(); ++j) {
        if (j) {
            s += '-';
        }
        s += std::to_string(occ[j]);
    }
    return s;
}

Configuration Configuration::parse(std::string_view text) {
    std::vector<int> occ;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('-', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto token = text.substr(pos, end - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
            throw std::invalid_argument("bad occupation vector '" + std::string(text) + "'");
        }
        occ.push_back(value);
        pos = end + 1;
    }
    return Configuration(std::move(occ));
}

Configuration Configuration::from_sites(int m, std::span<const int> sites) {
    std::vector<int> occ(m, 0);
    for (int s : sites) {
        if (s < 0 || s >= m) {
            throw std::out_of_range("site index out of range");
        }
        ++occ[s];
    }
    return Configuration(std::move(occ));
}

LatticeSpec build_lattice(int n, double beta, double c1, int d) {
    if (d < 1 || d > 3) {
        throw std::invalid_argument("dimension must be 1, 2 or 3");
    }
    if (n < 1) {
        throw std::invalid_argument("need at least one boson");
    }
    if (!(c1 > 0.0) || !(beta >= 1.0)) {
        throw std::invalid_argument("need c1 > 0 and beta >= 1");
    }
    double target = c1 * std::pow(static_cast<double>(n), beta);
    if (target < n * (1.0 - 1e-12)) {
        throw std::invalid_argument("c1 * n^beta must be at least n");
    }
    if (target > static_cast<double>(kMaxCells)) {
        throw std::invalid_argument("lattice too large");
    }

    LatticeSpec spec;
    spec.d = d;
    spec.beta = beta;
    spec.c1 = c1;
    spec.m = std::max(n, static_cast<int>(std::llround(target)));
    const long long total = static_cast<long long>(spec.m) + n;
    spec.side = ceil_root(total, d);
    const int spacing = floor_root_ratio(total, n, d);
    const int per_axis = ceil_root(n, d);
    const int side = spec.side;

    std::vector<char> taken(static_cast<std::size_t>(int_pow(side, d)), 0);
    std::vector<Coord> bosons;
    for (int b = 0; b < n; ++b) {
        Coord c{0, 0, 0};
        int rest = b;
        for (int a = 0; a < d; ++a) {
            c[a] = (rest % per_axis) * spacing;
            rest /= per_axis;
        }
        if (!in_box(c, side, d)) {
            throw std::invalid_argument("occupied sublattice does not fit in the lattice box");
        }
        bosons.push_back(c);
        taken[cell_index(c, side, d)] = 1;
    }
    for (const Coord &b : bosons) {
        bool placed = false;
        for (int a = 0; a < d && !placed; ++a) {
            for (int dir : {1, -1}) {
                Coord c = b;
                c[a] += dir;
                if (in_box(c, side, d) && !taken[cell_index(c, side, d)]) {
                    taken[cell_index(c, side, d)] = 2;
                    spec.ancilla_coords.push_back(c);
                    placed = true;
                    break;
                }
            }
        }
        if (!placed) {
            // Dense packing (spacing 1) can wall a boson in; take the nearest free cell instead.
            long long best = -1;
            int best_dist = std::numeric_limits<int>::max();
            for (long long idx = 0; idx < static_cast<long long>(taken.size()); ++idx) {
                if (taken[idx]) {
                    continue;
                }
                Coord c = cell_coord(idx, side, d);
                int dist = 0;
                for (int a = 0; a < d; ++a) {
                    dist += std::abs(c[a] - b[a]);
                }
                if (dist < best_dist) {
                    best_dist = dist;
                    best = idx;
                }
            }
            if (best < 0) {
                throw std::invalid_argument("no free cell for an ancilla");
            }
            taken[best] = 2;
            spec.ancilla_coords.push_back(cell_coord(best, side, d));
        }
    }

    // Ordinary sites: the boson cells plus the first m - n free cells in row-major order.
    std::vector<long long> chosen;
    chosen.reserve(spec.m);
    for (const Coord &b : bosons) {
        chosen.push_back(cell_index(b, side, d));
    }
    long long need = spec.m - n;
    for (long long idx = 0; idx < static_cast<long long>(taken.size()) && need > 0; ++idx) {
        if (!taken[idx]) {
            chosen.push_back(idx);
            --need;
        }
    }
    if (need > 0) {
        throw std::invalid_argument("lattice box too small for m + n cells");
    }
    std::sort(chosen.begin(), chosen.end());
    spec.coords.reserve(chosen.size());
    for (long long idx : chosen) {
        spec.coords.push_back(cell_coord(idx, side, d));
        if (taken[idx] == 1) {
            spec.occupied.push_back(static_cast<int>(spec.coords.size()) - 1);
        }
    }
    finalize(spec);
    return spec;
}

LatticeSpec make_chain(int m, std::vector<int> occupied_sites) {
    return make_grid({m}, std::move(occupied_sites));
}

LatticeSpec make_grid(std::vector<int> dims, std::vector<int> occupied_sites) {
    if (dims.empty() || dims.size() > 3) {
        throw std::invalid_argument("grid dimension must be 1, 2 or 3");
    }
    LatticeSpec spec;
    spec.d = static_cast<int>(dims.size());
    long long cells = 1;
    for (int extent : dims) {
        if (extent < 1) {
            throw std::invalid_argument("grid extents must be positive");
        }
        cells *= extent;
        spec.side = std::max(spec.side, extent);
    }
    if (cells > kMaxCells) {
        throw std::invalid_argument("lattice too large");
    }
    if (occupied_sites.empty()) {
        throw std::invalid_argument("need at least one occupied site");
    }
    spec.m = static_cast<int>(cells);
    spec.coords.reserve(spec.m);
    for (long long idx = 0; idx < cells; ++idx) {
        Coord c{0, 0, 0};
        long long rest = idx;
        for (int a = 0; a < spec.d; ++a) {
            c[a] = static_cast<int>(rest % dims[a]);
            rest /= dims[a];
        }
        spec.coords.push_back(c);
    }
    spec.occupied = std::move(occupied_sites);
    finalize(spec);
    set_custom_density(spec);
    return spec;
}

double min_spacing(const LatticeSpec &spec) {
    return spec.L;
}

double site_distance(const LatticeSpec &spec, int i, int j) {
    spec.check_index(i);
    spec.check_index(j);
    return coord_distance(spec.coords[i], spec.coords[j]);
}

Configuration initial_configuration(const LatticeSpec &spec) {
    return Configuration::from_sites(spec.m, spec.occupied);
}

std::vector<int> serpentine_path(const LatticeSpec &spec) {
    std::vector<int> order(spec.m);
    for (int i = 0; i < spec.m; ++i) {
        order[i] = i;
    }
    // Boustrophedon key: reverse axis k whenever the sum of the higher axes is odd.
    auto key = [&](int i) {
        Coord c = spec.coords[i];
        Coord k{0, 0, 0};
        int parity = 0;
        for (int a = spec.d - 1; a >= 0; --a) {
            k[spec.d - 1 - a] = (parity % 2) ? spec.side - 1 - c[a] : c[a];
            parity += k[spec.d - 1 - a];
        }
        return k;
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
    for (int p = 0; p + 1 < spec.m; ++p) {
        if (!spec.adjacent(order[p], order[p + 1])) {
            throw std::invalid_argument("lattice sites do not form a serpentine nearest-neighbour path");
        }
    }
    return order;
}

void write_lattice(std::ostream &out, const LatticeSpec &spec) {
    char buf[64];
    out << "d " << spec.d << "\n";
    out << "n " << spec.n << "\n";
    std::snprintf(buf, sizeof(buf), "%.17g", spec.beta);
    out << "beta " << buf << "\n";
    std::snprintf(buf, sizeof(buf), "%.17g", spec.c1);
    out << "c1 " << buf << "\n";
    out << "m " << spec.m << "\n";
    out << "side " << spec.side << "\n";
    auto put = [&](const char *tag, const Coord &c) {
        out << tag;
        for (int a = 0; a < spec.d; ++a) {
            out << ' ' << c[a];
        }
        out << "\n";
    };
    for (const Coord &c : spec.coords) {
        put("site", c);
    }
    for (const Coord &c : spec.ancilla_coords) {
        put("ancilla", c);
    }
    for (int s : spec.occupied) {
        out << "occupied " << s << "\n";
    }
}

LatticeSpec read_lattice(std::istream &in) {
    LatticeSpec spec;
    bool have_d = false;
    int declared_n = -1;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        auto fail = [&]() { throw std::invalid_argument("bad lattice line: '" + line + "'"); };
        if (key == "d") {
            ls >> spec.d;
            have_d = true;
            if (spec.d < 1 || spec.d > 3) {
                fail();
            }
        } else if (key == "n") {
            ls >> declared_n;
        } else if (key == "beta") {
            ls >> spec.beta;
        } else if (key == "c1") {
            ls >> spec.c1;
        } else if (key == "m") {
            ls >> spec.m;
        } else if (key == "side") {
            ls >> spec.side;
        } else if (key == "site" || key == "ancilla") {
            if (!have_d) {
                fail();
            }
            Coord c{0, 0, 0};
            for (int a = 0; a < spec.d; ++a) {
                ls >> c[a];
            }
            (key == "site" ? spec.coords : spec.ancilla_coords).push_back(c);
        } else if (key == "occupied") {
            int s = -1;
            ls >> s;
            spec.occupied.push_back(s);
        } else {
            fail();
        }
        if (ls.fail()) {
            fail();
        }
    }
    if (static_cast<int>(spec.coords.size()) != spec.m || declared_n != static_cast<int>(spec.occupied.size())) {
        throw std::invalid_argument("lattice file counts do not match its header");
    }
    finalize(spec);
    return spec;
}

}  // namespace bosonlab
