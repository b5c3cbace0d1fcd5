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

#ifndef BOSONLAB_LATTICE_H
#define BOSONLAB_LATTICE_H

#include <array>
#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bosonlab {

/// Integer lattice position. Axes at or beyond the lattice dimension are zero.
using Coord = std::array<int, 3>;

/// Geometry of a d-dimensional square lattice with m ordinary sites, optional
/// ancilla cells, and the set of initially occupied sites.
///
/// Ordinary sites are indexed 0..m-1 in row-major coordinate order (axis 0
/// fastest). Ancilla cells are not site indices; they only shape adjacency.
struct LatticeSpec {
    int d = 1;
    int n = 0;
    double beta = 1.0;
    double c1 = 1.0;
    int m = 0;
    int side = 0;
    std::vector<Coord> coords;
    std::vector<Coord> ancilla_coords;
    /// Indices of the initially occupied ordinary sites, increasing.
    std::vector<int> occupied;
    /// Half the minimum distance between occupied sites (side / 2 when n == 1).
    double L = 0.0;

    /// Nearest-neighbour hopping graph on ordinary sites, sorted per site.
    std::vector<std::vector<int>> neighbors;

    bool adjacent(int i, int j) const;
    void check_index(int i) const;
};

/// Occupation-number vector over m modes.
struct Configuration {
    std::vector<int> occ;

    Configuration() = default;
    explicit Configuration(std::vector<int> occupations);

    int modes() const {
        return static_cast<int>(occ.size());
    }
    int particles() const;
    /// Occupied site of each boson in nondecreasing order, with multiplicity.
    std::vector<int> sites() const;
    /// Product of occ[i]! as an exact integer.
    unsigned long long factorial_product() const;

    /// Hyphen-joined occupations, e.g. "0-2-1".
    std::string to_string() const;
    static Configuration parse(std::string_view text);
    static Configuration from_sites(int m, std::span<const int> sites);

    auto operator<=>(const Configuration &) const = default;
    bool operator==(const Configuration &) const = default;
};

/// Sparse geometry: m = round(c1 n^beta) sites plus n ancillas in a
/// side^d box, bosons on a regular sublattice of spacing
/// floor(((m+n)/n)^(1/d)), one ancilla next to each boson.
LatticeSpec build_lattice(int n, double beta, double c1, int d);

/// Open chain of m sites with bosons on the given sites.
LatticeSpec make_chain(int m, std::vector<int> occupied_sites);

/// Full rectangular grid (row-major, axis 0 fastest) with bosons on the given site indices.
LatticeSpec make_grid(std::vector<int> dims, std::vector<int> occupied_sites);

/// Returns L.
double min_spacing(const LatticeSpec &spec);

/// Euclidean distance between ordinary sites i and j.
double site_distance(const LatticeSpec &spec, int i, int j);

/// One boson on each occupied site.
Configuration initial_configuration(const LatticeSpec &spec);

/// Site ordering along a path whose consecutive entries are adjacent.
/// Throws std::invalid_argument if the serpentine walk over the sites is not a path.
std::vector<int> serpentine_path(const LatticeSpec &spec);

void write_lattice(std::ostream &out, const LatticeSpec &spec);
LatticeSpec read_lattice(std::istream &in);

}  // namespace bosonlab

#endif  // BOSONLAB_LATTICE_H
