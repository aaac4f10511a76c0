// Copyright 2026 The ks8 Authors
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

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ks8/exact_linalg.hpp"
#include "ks8/gf2.hpp"
#include "ks8/ks_engine.hpp"
#include "ks8/mermin.hpp"

namespace ks8 {

using VertexSet = std::vector<std::size_t>;

/// The vectors of the defining bases, each tagged with the first basis that
/// contains it.
struct VectorSystem {
    std::vector<ExactVector> vertices;
    std::vector<std::size_t> basis_of;
    std::vector<VertexSet> defining;  ///< vertex indices of each defining basis, sorted

    static VectorSystem from_bases(const std::vector<DefiningBasis> &bases);
    std::size_t index_of(const ExactVector &v) const;  ///< throws std::out_of_range
    std::optional<std::size_t> find(const ExactVector &v) const;
};

class OrthogonalityGraph {
   public:
    /// Throws std::invalid_argument on duplicate rays or mixed dimensions.
    explicit OrthogonalityGraph(std::vector<ExactVector> vertices);

    std::size_t size() const { return vertices_.size(); }
    std::size_t dimension() const { return vertices_.empty() ? 0 : vertices_.front().dimension(); }
    const std::vector<ExactVector> &vertices() const { return vertices_; }
    bool adjacent(std::size_t i, std::size_t j) const { return neighbors_[i][j]; }
    const gf2::BitVector &neighbors(std::size_t i) const { return neighbors_[i]; }
    std::size_t degree(std::size_t i) const { return neighbors_[i].count(); }

   private:
    std::vector<ExactVector> vertices_;
    std::vector<gf2::BitVector> neighbors_;
};

OrthogonalityGraph build_graph(std::vector<ExactVector> vertices);

/// All orthogonal bases among the graph's vertices, as sorted vertex sets in
/// lexicographic order.
struct OctadCatalog {
    std::vector<VertexSet> octads;
    std::vector<std::vector<std::size_t>> membership;  ///< per vertex, catalog indices containing it

    std::optional<std::size_t> index_of(const VertexSet &octad) const;
};

/// Every clique of size d (the dimension) in the orthogonality graph.
/// Bitset backtracking over ascending vertex indices.
OctadCatalog enumerate_octads(const OrthogonalityGraph &g);

struct SymmetryStatistics {
    std::size_t vertices = 0;
    std::map<std::size_t, std::size_t> degree_histogram;
    /// Key like "7+4+4+4+4": neighbours in the vertex's own basis, then in
    /// each other basis, descending.
    std::map<std::string, std::size_t> decomposition_histogram;
    std::map<std::size_t, std::size_t> non_orthogonal_histogram;  ///< per vertex, other vertices not orthogonal
    std::map<std::int64_t, std::size_t> non_orthogonal_inner_abs;  ///< |inner| over ordered non-orthogonal pairs
    std::size_t orthogonal_pairs = 0;
    std::size_t half_angle_pairs = 0;
    std::size_t other_angle_pairs = 0;
    std::size_t octads = 0;
    std::map<std::size_t, std::size_t> membership_histogram;
    std::size_t incidences = 0;
};

SymmetryStatistics compute_statistics(const VectorSystem &system, const OrthogonalityGraph &g,
                                      const OctadCatalog &catalog);

struct QuadrupleSelection {
    std::array<std::size_t, 4> excluded;
    std::vector<std::size_t> retained_octads;  ///< catalog indices, ascending
};

/// Tally of all 4-subsets of vertices by which of the four properties hold.
struct QuadrupleCensus {
    enum Flag : unsigned {
        mutually_orthogonal = 1,
        distinct_bases = 2,
        retained_target = 4,   ///< exactly `target` catalog octads avoid all four
        valid_certificate = 8  ///< those octads form a parity certificate
    };

    std::size_t target = 11;
    std::array<std::uint64_t, 16> by_flags{};  ///< index = flag bitmask

    std::uint64_t total() const;
    /// Subsets for which every flag in `required` holds.
    std::uint64_t count(unsigned required) const;
};

struct QuadrupleEnumeration {
    std::vector<QuadrupleSelection> selections;  ///< all four properties hold
    QuadrupleCensus census;
};

/// Brute force over every 4-subset of vertices. Selections satisfy the full
/// conjunction; the census reports every sub-conjunction.
QuadrupleEnumeration enumerate_quadruples(const VectorSystem &system, const OrthogonalityGraph &g,
                                          const OctadCatalog &catalog, std::size_t target = 11);

/// Octads of the catalog that avoid every vertex in `excluded`.
std::vector<std::size_t> retained_octads(const OctadCatalog &catalog, const VertexSet &excluded);

/// Serialization:
///   vertices <n>
///   <n vector lines>
///   octads <k>
///   <sorted vertex indices>, one octad per line
void write_catalog(std::ostream &out, const OrthogonalityGraph &g, const OctadCatalog &catalog);

struct CatalogFile {
    std::vector<ExactVector> vertices;
    std::vector<VertexSet> octads;
};
CatalogFile read_catalog(std::istream &in);

}  // namespace ks8
