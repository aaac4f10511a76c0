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

#include "ks8/context_enumerator.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ks8 {

VectorSystem VectorSystem::from_bases(const std::vector<DefiningBasis> &bases) {
    VectorSystem s;
    for (std::size_t b = 0; b < bases.size(); ++b) {
        VertexSet members;
        for (const auto &lv : bases[b].basis) {
            auto existing = s.find(lv.vector);
            if (existing) {
                members.push_back(*existing);
            } else {
                members.push_back(s.vertices.size());
                s.vertices.push_back(lv.vector);
                s.basis_of.push_back(b);
            }
        }
        std::sort(members.begin(), members.end());
        s.defining.push_back(std::move(members));
    }
    return s;
}

std::optional<std::size_t> VectorSystem::find(const ExactVector &v) const {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    if (it == vertices.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - vertices.begin());
}

std::size_t VectorSystem::index_of(const ExactVector &v) const {
    auto k = find(v);
    if (!k) {
        throw std::out_of_range("vector " + v.to_compact() + " is not in the vector system");
    }
    return *k;
}

OrthogonalityGraph::OrthogonalityGraph(std::vector<ExactVector> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    std::set<ExactVector> seen;
    for (const auto &v : vertices_) {
        if (v.dimension() != vertices_.front().dimension()) {
            throw std::invalid_argument("build_graph: vectors of different dimensions");
        }
        if (!seen.insert(v).second) {
            throw std::invalid_argument("build_graph: duplicate ray " + v.to_compact());
        }
    }
    neighbors_.assign(n, gf2::BitVector(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (inner(vertices_[i], vertices_[j]) == 0) {
                neighbors_[i][j] = true;
                neighbors_[j][i] = true;
            }
        }
    }
}

OrthogonalityGraph build_graph(std::vector<ExactVector> vertices) {
    return OrthogonalityGraph(std::move(vertices));
}

std::optional<std::size_t> OctadCatalog::index_of(const VertexSet &octad) const {
    auto sorted = octad;
    std::sort(sorted.begin(), sorted.end());
    auto it = std::lower_bound(octads.begin(), octads.end(), sorted);
    if (it == octads.end() || *it != sorted) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - octads.begin());
}

OctadCatalog enumerate_octads(const OrthogonalityGraph &g) {
    OctadCatalog cat;
    const std::size_t n = g.size();
    const std::size_t d = g.dimension();
    cat.membership.resize(n);
    if (n == 0) {
        return cat;
    }
    VertexSet clique;
    // `candidates` holds vertices above the last chosen one that are
    // orthogonal to everything chosen so far.
    std::function<void(const gf2::BitVector &)> extend = [&](const gf2::BitVector &candidates) {
        if (clique.size() == d) {
            cat.octads.push_back(clique);
            return;
        }
        if (clique.size() + candidates.count() < d) {
            return;
        }
        for (auto v = candidates.find_first(); v != gf2::BitVector::npos; v = candidates.find_next(v)) {
            auto next = candidates & g.neighbors(v);
            // Drop vertices at or below v; the clique is built in ascending order.
            for (auto u = next.find_first(); u != gf2::BitVector::npos && u <= v; u = next.find_next(u)) {
                next[u] = false;
            }
            clique.push_back(v);
            extend(next);
            clique.pop_back();
        }
    };
    gf2::BitVector all(n);
    all.set();
    extend(all);
    for (std::size_t k = 0; k < cat.octads.size(); ++k) {
        for (auto v : cat.octads[k]) {
            cat.membership[v].push_back(k);
        }
    }
    return cat;
}

SymmetryStatistics compute_statistics(const VectorSystem &system, const OrthogonalityGraph &g,
                                      const OctadCatalog &catalog) {
    SymmetryStatistics st;
    const std::size_t n = g.size();
    const std::size_t nb = system.defining.size();
    st.vertices = n;
    for (std::size_t i = 0; i < n; ++i) {
        ++st.degree_histogram[g.degree(i)];
        std::vector<std::size_t> per_basis(nb, 0);
        std::size_t non_orth = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            if (g.adjacent(i, j)) {
                ++per_basis[system.basis_of[j]];
            } else {
                ++non_orth;
                auto ip = inner(g.vertices()[i], g.vertices()[j]);
                ++st.non_orthogonal_inner_abs[ip < 0 ? -ip : ip];
            }
        }
        ++st.non_orthogonal_histogram[non_orth];
        const auto own = per_basis[system.basis_of[i]];
        std::vector<std::size_t> others;
        for (std::size_t b = 0; b < nb; ++b) {
            if (b != system.basis_of[i]) {
                others.push_back(per_basis[b]);
            }
        }
        std::sort(others.rbegin(), others.rend());
        std::string key = std::to_string(own);
        for (auto o : others) {
            key += "+" + std::to_string(o);
        }
        ++st.decomposition_histogram[key];
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto &u = g.vertices()[i];
            const auto &v = g.vertices()[j];
            if (u.norm2() != 4 || v.norm2() != 4) {
                ++st.other_angle_pairs;
                continue;
            }
            switch (angle_class(u, v)) {
                case AngleClass::orthogonal:
                    ++st.orthogonal_pairs;
                    break;
                case AngleClass::acute_obtuse_half:
                    ++st.half_angle_pairs;
                    break;
                case AngleClass::other:
                    ++st.other_angle_pairs;
                    break;
            }
        }
    }
    st.octads = catalog.octads.size();
    for (const auto &m : catalog.membership) {
        ++st.membership_histogram[m.size()];
        st.incidences += m.size();
    }
    return st;
}

std::uint64_t QuadrupleCensus::total() const {
    return count(0);
}

std::uint64_t QuadrupleCensus::count(unsigned required) const {
    std::uint64_t c = 0;
    for (unsigned f = 0; f < by_flags.size(); ++f) {
        if ((f & required) == required) {
            c += by_flags[f];
        }
    }
    return c;
}

std::vector<std::size_t> retained_octads(const OctadCatalog &catalog, const VertexSet &excluded) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < catalog.octads.size(); ++k) {
        const auto &o = catalog.octads[k];
        bool hit = std::any_of(excluded.begin(), excluded.end(),
                               [&](std::size_t v) { return std::binary_search(o.begin(), o.end(), v); });
        if (!hit) {
            out.push_back(k);
        }
    }
    return out;
}

QuadrupleEnumeration enumerate_quadruples(const VectorSystem &system, const OrthogonalityGraph &g,
                                          const OctadCatalog &catalog, std::size_t target) {
    QuadrupleEnumeration result;
    result.census.target = target;
    const std::size_t n = g.size();
    if (n < 4) {
        return result;
    }
    auto hypergraph = ContextHypergraph::from_vertex_sets(g.vertices(), catalog.octads);

    std::vector<gf2::BitVector> octad_bits;
    for (const auto &o : catalog.octads) {
        gf2::BitVector b(n);
        for (auto v : o) {
            b[v] = true;
        }
        octad_bits.push_back(std::move(b));
    }

    gf2::BitVector excluded(n);
    std::vector<std::size_t> retained;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                for (std::size_t e = c + 1; e < n; ++e) {
                    const std::array<std::size_t, 4> q{a, b, c, e};
                    unsigned flags = 0;
                    if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(a, e) && g.adjacent(b, c) &&
                        g.adjacent(b, e) && g.adjacent(c, e)) {
                        flags |= QuadrupleCensus::mutually_orthogonal;
                    }
                    std::set<std::size_t> bases{system.basis_of[a], system.basis_of[b], system.basis_of[c],
                                                system.basis_of[e]};
                    if (bases.size() == 4) {
                        flags |= QuadrupleCensus::distinct_bases;
                    }
                    excluded.reset();
                    for (auto v : q) {
                        excluded[v] = true;
                    }
                    retained.clear();
                    for (std::size_t k = 0; k < octad_bits.size(); ++k) {
                        if (!octad_bits[k].intersects(excluded)) {
                            retained.push_back(k);
                        }
                    }
                    if (retained.size() == target) {
                        flags |= QuadrupleCensus::retained_target;
                    }
                    if (retained.size() % 2 == 1 &&
                        is_valid_certificate(hypergraph, ParityCertificate{retained, {}})) {
                        flags |= QuadrupleCensus::valid_certificate;
                    }
                    ++result.census.by_flags[flags];
                    if (flags == 15u) {
                        result.selections.push_back({q, retained});
                    }
                }
            }
        }
    }
    return result;
}

void write_catalog(std::ostream &out, const OrthogonalityGraph &g, const OctadCatalog &catalog) {
    out << "vertices " << g.size() << '\n';
    write_vectors(out, g.vertices());
    out << "octads " << catalog.octads.size() << '\n';
    for (const auto &o : catalog.octads) {
        for (std::size_t k = 0; k < o.size(); ++k) {
            out << (k ? " " : "") << o[k];
        }
        out << '\n';
    }
}

CatalogFile read_catalog(std::istream &in) {
    CatalogFile file;
    std::string line;
    auto next = [&]() -> std::string {
        while (std::getline(in, line)) {
            auto first = line.find_first_not_of(" \t\r");
            if (first != std::string::npos && line[first] != '#') {
                return line;
            }
        }
        throw std::invalid_argument("catalog: unexpected end of input");
    };
    auto keyword = [&](const std::string &expected) {
        std::istringstream s(next());
        std::string kw;
        std::size_t n;
        if (!(s >> kw >> n) || kw != expected) {
            throw std::invalid_argument("catalog: expected '" + expected + " <count>'");
        }
        return n;
    };
    const auto nv = keyword("vertices");
    for (std::size_t k = 0; k < nv; ++k) {
        file.vertices.push_back(ExactVector::from_line(next()));
    }
    const auto no = keyword("octads");
    for (std::size_t k = 0; k < no; ++k) {
        std::istringstream s(next());
        VertexSet o;
        std::size_t v;
        while (s >> v) {
            if (v >= nv) {
                throw std::invalid_argument("catalog: vertex index out of range");
            }
            o.push_back(v);
        }
        file.octads.push_back(std::move(o));
    }
    return file;
}

}  // namespace ks8
