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

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ks8/exact_linalg.hpp"
#include "ks8/gf2.hpp"

namespace ks8 {

/// Projectors plus the contexts (resolutions of identity) they appear in.
///
/// Projectors are deduplicated by their exact projection matrix; contexts
/// are stored as sorted projector-index lists.
class ContextHypergraph {
   public:
    ContextHypergraph() = default;

    /// Builds from explicit contexts. Projectors are numbered in order of first
    /// appearance. Throws std::invalid_argument if a context is not a
    /// resolution of identity or dimensions differ.
    static ContextHypergraph from_contexts(const std::vector<Context> &contexts);

    /// Rank-1 hypergraph over a vertex list, each context given as vertex
    /// indices. Only vertices used by some context become projectors, kept in
    /// vertex order.
    static ContextHypergraph from_vertex_sets(std::span<const ExactVector> vertices,
                                              const std::vector<std::vector<std::size_t>> &contexts);

    /// Builds from explicit projector and context lists (the exchange format);
    /// validates exactly like from_contexts and rejects duplicate projectors.
    static ContextHypergraph from_parts(std::vector<Projector> projectors,
                                        std::vector<std::vector<std::size_t>> contexts);

    /// Like from_parts, but a context only has to consist of pairwise
    /// orthogonal projectors; it need not sum to the identity. Used for
    /// state-specific proofs, whose contexts span a subspace containing the
    /// known state.
    static ContextHypergraph from_orthogonal_sets(std::vector<Projector> projectors,
                                                  std::vector<std::vector<std::size_t>> contexts);

    std::size_t dimension() const { return dimension_; }
    const std::vector<Projector> &projectors() const { return projectors_; }
    const std::vector<std::vector<std::size_t>> &contexts() const { return contexts_; }
    std::size_t num_projectors() const { return projectors_.size(); }
    std::size_t num_contexts() const { return contexts_.size(); }

    Context context(std::size_t k) const;

    /// Index of the projector with the same projection matrix, if present.
    std::optional<std::size_t> find(const Projector &p) const;

    /// The sub-hypergraph on the chosen contexts (projectors renumbered, only
    /// those used are kept, relative order preserved).
    ContextHypergraph restrict_to(std::span<const std::size_t> context_indices) const;

    /// Projector-by-context incidence matrix over GF(2).
    gf2::Matrix incidence() const;

   private:
    static ContextHypergraph build(std::vector<Projector> projectors, std::vector<std::vector<std::size_t>> contexts,
                                   bool complete);

    std::size_t dimension_ = 0;
    std::vector<Projector> projectors_;
    std::vector<std::vector<std::size_t>> contexts_;
};

/// Value in {0, 1} per projector.
struct Assignment {
    std::vector<std::uint8_t> values;

    /// Exactly one projector with value 1 in every context.
    bool satisfies(const ContextHypergraph &h) const;
};

struct ParityCertificate {
    std::vector<std::size_t> context_indices;  ///< sorted
    std::map<std::size_t, std::size_t> multiplicity;

    static ParityCertificate from_contexts(const ContextHypergraph &h, std::vector<std::size_t> context_indices);

    friend auto operator<=>(const ParityCertificate &a, const ParityCertificate &b) {
        if (a.context_indices.size() != b.context_indices.size()) {
            return a.context_indices.size() <=> b.context_indices.size();
        }
        return a.context_indices <=> b.context_indices;
    }
    friend bool operator==(const ParityCertificate &a, const ParityCertificate &b) {
        return a.context_indices == b.context_indices;
    }
};

/// True iff the certificate names an odd number of distinct in-range
/// contexts and every projector occurs an even number of times across them.
/// Multiplicities are recomputed from `h`; a stored multiplicity map that
/// disagrees makes the certificate invalid.
bool is_valid_certificate(const ContextHypergraph &h, const ParityCertificate &cert);

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t propagations = 0;
};

/// Exhaustive backtracking for a noncontextual assignment. Branches on the
/// lowest unassigned projector, value 1 first; after each decision, unit
/// propagation runs to a fixpoint (a 1 zeroes every projector sharing a
/// context with it; a context with one open member and the rest 0 forces
/// that member to 1). Projectors outside every context get 0.
std::optional<Assignment> search_assignment(const ContextHypergraph &h, SearchStats *stats = nullptr);

/// Every odd-size context subset of at most `max_contexts` contexts in which
/// all multiplicities are even, ordered by size then indices. Enumerates the
/// GF(2) kernel of the incidence matrix, so the cost is 2^(kernel dimension);
/// throws std::length_error above 26.
std::vector<ParityCertificate> find_parity_certificates(const ContextHypergraph &h, std::size_t max_contexts);

/// Lines of mutually orthogonal rays; each adjacent pair on a line spans a plane.
struct PlaneSpec {
    std::vector<std::vector<ExactVector>> lines;

    std::size_t num_planes() const;
    std::size_t num_vectors() const;

    /// One line per text line, rays in compact form separated by whitespace;
    /// '#' comments.
    static PlaneSpec parse(std::istream &in);
    void write(std::ostream &out) const;
};

class MalformedPlaneSpec : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Replaces rank-1 projectors by rank-2 planes. In every context, the rays
/// of each spec line that are present must pair off exactly into adjacent
/// pairs of that line; each pair becomes one rank-2 projector. Projectors
/// still in use keep their relative order, followed by the planes in spec
/// order. Throws MalformedPlaneSpec if a line has a non-orthogonal pair, a
/// ray sits on two lines, or some context holds a spec ray without its
/// adjacent partner.
ContextHypergraph merge_to_planes(const ContextHypergraph &h, const PlaneSpec &spec);

/// Exchange format:
///   dimension <d>
///   projectors <m>
///   rank <r>          (then r vector lines), repeated m times
///   contexts <k>
///   <projector indices>, one context per line
void write_hypergraph(std::ostream &out, const ContextHypergraph &h);
ContextHypergraph read_hypergraph(std::istream &in);

}  // namespace ks8
