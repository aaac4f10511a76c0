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

#include "ks8/ks_engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace ks8 {

namespace {

void check_context(std::size_t k, const Context &c, std::size_t dim, bool complete) {
    for (const auto &p : c.members) {
        if (p.dimension() != dim) {
            throw std::invalid_argument("context " + std::to_string(k) + ": dimension mismatch");
        }
    }
    if (complete) {
        if (!is_resolution_of_identity(c)) {
            throw std::invalid_argument("context " + std::to_string(k) + " is not a resolution of identity");
        }
        return;
    }
    for (std::size_t i = 0; i < c.members.size(); ++i) {
        for (std::size_t j = i + 1; j < c.members.size(); ++j) {
            if (!c.members[i].orthogonal_to(c.members[j])) {
                throw std::invalid_argument("context " + std::to_string(k) + " has non-orthogonal members");
            }
        }
    }
}

}  // namespace

ContextHypergraph ContextHypergraph::from_contexts(const std::vector<Context> &contexts) {
    std::vector<Projector> projectors;
    std::map<RationalMatrix, std::size_t> index;
    std::vector<std::vector<std::size_t>> ctx_indices;
    for (const auto &c : contexts) {
        std::vector<std::size_t> members;
        for (const auto &p : c.members) {
            auto [it, fresh] = index.emplace(p.matrix(), projectors.size());
            if (fresh) {
                projectors.push_back(p);
            }
            members.push_back(it->second);
        }
        ctx_indices.push_back(std::move(members));
    }
    return from_parts(std::move(projectors), std::move(ctx_indices));
}

ContextHypergraph ContextHypergraph::from_vertex_sets(std::span<const ExactVector> vertices,
                                                      const std::vector<std::vector<std::size_t>> &contexts) {
    std::vector<std::size_t> remap(vertices.size(), SIZE_MAX);
    for (const auto &c : contexts) {
        for (auto v : c) {
            if (v >= vertices.size()) {
                throw std::invalid_argument("from_vertex_sets: vertex index out of range");
            }
            remap[v] = 0;
        }
    }
    std::vector<Projector> projectors;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (remap[v] == 0) {
            remap[v] = projectors.size();
            projectors.emplace_back(std::vector<ExactVector>{vertices[v]});
        }
    }
    std::vector<std::vector<std::size_t>> ctx_indices;
    for (const auto &c : contexts) {
        std::vector<std::size_t> members;
        for (auto v : c) {
            members.push_back(remap[v]);
        }
        ctx_indices.push_back(std::move(members));
    }
    return from_parts(std::move(projectors), std::move(ctx_indices));
}

ContextHypergraph ContextHypergraph::from_parts(std::vector<Projector> projectors,
                                                std::vector<std::vector<std::size_t>> contexts) {
    return build(std::move(projectors), std::move(contexts), true);
}

ContextHypergraph ContextHypergraph::from_orthogonal_sets(std::vector<Projector> projectors,
                                                          std::vector<std::vector<std::size_t>> contexts) {
    return build(std::move(projectors), std::move(contexts), false);
}

ContextHypergraph ContextHypergraph::build(std::vector<Projector> projectors,
                                           std::vector<std::vector<std::size_t>> contexts, bool complete) {
    ContextHypergraph h;
    h.dimension_ = projectors.empty() ? 0 : projectors.front().dimension();
    for (std::size_t k = 0; k < contexts.size(); ++k) {
        auto &c = contexts[k];
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
            throw std::invalid_argument("context " + std::to_string(k) + " repeats a projector");
        }
        Context ctx;
        for (auto p : c) {
            if (p >= projectors.size()) {
                throw std::invalid_argument("context " + std::to_string(k) + ": projector index out of range");
            }
            ctx.members.push_back(projectors[p]);
        }
        check_context(k, ctx, h.dimension_, complete);
    }
    std::map<RationalMatrix, std::size_t> seen;
    for (std::size_t p = 0; p < projectors.size(); ++p) {
        if (projectors[p].dimension() != h.dimension_) {
            throw std::invalid_argument("projector " + std::to_string(p) + ": dimension mismatch");
        }
        if (!seen.emplace(projectors[p].matrix(), p).second) {
            throw std::invalid_argument("projector " + std::to_string(p) + " duplicates an earlier projector");
        }
    }
    h.projectors_ = std::move(projectors);
    h.contexts_ = std::move(contexts);
    return h;
}

Context ContextHypergraph::context(std::size_t k) const {
    Context c;
    for (auto p : contexts_.at(k)) {
        c.members.push_back(projectors_[p]);
    }
    return c;
}

std::optional<std::size_t> ContextHypergraph::find(const Projector &p) const {
    for (std::size_t k = 0; k < projectors_.size(); ++k) {
        if (projectors_[k] == p) {
            return k;
        }
    }
    return std::nullopt;
}

ContextHypergraph ContextHypergraph::restrict_to(std::span<const std::size_t> context_indices) const {
    std::vector<std::size_t> remap(projectors_.size(), SIZE_MAX);
    for (auto k : context_indices) {
        for (auto p : contexts_.at(k)) {
            remap[p] = 0;
        }
    }
    std::vector<Projector> projectors;
    for (std::size_t p = 0; p < projectors_.size(); ++p) {
        if (remap[p] == 0) {
            remap[p] = projectors.size();
            projectors.push_back(projectors_[p]);
        }
    }
    std::vector<std::vector<std::size_t>> contexts;
    for (auto k : context_indices) {
        std::vector<std::size_t> members;
        for (auto p : contexts_[k]) {
            members.push_back(remap[p]);
        }
        contexts.push_back(std::move(members));
    }
    ContextHypergraph h;
    h.dimension_ = dimension_;
    h.projectors_ = std::move(projectors);
    h.contexts_ = std::move(contexts);
    for (auto &c : h.contexts_) {
        std::sort(c.begin(), c.end());
    }
    return h;
}

gf2::Matrix ContextHypergraph::incidence() const {
    gf2::Matrix m(projectors_.size(), contexts_.size());
    for (std::size_t k = 0; k < contexts_.size(); ++k) {
        for (auto p : contexts_[k]) {
            m.flip(p, k);
        }
    }
    return m;
}

bool Assignment::satisfies(const ContextHypergraph &h) const {
    if (values.size() != h.num_projectors()) {
        return false;
    }
    for (const auto &c : h.contexts()) {
        std::size_t ones = 0;
        for (auto p : c) {
            ones += values[p] == 1;
        }
        if (ones != 1) {
            return false;
        }
    }
    return true;
}

ParityCertificate ParityCertificate::from_contexts(const ContextHypergraph &h,
                                                   std::vector<std::size_t> context_indices) {
    ParityCertificate cert;
    std::sort(context_indices.begin(), context_indices.end());
    for (auto k : context_indices) {
        for (auto p : h.contexts().at(k)) {
            ++cert.multiplicity[p];
        }
    }
    cert.context_indices = std::move(context_indices);
    return cert;
}

bool is_valid_certificate(const ContextHypergraph &h, const ParityCertificate &cert) {
    auto idx = cert.context_indices;
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
        return false;
    }
    if (idx.size() % 2 == 0) {
        return false;
    }
    std::map<std::size_t, std::size_t> mult;
    for (auto k : idx) {
        if (k >= h.num_contexts()) {
            return false;
        }
        for (auto p : h.contexts()[k]) {
            ++mult[p];
        }
    }
    if (!cert.multiplicity.empty() && cert.multiplicity != mult) {
        return false;
    }
    return std::all_of(mult.begin(), mult.end(), [](const auto &kv) { return kv.second % 2 == 0; });
}

namespace {

constexpr std::int8_t kOpen = -1;

class AssignmentSearch {
   public:
    AssignmentSearch(const ContextHypergraph &h, SearchStats &stats) : h_(h), stats_(stats) {}

    std::optional<Assignment> run() {
        std::vector<std::int8_t> values(h_.num_projectors(), 0);
        std::vector<bool> used(h_.num_projectors(), false);
        for (const auto &c : h_.contexts()) {
            for (auto p : c) {
                used[p] = true;
            }
        }
        for (std::size_t p = 0; p < values.size(); ++p) {
            if (used[p]) {
                values[p] = kOpen;
            }
        }
        if (!descend(values)) {
            return std::nullopt;
        }
        Assignment a;
        a.values.assign(values.begin(), values.end());
        return a;
    }

   private:
    bool propagate(std::vector<std::int8_t> &values) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto &c : h_.contexts()) {
                std::size_t ones = 0;
                std::size_t open = 0;
                std::size_t last_open = 0;
                for (auto p : c) {
                    if (values[p] == 1) {
                        ++ones;
                    } else if (values[p] == kOpen) {
                        ++open;
                        last_open = p;
                    }
                }
                if (ones > 1) {
                    return false;
                }
                if (ones == 1) {
                    for (auto p : c) {
                        if (values[p] == kOpen) {
                            values[p] = 0;
                            ++stats_.propagations;
                            changed = true;
                        }
                    }
                } else if (open == 0) {
                    return false;
                } else if (open == 1) {
                    values[last_open] = 1;
                    ++stats_.propagations;
                    changed = true;
                }
            }
        }
        return true;
    }

    bool descend(std::vector<std::int8_t> &values) {
        ++stats_.nodes;
        if (!propagate(values)) {
            return false;
        }
        auto it = std::find(values.begin(), values.end(), kOpen);
        if (it == values.end()) {
            return true;
        }
        const auto branch = static_cast<std::size_t>(it - values.begin());
        for (std::int8_t v : {1, 0}) {
            auto trial = values;
            trial[branch] = v;
            if (descend(trial)) {
                values = std::move(trial);
                return true;
            }
        }
        return false;
    }

    const ContextHypergraph &h_;
    SearchStats &stats_;
};

}  // namespace

std::optional<Assignment> search_assignment(const ContextHypergraph &h, SearchStats *stats) {
    SearchStats local;
    AssignmentSearch search(h, stats ? *stats : local);
    return search.run();
}

std::vector<ParityCertificate> find_parity_certificates(const ContextHypergraph &h, std::size_t max_contexts) {
    auto basis = gf2::kernel_basis(h.incidence());
    const std::size_t k = basis.size();
    if (k > 26) {
        throw std::length_error("find_parity_certificates: kernel dimension " + std::to_string(k) +
                                " is too large to enumerate");
    }
    std::vector<ParityCertificate> out;
    gf2::BitVector x(h.num_contexts());
    // Gray code: step i flips the basis vector at the lowest set bit of i.
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
        x ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        const auto weight = x.count();
        if (weight % 2 == 1 && weight <= max_contexts) {
            std::vector<std::size_t> idx;
            for (auto c = x.find_first(); c != gf2::BitVector::npos; c = x.find_next(c)) {
                idx.push_back(c);
            }
            out.push_back(ParityCertificate::from_contexts(h, std::move(idx)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t PlaneSpec::num_planes() const {
    std::size_t n = 0;
    for (const auto &l : lines) {
        n += l.size() > 1 ? l.size() - 1 : 0;
    }
    return n;
}

std::size_t PlaneSpec::num_vectors() const {
    std::size_t n = 0;
    for (const auto &l : lines) {
        n += l.size();
    }
    return n;
}

PlaneSpec PlaneSpec::parse(std::istream &in) {
    PlaneSpec spec;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream tokens(line);
        std::vector<ExactVector> rays;
        std::string tok;
        while (tokens >> tok) {
            rays.push_back(ExactVector::from_compact(tok));
        }
        spec.lines.push_back(std::move(rays));
    }
    return spec;
}

void PlaneSpec::write(std::ostream &out) const {
    for (const auto &l : lines) {
        for (std::size_t k = 0; k < l.size(); ++k) {
            out << (k ? " " : "") << l[k].to_compact();
        }
        out << '\n';
    }
}

ContextHypergraph merge_to_planes(const ContextHypergraph &h, const PlaneSpec &spec) {
    struct Slot {
        std::size_t line;
        std::size_t pos;
    };
    std::map<ExactVector, Slot> where;
    for (std::size_t l = 0; l < spec.lines.size(); ++l) {
        const auto &line = spec.lines[l];
        for (std::size_t i = 0; i < line.size(); ++i) {
            for (std::size_t j = i + 1; j < line.size(); ++j) {
                if (inner(line[i], line[j]) != 0) {
                    throw MalformedPlaneSpec("plane spec line " + std::to_string(l) + ": " + line[i].to_compact() +
                                             " and " + line[j].to_compact() + " are not orthogonal");
                }
            }
            if (!where.emplace(line[i], Slot{l, i}).second) {
                throw MalformedPlaneSpec("plane spec: " + line[i].to_compact() + " appears more than once");
            }
        }
    }
    if (where.empty()) {
        return h;
    }

    std::vector<Projector> planes;
    for (const auto &line : spec.lines) {
        for (std::size_t i = 0; i + 1 < line.size(); ++i) {
            planes.emplace_back(std::vector<ExactVector>{line[i], line[i + 1]});
        }
    }
    std::vector<std::size_t> plane_base(spec.lines.size(), 0);
    for (std::size_t l = 1; l < spec.lines.size(); ++l) {
        plane_base[l] = plane_base[l - 1] + (spec.lines[l - 1].size() > 1 ? spec.lines[l - 1].size() - 1 : 0);
    }

    // Index space: [0, m) original projectors, [m, m + planes) planes.
    const std::size_t m = h.num_projectors();
    std::vector<std::vector<std::size_t>> merged;
    for (std::size_t k = 0; k < h.num_contexts(); ++k) {
        std::vector<std::size_t> members;
        std::vector<std::vector<std::size_t>> present(spec.lines.size());
        for (auto p : h.contexts()[k]) {
            const auto &proj = h.projectors()[p];
            if (proj.rank() == 1) {
                if (auto it = where.find(proj.span().front()); it != where.end()) {
                    present[it->second.line].push_back(it->second.pos);
                    continue;
                }
            }
            members.push_back(p);
        }
        for (std::size_t l = 0; l < spec.lines.size(); ++l) {
            auto &pos = present[l];
            std::sort(pos.begin(), pos.end());
            for (std::size_t i = 0; i < pos.size(); i += 2) {
                if (i + 1 >= pos.size() || pos[i + 1] != pos[i] + 1) {
                    throw MalformedPlaneSpec("context " + std::to_string(k) + ": " +
                                             spec.lines[l][pos[i]].to_compact() +
                                             " has no adjacent partner on its plane spec line");
                }
                members.push_back(m + plane_base[l] + pos[i]);
            }
        }
        merged.push_back(std::move(members));
    }

    std::vector<std::size_t> remap(m + planes.size(), SIZE_MAX);
    for (const auto &c : merged) {
        for (auto p : c) {
            remap[p] = 0;
        }
    }
    std::vector<Projector> projectors;
    for (std::size_t p = 0; p < remap.size(); ++p) {
        if (remap[p] == 0) {
            remap[p] = projectors.size();
            projectors.push_back(p < m ? h.projectors()[p] : planes[p - m]);
        }
    }
    for (auto &c : merged) {
        for (auto &p : c) {
            p = remap[p];
        }
    }
    return ContextHypergraph::from_parts(std::move(projectors), std::move(merged));
}

void write_hypergraph(std::ostream &out, const ContextHypergraph &h) {
    out << "dimension " << h.dimension() << '\n';
    out << "projectors " << h.num_projectors() << '\n';
    for (const auto &p : h.projectors()) {
        out << "rank " << p.rank() << '\n';
        write_vectors(out, p.span());
    }
    out << "contexts " << h.num_contexts() << '\n';
    for (const auto &c : h.contexts()) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            out << (k ? " " : "") << c[k];
        }
        out << '\n';
    }
}

namespace {

class LineReader {
   public:
    explicit LineReader(std::istream &in) : in_(in) {}

    std::string next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++lineno_;
            auto first = line.find_first_not_of(" \t\r");
            if (first != std::string::npos && line[first] != '#') {
                return line;
            }
        }
        throw std::invalid_argument("hypergraph: unexpected end of input after line " + std::to_string(lineno_));
    }

    std::size_t keyword(const std::string &expected) {
        std::istringstream s(next());
        std::string kw;
        std::size_t n;
        if (!(s >> kw >> n) || kw != expected) {
            throw std::invalid_argument("hypergraph: line " + std::to_string(lineno_) + ": expected '" + expected +
                                        " <count>'");
        }
        return n;
    }

   private:
    std::istream &in_;
    std::size_t lineno_ = 0;
};

}  // namespace

ContextHypergraph read_hypergraph(std::istream &in) {
    LineReader reader(in);
    const auto dim = reader.keyword("dimension");
    const auto m = reader.keyword("projectors");
    std::vector<Projector> projectors;
    for (std::size_t p = 0; p < m; ++p) {
        const auto r = reader.keyword("rank");
        std::vector<ExactVector> span;
        for (std::size_t k = 0; k < r; ++k) {
            span.push_back(ExactVector::from_line(reader.next()));
            if (span.back().dimension() != dim) {
                throw std::invalid_argument("hypergraph: projector " + std::to_string(p) + " has wrong dimension");
            }
        }
        projectors.emplace_back(std::move(span));
    }
    const auto k = reader.keyword("contexts");
    std::vector<std::vector<std::size_t>> contexts;
    for (std::size_t c = 0; c < k; ++c) {
        std::istringstream s(reader.next());
        std::vector<std::size_t> members;
        std::size_t p;
        while (s >> p) {
            members.push_back(p);
        }
        contexts.push_back(std::move(members));
    }
    return ContextHypergraph::from_parts(std::move(projectors), std::move(contexts));
}

}  // namespace ks8
