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

#include "ks8/state_specific.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ks8 {

namespace {

// sum_k signs[k] * vectors[k] == 2 * state
bool expansion_holds(const ExactVector &state, const StateContext &c) {
    const std::size_t d = state.dimension();
    std::vector<std::int64_t> sum(d, 0);
    for (std::size_t k = 0; k < c.vectors.size(); ++k) {
        if (c.vectors[k].dimension() != d) {
            return false;
        }
        for (std::size_t i = 0; i < d; ++i) {
            sum[i] += static_cast<std::int64_t>(c.signs[k]) * c.vectors[k][i];
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (sum[i] != 2 * static_cast<std::int64_t>(state[i])) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<ExactVector> StateSpecificProof::distinct_vectors() const {
    std::vector<ExactVector> out;
    for (const auto &c : contexts) {
        out.insert(out.end(), c.vectors.begin(), c.vectors.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ContextHypergraph StateSpecificProof::hypergraph() const {
    auto vecs = distinct_vectors();
    std::vector<Projector> projectors;
    for (const auto &v : vecs) {
        projectors.emplace_back(std::vector<ExactVector>{v});
    }
    std::vector<std::vector<std::size_t>> ctx;
    for (const auto &c : contexts) {
        std::vector<std::size_t> members;
        for (const auto &v : c.vectors) {
            members.push_back(
                static_cast<std::size_t>(std::lower_bound(vecs.begin(), vecs.end(), v) - vecs.begin()));
        }
        ctx.push_back(std::move(members));
    }
    return ContextHypergraph::from_orthogonal_sets(std::move(projectors), std::move(ctx));
}

StateSpecificProof reduce_by_state(const std::vector<Context> &contexts, const ExactVector &state) {
    bool found = false;
    for (const auto &c : contexts) {
        for (const auto &p : c.members) {
            if (p.rank() != 1) {
                throw std::invalid_argument("reduce_by_state: contexts must consist of rank-1 projectors");
            }
            found = found || p.span().front() == state;
        }
    }
    if (!found) {
        throw std::invalid_argument("reduce_by_state: state " + state.to_compact() + " is not one of the rays");
    }

    StateSpecificProof proof{state, {}};
    for (std::size_t k = 0; k < contexts.size(); ++k) {
        std::vector<std::pair<ExactVector, int>> kept;
        for (const auto &p : contexts[k].members) {
            const auto &v = p.span().front();
            if (v == state) {
                continue;
            }
            const auto ip = inner(v, state);
            if (ip == 0) {
                continue;
            }
            if (ip != 2 && ip != -2) {
                throw std::domain_error("reduce_by_state: context " + std::to_string(k) + ": coefficient of " +
                                        v.to_compact() + " is " + std::to_string(ip) + "/2, not +-1");
            }
            kept.emplace_back(v, static_cast<int>(ip / 2));
        }
        if (kept.empty()) {
            continue;
        }
        std::sort(kept.begin(), kept.end());
        StateContext sc;
        sc.source = k;
        for (auto &[v, s] : kept) {
            sc.vectors.push_back(v);
            sc.signs.push_back(s);
        }
        if (!expansion_holds(state, sc)) {
            throw std::domain_error("reduce_by_state: context " + std::to_string(k) +
                                    " does not span a subspace containing the state");
        }
        proof.contexts.push_back(std::move(sc));
    }
    return proof;
}

std::string_view to_string(ProofCheck c) {
    switch (c) {
        case ProofCheck::ok:
            return "ok";
        case ProofCheck::malformed:
            return "malformed";
        case ProofCheck::non_orthogonal_pair:
            return "non_orthogonal_pair";
        case ProofCheck::parallel_to_state:
            return "parallel_to_state";
        case ProofCheck::orthogonal_to_state:
            return "orthogonal_to_state";
        case ProofCheck::sign_mismatch:
            return "sign_mismatch";
        case ProofCheck::expansion_fails:
            return "expansion_fails";
        case ProofCheck::assignment_exists:
            return "assignment_exists";
        case ProofCheck::even_context_count:
            return "even_context_count";
        case ProofCheck::odd_multiplicity:
            return "odd_multiplicity";
    }
    return "?";
}

ProofVerdict verify_proof(const StateSpecificProof &p) {
    const auto d = p.state.dimension();
    if (p.contexts.empty()) {
        return {ProofCheck::malformed, "no contexts"};
    }
    for (std::size_t k = 0; k < p.contexts.size(); ++k) {
        const auto &c = p.contexts[k];
        const auto where = "context " + std::to_string(k) + ": ";
        if (c.vectors.empty() || c.vectors.size() != c.signs.size()) {
            return {ProofCheck::malformed, where + "vector and sign counts differ"};
        }
        for (std::size_t i = 0; i < c.vectors.size(); ++i) {
            const auto &v = c.vectors[i];
            if (v.dimension() != d) {
                return {ProofCheck::malformed, where + "dimension mismatch"};
            }
            if (v == p.state) {
                return {ProofCheck::parallel_to_state, where + v.to_compact()};
            }
            const auto ip = inner(v, p.state);
            if (ip == 0) {
                return {ProofCheck::orthogonal_to_state, where + v.to_compact()};
            }
            if (c.signs[i] != 1 && c.signs[i] != -1) {
                return {ProofCheck::sign_mismatch, where + "coefficient " + std::to_string(c.signs[i])};
            }
            if (2 * c.signs[i] != ip) {
                return {ProofCheck::sign_mismatch, where + v.to_compact() + " has inner " + std::to_string(ip) +
                                                       " with the state but sign " + std::to_string(c.signs[i])};
            }
            for (std::size_t j = i + 1; j < c.vectors.size(); ++j) {
                if (inner(v, c.vectors[j]) != 0) {
                    return {ProofCheck::non_orthogonal_pair, where + v.to_compact() + ", " + c.vectors[j].to_compact()};
                }
            }
        }
        if (!expansion_holds(p.state, c)) {
            return {ProofCheck::expansion_fails, where + "signed sum differs from 2 * state"};
        }
    }

    if (auto a = search_assignment(p.hypergraph())) {
        return {ProofCheck::assignment_exists, "a noncontextual assignment satisfies every context"};
    }
    if (p.contexts.size() % 2 == 0) {
        return {ProofCheck::even_context_count, std::to_string(p.contexts.size()) + " contexts"};
    }
    std::map<ExactVector, std::size_t> mult;
    for (const auto &c : p.contexts) {
        for (const auto &v : c.vectors) {
            ++mult[v];
        }
    }
    for (const auto &[v, m] : mult) {
        if (m % 2 != 0) {
            return {ProofCheck::odd_multiplicity, v.to_compact() + " appears " + std::to_string(m) + " times"};
        }
    }
    return {};
}

std::optional<StateSpecificProof> smallest_reduction(const std::vector<std::vector<Context>> &candidates,
                                                     const ExactVector &state) {
    std::optional<StateSpecificProof> best;
    for (const auto &cert : candidates) {
        const bool contains = std::any_of(cert.begin(), cert.end(), [&](const Context &c) {
            return std::any_of(c.members.begin(), c.members.end(),
                               [&](const Projector &p) { return p.rank() == 1 && p.span().front() == state; });
        });
        if (!contains) {
            continue;
        }
        auto proof = reduce_by_state(cert, state);
        if (!best || proof.contexts.size() < best->contexts.size()) {
            best = std::move(proof);
        }
    }
    return best;
}

void write_proof(std::ostream &out, const StateSpecificProof &p) {
    const auto vecs = p.distinct_vectors();
    out << "state " << p.state.to_line() << '\n';
    out << "vectors " << vecs.size() << '\n';
    write_vectors(out, vecs);
    out << "contexts " << p.contexts.size() << '\n';
    for (const auto &c : p.contexts) {
        for (std::size_t k = 0; k < c.vectors.size(); ++k) {
            const auto idx = std::lower_bound(vecs.begin(), vecs.end(), c.vectors[k]) - vecs.begin();
            out << (k ? " " : "") << (c.signs[k] < 0 ? '-' : '+') << idx;
        }
        out << '\n';
    }
}

StateSpecificProof read_proof(std::istream &in) {
    std::string line;
    auto next = [&]() -> std::string {
        while (std::getline(in, line)) {
            auto first = line.find_first_not_of(" \t\r");
            if (first != std::string::npos && line[first] != '#') {
                return line;
            }
        }
        throw std::invalid_argument("proof: unexpected end of input");
    };
    auto keyword_rest = [&](const std::string &expected) {
        auto l = next();
        std::istringstream s(l);
        std::string kw;
        s >> kw;
        if (kw != expected) {
            throw std::invalid_argument("proof: expected '" + expected + "', got '" + l + "'");
        }
        std::string rest;
        std::getline(s, rest);
        return rest;
    };
    auto count = [](const std::string &text) {
        std::size_t n = 0;
        if (!(std::istringstream(text) >> n)) {
            throw std::invalid_argument("proof: expected a count");
        }
        return n;
    };

    auto state = ExactVector::from_line(keyword_rest("state"));
    const auto nv = count(keyword_rest("vectors"));
    std::vector<ExactVector> vecs;
    for (std::size_t k = 0; k < nv; ++k) {
        vecs.push_back(ExactVector::from_line(next()));
    }
    const auto nc = count(keyword_rest("contexts"));
    StateSpecificProof p{state, {}};
    for (std::size_t k = 0; k < nc; ++k) {
        std::istringstream s(next());
        std::string tok;
        StateContext c;
        c.source = k;
        while (s >> tok) {
            if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-')) {
                throw std::invalid_argument("proof: bad signed index '" + tok + "'");
            }
            const auto idx = static_cast<std::size_t>(std::stoul(tok.substr(1)));
            if (idx >= vecs.size()) {
                throw std::invalid_argument("proof: vector index out of range");
            }
            c.vectors.push_back(vecs[idx]);
            c.signs.push_back(tok[0] == '-' ? -1 : 1);
        }
        p.contexts.push_back(std::move(c));
    }
    return p;
}

}  // namespace ks8
