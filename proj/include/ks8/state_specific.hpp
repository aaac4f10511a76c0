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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ks8/exact_linalg.hpp"
#include "ks8/ks_engine.hpp"

namespace ks8 {

/// The rays of one context that are neither the state nor orthogonal to it,
/// with the coefficients of 2 * state in their basis.
struct StateContext {
    std::vector<ExactVector> vectors;  ///< canonical order
    std::vector<int> signs;            ///< inner(v, state) / 2, aligned with `vectors`
    std::size_t source = 0;            ///< index of the originating context
};

struct StateSpecificProof {
    ExactVector state;
    std::vector<StateContext> contexts;

    /// Every distinct ray used, in canonical order.
    std::vector<ExactVector> distinct_vectors() const;

    /// Rank-1 hypergraph over distinct_vectors(), one partial context per
    /// StateContext.
    ContextHypergraph hypergraph() const;
};

/// Drops, from every rank-1 context, the state itself and all rays
/// orthogonal to it, then discards contexts left empty.
///
/// Throws std::invalid_argument if a context has a member of rank > 1 or the
/// state is not among the contexts' rays; std::domain_error if a coefficient
/// inner(v, state) / 2 is not +-1 or a retained context's expansion does not
/// reproduce 2 * state.
StateSpecificProof reduce_by_state(const std::vector<Context> &contexts, const ExactVector &state);

enum class ProofCheck {
    ok,
    malformed,
    non_orthogonal_pair,
    parallel_to_state,
    orthogonal_to_state,
    sign_mismatch,
    expansion_fails,
    assignment_exists,
    even_context_count,
    odd_multiplicity,
};

std::string_view to_string(ProofCheck c);

struct ProofVerdict {
    ProofCheck check = ProofCheck::ok;
    std::string detail;

    bool ok() const { return check == ProofCheck::ok; }
};

/// Checks orthogonality and the exact expansion of every context, then
/// searches for a noncontextual assignment, then the parity structure (odd
/// number of contexts, every ray an even number of times). The first failure
/// is reported.
ProofVerdict verify_proof(const StateSpecificProof &p);

/// Reduces each candidate certificate that contains `state` and returns the
/// first reduction with the fewest contexts, or nullopt if no candidate
/// contains it.
std::optional<StateSpecificProof> smallest_reduction(const std::vector<std::vector<Context>> &candidates,
                                                     const ExactVector &state);

/// Text format:
///   state <components>
///   vectors <n>
///   <n vector lines>
///   contexts <k>
///   one line per context: signed indices into the vector list, e.g. "+0 +3 -5 -7"
void write_proof(std::ostream &out, const StateSpecificProof &p);
StateSpecificProof read_proof(std::istream &in);

}  // namespace ks8
