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
#include <vector>

#include "ks8/exact_linalg.hpp"
#include "ks8/pauli.hpp"

namespace ks8 {

/// Z...Z with X substituted on every even-size subset of qubits, ordered by
/// ascending X mask (qubit 0 most significant). For three qubits this is
/// ZZZ, ZXX, XZX, XXZ.
std::vector<PauliWord> mermin_words(int num_qubits);

/// The single-qubit factors of `w`, one per qubit. An identity letter is
/// replaced by Z so the set stays complete.
OperatorSet factor_set(const PauliWord &w);

struct DefiningBasis {
    OperatorSet generators;
    std::vector<LabeledVector> basis;

    Context context() const;
    std::vector<ExactVector> vectors() const;
};

/// One product basis per Mermin word (from its factor set), followed by the
/// joint eigenbasis of all Mermin words. Throws std::invalid_argument for
/// fewer than two qubits.
std::vector<DefiningBasis> generate_defining_bases(int num_qubits);

/// The contexts of generate_defining_bases. For three qubits: five octads
/// over 40 distinct vectors.
std::vector<Context> generate_defining_octads(int num_qubits);

/// Distinct vectors across the bases, in order of first appearance.
std::vector<ExactVector> collect_vectors(const std::vector<DefiningBasis> &bases);

/// Outcome of assigning a fixed +-1 value to each single-qubit sigma_z and
/// sigma_x and multiplying through every word of the set.
struct FactorAssignmentCensus {
    std::uint64_t assignments_tested = 0;
    std::uint64_t consistent = 0;  ///< product of word values equals the product sign
    int required_product = 0;
};

/// Brute force over all 4^n factor assignments. Throws std::domain_error if
/// the words' product is not +-identity.
FactorAssignmentCensus factor_assignment_census(const OperatorSet &s);

}  // namespace ks8
