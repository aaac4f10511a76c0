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

#include <vector>

#include "ks8/exact_linalg.hpp"
#include "ks8/ks_engine.hpp"
#include "ks8/pauli.hpp"

/// The 8-dimensional instance: Mermin's four three-qubit operators, the
/// 11-octad parity proof, its plane merge and the state used for the
/// 13-vector proof.
namespace ks8::reference {

/// A = ZZZ, B = ZXX, C = XZX, D = XXZ.
OperatorSet mermin_operators();

/// The 11 octads of the parity proof, in proof-column order.
std::vector<std::vector<ExactVector>> certificate_columns();

/// The four rays no certificate column uses:
/// 20000000, 00001111, 001-1001-1, 010-10-101.
///
/// The frequently quoted label 10-10-1010 for the last one is not orthogonal
/// to 20000000; 010-10-101 is the only ray consistent with the columns.
std::vector<ExactVector> excluded_quadruple();

/// Six lines over 20 rays giving 14 planes. The fourth line ends in
/// 10-10-1010; with 01010-10-1 there, 10101010 is left unpaired in two
/// columns.
PlaneSpec plane_spec();

/// 100-10-1-10.
ExactVector proof_state();

/// The five defining octads as listed row by row in the reference table
/// (standard basis first, joint eigenbasis last).
std::vector<std::vector<ExactVector>> defining_blocks();

/// 2 * state = sum of signs[i] * vectors[i].
struct SignedExpansion {
    std::vector<ExactVector> vectors;
    std::vector<int> signs;
};

/// The seven printed expansions of 2 * proof_state(), in printed order and
/// with printed signs.
std::vector<SignedExpansion> state_expansions();

}  // namespace ks8::reference
