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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ks8/exact_linalg.hpp"

namespace ks8 {

enum class Pauli : std::uint8_t { I, X, Z };

/// Dense square integer matrix, row-major.
struct IntMatrix {
    std::size_t dim = 0;
    std::vector<std::int64_t> entries;

    static IntMatrix zero(std::size_t dim);
    static IntMatrix identity(std::size_t dim);

    std::int64_t &at(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }

    std::int64_t trace() const;
    std::vector<std::int64_t> apply(std::span<const int> v) const;

    friend bool operator==(const IntMatrix &, const IntMatrix &) = default;
};

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
IntMatrix operator+(const IntMatrix &a, const IntMatrix &b);
IntMatrix operator*(std::int64_t s, const IntMatrix &m);

/// Signed tensor product of real single-qubit operators. Qubit 0 (the first
/// letter) is the most significant bit of the component index.
struct PauliWord {
    std::vector<Pauli> letters;
    int sign = 1;

    /// Parses "ZXX", "-XXZ", "+IZI".
    static PauliWord parse(std::string_view text);

    std::size_t num_qubits() const { return letters.size(); }
    std::string to_string() const;

    friend bool operator==(const PauliWord &, const PauliWord &) = default;
};

/// Kronecker product of Z = diag(1, -1), X = antidiag(1, 1), I, times the sign.
IntMatrix realize(const PauliWord &w);

/// Two real Pauli words commute iff they clash (X against Z) on an even
/// number of qubits. Throws std::invalid_argument on length mismatch.
bool commutes(const PauliWord &a, const PauliWord &b);

struct OperatorSet {
    std::vector<PauliWord> words;
    std::optional<int> expected_product_sign;

    std::size_t num_qubits() const { return words.empty() ? 0 : words.front().num_qubits(); }
    bool pairwise_commuting() const;
};

/// Sign s of the product W_1 W_2 ... W_k = s * identity. Throws
/// std::domain_error if the words do not pairwise commute or the product is
/// not proportional to the identity.
int product_sign(const OperatorSet &s);

/// Eigenvalue (+1 / -1) of each word of an OperatorSet, aligned with its words.
using EigenLabel = std::vector<int>;

std::string label_to_string(const EigenLabel &label);

struct LabeledVector {
    ExactVector vector;
    EigenLabel label;
};

/// Joint eigenbasis of a complete set of commuting real Pauli words.
///
/// Each nonempty joint eigenspace yields one canonical vector, taken from a
/// nonzero column of prod_k (I + lambda_k W_k). Output is ordered by label,
/// lexicographically with +1 before -1. Throws std::domain_error if the words
/// do not commute or some joint eigenspace has dimension greater than one.
std::vector<LabeledVector> joint_eigenbasis(const OperatorSet &s);

}  // namespace ks8
