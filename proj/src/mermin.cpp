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

#include "ks8/mermin.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ks8 {

std::vector<PauliWord> mermin_words(int num_qubits) {
    if (num_qubits < 2 || num_qubits > 12) {
        throw std::invalid_argument("mermin_words: qubit count must be in [2, 12]");
    }
    const auto n = static_cast<unsigned>(num_qubits);
    std::vector<PauliWord> words;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) % 2 != 0) {
            continue;
        }
        PauliWord w;
        for (unsigned q = 0; q < n; ++q) {
            w.letters.push_back((mask >> (n - 1 - q)) & 1 ? Pauli::X : Pauli::Z);
        }
        words.push_back(std::move(w));
    }
    return words;
}

OperatorSet factor_set(const PauliWord &w) {
    OperatorSet s;
    const auto n = w.num_qubits();
    for (std::size_t q = 0; q < n; ++q) {
        PauliWord f;
        f.letters.assign(n, Pauli::I);
        f.letters[q] = w.letters[q] == Pauli::I ? Pauli::Z : w.letters[q];
        s.words.push_back(std::move(f));
    }
    return s;
}

Context DefiningBasis::context() const {
    return Context::from_rays(vectors());
}

std::vector<ExactVector> DefiningBasis::vectors() const {
    std::vector<ExactVector> out;
    out.reserve(basis.size());
    for (const auto &lv : basis) {
        out.push_back(lv.vector);
    }
    return out;
}

std::vector<DefiningBasis> generate_defining_bases(int num_qubits) {
    if (num_qubits < 2) {
        throw std::invalid_argument("generate_defining_bases: need at least 2 qubits, got " +
                                    std::to_string(num_qubits));
    }
    auto words = mermin_words(num_qubits);
    std::vector<DefiningBasis> out;
    for (const auto &w : words) {
        auto fs = factor_set(w);
        auto basis = joint_eigenbasis(fs);
        out.push_back({std::move(fs), std::move(basis)});
    }
    OperatorSet all{words, std::nullopt};
    auto basis = joint_eigenbasis(all);
    out.push_back({std::move(all), std::move(basis)});
    return out;
}

std::vector<Context> generate_defining_octads(int num_qubits) {
    std::vector<Context> out;
    for (const auto &b : generate_defining_bases(num_qubits)) {
        out.push_back(b.context());
    }
    return out;
}

std::vector<ExactVector> collect_vectors(const std::vector<DefiningBasis> &bases) {
    std::vector<ExactVector> out;
    for (const auto &b : bases) {
        for (const auto &lv : b.basis) {
            if (std::find(out.begin(), out.end(), lv.vector) == out.end()) {
                out.push_back(lv.vector);
            }
        }
    }
    return out;
}

FactorAssignmentCensus factor_assignment_census(const OperatorSet &s) {
    FactorAssignmentCensus census;
    census.required_product = product_sign(s);
    const std::size_t n = s.num_qubits();
    if (2 * n >= 40) {
        throw std::invalid_argument("factor_assignment_census: too many qubits for brute force");
    }
    // Bit q of `code` is the value of sigma_z on qubit q, bit n + q that of sigma_x; set means -1.
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * n)); ++code) {
        int product = 1;
        for (const auto &w : s.words) {
            int value = w.sign;
            for (std::size_t q = 0; q < n; ++q) {
                std::size_t bit = 0;
                switch (w.letters[q]) {
                    case Pauli::I:
                        continue;
                    case Pauli::Z:
                        bit = q;
                        break;
                    case Pauli::X:
                        bit = n + q;
                        break;
                }
                if ((code >> bit) & 1) {
                    value = -value;
                }
            }
            product *= value;
        }
        ++census.assignments_tested;
        if (product == census.required_product) {
            ++census.consistent;
        }
    }
    return census;
}

}  // namespace ks8
