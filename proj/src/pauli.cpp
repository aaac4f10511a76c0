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

#include "ks8/pauli.hpp"

#include <stdexcept>

namespace ks8 {

IntMatrix IntMatrix::zero(std::size_t dim) {
    return IntMatrix{dim, std::vector<std::int64_t>(dim * dim, 0)};
}

IntMatrix IntMatrix::identity(std::size_t dim) {
    auto m = zero(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        m.at(k, k) = 1;
    }
    return m;
}

std::int64_t IntMatrix::trace() const {
    std::int64_t t = 0;
    for (std::size_t k = 0; k < dim; ++k) {
        t += at(k, k);
    }
    return t;
}

std::vector<std::int64_t> IntMatrix::apply(std::span<const int> v) const {
    if (v.size() != dim) {
        throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
    }
    std::vector<std::int64_t> out(dim, 0);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            out[r] += at(r, c) * v[c];
        }
    }
    return out;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("IntMatrix: dimension mismatch");
    }
    auto out = IntMatrix::zero(a.dim);
    for (std::size_t r = 0; r < a.dim; ++r) {
        for (std::size_t k = 0; k < a.dim; ++k) {
            auto x = a.at(r, k);
            if (x == 0) {
                continue;
            }
            for (std::size_t c = 0; c < a.dim; ++c) {
                out.at(r, c) += x * b.at(k, c);
            }
        }
    }
    return out;
}

IntMatrix operator+(const IntMatrix &a, const IntMatrix &b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("IntMatrix: dimension mismatch");
    }
    auto out = a;
    for (std::size_t k = 0; k < out.entries.size(); ++k) {
        out.entries[k] += b.entries[k];
    }
    return out;
}

IntMatrix operator*(std::int64_t s, const IntMatrix &m) {
    auto out = m;
    for (auto &x : out.entries) {
        x *= s;
    }
    return out;
}

PauliWord PauliWord::parse(std::string_view text) {
    PauliWord w;
    std::size_t k = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        w.sign = text[0] == '-' ? -1 : 1;
        k = 1;
    }
    for (; k < text.size(); ++k) {
        switch (text[k]) {
            case 'I':
                w.letters.push_back(Pauli::I);
                break;
            case 'X':
                w.letters.push_back(Pauli::X);
                break;
            case 'Z':
                w.letters.push_back(Pauli::Z);
                break;
            default:
                throw std::invalid_argument("PauliWord: unexpected character '" + std::string(1, text[k]) +
                                            "' in '" + std::string(text) + "' (only I, X, Z)");
        }
    }
    if (w.letters.empty()) {
        throw std::invalid_argument("PauliWord: empty word");
    }
    return w;
}

std::string PauliWord::to_string() const {
    std::string out = sign < 0 ? "-" : "";
    for (auto p : letters) {
        out += p == Pauli::I ? 'I' : p == Pauli::X ? 'X' : 'Z';
    }
    return out;
}

IntMatrix realize(const PauliWord &w) {
    IntMatrix m{1, {w.sign}};
    for (auto p : w.letters) {
        auto next = IntMatrix::zero(m.dim * 2);
        for (std::size_t r = 0; r < m.dim; ++r) {
            for (std::size_t c = 0; c < m.dim; ++c) {
                auto x = m.at(r, c);
                if (x == 0) {
                    continue;
                }
                // Lower index bit 0 = "up".
                switch (p) {
                    case Pauli::I:
                        next.at(2 * r, 2 * c) = x;
                        next.at(2 * r + 1, 2 * c + 1) = x;
                        break;
                    case Pauli::Z:
                        next.at(2 * r, 2 * c) = x;
                        next.at(2 * r + 1, 2 * c + 1) = -x;
                        break;
                    case Pauli::X:
                        next.at(2 * r, 2 * c + 1) = x;
                        next.at(2 * r + 1, 2 * c) = x;
                        break;
                }
            }
        }
        m = std::move(next);
    }
    return m;
}

bool commutes(const PauliWord &a, const PauliWord &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("commutes: words act on different qubit counts");
    }
    std::size_t clashes = 0;
    for (std::size_t k = 0; k < a.num_qubits(); ++k) {
        auto p = a.letters[k];
        auto q = b.letters[k];
        if ((p == Pauli::X && q == Pauli::Z) || (p == Pauli::Z && q == Pauli::X)) {
            ++clashes;
        }
    }
    return clashes % 2 == 0;
}

bool OperatorSet::pairwise_commuting() const {
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            if (!commutes(words[i], words[j])) {
                return false;
            }
        }
    }
    return true;
}

int product_sign(const OperatorSet &s) {
    if (s.words.empty()) {
        throw std::domain_error("product_sign: empty operator set");
    }
    if (!s.pairwise_commuting()) {
        throw std::domain_error("product_sign: words do not pairwise commute");
    }
    auto prod = realize(s.words.front());
    for (std::size_t k = 1; k < s.words.size(); ++k) {
        prod = prod * realize(s.words[k]);
    }
    auto id = IntMatrix::identity(prod.dim);
    if (prod == id) {
        return 1;
    }
    if (prod == -1 * id) {
        return -1;
    }
    throw std::domain_error("product_sign: product is not proportional to the identity");
}

std::string label_to_string(const EigenLabel &label) {
    std::string out;
    for (int l : label) {
        out += l > 0 ? '+' : '-';
    }
    return out;
}

std::vector<LabeledVector> joint_eigenbasis(const OperatorSet &s) {
    if (s.words.empty()) {
        throw std::domain_error("joint_eigenbasis: empty operator set");
    }
    if (!s.pairwise_commuting()) {
        throw std::domain_error("joint_eigenbasis: words do not pairwise commute");
    }
    std::vector<IntMatrix> mats;
    for (const auto &w : s.words) {
        if (w.num_qubits() != s.num_qubits()) {
            throw std::invalid_argument("joint_eigenbasis: words act on different qubit counts");
        }
        mats.push_back(realize(w));
    }
    const std::size_t d = mats.front().dim;
    const std::size_t m = mats.size();
    if (m > 40) {
        throw std::invalid_argument("joint_eigenbasis: more than 40 words");
    }
    const auto id = IntMatrix::identity(d);

    std::vector<LabeledVector> out;
    EigenLabel label(m);
    // After k factors, `proj` = 2^k * (projector onto the joint eigenspace of
    // the first k words), so a zero trace prunes the whole subtree. Taking +1
    // before -1 at every level yields labels in lexicographic order.
    auto descend = [&](auto &self, std::size_t k, const IntMatrix &proj) -> void {
        auto tr = proj.trace();
        if (tr == 0) {
            return;
        }
        if (k == m) {
            if (tr != (std::int64_t{1} << m)) {
                throw std::domain_error("joint_eigenbasis: eigenspace " + label_to_string(label) +
                                        " has dimension " + std::to_string(tr >> m) +
                                        "; the set is not complete");
            }
            for (std::size_t c = 0; c < d; ++c) {
                std::vector<int> col(d);
                bool nonzero = false;
                for (std::size_t r = 0; r < d; ++r) {
                    col[r] = static_cast<int>(proj.at(r, c));
                    nonzero = nonzero || col[r] != 0;
                }
                if (nonzero) {
                    out.push_back({ExactVector(std::move(col)), label});
                    return;
                }
            }
            return;
        }
        for (int lambda : {1, -1}) {
            label[k] = lambda;
            self(self, k + 1, proj * (id + lambda * mats[k]));
        }
    };
    descend(descend, 0, id);
    if (out.size() != d) {
        throw std::domain_error("joint_eigenbasis: eigenspaces do not span the space");
    }
    return out;
}

}  // namespace ks8
