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

#include "ks8/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace ks8::gf2 {

Matrix::Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitVector Matrix::multiply(const BitVector &x) const {
    if (x.size() != cols_) {
        throw std::invalid_argument("gf2::Matrix::multiply: size mismatch");
    }
    BitVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        out[r] = (rows_[r] & x).count() % 2 == 1;
    }
    return out;
}

namespace {

struct Echelon {
    std::vector<BitVector> rows;
    std::vector<std::size_t> pivots;  // pivot column of rows[k]
};

Echelon reduce(const Matrix &a) {
    Echelon e;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        e.rows.push_back(a.row(r));
    }
    std::size_t next = 0;
    for (std::size_t c = 0; c < a.cols() && next < e.rows.size(); ++c) {
        std::size_t p = next;
        while (p < e.rows.size() && !e.rows[p][c]) {
            ++p;
        }
        if (p == e.rows.size()) {
            continue;
        }
        std::swap(e.rows[next], e.rows[p]);
        for (std::size_t r = 0; r < e.rows.size(); ++r) {
            if (r != next && e.rows[r][c]) {
                e.rows[r] ^= e.rows[next];
            }
        }
        e.pivots.push_back(c);
        ++next;
    }
    e.rows.resize(next);
    return e;
}

}  // namespace

std::vector<BitVector> kernel_basis(const Matrix &a) {
    auto e = reduce(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : e.pivots) {
        is_pivot[c] = true;
    }
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector x(a.cols());
        x[f] = true;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) {
            if (e.rows[k][f]) {
                x[e.pivots[k]] = true;
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::size_t rank(const Matrix &a) {
    return reduce(a).pivots.size();
}

}  // namespace ks8::gf2
