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

#include <cstddef>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ks8::gf2 {

using BitVector = boost::dynamic_bitset<>;

/// Dense matrix over GF(2), stored as one bitset per row.
class Matrix {
   public:
    Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r][c] = value; }
    void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }
    const BitVector &row(std::size_t r) const { return rows_[r]; }

    /// A x over GF(2).
    BitVector multiply(const BitVector &x) const;

   private:
    std::size_t cols_;
    std::vector<BitVector> rows_;
};

/// Basis of { x : A x = 0 }, one vector per free column of the reduced row
/// echelon form, in ascending free-column order.
std::vector<BitVector> kernel_basis(const Matrix &a);

std::size_t rank(const Matrix &a);

}  // namespace ks8::gf2
