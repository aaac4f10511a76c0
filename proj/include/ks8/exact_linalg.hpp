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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace ks8 {

using Rational = boost::rational<std::int64_t>;

/// A ray in R^d with integer components, stored in canonical form.
///
/// Canonical form: components are divided by their gcd, the first nonzero
/// component is positive, and a primitive vector of squared norm 1 is
/// doubled so that its squared norm is 4. Every vector of the 8-dimensional
/// construction therefore has squared norm exactly 4, and +v / -v compare
/// equal.
class ExactVector {
   public:
    /// Canonicalizes `components`. Throws std::invalid_argument if all are zero
    /// or the list is empty.
    explicit ExactVector(std::vector<int> components);

    static ExactVector from_line(std::string_view line);
    /// Parses the compact digit form, e.g. "100-10-1-10" or "02000000".
    static ExactVector from_compact(std::string_view text);

    std::size_t dimension() const { return components_.size(); }
    std::span<const int> components() const { return components_; }
    int operator[](std::size_t k) const { return components_[k]; }
    std::int64_t norm2() const;

    /// Space-separated components, the vector file line format.
    std::string to_line() const;
    /// Compact digit form, negatives written as "-1".
    std::string to_compact() const;

    friend auto operator<=>(const ExactVector &, const ExactVector &) = default;
    friend bool operator==(const ExactVector &, const ExactVector &) = default;

   private:
    std::vector<int> components_;
};

std::ostream &operator<<(std::ostream &out, const ExactVector &v);

/// Exact dot product. Throws std::invalid_argument on dimension mismatch.
std::int64_t inner(const ExactVector &u, const ExactVector &v);
std::int64_t inner(std::span<const int> u, std::span<const int> v);

enum class AngleClass { orthogonal, acute_obtuse_half, other };

std::string_view to_string(AngleClass c);

/// Classifies the angle between two norm^2 = 4 vectors: 90 degrees, 60/120
/// degrees (|inner| = 2), or anything else. Throws std::invalid_argument if
/// either vector does not have squared norm 4.
AngleClass angle_class(const ExactVector &u, const ExactVector &v);

/// Dense d x d matrix of exact rationals, row-major.
struct RationalMatrix {
    std::size_t dim = 0;
    std::vector<Rational> entries;

    static RationalMatrix zero(std::size_t dim);
    static RationalMatrix identity(std::size_t dim);

    Rational &at(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
    const Rational &at(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }

    RationalMatrix &operator+=(const RationalMatrix &other);

    friend bool operator==(const RationalMatrix &, const RationalMatrix &) = default;
};

bool operator<(const RationalMatrix &a, const RationalMatrix &b);

/// Orthogonal projector onto the span of mutually orthogonal rays.
///
/// Equality and ordering are basis independent: both go through the exact
/// projection matrix sum_k v_k v_k^T / |v_k|^2, so reordering the span or
/// flipping signs of its vectors does not change the projector.
class Projector {
   public:
    /// Throws std::invalid_argument if the span is empty, mixes dimensions,
    /// contains a non-orthogonal pair, or has more vectors than dimensions.
    explicit Projector(std::vector<ExactVector> span);

    std::size_t rank() const { return span_.size(); }
    std::size_t dimension() const { return span_.front().dimension(); }
    const std::vector<ExactVector> &span() const { return span_; }
    const RationalMatrix &matrix() const { return matrix_; }

    /// True iff every span vector of `this` is orthogonal to every span vector of `other`.
    bool orthogonal_to(const Projector &other) const;

    friend bool operator==(const Projector &a, const Projector &b) { return a.matrix_ == b.matrix_; }
    friend bool operator<(const Projector &a, const Projector &b) { return a.matrix_ < b.matrix_; }

   private:
    std::vector<ExactVector> span_;
    RationalMatrix matrix_;
};

/// A set of projectors measured together.
struct Context {
    std::vector<Projector> members;

    /// Convenience: one rank-1 projector per vector.
    static Context from_rays(const std::vector<ExactVector> &rays);

    std::size_t total_rank() const;
};

/// True iff the member projection matrices sum exactly to the identity.
/// Malformed input (empty, mixed dimensions) yields false.
bool is_resolution_of_identity(const Context &c);

/// Reads the vector text format: one vector per line, whitespace-separated
/// integers, '#' starts a comment line, blank lines ignored.
std::vector<ExactVector> read_vectors(std::istream &in);
void write_vectors(std::ostream &out, std::span<const ExactVector> vectors);

}  // namespace ks8
