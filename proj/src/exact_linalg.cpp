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

#include "ks8/exact_linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ks8 {

ExactVector::ExactVector(std::vector<int> components) : components_(std::move(components)) {
    if (components_.empty()) {
        throw std::invalid_argument("ExactVector: empty component list");
    }
    int g = 0;
    for (int c : components_) {
        g = std::gcd(g, std::abs(c));
    }
    if (g == 0) {
        throw std::invalid_argument("ExactVector: zero vector has no direction");
    }
    int first = *std::find_if(components_.begin(), components_.end(), [](int c) { return c != 0; });
    int scale = first < 0 ? -g : g;
    for (int &c : components_) {
        c /= scale;
    }
    if (norm2() == 1) {
        for (int &c : components_) {
            c *= 2;
        }
    }
}

ExactVector ExactVector::from_line(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::vector<int> comps;
    int x;
    while (in >> x) {
        comps.push_back(x);
    }
    if (!in.eof()) {
        throw std::invalid_argument("ExactVector: cannot parse vector line '" + std::string(line) + "'");
    }
    return ExactVector(std::move(comps));
}

ExactVector ExactVector::from_compact(std::string_view text) {
    std::vector<int> comps;
    for (std::size_t k = 0; k < text.size(); ++k) {
        char ch = text[k];
        if (ch == '-') {
            if (k + 1 >= text.size() || text[k + 1] < '0' || text[k + 1] > '9') {
                throw std::invalid_argument("ExactVector: dangling '-' in '" + std::string(text) + "'");
            }
            comps.push_back(-(text[++k] - '0'));
        } else if (ch >= '0' && ch <= '9') {
            comps.push_back(ch - '0');
        } else if (ch != ' ') {
            throw std::invalid_argument("ExactVector: bad character in '" + std::string(text) + "'");
        }
    }
    return ExactVector(std::move(comps));
}

std::int64_t ExactVector::norm2() const {
    return inner(components_, components_);
}

std::string ExactVector::to_line() const {
    std::string out;
    for (std::size_t k = 0; k < components_.size(); ++k) {
        if (k) {
            out += ' ';
        }
        out += std::to_string(components_[k]);
    }
    return out;
}

std::string ExactVector::to_compact() const {
    std::string out;
    for (int c : components_) {
        out += std::to_string(c);
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const ExactVector &v) {
    return out << v.to_compact();
}

std::int64_t inner(std::span<const int> u, std::span<const int> v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("inner: dimension mismatch (" + std::to_string(u.size()) + " vs " +
                                    std::to_string(v.size()) + ")");
    }
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        sum += static_cast<std::int64_t>(u[k]) * v[k];
    }
    return sum;
}

std::int64_t inner(const ExactVector &u, const ExactVector &v) {
    return inner(u.components(), v.components());
}

std::string_view to_string(AngleClass c) {
    switch (c) {
        case AngleClass::orthogonal:
            return "orthogonal";
        case AngleClass::acute_obtuse_half:
            return "acute_obtuse_half";
        case AngleClass::other:
            return "other";
    }
    return "?";
}

AngleClass angle_class(const ExactVector &u, const ExactVector &v) {
    if (u.norm2() != 4 || v.norm2() != 4) {
        throw std::invalid_argument("angle_class: vectors must have squared norm 4");
    }
    auto ip = inner(u, v);
    if (ip == 0) {
        return AngleClass::orthogonal;
    }
    if (ip == 2 || ip == -2) {
        return AngleClass::acute_obtuse_half;
    }
    return AngleClass::other;
}

RationalMatrix RationalMatrix::zero(std::size_t dim) {
    return RationalMatrix{dim, std::vector<Rational>(dim * dim)};
}

RationalMatrix RationalMatrix::identity(std::size_t dim) {
    auto m = zero(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        m.at(k, k) = 1;
    }
    return m;
}

RationalMatrix &RationalMatrix::operator+=(const RationalMatrix &other) {
    if (other.dim != dim) {
        throw std::invalid_argument("RationalMatrix: dimension mismatch");
    }
    for (std::size_t k = 0; k < entries.size(); ++k) {
        entries[k] += other.entries[k];
    }
    return *this;
}

bool operator<(const RationalMatrix &a, const RationalMatrix &b) {
    if (a.dim != b.dim) {
        return a.dim < b.dim;
    }
    return std::lexicographical_compare(a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end());
}

Projector::Projector(std::vector<ExactVector> span) : span_(std::move(span)) {
    if (span_.empty()) {
        throw std::invalid_argument("Projector: empty span");
    }
    const std::size_t d = span_.front().dimension();
    if (span_.size() > d) {
        throw std::invalid_argument("Projector: rank exceeds dimension");
    }
    for (std::size_t i = 0; i < span_.size(); ++i) {
        if (span_[i].dimension() != d) {
            throw std::invalid_argument("Projector: span mixes dimensions");
        }
        for (std::size_t j = i + 1; j < span_.size(); ++j) {
            if (inner(span_[i], span_[j]) != 0) {
                throw std::invalid_argument("Projector: span vectors " + span_[i].to_compact() + " and " +
                                            span_[j].to_compact() + " are not orthogonal");
            }
        }
    }
    std::sort(span_.begin(), span_.end());
    matrix_ = RationalMatrix::zero(d);
    for (const auto &v : span_) {
        const Rational inv_norm(1, v.norm2());
        for (std::size_t r = 0; r < d; ++r) {
            if (v[r] == 0) {
                continue;
            }
            for (std::size_t c = 0; c < d; ++c) {
                matrix_.at(r, c) += inv_norm * static_cast<std::int64_t>(v[r] * v[c]);
            }
        }
    }
}

bool Projector::orthogonal_to(const Projector &other) const {
    for (const auto &u : span_) {
        for (const auto &v : other.span_) {
            if (inner(u, v) != 0) {
                return false;
            }
        }
    }
    return true;
}

Context Context::from_rays(const std::vector<ExactVector> &rays) {
    Context c;
    c.members.reserve(rays.size());
    for (const auto &v : rays) {
        c.members.emplace_back(std::vector<ExactVector>{v});
    }
    return c;
}

std::size_t Context::total_rank() const {
    std::size_t r = 0;
    for (const auto &p : members) {
        r += p.rank();
    }
    return r;
}

bool is_resolution_of_identity(const Context &c) {
    if (c.members.empty()) {
        return false;
    }
    const std::size_t d = c.members.front().dimension();
    auto sum = RationalMatrix::zero(d);
    for (const auto &p : c.members) {
        if (p.dimension() != d) {
            return false;
        }
        sum += p.matrix();
    }
    return sum == RationalMatrix::identity(d);
}

std::vector<ExactVector> read_vectors(std::istream &in) {
    std::vector<ExactVector> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        try {
            out.push_back(ExactVector::from_line(line));
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (out.back().dimension() != out.front().dimension()) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": dimension differs from first vector");
        }
    }
    return out;
}

void write_vectors(std::ostream &out, std::span<const ExactVector> vectors) {
    for (const auto &v : vectors) {
        out << v.to_line() << '\n';
    }
}

}  // namespace ks8
