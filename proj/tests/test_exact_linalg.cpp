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

#include <doctest.h>

#include <numeric>
#include <sstream>

#include "ks8/exact_linalg.hpp"
#include "test_support.hpp"

using namespace ks8;
using ks8::test::v;

TEST_CASE("canonical form") {
    CHECK(ExactVector({0, 0, 0, 0, 1, 0, 0, 0}).to_compact() == "00002000");
    CHECK(ExactVector({0, -3, 0, 0, 0, 0, 0, 0}) == v("02000000"));
    CHECK(ExactVector({-1, 0, 0, 1, 0, 1, 1, 0}) == v("100-10-1-10"));
    CHECK(ExactVector({2, 2, 2, 2, 0, 0, 0, 0}) == v("11110000"));
    CHECK(v("100-10-1-10").norm2() == 4);
    CHECK(v("0-1101001").to_compact() == "01-10-100-1");
    // Other norms stay primitive.
    CHECK(ExactVector({3, 6}).to_compact() == "12");
    CHECK_THROWS_AS(ExactVector({0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(ExactVector(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(v("10-"), std::invalid_argument);
    CHECK_THROWS_AS(ExactVector::from_line("1 x 0"), std::invalid_argument);
}

TEST_CASE("inner products") {
    CHECK(inner(v("20000000"), v("02000000")) == 0);
    CHECK(inner(v("11110000"), v("11110000")) == 4);
    CHECK(inner(v("11110000"), v("10101010")) == 2);
    CHECK_THROWS_AS(inner(v("1111"), v("11110000")), std::invalid_argument);
}

TEST_CASE("angle classes") {
    CHECK(angle_class(v("20000000"), v("02000000")) == AngleClass::orthogonal);
    CHECK(angle_class(v("11110000"), v("10101010")) == AngleClass::acute_obtuse_half);
    CHECK(angle_class(v("10101010"), v("10101010")) == AngleClass::other);
    CHECK(to_string(AngleClass::acute_obtuse_half) == "acute_obtuse_half");
    CHECK_THROWS_AS(angle_class(ExactVector({1, 1, 1}), ExactVector({1, -1, 0})), std::invalid_argument);
}

TEST_CASE("resolution of identity") {
    std::vector<ExactVector> unit;
    for (int k = 0; k < 8; ++k) {
        std::vector<int> c(8, 0);
        c[static_cast<std::size_t>(k)] = 2;
        unit.emplace_back(c);
    }
    CHECK(is_resolution_of_identity(Context::from_rays(unit)));

    const std::vector<ExactVector> column1 = {v("02000000"),   v("00200000"),   v("00002000"),  v("00000002"),
                                              v("100101-10"), v("100-10110"), v("10010-110"), v("100-10-1-10")};
    CHECK(is_resolution_of_identity(Context::from_rays(column1)));
    for (std::size_t drop = 0; drop < column1.size(); ++drop) {
        auto seven = column1;
        seven.erase(seven.begin() + static_cast<std::ptrdiff_t>(drop));
        CHECK_FALSE(is_resolution_of_identity(Context::from_rays(seven)));
    }
    CHECK_FALSE(is_resolution_of_identity(Context{}));

    // A rank-2 plane plus six rays.
    Context mixed;
    mixed.members.emplace_back(std::vector<ExactVector>{v("02000000"), v("00000002")});
    for (const char *r : {"00200000", "00002000", "100101-10", "100-10110", "10010-110", "100-10-1-10"}) {
        mixed.members.emplace_back(std::vector<ExactVector>{v(r)});
    }
    CHECK(mixed.total_rank() == 8);
    CHECK(is_resolution_of_identity(mixed));
}

TEST_CASE("projector identity is basis independent") {
    Projector a({v("11110000"), v("1-1-110000")});
    Projector b({v("1-1-110000"), ExactVector({-1, -1, -1, -1, 0, 0, 0, 0})});
    Projector c({v("10010000"), v("01100000")});  // same plane, other basis
    Projector d({v("11110000"), v("11-1-10000")});
    CHECK(a == b);
    CHECK(a == c);
    CHECK_FALSE(a == d);
    CHECK(a.matrix().at(0, 0) == Rational(1, 2));
    CHECK(a.matrix().at(0, 3) == Rational(1, 2));
    CHECK(a.matrix().at(1, 2) == Rational(1, 2));
    CHECK(a.matrix().at(0, 1) == Rational(0));
    CHECK(a.orthogonal_to(Projector({v("00001111")})));
    CHECK_THROWS_AS(Projector({v("11110000"), v("10101010")}), std::invalid_argument);
    CHECK_THROWS_AS(Projector(std::vector<ExactVector>{}), std::invalid_argument);
}

TEST_CASE("vector file round trip") {
    std::istringstream in("# comment\n1 0 0 -1 0 -1 -1 0\n\n0 0 0 0 0 0 0 1\n");
    auto vs = read_vectors(in);
    REQUIRE(vs.size() == 2);
    CHECK(vs[0] == v("100-10-1-10"));
    CHECK(vs[1] == v("00000002"));
    std::ostringstream out;
    write_vectors(out, vs);
    std::istringstream back(out.str());
    CHECK(read_vectors(back) == vs);

    std::istringstream mixed("1 0\n1 0 0\n");
    CHECK_THROWS_AS(read_vectors(mixed), std::invalid_argument);
}

TEST_CASE("property: inner is symmetric and invariant under signed permutations") {
    test::Rng rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t d = 2 + rng.below(7);
        std::vector<int> a(d), b(d);
        for (std::size_t i = 0; i < d; ++i) {
            a[i] = rng.between(-3, 3);
            b[i] = rng.between(-3, 3);
        }
        if (std::all_of(a.begin(), a.end(), [](int x) { return x == 0; }) ||
            std::all_of(b.begin(), b.end(), [](int x) { return x == 0; })) {
            continue;
        }
        // Oracle: the raw dot product.
        std::int64_t raw = 0;
        for (std::size_t i = 0; i < d; ++i) {
            raw += a[i] * b[i];
        }
        CHECK(inner(std::span<const int>(a), std::span<const int>(b)) == raw);
        CHECK(inner(std::span<const int>(b), std::span<const int>(a)) == raw);

        ExactVector u(a), w(b);
        CHECK(inner(u, w) == inner(w, u));

        std::vector<std::size_t> perm(d);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        rng.shuffle(perm);
        std::vector<int> pa(d), pb(d);
        for (std::size_t i = 0; i < d; ++i) {
            const int s = rng.below(2) ? -1 : 1;
            pa[i] = s * a[perm[i]];
            pb[i] = s * b[perm[i]];
        }
        CHECK(inner(std::span<const int>(pa), std::span<const int>(pb)) == raw);

        // Canonicalization is idempotent and scale-invariant up to sign.
        std::vector<int> scaled(a);
        const int k = rng.below(2) ? -2 : 3;
        for (auto &x : scaled) {
            x *= k;
        }
        CHECK(ExactVector(scaled) == u);
        CHECK(ExactVector(std::vector<int>(u.components().begin(), u.components().end())) == u);
    }
}
