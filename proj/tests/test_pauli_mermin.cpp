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

#include "ks8/mermin.hpp"
#include "ks8/pauli.hpp"
#include "ks8/reference_instance.hpp"
#include "test_support.hpp"

using namespace ks8;
using ks8::test::v;

namespace {

PauliWord w(const char *s) { return PauliWord::parse(s); }

// Oracle: 2x2 factors multiplied out entry by entry, independent of realize().
std::int64_t word_entry(const PauliWord &word, std::size_t row, std::size_t col) {
    const std::size_t n = word.num_qubits();
    std::int64_t value = word.sign;
    for (std::size_t q = 0; q < n; ++q) {
        const std::size_t shift = n - 1 - q;
        const int r = static_cast<int>(row >> shift & 1), c = static_cast<int>(col >> shift & 1);
        switch (word.letters[q]) {
            case Pauli::I:
                value *= r == c ? 1 : 0;
                break;
            case Pauli::Z:
                value *= r == c ? (r == 0 ? 1 : -1) : 0;
                break;
            case Pauli::X:
                value *= r != c ? 1 : 0;
                break;
        }
    }
    return value;
}

PauliWord random_word(test::Rng &rng, std::size_t n) {
    PauliWord out;
    for (std::size_t q = 0; q < n; ++q) {
        out.letters.push_back(static_cast<Pauli>(rng.below(3)));
    }
    out.sign = rng.below(2) ? -1 : 1;
    return out;
}

}  // namespace

TEST_CASE("parse and print words") {
    CHECK(w("ZXX").to_string() == "ZXX");
    CHECK(w("-XXZ").sign == -1);
    CHECK(w("+IZI").to_string() == "IZI");
    CHECK(w("-XXZ").to_string() == "-XXZ");
    CHECK_THROWS_AS(w("ZYX"), std::invalid_argument);
    CHECK_THROWS_AS(w(""), std::invalid_argument);
}

TEST_CASE("realize") {
    CHECK(realize(w("III")) == IntMatrix::identity(8));
    CHECK(realize(w("XXZ")).at(0b000, 0b110) == 1);
    // ZII on basis index 100 (the vector 00002000) has eigenvalue -1.
    auto image = realize(w("ZII")).apply(v("00002000").components());
    CHECK(image == std::vector<std::int64_t>{0, 0, 0, 0, -2, 0, 0, 0});

    for (const char *s : {"ZZZ", "ZXX", "XZX", "XXZ", "-IXZ", "XIX"}) {
        const auto word = w(s);
        const auto m = realize(word);
        for (std::size_t r = 0; r < 8; ++r) {
            for (std::size_t c = 0; c < 8; ++c) {
                CHECK(m.at(r, c) == word_entry(word, r, c));
            }
        }
        CHECK(m * m == IntMatrix::identity(8));
    }
}

TEST_CASE("commutation") {
    CHECK(commutes(w("ZZZ"), w("ZXX")));
    CHECK_FALSE(commutes(w("ZII"), w("XII")));
    CHECK(commutes(w("ZZZ"), w("XXZ")));
    CHECK_THROWS_AS(commutes(w("ZZ"), w("ZZZ")), std::invalid_argument);
}

TEST_CASE("property: parity rule agrees with matrix commutators") {
    test::Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        auto a = random_word(rng, n), b = random_word(rng, n);
        const auto ma = realize(a), mb = realize(b);
        CHECK(commutes(a, b) == (ma * mb == mb * ma));
    }
}

TEST_CASE("product sign") {
    CHECK(product_sign(reference::mermin_operators()) == -1);
    CHECK(product_sign(OperatorSet{{w("ZZZ"), w("ZZZ")}, {}}) == 1);
    CHECK_THROWS_AS(product_sign(OperatorSet{{w("ZII"), w("IXI")}, {}}), std::domain_error);
    CHECK_THROWS_AS(product_sign(OperatorSet{{w("ZII"), w("XII")}, {}}), std::domain_error);
    CHECK(reference::mermin_operators().pairwise_commuting());
}

TEST_CASE("joint eigenbases") {
    SUBCASE("single-qubit Z factors give the standard basis") {
        auto basis = joint_eigenbasis(OperatorSet{{w("ZII"), w("IZI"), w("IIZ")}, {}});
        REQUIRE(basis.size() == 8);
        CHECK(basis.front().vector == v("20000000"));
        CHECK(basis.front().label == EigenLabel{1, 1, 1});
        CHECK(basis.back().vector == v("00000002"));
        CHECK(label_to_string(basis.back().label) == "---");
    }
    SUBCASE("X, X, Z factors contain 10101010") {
        auto basis = joint_eigenbasis(OperatorSet{{w("XII"), w("IXI"), w("IIZ")}, {}});
        bool found = false;
        for (const auto &lv : basis) {
            found = found || lv.vector == v("10101010");
        }
        CHECK(found);
    }
    SUBCASE("the Mermin words contain 100101-10") {
        auto basis = joint_eigenbasis(reference::mermin_operators());
        REQUIRE(basis.size() == 8);
        bool found = false;
        for (const auto &lv : basis) {
            found = found || lv.vector == v("100101-10");
            // Every label multiplies to the product sign.
            CHECK(lv.label[0] * lv.label[1] * lv.label[2] * lv.label[3] == -1);
        }
        CHECK(found);
    }
    SUBCASE("incomplete set is rejected") {
        CHECK_THROWS_AS(joint_eigenbasis(OperatorSet{{w("ZII"), w("IZI")}, {}}), std::domain_error);
    }
    SUBCASE("non-commuting set is rejected") {
        CHECK_THROWS_AS(joint_eigenbasis(OperatorSet{{w("ZII"), w("XII"), w("IZI"), w("IIZ")}, {}}),
                        std::domain_error);
    }
}

TEST_CASE("property: eigen-equation W v = lambda v holds for every generated vector") {
    for (int n : {2, 3, 4}) {
        for (const auto &b : generate_defining_bases(n)) {
            for (const auto &lv : b.basis) {
                for (std::size_t k = 0; k < b.generators.words.size(); ++k) {
                    const auto image = realize(b.generators.words[k]).apply(lv.vector.components());
                    for (std::size_t i = 0; i < image.size(); ++i) {
                        CHECK(image[i] == lv.label[k] * lv.vector[i]);
                    }
                }
            }
        }
    }
}

TEST_CASE("mermin words") {
    auto words = mermin_words(3);
    REQUIRE(words.size() == 4);
    CHECK(words[0].to_string() == "ZZZ");
    CHECK(words[1].to_string() == "ZXX");
    CHECK(words[2].to_string() == "XZX");
    CHECK(words[3].to_string() == "XXZ");
    CHECK(mermin_words(4).size() == 8);
    CHECK_THROWS_AS(mermin_words(1), std::invalid_argument);
    CHECK(factor_set(w("ZXX")).words.size() == 3);
}

TEST_CASE("three-qubit defining octads") {
    const auto bases = generate_defining_bases(3);
    REQUIRE(bases.size() == 5);
    const auto vectors = collect_vectors(bases);
    CHECK(vectors.size() == 40);

    const auto golden = test::read_blocks("defining_octads_n3.txt");
    REQUIRE(golden.size() == 5);
    std::vector<std::vector<ExactVector>> generated;
    for (const auto &b : bases) {
        generated.push_back(b.vectors());
    }
    CHECK(test::as_set_of_sets(generated) == test::as_set_of_sets(golden));

    for (const auto &ctx : generate_defining_octads(3)) {
        CHECK(is_resolution_of_identity(ctx));
    }
    // Octads 1-4 use components in {0, +-1, +-2}; octad 5 has four +-1 entries per vector.
    for (const auto &lv : bases.back().basis) {
        int ones = 0;
        for (auto c : lv.vector.components()) {
            ones += c == 1 || c == -1;
        }
        CHECK(ones == 4);
    }
}

TEST_CASE("other qubit counts") {
    SUBCASE("two qubits: ZZ and XX factor bases plus the Bell basis") {
        const auto bases = generate_defining_bases(2);
        CHECK(bases.size() == 3);
        CHECK(collect_vectors(bases).size() == 12);
        CHECK_THROWS_AS(product_sign(OperatorSet{mermin_words(2), {}}), std::domain_error);
    }
    SUBCASE("four qubits") {
        const auto bases = generate_defining_bases(4);
        CHECK(bases.size() == 9);
        for (const auto &ctx : generate_defining_octads(4)) {
            CHECK(ctx.members.size() == 16);
            CHECK(is_resolution_of_identity(ctx));
        }
    }
    CHECK_THROWS_AS(generate_defining_bases(1), std::invalid_argument);
}

TEST_CASE("no sign assignment to the factors reproduces the product -1") {
    const auto census = factor_assignment_census(reference::mermin_operators());
    CHECK(census.assignments_tested == 64);
    CHECK(census.consistent == 0);
    CHECK(census.required_product == -1);

    // Oracle: every word value is a product of factor values, and each factor
    // appears twice across the four words, so the product is always +1.
    std::size_t consistent = 0;
    for (unsigned code = 0; code < 64; ++code) {
        auto val = [&](int bit) { return (code >> bit & 1) ? -1 : 1; };
        const int z1 = val(0), z2 = val(1), z3 = val(2), x1 = val(3), x2 = val(4), x3 = val(5);
        const int product = (z1 * z2 * z3) * (z1 * x2 * x3) * (x1 * z2 * x3) * (x1 * x2 * z3);
        consistent += product == -1;
    }
    CHECK(consistent == 0);
}
