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

#include "ks8/reference_instance.hpp"

#include <string_view>

namespace ks8::reference {

namespace {

std::vector<ExactVector> rays(std::initializer_list<std::string_view> compact) {
    std::vector<ExactVector> out;
    for (auto c : compact) {
        out.push_back(ExactVector::from_compact(c));
    }
    return out;
}

}  // namespace

OperatorSet mermin_operators() {
    return OperatorSet{{PauliWord::parse("ZZZ"), PauliWord::parse("ZXX"), PauliWord::parse("XZX"),
                        PauliWord::parse("XXZ")},
                       -1};
}

std::vector<std::vector<ExactVector>> certificate_columns() {
    return {
        rays({"02000000", "00200000", "00002000", "00000002", "100101-10", "100-10110", "10010-110", "100-10-1-10"}),
        rays({"11110000", "1-1-110000", "000011-1-1", "00001-11-1", "100-10110", "100-10-1-10", "01-101001",
              "01-10-100-1"}),
        rays({"1100-1-100", "1-1001-100", "00110011", "001-100-11", "100101-10", "100-10110", "01-101001",
              "0110100-1"}),
        rays({"10101010", "10-10-1010", "01010-10-1", "010-1010-1", "100101-10", "100-10-1-10", "0110-1001",
              "01-101001"}),
        rays({"100101-10", "100-10110", "10010-110", "100-10-1-10", "0110-1001", "01-101001", "01-10-100-1",
              "0110100-1"}),
        rays({"00002000", "00000200", "00000020", "00000002", "11110000", "11-1-10000", "1-11-10000", "1-1-110000"}),
        rays({"00200000", "00020000", "00000020", "00000002", "11001100", "1100-1-100", "1-1001-100", "1-100-1100"}),
        rays({"02000000", "00020000", "00000200", "00000002", "10101010", "1010-10-10", "10-1010-10", "10-10-1010"}),
        rays({"1-11-10000", "1-1-110000", "00001-11-1", "00001-1-11", "11001100", "1100-1-100", "00110011",
              "001100-1-1"}),
        rays({"11-1-10000", "1-1-110000", "000011-1-1", "00001-1-11", "10101010", "1010-10-10", "01010101",
              "01010-10-1"}),
        rays({"1100-1-100", "1-100-1100", "001100-1-1", "001-100-11", "10101010", "10-1010-10", "01010101",
              "010-1010-1"}),
    };
}

std::vector<ExactVector> excluded_quadruple() {
    return rays({"20000000", "00001111", "001-1001-1", "010-10-101"});
}

PlaneSpec plane_spec() {
    return PlaneSpec{{
        rays({"02000000", "00000002", "00000020"}),
        rays({"11110000", "1-1-110000", "00001-1-11"}),
        rays({"1-1001-100", "1100-1-100", "001100-1-1"}),
        rays({"01010101", "10101010", "10-10-1010"}),
        rays({"10010-110", "100101-10", "01-101001", "01-10-100-1"}),
        rays({"0110100-1", "100-10110", "100-10-1-10", "0110-1001"}),
    }};
}

ExactVector proof_state() {
    return ExactVector::from_compact("100-10-1-10");
}

std::vector<std::vector<ExactVector>> defining_blocks() {
    return {
        rays({"20000000", "02000000", "00200000", "00020000", "00002000", "00000200", "00000020", "00000002"}),
        rays({"11110000", "11-1-10000", "1-11-10000", "1-1-110000", "00001111", "000011-1-1", "00001-11-1",
              "00001-1-11"}),
        rays({"11001100", "1100-1-100", "1-1001-100", "1-100-1100", "00110011", "001100-1-1", "001-1001-1",
              "001-100-11"}),
        rays({"10101010", "1010-10-10", "10-1010-10", "10-10-1010", "01010101", "01010-10-1", "010-1010-1",
              "010-10-101"}),
        rays({"100101-10", "100-10110", "10010-110", "100-10-1-10", "0110-1001", "01-101001", "01-10-100-1",
              "0110100-1"}),
    };
}

std::vector<SignedExpansion> state_expansions() {
    return {
        {rays({"1010-10-10", "10-1010-10", "00020000", "00000200"}), {1, 1, -1, -1}},
        {rays({"1100-1-100", "1-1001-100", "00020000", "00000020"}), {1, 1, -1, -1}},
        {rays({"11-1-10000", "1-11-10000", "00000200", "00000020"}), {1, 1, -1, -1}},
        {rays({"11-1-10000", "00001-1-11", "1010-10-10", "01010101"}), {1, 1, 1, -1}},
        {rays({"1-11-10000", "00001-1-11", "1100-1-100", "00110011"}), {1, 1, 1, -1}},
        {rays({"1100-1-100", "1-1001-100", "001-100-11", "00110011"}), {1, 1, 1, -1}},
        {rays({"1100-1-100", "001-100-11", "10-1010-10", "01010101"}), {1, 1, 1, -1}},
    };
}

}  // namespace ks8::reference
