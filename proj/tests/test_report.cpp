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

#include <json.hpp>
#include <set>
#include <sstream>

#include "ks8/report.hpp"

using namespace ks8;

namespace {

const Report &default_report() {
    static const Report r = run_verify_all();
    return r;
}

const Claim *find(const Report &r, const std::string &id) {
    for (const auto &c : r.claims) {
        if (c.id == id) {
            return &c;
        }
    }
    return nullptr;
}

}  // namespace

TEST_CASE("every claim id appears once and every criterion is covered") {
    const auto &r = default_report();
    std::set<std::string> ids, criteria;
    for (const auto &c : r.claims) {
        CHECK(ids.insert(c.id).second);
        criteria.insert(c.id.substr(0, c.id.find('.')));
    }
    CHECK(criteria == std::set<std::string>{"1", "10", "2", "3", "4", "5", "6", "7", "8", "9"});
}

TEST_CASE("only the 1280 count fails") {
    const auto &r = default_report();
    CHECK(r.failures() == 1);
    const auto *count = find(r, "5.count");
    REQUIRE(count != nullptr);
    CHECK_FALSE(count->pass);
    CHECK(count->expected == "1280");
    CHECK(count->computed == "320");
    for (const auto &c : r.claims) {
        if (c.id != "5.count") {
            CHECK_MESSAGE(c.pass, c.id << ": expected " << c.expected << ", computed " << c.computed);
        }
    }
}

TEST_CASE("census notes") {
    std::map<std::string, std::string> notes;
    for (const auto &n : default_report().notes) {
        notes[n.id] = n.value;
    }
    CHECK(notes["5.census.orthogonal_eleven"] == "1280");
    CHECK(notes["5.census.orthogonal_distinct_eleven"] == "320");
    CHECK(notes["5.bijection"] == "320 / 320 / yes");
    CHECK(notes["orbit.shapes"] == "{7 contexts, 13 vectors: 2560, 9 contexts, 14 vectors: 3840, 9 contexts, 15 vectors: 5120}");
}

TEST_CASE("reports are deterministic and formats agree") {
    const auto again = run_verify_all();
    std::ostringstream a, b, ja, jb;
    default_report().write_text(a);
    again.write_text(b);
    CHECK(a.str() == b.str());
    default_report().write_json(ja);
    again.write_json(jb);
    CHECK(ja.str() == jb.str());

    const auto doc = nlohmann::json::parse(ja.str());
    CHECK(doc["pass"] == false);
    CHECK(doc["claims_failed"] == 1);
    REQUIRE(doc["claims"].size() == default_report().claims.size());
    for (std::size_t k = 0; k < doc["claims"].size(); ++k) {
        CHECK(doc["claims"][k]["id"] == default_report().claims[k].id);
        CHECK(doc["claims"][k]["pass"] == default_report().claims[k].pass);
    }
}

TEST_CASE("dropping a certificate column breaks the certificate claims") {
    VerifyOptions opts;
    opts.drop_octad = 3;
    const auto r = run_verify_all(opts);
    CHECK_FALSE(find(r, "6.valid")->pass);
    CHECK_FALSE(find(r, "5.map")->pass);
    CHECK(find(r, "1.vectors")->pass);
    CHECK(find(r, "4.octads")->pass);

    opts.drop_octad = 0;
    CHECK_THROWS_AS(run_verify_all(opts), std::invalid_argument);
    opts.drop_octad = 12;
    CHECK_THROWS_AS(run_verify_all(opts), std::invalid_argument);
}
