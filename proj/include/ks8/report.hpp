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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ks8/context_enumerator.hpp"
#include "ks8/ks_engine.hpp"
#include "ks8/mermin.hpp"
#include "ks8/state_specific.hpp"

namespace ks8 {

/// Everything derived from the three-qubit construction.
struct Instance {
    std::vector<DefiningBasis> bases;
    VectorSystem system;
    OrthogonalityGraph graph;
    OctadCatalog catalog;
    ContextHypergraph catalog_hypergraph;  ///< one context per catalog octad, vertex order

    static Instance build();

    /// Catalog index of each reference certificate column; nullopt for a
    /// column that is not a catalog octad.
    std::vector<std::optional<std::size_t>> certificate_octads() const;

    /// Contexts of all size-11 parity certificates of the catalog, in
    /// canonical order.
    std::vector<std::vector<Context>> size11_certificates() const;
};

struct Claim {
    std::string id;
    std::string section;
    std::string description;
    std::string expected;
    std::string computed;
    bool pass = false;
};

/// Informational line: measured, no pass/fail.
struct Note {
    std::string id;
    std::string description;
    std::string value;
};

struct Report {
    std::vector<Claim> claims;
    std::vector<Note> notes;

    bool all_pass() const;
    std::size_t failures() const;

    void claim(std::string id, std::string section, std::string description, std::string expected,
               std::string computed);
    void note(std::string id, std::string description, std::string value);

    void write_text(std::ostream &out) const;
    void write_json(std::ostream &out) const;
};

struct VerifyOptions {
    /// 1-based certificate column to leave out (diagnostic).
    std::optional<std::size_t> drop_octad;
};

/// Regenerates the instance and checks every claim. Deterministic.
Report run_verify_all(const VerifyOptions &options = {});

}  // namespace ks8
