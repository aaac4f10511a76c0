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

#include "ks8/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ks8/reference_instance.hpp"

namespace ks8 {

namespace {

template <typename K, typename V>
std::string histogram(const std::map<K, V> &h) {
    std::ostringstream s;
    s << '{';
    bool first = true;
    for (const auto &[k, v] : h) {
        s << (first ? "" : ", ") << k << ": " << v;
        first = false;
    }
    s << '}';
    return s.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::size_t> &v) {
    std::ostringstream s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        s << (k ? " " : "") << v[k];
    }
    return s.str();
}

std::vector<std::size_t> vertex_indices(const VectorSystem &system, const std::vector<ExactVector> &rays) {
    std::vector<std::size_t> out;
    for (const auto &r : rays) {
        auto i = system.find(r);
        if (!i) {
            return {};
        }
        out.push_back(*i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Test-independent octad oracle: extends cliques in index order, checking
// inner products directly.
std::set<VertexSet> naive_octads(const std::vector<ExactVector> &v, std::size_t d) {
    std::set<VertexSet> found;
    VertexSet current;
    std::function<void(std::size_t)> extend = [&](std::size_t start) {
        if (current.size() == d) {
            found.insert(current);
            return;
        }
        for (std::size_t i = start; i < v.size(); ++i) {
            bool ok = std::all_of(current.begin(), current.end(), [&](std::size_t j) { return inner(v[i], v[j]) == 0; });
            if (ok) {
                current.push_back(i);
                extend(i + 1);
                current.pop_back();
            }
        }
    };
    extend(0);
    return found;
}

// Every odd subset of the contexts whose projector multiplicities are all even.
std::set<std::vector<std::size_t>> brute_force_certificates(const ContextHypergraph &h) {
    std::set<std::vector<std::size_t>> out;
    const std::size_t k = h.num_contexts();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        if (std::popcount(mask) % 2 == 0) {
            continue;
        }
        std::vector<std::size_t> count(h.num_projectors(), 0);
        std::vector<std::size_t> chosen;
        for (std::size_t c = 0; c < k; ++c) {
            if (mask >> c & 1) {
                chosen.push_back(c);
                for (auto p : h.contexts()[c]) {
                    ++count[p];
                }
            }
        }
        if (std::all_of(count.begin(), count.end(), [](std::size_t n) { return n % 2 == 0; })) {
            out.insert(chosen);
        }
    }
    return out;
}

std::string shape(const StateSpecificProof &p) {
    return std::to_string(p.contexts.size()) + " contexts, " + std::to_string(p.distinct_vectors().size()) +
           " vectors";
}

}  // namespace

Instance Instance::build() {
    auto bases = generate_defining_bases(3);
    auto system = VectorSystem::from_bases(bases);
    OrthogonalityGraph graph(system.vertices);
    auto catalog = enumerate_octads(graph);
    auto h = ContextHypergraph::from_vertex_sets(system.vertices, catalog.octads);
    return Instance{std::move(bases), std::move(system), std::move(graph), std::move(catalog), std::move(h)};
}

std::vector<std::optional<std::size_t>> Instance::certificate_octads() const {
    std::vector<std::optional<std::size_t>> out;
    for (const auto &column : reference::certificate_columns()) {
        auto idx = vertex_indices(system, column);
        out.push_back(idx.empty() ? std::nullopt : catalog.index_of(idx));
    }
    return out;
}

std::vector<std::vector<Context>> Instance::size11_certificates() const {
    std::vector<std::vector<Context>> out;
    for (const auto &cert : find_parity_certificates(catalog_hypergraph, 11)) {
        if (cert.context_indices.size() != 11) {
            continue;
        }
        std::vector<Context> contexts;
        for (auto k : cert.context_indices) {
            contexts.push_back(catalog_hypergraph.context(k));
        }
        out.push_back(std::move(contexts));
    }
    return out;
}

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
    return static_cast<std::size_t>(std::count_if(claims.begin(), claims.end(), [](const Claim &c) { return !c.pass; }));
}

void Report::claim(std::string id, std::string section, std::string description, std::string expected,
                   std::string computed) {
    const bool pass = expected == computed;
    claims.push_back(
        Claim{std::move(id), std::move(section), std::move(description), std::move(expected), std::move(computed), pass});
}

void Report::note(std::string id, std::string description, std::string value) {
    notes.push_back(Note{std::move(id), std::move(description), std::move(value)});
}

void Report::write_text(std::ostream &out) const {
    std::size_t wid = 2;
    for (const auto &c : claims) {
        wid = std::max(wid, c.id.size());
    }
    std::string section;
    for (const auto &c : claims) {
        if (c.section != section) {
            section = c.section;
            out << "\n[" << section << "]\n";
        }
        out << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(wid)) << c.id << "  "
            << c.description << "\n";
        out << std::string(6 + wid + 2, ' ') << "expected: " << c.expected << "\n";
        if (!c.pass) {
            out << std::string(6 + wid + 2, ' ') << "computed: " << c.computed << "\n";
        }
    }
    if (!notes.empty()) {
        out << "\n[notes]\n";
        for (const auto &n : notes) {
            out << "INFO  " << n.id << "  " << n.description << ": " << n.value << "\n";
        }
    }
    out << "\n" << claims.size() - failures() << "/" << claims.size() << " claims pass\n";
}

void Report::write_json(std::ostream &out) const {
    nlohmann::ordered_json doc;
    doc["schema"] = "ks8-report/1";
    doc["pass"] = all_pass();
    doc["claims_total"] = claims.size();
    doc["claims_failed"] = failures();
    auto &cs = doc["claims"] = nlohmann::ordered_json::array();
    for (const auto &c : claims) {
        cs.push_back({{"id", c.id},
                      {"section", c.section},
                      {"description", c.description},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"pass", c.pass}});
    }
    auto &ns = doc["notes"] = nlohmann::ordered_json::array();
    for (const auto &n : notes) {
        ns.push_back({{"id", n.id}, {"description", n.description}, {"value", n.value}});
    }
    out << doc.dump(2) << "\n";
}

Report run_verify_all(const VerifyOptions &options) {
    Report r;
    const auto inst = Instance::build();
    const auto &sys = inst.system;
    const auto &cat = inst.catalog;
    const auto &H = inst.catalog_hypergraph;

    // Certificate contexts (catalog indices), optionally with one column removed.
    const auto columns = inst.certificate_octads();
    if (options.drop_octad && (*options.drop_octad < 1 || *options.drop_octad > columns.size())) {
        throw std::invalid_argument("--drop-octad must be between 1 and " + std::to_string(columns.size()));
    }
    std::vector<std::size_t> cert;
    std::vector<Context> cert_contexts;  // column order
    bool columns_ok = true;
    for (std::size_t k = 0; k < columns.size(); ++k) {
        if (options.drop_octad && k + 1 == *options.drop_octad) {
            continue;
        }
        if (columns[k]) {
            cert.push_back(*columns[k]);
            cert_contexts.push_back(H.context(*columns[k]));
        } else {
            columns_ok = false;
        }
    }
    std::sort(cert.begin(), cert.end());

    // 1. Construction
    {
        const auto defining = generate_defining_octads(3);
        std::size_t total = 0;
        for (const auto &b : inst.bases) {
            total += b.basis.size();
        }
        r.claim("1.vectors", "construction", "distinct canonical vectors of the defining octads", "40",
                std::to_string(sys.vertices.size()));
        r.claim("1.octads", "construction", "defining octads, pairwise disjoint", "5 disjoint",
                std::to_string(defining.size()) + (total == sys.vertices.size() ? " disjoint" : " overlapping"));
        std::set<VertexSet> generated(sys.defining.begin(), sys.defining.end());
        std::size_t matched = 0;
        for (const auto &block : reference::defining_blocks()) {
            auto idx = vertex_indices(sys, block);
            matched += !idx.empty() && generated.count(idx);
        }
        r.claim("1.blocks", "construction", "defining octads equal the reference blocks as sets", "5/5",
                std::to_string(matched) + "/5");
    }

    // 2. Operator algebra
    {
        const auto ops = reference::mermin_operators();
        std::size_t commuting = 0, pairs = 0;
        for (std::size_t i = 0; i < ops.words.size(); ++i) {
            for (std::size_t j = i + 1; j < ops.words.size(); ++j) {
                ++pairs;
                commuting += commutes(ops.words[i], ops.words[j]);
            }
        }
        r.claim("2.commute", "operators", "ZZZ, ZXX, XZX, XXZ pairwise commute", "6/6",
                std::to_string(commuting) + "/" + std::to_string(pairs));
        std::string sign;
        try {
            sign = std::to_string(product_sign(ops));
        } catch (const std::exception &e) {
            sign = e.what();
        }
        r.claim("2.product", "operators", "product of the four words is sign * identity", "-1", sign);
    }

    // 3. Symmetry statistics
    const auto stats = compute_statistics(sys, inst.graph, cat);
    {
        r.claim("3.degree", "statistics", "orthogonal neighbours per vector", "{23: 40}",
                histogram(stats.degree_histogram));
        r.claim("3.decomposition", "statistics", "neighbours split by basis (own + others)", "{7+4+4+4+4: 40}",
                histogram(stats.decomposition_histogram));
        r.claim("3.non_orthogonal", "statistics", "non-orthogonal others per vector", "{16: 40}",
                histogram(stats.non_orthogonal_histogram));
        r.claim("3.inner", "statistics", "|inner| over ordered non-orthogonal pairs", "{2: 640}",
                histogram(stats.non_orthogonal_inner_abs));
        r.note("3.angles", "orthogonal / half-angle / other unordered pairs",
               std::to_string(stats.orthogonal_pairs) + " / " + std::to_string(stats.half_angle_pairs) + " / " +
                   std::to_string(stats.other_angle_pairs));
    }

    // 4. Catalog
    {
        r.claim("4.octads", "catalog", "orthogonal octads among the 40 vectors", "25", std::to_string(stats.octads));
        r.claim("4.membership", "catalog", "octads containing each vector", "{5: 40}",
                histogram(stats.membership_histogram));
        std::size_t defining = 0;
        for (const auto &d : sys.defining) {
            defining += cat.index_of(d).has_value();
        }
        r.claim("4.defining", "catalog", "defining octads present in the catalog", "5/5",
                std::to_string(defining) + "/5");
        std::size_t present = 0;
        for (const auto &c : columns) {
            present += c.has_value();
        }
        r.claim("4.certificate_columns", "catalog", "certificate columns present in the catalog",
                std::to_string(columns.size()) + "/" + std::to_string(columns.size()),
                std::to_string(present) + "/" + std::to_string(columns.size()));
    }

    // 5. Quadruples
    const auto quads = enumerate_quadruples(sys, inst.graph, cat, 11);
    const auto size11 = [&] {
        std::vector<std::vector<std::size_t>> out;
        for (const auto &c : find_parity_certificates(H, 11)) {
            if (c.context_indices.size() == 11) {
                out.push_back(c.context_indices);
            }
        }
        return out;
    }();
    {
        using F = QuadrupleCensus::Flag;
        const auto &cs = quads.census;
        r.claim("5.count", "quadruples",
                "orthogonal quadruples from distinct defining octads whose 11 retained octads form a certificate",
                "1280", std::to_string(quads.selections.size()));
        r.note("5.census.orthogonal", "mutually orthogonal", std::to_string(cs.count(F::mutually_orthogonal)));
        r.note("5.census.orthogonal_distinct", "mutually orthogonal, distinct defining octads",
               std::to_string(cs.count(F::mutually_orthogonal | F::distinct_bases)));
        r.note("5.census.orthogonal_eleven", "mutually orthogonal, exactly 11 retained octads",
               std::to_string(cs.count(F::mutually_orthogonal | F::retained_target)));
        r.note("5.census.orthogonal_distinct_eleven", "mutually orthogonal, distinct, exactly 11 retained",
               std::to_string(cs.count(F::mutually_orthogonal | F::distinct_bases | F::retained_target)));
        r.note("5.census.eleven_valid", "exactly 11 retained forming a certificate (any quadruple)",
               std::to_string(cs.count(F::retained_target | F::valid_certificate)));
        r.note("5.census.total", "4-subsets examined", std::to_string(cs.total()));

        auto q = vertex_indices(sys, reference::excluded_quadruple());
        std::string mapped = "not a catalog quadruple";
        if (!q.empty()) {
            auto kept = retained_octads(cat, q);
            mapped = kept == cert ? "certificate columns" : "octads " + join(kept);
        }
        r.claim("5.map", "quadruples", "the excluded quadruple leaves exactly the certificate columns",
                "certificate columns", columns_ok ? mapped : "certificate columns missing from catalog");

        std::set<std::vector<std::size_t>> from_quads;
        for (const auto &s : quads.selections) {
            from_quads.insert(s.retained_octads);
        }
        std::set<std::vector<std::size_t>> certs(size11.begin(), size11.end());
        r.note("5.bijection", "size-11 certificates / full-conjunction quadruples / retained sets equal",
               std::to_string(certs.size()) + " / " + std::to_string(quads.selections.size()) + " / " +
                   yes_no(from_quads == certs && from_quads.size() == quads.selections.size()));
    }

    // 6. Parity proof
    {
        const auto pc = ParityCertificate::from_contexts(H, cert);
        std::map<std::size_t, std::size_t> mult_hist;
        for (const auto &[p, m] : pc.multiplicity) {
            ++mult_hist[m];
        }
        r.claim("6.valid", "parity", "certificate: odd context count, even multiplicities", "yes",
                yes_no(is_valid_certificate(H, pc)));
        r.claim("6.multiplicities", "parity", "vectors by multiplicity in the certificate", "{2: 28, 4: 8}",
                histogram(mult_hist));

        using clock = std::chrono::steady_clock;
        const auto t0 = clock::now();
        const auto on_cert = search_assignment(H.restrict_to(cert));
        const auto on_all = search_assignment(H);
        std::vector<std::size_t> def;
        for (const auto &d : sys.defining) {
            if (auto i = cat.index_of(d)) {
                def.push_back(*i);
            }
        }
        std::sort(def.begin(), def.end());
        const auto on_def = search_assignment(H.restrict_to(def));
        const double secs = std::chrono::duration<double>(clock::now() - t0).count();

        r.claim("6.search_certificate", "parity", "noncontextual assignment on the certificate octads", "none",
                on_cert ? "found" : "none");
        r.claim("6.search_catalog", "parity", "noncontextual assignment on all 25 octads", "none",
                on_all ? "found" : "none");
        r.claim("6.search_defining", "parity", "noncontextual assignment on the 5 defining octads", "found",
                on_def && on_def->satisfies(H.restrict_to(def)) ? "found" : "none");
        std::ostringstream t;
        t << std::fixed << std::setprecision(2) << secs << " s";
        r.claim("6.time", "parity", "three exhaustive searches", "under 10 s", secs < 10.0 ? "under 10 s" : t.str());
    }

    // 7. Merge
    {
        std::string projectors, identity, valid, search;
        try {
            const auto merged = merge_to_planes(H.restrict_to(cert), reference::plane_spec());
            std::size_t r1 = 0, r2 = 0;
            for (const auto &p : merged.projectors()) {
                (p.rank() == 1 ? r1 : r2) += 1;
            }
            projectors = std::to_string(merged.num_projectors()) + " (" + std::to_string(r2) + " rank-2, " +
                         std::to_string(r1) + " rank-1)";
            std::size_t ok = 0;
            for (std::size_t k = 0; k < merged.num_contexts(); ++k) {
                ok += is_resolution_of_identity(merged.context(k));
            }
            identity = std::to_string(ok) + "/" + std::to_string(merged.num_contexts());
            std::vector<std::size_t> every(merged.num_contexts());
            std::iota(every.begin(), every.end(), std::size_t{0});
            valid = yes_no(is_valid_certificate(merged, ParityCertificate::from_contexts(merged, every)));
            search = search_assignment(merged) ? "found" : "none";
        } catch (const std::exception &e) {
            projectors = identity = valid = search = std::string("merge failed: ") + e.what();
        }
        r.claim("7.projectors", "merge", "projectors after merging 20 vectors into 14 planes",
                "30 (14 rank-2, 16 rank-1)", projectors);
        r.claim("7.identity", "merge", "merged contexts that resolve the identity", "11/11", identity);
        r.claim("7.valid", "merge", "merged contexts still form a parity certificate", "yes", valid);
        r.claim("7.search", "merge", "noncontextual assignment on the merged contexts", "none", search);
    }

    // 8. State-specific
    {
        std::string shape_s, expansions, mult, search;
        try {
            const auto proof = reduce_by_state(cert_contexts, reference::proof_state());
            shape_s = shape(proof);
            const auto printed = reference::state_expansions();
            std::vector<bool> used(proof.contexts.size(), false);
            std::size_t matched = 0;
            for (const auto &eq : printed) {
                std::vector<std::pair<ExactVector, int>> want;
                for (std::size_t i = 0; i < eq.vectors.size(); ++i) {
                    want.emplace_back(eq.vectors[i], eq.signs[i]);
                }
                std::sort(want.begin(), want.end());
                for (std::size_t k = 0; k < proof.contexts.size(); ++k) {
                    std::vector<std::pair<ExactVector, int>> have;
                    for (std::size_t i = 0; i < proof.contexts[k].vectors.size(); ++i) {
                        have.emplace_back(proof.contexts[k].vectors[i], proof.contexts[k].signs[i]);
                    }
                    if (!used[k] && have == want) {
                        used[k] = true;
                        ++matched;
                        break;
                    }
                }
            }
            expansions = std::to_string(matched) + "/" + std::to_string(printed.size()) + " of " +
                         std::to_string(proof.contexts.size());
            std::map<ExactVector, std::size_t> count;
            for (const auto &c : proof.contexts) {
                for (const auto &v : c.vectors) {
                    ++count[v];
                }
            }
            std::map<std::size_t, std::size_t> hist;
            for (const auto &[v, n] : count) {
                ++hist[n];
            }
            mult = histogram(hist);
            search = search_assignment(proof.hypergraph()) ? "found" : "none";
            const auto verdict = verify_proof(proof);
            r.note("8.verdict", "verify_proof", std::string(to_string(verdict.check)));
        } catch (const std::exception &e) {
            shape_s = expansions = mult = search = std::string("reduction failed: ") + e.what();
        }
        r.claim("8.shape", "state", "reduction by 100-10-1-10", "7 contexts, 13 vectors", shape_s);
        r.claim("8.expansions", "state", "printed signed expansions of 2 * state reproduced exactly", "7/7 of 7",
                expansions);
        r.claim("8.multiplicities", "state", "vectors by multiplicity in the reduced proof", "{2: 12, 4: 1}", mult);
        r.claim("8.search", "state", "noncontextual assignment on the reduced contexts", "none", search);
        r.note("8.ratio", "vectors per dimension in the reduced proof", "13/8");
    }

    // 9. Oracle equivalence
    {
        std::mt19937_64 rng(0x6b7338);
        std::size_t agree = 0, trials = 0;
        auto check_octads = [&](const std::vector<ExactVector> &v) {
            ++trials;
            OrthogonalityGraph g(v);
            auto fast = enumerate_octads(g);
            std::set<VertexSet> a(fast.octads.begin(), fast.octads.end());
            agree += a == naive_octads(v, 8) && a.size() == fast.octads.size();
        };
        check_octads(sys.vertices);
        for (int t = 0; t < 10; ++t) {
            std::vector<ExactVector> v = sys.vertices;
            std::shuffle(v.begin(), v.end(), rng);
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(24 + rng() % 13), v.end());
            check_octads(v);
        }
        r.claim("9.octads", "oracles", "bitset octad enumeration equals naive clique search (full + 10 random)",
                "11/11", std::to_string(agree) + "/" + std::to_string(trials));

        std::size_t same = 0, runs = 0;
        for (int t = 0; t < 10; ++t) {
            std::vector<std::size_t> pick(cat.octads.size());
            std::iota(pick.begin(), pick.end(), std::size_t{0});
            std::shuffle(pick.begin(), pick.end(), rng);
            pick.resize(std::min<std::size_t>(pick.size(), 6 + rng() % 5));
            std::sort(pick.begin(), pick.end());
            const auto sub = H.restrict_to(pick);
            std::set<std::vector<std::size_t>> a;
            for (const auto &c : find_parity_certificates(sub, sub.num_contexts())) {
                a.insert(c.context_indices);
            }
            ++runs;
            same += a == brute_force_certificates(sub);
        }
        {
            // Ten certificate octads: a sub-hypergraph dense in shared vectors.
            std::vector<std::size_t> pick = cert;
            pick.resize(std::min<std::size_t>(pick.size(), 10));
            const auto sub = H.restrict_to(pick);
            std::set<std::vector<std::size_t>> a;
            for (const auto &c : find_parity_certificates(sub, sub.num_contexts())) {
                a.insert(c.context_indices);
            }
            ++runs;
            same += a == brute_force_certificates(sub);
        }
        r.claim("9.certificates", "oracles", "GF(2) kernel certificates equal brute-force subset parity (11 runs)",
                "11/11", std::to_string(same) + "/" + std::to_string(runs));
    }

    // 10. Operator-level contradiction
    {
        const auto census = factor_assignment_census(reference::mermin_operators());
        r.claim("10.factor_values", "operator-contradiction",
                "sign assignments to the six factors consistent with the product -1", "0 of 64",
                std::to_string(census.consistent) + " of " + std::to_string(census.assignments_tested));
    }

    // Orbit of the state reduction over all size-11 certificates and their vectors.
    {
        std::map<std::string, std::size_t> shapes;
        for (const auto &ids : size11) {
            std::vector<Context> contexts;
            std::set<ExactVector> used;
            for (auto k : ids) {
                contexts.push_back(H.context(k));
                for (auto p : H.contexts()[k]) {
                    used.insert(H.projectors()[p].span().front());
                }
            }
            for (const auto &state : used) {
                ++shapes[shape(reduce_by_state(contexts, state))];
            }
        }
        r.note("orbit.shapes", "reduction shapes over every size-11 certificate and each of its vectors",
               histogram(shapes));
    }
    return r;
}

}  // namespace ks8
