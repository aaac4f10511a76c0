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

// ks8: build, enumerate and verify the 8-dimensional Kochen-Specker
// construction from the command line.
//
// Exit status: 0 success / all claims pass, 1 a claim fails, 2 usage or
// input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ks8/context_enumerator.hpp"
#include "ks8/ks_engine.hpp"
#include "ks8/mermin.hpp"
#include "ks8/reference_instance.hpp"
#include "ks8/report.hpp"
#include "ks8/state_specific.hpp"

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ofstream open_out(const std::filesystem::path &p) {
    std::ofstream f(p);
    if (!f) {
        throw UsageError("cannot write " + p.string());
    }
    return f;
}

std::ifstream open_in(const std::string &p) {
    std::ifstream f(p);
    if (!f) {
        throw UsageError("cannot read " + p);
    }
    return f;
}

// Writes to --out when given, stdout otherwise.
template <typename Fn>
void emit(const std::string &out, Fn &&fn) {
    if (out.empty()) {
        fn(std::cout);
    } else {
        auto f = open_out(out);
        fn(f);
    }
}

ks8::ContextHypergraph certificate_hypergraph(const ks8::Instance &inst) {
    std::vector<std::size_t> cert;
    for (const auto &c : inst.certificate_octads()) {
        if (!c) {
            throw std::runtime_error("certificate column missing from the catalog");
        }
        cert.push_back(*c);
    }
    std::sort(cert.begin(), cert.end());
    return inst.catalog_hypergraph.restrict_to(cert);
}

ks8::ContextHypergraph named_hypergraph(const ks8::Instance &inst, const std::string &name) {
    if (name == "catalog") {
        return inst.catalog_hypergraph;
    }
    if (name == "certificate") {
        return certificate_hypergraph(inst);
    }
    if (name == "defining") {
        std::vector<std::size_t> def;
        for (const auto &d : inst.system.defining) {
            def.push_back(*inst.catalog.index_of(d));
        }
        std::sort(def.begin(), def.end());
        return inst.catalog_hypergraph.restrict_to(def);
    }
    if (name == "merged") {
        return ks8::merge_to_planes(certificate_hypergraph(inst), ks8::reference::plane_spec());
    }
    throw UsageError("unknown hypergraph '" + name + "' (catalog, certificate, defining, merged)");
}

int cmd_generate(int qubits, const std::string &out_dir) {
    if (qubits < 2) {
        throw UsageError("--qubits must be at least 2");
    }
    const auto bases = ks8::generate_defining_bases(qubits);
    const auto system = ks8::VectorSystem::from_bases(bases);
    std::filesystem::path dir = out_dir.empty() ? std::filesystem::path(".") : std::filesystem::path(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    {
        auto f = open_out(dir / "vectors.txt");
        f << "# " << system.vertices.size() << " vectors from " << qubits << " qubits\n";
        ks8::write_vectors(f, system.vertices);
    }
    {
        auto f = open_out(dir / "defining_octads.txt");
        ks8::OctadCatalog defining{system.defining, {}};
        ks8::write_catalog(f, ks8::OrthogonalityGraph(system.vertices), defining);
    }
    std::cout << system.vertices.size() << " vectors, " << bases.size() << " defining bases written to "
              << dir.string() << "\n";
    for (const auto &b : bases) {
        std::cout << "  ";
        for (const auto &w : b.generators.words) {
            std::cout << w.to_string() << ' ';
        }
        std::cout << "-> " << b.basis.size() << " vectors\n";
    }
    return 0;
}

int cmd_octads(const std::string &out) {
    const auto inst = ks8::Instance::build();
    emit(out, [&](std::ostream &o) { ks8::write_catalog(o, inst.graph, inst.catalog); });
    if (!out.empty()) {
        std::cout << inst.catalog.octads.size() << " octads written to " << out << "\n";
    }
    return 0;
}

int cmd_quadruples(const std::string &out) {
    using F = ks8::QuadrupleCensus::Flag;
    const auto inst = ks8::Instance::build();
    const auto q = ks8::enumerate_quadruples(inst.system, inst.graph, inst.catalog, 11);
    emit(out, [&](std::ostream &o) {
        const auto &c = q.census;
        o << "4-subsets                                     " << c.total() << "\n";
        o << "mutually orthogonal                           " << c.count(F::mutually_orthogonal) << "\n";
        o << "  + distinct defining octads                  "
          << c.count(F::mutually_orthogonal | F::distinct_bases) << "\n";
        o << "  + exactly 11 retained octads                "
          << c.count(F::mutually_orthogonal | F::retained_target) << "\n";
        o << "  + distinct + exactly 11 retained            "
          << c.count(F::mutually_orthogonal | F::distinct_bases | F::retained_target) << "\n";
        o << "  + distinct + 11 retained + certificate      " << q.selections.size() << "\n";
        for (const auto &s : q.selections) {
            for (auto v : s.excluded) {
                o << inst.system.vertices[v].to_compact() << ' ';
            }
            o << "|";
            for (auto k : s.retained_octads) {
                o << ' ' << k;
            }
            o << "\n";
        }
    });
    return 0;
}

int cmd_verify_all(const std::string &format, const std::string &out, std::optional<std::size_t> drop) {
    ks8::VerifyOptions opts;
    opts.drop_octad = drop;
    ks8::Report report;
    try {
        report = ks8::run_verify_all(opts);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    emit(out, [&](std::ostream &o) {
        if (format == "json") {
            report.write_json(o);
        } else {
            report.write_text(o);
        }
    });
    if (!out.empty()) {
        std::cout << (report.claims.size() - report.failures()) << "/" << report.claims.size()
                  << " claims pass; report written to " << out << "\n";
    }
    return report.all_pass() ? 0 : 1;
}

int cmd_merge(const std::string &hypergraph_file, const std::string &spec_file, const std::string &out) {
    const auto h = [&] {
        if (hypergraph_file.empty()) {
            return certificate_hypergraph(ks8::Instance::build());
        }
        auto f = open_in(hypergraph_file);
        return ks8::read_hypergraph(f);
    }();
    const auto spec = [&] {
        if (spec_file.empty()) {
            return ks8::reference::plane_spec();
        }
        auto f = open_in(spec_file);
        return ks8::PlaneSpec::parse(f);
    }();
    ks8::ContextHypergraph merged;
    try {
        merged = ks8::merge_to_planes(h, spec);
    } catch (const ks8::MalformedPlaneSpec &e) {
        std::cerr << "ks8: malformed plane spec: " << e.what() << "\n";
        return kUsage;
    }
    emit(out, [&](std::ostream &o) { ks8::write_hypergraph(o, merged); });
    std::size_t r2 = 0;
    for (const auto &p : merged.projectors()) {
        r2 += p.rank() == 2;
    }
    std::cerr << merged.num_projectors() << " projectors (" << r2 << " rank-2, " << merged.num_projectors() - r2
              << " rank-1), " << merged.num_contexts() << " contexts\n";
    return 0;
}

int cmd_state_proof(const std::string &literal, const std::string &out) {
    std::optional<ks8::ExactVector> state;
    try {
        state = ks8::ExactVector::from_line(literal);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("cannot parse state: ") + e.what());
    }
    if (state->dimension() != 8) {
        throw UsageError("state must have 8 components");
    }
    const auto inst = ks8::Instance::build();
    if (!inst.system.find(*state)) {
        std::ostringstream msg;
        msg << "state " << state->to_compact() << " is not in the catalog; valid states:";
        for (const auto &v : inst.system.vertices) {
            msg << "\n  " << v.to_line();
        }
        throw UsageError(msg.str());
    }
    std::vector<std::vector<ks8::Context>> candidates;
    {
        std::vector<ks8::Context> table;
        for (const auto &column : ks8::reference::certificate_columns()) {
            table.push_back(ks8::Context::from_rays(column));
        }
        candidates.push_back(std::move(table));
    }
    for (auto &c : inst.size11_certificates()) {
        candidates.push_back(std::move(c));
    }
    const auto proof = ks8::smallest_reduction(candidates, *state);
    if (!proof) {
        std::cerr << "ks8: no certificate contains " << state->to_compact() << "\n";
        return 1;
    }
    const auto verdict = ks8::verify_proof(*proof);
    emit(out, [&](std::ostream &o) { ks8::write_proof(o, *proof); });
    std::cerr << proof->contexts.size() << " contexts, " << proof->distinct_vectors().size()
              << " vectors; verdict: " << (verdict.ok() ? "pass" : "fail") << " (" << ks8::to_string(verdict.check)
              << (verdict.detail.empty() ? "" : ": " + verdict.detail) << ")\n";
    return verdict.ok() ? 0 : 1;
}

int cmd_search(const std::string &hypergraph_file, const std::string &name) {
    const auto h = [&] {
        if (!hypergraph_file.empty()) {
            auto f = open_in(hypergraph_file);
            return ks8::read_hypergraph(f);
        }
        return named_hypergraph(ks8::Instance::build(), name);
    }();
    ks8::SearchStats stats;
    const auto a = ks8::search_assignment(h, &stats);
    std::cout << h.num_projectors() << " projectors, " << h.num_contexts() << " contexts\n";
    std::cout << "nodes " << stats.nodes << ", propagations " << stats.propagations << "\n";
    if (!a) {
        std::cout << "no noncontextual assignment\n";
        return 0;
    }
    std::cout << "assignment, projectors with value 1:";
    for (std::size_t p = 0; p < a->values.size(); ++p) {
        if (a->values[p]) {
            std::cout << ' ' << p;
        }
    }
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Kochen-Specker construction and verification in dimension 8"};
    app.require_subcommand(1);

    int qubits = 3;
    std::string out, format = "text", hypergraph_file, spec_file, state, named = "certificate";
    std::optional<std::size_t> drop;

    auto *gen = app.add_subcommand("generate", "write the vectors and defining bases for n qubits");
    gen->add_option("--qubits", qubits, "number of qubits")->capture_default_str();
    gen->add_option("--out", out, "output directory");

    auto *oct = app.add_subcommand("octads", "write the octad catalog of the 40 vectors");
    oct->add_option("--out", out, "output file");

    auto *quad = app.add_subcommand("quadruples", "census of excluded quadruples");
    quad->add_option("--out", out, "output file");

    auto *ver = app.add_subcommand("verify-all", "regenerate everything and check every claim");
    ver->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
    ver->add_option("--out", out, "report file");
    ver->add_option("--drop-octad", drop, "leave out certificate column K (1-11)");

    auto *mer = app.add_subcommand("merge", "replace vector pairs by planes");
    mer->add_option("--hypergraph", hypergraph_file, "input hypergraph (default: the 11-octad certificate)");
    mer->add_option("--spec", spec_file, "plane spec (default: the reference spec)");
    mer->add_option("--out", out, "output file");

    auto *sp = app.add_subcommand("state-proof", "state-specific proof for a catalog vector");
    sp->add_option("state", state, "8 integers, e.g. \"1 0 0 -1 0 -1 -1 0\"")->required();
    sp->add_option("--out", out, "output file");

    auto *se = app.add_subcommand("search", "search for a noncontextual assignment");
    se->add_option("--hypergraph", hypergraph_file, "input hypergraph file");
    se->add_option("--octads", named, "catalog, certificate, defining or merged")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*gen) return cmd_generate(qubits, out);
        if (*oct) return cmd_octads(out);
        if (*quad) return cmd_quadruples(out);
        if (*ver) return cmd_verify_all(format, out, drop);
        if (*mer) return cmd_merge(hypergraph_file, spec_file, out);
        if (*sp) return cmd_state_proof(state, out);
        if (*se) return cmd_search(hypergraph_file, named);
    } catch (const UsageError &e) {
        std::cerr << "ks8: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "ks8: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
