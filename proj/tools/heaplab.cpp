#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "heaplab/boundary.hpp"
#include "heaplab/classify.hpp"
#include "heaplab/heap.hpp"
#include "heaplab/io.hpp"
#include "heaplab/props.hpp"
#include "heaplab/structure.hpp"
#include "heaplab/tl.hpp"
#include "heaplab/verify.hpp"

using nlohmann::json;

namespace {

heaplab::StructurePtr load(const std::string& path) {
    auto parsed = heaplab::load_structure_file(path);
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
    return parsed.structure;
}

// Word arguments may arrive as one quoted token ("1 3 2 1 3") or as
// separate tokens; both spell the same whitespace-separated word.
heaplab::Heap heap_from_args(const heaplab::StructurePtr& s, const std::vector<std::string>& args) {
    std::string joined;
    for (const auto& a : args) {
        if (!joined.empty()) joined.push_back(' ');
        joined += a;
    }
    return heaplab::Heap::from_word(s, joined);
}

heaplab::FieldChoice field_from(int characteristic) {
    return characteristic == 0 ? heaplab::FieldChoice::rationals()
                               : heaplab::FieldChoice::prime(characteristic);
}

int run_nf(const std::string& path, const std::vector<std::string>& word, bool as_json) {
    auto s = load(path);
    heaplab::Heap e = heap_from_args(s, word);
    heaplab::TLMonomial m = heaplab::tl_reduce(e);
    if (as_json) {
        json j{{"word", e.canonical_word()},
               {"cf", e.factor_string()},
               {"delta_exponent", m.delta_exponent},
               {"reduced_word", m.heap.canonical_word()},
               {"reduced_cf", m.heap.factor_string()},
               {"nf", m.to_string()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << m.to_string() << "\n";
        std::cout << e.factor_string() << "\n";
    }
    return 0;
}

struct CheckFlags {
    bool p2 = false, p1 = false, acyclic = false, chains = false, matrix = false;
    bool as_json = false, with_assert = false;
    int characteristic = 0;
};

int run_check(const std::string& path, const std::vector<std::string>& word, CheckFlags f) {
    if (!f.p2 && !f.p1 && !f.acyclic && !f.chains && !f.matrix) f.p2 = f.p1 = true;
    auto s = load(path);
    auto field = field_from(f.characteristic);
    heaplab::Heap e = heap_from_args(s, word);

    std::optional<bool> p2, acyclic;
    std::optional<heaplab::P1Result> p1;
    std::vector<heaplab::Chain> chains;
    if (f.p2) p2 = heaplab::has_p2(e);
    if (f.p1) p1 = heaplab::p1_search(e);
    if (f.acyclic || f.matrix) acyclic = heaplab::is_acyclic(e, field);
    if (f.chains) chains = heaplab::balanced_convex_chains(e);

    heaplab::BoundaryMap bmap;
    int kernel = 0;
    if (f.matrix) {
        bmap = heaplab::boundary_map(e);
        kernel = heaplab::kernel_dim(bmap, field);
    }

    if (f.as_json) {
        json j{{"word", e.canonical_word()}, {"cf", e.factor_string()}};
        if (p2) j["p2"] = *p2;
        if (p1) {
            j["p1"] = p1->dismantlable;
            j["dismantling"] = p1->dismantlable ? json(p1->removals) : json(nullptr);
        }
        if (acyclic) {
            j["acyclic"] = *acyclic;
            j["characteristic"] = f.characteristic;
        }
        if (f.chains) j["chains"] = chains;
        if (f.matrix) {
            j["edges"] = bmap.edges;
            j["matrix"] = bmap.dense();
            j["kernel_dim"] = kernel;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::ostringstream line;
        auto flag = [&line](const char* name, bool value) {
            if (line.tellp() > 0) line << ' ';
            line << name << '=' << (value ? "true" : "false");
        };
        if (p2) flag("P2", *p2);
        if (p1) flag("P1", p1->dismantlable);
        if (f.acyclic && acyclic) flag("acyclic", *acyclic);
        if (line.tellp() > 0) std::cout << line.str() << "\n";
        if (p1) {
            if (!p1->dismantlable) {
                std::cout << "dismantling: none\n";
            } else if (p1->removals.empty()) {
                std::cout << "dismantling: trivial\n";
            } else {
                std::cout << "dismantling:";
                for (int v : p1->removals) std::cout << ' ' << v;
                std::cout << "\n";
            }
        }
        if (f.chains) {
            if (chains.empty()) std::cout << "chains: none\n";
            for (const auto& c : chains) {
                std::cout << "chain:";
                for (int v : c) std::cout << ' ' << v;
                std::cout << "\n";
            }
        }
        if (f.matrix) {
            if (bmap.edges.empty()) {
                std::cout << "edges: none\n";
            } else {
                std::cout << "edges:";
                for (auto [x, y] : bmap.edges) std::cout << " (" << x << "," << y << ")";
                std::cout << "\nmatrix:\n";
                for (const auto& row : bmap.dense()) {
                    for (std::size_t c = 0; c < row.size(); ++c)
                        std::cout << (c ? " " : "") << row[c];
                    std::cout << "\n";
                }
            }
            std::cout << "kernel: " << kernel << "\n";
        }
    }

    if (f.with_assert) {
        bool failed = (p2 && !*p2) || (p1 && !p1->dismantlable) || (f.acyclic && acyclic && !*acyclic);
        if (failed) return 1;
    }
    return 0;
}

int run_classify(const std::string& path, bool witness, bool as_json) {
    auto s = load(path);
    auto classified = heaplab::classify(s);
    bool all_regular = true;
    json comps = json::array();

    for (const auto& cc : classified) {
        all_regular = all_regular && cc.tag.is_regular();
        std::optional<heaplab::Witness> w;
        if (witness && !cc.tag.is_regular())
            w = heaplab::nonregular_witness(s, cc.component, cc.tag);

        if (as_json) {
            std::vector<std::string> names;
            for (int p : cc.component.pieces) names.push_back(s->piece_name(p));
            json jc{{"pieces", names},
                    {"tag", cc.tag.to_string()},
                    {"regular", cc.tag.is_regular()},
                    {"reason", cc.tag.reason ? json(to_string(*cc.tag.reason)) : json(nullptr)}};
            if (w) jc["witness"] = json{{"word", w->word()}, {"cf", w->heap.factor_string()}};
            comps.push_back(std::move(jc));
        } else {
            std::cout << cc.tag.to_string() << ": property R = "
                      << (cc.tag.is_regular() ? "true" : "false") << "\n";
            if (w) std::cout << "witness: " << w->heap.factor_string() << "\n";
        }
    }

    if (as_json) {
        json j{{"components", comps}, {"property_r", all_regular}};
        std::cout << j.dump(2) << "\n";
    } else if (classified.size() > 1) {
        std::cout << "overall: property R = " << (all_regular ? "true" : "false") << "\n";
    }
    return 0;
}

struct VerifyFlags {
    std::string suite = "all";
    int max_size = -1;   // -1 = pick per suite
    int characteristic = 0;
    std::string json_path;
    std::uint64_t max_heaps = 0;
    double time_budget = 0.0;
};

int run_verify(const std::string& path, const VerifyFlags& f) {
    auto s = load(path);
    auto field = field_from(f.characteristic);

    std::vector<std::string> suites;
    if (f.suite == "all") suites = {"universal", "regularity", "kernel"};
    else suites = {f.suite};

    bool ok = true;
    json out = json::array();
    for (const auto& name : suites) {
        heaplab::EnumerationSpec spec;
        spec.structure = s;
        spec.max_heaps = f.max_heaps;
        spec.time_budget_seconds = f.time_budget;
        if (f.max_size >= 0)
            spec.max_vertices = f.max_size;
        else
            // A non-regular structure needs room for a P2-but-not-P1 heap to
            // show up; witnesses can take up to a dozen vertices.
            spec.max_vertices = (name == "regularity" && !heaplab::has_property_r(s)) ? 12 : 8;

        auto report = heaplab::run_suite(name, spec, field);
        ok = ok && report.passed();
        // Keep stdout pure JSON when the report is written there.
        (f.json_path == "-" ? std::cerr : std::cout) << report.text_summary();
        out.push_back(report.to_json());
    }

    if (!f.json_path.empty()) {
        if (f.json_path == "-") {
            std::cout << out.dump(2) << "\n";
        } else {
            std::ofstream jf(f.json_path);
            if (!jf) {
                std::cerr << "error: cannot write " << f.json_path << "\n";
                return 2;
            }
            jf << out.dump(2) << "\n";
        }
    }
    (f.json_path == "-" ? std::cerr : std::cout) << "verify: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int run_export_dot(const std::string& path, const std::vector<std::string>& word) {
    auto s = load(path);
    if (word.empty()) {
        std::cout << heaplab::structure_dot(*s);
    } else {
        std::cout << heaplab::heap_dot(heap_from_args(s, word));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"heaps of pieces toolkit"};
    app.require_subcommand(1);

    std::string nf_path;
    std::vector<std::string> nf_word;
    bool nf_json = false;
    auto* nf = app.add_subcommand("nf", "canonical factorization and algebra normal form");
    nf->add_option("structure", nf_path, "structure file")->required();
    nf->add_option("word", nf_word, "heap word, whitespace separated");
    nf->add_flag("--json", nf_json, "machine readable output");

    std::string check_path;
    std::vector<std::string> check_word;
    CheckFlags cf;
    auto* check = app.add_subcommand("check", "decide properties of one heap");
    check->add_option("structure", check_path, "structure file")->required();
    check->add_option("word", check_word, "heap word, whitespace separated");
    check->add_flag("--p2", cf.p2, "balanced convex chain freeness");
    check->add_flag("--p1", cf.p1, "dismantlability, with removal certificate");
    check->add_flag("--acyclic", cf.acyclic, "kernel of the boundary map is zero");
    check->add_flag("--chains", cf.chains, "list balanced convex chains of length 2 and 3");
    check->add_flag("--matrix", cf.matrix, "dump the boundary matrix and kernel dimension");
    check->add_option("--char", cf.characteristic, "field characteristic (0 or a prime)")
        ->default_val(0);
    check->add_flag("--json", cf.as_json, "machine readable output");
    check->add_flag("--assert", cf.with_assert, "exit 1 unless every requested property holds");

    std::string classify_path;
    bool classify_witness = false, classify_json = false;
    auto* classify = app.add_subcommand("classify", "classify the concurrency graph components");
    classify->add_option("structure", classify_path, "structure file")->required();
    classify->add_flag("--witness", classify_witness,
                       "construct and verify a P2-not-P1 heap per non-regular component");
    classify->add_flag("--json", classify_json, "machine readable output");

    std::string verify_path;
    VerifyFlags vf;
    auto* verify = app.add_subcommand("verify", "exhaustively check the theorems at desk scale");
    verify->add_option("structure", verify_path, "structure file")->required();
    verify->add_option("--suite", vf.suite, "universal, regularity, kernel or all")
        ->check(CLI::IsMember({"universal", "regularity", "kernel", "all"}))
        ->default_val("all");
    verify->add_option("--max-size", vf.max_size, "largest heap to enumerate");
    verify->add_option("--char", vf.characteristic, "field characteristic (0 or a prime)")
        ->default_val(0);
    verify->add_option("--json", vf.json_path, "write canonical JSON reports here ('-' = stdout)");
    verify->add_option("--max-heaps", vf.max_heaps, "stop after this many heaps (0 = no cap)");
    verify->add_option("--time-budget", vf.time_budget, "wall clock budget in seconds (0 = none)");

    std::string dot_path;
    std::vector<std::string> dot_word;
    auto* dot = app.add_subcommand("export-dot", "concurrency graph, or a heap diagram for a word");
    dot->add_option("structure", dot_path, "structure file")->required();
    dot->add_option("word", dot_word, "heap word, whitespace separated");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(nf)) return run_nf(nf_path, nf_word, nf_json);
        if (app.got_subcommand(check)) return run_check(check_path, check_word, cf);
        if (app.got_subcommand(classify)) return run_classify(classify_path, classify_witness, classify_json);
        if (app.got_subcommand(verify)) return run_verify(verify_path, vf);
        if (app.got_subcommand(dot)) return run_export_dot(dot_path, dot_word);
    } catch (const heaplab::parse_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::logic_error& ex) {
        std::cerr << "check failed: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}
