#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heaplab/boundary.hpp"
#include "heaplab/classify.hpp"
#include "heaplab/enumerate.hpp"
#include "heaplab/families.hpp"
#include "heaplab/heap.hpp"
#include "heaplab/io.hpp"
#include "heaplab/props.hpp"
#include "heaplab/structure.hpp"
#include "heaplab/tl.hpp"
#include "heaplab/verify.hpp"

namespace py = pybind11;
using namespace heaplab;

namespace {

// Thin handle so the bindings never hand pybind11 a shared_ptr-to-const
// holder directly.
struct PyStructure {
    StructurePtr p;
};

FieldChoice field_of(int characteristic) {
    return characteristic == 0 ? FieldChoice::rationals() : FieldChoice::prime(characteristic);
}

std::vector<int> piece_indices(const StructurePtr& s, const std::vector<std::string>& names) {
    std::vector<int> ids;
    ids.reserve(names.size());
    for (const auto& n : names) ids.push_back(s->require_piece(n));
    return ids;
}

py::object json_to_py(const nlohmann::json& j) {
    using value_t = nlohmann::json::value_t;
    switch (j.type()) {
    case value_t::object: {
        py::dict d;
        for (const auto& [k, v] : j.items()) d[py::str(k)] = json_to_py(v);
        return d;
    }
    case value_t::array: {
        py::list l;
        for (const auto& v : j) l.append(json_to_py(v));
        return l;
    }
    case value_t::string:
        return py::str(j.get<std::string>());
    case value_t::boolean:
        return py::bool_(j.get<bool>());
    case value_t::number_integer:
        return py::int_(j.get<long long>());
    case value_t::number_unsigned:
        return py::int_(j.get<unsigned long long>());
    case value_t::number_float:
        return py::float_(j.get<double>());
    default:
        return py::none();
    }
}

py::dict classified_to_dict(const StructurePtr& s, const ClassifiedComponent& cc) {
    py::dict d;
    py::list names;
    for (int p : cc.component.pieces) names.append(s->piece_name(p));
    d["pieces"] = names;
    d["tag"] = cc.tag.to_string();
    d["regular"] = cc.tag.is_regular();
    d["reason"] = cc.tag.reason ? py::object(py::str(to_string(*cc.tag.reason))) : py::none();
    return d;
}

} // namespace

PYBIND11_MODULE(_heaplab, m) {
    m.doc() = "heaps of pieces over a concurrency alphabet";

    py::class_<PyStructure>(m, "Structure",
                            "A finite set of pieces with a symmetric concurrency relation.")
        .def(py::init([](std::vector<std::string> pieces,
                         const std::vector<std::pair<std::string, std::string>>& concurrent) {
                 return PyStructure{make_structure(std::move(pieces), concurrent)};
             }),
             py::arg("pieces"),
             py::arg("concurrent") = std::vector<std::pair<std::string, std::string>>{})
        .def_static(
            "parse",
            [](const std::string& text) { return PyStructure{parse_structure_text(text).structure}; },
            py::arg("text"), "Parses the piece/conc file format from a string.")
        .def_static(
            "load",
            [](const std::string& path) { return PyStructure{load_structure_file(path).structure}; },
            py::arg("path"))
        .def("__len__", [](const PyStructure& s) { return s.p->piece_count(); })
        .def_property_readonly("pieces", [](const PyStructure& s) { return s.p->pieces(); })
        .def("signature", [](const PyStructure& s) { return s.p->signature(); })
        .def("adjacent",
             [](const PyStructure& s, const std::string& a, const std::string& b) {
                 return s.p->adjacent(s.p->require_piece(a), s.p->require_piece(b));
             })
        .def("concurrent",
             [](const PyStructure& s, const std::string& a, const std::string& b) {
                 return s.p->concurrent(s.p->require_piece(a), s.p->require_piece(b));
             })
        .def("commute",
             [](const PyStructure& s, const std::string& a, const std::string& b) {
                 return s.p->commute(s.p->require_piece(a), s.p->require_piece(b));
             })
        .def("edges",
             [](const PyStructure& s) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (auto [a, b] : s.p->edges())
                     out.emplace_back(s.p->piece_name(a), s.p->piece_name(b));
                 return out;
             })
        .def("empty", [](const PyStructure& s) { return Heap(s.p); })
        .def("heap", [](const PyStructure& s, const std::string& word) { return Heap::from_word(s.p, word); },
             py::arg("word"), "Heap of a whitespace-separated word.")
        .def("trivial",
             [](const PyStructure& s, const std::vector<std::string>& pieces) {
                 return Heap::trivial(s.p, piece_indices(s.p, pieces));
             })
        .def("layers",
             [](const PyStructure& s, const std::vector<std::vector<std::string>>& layer_names) {
                 std::vector<std::vector<int>> layers;
                 layers.reserve(layer_names.size());
                 for (const auto& l : layer_names) layers.push_back(piece_indices(s.p, l));
                 return Heap::from_layers(s.p, layers);
             },
             py::arg("layers"), "Composite of trivial heaps, one per inner list.")
        .def("dot", [](const PyStructure& s) { return structure_dot(*s.p); })
        .def("__eq__",
             [](const PyStructure& a, const PyStructure& b) { return *a.p == *b.p; })
        .def("__repr__",
             [](const PyStructure& s) { return "<Structure " + s.p->signature() + ">"; });

    py::class_<Heap>(m, "Heap", "An element of the heap monoid, stored canonically.")
        .def("__len__", &Heap::size)
        .def_property_readonly("word", &Heap::canonical_word)
        .def_property_readonly("factors", &Heap::factor_string)
        .def_property_readonly("labels",
                               [](const Heap& h) {
                                   std::vector<std::string> out;
                                   out.reserve(static_cast<std::size_t>(h.size()));
                                   for (int v = 0; v < h.size(); ++v) out.push_back(h.label_name(v));
                                   return out;
                               })
        .def("structure", [](const Heap& h) { return PyStructure{h.structure()}; })
        .def("label", [](const Heap& h, int v) { return h.label_name(v); }, py::arg("v"))
        .def("less", &Heap::less, py::arg("u"), py::arg("v"))
        .def("layers", [](const Heap& h) { return h.layers(); })
        .def("minimal", &Heap::minimal_vertices)
        .def("maximal", &Heap::maximal_vertices)
        .def("compose", &Heap::compose, py::arg("right"))
        .def("delete_vertex", &Heap::delete_vertex, py::arg("v"))
        .def("subheap",
             [](const Heap& h, const std::vector<int>& keep) { return h.subheap(keep); },
             py::arg("keep"))
        .def("opposite", &Heap::opposite)
        .def("doubled", &Heap::doubled)
        .def("dot", [](const Heap& h) { return heap_dot(h); })
        .def("__eq__", [](const Heap& a, const Heap& b) { return a == b; })
        .def("__hash__", [](const Heap& h) { return py::hash(py::str(h.key())); })
        .def("__repr__", [](const Heap& h) { return "<Heap " + h.factor_string() + ">"; });

    py::class_<TLMonomial>(m, "TLMonomial", "A scaled heap monomial delta^m * E.")
        .def_readonly("delta_exponent", &TLMonomial::delta_exponent)
        .def_readonly("heap", &TLMonomial::heap)
        .def("__str__", &TLMonomial::to_string)
        .def("__repr__", [](const TLMonomial& t) { return "<TLMonomial " + t.to_string() + ">"; });

    py::class_<DeletionEntry>(m, "DeletionEntry")
        .def_readonly("vertex", &DeletionEntry::vertex)
        .def_readonly("delta_exponent", &DeletionEntry::delta_exponent)
        .def_readonly("reduced_word", &DeletionEntry::reduced_word)
        .def_readonly("basis", &DeletionEntry::basis)
        .def("__repr__", [](const DeletionEntry& e) {
            return "<DeletionEntry vertex=" + std::to_string(e.vertex) + " delta^" +
                   std::to_string(e.delta_exponent) + " * (" + e.reduced_word + ")>";
        });

    // properties
    m.def("has_p2", &has_p2, py::arg("heap"));
    m.def("balanced_convex_chains", &balanced_convex_chains, py::arg("heap"));
    m.def("contract", &contract, py::arg("heap"), py::arg("chain"));
    m.def("has_p1", [](const Heap& h) { return has_p1(h); }, py::arg("heap"));
    m.def(
        "p1_search",
        [](const Heap& h) {
            P1Result r = p1_search(h);
            return std::make_pair(r.dismantlable, r.removals);
        },
        py::arg("heap"), "Returns (dismantlable, removal sequence).");
    m.def("descents",
          [](const Heap& h) {
              DescentSets d = descents(h);
              return std::make_pair(d.left, d.right);
          },
          py::arg("heap"), "Returns (minimal vertices, maximal vertices).");

    // boundary map and linear algebra
    m.def("boundary_edges", [](const Heap& h) { return boundary_map(h).edges; }, py::arg("heap"));
    m.def("boundary_matrix", [](const Heap& h) { return boundary_map(h).dense(); }, py::arg("heap"));
    m.def(
        "kernel_dim",
        [](const Heap& h, int characteristic) { return kernel_dim(h, field_of(characteristic)); },
        py::arg("heap"), py::arg("characteristic") = 0);
    m.def(
        "is_acyclic",
        [](const Heap& h, int characteristic) { return is_acyclic(h, field_of(characteristic)); },
        py::arg("heap"), py::arg("characteristic") = 0);
    m.def(
        "is_strongly_acyclic",
        [](const Heap& h, int characteristic) {
            return is_strongly_acyclic(h, field_of(characteristic));
        },
        py::arg("heap"), py::arg("characteristic") = 0);

    // rewriting
    m.def("tl_reduce", &tl_reduce, py::arg("heap"));
    m.def(
        "tl_reduce_randomized",
        [](const Heap& h, std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            return tl_reduce_randomized(h, rng);
        },
        py::arg("heap"), py::arg("seed"));
    m.def("in_monomial_basis", &in_monomial_basis, py::arg("heap"));
    m.def("deletion_test", &deletion_test, py::arg("heap"));

    // classification
    m.def(
        "classify",
        [](const PyStructure& s) {
            py::list out;
            for (const auto& cc : classify(s.p)) out.append(classified_to_dict(s.p, cc));
            return out;
        },
        py::arg("structure"));
    m.def("has_property_r", [](const PyStructure& s) { return has_property_r(s.p); },
          py::arg("structure"));
    m.def(
        "nonregular_witness",
        [](const PyStructure& s, int component) {
            auto classified = classify(s.p);
            int index = component;
            if (index < 0)
                for (std::size_t i = 0; i < classified.size(); ++i)
                    if (!classified[i].tag.is_regular()) {
                        index = static_cast<int>(i);
                        break;
                    }
            if (index < 0 || index >= static_cast<int>(classified.size()))
                throw std::invalid_argument("no non-regular component");
            const auto& cc = classified[static_cast<std::size_t>(index)];
            Witness w = nonregular_witness(s.p, cc.component, cc.tag);
            py::dict d;
            d["layers"] = w.layers;
            d["word"] = w.word();
            d["heap"] = w.heap;
            return d;
        },
        py::arg("structure"), py::arg("component") = -1,
        "P2-but-not-P1 witness for a non-regular component (default: the first).");

    // families
    m.def("path", [](int n) { return PyStructure{make_path(n)}; }, py::arg("n"));
    m.def("complete", [](int n) { return PyStructure{make_complete(n)}; }, py::arg("n"));
    m.def("cycle", [](int n) { return PyStructure{make_cycle(n)}; }, py::arg("n"));
    m.def("star", [](int leaves) { return PyStructure{make_star(leaves)}; }, py::arg("leaves"));
    m.def("gamma", [](int p, int q, int r) { return PyStructure{make_gamma(p, q, r)}; },
          py::arg("p"), py::arg("q"), py::arg("r"));
    m.def("affine_e6", [] { return PyStructure{make_affine_e6()}; });
    m.def("diamond", [] { return PyStructure{make_diamond()}; });
    m.def("paw", [] { return PyStructure{make_paw()}; });

    // enumeration and verification
    m.def(
        "count_heaps",
        [](const PyStructure& s, int max_vertices) { return count_heaps(s.p, max_vertices); },
        py::arg("structure"), py::arg("max_vertices"));
    m.def(
        "heaps",
        [](const PyStructure& s, int max_vertices) {
            std::vector<Heap> out;
            EnumerationSpec spec;
            spec.structure = s.p;
            spec.max_vertices = max_vertices;
            enumerate_heaps(spec, [&](const Heap& h) {
                out.push_back(h);
                return true;
            });
            return out;
        },
        py::arg("structure"), py::arg("max_vertices"),
        "All heaps with at most max_vertices vertices, enumeration order.");
    m.def(
        "run_suite",
        [](const std::string& name, const PyStructure& s, int max_vertices, int characteristic) {
            EnumerationSpec spec;
            spec.structure = s.p;
            spec.max_vertices = max_vertices;
            VerificationReport r = run_suite(name, spec, field_of(characteristic));
            return json_to_py(r.to_json());
        },
        py::arg("suite"), py::arg("structure"), py::arg("max_vertices") = 8,
        py::arg("characteristic") = 0,
        "Runs 'universal', 'regularity' or 'kernel' and returns the report.");
}
