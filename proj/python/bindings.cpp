#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyjoin/betti.hpp"
#include "polyjoin/io.hpp"
#include "polyjoin/joins.hpp"
#include "polyjoin/oracle.hpp"
#include "polyjoin/series.hpp"
#include "polyjoin/srings.hpp"
#include "polyjoin/topology.hpp"
#include "polyjoin/verify.hpp"

namespace py = pybind11;
using namespace polyjoin;

namespace {

using Labels = std::vector<std::string>;

Field to_field(const std::string& f) {
    if (f == "f2") return Field::F2;
    if (f == "q") return Field::Q;
    throw py::value_error("field must be 'f2' or 'q'");
}

Mode to_mode(const std::string& m) {
    if (m == "full") return Mode::full;
    if (m == "smash") return Mode::smash;
    throw py::value_error("mode must be 'full' or 'smash'");
}

std::map<int, std::int64_t> terms(const UniPoly& p) { return p.terms(); }

// Pair data arrives as JSON text in the documented format, so the Python side
// can use plain dicts via json.dumps.
PairAssignment pairs(const std::string& doc, const GroundSet& g) { return io::pairs_from_json(io::json::parse(doc), g); }
std::vector<GradedDims> cohomology(const std::string& doc, const GroundSet& g) {
    return io::cohomology_from_json(io::json::parse(doc), g);
}

std::vector<Labels> generators(const MonomialSet& gens, const GroundSet& g) {
    std::vector<Labels> out;
    for (Simplex s : gens) out.push_back(g.labels_of(s));
    return out;
}

}  // namespace

PYBIND11_MODULE(_polyjoin, m) {
    m.doc() = "Polyhedral products over polyhedral joins";

    py::register_exception<io::FormatError>(m, "FormatError", PyExc_ValueError);

    py::class_<SimplicialComplex>(m, "Complex")
        .def(py::init(&build_complex), py::arg("vertices"), py::arg("faces"))
        .def_static("from_json", [](const std::string& s) { return io::complex_from_json(io::json::parse(s)); })
        .def("to_json", [](const SimplicialComplex& k) { return io::complex_to_json(k).dump(); })
        .def_property_readonly("vertices", [](const SimplicialComplex& k) { return k.ground().labels(); })
        .def_property_readonly("facets", [](const SimplicialComplex& k) {
            std::vector<Labels> out;
            for (Simplex f : k.facets()) out.push_back(k.ground().labels_of(f));
            return out;
        })
        .def_property_readonly("ghost_vertices",
                               [](const SimplicialComplex& k) { return k.ground().labels_of(k.ghost_vertices()); })
        .def("is_face", [](const SimplicialComplex& k, const Labels& s) { return k.is_face(k.ground().simplex(s)); })
        .def("full_subcomplex",
             [](const SimplicialComplex& k, const Labels& s) { return k.full_subcomplex(k.ground().simplex(s)); })
        .def("link",
             [](const SimplicialComplex& k, const Labels& s, const Labels& r) {
                 return k.link_restricted(k.ground().simplex(s), k.ground().simplex(r));
             },
             py::arg("face"), py::arg("restrict_to"))
        .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
        .def("__repr__", [](const SimplicialComplex& k) { return "Complex(" + io::complex_to_json(k).dump() + ")"; });

    m.def("join", &simplicial_join);
    m.def("compose", [](const SimplicialComplex& k, const std::vector<SimplicialComplex>& ls) { return compose(k, ls); });
    m.def("reduced_cohomology",
          [](const SimplicialComplex& k, const std::string& f) { return reduced_cohomology(k, to_field(f)).ranks(); },
          py::arg("k"), py::arg("field") = "f2");

    m.def("bbcg_series",
          [](const SimplicialComplex& k, const std::string& doc, const std::string& mode, const std::string& f) {
              return terms(bbcg_series(k, pairs(doc, k.ground()), to_mode(mode), to_field(f)));
          },
          py::arg("k"), py::arg("pairs"), py::arg("mode") = "full", py::arg("field") = "f2");
    m.def("csc_series",
          [](const SimplicialComplex& k, const std::vector<SimplicialComplex>& ls, const std::string& doc,
             const std::string& mode, const std::string& f) {
              return terms(csc_series(k, ls, pairs(doc, composed_ground(k, ls)), to_mode(mode), to_field(f)));
          },
          py::arg("k"), py::arg("ls"), py::arg("pairs"), py::arg("mode") = "full", py::arg("field") = "f2");
    m.def("empty_series",
          [](const SimplicialComplex& k, const std::vector<SimplicialComplex>& ls, const std::string& doc,
             const std::string& mode, const std::string& f) {
              return terms(empty_series(k, ls, pairs(doc, composed_ground(k, ls)), to_mode(mode), to_field(f)));
          },
          py::arg("k"), py::arg("ls"), py::arg("pairs"), py::arg("mode") = "full", py::arg("field") = "f2");
    m.def("caa_series",
          [](const SimplicialComplex& k, const std::vector<SimplicialComplex>& ls, const std::string& doc,
             const std::string& f, bool reduced) {
              return terms(caa_series(k, ls, cohomology(doc, composed_ground(k, ls)), to_field(f), reduced));
          },
          py::arg("k"), py::arg("ls"), py::arg("cohomology"), py::arg("field") = "f2", py::arg("reduced") = false);

    m.def("beta_polynomial",
          [](const SimplicialComplex& k, const std::string& doc, const std::string& f) {
              return beta_polynomial(k, cohomology(doc, k.ground()), to_field(f)).to_string(k.ground());
          },
          py::arg("k"), py::arg("cohomology"), py::arg("field") = "f2");
    m.def("beta_compose",
          [](const SimplicialComplex& k, const std::vector<SimplicialComplex>& ls, const std::string& doc,
             const std::string& f) {
              const GroundSet g = composed_ground(k, ls);
              return beta_compose(k, ls, cohomology(doc, g), to_field(f)).to_string(g);
          },
          py::arg("k"), py::arg("ls"), py::arg("cohomology"), py::arg("field") = "f2");
    m.def("hochster_betti",
          [](const SimplicialComplex& k, int i, const Labels& j, const std::string& f) {
              return hochster_betti(k, i, k.ground().simplex(j), to_field(f));
          },
          py::arg("k"), py::arg("i"), py::arg("j"), py::arg("field") = "f2");

    m.def("minimal_nonfaces", [](const SimplicialComplex& k) { return generators(minimal_nonfaces(k), k.ground()); });
    m.def("sr_compose", [](const SimplicialComplex& k, const std::vector<SimplicialComplex>& ls) {
        return generators(sr_compose_generators(k, ls), composed_ground(k, ls));
    });

    m.def("rmac_betti",
          [](const SimplicialComplex& k, const std::string& f) { return terms(rmac_betti_poly(k, to_field(f))); },
          py::arg("k"), py::arg("field") = "f2");
    m.def("verify_formula", [](const SimplicialComplex& k, const std::string& f) { return verify_formula(k, to_field(f)); },
          py::arg("k"), py::arg("field") = "f2");
    m.def("verify_paper", [] {
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& r : verify_paper()) out.emplace_back(r.name, r.passed);
        return out;
    });
}
