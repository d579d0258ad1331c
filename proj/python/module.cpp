// Thin bindings: compound results cross as JSON strings and the package
// __init__ turns them into dicts, so the binding layer stays free of
// per-field marshalling.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cactus5/io.hpp"
#include "cactus5/ribbon.hpp"
#include "cactus5/transforms.hpp"
#include "cactus5/verify.hpp"

namespace py = pybind11;
using namespace cactus5;

namespace {

Equivalence eq_of(const std::string& s) {
    if (s == "fixed") return Equivalence::fixed_labels;
    if (s == "rotated") return Equivalence::with_rotation;
    throw Error(Errc::BadInput, "equivalence must be 'fixed' or 'rotated'");
}

const Atlas& first_atlas(int degree, const std::string& eq) {
    static std::map<std::pair<int, std::string>, Atlas> cache;
    auto key = std::make_pair(degree, eq);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, enumerate_first(degree, eq_of(eq))).first;
    return it->second;
}

const Atlas& second_atlas(const std::string& eq) {
    static std::map<std::string, Atlas> cache;
    auto it = cache.find(eq);
    if (it == cache.end()) it = cache.emplace(eq, enumerate_second(eq_of(eq))).first;
    return it->second;
}

PolynomialSpec spec_of(const std::vector<std::complex<double>>& coeffs) {
    if (coeffs.size() != 6) throw Error(Errc::BadInput, "expected 6 coefficients, highest degree first");
    PolynomialSpec p;
    std::copy(coeffs.begin(), coeffs.end(), p.coeff.begin());
    return p;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "degree-5 plane cactus toolkit";

    m.def("first_count", [](int degree, const std::string& eq) { return first_atlas(degree, eq).size(); },
          py::arg("degree") = 5, py::arg("equivalence") = "rotated");
    m.def("second_count", [](const std::string& eq) { return second_atlas(eq).size(); },
          py::arg("equivalence") = "rotated");

    m.def("atlas_json",
          [](const std::string& family, int degree, const std::string& eq) {
              if (family == "first") return atlas_to_json(first_atlas(degree, eq)).dump();
              if (family == "second") return atlas_to_json(second_atlas(eq)).dump();
              throw Error(Errc::BadInput, "family must be 'first' or 'second'");
          },
          py::arg("family"), py::arg("degree") = 5, py::arg("equivalence") = "rotated");

    m.def("t1_index", [](int w, int k) {
        const Atlas& first = first_atlas(5, "rotated");
        const Atlas& second = second_atlas("rotated");
        return second.index_of(t1_class(first.at(w), k).canonical_key);
    });
    m.def("t2_index", [](int b, int gap) {
        if (gap < 0 || gap > 2) throw Error(Errc::BadInput, "gap must be 0 (01), 1 (12) or 2 (20)");
        const Atlas& first = first_atlas(5, "rotated");
        const Atlas& second = second_atlas("rotated");
        return first.index_of(t2_class(second.at(b), static_cast<Gap>(gap)).canonical_key);
    });

    m.def("graph_json", [] { return export_graph(atlas_graph(), "json"); });
    m.def("graph_summary", [] {
        RibbonGraph g = atlas_graph();
        auto fs = faces(g, FaceOrientation::left);
        py::dict d;
        d["whites"] = g.n_white();
        d["blacks"] = g.n_black();
        d["edges"] = g.n_edges();
        d["faces"] = static_cast<int>(fs.size());
        d["genus"] = genus(g, FaceOrientation::left);
        return d;
    });

    m.def("classify_json",
          [](const std::vector<std::complex<double>>& coeffs, int steps) {
              MeshControl mesh;
              if (steps > 0) mesh.steps = steps;
              return classification_to_json(classify_polynomial(spec_of(coeffs), mesh, {})).dump();
          },
          py::arg("coeffs"), py::arg("steps") = 0);

    m.def("oracle_json", [](int n) { return oracle_report_to_json(oracle_report(n)).dump(); }, py::arg("n") = 5);

    m.def("sample_json",
          [](int count, unsigned long long seed, int steps) {
              MeshControl mesh;
              if (steps > 0) mesh.steps = steps;
              return sample_table_to_json(sample_classes(count, seed, mesh, {})).dump();
          },
          py::arg("count"), py::arg("seed") = kDefaultSampleSeed, py::arg("steps") = 0);

    m.def("render",
          [](const std::string& family, int index, const std::string& format, const std::string& eq) {
              if (family == "first") return render_first(first_atlas(5, eq).at(index).first(), format);
              if (family == "second") return render_second(second_atlas(eq).at(index).second(), format);
              throw Error(Errc::BadInput, "family must be 'first' or 'second'");
          },
          py::arg("family"), py::arg("index"), py::arg("format") = "text", py::arg("equivalence") = "rotated");
}
