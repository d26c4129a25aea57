#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ctl/json_io.hpp"

namespace py = pybind11;
using namespace ctl;

namespace {

/* Python-facing handle bundling one fixture workspace. */
struct PyWorkspace {
    Workspace ws;
    SearchBounds bounds;

    explicit PyWorkspace(const std::string& root, std::optional<std::uint32_t> characteristic)
        : ws(load_workspace(root, characteristic)) {}

    std::uint32_t characteristic() const { return ws.algebra->characteristic(); }
    int dimension() const { return ws.algebra->dimension(); }
    int gldim() const { return global_dimension(*ws.algebra); }
    std::vector<std::string> catalog_names() const { return ws.catalog.names(); }

    std::map<std::string, int> dims_of(const std::string& name) const {
        const Representation& m = ws.catalog.member(name);
        std::map<std::string, int> out;
        for (int v = 0; v < ws.algebra->num_vertices(); ++v)
            if (m.dim(v)) out[ws.algebra->quiver().vertices[v]] = m.dim(v);
        return out;
    }

    bool catalog_ok() const { return catalog_verify(ws.catalog).all_ok; }

    int hom(const std::string& a, const std::string& b) const {
        return hom_dim(ws.catalog.member(a), ws.catalog.member(b));
    }
    int ext(const std::string& a, const std::string& b, int degree) const {
        return ext_dim(ws.catalog.member(a), ws.catalog.member(b), degree);
    }
    int pd(const std::string& a) const { return projective_dimension(ws.catalog.member(a)); }
    int idim(const std::string& a) const { return injective_dimension(ws.catalog.member(a)); }

    std::set<std::string> rorth(const std::set<std::string>& members) const {
        return right_orth(members, ws.catalog);
    }
    std::set<std::string> lorth(const std::set<std::string>& members) const {
        return left_orth(members, ws.catalog);
    }
    std::set<std::string> cls(const std::string& name) const {
        return resolve_class(ws, name).members;
    }

    std::map<std::string, int> middle_of(const std::string& quot, const std::string& sub,
                                         const std::vector<std::uint32_t>& coeffs) const {
        ExtSpace es = ext_space(ws.catalog.member(quot), ws.catalog.member(sub));
        return decompose(realize_extension(es, coeffs).mid(), ws.catalog);
    }

    bool split_of(const std::string& quot, const std::string& sub,
                  const std::vector<std::uint32_t>& coeffs) const {
        ExtSpace es = ext_space(ws.catalog.member(quot), ws.catalog.member(sub));
        return is_split(realize_extension(es, coeffs));
    }

    std::string verify_pair(const std::string& x, const std::string& y, bool complete,
                            bool hereditary) const {
        CertifiedPair cp = certify_pair(resolve_class(ws, x), resolve_class(ws, y), ws.catalog,
                                        bounds, hereditary, complete);
        if (!cp.pair.ok) return "refuted";
        if (cp.hereditary && !*cp.hereditary) return "not_hereditary";
        if (cp.complete) {
            if (cp.complete->status == Completeness::inconclusive) return "inconclusive";
            if (cp.complete->status == Completeness::failed_witness) return "failed_witness";
        }
        return "certified";
    }

    py::dict theorem(const std::string& variant, const std::string& x1, const std::string& y1,
                     const std::string& x2, const std::string& y2) const {
        CertifiedPair p1 = certify_pair(resolve_class(ws, x1), resolve_class(ws, y1),
                                        ws.catalog, bounds, true, true);
        CertifiedPair p2 = certify_pair(resolve_class(ws, x2), resolve_class(ws, y2),
                                        ws.catalog, bounds, true, true);
        TheoremReport rep =
            theorem_check(variant == "ii" ? TheoremVariant::two : TheoremVariant::one, p1, p2,
                          ws.catalog, bounds);
        py::dict out;
        out["certified"] = rep.certified();
        out["conclusion_x"] = rep.conclusion_x.members;
        out["conclusion_y"] = rep.conclusion_y.members;
        out["cross_oracle_equal"] = rep.cross_oracle_equal;
        out["hereditary"] = rep.conclusion_hereditary ? py::cast(*rep.conclusion_hereditary)
                                                      : py::none().cast<py::object>();
        return out;
    }

    std::map<std::string, int> decompose_sum(const std::map<std::string, int>& multiset) const {
        return decompose(ws.catalog.sum_of(multiset), ws.catalog);
    }
};

}  // namespace

PYBIND11_MODULE(ctlpy, m) {
    m.doc() = "exact cotorsion-pair computations over bound quiver algebras";

    py::register_exception<HypothesisViolated>(m, "HypothesisViolated");
    py::register_exception<NonTerminating>(m, "NonTerminating");
    py::register_exception<Inconclusive>(m, "InconclusiveError");

    py::class_<PyWorkspace>(m, "Workspace")
        .def(py::init<const std::string&, std::optional<std::uint32_t>>(), py::arg("root"),
             py::arg("characteristic") = std::nullopt)
        .def_property_readonly("characteristic", &PyWorkspace::characteristic)
        .def("dimension", &PyWorkspace::dimension, "dimension of the algebra")
        .def("global_dimension", &PyWorkspace::gldim)
        .def("catalog", &PyWorkspace::catalog_names)
        .def("catalog_ok", &PyWorkspace::catalog_ok)
        .def("dims", &PyWorkspace::dims_of, py::arg("name"))
        .def("hom_dim", &PyWorkspace::hom, py::arg("a"), py::arg("b"))
        .def("ext_dim", &PyWorkspace::ext, py::arg("a"), py::arg("b"), py::arg("degree") = 1)
        .def("projective_dimension", &PyWorkspace::pd, py::arg("a"))
        .def("injective_dimension", &PyWorkspace::idim, py::arg("a"))
        .def("right_orth", &PyWorkspace::rorth, py::arg("members"))
        .def("left_orth", &PyWorkspace::lorth, py::arg("members"))
        .def("class_members", &PyWorkspace::cls, py::arg("name"))
        .def("middle_term", &PyWorkspace::middle_of, py::arg("quot"), py::arg("sub"),
             py::arg("coeffs"), "decomposition of the middle term of an extension class")
        .def("is_split", &PyWorkspace::split_of, py::arg("quot"), py::arg("sub"),
             py::arg("coeffs"))
        .def("verify_pair", &PyWorkspace::verify_pair, py::arg("x"), py::arg("y"),
             py::arg("complete") = true, py::arg("hereditary") = false)
        .def("theorem", &PyWorkspace::theorem, py::arg("variant"), py::arg("x1"), py::arg("y1"),
             py::arg("x2"), py::arg("y2"))
        .def("decompose_sum", &PyWorkspace::decompose_sum, py::arg("multiset"));
}
