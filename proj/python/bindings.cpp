#include "exgraph/nlf.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

using Matrix = std::vector<std::vector<long long>>;

py::dict seed_dict(const exg::LabeledSeed& s) {
    py::dict d;
    std::vector<std::string> vars;
    for (const auto& v : s.variables()) vars.push_back(v.to_string());
    d["variables"] = vars;
    d["B"] = s.matrix().rows();
    d["symmetrizer"] = s.matrix().symmetrizer();
    d["C"] = s.cmatrix().rows();
    std::vector<int> path;
    for (int k : s.path()) path.push_back(k + 1);
    d["path"] = path;
    return d;
}

std::vector<int> internal_path(const std::vector<int>& path, std::size_t n) {
    std::vector<int> r;
    for (int k : path) {
        if (k < 1 || static_cast<std::size_t>(k) > n)
            throw exg::IndexOutOfRange("direction out of range");
        r.push_back(k - 1);
    }
    return r;
}

/// Exchange graph of a seed pattern together with its initial seed; the
/// handle every graph-level query goes through.
class Pattern {
public:
    Pattern(Matrix b, std::size_t max_vertices, std::size_t max_depth)
        : matrix_(std::move(b)),
          initial_(exg::LabeledSeed::initial(matrix_)),
          graph_(exg::enumerate_graph(initial_, max_vertices, max_depth)) {}

    std::size_t num_vertices() const { return graph_.num_vertices(); }
    std::size_t num_edges() const { return graph_.num_edges(); }
    bool complete() const { return graph_.complete(); }
    std::vector<std::vector<std::string>> clusters() const {
        std::vector<std::vector<std::string>> r;
        for (const auto& c : graph_.vertices()) r.push_back(c.keys());
        return r;
    }
    std::vector<std::pair<int, int>> edges() const { return graph_.edges(); }

    py::dict mutate(const std::vector<int>& path) const {
        return seed_dict(
            exg::replay(initial_, internal_path(path, matrix_.rank())));
    }

    std::vector<std::vector<int>> geodesics(int v, int w) const {
        return exg::geodesics(graph_, v, w).paths;
    }

    std::vector<std::string> minimal_face(int v, int w) const {
        return exg::minimal_face(graph_, v, w).defining;
    }

    py::dict bongartz(const std::vector<std::string>& u,
                      const std::vector<int>& root_path) const {
        exg::CompletionQuery q{u, internal_path(root_path, matrix_.rank())};
        auto r = exg::bongartz_completion(graph_, initial_, q);
        py::dict d;
        d["vertex"] = r.vertex;
        d["cluster"] = r.cluster;
        py::list cert;
        for (const auto& [pos, col] : r.certificate)
            cert.append(py::make_tuple(pos + 1, col));
        d["certificate"] = cert;
        return d;
    }

    py::dict projection(const std::vector<std::string>& u) const {
        auto pmap = exg::projection_map(graph_, initial_, u);
        auto audit = exg::audit_projection(graph_, u, pmap);
        py::dict d;
        d["map"] = pmap;
        d["ok"] = audit.ok();
        d["failures"] = audit.failures;
        return d;
    }

    py::dict verify_nlf(std::size_t pair_budget, std::size_t path_budget) const {
        auto rep = exg::verify_nlf(graph_, &initial_, pair_budget, path_budget);
        py::dict d;
        d["ok"] = rep.ok();
        d["pairs_checked"] = rep.pairs_checked;
        d["geodesics_checked"] = rep.geodesics_checked;
        d["faces_audited"] = rep.face_audits.size();
        d["violations"] = rep.violations.size();
        d["routes_agree"] = rep.routes_agree;
        d["summary"] = rep.summary();
        return d;
    }

    std::string to_json() const { return graph_.to_json(); }
    std::string to_dot() const { return graph_.to_dot(); }

private:
    exg::ExchangeMatrix matrix_;
    exg::LabeledSeed initial_;
    exg::ExchangeGraph graph_;
};

}  // namespace

PYBIND11_MODULE(exgraph, m) {
    m.doc() = "Exact cluster-algebra engine: seed mutation, exchange graphs, "
              "Bongartz completions and non-leaving-face verification";

    py::register_exception<exg::NotSkewSymmetrizable>(m, "NotSkewSymmetrizable");
    py::register_exception<exg::DivisionNotExact>(m, "DivisionNotExact");
    py::register_exception<exg::IncompleteGraph>(m, "IncompleteGraph");
    py::register_exception<exg::NoCompletion>(m, "NoCompletion");
    py::register_exception<exg::MultipleCompletions>(m, "MultipleCompletions");

    m.def("check_symmetrizer", &exg::find_symmetrizer, py::arg("B"),
          "Smallest positive integer symmetrizer of B, or raises "
          "NotSkewSymmetrizable");
    m.def(
        "mutate_matrix",
        [](Matrix b, int k) {
            exg::ExchangeMatrix m_(std::move(b));
            if (k < 1 || static_cast<std::size_t>(k) > m_.rank())
                throw exg::IndexOutOfRange("direction out of range");
            return m_.mutated(static_cast<std::size_t>(k - 1)).rows();
        },
        py::arg("B"), py::arg("k"), "Matrix mutation in direction k (1-based)");
    m.def(
        "mutate_seed",
        [](Matrix b, const std::vector<int>& path) {
            exg::ExchangeMatrix m_(std::move(b));
            return seed_dict(exg::replay(exg::LabeledSeed::initial(m_),
                                         internal_path(path, m_.rank())));
        },
        py::arg("B"), py::arg("path"),
        "Labeled seed after applying a mutation path (1-based directions)");

    py::class_<Pattern>(m, "Pattern")
        .def(py::init<Matrix, std::size_t, std::size_t>(), py::arg("B"),
             py::arg("max_vertices") = 100000, py::arg("max_depth") = 64)
        .def_property_readonly("num_vertices", &Pattern::num_vertices)
        .def_property_readonly("num_edges", &Pattern::num_edges)
        .def_property_readonly("complete", &Pattern::complete)
        .def("clusters", &Pattern::clusters)
        .def("edges", &Pattern::edges)
        .def("mutate", &Pattern::mutate, py::arg("path"))
        .def("geodesics", &Pattern::geodesics, py::arg("v"), py::arg("w"))
        .def("minimal_face", &Pattern::minimal_face, py::arg("v"), py::arg("w"))
        .def("bongartz", &Pattern::bongartz, py::arg("u"),
             py::arg("root_path") = std::vector<int>{})
        .def("projection", &Pattern::projection, py::arg("u"))
        .def("verify_nlf", &Pattern::verify_nlf,
             py::arg("pair_budget") = 1000000, py::arg("path_budget") = 100000)
        .def("to_json", &Pattern::to_json)
        .def("to_dot", &Pattern::to_dot);
}
