#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>
#include <variant>

#include "confspace/braid.hpp"
#include "confspace/homology.hpp"
#include "confspace/io.hpp"
#include "confspace/models.hpp"
#include "confspace/plane.hpp"
#include "confspace/swiatkowski.hpp"

namespace py = pybind11;
using namespace confspace;

namespace {

py::int_ to_py(const mpz_class& z) {
    PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

// One python-facing wrapper for both complex flavors.
struct PyComplex {
    std::variant<CubicalComplex, SwiatkowskiComplex> x;
    std::string graph_name;

    template <class F>
    auto visit(F&& f) const {
        return std::visit(std::forward<F>(f), x);
    }

    int top_dim() const {
        return visit([](const auto& c) { return c.top_dim(); });
    }
    std::vector<std::size_t> cell_counts() const {
        return visit([](const auto& c) {
            std::vector<std::size_t> out;
            for (int k = 0; k <= c.top_dim(); ++k) out.push_back(c.cell_count(k));
            return out;
        });
    }
    long long euler() const {
        return visit([](const auto& c) { return euler_characteristic(c); });
    }
    py::list homology_groups() const {
        auto hs = visit([](const auto& c) { return homology(build_chain_complex(c)); });
        py::list out;
        for (const auto& h : hs) {
            py::list tors;
            for (const auto& d : h.torsion) tors.append(to_py(d));
            out.append(py::make_tuple(h.degree, h.betti, tors));
        }
        return out;
    }
    PyComplex collapse() const {
        return visit([&](const auto& c) {
            return PyComplex{collapse_free_faces(c), graph_name};
        });
    }
    std::string describe_cell(int k, int i) const {
        return visit([&](const auto& c) { return c.describe_cell(k, i); });
    }
    std::string to_text() const {
        return visit([&](const auto& c) {
            std::ostringstream ss;
            write_complex(c, graph_name, ss);
            return ss.str();
        });
    }
};

}  // namespace

PYBIND11_MODULE(_confspace, m) {
    m.doc() = "discrete configuration spaces of graphs";

    py::register_exception<ParseError>(m, "GraphParseError", PyExc_ValueError);
    py::register_exception<ModelPreconditionError>(m, "ModelPreconditionError",
                                                   PyExc_ValueError);
    py::register_exception<ChainIntegrityError>(m, "ChainIntegrityError",
                                                PyExc_RuntimeError);
    py::register_exception<DegeneratePairError>(m, "DegeneratePairError",
                                                PyExc_ValueError);

    py::class_<Graph, std::shared_ptr<Graph>>(m, "Graph")
        .def(py::init([](const std::string& text) {
                 return std::make_shared<Graph>(parse_graph(text));
             }),
             py::arg("text"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("valence",
             [](const Graph& g, const std::string& id) {
                 auto v = g.find_vertex(id);
                 if (!v) throw std::invalid_argument("no such vertex: " + id);
                 return g.valence(*v);
             })
        .def("distance",
             [](const Graph& g, const std::string& u, const std::string& v) {
                 auto a = g.find_vertex(u);
                 auto b = g.find_vertex(v);
                 if (!a || !b) throw std::invalid_argument("no such vertex");
                 return g.distance(*a, *b);
             })
        .def("subdivide",
             [](const Graph& g, int m) {
                 auto [sub, rep] = subdivide(g, m);
                 return std::make_shared<Graph>(std::move(sub));
             },
             py::arg("segments"))
        .def("__str__", [](const Graph& g) { return graph_to_string(g); });

    m.def("check_abrams",
          [](std::shared_ptr<Graph> g, int n) {
              auto rep = check_abrams(*g, n);
              return py::make_tuple(rep.passed, rep.summary(*g));
          },
          py::arg("graph"), py::arg("n"));

    py::class_<PyComplex>(m, "Complex")
        .def_property_readonly("top_dim", &PyComplex::top_dim)
        .def_property_readonly("cell_counts", &PyComplex::cell_counts)
        .def("euler", &PyComplex::euler)
        .def("homology", &PyComplex::homology_groups)
        .def("collapse", &PyComplex::collapse)
        .def("describe_cell", &PyComplex::describe_cell)
        .def("__str__", &PyComplex::to_text);

    m.def("build_abrams",
          [](std::shared_ptr<Graph> g, int n, bool override_check) {
              return PyComplex{build_abrams(g, n, override_check), "graph"};
          },
          py::arg("graph"), py::arg("n"), py::arg("override_check") = false);
    m.def("build_unlabeled_abrams",
          [](std::shared_ptr<Graph> g, int n, bool override_check) {
              return PyComplex{build_unlabeled_abrams(g, n, override_check), "graph"};
          },
          py::arg("graph"), py::arg("n"), py::arg("override_check") = false);
    m.def("build_swiatkowski",
          [](std::shared_ptr<Graph> g, int n) {
              return PyComplex{build_swiatkowski(g, n), "graph"};
          },
          py::arg("graph"), py::arg("n"));
    m.def("build_nonk",
          [](std::shared_ptr<Graph> g, int n, int k) {
              return PyComplex{build_nonk(g, n, k), "graph"};
          },
          py::arg("graph"), py::arg("n"), py::arg("k"));

    m.def("smith_normal_form", [](const std::vector<std::vector<long long>>& a) {
        auto d = smith_normal_form(a);
        py::list diag;
        for (const auto& z : d.diagonal) diag.append(to_py(z));
        return py::make_tuple(d.rank, diag);
    });

    m.def("braid_reduce", [](int strands, const std::string& word) {
        return braid_word_to_string(free_reduce(parse_braid_word(strands, word)));
    });
    m.def("braid_permutation", [](int strands, const std::string& word) {
        auto p = permutation_image(parse_braid_word(strands, word));
        std::vector<int> out;
        for (int v : p.image) out.push_back(v + 1);
        return out;
    });
    m.def("braid_is_pure", [](int strands, const std::string& word) {
        return is_pure(parse_braid_word(strands, word));
    });
    m.def("braid_exponent_sum", [](int strands, const std::string& word) {
        return exponent_sum(parse_braid_word(strands, word));
    });

    m.def("plane_forward", [](double x1, double x2, double y1, double y2) {
        auto q = pair_to_product({{x1, x2}, {y1, y2}});
        return py::make_tuple(q.a[0], q.a[1], q.t, q.u[0], q.u[1]);
    });
    m.def("plane_inverse", [](double a1, double a2, double t, double u1, double u2) {
        auto p = product_to_pair({{a1, a2}, t, {u1, u2}});
        return py::make_tuple(p.x[0], p.x[1], p.y[0], p.y[1]);
    });
}
