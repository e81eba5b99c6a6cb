// Python bindings for the cycle calculus. JSON crosses the boundary as
// strings; the chowlab package wraps them into dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chowlab/serialize.hpp"
#include "chowlab/suites.hpp"

namespace py = pybind11;
using namespace chow;

namespace {

GeneralPoint point_of(const std::vector<std::string>& parts) {
    std::vector<Rational> vals;
    for (const auto& s : parts) vals.push_back(Rational::parse(s));
    return GeneralPoint::of(std::move(vals));
}

std::vector<Polynomial> polys_of(const AmbientContext& a, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(Polynomial::parse(a.vars(), s));
    return ps;
}

OpenSet open_of(const AmbientContext& a, const std::vector<std::string>& closed) {
    if (closed.empty()) return OpenSet::whole(a);
    return OpenSet::complement_of(a, polys_of(a, closed));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact calculus for algebraic cycles on affine cubes";

    py::class_<Cycle>(m, "Cycle")
        .def_static("from_json", [](const std::string& text) {
            return cycle_from_json(Json::parse(text));
        })
        .def("to_json", [](const Cycle& z) { return cycle_to_json(z).dump(); })
        .def("__str__", &Cycle::str)
        .def("__repr__", [](const Cycle& z) { return "<Cycle " + z.str() + ">"; })
        .def_property_readonly("d", &Cycle::d)
        .def_property_readonly("cube_dim", &Cycle::cube_dim)
        .def_property_readonly("ambient_dim",
                               [](const Cycle& z) { return z.context().ambient_dim(); })
        .def_property_readonly("units",
                               [](const Cycle& z) {
                                   std::vector<std::string> out;
                                   for (const auto& u : z.context().open_units())
                                       out.push_back(u.str());
                                   return out;
                               })
        .def("components",
             [](const Cycle& z) {
                 std::vector<std::pair<long long, std::vector<std::string>>> out;
                 for (const auto& c : z.components())
                     out.emplace_back(c.coef, c.generator_strings());
                 return out;
             })
        .def("is_zero", &Cycle::is_zero)
        .def("equals", &Cycle::equals)
        .def("__eq__", [](const Cycle& a, const Cycle& b) { return a.equals(b); })
        .def("__add__", &Cycle::operator+)
        .def("__sub__", &Cycle::operator-)
        .def("__neg__", &Cycle::negated)
        .def("scaled", &Cycle::scaled)
        .def("is_admissible",
             [](const Cycle& z) {
                 AdmissibilityWitness w = is_admissible(z);
                 return py::make_tuple(w.ok, w.detail);
             })
        .def("is_normalized", [](const Cycle& z) { return is_normalized(z); })
        .def("normalize", [](const Cycle& z) { return kill_degenerates(z); })
        .def("face", [](const Cycle& z, int i, int eps) { return face(z, i, eps); },
             py::arg("i"), py::arg("eps"))
        .def("boundary",
             [](const Cycle& z, bool reduce) {
                 return reduce ? boundary_nondegenerate(z) : boundary(z);
             },
             py::arg("reduce") = true)
        .def("localize",
             [](const Cycle& z, const std::vector<std::string>& units) {
                 return localize(z, polys_of(z.context(), units));
             },
             py::arg("units"))
        .def("close", [](const Cycle& z) { return closure_from_open(z); })
        .def("bidivide",
             [](const Cycle& z, int i, const std::string& c) {
                 return bidivision(z, i, Rational::parse(c));
             },
             py::arg("i"), py::arg("c"))
        .def("subdivide",
             [](const Cycle& z, const std::vector<std::string>& point, const std::string& form) {
                 SubdivisionForm f;
                 if (form == "iterated")
                     f = SubdivisionForm::Iterated;
                 else if (form == "vertex-sum")
                     f = SubdivisionForm::VertexSum;
                 else
                     throw std::invalid_argument("unknown subdivision form: " + form);
                 return cubical_subdivision(z, point_of(point), f);
             },
             py::arg("point"), py::arg("form") = "iterated");

    py::class_<Tower>(m, "Tower")
        .def_static("build",
                    [](int n, const std::vector<std::vector<int>>& steps) {
                        return build_tower(n, steps);
                    },
                    py::arg("cube_dim"), py::arg("steps"))
        .def_static("from_json",
                    [](const std::string& text) { return tower_from_json(Json::parse(text)); })
        .def("to_json", [](const Tower& t) { return tower_to_json(t).dump(); })
        .def_property_readonly("cube_dim", [](const Tower& t) { return t.dims; })
        .def_property_readonly("steps", [](const Tower& t) { return t.steps; })
        .def_property_readonly("levels", &Tower::levels)
        .def("info",
             [](const Tower& t) {
                 py::list levels;
                 for (const auto& S : t.spaces) {
                     py::dict lv;
                     py::list divs;
                     for (const auto& D : S.divisors) divs.append(D.str());
                     std::vector<int> sg = vertex_signs(S);
                     py::list vs;
                     for (size_t i = 0; i < S.vertices.size(); ++i) {
                         py::dict v;
                         v["name"] = S.vertices[i].name;
                         v["sign"] = sg[i];
                         vs.append(v);
                     }
                     lv["divisors"] = divs;
                     lv["vertices"] = vs;
                     lv["edges"] = (int)S.edges.size();
                     levels.append(lv);
                 }
                 return levels;
             })
        .def("apply",
             [](const Tower& t, const Cycle& z, const std::vector<std::string>& point) {
                 LevelSubdivision lv = sd_level(z, t, point_of(point));
                 return py::make_tuple(lv.cycle, lv.admissible.ok, lv.admissible.detail);
             },
             py::arg("cycle"), py::arg("point"))
        .def("h0_certificate",
             [](const Tower& t, const Cycle& z, const std::vector<std::string>& point) {
                 H0Certificate h = homotopy_h0(z, t, point_of(point));
                 py::dict out;
                 out["pass"] = h.pass;
                 out["homotopy"] = h.homotopy;
                 out["lhs"] = h.lhs;
                 out["rhs"] = h.rhs;
                 return out;
             },
             py::arg("cycle"), py::arg("point"));

    m.def("make_cycle",
          [](int ambient_dim, int cube_dim, int d,
             const std::vector<std::pair<long long, std::vector<std::string>>>& components,
             const std::vector<std::string>& params, const std::vector<std::string>& units) {
              Json j;
              j["ambient_dim"] = ambient_dim;
              j["cube_dim"] = cube_dim;
              j["params"] = params;
              j["units"] = units;
              j["d"] = d;
              Json cs = Json::array();
              for (const auto& [coef, gens] : components)
                  cs.push_back({{"coef", coef}, {"generators", gens}, {"irreducible", true}});
              j["components"] = cs;
              return cycle_from_json(j);
          },
          py::arg("ambient_dim"), py::arg("cube_dim"), py::arg("d"), py::arg("components"),
          py::arg("params") = std::vector<std::string>{},
          py::arg("units") = std::vector<std::string>{});

    m.def("suite_names", &suite_names);
    m.def("run_suite",
          [](const std::string& name, uint64_t seed, int random, int nmax,
             const std::string& corpus) {
              SuiteOptions o;
              o.seed = seed;
              o.random = random;
              o.nmax = nmax;
              o.corpus = corpus;
              return report_to_json(run_suite(name, o)).dump();
          },
          py::arg("name"), py::arg("seed") = 7, py::arg("random") = 100, py::arg("nmax") = 4,
          py::arg("corpus") = "corpus");

    m.def("glue_cycles",
          [](const Cycle& x1, const Cycle& x2, const std::vector<std::string>& u_closed,
             const std::vector<std::string>& v_closed) {
              GlueResult g =
                  glue(x1, x2, open_of(x1.context(), u_closed), open_of(x1.context(), v_closed));
              py::dict out;
              out["glued"] = g.glued;
              out["delta_u"] = g.delta_u;
              out["delta_v"] = g.delta_v;
              return out;
          },
          py::arg("first"), py::arg("second"), py::arg("u_closed"), py::arg("v_closed"));

    m.def("mv_check",
          [](const std::vector<Cycle>& samples, const std::vector<std::string>& u_closed,
             const std::vector<std::string>& v_closed) {
              if (samples.empty())
                  throw std::invalid_argument("mv_check needs at least one sample cycle");
              const AmbientContext& a = samples[0].context();
              return report_to_json(chow::mv_check(open_of(a, u_closed), open_of(a, v_closed),
                                                   samples))
                  .dump();
          },
          py::arg("samples"), py::arg("u_closed"), py::arg("v_closed"));
}
