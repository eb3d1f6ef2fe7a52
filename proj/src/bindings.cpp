#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pettykit/harness.hpp"

namespace py = pybind11;
using namespace pettykit;

namespace {

json kwargs_to_json(const py::dict& kw) {
  json j = json::object();
  for (auto item : kw) {
    const std::string key = py::str(item.first);
    const py::handle v = item.second;
    if (py::isinstance<py::bool_>(v))
      j[key] = v.cast<bool>();
    else if (py::isinstance<py::int_>(v))
      j[key] = v.cast<std::int64_t>();
    else if (py::isinstance<py::float_>(v))
      j[key] = v.cast<double>();
    else if (py::isinstance<py::str>(v))
      j[key] = v.cast<std::string>();
    else if (py::isinstance<py::list>(v) || py::isinstance<py::tuple>(v))
      j[key] = v.cast<std::vector<double>>();
    else
      throw std::invalid_argument("unsupported parameter type for " + key);
  }
  return j;
}

QBody q_from_name(const std::string& name) {
  return make_standard_q(name, json::object());
}

RadialMeasure measure_from_name(const std::string& kind, int dim, double beta) {
  if (kind == "lebesgue") return RadialMeasure::lebesgue(dim);
  if (kind == "gaussian") return RadialMeasure::gaussian(dim);
  if (kind == "generalized_cauchy" || kind == "cauchy")
    return RadialMeasure::generalized_cauchy(dim, beta);
  throw UnknownName("unknown measure kind: " + kind);
}

}  // namespace

PYBIND11_MODULE(_pettykit, mod) {
  mod.doc() = "polar projection body calculus and Petty-type inequality checks";

  py::register_exception<Error>(mod, "PettykitError");

  py::class_<Facet>(mod, "Facet")
      .def_property_readonly("normal", [](const Facet& f) { return f.normal; })
      .def_readonly("measure", &Facet::measure)
      .def_readonly("offset", &Facet::offset);

  py::class_<Polytope>(mod, "Polytope")
      .def_property_readonly("dim", &Polytope::dim)
      .def_property_readonly("vertices",
                             [](const Polytope& P) { return P.vertices(); })
      .def_property_readonly("facets",
                             [](const Polytope& P) { return P.facets(); })
      .def_property_readonly("volume", &Polytope::volume)
      .def("support", &Polytope::support)
      .def("contains", &Polytope::contains, py::arg("x"),
           py::arg("tol") = 1e-12)
      .def("diameter", &Polytope::diameter)
      .def("__repr__", [](const Polytope& P) {
        return "<Polytope dim=" + std::to_string(P.dim()) +
               " vertices=" + std::to_string(P.vertices().size()) + ">";
      });

  mod.def(
      "convex_hull",
      [](const std::vector<Vec>& pts, int dim) { return convex_hull(pts, dim); },
      py::arg("points"), py::arg("dim"));
  mod.def("volume", [](const Polytope& P) { return P.volume(); });
  mod.def("project", &project);
  mod.def("reflect", &reflect);
  mod.def("hausdorff_distance", &hausdorff_distance);
  mod.def("translate", &translate);
  mod.def("scale_body", &scale_body);
  mod.def("minkowski_sum", &minkowski_sum);

  mod.def("make_standard", [](const std::string& name, const py::kwargs& kw) {
    return make_standard(name, kwargs_to_json(kw));
  });
  mod.def("make_random_polygon", &make_random_polygon, py::arg("seed"),
          py::arg("k"), py::arg("rmin") = 0.7, py::arg("rmax") = 1.3);

  mod.def("support",
          [](const Polytope& K, const Vec& x) { return K.support(x); });
  mod.def("minkowski_functional", [](const Polytope& K, const Vec& x) {
    return minkowski_functional(OriginBody(K), x);
  });
  mod.def("polar",
          [](const Polytope& K) { return polar(OriginBody(K)).poly(); });
  mod.def(
      "p_sum_approx",
      [](const Polytope& K, const Polytope& L, double p, int n_dirs) {
        return p_sum_approx(OriginBody(K), OriginBody(L), p, n_dirs);
      },
      py::arg("K"), py::arg("L"), py::arg("p"), py::arg("n_dirs") = 512);

  mod.def("mixed_volume_first",
          [](const Polytope& K, const Polytope& L) {
            return mixed_volume_first(K, L);
          });
  mod.def("mixed_volume_segment", [](const Polytope& K, const Vec& a,
                                     const Vec& b) {
    return mixed_volume_first(K, Segment{a, b});
  });
  mod.def("lp_mixed_volume", [](const Polytope& K, const Polytope& L,
                                double p) {
    return lp_mixed_volume(OriginBody(K), L, p);
  });
  mod.def("lp_surface_area", [](const Polytope& K, double p) {
    return lp_surface_area(OriginBody(K), p);
  });
  mod.def(
      "lp_mixed_volume_fd_oracle",
      [](const Polytope& K, const Polytope& L, double p, double eps,
         int n_dirs) {
        return lp_mixed_volume_fd_oracle(OriginBody(K), OriginBody(L), p, eps,
                                         n_dirs);
      },
      py::arg("K"), py::arg("L"), py::arg("p"), py::arg("eps") = 1e-4,
      py::arg("n_dirs") = 2048);

  mod.def("steiner", &steiner);
  mod.def(
      "shadow_system_at",
      [](const Polytope& K, const Vec& u, double t) {
        return ShadowSystem(K, u).at(t);
      },
      py::arg("K"), py::arg("u"), py::arg("t"));
  mod.def(
      "symmetrization_flow",
      [](const Polytope& K, int n_steps, std::uint64_t seed) {
        std::vector<std::pair<double, double>> out;
        for (const auto& s : symmetrization_flow(K, n_steps, seed))
          out.push_back({s.dist_to_ball, s.volume});
        return out;
      },
      py::arg("K"), py::arg("n_steps"), py::arg("seed"));

  mod.def("classical_proj_body", &classical_proj_body, py::arg("K"),
          py::arg("n_dirs") = 4096);
  mod.def("proj_body_support", &proj_body_support);
  mod.def(
      "polar_proj_radial",
      [](const Polytope& K, const std::string& q, double p, const Vec& theta) {
        return polar_proj_radial(StarBodySpec(K, q_from_name(q), p), theta);
      },
      py::arg("K"), py::arg("Q"), py::arg("p"), py::arg("theta"));

  mod.def("radial_mass", [](const std::string& kind, int dim, double beta,
                            double R) {
    return radial_mass(measure_from_name(kind, dim, beta), R);
  });
  mod.def(
      "star_body_measure",
      [](const Polytope& K, const std::string& q, double p,
         const std::string& kind, double beta, std::int64_t n_samples,
         std::uint64_t seed) {
        const StarBodySpec spec(K, q_from_name(q), p);
        const Estimate e = star_body_measure(
            spec, measure_from_name(kind, spec.d(), beta), n_samples, seed);
        return py::make_tuple(e.value, e.std_error, e.n_samples);
      },
      py::arg("K"), py::arg("Q"), py::arg("p"), py::arg("measure"),
      py::arg("beta") = 0.0, py::arg("n_samples") = 1 << 14,
      py::arg("seed") = 1);

  py::class_<GridDensity>(mod, "GridDensity")
      .def_property_readonly("mass", &GridDensity::mass)
      .def_readonly("values", &GridDensity::values)
      .def_readonly("dim", &GridDensity::dim);
  mod.def(
      "grid_indicator",
      [](const Polytope& P, const Vec& lo, const Vec& hi, int res) {
        return GridDensity::indicator(P, lo, hi, res);
      },
      py::arg("P"), py::arg("lo"), py::arg("hi"), py::arg("resolution"));
  mod.def("symmetric_decreasing_rearrangement",
          &symmetric_decreasing_rearrangement);
  mod.def("steiner_rearrangement", &steiner_rearrangement);
  mod.def("marginal_profile", &marginal_profile);
  mod.def("sample_density", &sample_density, py::arg("f"), py::arg("n"),
          py::arg("seed"));

  mod.def("matrix_body", &matrix_body, py::arg("columns"), py::arg("C"));
  mod.def(
      "fiber_profile",
      [](const Polytope& K, const std::string& q, double p, const Vec& u,
         const std::vector<Vec>& w, const std::string& measure, double beta,
         const std::vector<double>& t_grid, std::int64_t n_samples,
         std::uint64_t seed) {
        const QBody Q = q_from_name(q);
        const auto prof = fiber_profile(
            K, Q, p, u, w,
            measure_from_name(measure, K.dim() * Q.m(), beta), t_grid,
            n_samples, seed);
        py::dict out;
        out["t"] = prof.t;
        out["value"] = prof.value;
        out["stderr"] = prof.se;
        out["diff_stderr"] = prof.diff_se;
        out["i0"] = prof.i0;
        return out;
      },
      py::arg("K"), py::arg("Q"), py::arg("p"), py::arg("u"), py::arg("w"),
      py::arg("measure"), py::arg("beta") = 0.0, py::arg("t_grid"),
      py::arg("n_samples") = 1 << 13, py::arg("seed") = 1);

  mod.def("list_suites", [] {
    std::string out;
    for (const auto& s : suite_table())
      out += s.name + ": " + s.verifies + " [" + s.tolerance + "]\n";
    return out;
  });
  mod.def(
      "run_suite",
      [](const std::string& config_json) {
        return run_suite(json::parse(config_json)).to_json().dump();
      },
      py::arg("config_json"),
      "Run a verification suite from a JSON config string; returns the "
      "report as a JSON string.");

  mod.attr("__version__") = PETTYKIT_VERSION;
}
