#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "planeforge/complex.hpp"
#include "planeforge/geometry.hpp"
#include "planeforge/gf.hpp"
#include "planeforge/nerve.hpp"
#include "planeforge/plane.hpp"
#include "planeforge/spectra.hpp"

namespace py = pybind11;
using namespace planeforge;

namespace {

std::vector<std::vector<int>> faces_list(const cx::SimplicialComplex& K) {
  return {K.faces().begin(), K.faces().end()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "projective plane expansion, collapsibility and representation audits";

  py::class_<gf::Field>(m, "Field")
      .def_static("make", &gf::Field::make, py::arg("p"), py::arg("k"))
      .def_property_readonly("p", &gf::Field::p)
      .def_property_readonly("k", &gf::Field::k)
      .def_property_readonly("q", &gf::Field::q)
      .def_property_readonly(
          "irreducible", [](const gf::Field& f) { return f.spec().irreducible; })
      .def("add", &gf::Field::add)
      .def("mul", &gf::Field::mul)
      .def("inv", &gf::Field::inv);

  py::class_<plane::Plane>(m, "Plane")
      .def_property_readonly("q", [](const plane::Plane& pl) { return pl.q; })
      .def_property_readonly("n", [](const plane::Plane& pl) { return pl.n; })
      .def_property_readonly("lines",
                             [](const plane::Plane& pl) {
                               std::vector<std::vector<int>> out;
                               for (const auto& l : pl.lines)
                                 out.push_back(l.members);
                               return out;
                             })
      .def_property_readonly("point_to_lines",
                             [](const plane::Plane& pl) { return pl.point_to_lines; })
      .def("incidence_text", [](const plane::Plane& pl) {
        std::ostringstream out;
        plane::write_incidence(pl, out);
        return out.str();
      });

  m.def("build_plane", &plane::build_plane, py::arg("q"));
  m.def("verify_axioms", [](const plane::Plane& pl) {
    const auto rep = plane::verify_axioms(pl);
    return py::dict(
        py::arg("two_points_unique_line") = rep.two_points_unique_line,
        py::arg("two_lines_unique_point") = rep.two_lines_unique_point,
        py::arg("line_sizes_ok") = rep.line_sizes_ok,
        py::arg("point_degrees_ok") = rep.point_degrees_ok,
        py::arg("all_pass") = rep.all_pass());
  });
  m.def("dual", &plane::dual);

  m.def("gram", &spectra::gram);
  m.def("gram_certificate", [](const plane::Plane& pl) {
    const auto cert = spectra::gram_certificate(pl);
    return py::make_tuple(cert.lambda1, cert.lambda2, cert.n);
  });
  m.def("tanner_lower_bound", [](int q, int n, int a) {
    const auto r = spectra::tanner_lower_bound(q, n, a);
    return py::make_tuple(boost::multiprecision::numerator(r).str(),
                          boost::multiprecision::denominator(r).str());
  });
  m.def("missed_lines", [](const plane::Plane& pl, const std::vector<int>& A) {
    const auto rep = spectra::missed_lines(pl, A);
    return py::dict(py::arg("missed") = rep.missed,
                    py::arg("neighborhood") = rep.neighborhood,
                    py::arg("bound_holds") = rep.bound_holds,
                    py::arg("tanner_holds") = rep.tanner_holds);
  });
  m.def("expansion_audit_exhaustive", [](const plane::Plane& pl) {
    return spectra::audit_summary_json(spectra::expansion_audit_exhaustive(pl));
  });
  m.def(
      "expansion_audit_sampled",
      [](const plane::Plane& pl, std::uint64_t count, std::uint64_t seed) {
        return spectra::audit_summary_json(
            spectra::expansion_audit_sampled(pl, count, seed));
      },
      py::arg("plane"), py::arg("count"), py::arg("seed"));

  py::class_<cx::SimplicialComplex>(m, "SimplicialComplex")
      .def_static("from_maximal", &cx::SimplicialComplex::from_maximal)
      .def_property_readonly("faces", &faces_list)
      .def("f_vector", &cx::SimplicialComplex::f_vector)
      .def("face_count", &cx::SimplicialComplex::face_count)
      .def("maximal_faces", &cx::SimplicialComplex::maximal_faces);

  m.def("full_simplex", &cx::full_simplex);
  m.def("kq_complex", &cx::kq_complex);
  m.def("kq_collapse_steps", [](const plane::Plane& pl) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const auto& s : cx::kq_collapse_sequence(pl))
      out.emplace_back(s.sigma, s.tau);
    return out;
  });
  m.def("simplex_collapse_steps", [](int d) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const auto& s : cx::simplex_collapse_sequence(d))
      out.emplace_back(s.sigma, s.tau);
    return out;
  });
  m.def("verify_sequence",
        [](const cx::SimplicialComplex& K,
           const std::vector<std::pair<std::vector<int>, std::vector<int>>>& raw,
           int d) {
          std::vector<cx::CollapseStep> steps;
          for (const auto& [sigma, tau] : raw) steps.push_back({sigma, tau});
          const auto res = cx::verify_sequence(K, steps, d);
          return py::dict(py::arg("ok") = res.ok,
                          py::arg("failed_index") = res.failed_index,
                          py::arg("reason") = res.reason);
        });
  m.def("search_greedy", [](const cx::SimplicialComplex& K, int d) {
    return cx::search_greedy(K, d).found;
  });

  m.def("nerve_f_vector", [](const std::vector<std::vector<int>>& sets) {
    nerve::SetFamily fam;
    std::set<int> ground;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      auto elems = sets[i];
      std::sort(elems.begin(), elems.end());
      for (int x : elems) ground.insert(x);
      fam.members.push_back({"set" + std::to_string(i), std::move(elems)});
    }
    fam.ground.assign(ground.begin(), ground.end());
    return nerve::nerve_of(fam).f_vector();
  });

  m.def("audit_representation_json",
        [](const std::string& rep_json, int q, std::size_t budget) {
          auto rep = geometry::representation_from_json(rep_json);
          geometry::AuditOptions opts;
          opts.selection.max_evaluations = budget;
          const auto pl = plane::build_plane(q);
          return geometry::audit_report_json(
              geometry::audit_representation(rep, pl, opts), q);
        },
        py::arg("rep_json"), py::arg("q"), py::arg("budget") = 1u << 22);
}
