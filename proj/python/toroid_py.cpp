#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toroid/bounding.hpp"
#include "toroid/envelope.hpp"
#include "toroid/error.hpp"
#include "toroid/render.hpp"
#include "toroid/torus_intersect.hpp"

namespace py = pybind11;
using namespace toroid;

namespace {

std::vector<std::pair<double, int>> as_pairs(const RootSet& rs) {
  std::vector<std::pair<double, int>> out;
  for (const Root& r : rs.roots()) out.emplace_back(r.value, r.multiplicity);
  return out;
}

QuarticCoeffs as_quartic(const std::array<double, 5>& c) { return {c[0], c[1], c[2], c[3], c[4]}; }

py::dict stats_dict(const StatsRecord& s) {
  py::dict d;
  d["rays_total"] = s.rays_total;
  d["bv_reject_outside"] = s.bv_reject_outside;
  d["bv_reject_slab"] = s.bv_reject_slab;
  d["bv_reject_hole"] = s.bv_reject_hole;
  d["exact_tests"] = s.exact_tests;
  d["hits"] = s.hits;
  d["false_rejects"] = s.false_rejects;
  return d;
}

}  // namespace

PYBIND11_MODULE(toroid, m) {
  m.doc() = "Ray/torus intersection, culling volumes and a small orthographic tracer.";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<Vec3>(m, "Vec3")
      .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
      .def(py::init([](const std::array<double, 3>& v) { return Vec3{v[0], v[1], v[2]}; }))
      .def_readwrite("x", &Vec3::x)
      .def_readwrite("y", &Vec3::y)
      .def_readwrite("z", &Vec3::z)
      .def(py::self == py::self)
      .def("__iter__", [](const Vec3& v) { return py::iter(py::make_tuple(v.x, v.y, v.z)); })
      .def("__repr__", [](const Vec3& v) {
        return "Vec3(" + py::repr(py::float_(v.x)).cast<std::string>() + ", " +
               py::repr(py::float_(v.y)).cast<std::string>() + ", " +
               py::repr(py::float_(v.z)).cast<std::string>() + ")";
      });
  py::implicitly_convertible<py::tuple, Vec3>();
  py::implicitly_convertible<py::list, Vec3>();

  py::class_<Torus>(m, "Torus")
      .def(py::init<double, double>(), py::arg("major"), py::arg("minor"))
      .def(py::init<double, double, const Vec3&, const Vec3&, const Vec3&>(), py::arg("major"),
           py::arg("minor"), py::arg("center"), py::arg("axis_n"), py::arg("axis_u"))
      .def_static("with_axis", &Torus::with_axis, py::arg("major"), py::arg("minor"),
                  py::arg("center"), py::arg("axis"))
      .def_property_readonly("major", &Torus::major)
      .def_property_readonly("minor", &Torus::minor)
      .def_property_readonly("center", &Torus::center)
      .def_property_readonly("axis_n", &Torus::axis_n)
      .def_property_readonly("axis_u", &Torus::axis_u);

  py::class_<Ray3>(m, "Ray3")
      .def(py::init([](const Vec3& a, const Vec3& d) { return Ray3{a, d}; }), py::arg("anchor"),
           py::arg("dir"))
      .def_readwrite("anchor", &Ray3::anchor)
      .def_readwrite("dir", &Ray3::dir)
      .def("at", &Ray3::at);

  py::class_<PlanarRay>(m, "PlanarRay")
      .def(py::init([](double ax, double ay, double dx, double dy, double zc) {
             return PlanarRay{ax, ay, dx, dy, zc};
           }),
           py::arg("anchor_x"), py::arg("anchor_y"), py::arg("dir_x"), py::arg("dir_y"),
           py::arg("z_c"))
      .def_readwrite("anchor_x", &PlanarRay::anchor_x)
      .def_readwrite("anchor_y", &PlanarRay::anchor_y)
      .def_readwrite("dir_x", &PlanarRay::dir_x)
      .def_readwrite("dir_y", &PlanarRay::dir_y)
      .def_readwrite("z_c", &PlanarRay::z_c);

  py::class_<HitRecord>(m, "HitRecord")
      .def_readonly("t", &HitRecord::t)
      .def_readonly("point", &HitRecord::point)
      .def_readonly("normal", &HitRecord::normal)
      .def_readonly("multiplicity", &HitRecord::multiplicity);

  m.def("torus_signed", &torus_signed);
  m.def("torus_quartic_residual", &torus_quartic_residual);
  m.def("surface_normal", &surface_normal);
  m.def("canonicalize_ray", [](const Ray3& ray) {
    const CanonicalRay cr = canonicalize_ray(ray);
    return py::make_tuple(cr.planar, cr.phi_rot, cr.mirror);
  });

  // Coefficient tuples run from the t^4 term down to the constant.
  m.def("assemble_quartic", [](const Ray3& ray, const Torus& t) {
    const QuarticCoeffs q = assemble_quartic(ray, t);
    return std::array<double, 5>{q.a, q.b, q.c, q.d, q.e};
  });
  m.def("solve_quartic", [](const std::array<double, 5>& c) { return as_pairs(solve_quartic(as_quartic(c))); },
        "Distinct real roots as (value, multiplicity) pairs.");
  m.def("isolate_and_bisect",
        [](const std::array<double, 5>& c, double lo, double hi, double tol) {
          return as_pairs(isolate_and_bisect(as_quartic(c), lo, hi, tol));
        },
        py::arg("coeffs"), py::arg("lo"), py::arg("hi"), py::arg("tol") = 1e-12);
  m.def("intersect", &intersect, py::arg("ray"), py::arg("torus"));
  m.def("iterative_intersect", &iterative_intersect, py::arg("ray"), py::arg("torus"),
        py::arg("tol") = 1e-10);
  m.def("classify_plane", [](double z_c, const Torus& t) { return to_string(classify_plane(z_c, t)); });

  m.def("standard_bv", [](const Ray3& r, const Torus& t) { return to_string(standard_bv(r, t)); });
  m.def("bv_dispatch", [](const Ray3& r, const Torus& t) { return to_string(bv_dispatch(r, t)); });
  m.def("hole_bv", [](const PlanarRay& r, const Torus& t) { return to_string(hole_bv(r, t)); });
  m.def("tightened_slab", &tightened_slab);

  m.def("render",
        [](const std::string& scene_text, bool verify) {
          const TraceResult res = trace_image(parse_scene(scene_text), TraceOptions{verify});
          return py::make_tuple(py::bytes(encode_ppm(res.image)), stats_dict(res.stats));
        },
        py::arg("scene"), py::arg("verify") = false,
        "Traces a scene given as text; returns (ppm_bytes, stats).");
  m.def("benchmark_sweep",
        [](const std::vector<double>& nu, int rays, std::uint64_t seed) {
          py::list rows;
          for (const BenchRow& r : benchmark_sweep(nu, rays, seed)) {
            py::dict d;
            d["nu"] = r.nu;
            d["bundle"] = r.bundle;
            d["std_reject_rate"] = r.std_reject_rate;
            d["hole_reject_rate"] = r.hole_reject_rate;
            d["false_reject_count"] = r.false_reject_count;
            rows.append(d);
          }
          return rows;
        },
        py::arg("nu"), py::arg("rays"), py::arg("seed") = 42);
}
