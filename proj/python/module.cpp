#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <array>
#include <optional>
#include <sstream>

#include "sphquad/designs.hpp"
#include "sphquad/errors.hpp"
#include "sphquad/geometry.hpp"
#include "sphquad/harmonics.hpp"
#include "sphquad/pointset.hpp"
#include "sphquad/rules.hpp"
#include "sphquad/singular.hpp"
#include "sphquad/sphere.hpp"
#include "sphquad/testfns.hpp"
#include "sphquad/transforms.hpp"
#include "sphquad/wce.hpp"

namespace py = pybind11;
using namespace sphquad;

namespace {

TransformKind parse_kind(const std::string& name) {
    if (name == "none") return TransformKind::None;
    if (name == "atkinson") return TransformKind::Atkinson;
    if (name == "sidi") return TransformKind::Sidi;
    throw py::value_error("unknown transform kind '" + name + "' (none|atkinson|sidi)");
}

std::string kind_name(TransformKind k) {
    switch (k) {
        case TransformKind::None: return "none";
        case TransformKind::Atkinson: return "atkinson";
        case TransformKind::Sidi: return "sidi";
    }
    return "?";
}

std::string rule_kind_name(RuleKind k) {
    switch (k) {
        case RuleKind::Trapezoidal: return "trapezoidal";
        case RuleKind::EqualArea: return "equal_area";
        case RuleKind::TDesign: return "design";
        case RuleKind::External: return "external";
    }
    return "?";
}

py::object opt_tuple(const std::optional<Vec3>& v) {
    if (!v) return py::none();
    return py::make_tuple(v->x, v->y, v->z);
}

}  // namespace

PYBIND11_MODULE(_sphquad, m) {
    m.doc() = "Quadrature on the unit sphere: t-designs, equal-area and trapezoidal "
              "rules, worst-case errors in Sobolev spaces, grading transforms for "
              "point singularities, and geometry metrics.";

    py::register_exception<NotUnitError>(m, "NotUnitError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DuplicatePointsError>(m, "DuplicatePointsError", PyExc_ValueError);
    py::register_exception<NonConvergedError>(m, "NonConvergedError", PyExc_RuntimeError);
    py::register_exception<SingularGramError>(m, "SingularGramError", PyExc_RuntimeError);
    py::register_exception<SingularHitError>(m, "SingularHitError", PyExc_RuntimeError);
    py::register_exception<NonFiniteValueError>(m, "NonFiniteValueError", PyExc_RuntimeError);
    py::register_exception<NegativeRadicandError>(m, "NegativeRadicandError", PyExc_RuntimeError);

    py::class_<UnitPoint>(m, "UnitPoint", "Point on the unit sphere (input renormalized "
                                          "when within 1e-8 of unit length).")
        .def(py::init([](double x, double y, double z) { return UnitPoint::checked(x, y, z); }),
             py::arg("x"), py::arg("y"), py::arg("z"))
        .def(py::init([](const std::array<double, 3>& a) {
                 return UnitPoint::checked(a[0], a[1], a[2]);
             }),
             py::arg("xyz"))
        .def_static("normalized",
                    [](double x, double y, double z) { return UnitPoint::normalized(x, y, z); },
                    py::arg("x"), py::arg("y"), py::arg("z"))
        .def_static("north_pole", &UnitPoint::north_pole)
        .def_static("south_pole", &UnitPoint::south_pole)
        .def_property_readonly("x", &UnitPoint::x)
        .def_property_readonly("y", &UnitPoint::y)
        .def_property_readonly("z", &UnitPoint::z)
        .def("dot", &UnitPoint::dot)
        .def("__iter__",
             [](const UnitPoint& p) {
                 return py::iter(py::make_tuple(p.x(), p.y(), p.z()));
             })
        .def("__repr__", [](const UnitPoint& p) {
            std::ostringstream os;
            os << "UnitPoint(" << p.x() << ", " << p.y() << ", " << p.z() << ")";
            return os.str();
        });
    py::implicitly_convertible<py::sequence, UnitPoint>();

    m.def("geodesic_distance", &geodesic_distance, py::arg("a"), py::arg("b"),
          "Great-circle distance in [0, pi].");

    py::class_<Provenance>(m, "Provenance")
        .def_readonly("kind", &Provenance::kind)
        .def_readonly("degree", &Provenance::degree);

    py::class_<PointSet>(m, "PointSet")
        .def(py::init<>())
        .def(py::init([](const std::vector<UnitPoint>& pts) {
                 return PointSet(pts, Provenance{"external", -1});
             }),
             py::arg("points"))
        .def("__len__", &PointSet::size)
        .def("__getitem__",
             [](const PointSet& ps, std::size_t i) {
                 if (i >= ps.size()) throw py::index_error();
                 return ps[i];
             })
        .def_property_readonly("provenance", &PointSet::provenance)
        .def("points",
             [](const PointSet& ps) {
                 std::vector<std::array<double, 3>> out;
                 out.reserve(ps.size());
                 for (const UnitPoint& p : ps) out.push_back({p.x(), p.y(), p.z()});
                 return out;
             },
             "Coordinates as a list of (x, y, z) triples.");

    m.def("load_pointset", &load_pointset, py::arg("file"));
    m.def("parse_pointset", &parse_pointset, py::arg("text"), py::arg("origin") = "<string>");
    m.def("save_pointset", &save_pointset, py::arg("points"), py::arg("file"));
    m.def("format_pointset", &format_pointset, py::arg("points"));
    m.def("unique_points", &unique_points, py::arg("points"), py::arg("tol") = 1e-12);

    py::class_<SurfaceEllipsoid>(m, "SurfaceEllipsoid")
        .def(py::init([](double a, double b, double c) {
                 return SurfaceEllipsoid{a, b, c};
             }),
             py::arg("a"), py::arg("b"), py::arg("c"))
        .def_readonly("a", &SurfaceEllipsoid::a)
        .def_readonly("b", &SurfaceEllipsoid::b)
        .def_readonly("c", &SurfaceEllipsoid::c);

    py::class_<TransformSpec>(m, "TransformSpec",
                              "Grading transform selection: kind 'none', 'atkinson' (q) or "
                              "'sidi' (m), an optional singular point the clustered pole is "
                              "rotated onto, and an optional ellipsoid surface.")
        .def(py::init([](const std::string& kind, double grading,
                         std::optional<UnitPoint> singular_point,
                         std::optional<std::array<double, 3>> surface) {
                 TransformSpec spec;
                 spec.kind = parse_kind(kind);
                 spec.grading = grading;
                 spec.singular_point = singular_point;
                 if (surface)
                     spec.surface = SurfaceEllipsoid{(*surface)[0], (*surface)[1], (*surface)[2]};
                 spec.validate();
                 return spec;
             }),
             py::arg("kind") = "none", py::arg("grading") = 1.0,
             py::arg("singular_point") = py::none(), py::arg("surface") = py::none())
        .def_property_readonly("kind", [](const TransformSpec& s) { return kind_name(s.kind); })
        .def_readonly("grading", &TransformSpec::grading)
        .def_property_readonly("singular_point",
                               [](const TransformSpec& s) -> py::object {
                                   if (!s.singular_point) return py::none();
                                   return py::cast(*s.singular_point);
                               })
        .def_property_readonly("surface", [](const TransformSpec& s) -> py::object {
            if (!s.surface) return py::none();
            return py::cast(*s.surface);
        });

    py::class_<QuadratureRule>(m, "QuadratureRule")
        .def_readonly("points", &QuadratureRule::points)
        .def_readonly("weights", &QuadratureRule::weights)
        .def_property_readonly("kind",
                               [](const QuadratureRule& r) { return rule_kind_name(r.kind); })
        .def_readonly("parameter", &QuadratureRule::parameter)
        .def("__len__", &QuadratureRule::size)
        .def("weight_sum", &QuadratureRule::weight_sum);

    m.def("trapezoidal_rule", &trapezoidal_rule, py::arg("n"),
          py::arg("grading") = TransformSpec{});
    m.def("equal_area_rule", &equal_area_rule, py::arg("N"));
    m.def("equal_area_centers", &equal_area_centers, py::arg("N"));
    m.def("design_rule", &design_rule, py::arg("points"), py::arg("t"));

    m.def("integrate",
          [](const QuadratureRule& rule, const py::function& f) {
              return integrate(rule, [&](const UnitPoint& p) {
                  return f(p.x(), p.y(), p.z()).cast<double>();
              });
          },
          py::arg("rule"), py::arg("f"),
          "Apply the rule to f(x, y, z); deterministic compensated summation.");

    m.def("integrate_singular",
          [](const QuadratureRule& rule, const py::function& f, const TransformSpec& spec,
             int threads) {
              return integrate_singular(rule,
                                        [&](const Vec3& v) {
                                            return f(v.x, v.y, v.z).cast<double>();
                                        },
                                        spec, threads);
          },
          py::arg("rule"), py::arg("f"), py::arg("spec"), py::arg("threads") = 1,
          "Integrate with the grading/rotation/ellipsoid chain of spec; f receives points "
          "of the integration surface.");

    py::class_<DesignOptions>(m, "DesignOptions")
        .def(py::init([](int max_iterations, double tolerance, std::uint64_t seed) {
                 DesignOptions o;
                 o.max_iterations = max_iterations;
                 o.tolerance = tolerance;
                 o.seed = seed;
                 return o;
             }),
             py::arg("max_iterations") = 400, py::arg("tolerance") = 1e-12, py::arg("seed") = 0)
        .def_readonly("max_iterations", &DesignOptions::max_iterations)
        .def_readonly("tolerance", &DesignOptions::tolerance)
        .def_readonly("seed", &DesignOptions::seed);

    py::class_<DesignResult>(m, "DesignResult")
        .def_readonly("points", &DesignResult::points)
        .def_readonly("degree", &DesignResult::degree)
        .def_readonly("residual", &DesignResult::residual)
        .def_readonly("iterations", &DesignResult::iterations)
        .def_readonly("converged", &DesignResult::converged);

    m.def("generate_design", &generate_design, py::arg("t"), py::arg("N") = -1,
          py::arg("options") = DesignOptions{},
          "Levenberg-Marquardt spherical t-design search from an equal-area start.");
    m.def("design_lower_bound", &design_lower_bound, py::arg("t"));
    m.def("a_nt", &a_nt, py::arg("points"), py::arg("t"),
          "Equal-weight quadrature defect over degrees 1..t (zero for a t-design).");
    m.def("a_nt_kernel", &a_nt_kernel, py::arg("points"), py::arg("t"), py::arg("threads") = 1);

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("residual", &VerifyReport::residual)
        .def_readonly("max_poly_error", &VerifyReport::max_poly_error)
        .def_readonly("ok", &VerifyReport::ok);
    m.def("verify_design", &verify_design, py::arg("points"), py::arg("t"),
          py::arg("tol") = 1e-12);

    py::class_<GramReport>(m, "GramReport")
        .def_readonly("log_det", &GramReport::log_det)
        .def_readonly("rank", &GramReport::rank)
        .def_readonly("singular", &GramReport::singular);
    m.def("gram_logdet", &gram_logdet, py::arg("points"), py::arg("t"));
    m.def("constraint_norm", &constraint_norm, py::arg("points"), py::arg("t"));

    m.def("wce", &wce, py::arg("points"), py::arg("s"), py::arg("threads") = 1,
          "Worst-case equal-weight quadrature error in the unit ball of H^s(S^2).");
    m.def("v_const", &v_const, py::arg("s"));
    m.def("v_const_gamma", &v_const_gamma, py::arg("s"));
    m.def("alpha_coeff", &alpha_coeff, py::arg("s"), py::arg("ell"));
    m.def("alpha_coeff_gamma", &alpha_coeff_gamma, py::arg("s"), py::arg("ell"));
    m.def("wce_pair_kernel", &wce_pair_kernel, py::arg("z"), py::arg("s"));
    m.def("wce_smoothing_order", &wce_smoothing_order, py::arg("s"));

    m.def("min_angle", &min_angle, py::arg("points"));
    m.def("mesh_norm", &mesh_norm, py::arg("points"), py::arg("resolution") = 200);
    m.def("mesh_ratio", &mesh_ratio, py::arg("points"), py::arg("resolution") = 200);
    py::class_<GeometryReport>(m, "GeometryReport")
        .def_readonly("mesh_norm", &GeometryReport::mesh_norm)
        .def_readonly("min_angle", &GeometryReport::min_angle)
        .def_readonly("mesh_ratio", &GeometryReport::mesh_ratio)
        .def_readonly("resolution", &GeometryReport::resolution);
    m.def("geometry_report", &geometry_report, py::arg("points"), py::arg("resolution") = 200);

    m.def("legendre_p", &legendre_p, py::arg("ell"), py::arg("x"));
    m.def("eval_harmonics",
          [](int degree, const UnitPoint& p) {
              return eval_harmonics(HarmonicBasis{degree}, p);
          },
          py::arg("degree"), py::arg("p"),
          "Real orthonormal spherical-harmonic values through the given degree.");

    m.def("atkinson_colatitude", &atkinson_colatitude, py::arg("q"), py::arg("theta"));
    m.def("atkinson_colatitude_inverse", &atkinson_colatitude_inverse, py::arg("q"),
          py::arg("theta_tilde"));
    m.def("atkinson_density", &atkinson_density, py::arg("q"), py::arg("theta"));
    m.def("atkinson_surface_factor", &atkinson_surface_factor, py::arg("q"), py::arg("theta"));
    m.def("sidi_psi", &sidi_psi, py::arg("m"), py::arg("t"));
    m.def("sidi_colatitude", &sidi_colatitude, py::arg("m"), py::arg("theta"));
    m.def("sidi_density", &sidi_density, py::arg("m"), py::arg("theta"));
    m.def("sidi_surface_factor", &sidi_surface_factor, py::arg("m"), py::arg("theta"));
    m.def("ellipsoid_map",
          [](const SurfaceEllipsoid& e, const UnitPoint& p) {
              const Vec3 v = ellipsoid_map(e, p);
              return py::make_tuple(v.x, v.y, v.z);
          },
          py::arg("surface"), py::arg("p"));
    m.def("ellipsoid_jacobian", &ellipsoid_jacobian, py::arg("surface"), py::arg("p"));
    m.def("ellipsoid_preimage",
          [](const SurfaceEllipsoid& e, const std::array<double, 3>& v) {
              return ellipsoid_preimage(e, Vec3{v[0], v[1], v[2]});
          },
          py::arg("surface"), py::arg("surface_point"));

    py::class_<TestFunction>(m, "TestFunction")
        .def_readonly("id", &TestFunction::id)
        .def_readonly("description", &TestFunction::description)
        .def_readonly("exact", &TestFunction::exact)
        .def_property_readonly("singular_point",
                               [](const TestFunction& f) { return opt_tuple(f.singular_point); })
        .def_property_readonly("surface",
                               [](const TestFunction& f) -> py::object {
                                   if (!f.surface) return py::none();
                                   return py::cast(*f.surface);
                               })
        .def("__call__",
             [](const TestFunction& f, double x, double y, double z) {
                 return f.eval(Vec3{x, y, z});
             },
             py::arg("x"), py::arg("y"), py::arg("z"));
    m.def("test_function", &test_function, py::arg("id"),
          py::return_value_policy::reference);
    m.def("all_test_functions", &all_test_functions, py::return_value_policy::reference);
}
