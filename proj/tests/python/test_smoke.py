"""Smoke tests of the python bindings (built module on $PYTHONPATH)."""

import math

import pytest

import sphquad

FOUR_PI = 4 * math.pi


def test_unit_point_construction():
    p = sphquad.UnitPoint(0, 0, 1)
    assert (p.x, p.y, p.z) == (0.0, 0.0, 1.0)
    q = sphquad.UnitPoint.normalized(3, 4, 0)
    assert math.isclose(q.x, 0.6) and math.isclose(q.y, 0.8)
    assert math.isclose(sphquad.geodesic_distance(p, q), math.pi / 2, rel_tol=1e-14)
    assert tuple(p) == (0.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        sphquad.UnitPoint(1.1, 0, 0)


def test_pointset_and_io(tmp_path):
    ps = sphquad.PointSet([sphquad.UnitPoint(1, 0, 0), (0, 1, 0)])
    assert len(ps) == 2
    assert ps[1].y == 1.0
    text = sphquad.format_pointset(ps)
    again = sphquad.parse_pointset(text)
    assert again.points() == ps.points()

    target = str(tmp_path / "pts.txt")
    sphquad.save_pointset(ps, target)
    assert len(sphquad.load_pointset(target)) == 2

    with pytest.raises(ValueError):
        sphquad.parse_pointset("0 0 1.5\n")


def test_rules_and_integration():
    rule = sphquad.equal_area_rule(200)
    assert rule.kind == "equal_area"
    assert math.isclose(rule.weight_sum(), FOUR_PI, rel_tol=1e-14)
    area = sphquad.integrate(rule, lambda x, y, z: 1.0)
    assert math.isclose(area, FOUR_PI, rel_tol=1e-14)
    second_moment = sphquad.integrate(rule, lambda x, y, z: z * z)
    assert math.isclose(second_moment, FOUR_PI / 3, rel_tol=1e-2)

    trap = sphquad.trapezoidal_rule(8)
    assert trap.kind == "trapezoidal" and trap.parameter == 8
    assert len(trap) == 9 * 17


def test_design_generation_and_checks():
    result = sphquad.generate_design(4)
    assert result.converged and len(result.points) == 25
    assert sphquad.a_nt(result.points, 4) <= 1e-12
    assert sphquad.verify_design(result.points, 4).ok
    assert sphquad.design_lower_bound(30) == 256

    rule = sphquad.design_rule(result.points, 4)
    q = sphquad.integrate(rule, lambda x, y, z: x * x)
    assert math.isclose(q, FOUR_PI / 3, rel_tol=1e-12)

    gram = sphquad.gram_logdet(result.points, 4)
    assert gram.rank == 25 and not gram.singular
    assert sphquad.constraint_norm(result.points, 4) < 1e-10


def test_design_seed_determinism():
    a = sphquad.generate_design(3, options=sphquad.DesignOptions(seed=7))
    b = sphquad.generate_design(3, options=sphquad.DesignOptions(seed=7))
    assert a.points.points() == b.points.points()


def test_wce_closed_forms():
    single = sphquad.PointSet([sphquad.UnitPoint.north_pole()])
    pair = sphquad.PointSet([sphquad.UnitPoint.north_pole(), sphquad.UnitPoint.south_pole()])
    assert math.isclose(sphquad.wce(single, 1.5), math.sqrt(4 / 3), rel_tol=1e-13)
    assert math.isclose(sphquad.wce(pair, 1.5), math.sqrt(1 / 3), rel_tol=1e-13)
    assert math.isclose(sphquad.v_const(2.5), sphquad.v_const_gamma(2.5), rel_tol=1e-13)
    assert sphquad.wce_smoothing_order(3.5) == 2
    with pytest.raises(ValueError):
        sphquad.wce(single, 1.0)


def test_transform_chain():
    spec = sphquad.TransformSpec("sidi", 3.0,
                                 singular_point=sphquad.UnitPoint.south_pole())
    assert spec.kind == "sidi" and spec.grading == 3.0
    f5 = sphquad.test_function("f5")
    rule = sphquad.design_rule(sphquad.generate_design(12).points, 12)
    q = sphquad.integrate_singular(rule, lambda x, y, z: f5(x, y, z), spec)
    assert abs(q - f5.exact) / f5.exact < 0.02

    ident = sphquad.TransformSpec("atkinson", 1.0)
    plain = sphquad.integrate(rule, lambda x, y, z: z * z)
    chained = sphquad.integrate_singular(rule, lambda x, y, z: z * z, ident)
    assert math.isclose(plain, chained, rel_tol=1e-13)

    with pytest.raises(ValueError):
        sphquad.TransformSpec("atkinson", 0.5)


def test_singular_hit_maps_to_runtime_error():
    rule = sphquad.equal_area_rule(1)
    spec = sphquad.TransformSpec(singular_point=sphquad.UnitPoint.north_pole())
    with pytest.raises(sphquad.SingularHitError):
        sphquad.integrate_singular(rule, lambda x, y, z: 1.0, spec)
    assert issubclass(sphquad.SingularHitError, RuntimeError)


def test_ellipsoid_helpers():
    ell = sphquad.SurfaceEllipsoid(1, 2, 3)
    north = sphquad.UnitPoint.north_pole()
    assert sphquad.ellipsoid_map(ell, north) == (0.0, 0.0, 3.0)
    assert math.isclose(sphquad.ellipsoid_jacobian(ell, north), 2.0, rel_tol=1e-14)
    pre = sphquad.ellipsoid_preimage(ell, (0.0, 0.0, 3.0))
    assert pre.z == 1.0


def test_geometry_metrics():
    s = 1 / math.sqrt(3)
    tet = sphquad.PointSet([(s, s, s), (s, -s, -s), (-s, s, -s), (-s, -s, s)])
    delta = math.acos(-1 / 3)
    assert math.isclose(sphquad.min_angle(tet), delta, rel_tol=1e-13)
    report = sphquad.geometry_report(tet, 150)
    assert math.isclose(report.mesh_norm, math.pi - delta, rel_tol=1e-3)
    assert report.mesh_ratio >= 1.0


def test_harmonics_and_transform_scalars():
    vals = sphquad.eval_harmonics(2, sphquad.UnitPoint.north_pole())
    assert len(vals) == 9
    assert math.isclose(vals[0], 1 / math.sqrt(FOUR_PI), rel_tol=1e-14)
    assert math.isclose(sphquad.legendre_p(2, 0.5), (3 * 0.25 - 1) / 2, rel_tol=1e-14)
    assert math.isclose(sphquad.atkinson_colatitude(1.0, 0.7), 0.7, abs_tol=1e-15)
    assert math.isclose(sphquad.sidi_psi(1.0, 0.5), 0.5, rel_tol=1e-14)


def test_test_function_table():
    fns = sphquad.all_test_functions()
    assert [f.id for f in fns] == ["f1", "f2", "f3", "f4", "f5", "f6"]
    f4 = sphquad.test_function("f4")
    assert math.isclose(f4(0, 0, 1), 1.0, rel_tol=1e-14)
    assert f4(0, 0, -1) == 0.0
    f6 = sphquad.test_function("f6")
    assert f6.surface.c == 3.0
    assert f6.singular_point is not None


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
