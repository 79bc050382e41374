import math

import pytest

ml = pytest.importorskip("manifold_landau")


def test_constant():
    c, residual = ml.landau_constant()
    assert abs(c - 2 * math.cos(math.pi / 9)) <= 1e-12
    assert abs(residual) <= 1e-12


def test_geometry():
    assert ml.project_tangent([0, 0, 1], [1, 0, 1]) == [1, 0, 0]
    g = ml.geodesic([1, 0, 0], [0, 1, 0], math.pi / 2)
    assert max(abs(a - b) for a, b in zip(g, [0, 1, 0])) < 1e-15
    a = ml.covariant_accel([1, 0, 0], [0, 1, 0], [-1, 0, 0])
    assert max(map(abs, a)) == 0.0


def test_latitude_report():
    c = ml.Curve.latitude(math.pi / 4, ml.Phase.linear(1.0))
    assert c.family == "latitude" and c.is_sphere
    r = ml.theorem1_report(c, ml.AuxFunction.chordal([0, 0, 1]), ml.natural_window(c, 4001))
    C = 2 * math.cos(math.pi / 9)
    assert r["hypotheses_ok"] and r["satisfied"]
    assert abs(r["slack_ratio"] - 1 / C**2) <= 1e-6
    assert r["lambda"]["method"] == "closed_form"
    d = ml.proof_diagnostics(c, ml.AuxFunction.chordal([0, 0, 1]), ml.TimeWindow(0, 2 * math.pi, 2001))
    assert d["v_bound_ok"] and d["speed_lipschitz_ok"] and d["chain_ok"]


def test_sphere_report_and_nan():
    poles = ml.Curve.great_circle([0, 0, 1], [1, 0, 0], ml.Phase.linear(1.0))
    s = ml.theorem2_report(poles, ml.TimeWindow(0, 2 * math.pi, 1001))
    assert not s["bound"]["hypotheses_ok"]
    assert math.isnan(s["bound"]["rhs"])


def test_aux_function():
    u = ml.AuxFunction.chordal([0, 0, 1])
    assert u.value([1, 0, 0]) == pytest.approx(1.0)
    assert u.gradient([1, 0, 0]) == pytest.approx([0, 0, -1])
    x = [math.sqrt(0.5), 0, math.sqrt(0.5)]
    assert u.hessian_quadratic(x, [0, 1, 0]) == pytest.approx(math.sqrt(0.5))
    assert abs(u.hessian_quadratic_numeric(x, [0, 1, 0]) - math.sqrt(0.5)) <= 1e-6
    with pytest.raises(ml.Singularity):
        ml.AuxFunction.intrinsic([0, 0, 1]).gradient([0, 0, -1])


def test_chebyshev():
    c = ml.chebyshev_center([[1, 0, 0], [0, 1, 0]])
    assert c["e"] == pytest.approx([math.sqrt(0.5), math.sqrt(0.5), 0], abs=1e-9)
    with pytest.raises(ml.InvalidInput):
        ml.chebyshev_center([])


def test_sampled_and_errors():
    rows = [(0.1 * i, math.cos(0.1 * i), math.sin(0.1 * i), 0.0) for i in range(21)]
    c = ml.Curve.sampled(rows)
    assert c.eval(1.0)["x"] == pytest.approx([math.cos(1.0), math.sin(1.0), 0], abs=1e-12)
    with pytest.raises(ml.OutOfDomain):
        c.eval(5.0)
    with pytest.raises(ml.IngestionError):
        ml.Curve.sampled(rows[:4])
    with pytest.raises(ml.InvalidInput):
        ml.Curve.latitude(0.0, ml.Phase.linear(1.0))
    with pytest.raises(ml.SpecError):
        ml.Curve.from_spec('{"family": "latitude", "colatitude": 1, "bogus": 1}')


def test_classical_and_probe():
    f = ml.Curve.from_spec('{"family": "euclidean", "components": [{"sines": [{"amplitude": 1, "omega": 1}]}]}')
    r = ml.classical_landau_check(f, ml.TimeWindow(0, 2 * math.pi, 4001))
    assert r["slack_ratio"] == pytest.approx(0.5, abs=1e-9)
    p = ml.sharpness_probe("latitude", 5)
    assert abs(p["best_q"] - 1.0) <= 1e-9
    assert p["seed"] == 42


def test_time_series():
    c = ml.Curve.latitude(1.0, ml.Phase.linear(1.0))
    rows = ml.time_series(c, ml.AuxFunction.chordal([0, 0, 1]), ml.TimeWindow(0, 1, 11))
    assert len(rows) == 11
    assert rows[0][1] == pytest.approx(math.sin(1.0))
    bare = ml.time_series(c, None, ml.TimeWindow(0, 1, 11))
    assert math.isnan(bare[0][3])
