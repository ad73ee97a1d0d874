import math
import random
from fractions import Fraction

import numpy as np
import pytest

from eigencubic.algebra import MetrisedAlgebra
from eigencubic.cubics import (CubicForm, cartan_cubic, catalog_build,
                               trivial_cubic)
from eigencubic.identities import (check_eiconal, check_harmonic, check_radial,
                                   classify, mean_curvature, sample_cone,
                                   trace_identity_cubic,
                                   trace_identity_quadratic)
from eigencubic.poly import Poly, random_zero

DIM3 = catalog_build("clifford-q0")


def test_harmonic():
    assert not check_harmonic(trivial_cubic(3, 1))
    assert check_harmonic(DIM3)


def test_radial_examples():
    assert check_radial(trivial_cubic(5, 1), "exact").constant == 0
    r = check_radial(DIM3, "exact")
    assert r.passed and r.constant == -8
    bad = CubicForm(2, {(0, 0, 0): Fraction(1), (1, 1, 1): Fraction(1)})
    assert not check_radial(bad, "exact").passed
    with pytest.raises(ValueError):
        check_radial(CubicForm(3, {}))


def test_radial_random_agrees_with_exact():
    for name in ("clifford-q1", "cartan-d1", "involution-d2"):
        u = catalog_build(name)
        ex = check_radial(u, "exact")
        rn = check_radial(u, "random", seed=3)
        assert ex.constant == rn.constant
        assert rn.error_bound <= (5 / 10 ** 6) ** 20


def test_radial_residual_random_zero():
    # build the degree-5 residual of the dim-3 example symbolically and
    # hand it to the randomized zero test
    u = DIM3
    grads = u.gradient()
    G = sum((g * g for g in grads), Poly.zero(3))
    half = Fraction(1, 2)
    P = G * u.laplacian() - half * sum(
        (grads[j] * G.diff(j) for j in range(3)), Poly.zero(3))
    r2 = Poly(3, {((i, 2),): Fraction(1) for i in range(3)})
    residual = P - (-8) * r2 * u.to_poly()
    verdict, bound, _ = random_zero(residual, trials=20, bound=10 ** 6, seed=1)
    assert verdict
    assert bound <= (5 / 10 ** 6) ** 20


def test_eiconal():
    for d, kappa in ((1, Fraction(9)), (2, Fraction(1, 3))):
        r = check_eiconal(cartan_cubic(d))
        assert r.passed and r.constant == kappa
    for d in (4, 8):
        r = check_eiconal(cartan_cubic(d))
        assert r.passed and r.constant == Fraction(1, 3)
    assert not check_eiconal(DIM3, "exact").passed
    assert not check_eiconal(CubicForm(3, {})).passed


def test_eiconal_normalized_float():
    # rescaled by 3/sqrt(kappa) the form satisfies |Du|^2 = 9|x|^4 to 1e-9
    rng = np.random.default_rng(0)
    for d in (1, 2):
        u = cartan_cubic(d)
        kappa = check_eiconal(u).constant
        uf = u.to_float().scaled(3.0 / math.sqrt(float(kappa)))
        T = uf.dense_tensor()
        for _ in range(20):
            p = rng.standard_normal(u.n)
            p /= np.linalg.norm(p)
            g = 3 * np.einsum("abc,b,c->a", T, p, p)
            assert abs(g @ g - 9.0) < 1e-9


def test_eiconal_implies_square_identity():
    # <x^2, x^2> = 4 kappa <x,x>^2, exactly, including the sqrt3 forms
    rng = random.Random(1)
    for d in (1, 2, 4, 8):
        u = cartan_cubic(d)
        kappa = check_eiconal(u).constant
        alg = MetrisedAlgebra(u)
        for _ in range(10 if d <= 2 else 3):
            x = [Fraction(rng.randint(-9, 9), rng.randint(1, 3))
                 for _ in range(u.n)]
            x2 = alg.multiply(x, x)
            xx = sum(v * v for v in x)
            assert sum(v * v for v in x2) == 4 * kappa * xx * xx


def test_trace_identity_quadratic():
    assert trace_identity_quadratic(DIM3, "exact").constant == 8
    q1 = catalog_build("clifford-q1")
    assert not trace_identity_quadratic(q1, "exact").passed
    r = trace_identity_quadratic(cartan_cubic(1), "exact")
    assert r.passed and r.constant > 0


def test_trace_identity_cubic():
    assert trace_identity_cubic(DIM3, "exact").constant == 24
    assert trace_identity_cubic(trivial_cubic(2, 1), "exact").constant == 216
    for name in ("clifford-q1", "cartan-d1", "involution-d2", "octonion21"):
        r = trace_identity_cubic(catalog_build(name))
        assert r.passed, name


def test_trace_cube_vanishes_for_complexified_family():
    # tr(D^2 u)^3 is identically zero for the real parts of holomorphic
    # determinants; the exact path proves it at d = 1, the randomized
    # path agrees at d = 2
    from eigencubic.cubics import complexified_cubic
    r = trace_identity_cubic(complexified_cubic(1), "exact")
    assert r.passed and r.constant == 0
    r2 = trace_identity_cubic(complexified_cubic(2), seed=5)
    assert r2.passed and r2.constant == 0


def test_theta_is_minus_six_kappa_for_eiconal_forms():
    for d in (1, 2, 4, 8):
        u = cartan_cubic(d)
        theta = check_radial(u).constant
        kappa = check_eiconal(u).constant
        assert theta == -6 * kappa


def test_classify_labels():
    assert classify(trivial_cubic(3, 1)).label == "trivial"
    assert classify(catalog_build("clifford-q1")).label == "clifford-type"
    assert classify(catalog_build("clifford-q2")).label == "clifford-type"
    assert classify(cartan_cubic(1)).label == "exceptional-or-mutant"
    assert classify(catalog_build("involution-d2")).label == "exceptional-or-mutant"
    bad = CubicForm(2, {(0, 0, 0): Fraction(1), (1, 1, 1): Fraction(1)})
    assert classify(bad).label == "not-eigencubic"
    # the 3-variable example passes the quadratic trace predicate although
    # its dimension is outside the admissible table; reported as computed
    assert classify(DIM3).label == "exceptional-or-mutant"


def test_classify_record_fields():
    rec = classify(DIM3)
    assert rec.is_harmonic and not rec.is_trivial
    assert rec.radial_theta == -8
    assert rec.quad_trace == 8
    assert rec.cubic_trace == 24
    d = rec.to_json_dict()
    assert d["radial_theta"] == "-8"


def test_radial_scale_covariance():
    rng = random.Random(2)
    for name in ("clifford-q0", "cartan-d1"):
        u = catalog_build(name)
        theta = check_radial(u).constant
        for _ in range(5):
            t = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            if rng.random() < 0.5:
                t = -t
            assert check_radial(u.scaled(t)).constant == t * t * theta


def test_orthogonal_invariance_of_labels():
    rng = np.random.default_rng(3)
    for name in ("clifford-q0", "cartan-d1", "clifford-q1"):
        u = catalog_build(name)
        # rotation from an orthonormalized random rational frame
        M = rng.integers(-5, 6, size=(u.n, u.n)).astype(float)
        R, _ = np.linalg.qr(M + 0.1 * np.eye(u.n))
        ur = u.compose_linear(R)
        assert classify(ur).label == classify(u).label, name


def test_radial_float_residual_at_samples():
    # residual < 1e-10 * scale at float sample points once theta is known
    rng = np.random.default_rng(4)
    for name in ("cartan-d2", "involution-d2"):
        u = catalog_build(name)
        theta = float(check_radial(u).constant)
        T = u.dense_tensor()
        scale = max(abs(float(c)) for c in u.terms.values())
        for _ in range(20):
            p = rng.standard_normal(u.n)
            p /= np.linalg.norm(p)
            g = 3 * np.einsum("abc,b,c->a", T, p, p)
            H = 6 * np.einsum("abc,c->ab", T, p)
            lhs = (g @ g) * np.trace(H) - g @ H @ g
            rhs = theta * float(u.evaluate(list(p)))
            assert abs(lhs - rhs) < 1e-10 * max(1.0, scale ** 3)


def test_mean_curvature_values():
    assert mean_curvature(DIM3, [0, 1, 2]) == pytest.approx(0.0, abs=1e-12)
    want = -16 * 5 ** -1.5
    assert mean_curvature(DIM3, [1, 1, 0]) == pytest.approx(want, rel=1e-12)
    with pytest.raises(ValueError):
        mean_curvature(DIM3, [0, 0, 0])
    with pytest.raises(ValueError):
        # gradient vanishes on the x-axis
        mean_curvature(DIM3, [1, 0, 0])


def test_sample_cone_cartan():
    u = cartan_cubic(1)
    rep = sample_cone(u, 50, seed=0)
    assert len(rep.points) == 50
    assert rep.max_abs_curvature < 1e-6
    for p in rep.points:
        assert abs(np.linalg.norm(p) - 1) < 1e-12


def test_sample_cone_rejects_singular_points():
    # the trivial cone {x1 = 0} is entirely singular
    rep = sample_cone(trivial_cubic(3, 1), 5, seed=0, max_tries=40)
    assert rep.rejected > 0
    assert len(rep.points) == 0
