"""Verifiers for the differential identities attached to eigencubics.

Each check decides a proportionality between two polynomials built from
the form: exactly (full expansion) when the variable count allows it, or
by evaluating both sides at random integer points with exact arithmetic
and a quantified Schwartz-Zippel error bound.  The constant itself is
exact in both modes; only the identity's global validity is randomized.

Policy: exact expansion for n <= 15, randomized above, both overridable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .cubics import CubicForm
from .poly import Poly
from .scalars import QSqrt3, format_rational, is_exact

EXACT_VAR_LIMIT = 15
DEFAULT_TRIALS = 20
DEFAULT_BOUND = 10 ** 6
FLOAT_REL_TOL = 1e-9


@dataclass
class CheckReport:
    check: str
    passed: bool
    constant: Optional[object] = None
    mode: str = "exact"
    error_bound: float = 0.0

    def to_json_dict(self) -> dict:
        const = self.constant
        if const is not None and is_exact(const):
            if isinstance(const, QSqrt3):
                const = {"rational": format_rational(const.a),
                         "sqrt3": format_rational(const.b)}
            else:
                const = format_rational(const)
        return {"check": self.check, "pass": self.passed, "constant": const,
                "mode": self.mode, "error_bound": self.error_bound}


def _squared_norm_poly(n: int) -> Poly:
    return Poly(n, {((i, 2),): Fraction(1) for i in range(n)})


def _pick_mode(u: CubicForm, mode: str) -> str:
    if mode not in ("auto", "exact", "random"):
        raise ValueError(f"unknown mode {mode!r}")
    if not u.is_exact_form:
        return "float"
    if mode == "auto":
        return "exact" if u.n <= EXACT_VAR_LIMIT else "random"
    return mode


def _exact_div(a, b):
    """Field division staying exact for int, Fraction and QSqrt3 inputs."""
    if isinstance(a, QSqrt3) or isinstance(b, QSqrt3):
        a = a if isinstance(a, QSqrt3) else QSqrt3(a)
        b = b if isinstance(b, QSqrt3) else QSqrt3(b)
        q = a / b
        return q.a if q.b == 0 else q
    return Fraction(a) / Fraction(b)


def _proportional_exact(P: Poly, Q: Poly):
    """Constant t with P = t Q identically, else None; Q == 0 handled.

    Solving on a single monomial of Q and verifying globally cannot miss
    or mis-pick t: the constant enters linearly, so P = t Q has at most
    one solution once Q != 0, and any candidate is confirmed or refuted
    by the exact subtraction.
    """
    if Q.is_zero():
        return (Fraction(0) if P.is_zero() else None)
    if P.is_zero():
        return Fraction(0)
    mono = next(iter(Q.terms))
    t = _exact_div(P.terms.get(mono, 0), Q.terms[mono])
    return t if (P - Q * t).is_zero() else None


def _rand_point(n: int, rng, bound: int) -> list:
    return [rng.randrange(bound) for _ in range(n)]


def _proportional_random(sides, n: int, deg: int, trials: int,
                         bound: int, seed: int):
    """Solve t from one exact point evaluation, verify at `trials` more.

    ``sides`` maps an integer point to the exact pair (lhs, rhs) of the
    identity lhs = t * rhs.  Returns (t, error_bound) or (None, 0.0);
    the reported bound is (deg/bound)**trials.
    """
    rng = random.Random(seed)
    t = None
    for _ in range(200):
        p = _rand_point(n, rng, bound)
        lv, rv = sides(p)
        if rv:
            t = _exact_div(lv, rv)
            break
    if t is None:
        # rhs vanished everywhere sampled; demand lhs does too
        rng2 = random.Random(seed + 1)
        for _ in range(trials):
            lv, _ = sides(_rand_point(n, rng2, bound))
            if lv:
                return None, 0.0
        return Fraction(0), (deg / bound) ** trials
    for _ in range(trials):
        p = _rand_point(n, rng, bound)
        lv, rv = sides(p)
        if lv != t * rv:
            return None, 0.0
    return t, (deg / bound) ** trials


def _float_scale(u: CubicForm) -> float:
    return max((abs(float(c)) for c in u.terms.values()), default=1.0)


def _proportional_float(lhs, rhs, n: int, seed: int, rel: float,
                        scale: float, trials: int = 24):
    rng = np.random.default_rng(seed)
    pts = [rng.standard_normal(n) for _ in range(trials)]
    ls = np.array([lhs(p) for p in pts])
    rs = np.array([rhs(p) for p in pts])
    denom = float(np.dot(rs, rs))
    if denom < 1e-30:
        return 0.0 if np.max(np.abs(ls)) < rel * scale else None
    t = float(np.dot(ls, rs)) / denom
    resid = np.max(np.abs(ls - t * rs) / (1.0 + np.abs(t * rs)))
    return t if resid < rel * max(1.0, scale) else None


# ---------------------------------------------------------------------------
# the five identity checks
# ---------------------------------------------------------------------------

def check_harmonic(u: CubicForm) -> bool:
    """Lap u == 0; the Laplacian of a cubic is linear, so always exact."""
    lap = u.laplacian()
    if u.is_exact_form:
        return lap.is_zero()
    scale = _float_scale(u)
    return all(abs(float(c)) <= FLOAT_REL_TOL * scale for c in lap.terms.values())


def _radial_sides_at(u: CubicForm, p) -> Tuple[object, object]:
    """(|Du|^2 Lap u - Du . H Du, |p|^2 u) at a point, exactly."""
    g = u.gradient_at(p)
    H = u.hessian_at(p)
    g2 = sum(v * v for v in g)
    trH = sum(H[i][i] for i in range(u.n))
    gHg = 0
    for i in range(u.n):
        row = H[i]
        gi = g[i]
        if gi:
            gHg = gHg + gi * sum(row[j] * g[j] for j in range(u.n))
    lhs = g2 * trH - gHg
    rhs = sum(v * v for v in p) * u.evaluate(p)
    return lhs, rhs


def check_radial(u: CubicForm, mode: str = "auto", trials: int = DEFAULT_TRIALS,
                 bound: int = DEFAULT_BOUND, seed: int = 0) -> CheckReport:
    """theta with |Du|^2 Lap u - (1/2) Du . D|Du|^2 = theta |x|^2 u.

    Note (1/2) Du . D|Du|^2 = Du . (D^2u) Du.
    """
    if u.is_zero():
        raise ValueError("the zero form is not accepted by the radial check")
    m = _pick_mode(u, mode)
    if m == "exact":
        grads = u.gradient()
        G = Poly.zero(u.n)
        for g in grads:
            G = G + g * g
        lap = u.laplacian()
        half = Fraction(1, 2)
        P = G * lap - half * sum((grads[j] * G.diff(j) for j in range(u.n)),
                                 Poly.zero(u.n))
        Q = _squared_norm_poly(u.n) * u.to_poly()
        theta = _proportional_exact(P, Q)
        return CheckReport("radial", theta is not None, theta, "exact", 0.0)
    if m == "random":
        theta, err = _proportional_random(
            lambda p: _radial_sides_at(u, p), u.n, 5, trials, bound, seed)
        return CheckReport("radial", theta is not None, theta, "random", err)
    T = u.dense_tensor()

    def sides(p):
        g = 3 * np.einsum("abc,b,c->a", T, p, p)
        H = 6 * np.einsum("abc,c->ab", T, p)
        return (g @ g) * np.trace(H) - g @ H @ g, (p @ p) * float(u.evaluate(p))

    theta = _proportional_float(lambda p: sides(p)[0], lambda p: sides(p)[1],
                                u.n, seed, FLOAT_REL_TOL, _float_scale(u) ** 3)
    return CheckReport("radial", theta is not None, theta, "float", 0.0)


def check_eiconal(u: CubicForm, mode: str = "auto", trials: int = DEFAULT_TRIALS,
                  bound: int = DEFAULT_BOUND, seed: int = 0) -> CheckReport:
    """kappa with |Du|^2 = kappa |x|^4; kappa = 9 is the normalized case."""
    if u.is_zero():
        return CheckReport("eiconal", False, None, "exact", 0.0)
    m = _pick_mode(u, mode)
    if m == "exact":
        grads = u.gradient()
        G = Poly.zero(u.n)
        for g in grads:
            G = G + g * g
        r2 = _squared_norm_poly(u.n)
        kappa = _proportional_exact(G, r2 * r2)
        if kappa is not None and not kappa > 0:
            kappa = None
        return CheckReport("eiconal", kappa is not None, kappa, "exact", 0.0)
    if m == "random":
        def sides(p):
            g = u.gradient_at(p)
            s = sum(v * v for v in p)
            return sum(v * v for v in g), s * s

        kappa, err = _proportional_random(sides, u.n, 4, trials, bound, seed)
        if kappa is not None and not kappa > 0:
            kappa = None
        return CheckReport("eiconal", kappa is not None, kappa, "random", err)
    T = u.dense_tensor()

    def lhs(p):
        g = 3 * np.einsum("abc,b,c->a", T, p, p)
        return float(g @ g)

    kappa = _proportional_float(lhs, lambda p: float(p @ p) ** 2, u.n, seed,
                                FLOAT_REL_TOL, _float_scale(u) ** 2)
    if kappa is not None and kappa <= 0:
        kappa = None
    return CheckReport("eiconal", kappa is not None, kappa, "float", 0.0)


def _hessian_polys(u: CubicForm) -> List[List[Poly]]:
    n = u.n
    H = [[Poly.zero(n) for _ in range(n)] for _ in range(n)]
    for a, b, c, w in u.coo():
        H[a][b] = H[a][b] + Poly.var(n, c, 6 * w)
    return H


def trace_identity_quadratic(u: CubicForm, mode: str = "auto",
                             trials: int = DEFAULT_TRIALS,
                             bound: int = DEFAULT_BOUND,
                             seed: int = 0) -> CheckReport:
    """c with trace(D^2 u)^2 = c |x|^2 (the exceptional-or-mutant marker)."""
    m = _pick_mode(u, mode)
    if m == "exact":
        H = _hessian_polys(u)
        P = Poly.zero(u.n)
        for i in range(u.n):
            for j in range(u.n):
                P = P + H[i][j] * H[j][i]
        c = _proportional_exact(P, _squared_norm_poly(u.n))
        return CheckReport("trace2", c is not None, c, "exact", 0.0)
    if m == "random":
        def sides(p):
            H = u.hessian_at(p)
            lv = sum(H[i][j] * H[j][i] for i in range(u.n) for j in range(u.n))
            return lv, sum(v * v for v in p)

        c, err = _proportional_random(sides, u.n, 2, trials, bound, seed)
        return CheckReport("trace2", c is not None, c, "random", err)
    T = u.dense_tensor()

    def lhs(p):
        H = 6 * np.einsum("abc,c->ab", T, p)
        return float(np.sum(H * H))

    c = _proportional_float(lhs, lambda p: float(p @ p), u.n, seed,
                            FLOAT_REL_TOL, _float_scale(u) ** 2)
    return CheckReport("trace2", c is not None, c, "float", 0.0)


def trace_identity_cubic(u: CubicForm, mode: str = "auto",
                         trials: int = DEFAULT_TRIALS,
                         bound: int = DEFAULT_BOUND,
                         seed: int = 0) -> CheckReport:
    """a with trace(D^2 u)^3 = a u; every eigencubic admits one."""
    m = _pick_mode(u, mode)
    if m == "exact":
        H = _hessian_polys(u)
        P = Poly.zero(u.n)
        for i in range(u.n):
            for j in range(u.n):
                hij = H[i][j]
                if hij.is_zero():
                    continue
                for k in range(u.n):
                    hjk = H[j][k]
                    if hjk.is_zero():
                        continue
                    P = P + hij * hjk * H[k][i]
        a = _proportional_exact(P, u.to_poly())
        return CheckReport("trace3", a is not None, a, "exact", 0.0)
    if m == "random":
        def sides(p):
            H = u.hessian_at(p)
            n = u.n
            tot = 0
            for i in range(n):
                Hi = H[i]
                for j in range(n):
                    hij = Hi[j]
                    if hij:
                        Hj = H[j]
                        tot = tot + hij * sum(Hj[k] * H[k][i] for k in range(n))
            return tot, u.evaluate(p)

        a, err = _proportional_random(sides, u.n, 3, trials, bound, seed)
        return CheckReport("trace3", a is not None, a, "random", err)
    T = u.dense_tensor()

    def lhs(p):
        H = 6 * np.einsum("abc,c->ab", T, p)
        return float(np.trace(H @ H @ H))

    a = _proportional_float(lhs, lambda p: float(u.evaluate(p)), u.n, seed,
                            FLOAT_REL_TOL, _float_scale(u) ** 3)
    return CheckReport("trace3", a is not None, a, "float", 0.0)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass
class ClassificationRecord:
    is_trivial: bool
    is_harmonic: bool
    radial_theta: Optional[object]
    quad_trace: Optional[object]
    cubic_trace: Optional[object]
    label: str
    mode: str = "exact"

    def to_json_dict(self) -> dict:
        def fmt(c):
            if c is None:
                return None
            if isinstance(c, QSqrt3):
                return {"rational": format_rational(c.a),
                        "sqrt3": format_rational(c.b)}
            if is_exact(c):
                return format_rational(c)
            return c

        return {"is_trivial": self.is_trivial, "is_harmonic": self.is_harmonic,
                "radial_theta": fmt(self.radial_theta),
                "quad_trace": fmt(self.quad_trace),
                "cubic_trace": fmt(self.cubic_trace),
                "label": self.label, "mode": self.mode}


def classify(u: CubicForm, mode: str = "auto", trials: int = DEFAULT_TRIALS,
             bound: int = DEFAULT_BOUND, seed: int = 0) -> ClassificationRecord:
    """Populate the full record; the label follows the radial/rank/trace rule.

    The quadratic trace predicate is reported as computed: a form may pass
    it without appearing in the admissible-triple table (the 3-variable
    Clifford cubic does), so the label asserts the predicate only.
    """
    from .algebra import MetrisedAlgebra

    rad = check_radial(u, mode, trials, bound, seed)
    quad = trace_identity_quadratic(u, mode, trials, bound, seed + 1)
    cubt = trace_identity_cubic(u, mode, trials, bound, seed + 2)
    harm = check_harmonic(u)
    rank = MetrisedAlgebra(u).multiplication_rank()
    trivial = rank <= 1
    if not rad.passed:
        label = "not-eigencubic"
    elif trivial:
        label = "trivial"
    elif quad.passed:
        label = "exceptional-or-mutant"
    else:
        label = "clifford-type"
    return ClassificationRecord(
        is_trivial=trivial, is_harmonic=harm,
        radial_theta=rad.constant if rad.passed else None,
        quad_trace=quad.constant if quad.passed else None,
        cubic_trace=cubt.constant if cubt.passed else None,
        label=label, mode=rad.mode)


# ---------------------------------------------------------------------------
# mean curvature of the zero cone
# ---------------------------------------------------------------------------

GRAD_THRESHOLD = 0.1


def mean_curvature(u: CubicForm, x, grad_threshold: float = GRAD_THRESHOLD) -> float:
    """H = (|Du|^2 Lap u - Du . (D^2u) Du) / |Du|^3 evaluated at x.

    The regularization threshold applies to the gradient at x/|x|, so a
    point near the singular set is rejected (ValueError) regardless of
    its distance from the origin.
    """
    T = u.dense_tensor()
    x = np.asarray(x, dtype=float)
    nx = np.linalg.norm(x)
    if nx == 0:
        raise ValueError("mean curvature is undefined at the origin")
    p = x / nx
    gp = 3 * np.einsum("abc,b,c->a", T, p, p)
    if np.linalg.norm(gp) < grad_threshold:
        raise ValueError(f"gradient norm {np.linalg.norm(gp):.3g} below "
                         f"threshold {grad_threshold} on the unit sphere")
    g = gp * nx ** 2
    gn = np.linalg.norm(g)
    H = 6 * np.einsum("abc,c->ab", T, x)
    return float(((g @ g) * np.trace(H) - g @ H @ g) / gn ** 3)


@dataclass
class ConeSampleReport:
    points: List[np.ndarray] = field(default_factory=list)
    curvatures: List[float] = field(default_factory=list)
    rejected: int = 0
    requested: int = 0

    @property
    def max_abs_curvature(self) -> float:
        return max((abs(h) for h in self.curvatures), default=0.0)

    def to_json_dict(self) -> dict:
        return {"requested": self.requested, "found": len(self.points),
                "rejected": self.rejected,
                "max_abs_curvature": self.max_abs_curvature}


def sample_cone(u: CubicForm, count: int, seed: int,
                grad_threshold: float = GRAD_THRESHOLD,
                max_tries: int = 200) -> ConeSampleReport:
    """Find zero-level points by bisection along random sphere segments.

    Each ray draws unit points of opposite sign of u and bisects; points
    whose gradient falls under the threshold count as rejected.
    """
    if seed < 0:
        raise ValueError("seed must be nonnegative")
    T = u.dense_tensor()
    n = u.n
    report = ConeSampleReport(requested=count)

    def uval(p):
        return float(np.einsum("abc,a,b,c->", T, p, p, p))

    for idx in range(count):
        rng = np.random.default_rng((seed, idx))
        got = False
        for _ in range(max_tries):
            a = rng.standard_normal(n)
            a /= np.linalg.norm(a)
            b = rng.standard_normal(n)
            b /= np.linalg.norm(b)
            ua, ub = uval(a), uval(b)
            if ua == 0.0 or ub == 0.0 or np.sign(ua) == np.sign(ub):
                continue
            lo, hi = a, b
            for _ in range(80):
                mid = lo + hi
                mid /= np.linalg.norm(mid)
                um = uval(mid)
                if um == 0.0:
                    break
                if np.sign(um) == np.sign(ua):
                    lo = mid
                else:
                    hi = mid
            p = lo + hi
            p /= np.linalg.norm(p)
            try:
                h = mean_curvature(u, p, grad_threshold)
            except ValueError:
                report.rejected += 1
                continue
            report.points.append(p)
            report.curvatures.append(h)
            got = True
            break
        if not got and report.rejected == 0:
            # no sign change found at all (e.g. a form of one sign)
            report.rejected += 1
    return report
