"""Cubic forms as exact symmetric coefficient tensors, plus the catalog.

A CubicForm stores monomial coefficients m_{ijk} for i <= j <= k with
u(x) = sum m_{ijk} x_i x_j x_k; the full symmetric tensor entry is
m_{ijk} divided by the number of distinct permutations of (i, j, k).

The catalog constructors build every named family by evaluating the
Hermitian-matrix machinery on symbolic (polynomial-coordinate) elements,
so the coefficient tensors come out exact.  Variable order is the basis
order of the underlying construction and is documented per constructor.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .clifford import CliffordSystem, build_clifford_system, verify_clifford_system
from .composition import CDElement, re_triple
from .jordan import (HermMat3, freudenthal_det, det_polar, fullspace_basis,
                     involution, jordan_mul, trace_form, tracefree_basis)
from .poly import Poly
from .scalars import QSqrt3, format_rational, is_exact, parse_rational

Key = Tuple[int, int, int]


def _simplify(c):
    if isinstance(c, QSqrt3) and c.b == 0:
        c = c.a
    if isinstance(c, int):
        return Fraction(c)
    return c


def _perm_count(key: Key) -> int:
    i, j, k = key
    if i == j == k:
        return 1
    if i == j or j == k or i == k:
        return 3
    return 6


def _distinct_perms(key: Key) -> List[Key]:
    i, j, k = key
    return sorted({(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)})


class CubicForm:
    __slots__ = ("n", "terms", "_coo", "_dense")

    def __init__(self, n: int, terms: Dict[Key, object]):
        self.n = n
        clean: Dict[Key, object] = {}
        for key, c in terms.items():
            i, j, k = key
            if not (0 <= i <= j <= k < n):
                raise ValueError(f"bad monomial key {key} for dimension {n}")
            c = _simplify(c)
            if c:
                clean[(i, j, k)] = c
        self.terms = clean
        self._coo = None
        self._dense = None

    # -- basic structure ---------------------------------------------------
    @property
    def is_exact_form(self) -> bool:
        return all(is_exact(c) for c in self.terms.values())

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, CubicForm):
            return self.n == other.n and self.terms == other.terms
        return NotImplemented

    def scaled(self, t) -> "CubicForm":
        return CubicForm(self.n, {k: t * c for k, c in self.terms.items()})

    def coo(self):
        """All distinct permutations (a, b, c, weight) of the full tensor."""
        if self._coo is None:
            out = []
            for key, m in self.terms.items():
                w = m / _perm_count(key)
                for p in _distinct_perms(key):
                    out.append((p[0], p[1], p[2], w))
            self._coo = out
        return self._coo

    def dense_tensor(self) -> np.ndarray:
        """Full symmetric tensor as float64, shape (n, n, n)."""
        if self._dense is None:
            T = np.zeros((self.n, self.n, self.n))
            for a, b, c, w in self.coo():
                T[a, b, c] = float(w)
            self._dense = T
        return self._dense

    # -- evaluation and calculus -------------------------------------------
    def evaluate(self, point: Sequence):
        if len(point) != self.n:
            raise ValueError(f"point has length {len(point)}, expected {self.n}")
        total = 0
        for (i, j, k), m in self.terms.items():
            total = total + m * point[i] * point[j] * point[k]
        return total

    def gradient_at(self, point: Sequence) -> list:
        if len(point) != self.n:
            raise ValueError("point length mismatch")
        g = [0] * self.n
        for a, b, c, w in self.coo():
            g[a] = g[a] + 3 * w * point[b] * point[c]
        return g

    def hessian_at(self, point: Sequence) -> list:
        if len(point) != self.n:
            raise ValueError("point length mismatch")
        H = [[0] * self.n for _ in range(self.n)]
        for a, b, c, w in self.coo():
            H[a][b] = H[a][b] + 6 * w * point[c]
        return H

    def to_poly(self) -> Poly:
        terms: Dict[tuple, object] = {}
        for (i, j, k), m in self.terms.items():
            cnt: Dict[int, int] = {}
            for v in (i, j, k):
                cnt[v] = cnt.get(v, 0) + 1
            mono = tuple(sorted(cnt.items()))
            terms[mono] = terms.get(mono, 0) + m
        return Poly(self.n, terms)

    @classmethod
    def from_poly(cls, p: Poly) -> "CubicForm":
        terms: Dict[Key, object] = {}
        for mono, c in p.terms.items():
            deg = sum(e for _, e in mono)
            if deg != 3:
                raise ValueError("polynomial is not homogeneous of degree 3")
            idx: List[int] = []
            for v, e in mono:
                idx.extend([v] * e)
            terms[tuple(sorted(idx))] = c
        return cls(p.nvars, terms)

    def gradient(self) -> List[Poly]:
        p = self.to_poly()
        return [p.diff(i) for i in range(self.n)]

    def hessian(self) -> List[List[Poly]]:
        grads = self.gradient()
        return [[grads[i].diff(j) for j in range(self.n)] for i in range(self.n)]

    def laplacian(self) -> Poly:
        """Linear polynomial sum of the repeated second partials."""
        coeffs: Dict[int, object] = {}
        for a, b, c, w in self.coo():
            if a == b:
                coeffs[c] = coeffs.get(c, 0) + 6 * w
        return Poly(self.n, {((v, 1),): c for v, c in coeffs.items() if c})

    def polarize(self, x: Sequence, y: Sequence, z: Sequence):
        """Complete linearization u(x; y; z); u(x;x;x) = 6 u(x)."""
        for pt in (x, y, z):
            if len(pt) != self.n:
                raise ValueError("point length mismatch")
        total = 0
        for a, b, c, w in self.coo():
            total = total + w * x[a] * y[b] * z[c]
        return 6 * total

    # -- transforms ----------------------------------------------------------
    def compose_linear(self, R: np.ndarray) -> "CubicForm":
        """Float form u(Rx); used for rotation-invariance checks."""
        T = np.einsum("abc,ai,bj,ck->ijk", self.dense_tensor(), R, R, R)
        terms: Dict[Key, float] = {}
        n = self.n
        for i in range(n):
            for j in range(i, n):
                for k in range(j, n):
                    v = T[i, j, k] * _perm_count((i, j, k))
                    if abs(v) > 1e-14:
                        terms[(i, j, k)] = float(v)
        return CubicForm(n, terms)

    def to_float(self) -> "CubicForm":
        return CubicForm(self.n, {k: float(c) for k, c in self.terms.items()})

    # -- serialization ---------------------------------------------------------
    def to_json_dict(self) -> dict:
        items = []
        for key in sorted(self.terms):
            c = self.terms[key]
            rec = {"ijk": [key[0] + 1, key[1] + 1, key[2] + 1]}
            if isinstance(c, QSqrt3):
                rec["c"] = format_rational(c.a)
                rec["c3"] = format_rational(c.b)
            elif isinstance(c, float):
                rec["c"] = c
            else:
                rec["c"] = format_rational(c)
            items.append(rec)
        return {"dim": self.n, "terms": items}

    @classmethod
    def from_json_dict(cls, d: dict) -> "CubicForm":
        n = int(d["dim"])
        terms: Dict[Key, object] = {}
        for rec in d["terms"]:
            i, j, k = (int(v) - 1 for v in rec["ijk"])
            raw = rec["c"]
            if isinstance(raw, float):
                c = raw
            else:
                c = parse_rational(raw)
            if "c3" in rec:
                c = QSqrt3(c, parse_rational(rec["c3"]))
            terms[(i, j, k)] = c
        return cls(n, terms)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, s: str) -> "CubicForm":
        return cls.from_json_dict(json.loads(s))

    def __repr__(self):
        return f"CubicForm(n={self.n}, {len(self.terms)} monomials)"


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def trivial_cubic(n: int, a=1) -> CubicForm:
    """u = a * x_1^3 on R^n."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    return CubicForm(n, {(0, 0, 0): Fraction(a)})


def clifford_cubic(S: CliffordSystem) -> CubicForm:
    """u(x, y) = sum_i x_i <A_i y, y> on R^(q+1+2l); x-block first.

    Requires a verified system with trace-free matrices (trace-free is
    automatic for q >= 1 and holds for every built system); that is what
    makes the form harmonic.
    """
    ok, reason = verify_clifford_system(S)
    if not ok:
        raise ValueError(f"invalid Clifford system: {reason}")
    for idx, A in enumerate(S.mats):
        if sum(A[i][i] for i in range(S.two_l)) != 0:
            raise ValueError(f"A{idx} has nonzero trace; the cubic would not be harmonic")
    off = S.q + 1
    n = off + S.two_l
    terms: Dict[Key, object] = {}
    for i, A in enumerate(S.mats):
        for a in range(S.two_l):
            for b in range(a, S.two_l):
                coef = A[a][b] if a == b else 2 * A[a][b]
                if coef:
                    key = tuple(sorted((i, off + a, off + b)))
                    terms[key] = terms.get(key, 0) + Fraction(coef)
    return CubicForm(n, terms)


def _symbolic_element(basis, nvars: int, offset: int = 0) -> HermMat3:
    """sum_i x_{offset+i} b_i with polynomial coordinates."""
    d = basis[0].d
    diag = [Poly.zero(nvars) for _ in range(3)]
    off = [[Poly.zero(nvars) for _ in range(d)] for _ in range(3)]
    for i, b in enumerate(basis):
        xi = Poly.var(nvars, offset + i)
        for t in range(3):
            if b.diag[t]:
                diag[t] = diag[t] + xi * b.diag[t]
        for pos in range(3):
            for m, c in enumerate(b.off[pos].coeffs):
                if c:
                    off[pos][m] = off[pos][m] + xi * c
    return HermMat3(d, tuple(diag),
                    tuple(CDElement(d, tuple(row)) for row in off))


@lru_cache(maxsize=None)
def cartan_cubic(d: int) -> CubicForm:
    """u = (1/2) det(z) over the trace-free basis of H3(K_d).

    Equal to (1/6)<z, z o z> there; satisfies |Du|^2 = kappa |x|^4 with
    kappa = 9 for d = 1 and kappa = 1/3 for d = 2, 4, 8.  Coefficients
    are rational for d = 1, 2 and live in Q(sqrt 3) for d = 4, 8.
    """
    basis = tracefree_basis(d)
    z = _symbolic_element(basis.mats, len(basis))
    p = freudenthal_det(z) * Fraction(1, 2)
    form = CubicForm.from_poly(p)
    if d in (1, 2):
        for c in form.terms.values():
            if isinstance(c, QSqrt3):
                raise AssertionError("d=1,2 Cartan coefficients must be rational")
    return form


@lru_cache(maxsize=None)
def involution_cubic(d: int) -> CubicForm:
    """u = (1/12) D det(z)[3 zbar - z] on all of H3(K_d), d in (2, 4, 8).

    zbar is the doubling involution.  Expected Peirce triples
    (0,5,3), (0,8,6), (0,14,12) at dimensions 9, 15, 27.
    """
    if d not in (2, 4, 8):
        raise ValueError("involution family requires d in (2, 4, 8)")
    basis = fullspace_basis(d)
    z = _symbolic_element(basis.mats, len(basis))
    w = involution(z).scale(3) - z
    p = det_polar(z, w) * Fraction(1, 12)
    return CubicForm.from_poly(p)


@lru_cache(maxsize=None)
def complexified_cubic(d: int) -> CubicForm:
    """Real part of the holomorphic generic norm on H3(K_d) x C.

    With z = A + iB this is det(A) - D det(B)[A]; on trace-free z it
    agrees with re <z, z o z> up to the factor 3.  The real part of a
    holomorphic cubic is automatically harmonic.  Variables are the
    A-coordinates followed by the B-coordinates (d >= 2); for d = 1
    diagonal real/imaginary units come first, then mixed off pairs.
    """
    if d == 1:
        one = CDElement.one(1)
        zero = CDElement.zero(1)
        half = Fraction(1, 2)
        pairs: List[Tuple[HermMat3, HermMat3]] = []
        for i in range(3):
            dg = [0, 0, 0]
            dg[i] = 1
            pairs.append((HermMat3.diagonal(1, *dg), HermMat3.zero(1)))
        for i in range(3):
            dg = [0, 0, 0]
            dg[i] = 1
            pairs.append((HermMat3.zero(1), HermMat3.diagonal(1, *dg)))
        for pos in range(3):
            P = HermMat3.off_entry(1, pos, one * half)
            pairs.append((P, P))
            pairs.append((P, -P))
        nvars = len(pairs)
        A = _symbolic_pair(pairs, nvars, 0)
        B = _symbolic_pair(pairs, nvars, 1)
    else:
        basis = fullspace_basis(d)
        N = len(basis)
        nvars = 2 * N
        A = _symbolic_element(basis.mats, nvars, 0)
        B = _symbolic_element(basis.mats, nvars, N)
    p = freudenthal_det(A) - det_polar(B, A)
    return CubicForm.from_poly(p)


def _symbolic_pair(pairs, nvars: int, which: int) -> HermMat3:
    d = pairs[0][0].d
    diag = [Poly.zero(nvars) for _ in range(3)]
    off = [[Poly.zero(nvars) for _ in range(d)] for _ in range(3)]
    for i, pair in enumerate(pairs):
        b = pair[which]
        xi = Poly.var(nvars, i)
        for t in range(3):
            if b.diag[t]:
                diag[t] = diag[t] + xi * b.diag[t]
        for pos in range(3):
            for m, c in enumerate(b.off[pos].coeffs):
                if c:
                    off[pos][m] = off[pos][m] + xi * c
    return HermMat3(d, tuple(diag),
                    tuple(CDElement(d, tuple(row)) for row in off))


@lru_cache(maxsize=None)
def albert_contraction_cubic() -> CubicForm:
    """(1/6)<z, z o z> restricted to zero diagonal and purely imaginary
    octonion off-entries: the 21-dimensional complement of H3(K_1) in
    H3(K_8).  Variables run e1..e7 for the x, y, z positions in turn.
    """
    nvars = 21
    off = []
    for pos in range(3):
        coords = [Poly.zero(nvars)]
        coords.extend(Poly.var(nvars, 7 * pos + m) for m in range(7))
        off.append(CDElement(8, tuple(coords)))
    z = HermMat3(8, (Poly.zero(nvars),) * 3, tuple(off))
    p = trace_form(z, jordan_mul(z, z)) * Fraction(1, 6)
    return CubicForm.from_poly(p)


@lru_cache(maxsize=None)
def octonion_cubic21() -> CubicForm:
    """u = re(w1 w2 w3) for three independent imaginary octonions.

    Variables are the e1..e7 coordinates of w1, then w2, then w3.
    Integer coefficients; built from the composition algebra alone.
    """
    nvars = 21
    ws = []
    for blk in range(3):
        coords = [Poly.zero(nvars)]
        coords.extend(Poly.var(nvars, 7 * blk + m) for m in range(7))
        ws.append(CDElement(8, tuple(coords)))
    p = re_triple(ws[0], ws[1], ws[2])
    return CubicForm.from_poly(p)


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

class CatalogEntry:
    __slots__ = ("name", "builder", "dim", "triple", "family")

    def __init__(self, name, builder, dim, triple, family):
        self.name = name
        self.builder = builder
        self.dim = dim
        self.triple = triple
        self.family = family

    def build(self) -> CubicForm:
        return self.builder()


def _clifford_builder(q):
    def build():
        return clifford_cubic(build_clifford_system(q))
    return build


CATALOG: Dict[str, CatalogEntry] = {}


def _register(name, builder, dim, triple, family):
    CATALOG[name] = CatalogEntry(name, builder, dim, triple, family)


_register("trivial", lambda: trivial_cubic(3, 1), 3, None, "trivial")
_register("clifford-q0", _clifford_builder(0), 3, None, "clifford")
_register("clifford-q1", _clifford_builder(1), 4, None, "clifford")
_register("clifford-q2", _clifford_builder(2), 7, None, "clifford")
for _d, _dim, _tr in ((1, 5, (2, 0, 2)), (2, 8, (3, 0, 4)),
                      (4, 14, (5, 0, 8)), (8, 26, (9, 0, 16))):
    _register(f"cartan-d{_d}", (lambda d=_d: cartan_cubic(d)), _dim, _tr, "cartan")
for _d, _dim, _tr in ((2, 9, (0, 5, 3)), (4, 15, (0, 8, 6)), (8, 27, (0, 14, 12))):
    _register(f"involution-d{_d}", (lambda d=_d: involution_cubic(d)), _dim, _tr,
              "involution")
for _d, _dim, _tr in ((1, 12, (1, 5, 5)), (2, 18, (1, 8, 8)),
                      (4, 30, (1, 14, 14)), (8, 54, (1, 26, 26))):
    _register(f"complexified-d{_d}", (lambda d=_d: complexified_cubic(d)), _dim, _tr,
              "complexified")
_register("octonion21", octonion_cubic21, 21, (4, 5, 11), "octonion")
_register("albert21", albert_contraction_cubic, 21, (4, 5, 11), "albert")


def catalog_names() -> List[str]:
    return list(CATALOG)


def catalog_build(name: str) -> CubicForm:
    if name not in CATALOG:
        raise KeyError(f"unknown catalog form: {name}")
    return CATALOG[name].build()
