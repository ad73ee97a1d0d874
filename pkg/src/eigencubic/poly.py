"""Sparse multivariate polynomials with exact coefficients.

Monomials are tuples of (variable, exponent) pairs sorted by variable
index; coefficients are exact scalars (int, Fraction, QSqrt3) or floats
in float mode.  Zero coefficients are never stored, so ``not p.terms``
is the exact zero test.

``exact_zero`` / ``random_zero`` are the two identity-testing backends:
full expansion versus Schwartz-Zippel evaluation at random integer
points with a reported error-probability bound.
"""

from __future__ import annotations

import random
from typing import Dict, Sequence, Tuple

Mono = Tuple[Tuple[int, int], ...]


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Dict[Mono, object] | None = None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for m, c in terms.items():
                if c:
                    self.terms[m] = c

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, c) -> "Poly":
        return cls(nvars, {(): c})

    @classmethod
    def var(cls, nvars: int, i: int, c=1) -> "Poly":
        if not 0 <= i < nvars:
            raise IndexError(f"variable {i} out of range for {nvars} variables")
        return cls(nvars, {((i, 1),): c})

    # -- queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e for _, e in m) for m in self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            out = dict(self.terms)
            for m, c in other.terms.items():
                s = out.get(m, 0) + c
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
            return Poly(self.nvars, out)
        if other == 0:
            return self
        return self + Poly.const(self.nvars, other)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, Poly):
            return self + (-other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            out: Dict[Mono, object] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = _mono_mul(m1, m2)
                    s = out.get(m, 0) + c1 * c2
                    if s:
                        out[m] = s
                    else:
                        out.pop(m, None)
            return Poly(self.nvars, out)
        if not other:
            return Poly(self.nvars)
        return Poly(self.nvars, {m: c * other for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def diff(self, i: int) -> "Poly":
        out: Dict[Mono, object] = {}
        for m, c in self.terms.items():
            for idx, (v, e) in enumerate(m):
                if v == i:
                    if e == 1:
                        nm = m[:idx] + m[idx + 1:]
                    else:
                        nm = m[:idx] + ((v, e - 1),) + m[idx + 1:]
                    s = out.get(nm, 0) + e * c
                    if s:
                        out[nm] = s
                    else:
                        out.pop(nm, None)
                    break
        return Poly(self.nvars, out)

    def eval(self, point: Sequence) -> object:
        if len(point) != self.nvars:
            raise ValueError("point length mismatch")
        total = 0
        for m, c in self.terms.items():
            v = c
            for idx, e in m:
                p = point[idx]
                for _ in range(e):
                    v = v * p
            total = total + v
        return total

    def map_coeffs(self, f) -> "Poly":
        return Poly(self.nvars, {m: f(c) for m, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        bits = []
        for m in sorted(self.terms):
            mono = "*".join(f"x{v}^{e}" if e > 1 else f"x{v}" for v, e in m) or "1"
            bits.append(f"({self.terms[m]})*{mono}")
        return "Poly[" + " + ".join(bits) + "]"


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def exact_zero(p: Poly) -> bool:
    """Decide p == 0 by coefficient comparison (terms are kept expanded)."""
    return p.is_zero()


def find_witness(p: Poly, trials: int = 64, bound: int = 100, seed: int = 0):
    """Search a point where p is nonzero; None if all trials vanish."""
    rng = random.Random(seed)
    for _ in range(trials):
        pt = [rng.randrange(bound) for _ in range(p.nvars)]
        if p.eval(pt):
            return pt
    return None


def random_zero(p: Poly, trials: int = 20, bound: int = 10 ** 6,
                seed: int = 0) -> tuple[bool, float, list | None]:
    """Schwartz-Zippel zero test at random integer points in [0, bound).

    Returns (verdict, error_bound, witness).  A True verdict is wrong with
    probability at most (deg/bound)**trials; a False verdict is certain and
    comes with the witness point.
    """
    deg = p.degree()
    if deg < 0:
        return True, 0.0, None
    if bound <= deg:
        raise ValueError("bound must exceed the polynomial degree")
    rng = random.Random(seed)
    for _ in range(trials):
        pt = [rng.randrange(bound) for _ in range(p.nvars)]
        if p.eval(pt):
            return False, 0.0, pt
    return True, (deg / bound) ** trials, None
