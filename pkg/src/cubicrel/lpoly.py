"""Univariate polynomials in L with rational coefficients, and exact linear algebra.

Two elimination routines live here: a fraction-free (Bareiss) integer
nullspace for the degree-bounded relation search, and Gauss-Jordan over the
field Q(L) for ranks and kernels "up to multiplication by polynomials".
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

__all__ = ["LPoly", "RatFunc", "bareiss_nullspace", "ratfunc_kernel", "ratfunc_rank"]


class LPoly:
    """Polynomial in L; ``coeffs[k]`` is the coefficient of L^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, c=1) -> "LPoly":
        return cls([0] * k + [c])

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "LPoly":
        if not d:
            return cls()
        out = [0] * (max(d) + 1)
        for k, v in d.items():
            out[k] += v
        return cls(out)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LPoly):
            other = LPoly([other])
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"LPoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("L" if k == 1 else f"L^{k}")
            num = str(c) if c.denominator > 1 else str(c.numerator)
            if mono and abs(c) == 1:
                body = ("-" if c < 0 else "") + mono
            else:
                body = num + mono
            parts.append(body)
        return " + ".join(parts).replace("+ -", "- ")

    def __add__(self, other) -> "LPoly":
        if not isinstance(other, LPoly):
            other = LPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return LPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "LPoly":
        return LPoly(-x for x in self.coeffs)

    def __sub__(self, other) -> "LPoly":
        return self + (-other if isinstance(other, LPoly) else LPoly([-Fraction(other)]))

    def __rsub__(self, other) -> "LPoly":
        return (-self) + other

    def __mul__(self, other) -> "LPoly":
        if not isinstance(other, LPoly):
            return LPoly(x * Fraction(other) for x in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return LPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: "LPoly") -> tuple["LPoly", "LPoly"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        q = [Fraction(0)] * max(len(r) - len(other.coeffs) + 1, 0)
        lead = other.coeffs[-1]
        for k in range(len(q) - 1, -1, -1):
            c = r[k + len(other.coeffs) - 1] / lead
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    r[k + j] -= c * b
        return LPoly(q), LPoly(r)

    def __floordiv__(self, other: "LPoly") -> "LPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "LPoly") -> "LPoly":
        return self.divmod(other)[1]

    def exact_div(self, other: "LPoly") -> "LPoly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return q

    def monic(self) -> "LPoly":
        return self * (1 / self.coeffs[-1]) if self.coeffs else self

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, LPoly) else LPoly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def valuation(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def content(self) -> Fraction:
        """Positive rational c with self/c integral and primitive."""
        if not self.coeffs:
            return Fraction(1)
        den = lcm(*(c.denominator for c in self.coeffs))
        num = 0
        for c in self.coeffs:
            num = gcd(num, int(c * den))
        return Fraction(num, den)


def poly_gcd(a: LPoly, b: LPoly) -> LPoly:
    while b:
        a, b = b, a % b
    return a.monic() if a else a


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: LPoly, den: LPoly | None = None):
        den = den if den is not None else LPoly([1])
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den) if num else den
        num, den = num // g, den // g
        lead = den.coeffs[-1]
        self.num, self.den = num * (1 / lead), den * (1 / lead)

    def __bool__(self) -> bool:
        return bool(self.num)

    def __add__(self, o: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __mul__(self, o: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * o.num, self.den * o.den)

    def __truediv__(self, o: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * o.den, self.den * o.num)


def _rref_ratfunc(rows: list[list[RatFunc]]) -> tuple[list[list[RatFunc]], list[int]]:
    m = [r[:] for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def ratfunc_rank(matrix: Sequence[Sequence[LPoly]]) -> int:
    rows = [[RatFunc(x) for x in row] for row in matrix]
    return len(_rref_ratfunc(rows)[1])


def ratfunc_kernel(matrix: Sequence[Sequence[LPoly]], ncols: int) -> list[list[LPoly]]:
    """Kernel over Q(L), each basis vector scaled to a primitive polynomial vector."""
    rows = [[RatFunc(x) for x in row] for row in matrix if any(row)]
    m, pivots = _rref_ratfunc(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [RatFunc(LPoly())] * ncols
        vec[f] = RatFunc(LPoly([1]))
        for r, pc in enumerate(pivots):
            vec[pc] = RatFunc(-m[r][f].num, m[r][f].den)
        den = LPoly([1])
        for v in vec:
            den = den * v.den // poly_gcd(den, v.den)
        polys = [v.num * (den // v.den) for v in vec]
        basis.append(primitive(polys))
    return basis


def primitive(polys: Sequence[LPoly]) -> list[LPoly]:
    """Divide out the polynomial gcd and the rational content of a vector."""
    g = LPoly()
    for p in polys:
        g = poly_gcd(g, p) if g else (p.monic() if p else g)
    if not g:
        return list(polys)
    out = [p.exact_div(g) for p in polys]
    den = lcm(*(c.denominator for p in out for c in p.coeffs))
    out = [p * den for p in out]
    num = 0
    for p in out:
        for c in p.coeffs:
            num = gcd(num, int(c))
    return [p * Fraction(1, num) for p in out]


def bareiss_nullspace(A: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Exact nullspace basis of an integer matrix via fraction-free elimination.

    Pivoting takes the first nonzero entry in fixed column order, so the
    returned basis is deterministic.
    """
    m = [list(map(int, row)) for row in A if any(row)]
    ncols = len(A[0]) if A else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, len(m)):
            mi = m[i]
            f = mi[c]
            mi_new = [(piv * mi[j] - f * m[r][j]) // prev for j in range(ncols)]
            m[i] = mi_new
        prev = piv
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    m = m[:r]
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for k in range(len(pivots) - 1, -1, -1):
            pc = pivots[k]
            s = sum((m[k][j] * x[j] for j in range(pc + 1, ncols)), Fraction(0))
            x[pc] = -s / m[k][pc]
        basis.append(x)
    return basis
