"""A free pre-lambda ring for cubic fourfolds modelled on a K3 surface.

Symbols ``k1..k4`` stand for the symmetric powers of a K3 surface class and
are algebraically independent; ``k1*k1`` is the class of the square, kept
apart from ``k2``. With

    Y    = L k1 + 1 + L^2 + L^4
    F(Y) = k2 + L k1
    Z(Y) = k4 + L k1 k2 + L^2 k2 + L^2 k1^2 + L^3 k1

the symmetric powers of Y follow from the sum axiom, and relations among
the fourfold classes are found by the same elimination used for surfaces.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping

from .lpoly import LPoly

__all__ = [
    "UnsupportedDegree",
    "UnexpectedNullity",
    "K3Poly",
    "k",
    "L",
    "sym_power_free",
    "FourfoldClass",
    "fourfold_classes",
    "FOURFOLD_CANDIDATES",
    "derive_fourfold_relations",
    "substitute",
    "concrete_classes",
    "gk_sym2",
    "cat_eval",
]

MAX_SYM = 4


class UnsupportedDegree(ValueError):
    pass


class UnexpectedNullity(RuntimeError):
    pass


Monomial = tuple[int, ...]  # sorted generator indices, () is 1


@dataclass(frozen=True)
class K3Poly:
    """Finite sum of ``c * L^d * k_{i1} ... k_{ir}``."""

    terms: tuple[tuple[tuple[int, Monomial], Fraction], ...]

    @classmethod
    def build(cls, d: Mapping[tuple[int, Monomial], object]) -> "K3Poly":
        return cls(tuple(sorted((k, Fraction(v)) for k, v in d.items() if v)))

    @classmethod
    def const(cls, c=1, ldeg: int = 0) -> "K3Poly":
        return cls.build({(ldeg, ()): c})

    def as_dict(self) -> dict[tuple[int, Monomial], Fraction]:
        return dict(self.terms)

    def __add__(self, other):
        if not isinstance(other, K3Poly):
            other = K3Poly.const(other)
        d = Counter(self.as_dict())
        for key, v in other.terms:
            d[key] += v
        return K3Poly.build(d)

    __radd__ = __add__

    def __neg__(self) -> "K3Poly":
        return K3Poly.build({key: -v for key, v in self.terms})

    def __sub__(self, other) -> "K3Poly":
        return self + (-other)

    def __rsub__(self, other) -> "K3Poly":
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, K3Poly):
            return K3Poly.build({key: v * Fraction(other) for key, v in self.terms})
        out: Counter = Counter()
        for (d, m), a in self.terms:
            for (e, n), b in other.terms:
                out[(d + e, tuple(sorted(m + n)))] += a * b
        return K3Poly.build(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "K3Poly":
        out = K3Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "K3Poly":
        return K3Poly(tuple(((d + k, m), v) for (d, m), v in self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self) -> list[Monomial]:
        return sorted({m for (_, m), _ in self.terms}, key=lambda m: (sum(m), len(m), m))

    def coefficient(self, mono: Monomial) -> LPoly:
        """The polynomial in L multiplying a k-monomial."""
        return LPoly.from_dict({d: v for (d, m), v in self.terms if m == mono})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for mono in self.monomials():
            p = str(self.coefficient(mono))
            sym = "*".join(f"k{i}" for i in mono)
            if not sym:
                bits.append(f"({p})")
            else:
                bits.append(sym if p == "1" else f"({p})*{sym}")
        return " + ".join(bits)


def k(i: int) -> K3Poly:
    return K3Poly.build({(0, (i,)): 1})


def L(d: int = 1) -> K3Poly:
    return K3Poly.const(1, d)


def _series_mul(a, b, n):
    zero = K3Poly(())
    out = [zero] * (n + 1)
    for i in range(n + 1):
        for j in range(n + 1 - i):
            out[i + j] = out[i + j] + a[i] * b[j]
    return out


def _series_inv(a, n):
    b = [K3Poly.const(1)] + [K3Poly(())] * n
    for m in range(1, n + 1):
        acc = K3Poly(())
        for i in range(1, m + 1):
            acc = acc + a[i] * b[m - i]
        b[m] = -acc
    return b


def sym_power_free(p: K3Poly, n: int) -> K3Poly:
    """Sym^n in the free ring, for p a Z-combination of ``L^m`` and ``L^m k1``.

    Sym^j(L^m k1) = L^(jm) k_j and Sym^j(L^m) = L^(jm); integer multiples
    and negatives go through the sum axiom and the inverse series.
    """
    if not 0 <= n <= MAX_SYM:
        raise UnsupportedDegree(f"symmetric powers are generated up to degree {MAX_SYM}")
    total = [K3Poly.const(1)] + [K3Poly(())] * n
    for (d, mono), c in p.terms:
        if mono not in ((), (1,)):
            raise ValueError(f"Sym of k-monomial {mono} is not determined by the free ring")
        if c.denominator != 1:
            raise ValueError("coefficients must be integers")
        if mono == ():
            s = [K3Poly.const(1, d * j) for j in range(n + 1)]
        else:
            s = [K3Poly.const(1)] + [k(j).shift(d * j) for j in range(1, n + 1)]
        if c < 0:
            s = _series_inv(s, n)
        for _ in range(abs(int(c))):
            total = _series_mul(total, s, n)
    return total[n]


@dataclass(frozen=True)
class FourfoldClass:
    name: str
    value: K3Poly


def _y() -> K3Poly:
    return k(1).shift(1) + 1 + L(2) + L(4)


def fourfold_classes() -> dict[str, FourfoldClass]:
    Y = _y()
    y2 = sym_power_free(Y, 2)
    vals = {
        "1": K3Poly.const(1),
        "Y": Y,
        "Y^2": Y * Y,
        "Y^(2)": y2,
        "Y^(3)": sym_power_free(Y, 3),
        "Y x Y^(2)": Y * y2,
        "Y^(4)": sym_power_free(Y, 4),
        "F": k(2) + k(1).shift(1),
        "Z": k(4) + (k(1) * k(2)).shift(1) + k(2).shift(2) + (k(1) * k(1)).shift(2) + k(1).shift(3),
    }
    return {n: FourfoldClass(n, v) for n, v in vals.items()}


FOURFOLD_CANDIDATES = ["1", "Y", "Y^2", "Y^(2)", "Y^(3)", "Y x Y^(2)", "Y^(4)", "Z"]


def _columns(names, classes) -> list[list[LPoly]]:
    monos = sorted(
        {m for n in names for m in classes[n].value.monomials()}, key=lambda m: (sum(m), len(m), m)
    )
    return [[classes[n].value.coefficient(m) for m in monos] for n in names]


def _residual(rel, classes) -> K3Poly:
    acc = K3Poly(())
    for name, p in rel.coeffs:
        for d, c in enumerate(p.coeffs):
            if c:
                acc = acc + classes[name].value.shift(d) * c
    return acc


def derive_fourfold_relations(max_coeff_degree: int = 12) -> dict:
    """Check Y-F(Y) and derive the unique minimal relation with Z(Y)."""
    from .relfind import relation, relation_space

    classes = fourfold_classes()
    yfy = relation({"Y^(2)": "1"}, {"Y": "1 + L^4", "F": "L^2"})
    space = relation_space(
        FOURFOLD_CANDIDATES, _columns(FOURFOLD_CANDIDATES, classes), max_coeff_degree, "Z"
    )
    if space.field_dimension != 1:
        raise UnexpectedNullity(f"expected one relation up to multiplication, got {space.field_dimension}")
    rel = space.field_basis[0]
    return {
        "yfy": yfy,
        "yfy_residual": _residual(yfy, classes),
        "space": space,
        "relation": rel,
        "relation_residual": _residual(rel, classes),
    }


def substitute(p: K3Poly, x):
    """Replace k_n by Sym^n(x) for a concrete graded character x; L stays L."""
    from .charring import constant, sym_power

    sym = {n: sym_power(x, n) for n in range(1, MAX_SYM + 1)}
    acc = constant(x.table, 0)
    for (d, mono), c in p.terms:
        term = constant(x.table, 1)
        for i in mono:
            term = term * sym[i]
        acc = acc + term.shift(d) * c
    return acc


def concrete_classes(x) -> dict:
    """Fourfold classes built from a concrete K3 stand-in with the charring operations.

    Symmetric powers of Y are taken directly in the character ring, so they
    do not reuse the free-ring expansion.
    """
    from .charring import constant, lefschetz, sym_power

    t = x.table
    one = constant(t)
    Y = x.shift(1) + one + lefschetz(t, 2) + lefschetz(t, 4)
    y2 = sym_power(Y, 2)
    s2, s4 = sym_power(x, 2), sym_power(x, 4)
    return {
        "1": one,
        "Y": Y,
        "Y^2": Y * Y,
        "Y^(2)": y2,
        "Y^(3)": sym_power(Y, 3),
        "Y x Y^(2)": Y * y2,
        "Y^(4)": sym_power(Y, 4),
        "F": s2 + x.shift(1),
        "Z": s4 + (x * s2).shift(1) + s2.shift(2) + (x * x).shift(2) + x.shift(3),
    }


def gk_sym2(m: int) -> int:
    """Rank of the categorical symmetric square of a rank-m class."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return comb(m, 2) + 2 * m


def cat_eval(x):
    """Evaluate at L = 1."""
    from .charring import GradedCharacter, evaluate

    if isinstance(x, GradedCharacter):
        return evaluate(x, "L_to_1")
    if isinstance(x, LPoly):
        return x(Fraction(1))
    if isinstance(x, K3Poly):
        out: Counter = Counter()
        for (_, m), v in x.terms:
            out[(0, m)] += v
        res = K3Poly.build(out)
        if all(m == () for (_, m), _ in res.terms):
            return sum((v for _, v in res.terms), Fraction(0))
        return res
    raise TypeError(f"cannot evaluate {type(x).__name__}")
