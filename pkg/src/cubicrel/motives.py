"""Classes of a smooth cubic surface and its configuration spaces in Rep(W(E6))[L].

Vocabulary (also accepted by :func:`named`):

* ``S^(n)`` symmetric powers, ``S^[n]`` Hilbert schemes of points, ``S^n``
  cartesian powers, products written ``S x S^(3)``, ``S^2 x S^(2)`` ...
* ``F`` lines, ``Z`` the 72 roots (LLSvS variety), ``V`` the lattice, ``1``.

The formula degree of a product is the sum of the symmetric-power indices;
F, Z, V and constants have degree 0.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .charring import GradedCharacter, constant, from_class_function, lefschetz, sym_power
from .chartable import e6_table
from .rootsys import (lattice_character, lines_action, permutation_character, roots_action,
                      weyl_group)

__all__ = [
    "NamedClass",
    "build_S",
    "build_F",
    "build_Z",
    "build_V",
    "sym_class",
    "hilb_class",
    "product_class",
    "named",
    "monomial_name",
    "monomials",
]


@dataclass(frozen=True)
class NamedClass:
    name: str
    value: GradedCharacter
    degree: int


@lru_cache(maxsize=None)
def build_V() -> NamedClass:
    W = weyl_group()
    chi = lattice_character(W)
    return NamedClass("V", from_class_function(e6_table(), chi, effective=True), 0)


@lru_cache(maxsize=None)
def build_S() -> NamedClass:
    t = e6_table()
    S = constant(t) + build_V().value.shift(1) + lefschetz(t, 2)
    return NamedClass("S", S, 1)


@lru_cache(maxsize=None)
def build_F() -> NamedClass:
    W = weyl_group()
    chi = permutation_character(W, lines_action(W))
    return NamedClass("F", from_class_function(e6_table(), chi, effective=True), 0)


@lru_cache(maxsize=None)
def build_Z() -> NamedClass:
    W = weyl_group()
    chi = permutation_character(W, roots_action(W))
    return NamedClass("Z", from_class_function(e6_table(), chi, effective=True), 0)


@lru_cache(maxsize=None)
def sym_class(n: int) -> NamedClass:
    if not 0 <= n <= 5:
        raise ValueError("symmetric powers are supported up to degree 5")
    if n == 0:
        return NamedClass("1", constant(e6_table()), 0)
    return NamedClass("S" if n == 1 else f"S^({n})", sym_power(build_S().value, n), n)


def monomial_name(parts, kind: str = "sym") -> str:
    """Name of the product of S^(n) (or S^[n]) over the multiset ``parts``."""
    parts = [p for p in parts if p]
    if not parts:
        return "1"
    cnt = Counter(parts)
    bits = []
    for n in sorted(cnt):
        k = cnt[n]
        if n == 1:
            bits.append("S" if k == 1 else f"S^{k}")
        else:
            base = f"S^({n})" if kind == "sym" else f"S^[{n}]"
            bits.extend([base] * k)
    return " x ".join(bits)


@lru_cache(maxsize=None)
def hilb_class(n: int) -> NamedClass:
    """Hilbert scheme classes from the Goettsche expansion, n <= 4."""
    S = build_S().value
    sym = {k: sym_class(k).value for k in range(5)}
    if n == 0:
        v = sym[0]
    elif n == 1:
        v = S
    elif n == 2:
        v = sym[2] + S.shift(1)
    elif n == 3:
        v = sym[3] + (S * S).shift(1) + S.shift(2)
    elif n == 4:
        v = sym[4] + (S * sym[2]).shift(1) + sym[2].shift(2) + (S * S).shift(2) + S.shift(3)
    else:
        raise ValueError("Hilbert schemes are supported up to 4 points")
    return NamedClass("S" if n == 1 else f"S^[{n}]", GradedCharacter(v.table, v.terms, True), n)


@lru_cache(maxsize=None)
def product_class(parts: tuple[int, ...], kind: str = "sym") -> NamedClass:
    parts = tuple(sorted(p for p in parts if p))
    build = sym_class if kind == "sym" else hilb_class
    v = constant(e6_table())
    for p in parts:
        v = v * build(p).value
    return NamedClass(monomial_name(parts, kind), v, sum(parts))


def monomials(max_degree: int) -> list[tuple[int, ...]]:
    """All multisets of positive integers with sum <= max_degree, by degree."""
    out: list[tuple[int, ...]] = []

    def rec(rem: int, lo: int, cur: list[int]) -> None:
        out.append(tuple(cur))
        for k in range(lo, rem + 1):
            rec(rem - k, k, cur + [k])

    rec(max_degree, 1, [])
    return sorted(out, key=lambda p: (sum(p), len(p), p))


_FACTOR = re.compile(r"S(?:\^\((\d+)\)|\^\[(\d+)\]|\^(\d+))?$")


def parse_name(name: str) -> tuple[str, tuple[int, ...]] | str:
    """``"S^2 x S^(2)"`` -> ("sym", (1, 1, 2)); named specials are returned as is."""
    name = name.strip()
    if name in ("1", "F", "Z", "V"):
        return name
    kind = None
    parts: list[int] = []
    for f in re.split(r"\s*(?:x|×|\*)\s*", name):
        m = _FACTOR.match(f.strip())
        if not m:
            raise ValueError(f"unknown class {name!r}")
        if m.group(1):
            parts.append(int(m.group(1)))
            k = "sym"
        elif m.group(2):
            parts.append(int(m.group(2)))
            k = "hilb"
        else:
            parts.extend([1] * int(m.group(3) or 1))
            k = None
        if k and kind and k != kind:
            raise ValueError(f"mixed symmetric and Hilbert factors in {name!r}")
        kind = kind or k
    return (kind or "sym", tuple(sorted(parts)))


def named(name: str) -> NamedClass:
    p = parse_name(name)
    if p == "1":
        return sym_class(0)
    if p == "F":
        return build_F()
    if p == "Z":
        return build_Z()
    if p == "V":
        return build_V()
    kind, parts = p
    return product_class(parts, kind)


# Display names used for goldens
LEMMA_CLASSES = [
    "S", "S^2", "S^(2)", "S^[2]", "F", "Z",
    "S^(3)", "S x S^(2)", "S^3",
    "S^(4)", "S x S^(3)", "S^4", "S^(2) x S^(2)", "S^2 x S^(2)",
    "S^[3]", "S^[4]", "S x S^[2]",
]
