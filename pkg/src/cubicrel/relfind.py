"""Linear relations with L-polynomial coefficients among graded characters.

A relation is a finite sum ``sum_j p_j(L) [X_j] = 0`` with ``p_j`` in Q[L].
The special class name ``"1"`` carries the constant term.

Two notions of "how many relations" are reported:

* the raw rational nullspace after bounding every ``p_j`` to degree ``D``;
* the dimension over the field Q(L), i.e. relations up to multiplication by
  polynomials in L. A unique minimal relation is a primitive generator of a
  rank-one kernel.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .charring import GradedCharacter, decompose
from .lpoly import LPoly, bareiss_nullspace, primitive, ratfunc_kernel, ratfunc_rank
from .motives import NamedClass, monomials, named, product_class

__all__ = [
    "CertificateUnavailable",
    "RelationVector",
    "RelationSpace",
    "parse_lpoly",
    "relation",
    "find_relations",
    "relation_space",
    "minimize",
    "verify_relation",
    "nonexistence_certificate",
    "min_valuation",
    "modL_obstruction",
    "homogeneous_classes",
    "REGISTERED",
    "REGISTERED_PRINTED",
    "motive_sum",
    "MOTIVIC_LHS_PRINTED",
    "MOTIVIC_RHS_PRINTED",
    "MOTIVIC_LHS",
    "MOTIVIC_RHS",
]


class CertificateUnavailable(Exception):
    """No irreducible separates some candidate class from the others."""


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(?:\*?\s*(L)(?:\^(\d+))?)?")


def parse_lpoly(text: str) -> LPoly:
    """Parse ``"L - 2L^2 + 3"`` style polynomials in L."""
    s = text.replace(" ", "").replace("\\L", "L")
    if not s:
        raise ValueError("empty polynomial")
    out: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        deg = (int(m.group(4)) if m.group(4) else 1) if m.group(3) else 0
        out[deg] = out.get(deg, 0) + sign * coef
        pos = m.end()
    return LPoly.from_dict(out)


@dataclass(frozen=True)
class RelationVector:
    """Coefficient per class name; ``"1"`` is the constant term."""

    coeffs: tuple[tuple[str, LPoly], ...]

    @classmethod
    def from_mapping(cls, m: Mapping[str, LPoly]) -> "RelationVector":
        merged: dict[str, LPoly] = {}
        for k, v in m.items():
            merged[k] = merged.get(k, LPoly()) + v
        return cls(tuple((k, v) for k, v in merged.items() if v))

    def as_dict(self) -> dict[str, LPoly]:
        return dict(self.coeffs)

    def __getitem__(self, name: str) -> LPoly:
        return self.as_dict().get(name, LPoly())

    def names(self) -> list[str]:
        return [k for k, _ in self.coeffs]

    def scale(self, p: LPoly) -> "RelationVector":
        return RelationVector.from_mapping({k: v * p for k, v in self.coeffs})

    def __neg__(self) -> "RelationVector":
        return self.scale(LPoly([-1]))

    def __add__(self, other: "RelationVector") -> "RelationVector":
        d = self.as_dict()
        for k, v in other.coeffs:
            d[k] = d.get(k, LPoly()) + v
        return RelationVector.from_mapping(d)

    def __eq__(self, other) -> bool:
        return isinstance(other, RelationVector) and self.as_dict() == other.as_dict()

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs))

    def max_degree(self) -> int:
        return max((p.degree for _, p in self.coeffs), default=-1)

    def to_json(self) -> dict[str, list[str]]:
        out = {}
        for k, p in sorted(self.coeffs):
            out[k] = [str(c) for c in p.coeffs]
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for k, p in self.coeffs:
            ps = str(p)
            if k == "1":
                bits.append(f"({ps})")
            elif ps == "1":
                bits.append(f"[{k}]")
            else:
                bits.append(f"({ps})[{k}]")
        return " + ".join(bits) + " = 0"


def relation(lhs: Mapping[str, str], rhs: Mapping[str, str] | None = None) -> RelationVector:
    """Build ``lhs - rhs`` from polynomial strings, e.g. ``{"Z": "L^4"}``."""
    d: dict[str, LPoly] = {}
    for k, v in lhs.items():
        d[k] = d.get(k, LPoly()) + parse_lpoly(v)
    for k, v in (rhs or {}).items():
        d[k] = d.get(k, LPoly()) - parse_lpoly(v)
    return RelationVector.from_mapping(d)


def _resolve(name: str) -> GradedCharacter:
    return named(name).value


def _class_polys(x: GradedCharacter) -> list[LPoly]:
    """Per irreducible, the polynomial in L of its multiplicities."""
    dec = decompose(x)
    n = x.table.n
    per: list[dict[int, Fraction]] = [dict() for _ in range(n)]
    for d, mult in dec.items():
        for i, m in mult.items():
            per[i - 1][d] = m
    return [LPoly.from_dict(p) if p else LPoly() for p in per]


@dataclass
class RelationSpace:
    labels: list[str]
    max_coeff_degree: int
    basis: list[RelationVector]
    field_basis: list[RelationVector]
    field_rank: int = 0
    extras: dict = field(default_factory=dict)

    @property
    def nullity(self) -> int:
        return len(self.basis)

    @property
    def field_dimension(self) -> int:
        return len(self.field_basis)

    def to_json(self) -> dict:
        return {
            "classes": list(self.labels),
            "max_deg": self.max_coeff_degree,
            "nullity": self.nullity,
            "field_dimension": self.field_dimension,
            "relations": [r.to_json() for r in self.basis],
            "minimal": [r.to_json() for r in self.field_basis],
        }


def _as_pairs(classes: Sequence) -> list[tuple[str, GradedCharacter]]:
    out = []
    for c in classes:
        if isinstance(c, NamedClass):
            out.append((c.name, c.value))
        elif isinstance(c, str):
            out.append((c, _resolve(c)))
        else:
            name, value = c
            out.append((name, value))
    tables = {v.table.name for _, v in out}
    if len(tables) > 1:
        raise ValueError(f"classes live over different tables: {sorted(tables)}")
    return out


def find_relations(
    classes: Sequence,
    max_coeff_degree: int = 8,
    distinguished: str | None = None,
) -> RelationSpace:
    """All relations among ``classes`` with coefficient degree at most ``max_coeff_degree``.

    ``classes`` may hold NamedClass objects, names understood by
    :func:`cubicrel.motives.named`, or ``(name, GradedCharacter)`` pairs.
    """
    pairs = _as_pairs(classes)
    labels = [n for n, _ in pairs]
    columns = [_class_polys(v) for _, v in pairs]
    return relation_space(labels, columns, max_coeff_degree, distinguished)


def relation_space(
    labels: Sequence[str],
    columns: Sequence[Sequence[LPoly]],
    max_coeff_degree: int = 8,
    distinguished: str | None = None,
) -> RelationSpace:
    """Relations among vectors over Q[L]; ``columns[j][i]`` is coordinate i of class j.

    Coordinates are whatever basis the classes are expanded in: irreducible
    characters for graded characters, monomials for free polynomial rings.
    """
    if max_coeff_degree < 0:
        raise ValueError("max_coeff_degree must be non-negative")
    labels = list(labels)
    D = max_coeff_degree
    nrows = len(columns[0]) if columns else 0
    top = max((p.degree for col in columns for p in col), default=0) + D
    ncols = len(columns) * (D + 1)
    # Row (i, e) collects coordinate i at L^e.
    rows = []
    for i in range(nrows):
        for e in range(top + 1):
            row = [0] * ncols
            for j, col in enumerate(columns):
                cs = col[i].coeffs
                for k in range(D + 1):
                    if 0 <= e - k < len(cs):
                        c = cs[e - k]
                        if c.denominator != 1:
                            raise ValueError("class has non-integral coordinates")
                        row[j * (D + 1) + k] = int(c)
            if any(row):
                rows.append(row)
    raw = bareiss_nullspace(rows) if rows else [
        [Fraction(int(i == k)) for i in range(ncols)] for k in range(ncols)
    ]
    basis = []
    for vec in raw:
        d = {labels[j]: LPoly(vec[j * (D + 1):(j + 1) * (D + 1)]) for j in range(len(columns))}
        basis.append(minimize(RelationVector.from_mapping(d), distinguished, keep_multiple=True))

    matrix = [[columns[j][i] for j in range(len(columns))] for i in range(nrows)]
    kern = ratfunc_kernel(matrix, len(columns)) if columns else []
    field_basis = [
        minimize(RelationVector.from_mapping(dict(zip(labels, v))), distinguished) for v in kern
    ]
    rank = ratfunc_rank(matrix) if matrix else 0
    return RelationSpace(labels, D, basis, field_basis, rank)


def minimize(
    rel: RelationVector, distinguished: str | None = None, keep_multiple: bool = False
) -> RelationVector:
    """Canonical primitive form.

    Denominators are cleared and the integer content removed; unless
    ``keep_multiple`` the polynomial gcd of all coefficients is divided out.
    The sign makes the leading coefficient of ``distinguished`` positive,
    falling back to ``Z`` and then the first class in name order.
    """
    d = rel.as_dict()
    if not d:
        raise ValueError("cannot minimize the zero relation")
    names = sorted(d)
    vals = [d[k] for k in names]
    if keep_multiple:
        from math import gcd, lcm
        den = lcm(*(c.denominator for p in vals for c in p.coeffs))
        vals = [p * den for p in vals]
        g = 0
        for p in vals:
            for c in p.coeffs:
                g = gcd(g, int(c))
        vals = [p * Fraction(1, g) for p in vals]
    else:
        vals = primitive(vals)
    out = dict(zip(names, vals))
    key = next(
        (k for k in (distinguished, "Z") if k is not None and k in out and out[k]),
        names[0],
    )
    if out[key].coeffs[-1] < 0:
        out = {k: -v for k, v in out.items()}
    return RelationVector.from_mapping(out)


def verify_relation(
    rel: RelationVector, resolver: Callable[[str], GradedCharacter] = _resolve
):
    """The residual ``sum_j p_j(L)[X_j]``; zero exactly when the relation holds.

    ``resolver`` maps class names to ring elements supporting ``shift``,
    scalar ``*`` and ``+``, so Burnside-ring classes work as well.
    """
    acc = None
    for name, p in rel.coeffs:
        x = resolver(name)
        for k, c in enumerate(p.coeffs):
            if c:
                term = x.shift(k) * (c.numerator if c.denominator == 1 else c)
                acc = term if acc is None else acc + term
    if acc is None:
        return resolver("1") * 0
    if isinstance(acc, GradedCharacter):
        return GradedCharacter(acc.table, acc.terms, False)
    return acc


def _support_at_one(x: GradedCharacter) -> set[int]:
    total: dict[int, Fraction] = {}
    for mult in decompose(x).values():
        for i, m in mult.items():
            total[i] = total.get(i, 0) + m
    return {i - 1 for i, m in total.items() if m}


def nonexistence_certificate(
    classes: Sequence,
    blocking_irreps: Mapping[str, int] | None = None,
    allow_residual: bool = False,
) -> dict:
    """Peel classes off one at a time using irreducibles (after L -> 1) unique to them.

    If a class is the only remaining candidate containing some irreducible,
    its coefficient in any relation vanishes, so it can be removed. When the
    peeling empties the candidate list the report is a complete proof that no
    relation exists. ``blocking_irreps`` may prescribe the irreducible
    (1-based index) to use for a class; otherwise the smallest unique one is
    taken. With ``allow_residual`` the classes that resist peeling are
    returned under ``"residual"`` together with their relation space instead
    of raising.
    """
    pairs = _as_pairs(classes)
    supports = {n: _support_at_one(v) for n, v in pairs}
    remaining = [n for n, _ in pairs]
    steps: list[tuple[str, int]] = []
    blocking = dict(blocking_irreps or {})
    progress = True
    while remaining and progress:
        progress = False
        for name in list(remaining):
            others = set().union(*(supports[o] for o in remaining if o != name))
            unique = supports[name] - others
            if not unique:
                continue
            want = blocking.get(name)
            if want is not None:
                if want - 1 not in unique:
                    continue
                pick = want - 1
            else:
                pick = min(unique)
            steps.append((name, pick + 1))
            remaining.remove(name)
            progress = True
            break
    report = {"steps": steps, "blocking": {n: i for n, i in steps}, "residual": []}
    if remaining:
        if not allow_residual:
            raise CertificateUnavailable(
                f"no separating irreducible for {remaining}; fall back to the nullspace report"
            )
        rest = [p for p in pairs if p[0] in remaining]
        report["residual"] = remaining
        report["residual_space"] = find_relations(rest)
    return report


def min_valuation(classes: Sequence, irrep: int) -> int | None:
    """Lowest L-degree at which irreducible ``irrep`` (1-based) occurs in any class."""
    best = None
    for _, v in _as_pairs(classes):
        for d, mult in sorted(decompose(v).items()):
            if mult.get(irrep):
                best = d if best is None else min(best, d)
                break
    return best


def _factors(name: str, base: str = "S") -> tuple[int, ...] | None:
    """Indices of a product of symmetric powers or Hilbert schemes, None for other symbols.

    S^[n] is birational to S^(n), so both share stable birational behaviour.
    """
    from .motives import parse_name

    if base != "S":
        if "S" in name:
            return None
        name = name.replace(base, "S")
    try:
        p = parse_name(name)
    except ValueError:
        return None
    if p == "1":
        return ()
    if isinstance(p, str):
        return None
    return p[1]


def modL_obstruction(rel: RelationVector, base: str = "S") -> dict:
    """Reduce mod L and test the stable-birational k-point obstruction.

    Over a field where S has no points of degree prime to 3, a product of
    symmetric powers has a rational point iff every index is a multiple of 3
    (the constant counts as a point). Relations mod L hold in the free
    abelian group on stable birational classes, so the point-bearing terms
    must cancel among themselves. A lone point-bearing term, with everything
    else a product having a factor prime to 3, cannot cancel: the reduction
    is flagged. Symbols of unknown point behaviour suppress the flag.
    """
    reduction = {k: int(p.coeffs[0]) for k, p in rel.coeffs if p.coeffs and p.coeffs[0]}
    pointed, unknown = [], []
    for k in reduction:
        f = _factors(k, base)
        if f is None:
            unknown.append(k)
        elif all(n % 3 == 0 for n in f):
            pointed.append(k)
    flagged = bool(reduction) and not unknown and len(pointed) == 1

    def weight(k: str) -> tuple[int, int]:
        f = _factors(k, base) or ()
        return (sum(f), -len(f))

    if reduction and reduction[max(reduction, key=weight)] < 0:
        reduction = {k: -c for k, c in reduction.items()}
    order = sorted(reduction, key=weight, reverse=True)
    lhs = [k for k in order for _ in range(max(reduction[k], 0))]
    rhs = [k for k in order for _ in range(max(-reduction[k], 0))]
    text = " + ".join(f"[{k}]" for k in lhs) + " ≡ " + " + ".join(f"[{k}]" for k in rhs or ["0"])
    return {
        "reduction": reduction,
        "lhs": lhs,
        "rhs": rhs,
        "congruence": text + " (mod L)",
        "pointed": pointed,
        "flagged": flagged,
    }


def homogeneous_classes(max_degree: int, kind: str = "sym") -> list[NamedClass]:
    """All products of symmetric powers (or Hilbert schemes) of formula degree <= max_degree."""
    return [product_class(p, kind) for p in monomials(max_degree)]


def _rel(lhs: dict[str, str], rhs: dict[str, str]) -> RelationVector:
    return relation(lhs, rhs)


REGISTERED: dict[str, RelationVector] = {
    "szs-sym": _rel(
        {"Z": "L^4"},
        {
            "S^(4)": "1",
            "S^(3)": "-1 + L - L^2",
            "S x S^(2)": "-L",
            "S^2": "L + L^2 + L^3",
            "S^(2)": "-2L^2",
            "S": "-L + L^2 - L^3 + L^4 - L^5",
            "1": "L^2 + L^4 + L^6",
        },
    ),
    "szs-hilb": _rel(
        {"Z": "L^4"},
        {
            "S^[4]": "1",
            "S^[3]": "-1 + L - L^2",
            "S x S^[2]": "-2L",
            "S^2": "2L + L^2 + 2L^3",
            "S^[2]": "-3L^2",
            "S": "-L + 2L^2 + 2L^4 - L^5",
            "1": "L^2 + L^4 + L^6",
        },
    ),
    "yfy-sym": _rel({"S^(2)": "1"}, {"S": "1 + L^2", "F": "L^2"}),
    "yfy-hilb": _rel({"S^[2]": "1"}, {"S": "1 + L + L^2", "F": "L^2"}),
    "deg5": _rel(
        {"S^(5)": "1", "S x S^(3)": "1"},
        {
            "S x S^(4)": "1",
            "S^(3)": "1 + L^2 + L^4",
            "S^2 x S^(2)": "-L",
            "S x S^(3)": "-L^2",
            "S x S^(2)": "2L + L^2 + 2L^3",
            "S^3": "L + L^2 + L^3",
            "S^2": "-2L - 3L^2 - 5L^3 - 3L^4 - 2L^5",
            "S^(2)": "-L - L^2 - L^3 - L^4 - L^5",
            "S": "L^7 + 3L^6 + 4L^5 + 5L^4 + 4L^3 + 3L^2 + L",
            "1": "-L^8 - L^7 - 2L^6 - L^5 - 2L^4 - L^3 - L^2",
        },
    ),
}


# As typeset in the source, with [S^(2)] in place of [S^2] in one term;
# kept to report its residual.
REGISTERED_PRINTED: dict[str, RelationVector] = {
    "deg5": REGISTERED["deg5"]
    + relation({"S^(2)": "-2L - 3L^2 - 5L^3 - 3L^4 - 2L^5"}, {"S^2": "-2L - 3L^2 - 5L^3 - 3L^4 - 2L^5"}),
}


# Chow-motive sums: (multiplicity, class name, Tate twist). Twist k contributes L^k.
MOTIVIC_LHS_PRINTED = [
    (1, "Z", 4), (1, "S^[3]", 0), (1, "S^[3]", 2), (2, "S x S^[2]", 1),
    (3, "S^[2]", 2), (1, "S", 0), (1, "S", 5),
]
MOTIVIC_RHS_PRINTED = [
    (1, "S^[4]", 0), (1, "S^[3]", 2), (2, "S^2", 1), (1, "S^2", 2), (2, "S^2", 3),
    (2, "S", 2), (2, "S", 4), (1, "1", 2), (1, "1", 4), (1, "1", 6),
]
MOTIVIC_LHS = [
    (1, "Z", 4), (1, "S^[3]", 0), (1, "S^[3]", 2), (2, "S x S^[2]", 1),
    (3, "S^[2]", 2), (1, "S", 1), (1, "S", 5),
]
MOTIVIC_RHS = [
    (1, "S^[4]", 0), (1, "S^[3]", 1), (2, "S^2", 1), (1, "S^2", 2), (2, "S^2", 3),
    (2, "S", 2), (2, "S", 4), (1, "1", 2), (1, "1", 4), (1, "1", 6),
]


def motive_sum(
    terms: Iterable[tuple[int, str, int]], resolver: Callable[[str], GradedCharacter] = _resolve
) -> GradedCharacter:
    acc = None
    for mult, name, twist in terms:
        x = resolver(name).shift(twist) * mult
        acc = x if acc is None else acc + x
    if acc is None:
        raise ValueError("empty motive sum")
    return acc
