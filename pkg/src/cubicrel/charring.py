"""The graded virtual character ring Rep(G)[L, L^-1] over a fixed character table.

An element is a finitely supported map from L-degree to class function.
Symmetric powers come from Newton's identity with the Adams operations
psi^m(L^d chi)(g) = L^(dm) chi(g^m); this works verbatim for virtual
characters, where it agrees with inverting the total symmetric series.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .chartable import CharacterTable, ClassFunction, TableMismatch, power_class
from .rootsys import NonIntegralDecomposition

__all__ = [
    "GradedCharacter",
    "Decomposition",
    "lefschetz",
    "constant",
    "from_class_function",
    "adams",
    "sym_power",
    "decompose",
    "reconstruct",
    "evaluate",
    "format_decomposition",
    "parse_display",
]


@dataclass(frozen=True)
class GradedCharacter:
    table: CharacterTable
    terms: tuple[tuple[int, tuple[Fraction, ...]], ...]  # sorted by degree, no zero rows
    effective: bool = False

    @classmethod
    def build(cls, table: CharacterTable, terms: Mapping[int, Iterable], effective: bool = False):
        clean = []
        for d in sorted(terms):
            row = tuple(Fraction(v) for v in terms[d])
            if len(row) != table.n:
                raise ValueError(f"degree {d}: {len(row)} values for {table.n} classes")
            if any(row):
                clean.append((d, row))
        return cls(table, tuple(clean), effective)

    def as_dict(self) -> dict[int, tuple[Fraction, ...]]:
        return dict(self.terms)

    def degrees(self) -> list[int]:
        return [d for d, _ in self.terms]

    def coefficient(self, d: int) -> ClassFunction:
        row = self.as_dict().get(d, (Fraction(0),) * self.table.n)
        return ClassFunction(self.table.name, row)

    def _same(self, other: "GradedCharacter") -> None:
        if self.table.name != other.table.name:
            raise TableMismatch(f"{self.table.name} vs {other.table.name}")

    def __add__(self, other):
        if not isinstance(other, GradedCharacter):
            return self + constant(self.table, other)
        self._same(other)
        out = self.as_dict()
        for d, row in other.terms:
            cur = out.get(d)
            out[d] = row if cur is None else tuple(a + b for a, b in zip(cur, row))
        return GradedCharacter.build(self.table, out, self.effective and other.effective)

    __radd__ = __add__

    def __neg__(self):
        return GradedCharacter.build(self.table, {d: tuple(-a for a in r) for d, r in self.terms})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GradedCharacter):
            c = Fraction(other)
            return GradedCharacter.build(self.table, {d: tuple(c * a for a in r) for d, r in self.terms},
                                         self.effective and c >= 0)
        self._same(other)
        out: dict[int, list[Fraction]] = {}
        for d1, r1 in self.terms:
            for d2, r2 in other.terms:
                acc = out.setdefault(d1 + d2, [Fraction(0)] * self.table.n)
                for c in range(self.table.n):
                    acc[c] += r1[c] * r2[c]
        return GradedCharacter.build(self.table, out, self.effective and other.effective)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = constant(self.table, 1, effective=self.effective)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "GradedCharacter":
        """Multiply by L^k."""
        return GradedCharacter(self.table, tuple((d + k, r) for d, r in self.terms), self.effective)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return self.table.name == other.table.name and self.terms == other.terms

    def __hash__(self):
        return hash((self.table.name, self.terms))


def constant(table: CharacterTable, c=1, effective: bool = True) -> GradedCharacter:
    return GradedCharacter.build(table, {0: (Fraction(c),) * table.n}, effective and Fraction(c) >= 0)


def lefschetz(table: CharacterTable, d: int = 1) -> GradedCharacter:
    return GradedCharacter.build(table, {d: (1,) * table.n}, effective=True)


def from_class_function(table: CharacterTable, chi: ClassFunction, degree: int = 0,
                        effective: bool = False) -> GradedCharacter:
    if chi.table != table.name:
        raise TableMismatch(f"{chi.table} vs {table.name}")
    return GradedCharacter.build(table, {degree: chi.values}, effective)


def from_irreps(table: CharacterTable, terms: Mapping[int, Mapping[int, int]]) -> GradedCharacter:
    """Build from multiplicities ``{degree: {irrep index: multiplicity}}``."""
    out = {}
    for d, mults in terms.items():
        row = [Fraction(0)] * table.n
        for i, m in mults.items():
            for c in range(table.n):
                row[c] += m * table.values[i - 1][c]
        out[d] = row
    eff = all(m >= 0 for mults in terms.values() for m in mults.values())
    return GradedCharacter.build(table, out, eff)


def adams(x: GradedCharacter, m: int) -> GradedCharacter:
    t = x.table
    cls = [power_class(t, c + 1, m) - 1 for c in range(t.n)]
    return GradedCharacter.build(t, {d * m: tuple(r[cls[c]] for c in range(t.n)) for d, r in x.terms},
                                 x.effective)


@lru_cache(maxsize=4096)
def _sym_series(x: GradedCharacter, n: int) -> tuple[GradedCharacter, ...]:
    one = constant(x.table, 1)
    h = [one]
    psi = [None] + [adams(x, m) for m in range(1, n + 1)]
    for k in range(1, n + 1):
        acc = GradedCharacter.build(x.table, {})
        for m in range(1, k + 1):
            acc = acc + psi[m] * h[k - m]
        h.append(acc * Fraction(1, k))
    return tuple(h)


def sym_power(x: GradedCharacter, n: int) -> GradedCharacter:
    if n < 0:
        raise ValueError("negative symmetric power")
    out = _sym_series(x, n)[n]
    return GradedCharacter(out.table, out.terms, x.effective)


Decomposition = dict[int, dict[int, Fraction]]


def decompose(x: GradedCharacter) -> Decomposition:
    t = x.table
    out: Decomposition = {}
    for d, row in x.terms:
        mults = {}
        for i in range(1, t.n + 1):
            s = sum(t.class_sizes[c] * t.values[i - 1][c] * row[c] for c in range(t.n))
            m = Fraction(s, t.group_order)
            if m:
                mults[i] = m
        if x.effective and any(m.denominator != 1 or m < 0 for m in mults.values()):
            raise NonIntegralDecomposition(f"degree {d}: {mults}")
        if mults:
            out[d] = mults
    return out


def reconstruct(table: CharacterTable, dec: Decomposition) -> GradedCharacter:
    return from_irreps(table, dec)


def evaluate(x: GradedCharacter, mode: str):
    if mode == "dimension":
        return sum((row[0] for _, row in x.terms), Fraction(0))
    if mode == "L_to_1":
        acc = [Fraction(0)] * x.table.n
        for _, row in x.terms:
            acc = [a + b for a, b in zip(acc, row)]
        return ClassFunction(x.table.name, tuple(acc))
    if mode in ("mod_L", "L_to_0"):
        return x.coefficient(0)
    raise ValueError(f"unknown evaluation mode {mode!r}")


def _fmt_num(m: Fraction) -> str:
    return str(m.numerator) if m.denominator == 1 else f"{m.numerator}/{m.denominator}"


def _fmt_coeff(mults: Mapping[int, Fraction], chi: str) -> tuple[str, bool]:
    parts = []
    for i in sorted(mults):
        m = mults[i]
        if i == 1:
            body = _fmt_num(m)
        else:
            body = chi + str(i) if m == 1 else ("-" if m == -1 else _fmt_num(m)) + chi + str(i)
        parts.append(body)
    s = " + ".join(parts).replace("+ -", "- ")
    simple = len(parts) == 1
    return s, simple


def format_decomposition(dec: Decomposition, chi: str = "χ", lvar: str = "L") -> str:
    """Render as ``1 + (1 + χ3) L + L^2``, constants first inside each coefficient."""
    if not dec:
        return "0"
    terms = []
    for d in sorted(dec):
        body, simple = _fmt_coeff(dec[d], chi)
        if d == 0:
            terms.append(body)
            continue
        mono = lvar if d == 1 else f"{lvar}^{d}"
        if dec[d] == {1: 1}:
            terms.append(mono)
        elif simple and not body.startswith("-"):
            terms.append(f"{body} {mono}" if not body.isdigit() else f"{body}{mono}")
        else:
            terms.append(f"({body}) {mono}")
    return " + ".join(terms)


def decomposition_json(dec: Decomposition) -> dict[str, dict[str, int | str]]:
    return {str(d): {f"chi{i}": (int(m) if m.denominator == 1 else str(m)) for i, m in sorted(mults.items())}
            for d, mults in sorted(dec.items())}


_TOKEN = re.compile(r"\\X_\{?(\d+)\}?|\\chi_\{?(\d+)\}?|\\One|\\L(?:\^\{?(-?\d+)\}?)?|(\d+)|([()+-])")


def parse_display(text: str) -> Decomposition:
    """Parse a LaTeX display such as ``1 + (1 + \\X_3)\\L + \\L^2``.

    Accepts ``\\X_i``/``\\chi_i`` for irreducibles, ``\\One`` or ``1`` for the
    trivial character, and ``\\L``/``\\L^k`` for powers of L.  Line-break
    markup (``&``, ``\\\\``, ``\\nonumber``) is ignored.
    """
    text = re.sub(r"\\nonumber|\\\\|&|\\\\times|\s", "", text)
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse {text[pos:pos + 20]!r}")
        toks.append(m)
        pos = m.end()

    out: Decomposition = {}

    def add(deg: int, irrep: int, mult: int) -> None:
        row = out.setdefault(deg, {})
        row[irrep] = row.get(irrep, Fraction(0)) + mult
        if row[irrep] == 0:
            del row[irrep]

    def lpow(m: re.Match) -> int | None:
        if m.group(0).startswith("\\L"):
            return int(m.group(3)) if m.group(3) is not None else 1
        return None

    i = 0
    sign = 1
    while i < len(toks):
        t = toks[i]
        g = t.group(0)
        if g in "+-" and t.group(5):
            sign = 1 if g == "+" else -1
            i += 1
            continue
        if g == "(":
            j = i + 1
            inner: list[tuple[int, int, int]] = []  # (sign, coeff, irrep)
            s = 1
            while toks[j].group(0) != ")":
                tj = toks[j]
                if tj.group(5) in ("+", "-"):
                    s = 1 if tj.group(0) == "+" else -1
                    j += 1
                    continue
                coeff = 1
                if tj.group(4):
                    coeff = int(tj.group(4))
                    if j + 1 < len(toks) and (toks[j + 1].group(1) or toks[j + 1].group(2)):
                        j += 1
                        tj = toks[j]
                    else:
                        inner.append((s, coeff, 1))
                        j += 1
                        continue
                irrep = int(tj.group(1) or tj.group(2)) if (tj.group(1) or tj.group(2)) else 1
                inner.append((s, coeff, irrep))
                j += 1
            deg = 0
            if j + 1 < len(toks) and lpow(toks[j + 1]) is not None:
                deg = lpow(toks[j + 1])
                j += 1
            for s, coeff, irrep in inner:
                add(deg, irrep, sign * s * coeff)
            i = j + 1
            continue
        coeff = 1
        if t.group(4):
            coeff = int(t.group(4))
            if i + 1 < len(toks) and (toks[i + 1].group(1) or toks[i + 1].group(2) or toks[i + 1].group(0) == "\\One"):
                i += 1
                t = toks[i]
            elif i + 1 < len(toks) and lpow(toks[i + 1]) is not None:
                add(lpow(toks[i + 1]), 1, sign * coeff)
                i += 2
                continue
            else:
                add(0, 1, sign * coeff)
                i += 1
                continue
        if lpow(t) is not None:
            add(lpow(t), 1, sign * coeff)
            i += 1
            continue
        irrep = int(t.group(1) or t.group(2)) if (t.group(1) or t.group(2)) else 1
        deg = 0
        if i + 1 < len(toks) and lpow(toks[i + 1]) is not None:
            deg = lpow(toks[i + 1])
            i += 1
        add(deg, irrep, sign * coeff)
        i += 1
    return {d: row for d, row in out.items() if row}
