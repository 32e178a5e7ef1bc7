"""Character tables of W(E6) and of Z2 x| (S3 x S3), with power maps.

The tables are stored as transcribed data.  Class sizes and the group order
are not part of the data; they are recovered from the second orthogonality
relation by :func:`derive_class_sizes`, which doubles as a transcription check.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd
from typing import Mapping, Sequence

__all__ = [
    "CharacterTable",
    "ClassFunction",
    "NonIntegralClassSize",
    "TableMismatch",
    "UnsupportedExponent",
    "load_e6_table",
    "load_a2_table",
    "derive_class_sizes",
    "power_class",
    "validate_table",
    "e6_table",
    "a2_table",
]


class NonIntegralClassSize(ValueError):
    pass


class UnsupportedExponent(ValueError):
    pass


class TableMismatch(ValueError):
    pass


# fmt: off
_E6_ORDERS = [1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4, 4, 5, 6, 6, 6, 6, 6, 6, 6, 8, 9, 10, 12, 12]
_E6_POWER = {
    2: [1, 1, 1, 1, 1, 6, 7, 8, 3, 4, 4, 4, 13, 6, 7, 7, 8, 8, 7, 8, 9, 22, 13, 19, 14],
    3: [1, 2, 3, 4, 5, 1, 1, 1, 9, 10, 11, 12, 13, 3, 3, 2, 3, 2, 4, 5, 21, 6, 23, 10, 9],
    5: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 1, 14, 15, 16, 17, 18, 19, 20, 21, 22, 2, 24, 25],
}
_E6_VALUES = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, -1, 1, 1, -1, 1, 1, 1, 1, -1, -1, 1, 1, 1, 1, -1, 1, -1, 1, -1, -1, 1, -1, -1, 1],
    [6, 4, -2, 2, 0, -3, 3, 0, 2, -2, 2, 0, 1, 1, 1, 1, -2, -2, -1, 0, 0, 0, -1, 1, -1],
    [6, -4, -2, 2, 0, -3, 3, 0, 2, 2, -2, 0, 1, 1, 1, -1, -2, 2, -1, 0, 0, 0, 1, -1, -1],
    [10, 0, -6, 2, 0, 1, -2, 4, 2, 0, 0, -2, 0, -3, 0, 0, 0, 0, 2, 0, 0, 1, 0, 0, -1],
    [15, -5, 7, 3, -1, -3, 0, 3, -1, -3, 1, 1, 0, 1, -2, -2, 1, 1, 0, -1, 1, 0, 0, 0, -1],
    [15, -5, -1, -1, 3, 6, 3, 0, 3, -1, -1, -1, 0, 2, -1, 1, 2, -2, -1, 0, 1, 0, 0, -1, 0],
    [15, 5, 7, 3, 1, -3, 0, 3, -1, 3, -1, 1, 0, 1, -2, 2, 1, -1, 0, 1, -1, 0, 0, 0, -1],
    [15, 5, -1, -1, -3, 6, 3, 0, 3, 1, 1, -1, 0, 2, -1, -1, 2, 2, -1, 0, -1, 0, 0, 1, 0],
    [20, 10, 4, 4, 2, 2, 5, -1, 0, 2, 2, 0, 0, -2, 1, 1, 1, 1, 1, -1, 0, -1, 0, -1, 0],
    [20, -10, 4, 4, -2, 2, 5, -1, 0, -2, -2, 0, 0, -2, 1, -1, 1, -1, 1, 1, 0, -1, 0, 1, 0],
    [20, 0, 4, -4, 0, -7, 2, 2, 4, 0, 0, 0, 0, 1, -2, 0, -2, 0, 2, 0, 0, -1, 0, 0, 1],
    [24, 4, 8, 0, 4, 6, 0, 3, 0, 0, 0, 0, -1, 2, 2, -2, -1, 1, 0, 1, 0, 0, -1, 0, 0],
    [24, -4, 8, 0, -4, 6, 0, 3, 0, 0, 0, 0, -1, 2, 2, 2, -1, -1, 0, -1, 0, 0, 1, 0, 0],
    [30, -10, -10, 2, 2, 3, 3, 3, -2, 4, 0, 0, 0, -1, -1, -1, -1, -1, -1, -1, 0, 0, 0, 1, 1],
    [30, 10, -10, 2, -2, 3, 3, 3, -2, -4, 0, 0, 0, -1, -1, 1, -1, 1, -1, 1, 0, 0, 0, -1, 1],
    [60, 10, -4, 4, 2, 6, -3, -3, 0, -2, -2, 0, 0, 2, -1, 1, -1, 1, 1, -1, 0, 0, 0, 1, 0],
    [60, -10, -4, 4, -2, 6, -3, -3, 0, 2, 2, 0, 0, 2, -1, -1, -1, -1, 1, 1, 0, 0, 0, -1, 0],
    [60, 0, 12, 4, 0, -3, -6, 0, 4, 0, 0, 0, 0, -3, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 1],
    [64, 16, 0, 0, 0, -8, 4, -2, 0, 0, 0, 0, -1, 0, 0, -2, 0, -2, 0, 0, 0, 1, 1, 0, 0],
    [64, -16, 0, 0, 0, -8, 4, -2, 0, 0, 0, 0, -1, 0, 0, 2, 0, 2, 0, 0, 0, 1, -1, 0, 0],
    [80, 0, -16, 0, 0, -10, -4, 2, 0, 0, 0, 0, 0, 2, 2, 0, 2, 0, 0, 0, 0, -1, 0, 0, 0],
    [81, 9, 9, -3, -3, 0, 0, 0, -3, 3, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0],
    [81, -9, 9, -3, 3, 0, 0, 0, -3, -3, 1, -1, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0],
    [90, 0, -6, -6, 0, 9, 0, 0, 2, 0, 0, 2, 0, -3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1],
]

# Columns are labelled by representatives inside S6.
A2_CLASS_LABELS = [
    "()", "(56)", "(456)", "(23)(56)", "(23)(456)", "(123)(456)",
    "(14)(25)(36)", "(14)(2536)", "(142536)",
]
_A2_ORDERS = [1, 2, 3, 2, 6, 3, 2, 4, 6]
_A2_VALUES = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, -1, 1, 1, -1, 1, -1, 1, -1],
    [1, -1, 1, 1, -1, 1, 1, -1, 1],
    [1, 1, 1, 1, 1, 1, -1, -1, -1],
    [2, 0, 2, -2, 0, 2, 0, 0, 0],
    [4, -2, 1, 0, 1, -2, 0, 0, 0],
    [4, 0, -2, 0, 0, 1, -2, 0, 1],
    [4, 0, -2, 0, 0, 1, 2, 0, -1],
    [4, 2, 1, 0, -1, -2, 0, 0, 0],
]
# fmt: on


@dataclass(frozen=True)
class CharacterTable:
    """An integer character table with optional prime power maps.

    ``values[i][c]`` is the value of the (i+1)-th irreducible character on
    the (c+1)-th class; indices in the public API are 1-based to match the
    printed labels chi_1.. and class 1...
    """

    name: str
    orders: tuple[int, ...]
    values: tuple[tuple[int, ...], ...]
    power_maps: Mapping[int, tuple[int, ...]] = field(default_factory=dict)
    class_sizes: tuple[int, ...] = ()
    group_order: int = 0
    class_labels: tuple[str, ...] = ()

    @property
    def n(self) -> int:
        return len(self.orders)

    def dim(self, i: int) -> int:
        return self.values[i - 1][0]

    def chi(self, i: int) -> "ClassFunction":
        return ClassFunction(self.name, tuple(Fraction(v) for v in self.values[i - 1]))

    def trivial(self) -> "ClassFunction":
        return ClassFunction(self.name, (Fraction(1),) * self.n)

    def regular(self) -> "ClassFunction":
        vals = [Fraction(0)] * self.n
        vals[0] = Fraction(self.group_order)
        return ClassFunction(self.name, tuple(vals))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "orders": list(self.orders),
            "power_maps": {str(p): list(m) for p, m in sorted(self.power_maps.items())},
            "values": [list(r) for r in self.values],
            "class_sizes": list(self.class_sizes),
            "group_order": self.group_order,
        }

    def to_tsv(self) -> str:
        head = ["class"] + [str(c + 1) for c in range(self.n)]
        rows = ["\t".join(head), "\t".join(["order"] + [str(o) for o in self.orders])]
        if self.class_sizes:
            rows.append("\t".join(["size"] + [str(s) for s in self.class_sizes]))
        for p, m in sorted(self.power_maps.items()):
            rows.append("\t".join([f"p={p}"] + [str(x) for x in m]))
        for i, r in enumerate(self.values, 1):
            rows.append("\t".join([f"chi{i}"] + [str(x) for x in r]))
        return "\n".join(rows) + "\n"


@dataclass(frozen=True)
class ClassFunction:
    table: str
    values: tuple[Fraction, ...]

    def _check(self, other: "ClassFunction") -> None:
        if self.table != other.table:
            raise TableMismatch(f"{self.table} vs {other.table}")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.table, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.table, tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.table, tuple(a * b for a, b in zip(self.values, other.values)))
        return ClassFunction(self.table, tuple(a * other for a in self.values))

    __rmul__ = __mul__

    def __neg__(self) -> "ClassFunction":
        return ClassFunction(self.table, tuple(-a for a in self.values))

    def is_zero(self) -> bool:
        return not any(self.values)

    def as_ints(self) -> tuple[int, ...]:
        if any(v.denominator != 1 for v in self.values):
            raise ValueError("class function is not integral")
        return tuple(int(v) for v in self.values)


def load_e6_table() -> CharacterTable:
    return CharacterTable(
        name="E6",
        orders=tuple(_E6_ORDERS),
        values=tuple(tuple(r) for r in _E6_VALUES),
        power_maps={p: tuple(m) for p, m in _E6_POWER.items()},
    )


def load_a2_table() -> CharacterTable:
    # Power maps are not printed for this table; burnside.a2_power_maps
    # recovers them from the concrete group.
    return CharacterTable(
        name="A2",
        orders=tuple(_A2_ORDERS),
        values=tuple(tuple(r) for r in _A2_VALUES),
        class_labels=tuple(A2_CLASS_LABELS),
    )


def derive_class_sizes(table: CharacterTable) -> CharacterTable:
    order = sum(r[0] ** 2 for r in table.values)
    sizes = []
    for c in range(table.n):
        norm = sum(r[c] ** 2 for r in table.values)
        if norm == 0 or order % norm:
            raise NonIntegralClassSize(f"{table.name}: class {c + 1} has centraliser norm {norm}")
        sizes.append(order // norm)
    return replace(table, class_sizes=tuple(sizes), group_order=order)


def _prime_factors(m: int) -> list[int]:
    out, p = [], 2
    while p * p <= m:
        while m % p == 0:
            out.append(p)
            m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def _rational(table: CharacterTable) -> bool:
    # Every entry is stored as an int, so the table is rational by construction.
    return all(isinstance(v, int) for r in table.values for v in r)


def power_class(table: CharacterTable, c: int, m: int) -> int:
    """Class of g**m for g in class ``c`` (1-based)."""
    if m < 1:
        raise UnsupportedExponent(f"exponent must be positive, got {m}")
    r = m % table.orders[c - 1]
    if r == 0:
        return 1
    cur = c
    for p in _prime_factors(r):
        if p in table.power_maps:
            cur = table.power_maps[p][cur - 1]
        elif gcd(p, table.orders[cur - 1]) == 1 and _rational(table):
            # rational characters: coprime powers stay in the class
            continue
        else:
            raise UnsupportedExponent(f"no {p}-power map for class {cur} of {table.name}")
    return cur


def validate_table(table: CharacterTable) -> list[tuple[str, bool, str]]:
    """Run the consistency checks; returns ``(check, passed, detail)`` rows."""
    report: list[tuple[str, bool, str]] = []
    n = table.n
    vals = table.values
    sizes = table.class_sizes
    order = table.group_order

    report.append(("square", len(vals) == n and all(len(r) == n for r in vals), f"{n} classes"))
    report.append(("positive dimensions", all(r[0] > 0 for r in vals), ""))
    report.append(("identity class", bool(sizes) and sizes[0] == 1 and table.orders[0] == 1, ""))
    report.append(("class sizes sum to |G|", bool(sizes) and sum(sizes) == order, f"|G|={order}"))

    bad_col = []
    for c in range(n):
        for d in range(c, n):
            s = sum(vals[i][c] * vals[i][d] for i in range(n))
            want = order // sizes[c] if (c == d and sizes) else 0
            if s != want:
                bad_col.append((c + 1, d + 1))
    report.append(("column orthogonality", not bad_col, f"failures {bad_col[:5]}" if bad_col else ""))

    bad_row = []
    for i in range(n):
        for j in range(i, n):
            s = sum(sizes[c] * vals[i][c] * vals[j][c] for c in range(n)) if sizes else -1
            if s != (order if i == j else 0):
                bad_row.append((i + 1, j + 1))
    report.append(("row orthogonality", not bad_row, f"failures {bad_row[:5]}" if bad_row else ""))

    bad_pow = []
    for p, pm in table.power_maps.items():
        if pm[0] != 1:
            bad_pow.append((p, 1))
        for c in range(n):
            o = table.orders[c]
            if table.orders[pm[c] - 1] != o // gcd(o, p):
                bad_pow.append((p, c + 1))
    report.append(("power maps respect orders", not bad_pow, f"failures {bad_pow[:5]}" if bad_pow else ""))

    bad_int = []
    for i in range(n):
        num = sum(sizes[c] * vals[i][c] for c in range(n)) if sizes else 1
        if order and num % order:
            bad_int.append(i + 1)
    report.append(("trivial-multiplicity integrality", not bad_int, ""))
    return report


_CACHE: dict[str, CharacterTable] = {}


def e6_table() -> CharacterTable:
    if "E6" not in _CACHE:
        _CACHE["E6"] = derive_class_sizes(load_e6_table())
    return _CACHE["E6"]


def a2_table() -> CharacterTable:
    """The Z2 x| (S3 x S3) table with class sizes and with power maps read off the concrete group."""
    if "A2" not in _CACHE:
        from .burnside import a2_power_maps

        t = derive_class_sizes(load_a2_table())
        _CACHE["A2"] = replace(t, power_maps=a2_power_maps())
    return _CACHE["A2"]


def tables_json(tables: Sequence[CharacterTable]) -> str:
    return json.dumps([t.to_json() for t in tables], indent=2, sort_keys=True)
