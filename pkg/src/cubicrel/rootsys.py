"""The lattice Z^7 = Pic of a cubic surface, its 27 lines, 72 roots and W(E6).

Group elements are permutations of the 72 roots (a faithful action), stored
as rows of a ``uint8`` array.  The 7x7 integer matrix of an element is
reconstructed from its action on a rational basis when needed.
"""
from __future__ import annotations

import hashlib
import itertools
import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Callable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .chartable import CharacterTable, ClassFunction, e6_table

log = logging.getLogger(__name__)

__all__ = [
    "Lattice",
    "WeylGroup",
    "build_lattice",
    "enumerate_roots",
    "enumerate_lines",
    "reflection",
    "generate_weyl",
    "weyl_group",
    "permutation_character",
    "lattice_character",
    "CardinalityMismatch",
    "NotARoot",
    "OrderMismatch",
    "AmbiguousMatching",
    "InconsistentMatching",
    "NonIntegralDecomposition",
]


class CardinalityMismatch(RuntimeError):
    pass


class NotARoot(ValueError):
    pass


class OrderMismatch(RuntimeError):
    pass


class AmbiguousMatching(RuntimeError):
    pass


class InconsistentMatching(RuntimeError):
    pass


class NonIntegralDecomposition(ValueError):
    pass


Vec = tuple[int, ...]


@dataclass(frozen=True)
class Lattice:
    gram: tuple[tuple[int, ...], ...] = tuple(
        tuple((1 if i == j == 0 else -1 if i == j else 0) for j in range(7)) for i in range(7)
    )
    canonical: Vec = (-3, 1, 1, 1, 1, 1, 1)

    def pairing(self, u: Sequence[int], v: Sequence[int]) -> int:
        return u[0] * v[0] - sum(a * b for a, b in zip(u[1:], v[1:]))


def build_lattice() -> Lattice:
    return Lattice()


def basis(i: int) -> Vec:
    return tuple(1 if j == i else 0 for j in range(7))


def enumerate_roots(lat: Lattice) -> list[Vec]:
    roots: list[Vec] = []
    roots.append((2, -1, -1, -1, -1, -1, -1))
    roots.append((-2, 1, 1, 1, 1, 1, 1))
    for trip in itertools.combinations(range(1, 7), 3):
        v = [1] + [0] * 6
        for k in trip:
            v[k] = -1
        roots.append(tuple(v))
        roots.append(tuple(-x for x in v))
    for i, j in itertools.permutations(range(1, 7), 2):
        v = [0] * 7
        v[i], v[j] = 1, -1
        roots.append(tuple(v))
    roots.sort()
    if len(roots) != 72 or len(set(roots)) != 72:
        raise CardinalityMismatch(f"expected 72 roots, got {len(set(roots))}")
    K = lat.canonical
    for r in roots:
        if lat.pairing(r, r) != -2 or lat.pairing(r, K) != 0:
            raise CardinalityMismatch(f"{r} is not a root")
    return roots


def enumerate_lines(lat: Lattice) -> list[Vec]:
    lines: list[Vec] = []
    for i in range(1, 7):
        lines.append(basis(i))
        v = [2] + [-1] * 6
        v[i] = 0
        lines.append(tuple(v))
    for i, j in itertools.combinations(range(1, 7), 2):
        v = [1] + [0] * 6
        v[i] = v[j] = -1
        lines.append(tuple(v))
    lines.sort()
    if len(lines) != 27 or len(set(lines)) != 27:
        raise CardinalityMismatch(f"expected 27 lines, got {len(set(lines))}")
    K = lat.canonical
    for l in lines:
        if lat.pairing(l, l) != -1 or lat.pairing(l, K) != -1:
            raise CardinalityMismatch(f"{l} is not a line")
    return lines


def reflect(lat: Lattice, alpha: Sequence[int], beta: Sequence[int]) -> Vec:
    c = lat.pairing(alpha, beta)
    return tuple(b + c * a for a, b in zip(alpha, beta))


def reflection(lat: Lattice, alpha: Sequence[int], roots: Sequence[Vec] | None = None) -> np.ndarray:
    """The reflection in ``alpha`` as a permutation of the (sorted) root list."""
    if lat.pairing(alpha, alpha) != -2:
        raise NotARoot(f"(a, a) = {lat.pairing(alpha, alpha)} for {tuple(alpha)}")
    roots = list(roots) if roots is not None else enumerate_roots(lat)
    index = {r: i for i, r in enumerate(roots)}
    return np.array([index[reflect(lat, alpha, r)] for r in roots], dtype=np.uint8)


# E1-E2, ..., E5-E6 and E0-E1-E2-E3
SIMPLE_ROOTS: tuple[Vec, ...] = (
    (0, 1, -1, 0, 0, 0, 0),
    (0, 0, 1, -1, 0, 0, 0),
    (0, 0, 0, 1, -1, 0, 0),
    (0, 0, 0, 0, 1, -1, 0),
    (0, 0, 0, 0, 0, 1, -1),
    (1, -1, -1, -1, 0, 0, 0),
)


def _cycle_type(p: Sequence[int]) -> tuple[int, ...]:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if not seen[i]:
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                n += 1
            out.append(n)
    return tuple(sorted(out, reverse=True))


def cycle_notation(p: Sequence[int], offset: int = 0) -> str:
    seen = [False] * len(p)
    parts = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc, j = [], i
        while not seen[j]:
            seen[j] = True
            cyc.append(str(j + offset))
            j = p[j]
        parts.append("(" + ",".join(cyc) + ")")
    return "".join(parts) or "()"


@dataclass
class WeylGroup:
    lattice: Lattice
    roots: list[Vec]
    lines: list[Vec]
    generators: np.ndarray
    elements: np.ndarray  # shape (|W|, 72), row 0 is the identity
    index: dict[bytes, int] = field(repr=False)
    class_of: np.ndarray | None = None  # element -> computed class id
    class_reps: list[int] = field(default_factory=list)
    class_sizes: list[int] = field(default_factory=list)
    class_orders: list[int] = field(default_factory=list)
    class_traces: list[int] = field(default_factory=list)  # trace on K_S-perp
    matching: dict[int, int] = field(default_factory=dict)  # computed class -> table column
    _mats: dict[int, np.ndarray] = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def lookup(self, perm: np.ndarray) -> int:
        return self.index[np.ascontiguousarray(perm, dtype=np.uint8).tobytes()]

    def compose(self, a: int, b: int) -> np.ndarray:
        """Permutation of ``a o b`` (apply b first)."""
        return self.elements[a][self.elements[b]]

    def power(self, g: int, m: int) -> np.ndarray:
        p = np.arange(72, dtype=np.uint8)
        base = self.elements[g]
        for _ in range(m):
            p = base[p]
        return p

    def element_order(self, g: int) -> int:
        return lcm(*_cycle_type(self.elements[g].tolist()))

    def matrix(self, g: int) -> np.ndarray:
        """The 7x7 integer matrix of ``g`` acting on column vectors."""
        if g not in self._mats:
            self._mats[g] = _lattice_matrix(self, self.elements[g])
        return self._mats[g]

    def column_of(self, g: int) -> int:
        return self.matching[int(self.class_of[g])]

    def column_reps(self) -> dict[int, int]:
        """Table column -> representative element index."""
        return {col: self.class_reps[c] for c, col in self.matching.items()}

    def line_permutation(self, g: int) -> list[int]:
        M = self.matrix(g)
        idx = {l: i for i, l in enumerate(self.lines)}
        return [idx[tuple(int(x) for x in M @ np.array(l))] for l in self.lines]


def _basis_inverse(roots: Sequence[Vec], lat: Lattice) -> tuple[list[int], np.ndarray]:
    # rational basis of Q^7: the simple roots together with K_S
    cols = [roots.index(s) for s in SIMPLE_ROOTS]
    B = np.array([roots[c] for c in cols] + [lat.canonical], dtype=np.int64).T
    return cols, B


def _lattice_matrix(W: WeylGroup, perm: np.ndarray) -> np.ndarray:
    cols, B = _basis_inverse(W.roots, W.lattice)
    img = np.array([W.roots[perm[c]] for c in cols] + [W.lattice.canonical], dtype=np.int64).T
    # M B = img; B has determinant +-3 so solve exactly with Fractions
    Bf = [[Fraction(int(x)) for x in row] for row in B.tolist()]
    inv = _inverse(Bf)
    M = [[sum(Fraction(int(img[i][k])) * inv[k][j] for k in range(7)) for j in range(7)] for i in range(7)]
    if any(x.denominator != 1 for row in M for x in row):
        raise InconsistentMatching("non-integral lattice matrix")
    Mi = np.array([[int(x) for x in row] for row in M], dtype=np.int64)
    for i, r in enumerate(W.roots):
        if tuple(int(x) for x in Mi @ np.array(r)) != W.roots[perm[i]]:
            raise InconsistentMatching("lattice matrix disagrees with root permutation")
    return Mi


def _inverse(A: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(A)
    M = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for c in range(n):
        p = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def generate_weyl(roots: Sequence[Vec] | None = None, lat: Lattice | None = None,
                  expected_order: int | None = None) -> WeylGroup:
    """Breadth-first closure of the six simple reflections."""
    lat = lat or build_lattice()
    roots = list(roots) if roots is not None else enumerate_roots(lat)
    gens = np.stack([reflection(lat, s, roots) for s in SIMPLE_ROOTS])
    ident = np.arange(72, dtype=np.uint8)
    index = {ident.tobytes(): 0}
    elems = [ident]
    frontier = ident[None, :]
    while len(frontier):
        fresh = []
        for s in gens:
            prods = s[frontier]  # s o g for each g in the frontier
            for row in prods:
                key = row.tobytes()
                if key not in index:
                    index[key] = len(elems)
                    elems.append(row)
                    fresh.append(row)
        frontier = np.array(fresh, dtype=np.uint8).reshape(-1, 72)
    elements = np.stack(elems)
    if expected_order is not None and len(elements) != expected_order:
        raise OrderMismatch(f"closure has {len(elements)} elements, table says {expected_order}")
    return WeylGroup(lat, roots, enumerate_lines(lat), gens, elements, index)


def conjugacy_classes(W: WeylGroup) -> WeylGroup:
    """Orbits of conjugation by the generators; fills the class fields of ``W``."""
    n = len(W)
    src, dst = [], []
    for s in W.generators:
        conj = s[W.elements[:, s]]  # s g s, generators are involutions
        for i, row in enumerate(conj):
            src.append(i)
            dst.append(W.index[row.tobytes()])
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
    _, labels = connected_components(graph, directed=False)
    # relabel by first occurrence so class ids follow BFS order
    first: dict[int, int] = {}
    for lab in labels.tolist():
        first.setdefault(lab, len(first))
    class_of = np.array([first[l] for l in labels.tolist()], dtype=np.int64)
    reps, sizes = [], []
    for c in range(len(first)):
        members = np.flatnonzero(class_of == c)
        reps.append(int(members[0]))
        sizes.append(len(members))
    W.class_of = class_of
    W.class_reps = reps
    W.class_sizes = sizes
    W.class_orders = [W.element_order(g) for g in reps]
    W.class_traces = [int(np.trace(W.matrix(g))) - 1 for g in reps]
    return W


def _power_image(W: WeylGroup, c: int, p: int) -> int:
    g = W.class_reps[c]
    return int(W.class_of[W.lookup(W.power(g, p))])


def match_classes(W: WeylGroup, table: CharacterTable) -> dict[int, int]:
    """Match computed classes to table columns by order, size, chi_3 and power maps."""
    k = len(W.class_reps)
    if k != table.n:
        raise InconsistentMatching(f"{k} computed classes vs {table.n} columns")
    chi3 = table.values[2]
    cand = []
    for c in range(k):
        fp = (W.class_orders[c], W.class_sizes[c], W.class_traces[c])
        cand.append({col for col in range(1, table.n + 1)
                     if (table.orders[col - 1], table.class_sizes[col - 1], chi3[col - 1]) == fp})
    powers = {p: [_power_image(W, c, p) for c in range(k)] for p in table.power_maps}
    changed = True
    while changed:
        changed = False
        for c in range(k):
            keep = set()
            for col in cand[c]:
                if all(table.power_maps[p][col - 1] in cand[powers[p][c]] for p in powers):
                    keep.add(col)
            if keep != cand[c]:
                cand[c] = keep
                changed = True
        # columns claimed by a settled class are unavailable to the others
        settled = {next(iter(s)) for s in cand if len(s) == 1}
        for c in range(k):
            if len(cand[c]) > 1 and cand[c] & settled:
                cand[c] -= settled
                changed = True
    if any(not s for s in cand):
        raise InconsistentMatching("some class has no admissible column")
    if any(len(s) > 1 for s in cand):
        raise AmbiguousMatching(str([sorted(s) for s in cand if len(s) > 1]))
    matching = {c: next(iter(s)) for c, s in enumerate(cand)}
    if len(set(matching.values())) != k:
        raise InconsistentMatching("matching is not a bijection")
    W.matching = matching
    return matching


_W: WeylGroup | None = None


CACHE_ENV = "CUBICREL_CACHE_DIR"


def _root_hash(roots: Sequence[Vec]) -> str:
    data = repr([tuple(map(str, r)) for r in roots]) + repr(SIMPLE_ROOTS)
    return hashlib.sha1(data.encode()).hexdigest()


def _cached_weyl(expected_order: int) -> WeylGroup:
    """Generate W(E6), reusing a binary element table when ``CUBICREL_CACHE_DIR`` is set."""
    cache = os.environ.get(CACHE_ENV)
    if not cache:
        return generate_weyl(expected_order=expected_order)
    lat = build_lattice()
    roots = enumerate_roots(lat)
    path = os.path.join(cache, f"weyl-e6-{_root_hash(roots)}.npy")
    if os.path.exists(path):
        elements = np.load(path)
        if elements.shape == (expected_order, 72) and elements.dtype == np.uint8:
            gens = np.stack([reflection(lat, s, roots) for s in SIMPLE_ROOTS])
            index = {row.tobytes(): i for i, row in enumerate(elements)}
            if len(index) == expected_order and all(g.tobytes() in index for g in gens):
                log.info("W(E6) loaded from %s", path)
                return WeylGroup(lat, list(roots), enumerate_lines(lat), gens, elements, index)
        log.warning("ignoring malformed cache file %s", path)
    W = generate_weyl(roots, lat, expected_order)
    os.makedirs(cache, exist_ok=True)
    tmp = path + f".{os.getpid()}.tmp.npy"
    np.save(tmp, W.elements)
    os.replace(tmp, path)
    return W


def weyl_group() -> WeylGroup:
    """The generated, class-partitioned and matched W(E6); built once per process."""
    global _W
    if _W is None:
        table = e6_table()
        W = _cached_weyl(table.group_order)
        conjugacy_classes(W)
        match_classes(W, table)
        log.info("W(E6): %d elements, %d classes", len(W), len(W.class_reps))
        _W = W
    return _W


def permutation_character(W: WeylGroup, action: Callable[[int], Sequence[int]],
                          table: CharacterTable | None = None) -> ClassFunction:
    """Fixed-point counts of ``action(g)`` on the class representatives, per table column."""
    table = table or e6_table()
    vals = [Fraction(0)] * table.n
    for col, g in W.column_reps().items():
        perm = action(g)
        vals[col - 1] = Fraction(sum(1 for i, x in enumerate(perm) if i == x))
    chi = ClassFunction(table.name, tuple(vals))
    _check_genuine(chi, table)
    return chi


def _check_genuine(chi: ClassFunction, table: CharacterTable) -> None:
    for i in range(1, table.n + 1):
        m = sum(Fraction(table.class_sizes[c]) * table.values[i - 1][c] * chi.values[c]
                for c in range(table.n)) / table.group_order
        if m.denominator != 1 or m < 0:
            raise NonIntegralDecomposition(f"multiplicity of chi_{i} is {m}")


def roots_action(W: WeylGroup) -> Callable[[int], Sequence[int]]:
    return lambda g: W.elements[g].tolist()


def lines_action(W: WeylGroup) -> Callable[[int], Sequence[int]]:
    return W.line_permutation


def lattice_character(W: WeylGroup, table: CharacterTable | None = None) -> ClassFunction:
    table = table or e6_table()
    vals = [Fraction(0)] * table.n
    for col, g in W.column_reps().items():
        vals[col - 1] = Fraction(int(np.trace(W.matrix(g))))
    chi = ClassFunction(table.name, tuple(vals))
    _check_genuine(chi, table)
    return chi


def export_roots(W: WeylGroup) -> list[list[int]]:
    return [list(r) for r in W.roots]


def export_lines(W: WeylGroup) -> list[list[int]]:
    return [list(l) for l in W.lines]


def export_classes(W: WeylGroup) -> list[dict]:
    out = []
    for c, col in sorted(W.matching.items(), key=lambda kv: kv[1]):
        g = W.class_reps[c]
        out.append({
            "column": col,
            "order": W.class_orders[c],
            "size": W.class_sizes[c],
            "reflection_trace": W.class_traces[c],
            "representative": cycle_notation(W.elements[g].tolist()),
        })
    return out
