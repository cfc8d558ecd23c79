"""Finite racks and quandles as dense operation tables, plus colorings.

Elements are 0-based ints and ``table[x][y]`` is the result of x acting
on y.  Orders stay small, so axiom checks are exhaustive (vectorized
over all triples; a Python rescan produces the first witness when a
check fails).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .diagram import Diagram


@dataclass(frozen=True)
class AxiomReport:
    is_rack: bool
    is_quandle: bool
    is_kei: bool
    violations: tuple

    @property
    def ok(self) -> bool:
        return self.is_rack and self.is_quandle


def check_axioms(table) -> AxiomReport:
    """Exhaustively check the rack/quandle/kei axioms of a table.

    Violations carry a witness: ("row", x), ("selfdist", x, y, z),
    ("idem", x) or ("invol", x, y).
    """
    t = [list(row) for row in table]
    n = len(t)
    if any(len(row) != n for row in t):
        raise ValueError("operation table must be square")
    for x in range(n):
        for y in range(n):
            v = t[x][y]
            if not isinstance(v, (int, np.integer)) or not 0 <= v < n:
                raise ValueError(f"table entry ({x},{y}) = {v!r} out of range")

    violations = []
    arr = np.array(t, dtype=np.int64)
    rows_ok = True
    for x in range(n):
        if sorted(t[x]) != list(range(n)):
            rows_ok = False
            violations.append(("row", x))
    selfdist_ok = True
    if n:
        xs = np.arange(n)
        # left self-distributivity over all triples at once
        lhs = arr[xs[:, None, None], arr[None, :, :]]          # x>(y>z)
        rhs = arr[arr[:, :, None], arr[:, None, :]]            # (x>y)>(x>z)
        if not np.array_equal(lhs, rhs):
            selfdist_ok = False
            bad = np.argwhere(lhs != rhs)
            x, y, z = (int(v) for v in bad[0])
            violations.append(("selfdist", x, y, z))
    is_rack = rows_ok and selfdist_ok
    is_quandle = is_rack
    for x in range(n):
        if t[x][x] != x:
            is_quandle = False
            violations.append(("idem", x))
            break
    is_kei = is_rack and is_quandle
    if is_kei and n:
        invol = arr[np.arange(n)[:, None], arr]                # x>(x>y)
        if not np.array_equal(invol, np.tile(np.arange(n), (n, 1))):
            is_kei = False
            bad = np.argwhere(invol != np.arange(n)[None, :])
            x, y = (int(v) for v in bad[0])
            violations.append(("invol", x, y))
    return AxiomReport(is_rack, is_quandle, is_kei, tuple(violations))


@dataclass(frozen=True)
class FiniteQuandle:
    """Operation table with verified axioms.

    Use ``FiniteQuandle.from_table`` (which checks) rather than the raw
    constructor unless the table is known valid.
    """

    table: tuple

    @classmethod
    def from_table(cls, table) -> "FiniteQuandle":
        report = check_axioms(table)
        if not report.ok:
            raise ValueError(f"not a quandle: {report.violations[0]}")
        return cls(tuple(tuple(int(v) for v in row) for row in table))

    @property
    def order(self) -> int:
        return len(self.table)

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def to_json(self) -> dict:
        return {"n": self.order, "table": [list(r) for r in self.table]}

    @classmethod
    def from_json(cls, data) -> "FiniteQuandle":
        table = data["table"]
        if len(table) != data.get("n", len(table)):
            raise ValueError("quandle JSON: n disagrees with table size")
        return cls.from_table(table)

    def __str__(self):
        return f"FiniteQuandle(order={self.order})"


def trivial_quandle(n: int) -> FiniteQuandle:
    """x > y = y."""
    if n < 1:
        raise ValueError("order must be >= 1")
    return FiniteQuandle(tuple(tuple(range(n)) for _ in range(n)))


def dihedral(n: int) -> FiniteQuandle:
    """x > y = 2x - y mod n; a kei for every n."""
    if n < 1:
        raise ValueError("order must be >= 1")
    return FiniteQuandle(
        tuple(tuple((2 * x - y) % n for y in range(n)) for x in range(n)))


def alexander_quandle(n: int, t: int) -> FiniteQuandle:
    """x > y = (1-t)x + t*y on Z/n; needs gcd(t, n) = 1."""
    if n < 1:
        raise ValueError("order must be >= 1")
    t %= n
    if gcd(t, n) != 1:
        raise ValueError(f"t = {t} is not invertible mod {n}")
    return FiniteQuandle(
        tuple(tuple(((1 - t) * x + t * y) % n for y in range(n))
              for x in range(n)))


def canonical_automorphism(table) -> tuple:
    """The permutation x -> x > x of a rack table."""
    report = check_axioms(table)
    if not report.is_rack:
        raise ValueError(f"not a rack: {report.violations[0]}")
    return tuple(row[x] for x, row in enumerate(table))


def orbits(q: FiniteQuandle) -> list[list[int]]:
    """Orbits of the left-multiplication action (connected components)."""
    n = q.order
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            y = stack.pop()
            comp.append(y)
            for x in range(n):
                z = q.table[x][y]
                if not seen[z]:
                    seen[z] = True
                    stack.append(z)
                w = q.table[x].index(y)  # inverse action
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


@dataclass(frozen=True)
class Coloring:
    """Arc labeling satisfying every crossing relation."""

    assignment: tuple

    def __getitem__(self, arc: int) -> int:
        return self.assignment[arc]


def is_valid_coloring(d: Diagram, q: FiniteQuandle, assignment) -> bool:
    return all(q.table[assignment[x]][assignment[y]] == assignment[z]
               for x, y, z in d.resolved)


def colorings(d: Diagram, q: FiniteQuandle) -> list[Coloring]:
    """All quandle colorings of the diagram, lexicographically sorted.

    Backtracking over arcs, most-constrained first, propagating the two
    determined forms of each triple (x,y -> z and x,z -> y).  The output
    order is canonical, independent of the search order.
    """
    arcs = list(d.arcs)
    n_arcs = len(arcs)
    triples = list(d.resolved)
    degree = [0] * n_arcs
    for x, y, z in triples:
        degree[x] += 1
        degree[y] += 1
        degree[z] += 1
    order = sorted(range(n_arcs), key=lambda a: (-degree[a], a))

    inv_row = [
        {v: y for y, v in enumerate(row)} for row in q.table
    ]  # inv_row[x][z] = the y with x > y = z

    by_arc: dict[int, list] = {a: [] for a in range(n_arcs)}
    for t in triples:
        for a in set(t):
            by_arc[a].append(t)

    results = []
    color = [-1] * n_arcs

    def propagate(queue):
        trail = []
        while queue:
            a = queue.pop()
            for (x, y, z) in by_arc[a]:
                cx, cy, cz = color[x], color[y], color[z]
                if cx >= 0 and cy >= 0:
                    want = q.table[cx][cy]
                    if cz < 0:
                        color[z] = want
                        trail.append(z)
                        queue.append(z)
                    elif cz != want:
                        return trail, False
                elif cx >= 0 and cz >= 0:
                    want = inv_row[cx][cz]
                    if cy < 0:
                        color[y] = want
                        trail.append(y)
                        queue.append(y)
        return trail, True

    def undo(trail):
        for a in trail:
            color[a] = -1

    def search(k):
        while k < n_arcs and color[order[k]] >= 0:
            k += 1
        if k == n_arcs:
            results.append(tuple(color))
            return
        a = order[k]
        for v in range(q.order):
            color[a] = v
            trail, ok = propagate([a])
            if ok:
                search(k + 1)
            undo(trail)
            color[a] = -1

    search(0)
    return [Coloring(t) for t in sorted(results)]
