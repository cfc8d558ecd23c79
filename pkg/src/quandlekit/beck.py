"""Modules over finite quandles and their derivation groups.

A module over a quandle X assigns each element x a finite abelian group
M(x) and each pair (x, y) two homomorphisms

    eps(x,y): M(x) -> M(x>y)      alpha(x,y): M(y) -> M(x>y),

with alpha invertible.  Expanding self-distributivity of the semidirect
operation  m > n = eps(x,y) m + alpha(x,y) n  gives the coefficient
identities checked here:

    A1  alpha(x, y>z) alpha(y,z) == alpha(x>y, x>z) alpha(x,z)
    A2  alpha(x, y>z) eps(y,z)   == eps(x>y, x>z) alpha(x,y)
    A3  eps(x, y>z) == eps(x>y, x>z) eps(x,y) + alpha(x>y, x>z) eps(x,z)
    A4  eps(x,x) == id - alpha(x,x)

A1-A3 plus invertibility make the semidirect union a rack; A4 makes it
a quandle.  A section nu of a module along a coloring solves

    nu(z) = eps(c(x), c(y)) nu(x) + alpha(c(x), c(y)) nu(y)

at every crossing; the solution group is computed by ``solve_abelian``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .diagram import Diagram
from .linalg import AbEquation, FiniteAbGroup, snf_int, solve_abelian_with_witnesses
from .quandle import Coloring, FiniteQuandle, colorings


Matrix = tuple  # tuple of row-tuples of ints


def _mat(rows) -> Matrix:
    return tuple(tuple(int(v) for v in r) for r in rows)


def _mat_shape_ok(m: Matrix, nrows: int, ncols: int) -> bool:
    return len(m) == nrows and all(len(r) == ncols for r in m)


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("matrix shape mismatch in composition")
    inner = len(b)
    width = len(b[0]) if b else 0
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(inner))
              for j in range(width))
        for i in range(len(a)))


def _mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))


def _mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n))
                 for i in range(n))


def _mats_equal_mod(a: Matrix, b: Matrix, target: FiniteAbGroup) -> bool:
    orders = target.gen_orders
    for i, (ra, rb) in enumerate(zip(a, b)):
        d = orders[i]
        for x, y in zip(ra, rb):
            diff = (x - y) % d if d else (x - y)
            if diff:
                return False
    return True


def _is_well_defined(m: Matrix, src: FiniteAbGroup, tgt: FiniteAbGroup) -> bool:
    if not _mat_shape_ok(m, tgt.ngens, src.ngens):
        return False
    for j, dj in enumerate(src.gen_orders):
        for i, ei in enumerate(tgt.gen_orders):
            v = (m[i][j] * dj) % ei if ei else m[i][j] * dj
            if v:
                return False
    return True


def _is_invertible(m: Matrix, src: FiniteAbGroup, tgt: FiniteAbGroup) -> bool:
    """Bijective as a homomorphism of finite groups."""
    if src.order() != tgt.order():
        return False
    # surjective iff the cokernel presented by [m | diag(target orders)]
    # is trivial
    rows = [list(r) for r in m]
    for i, ei in enumerate(tgt.gen_orders):
        col = [0] * tgt.ngens
        col[i] = ei
        for r in range(tgt.ngens):
            rows[r].append(col[r])
    if tgt.ngens == 0:
        return True
    factors = snf_int(rows)
    return len(factors) == tgt.ngens and all(f == 1 for f in factors)


def _apply(m: Matrix, vec, tgt: FiniteAbGroup) -> tuple:
    out = []
    for i, d in enumerate(tgt.gen_orders):
        v = sum(m[i][j] * vec[j] for j in range(len(vec)))
        out.append(v % d if d else v)
    return tuple(out)


@dataclass(frozen=True)
class QuandleModule:
    """Module data over a finite quandle: groups plus eps/alpha tables.

    ``eps[x][y]`` and ``alpha[x][y]`` are integer matrices for the maps
    M(x) -> M(x>y) and M(y) -> M(x>y).  Construct via ``build`` (which
    validates structure), and run ``check_module`` for the axioms.
    """

    base: FiniteQuandle
    groups: tuple
    eps: tuple
    alpha: tuple

    @classmethod
    def build(cls, base: FiniteQuandle, groups, eps, alpha) -> "QuandleModule":
        n = base.order
        groups = tuple(groups)
        if len(groups) != n:
            raise ValueError("one group per quandle element required")
        eps = tuple(tuple(_mat(eps[x][y]) for y in range(n)) for x in range(n))
        alpha = tuple(tuple(_mat(alpha[x][y]) for y in range(n))
                      for x in range(n))
        mod = cls(base, groups, eps, alpha)
        for x in range(n):
            for y in range(n):
                tgt = groups[base.table[x][y]]
                if not _mat_shape_ok(eps[x][y], tgt.ngens, groups[x].ngens):
                    raise ValueError(f"eps({x},{y}) has the wrong shape")
                if not _mat_shape_ok(alpha[x][y], tgt.ngens, groups[y].ngens):
                    raise ValueError(f"alpha({x},{y}) has the wrong shape")
        return mod

    def group(self, x: int) -> FiniteAbGroup:
        return self.groups[x]

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "groups": [list(g.invariant_factors) for g in self.groups],
            "eps": [[[list(r) for r in m] for m in row] for row in self.eps],
            "alpha": [[[list(r) for r in m] for m in row]
                      for row in self.alpha],
        }

    @classmethod
    def from_json(cls, data, base: FiniteQuandle | None = None) -> "QuandleModule":
        if base is None:
            base = FiniteQuandle.from_json(data["base"])
        groups = [FiniteAbGroup.from_orders(g) for g in data["groups"]]
        return cls.build(base, groups, data["eps"], data["alpha"])


@dataclass(frozen=True)
class ModuleReport:
    passes: bool
    violations: tuple  # ("A1"|"A2"|"A3"|"A4"|"invertible"|"well-defined", witness)


def check_module(m: QuandleModule) -> ModuleReport:
    """Check A1-A4 and invertibility exhaustively over all triples."""
    q = m.base
    n = q.order
    t = q.table
    viol = []
    for x in range(n):
        for y in range(n):
            tgt = m.groups[t[x][y]]
            if not _is_well_defined(m.eps[x][y], m.groups[x], tgt):
                viol.append(("well-defined", ("eps", x, y)))
            if not _is_well_defined(m.alpha[x][y], m.groups[y], tgt):
                viol.append(("well-defined", ("alpha", x, y)))
    if viol:
        return ModuleReport(False, tuple(viol))
    for x in range(n):
        for y in range(n):
            if not _is_invertible(m.alpha[x][y], m.groups[y],
                                  m.groups[t[x][y]]):
                viol.append(("invertible", ("alpha", x, y)))
    for x in range(n):
        for y in range(n):
            for z in range(n):
                tgt = m.groups[t[x][t[y][z]]]
                a1l = _mat_mul(m.alpha[x][t[y][z]], m.alpha[y][z])
                a1r = _mat_mul(m.alpha[t[x][y]][t[x][z]], m.alpha[x][z])
                if not _mats_equal_mod(a1l, a1r, tgt):
                    viol.append(("A1", (x, y, z)))
                a2l = _mat_mul(m.alpha[x][t[y][z]], m.eps[y][z])
                a2r = _mat_mul(m.eps[t[x][y]][t[x][z]], m.alpha[x][y])
                if not _mats_equal_mod(a2l, a2r, tgt):
                    viol.append(("A2", (x, y, z)))
                a3l = m.eps[x][t[y][z]]
                a3r = _mat_add(
                    _mat_mul(m.eps[t[x][y]][t[x][z]], m.eps[x][y]),
                    _mat_mul(m.alpha[t[x][y]][t[x][z]], m.eps[x][z]))
                if not _mats_equal_mod(a3l, a3r, tgt):
                    viol.append(("A3", (x, y, z)))
    for x in range(n):
        lhs = m.eps[x][x]
        rhs = _mat_sub(_identity(m.groups[x].ngens), m.alpha[x][x])
        if not _mats_equal_mod(lhs, rhs, m.groups[x]):
            viol.append(("A4", (x,)))
    return ModuleReport(not viol, tuple(viol))


def constant_module(q: FiniteQuandle, n: int, t: int) -> QuandleModule:
    """All fibers Z/n with alpha = *t and eps = *(1-t); needs gcd(t,n)=1.

    t = 1 gives the trivial module (alpha = id, eps = 0).
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    t %= n if n > 1 else 1
    if n > 1 and gcd(t, n) != 1:
        raise ValueError(f"t = {t} is not invertible mod {n}")
    g = FiniteAbGroup.from_orders([n] if n > 1 else [])
    k = g.ngens
    alpha = _mat([[t % n]]) if k else _mat([])
    eps = _mat([[(1 - t) % n]]) if k else _mat([])
    order = q.order
    return QuandleModule.build(
        q,
        [g] * order,
        [[eps for _ in range(order)] for _ in range(order)],
        [[alpha for _ in range(order)] for _ in range(order)],
    )


def extension(m: QuandleModule) -> FiniteQuandle:
    """Semidirect union of the fibers: (x,a) > (y,b) over x > y.

    Elements are ordered fiber by fiber; the projection to the base is a
    quandle homomorphism by construction.
    """
    report = check_module(m)
    if not report.passes:
        raise ValueError(f"module fails axioms: {report.violations[0]}")
    q = m.base
    elems = []
    index = {}
    for x in range(q.order):
        for a in m.groups[x].elements():
            index[(x, a)] = len(elems)
            elems.append((x, a))
    size = len(elems)
    table = [[0] * size for _ in range(size)]
    for i, (x, a) in enumerate(elems):
        for j, (y, b) in enumerate(elems):
            xy = q.table[x][y]
            tgt = m.groups[xy]
            val = tuple(
                (u + v) % d if d else (u + v)
                for u, v, d in zip(
                    _apply(m.eps[x][y], a, tgt),
                    _apply(m.alpha[x][y], b, tgt),
                    tgt.gen_orders,
                ))
            table[i][j] = index[(xy, val)]
    return FiniteQuandle(tuple(tuple(r) for r in table))


@dataclass(frozen=True)
class ABPresentation:
    """Symbolic presentation of the module a diagram induces over its own
    knot quandle: arc generators, one relation per crossing triple."""

    generators: tuple
    relations: tuple  # triples (x, y, z)

    def relation_strings(self) -> list[str]:
        return [
            f"eps(x{x},x{y})*x{x} + alpha(x{x},x{y})*x{y} - x{z}"
            for x, y, z in self.relations
        ]


def ab_presentation(d: Diagram) -> ABPresentation:
    """No evaluation happens here: the module itself stays symbolic."""
    return ABPresentation(generators=d.arcs, relations=d.resolved)


@dataclass(frozen=True)
class DerivationGroup:
    """Solution group of the section equations, with generating sections."""

    group: FiniteAbGroup
    witnesses: tuple = ()

    def __str__(self):
        return str(self.group)


def derivations(d: Diagram, c: Coloring, m: QuandleModule) -> DerivationGroup:
    """Sections nu with nu(z) = eps nu(x) + alpha nu(y) at every triple.

    The unknown nu(a) lives in M(c(a)); blocks for coinciding arcs
    accumulate, so kinks and repeated arcs need no special casing.
    """
    q = m.base
    col = c.assignment if isinstance(c, Coloring) else tuple(c)
    if len(col) != d.n_arcs:
        raise ValueError("coloring length disagrees with arc count")
    for x, y, z in d.resolved:
        if q.table[col[x]][col[y]] != col[z]:
            raise ValueError(
                f"invalid coloring: triple ({x},{y},{z}) maps to "
                f"({col[x]},{col[y]},{col[z]})")
    unknowns = [m.groups[col[a]] for a in d.arcs]
    equations = []
    for x, y, z in d.resolved:
        cx, cy = col[x], col[y]
        tgt = m.groups[q.table[cx][cy]]
        k = tgt.ngens
        blocks: dict[int, list] = {}

        def add(arc, mat):
            base = blocks.setdefault(
                arc, [[0] * unknowns[arc].ngens for _ in range(k)])
            for i in range(k):
                for j in range(unknowns[arc].ngens):
                    base[i][j] += mat[i][j]

        add(x, m.eps[cx][cy])
        add(y, m.alpha[cx][cy])
        add(z, [[-v for v in row] for row in _identity(k)])
        equations.append(AbEquation(tgt, blocks))
    group, wits = solve_abelian_with_witnesses(equations, unknowns)
    return DerivationGroup(group, tuple(wits))


def derivation_spectrum(d: Diagram, q: FiniteQuandle, m: QuandleModule):
    """Multiset (canonically sorted tuple) of derivation-group types,
    one entry per coloring of the diagram."""
    if m.base is not q and m.base != q:
        raise ValueError("module base quandle disagrees with the target")
    spectrum = []
    for c in colorings(d, q):
        spectrum.append(derivations(d, c, m).group)
    return tuple(sorted(
        spectrum, key=lambda g: (g.free_rank, g.invariant_factors)))
