"""Exact matrix computations behind the invariants.

Four layers, all exact:

* Smith normal form over Z (``snf_int``), with tracked transforms.
* Homogeneous linear solving over finite(ly generated) abelian groups
  (``solve_abelian``): lift to Z with a congruence column per cyclic
  order of the targets, kernel + lattice quotient, then SNF.
* Determinants and elementary-ideal gcds over Z[A^{\\pm 1}] (not a PID:
  only minor gcds are computed there).
* Invariant factors over Q[A^{\\pm 1}] (a PID: genuine diagonalization
  by Euclidean reduction on exponent span).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import _kernel
from .rings import (
    LaurentPoly,
    format_poly,
    laurent_gcd,
    laurent_normalize,
    parse_poly,
)

IntMatrix = list[list[int]]  # rectangular, exact entries


# ---------------------------------------------------------------------------
# finitely generated abelian groups


@dataclass(frozen=True)
class FiniteAbGroup:
    """Isomorphism type: invariant factors (each >= 2, each dividing the
    next) plus a free rank.  The trivial group is ``FiniteAbGroup()``."""

    invariant_factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        fs = tuple(int(f) for f in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fs)
        for f in fs:
            if f < 2:
                raise ValueError(f"invariant factor {f} < 2")
        for a, b in zip(fs, fs[1:]):
            if b % a != 0:
                raise ValueError(f"invariant factors violate divisibility: {fs}")
        if self.free_rank < 0:
            raise ValueError("negative free rank")

    @classmethod
    def from_orders(cls, orders) -> "FiniteAbGroup":
        """Canonicalize arbitrary generator orders (0 = infinite order)."""
        orders = list(orders)
        free = sum(1 for n in orders if n == 0)
        finite = [n for n in orders if n != 0]
        for n in finite:
            if n < 0:
                raise ValueError("generator orders must be >= 0")
        if not finite:
            return cls((), free)
        diag = [[finite[i] if i == j else 0 for j in range(len(finite))]
                for i in range(len(finite))]
        factors = tuple(f for f in snf_int(diag) if f > 1)
        return cls(factors, free)

    @property
    def gen_orders(self) -> tuple[int, ...]:
        return self.invariant_factors + (0,) * self.free_rank

    @property
    def ngens(self) -> int:
        return len(self.invariant_factors) + self.free_rank

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for f in self.invariant_factors:
            n *= f
        return n

    def is_trivial(self) -> bool:
        return not self.invariant_factors and not self.free_rank

    def elements(self):
        """Iterate all elements (finite groups only), as coordinate tuples."""
        if self.free_rank:
            raise ValueError("cannot enumerate an infinite group")
        from itertools import product

        return product(*(range(f) for f in self.invariant_factors))

    def reduce(self, vec) -> tuple[int, ...]:
        """Reduce integer coordinates modulo the generator orders."""
        orders = self.gen_orders
        if len(vec) != len(orders):
            raise ValueError("coordinate length mismatch")
        return tuple(v % d if d else v for v, d in zip(vec, orders))

    def __str__(self):
        parts = [f"Z/{f}" for f in self.invariant_factors]
        parts.extend(["Z"] * self.free_rank)
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Smith normal form over Z


def _identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


class _SNF:
    """Row/column reduction with tracked transforms: U @ A @ V == D."""

    def __init__(self, mat: IntMatrix):
        self.m = len(mat)
        self.n = len(mat[0]) if mat else 0
        self.d = [list(row) for row in mat]
        self.u = _identity(self.m)
        self.uinv = _identity(self.m)
        self.v = _identity(self.n)

    def _row_add(self, i, k, q):
        # row i += q * row k;  Uinv: col k -= q * col i
        di, dk = self.d[i], self.d[k]
        for j in range(self.n):
            di[j] += q * dk[j]
        ui, uk = self.u[i], self.u[k]
        for j in range(self.m):
            ui[j] += q * uk[j]
        for r in range(self.m):
            self.uinv[r][k] -= q * self.uinv[r][i]

    def _col_add(self, j, k, q):
        # col j += q * col k
        for i in range(self.m):
            self.d[i][j] += q * self.d[i][k]
        for i in range(self.n):
            self.v[i][j] += q * self.v[i][k]

    def _row_swap(self, i, k):
        self.d[i], self.d[k] = self.d[k], self.d[i]
        self.u[i], self.u[k] = self.u[k], self.u[i]
        for r in range(self.m):
            self.uinv[r][i], self.uinv[r][k] = self.uinv[r][k], self.uinv[r][i]

    def _col_swap(self, j, k):
        for i in range(self.m):
            self.d[i][j], self.d[i][k] = self.d[i][k], self.d[i][j]
        for i in range(self.n):
            self.v[i][j], self.v[i][k] = self.v[i][k], self.v[i][j]

    def _negate_row(self, i):
        self.d[i] = [-x for x in self.d[i]]
        self.u[i] = [-x for x in self.u[i]]
        for r in range(self.m):
            self.uinv[r][i] = -self.uinv[r][i]

    def run(self):
        d = self.d
        t = 0
        while t < min(self.m, self.n):
            # pivot: minimal |value| among nonzero entries of the submatrix
            pivot = None
            best = None
            for i in range(t, self.m):
                for j in range(t, self.n):
                    v = d[i][j]
                    if v and (best is None or abs(v) < best):
                        best = abs(v)
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot[0] != t:
                self._row_swap(t, pivot[0])
            if pivot[1] != t:
                self._col_swap(t, pivot[1])
            dirty = False
            for i in range(t + 1, self.m):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    if q:
                        self._row_add(i, t, -q)
                    if d[i][t]:
                        dirty = True
            for j in range(t + 1, self.n):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    if q:
                        self._col_add(j, t, -q)
                    if d[t][j]:
                        dirty = True
            if dirty:
                continue
            # divisibility: the pivot must divide the rest of the submatrix
            fixed = True
            for i in range(t + 1, self.m):
                if any(d[i][j] % d[t][t] for j in range(t + 1, self.n)):
                    self._row_add(t, i, 1)
                    fixed = False
                    break
            if not fixed:
                continue
            if d[t][t] < 0:
                self._negate_row(t)
            t += 1
        diag = [d[i][i] for i in range(min(self.m, self.n))]
        return diag


def snf_int(mat: IntMatrix) -> tuple[int, ...]:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix."""
    if not mat or not mat[0]:
        return ()
    ncols = len(mat[0])
    if any(len(row) != ncols for row in mat):
        raise ValueError("matrix is not rectangular")
    diag = _SNF(mat).run()
    return tuple(d for d in diag if d != 0)


def _kernel_basis(mat: IntMatrix, ncols: int) -> list[list[int]]:
    """Z-basis of the integer kernel, as a list of column vectors."""
    if not mat:
        return [[1 if i == j else 0 for i in range(ncols)]
                for j in range(ncols)]
    s = _SNF(mat)
    diag = s.run()
    basis = []
    for j in range(ncols):
        if j >= len(diag) or diag[j] == 0:
            basis.append([s.v[i][j] for i in range(ncols)])
    return basis


def _column_lattice_basis(cols: list[list[int]], dim: int) -> list[list[int]]:
    """Basis of the lattice spanned by the given column vectors."""
    if not cols:
        return []
    mat = [[col[i] for col in cols] for i in range(dim)]
    s = _SNF(mat)
    diag = s.run()
    basis = []
    for i, d in enumerate(diag):
        if d != 0:
            basis.append([d * s.uinv[r][i] for r in range(dim)])
    return basis


def _solve_in_lattice(basis: list[list[int]], v: list[int]) -> list[int]:
    """Coordinates of v in the given lattice basis (exact, or ValueError)."""
    dim = len(v)
    r = len(basis)
    if r == 0:
        if any(v):
            raise ValueError("vector not in lattice")
        return []
    mat = [[basis[j][i] for j in range(r)] for i in range(dim)]
    s = _SNF(mat)
    diag = s.run()
    uv = [sum(s.u[i][k] * v[k] for k in range(dim)) for i in range(dim)]
    y = [0] * r
    for i in range(dim):
        if i < len(diag) and diag[i] != 0:
            q, rem = divmod(uv[i], diag[i])
            if rem:
                raise ValueError("vector not in lattice")
            y[i] = q
        elif uv[i]:
            raise ValueError("vector not in lattice")
    return [sum(s.v[i][k] * y[k] for k in range(r)) for i in range(r)]


@dataclass(frozen=True)
class AbEquation:
    """One homogeneous equation valued in ``target``.

    ``blocks[j]`` is the integer matrix applied to unknown j (rows =
    target generators, cols = generators of unknown j); missing blocks
    are zero.
    """

    target: FiniteAbGroup
    blocks: dict = field(default_factory=dict)


def solve_abelian(equations, unknowns) -> FiniteAbGroup:
    """Isomorphism type of the solution group of a homogeneous system."""
    group, _ = solve_abelian_with_witnesses(equations, unknowns)
    return group


def solve_abelian_with_witnesses(equations, unknowns):
    """Like ``solve_abelian`` but also returns generating solutions.

    Each witness is a tuple of per-unknown coordinate tuples; the
    witnesses generate the full solution subgroup.
    """
    unknowns = list(unknowns)
    offsets = []
    col_orders: list[int] = []
    for g in unknowns:
        offsets.append(len(col_orders))
        col_orders.extend(g.gen_orders)
    n = len(col_orders)

    rows: list[list[int]] = []
    moduli: list[int] = []
    for eq in equations:
        tgt = eq.target
        t_orders = tgt.gen_orders
        block_rows = [[0] * n for _ in t_orders]
        for j, mat in eq.blocks.items():
            if not 0 <= j < len(unknowns):
                raise ValueError(f"equation references unknown {j}")
            g = unknowns[j]
            mat = [list(r) for r in mat]
            if len(mat) != tgt.ngens or any(len(r) != g.ngens for r in mat):
                raise ValueError(
                    f"block for unknown {j} has wrong shape: expected "
                    f"{tgt.ngens}x{g.ngens}")
            for i in range(tgt.ngens):
                for k in range(g.ngens):
                    block_rows[i][offsets[j] + k] += mat[i][k]
        rows.extend(block_rows)
        moduli.extend(t_orders)

    # the coefficient maps must be well-defined homomorphisms
    for i, row in enumerate(rows):
        m = moduli[i]
        for j, a in enumerate(row):
            d = col_orders[j]
            if d == 0:
                continue
            bad = (a * d) % m != 0 if m else a * d != 0
            if bad:
                raise ValueError(
                    "coefficients do not define a homomorphism "
                    f"(row {i}, column {j})")

    # lift to Z: one congruence column per cyclic order among the targets
    lifted = [list(row) for row in rows]
    for i, m in enumerate(moduli):
        if m:
            col = [0] * len(rows)
            col[i] = -m
            for r, row in enumerate(lifted):
                row.append(col[r])
    kb = _kernel_basis(lifted, n + sum(1 for m in moduli if m))
    proj = [vec[:n] for vec in kb]
    basis = _column_lattice_basis(proj, n)

    relations = []
    for j, d in enumerate(col_orders):
        if d:
            v = [0] * n
            v[j] = d
            relations.append(v)

    rank = len(basis)
    if relations:
        cmat = [[0] * len(relations) for _ in range(rank)]
        for c, v in enumerate(relations):
            coords = _solve_in_lattice(basis, v)
            for r in range(rank):
                cmat[r][c] = coords[r]
        factors = snf_int(cmat) if rank else ()
    else:
        factors = ()
    group = FiniteAbGroup(
        tuple(f for f in factors if f > 1),
        rank - len(factors),
    )

    witnesses = []
    for vec in basis:
        parts = []
        for g, off in zip(unknowns, offsets):
            parts.append(g.reduce(vec[off:off + g.ngens]))
        witnesses.append(tuple(parts))
    return group, witnesses


# ---------------------------------------------------------------------------
# matrices over Z[A^{\pm 1}]


@dataclass(frozen=True)
class LaurentMatrix:
    """Rectangular matrix over Z[A^{\\pm 1}] (a presentation matrix:
    columns index generators, rows index relations)."""

    rows: int
    cols: int
    entries: tuple = ()

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "LaurentMatrix":
        rows = [tuple(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("matrix is not rectangular")
            if cols is not None and cols != width:
                raise ValueError("explicit cols disagrees with row width")
            cols = width
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        return cls(len(rows), cols, tuple(rows))

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.entries[i][j]

    def to_json(self) -> list:
        return [[format_poly(p) for p in row] for row in self.entries]

    @classmethod
    def from_json(cls, data, cols: int | None = None) -> "LaurentMatrix":
        return cls.from_rows(
            [[parse_poly(s) for s in row] for row in data], cols=cols)


def minor(m: LaurentMatrix, row_set, col_set) -> LaurentPoly:
    """Exact determinant of the selected square submatrix."""
    rows = list(row_set)
    cols = list(col_set)
    if len(rows) != len(cols):
        raise ValueError("row and column sets must have the same size")
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise ValueError("repeated indices in minor selection")
    for i in rows:
        if not 0 <= i < m.rows:
            raise ValueError(f"row index {i} out of bounds")
    for j in cols:
        if not 0 <= j < m.cols:
            raise ValueError(f"column index {j} out of bounds")
    k = len(rows)
    dense = [m.entries[i][j].to_dense() for i in rows for j in cols]
    low, coeffs = _kernel.bareiss_det(k, dense)
    return LaurentPoly.from_dense(low, coeffs)


def elementary_ideal_gcd(m: LaurentMatrix, k: int) -> LaurentPoly:
    """gcd of all (cols-k) x (cols-k) minors, unit-normalized.

    Size <= 0 gives 1 (the whole ring); an empty minor set gives 0.
    Once the running gcd is a unit it can never change, so enumeration
    stops early.
    """
    if k < 0:
        raise ValueError("corank must be >= 0")
    size = m.cols - k
    if size <= 0:
        return LaurentPoly.one()
    if size > m.rows:
        return LaurentPoly.zero()
    g = LaurentPoly.zero()
    one = LaurentPoly.one()
    for rs in combinations(range(m.rows), size):
        for cs in combinations(range(m.cols), size):
            g = laurent_gcd(g, minor(m, rs, cs))
            if g == one:
                return g
    return laurent_normalize(g)


# ---------------------------------------------------------------------------
# invariant factors over Q[A^{\pm 1}]

# rational Laurent polynomials as plain dicts {exp: Fraction}


def _q(p: LaurentPoly) -> dict:
    return {e: Fraction(v) for e, v in p.coefficients.items()}


def _q_is_zero(f: dict) -> bool:
    return not f


def _q_span(f: dict) -> int:
    return max(f) - min(f)


def _q_sub(f: dict, g: dict) -> dict:
    out = dict(f)
    for e, v in g.items():
        nv = out.get(e, Fraction(0)) - v
        if nv:
            out[e] = nv
        else:
            out.pop(e, None)
    return out


def _q_mul(f: dict, g: dict) -> dict:
    out: dict = {}
    for e1, v1 in f.items():
        for e2, v2 in g.items():
            e = e1 + e2
            nv = out.get(e, Fraction(0)) + v1 * v2
            if nv:
                out[e] = nv
            else:
                out.pop(e, None)
    return out


def _q_divmod(f: dict, g: dict) -> tuple[dict, dict]:
    """f = q*g + r with span(r) < span(g), Euclidean in Q[A^{\\pm 1}]."""
    if not g:
        raise ZeroDivisionError
    if not f:
        return {}, {}
    lg = min(g)
    dg = max(g) - lg
    lead = g[max(g)]
    rem = dict(f)
    quot: dict = {}
    while rem and (max(rem) - min(rem)) >= dg:
        # cancel the top term of rem
        e = max(rem) - max(g)
        c = rem[max(rem)] / lead
        quot[e] = quot.get(e, Fraction(0)) + c
        for eg, vg in g.items():
            e2 = eg + e
            nv = rem.get(e2, Fraction(0)) - c * vg
            if nv:
                rem[e2] = nv
            else:
                rem.pop(e2, None)
    quot = {e: v for e, v in quot.items() if v}
    return quot, rem


def _q_gcd(f: dict, g: dict) -> dict:
    while g:
        f, g = g, _q_divmod(f, g)[1]
    return f


def _q_divides(f: dict, g: dict) -> bool:
    if not f:
        return not g
    return not _q_divmod(g, f)[1]


def _q_monic(f: dict) -> dict:
    if not f:
        return {}
    lo = min(f)
    lead = f[max(f)]
    return {e - lo: v / lead for e, v in f.items()}


def invariant_factors_rational(m: LaurentMatrix):
    """Diagonal form d1 | d2 | ... over Q[A^{\\pm 1}] plus the free rank.

    Factors come back monic with zero lowest exponent (units appear as
    1); the free rank is cols - rank.
    """
    d = [[_q(m.entries[i][j]) for j in range(m.cols)] for i in range(m.rows)]
    nrows, ncols = m.rows, m.cols
    t = 0
    while t < min(nrows, ncols):
        pivot = None
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if d[i][j]:
                    s = _q_span(d[i][j])
                    if best is None or s < best:
                        best = s
                        pivot = (i, j)
        if pivot is None:
            break
        i0, j0 = pivot
        d[t], d[i0] = d[i0], d[t]
        for row in d:
            row[t], row[j0] = row[j0], row[t]
        dirty = False
        for i in range(t + 1, nrows):
            if d[i][t]:
                q, r = _q_divmod(d[i][t], d[t][t])
                if q:
                    for j in range(t, ncols):
                        d[i][j] = _q_sub(d[i][j], _q_mul(q, d[t][j]))
                if d[i][t]:
                    dirty = True
        for j in range(t + 1, ncols):
            if d[t][j]:
                q, r = _q_divmod(d[t][j], d[t][t])
                if q:
                    for i in range(t, nrows):
                        d[i][j] = _q_sub(d[i][j], _q_mul(q, d[i][t]))
                if d[t][j]:
                    dirty = True
        if dirty:
            continue
        t += 1
    diag = [d[i][i] for i in range(min(nrows, ncols)) if d[i][i]]
    # enforce the divisibility chain (PID: replace pairs by gcd, lcm)
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            if not _q_divides(diag[i], diag[i + 1]):
                g = _q_gcd(diag[i], diag[i + 1])
                l = _q_divmod(_q_mul(diag[i], diag[i + 1]), g)[0]
                diag[i], diag[i + 1] = g, l
                changed = True
    factors = tuple(LaurentPoly(_q_monic(f)) for f in diag)
    return factors, m.cols - len(factors)
