"""The classical layer over Z[A^{\\pm 1}].

A resolved diagram presents a module with one generator per arc and,
for every crossing triple (x, y, z), the relation

    (1 - A) x + A y - z = 0.

That module is the classical Alexander module plus one extra free
summand; the Alexander polynomial is the corank-1 minor gcd of its
presentation matrix, and the rational invariant factors recover the
torsion decomposition.  The Burau matrices arise from the linearized
braid action on free-quandle generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import BraidWord, Diagram
from .linalg import (
    LaurentMatrix,
    elementary_ideal_gcd,
    invariant_factors_rational,
    minor,
)
from .rings import (
    LaurentPoly,
    ONE,
    ZERO,
    laurent_eval,
    laurent_normalize,
)

_ONE_MINUS_A = ONE - LaurentPoly.A()
_A = LaurentPoly.A()
_MINUS_ONE = LaurentPoly.const(-1)


def presentation_matrix(d: Diagram) -> LaurentMatrix:
    """One row per crossing triple: (1-A) at x, A at y, -1 at z.

    Coefficients sum when a triple repeats an arc (kinks); rows and
    columns follow the diagram's crossing and arc order, so the matrix
    is reproducible bit for bit.
    """
    rows = []
    for x, y, z in d.resolved:
        row = [ZERO] * d.n_arcs
        row[x] = row[x] + _ONE_MINUS_A
        row[y] = row[y] + _A
        row[z] = row[z] + _MINUS_ONE
        rows.append(row)
    return LaurentMatrix.from_rows(rows, cols=d.n_arcs)


def alexander_polynomial(d: Diagram) -> LaurentPoly:
    """Unit-normalized Delta; raises when Delta(1) != +-1.

    Delta(1) = +-1 holds for every knot, so a failure signals a broken
    diagram encoding, not a property of some knot.
    """
    m = presentation_matrix(d)
    delta = laurent_normalize(elementary_ideal_gcd(m, 1))
    at_one = laurent_eval(delta, 1)
    if at_one not in (1, -1):
        raise ValueError(
            f"Delta(1) = {at_one} != +-1: diagram encoding is broken")
    return delta


def knot_determinant(d: Diagram) -> int:
    """|Delta(-1)|; odd for every knot (asserted)."""
    det = abs(laurent_eval(alexander_polynomial(d), -1))
    if det.denominator != 1:
        raise AssertionError("determinant must be an integer")
    det = int(det)
    if det % 2 == 0:
        raise AssertionError(f"knot determinant {det} is even")
    return det


@dataclass(frozen=True)
class ExtendedModule:
    """Decomposition data of the module presented by a diagram."""

    invariant_factors: tuple
    free_rank: int
    e1: LaurentPoly
    e2: LaurentPoly

    @property
    def torsion_factors(self) -> tuple:
        one = LaurentPoly.one()
        return tuple(f for f in self.invariant_factors if f != one)


def extended_module(d: Diagram) -> ExtendedModule:
    """Rational invariant factors and free rank, plus the corank-1 and
    corank-2 minor gcds over Z[A^{\\pm 1}]."""
    m = presentation_matrix(d)
    factors, free_rank = invariant_factors_rational(m)
    e1 = elementary_ideal_gcd(m, 1)
    e2 = elementary_ideal_gcd(m, 2)
    return ExtendedModule(factors, free_rank, e1, e2)


# ---------------------------------------------------------------------------
# Burau matrices


def _burau_block(inverse: bool) -> list[list[LaurentPoly]]:
    # sigma_i sends x_i -> x_i > x_{i+1}, x_{i+1} -> x_i; linearized,
    # x > y = (1-A)x + Ay, so with columns as images the 2x2 block is
    # [[1-A, 1], [A, 0]].  The inverse block solves the same relations.
    if not inverse:
        return [[_ONE_MINUS_A, ONE], [_A, ZERO]]
    a_inv = LaurentPoly.A(-1)
    return [[ZERO, a_inv], [ONE, (LaurentPoly.A() - ONE) * a_inv]]


def _mat_mul(a, b, n):
    return [
        [sum((a[i][k] * b[k][j] for k in range(n)), ZERO) for j in range(n)]
        for i in range(n)
    ]


def burau(w: BraidWord) -> LaurentMatrix:
    """Unreduced n x n Burau matrix of a braid word.

    Letters act in reading order; the matrix of a word is the product of
    the per-letter matrices taken left to right.
    """
    n = w.strands
    mat = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for s in w.letters:
        i = abs(s) - 1
        block = _burau_block(inverse=s < 0)
        g = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
        for r in range(2):
            for c in range(2):
                g[i + r][i + c] = block[r][c]
        mat = _mat_mul(mat, g, n)
    return LaurentMatrix.from_rows(mat, cols=n)


def burau_det(m: LaurentMatrix) -> LaurentPoly:
    """Exact determinant (a unit +-A^k for genuine Burau matrices)."""
    if m.rows != m.cols:
        raise ValueError("determinant needs a square matrix")
    return minor(m, range(m.rows), range(m.cols))


def burau_eval(m: LaurentMatrix, a) -> list[list[Fraction]]:
    """Numeric specialization at a nonzero rational, for spot checks."""
    return [[laurent_eval(p, a) for p in row] for row in m.entries]


def mirror_diagram(d: Diagram) -> Diagram:
    """Flip every crossing sign (the mirror image's diagram)."""
    from .diagram import Crossing

    crossings = tuple(
        Crossing(c.over, c.under_in, c.under_out, -c.sign)
        for c in d.crossings)
    resolved = tuple(
        (x, z, y) for (x, y, z) in d.resolved)
    return Diagram(arcs=d.arcs, crossings=crossings, resolved=resolved)
