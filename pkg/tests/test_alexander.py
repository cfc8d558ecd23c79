from fractions import Fraction

import pytest

from oracles import fox_alexander_polynomial

from quandlekit.alexander import (
    alexander_polynomial,
    burau,
    burau_det,
    burau_eval,
    extended_module,
    knot_determinant,
    mirror_diagram,
    presentation_matrix,
)
from quandlekit.diagram import BraidWord, Diagram, braid_closure, catalog_get
from quandlekit.rings import laurent_mirror, laurent_normalize, parse_poly

P = parse_poly

PAPER_TREFOIL_ROWS = [
    [P("1 - A"), P("-1"), P("A")],
    [P("A"), P("1 - A"), P("-1")],
    [P("-1"), P("A"), P("1 - A")],
]


def equal_up_to_row_col_permutation(rows_a, rows_b):
    from itertools import permutations

    n = len(rows_a)
    if len(rows_b) != n:
        return False
    for rp in permutations(range(n)):
        for cp in permutations(range(n)):
            if all(rows_a[i][j] == rows_b[rp[i]][cp[j]]
                   for i in range(n) for j in range(n)):
                return True
    return False


class TestPresentationMatrix:
    def test_trefoil_matches_reference(self, trefoil):
        m = presentation_matrix(trefoil)
        assert equal_up_to_row_col_permutation(
            [list(r) for r in m.entries], PAPER_TREFOIL_ROWS)

    def test_unknot_zero_by_one(self):
        m = presentation_matrix(catalog_get("unknot"))
        assert (m.rows, m.cols) == (0, 1)

    def test_kink_coefficients_sum(self):
        # triple (a, a, a): (1-A) + A - 1 = 0
        m = presentation_matrix(catalog_get("unknot_r1"))
        assert (m.rows, m.cols) == (1, 1)
        assert m.entry(0, 0).is_zero()

    def test_repeated_arcs_sum(self):
        d = Diagram(arcs=(0, 1), crossings=(), resolved=((0, 0, 1),))
        m = presentation_matrix(d)
        assert m.entries[0] == (P("1"), P("-1"))


class TestAlexanderPolynomial:
    @pytest.mark.parametrize("name,delta", [
        ("unknot", "1"),
        ("unknot_r1", "1"),
        ("unknot_r2", "1"),
        ("trefoil", "1 - A + A^2"),
        ("figure_eight", "1 - 3*A + A^2"),
        ("5_1", "1 - A + A^2 - A^3 + A^4"),
        ("5_2", "2 - 3*A + 2*A^2"),
        ("kinoshita_terasaka", "1"),
        ("conway", "1"),
    ])
    def test_catalog_values(self, name, delta):
        assert alexander_polynomial(catalog_get(name)) == P(delta)

    def test_braid_trefoil_same_delta(self, trefoil):
        d = braid_closure(BraidWord(2, (-1, -1, -1)))
        assert alexander_polynomial(d) == alexander_polynomial(trefoil)

    def test_fox_oracle_agreement(self, all_catalog):
        for name, d in all_catalog.items():
            if d.n_crossings > 5:
                continue
            assert alexander_polynomial(d) == fox_alexander_polynomial(d), name

    def test_broken_diagram_rejected(self):
        # a fabricated relation set whose Delta(1) != +-1
        d = Diagram(arcs=(0, 1), crossings=(), resolved=((0, 1, 1),))
        with pytest.raises(ValueError, match="Delta"):
            alexander_polynomial(d)


class TestDeterminant:
    @pytest.mark.parametrize("name,det", [
        ("trefoil", 3), ("unknot", 1), ("figure_eight", 5),
        ("5_1", 5), ("5_2", 7),
        ("kinoshita_terasaka", 1), ("conway", 1),
    ])
    def test_values(self, name, det):
        assert knot_determinant(catalog_get(name)) == det

    def test_always_odd(self, all_catalog):
        for d in all_catalog.values():
            assert knot_determinant(d) % 2 == 1


class TestExtendedModule:
    def test_trefoil(self, trefoil):
        em = extended_module(trefoil)
        assert em.free_rank == 1
        assert [str(f) for f in em.torsion_factors] == ["1 - A + A^2"]
        assert em.e1 == P("1 - A + A^2")

    def test_unknot(self):
        em = extended_module(catalog_get("unknot"))
        assert em.free_rank == 1
        assert em.torsion_factors == ()
        assert em.e1 == P("1")

    def test_conway(self):
        em = extended_module(catalog_get("conway"))
        assert em.free_rank == 1
        assert em.e1 == P("1")
        assert em.e2 == P("1")

    def test_free_rank_one_everywhere(self, all_catalog):
        for name, d in all_catalog.items():
            assert extended_module(d).free_rank == 1, name


class TestMirror:
    def test_trefoil_mirror_flips_delta(self, trefoil):
        mirrored = mirror_diagram(trefoil)
        d1 = alexander_polynomial(trefoil)
        d2 = alexander_polynomial(mirrored)
        assert d2 == laurent_normalize(laurent_mirror(d1))

    def test_double_mirror(self, figure_eight):
        assert mirror_diagram(mirror_diagram(figure_eight)).resolved \
            == figure_eight.resolved


class TestBurau:
    def test_empty_word_identity(self):
        m = burau(BraidWord(3, ()))
        for i in range(3):
            for j in range(3):
                assert m.entry(i, j) == (P("1") if i == j else P("0"))

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_braid_relations(self, n):
        for i in range(1, n - 1):
            lhs = burau(BraidWord(n, (i, i + 1, i)))
            rhs = burau(BraidWord(n, (i + 1, i, i + 1)))
            assert lhs == rhs

    @pytest.mark.parametrize("n", [4, 5])
    def test_far_commutation(self, n):
        for i in range(1, n):
            for j in range(i + 2, n):
                assert burau(BraidWord(n, (i, j))) \
                    == burau(BraidWord(n, (j, i)))

    def test_inverse_letters(self):
        for letters in [(1, -1), (-1, 1), (2, -2)]:
            m = burau(BraidWord(3, letters))
            for i in range(3):
                for j in range(3):
                    assert m.entry(i, j) == (P("1") if i == j else P("0"))

    def test_det_is_unit(self):
        import random

        rng = random.Random(3)
        for _ in range(20):
            n = rng.randint(2, 4)
            letters = tuple(
                rng.choice([i for i in range(-(n - 1), n) if i != 0])
                for _ in range(rng.randint(0, 8)))
            det = burau_det(burau(BraidWord(n, letters)))
            assert det.is_unit()

    def test_numeric_spot_check_braid_relation(self):
        a = burau_eval(burau(BraidWord(3, (1, 2, 1))), 2)
        b = burau_eval(burau(BraidWord(3, (2, 1, 2))), 2)
        assert a == b
        assert all(isinstance(v, Fraction) for row in a for v in row)
