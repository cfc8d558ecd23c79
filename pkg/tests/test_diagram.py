import random

import pytest

from quandlekit.alexander import alexander_polynomial
from quandlekit.diagram import (
    BraidWord,
    PDError,
    braid_closure,
    braid_components,
    braid_to_pd,
    catalog_entry,
    catalog_get,
    catalog_names,
    parse_braid,
    parse_pd,
    resolve_crossings,
    wirtinger,
)
from quandlekit.rings import parse_poly

TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


class TestParsePd:
    def test_trefoil(self):
        pd = parse_pd(TREFOIL_PD)
        assert pd.n_crossings == 3

    def test_empty_is_unknot(self):
        d = resolve_crossings(parse_pd(""))
        assert d.n_arcs == 1
        assert d.n_crossings == 0

    def test_kink_accepted(self):
        pd = parse_pd("X[1,2,2,1]")
        assert pd.n_crossings == 1
        d = resolve_crossings(pd)
        assert alexander_polynomial(d) == parse_poly("1")

    def test_malformed_syntax(self):
        with pytest.raises(PDError, match="malformed"):
            parse_pd("X[1,2,3] X[4,5,6,7]")

    def test_bad_label_multiplicity_names_tuple(self):
        with pytest.raises(PDError, match=r"X\[1, 4, 2, 4\]"):
            parse_pd("X[1,4,2,4] X[3,6,4,1] X[5,2,6,3]")

    def test_out_of_range_label(self):
        with pytest.raises(PDError):
            parse_pd("X[1,9,2,9]")


class TestResolve:
    def test_trefoil_cyclic_pattern(self):
        d = resolve_crossings(parse_pd(TREFOIL_PD))
        assert d.n_arcs == 3
        assert len(d.resolved) == 3
        # relations form the cyclic pattern x>y = z over three arcs
        triples = set(d.resolved)
        arcs = set()
        for t in triples:
            assert len(set(t)) == 3
            arcs.update(t)
        assert arcs == {0, 1, 2}
        assert len({(x, y) for x, y, _ in triples}) == 3

    def test_unknot_no_triples(self):
        d = resolve_crossings(parse_pd(""))
        assert d.resolved == ()

    def test_kink_single_arc_triple(self):
        # the under-passage cuts once, so the kink diagram has one arc and
        # its relation collapses to a > a = a
        d = resolve_crossings(parse_pd("X[1,2,2,1]"))
        assert d.n_arcs == 1
        assert d.resolved == ((0, 0, 0),)

    def test_all_arcs_declared(self, all_catalog):
        for name, d in all_catalog.items():
            assert len(d.resolved) == d.n_crossings
            for t in d.resolved:
                for a in t:
                    assert a in d.arcs

    def test_orientation_inconsistency(self):
        # under-strand exits on a non-consecutive edge
        with pytest.raises(PDError, match="orientation"):
            resolve_crossings(parse_pd("X[1,3,4,2] X[4,1,3,2]"))

    def test_signs_sum_to_writhe(self):
        d = resolve_crossings(parse_pd(TREFOIL_PD))
        assert sorted(c.sign for c in d.crossings) in ([-1, -1, -1], [1, 1, 1])
        r2 = catalog_get("unknot_r2")
        assert sum(c.sign for c in r2.crossings) == 0

    def test_both_kink_signs_resolve(self):
        # the 1-crossing case is where over-direction needs the global
        # head/tail audit to disambiguate
        neg = resolve_crossings(parse_pd("X[1,2,2,1]"))
        pos = resolve_crossings(parse_pd("X[1,1,2,2]"))
        assert {neg.crossings[0].sign, pos.crossings[0].sign} == {1, -1}
        for d in (neg, pos):
            assert d.n_arcs == 1
            assert alexander_polynomial(d) == parse_poly("1")


class TestWirtinger:
    def test_unknot(self):
        w = wirtinger(resolve_crossings(parse_pd("")))
        assert len(w.generators) == 1
        assert len(w.relators) == 0

    def test_trefoil(self):
        w = wirtinger(resolve_crossings(parse_pd(TREFOIL_PD)))
        assert len(w.generators) == 3
        assert len(w.relators) == 3

    def test_kink(self):
        w = wirtinger(resolve_crossings(parse_pd("X[1,2,2,1]")))
        assert len(w.generators) == 1
        assert len(w.relators) == 1


class TestBraids:
    def test_parse_formats(self):
        assert parse_braid("s1 s2^-1 s1 s2^-1").letters == (1, -2, 1, -2)
        assert parse_braid("aBaB").letters == (1, -2, 1, -2)

    def test_letter_out_of_range(self):
        with pytest.raises(ValueError):
            BraidWord(2, (2,))
        with pytest.raises(ValueError):
            BraidWord(2, (0,))

    def test_empty_word_unknot(self):
        d = braid_closure(BraidWord(1, ()))
        assert d.n_arcs == 1
        assert d.n_crossings == 0

    def test_trefoil_braid(self):
        d = braid_closure(BraidWord(2, (-1, -1, -1)))
        assert d.n_crossings == 3
        assert alexander_polynomial(d) == parse_poly("1 - A + A^2")

    def test_figure_eight_braid_matches_fox_oracle(self):
        from oracles import fox_alexander_polynomial

        d = braid_closure(BraidWord(3, (1, -2, 1, -2)))
        delta = alexander_polynomial(d)
        assert delta == parse_poly("1 - 3*A + A^2")
        assert delta == fox_alexander_polynomial(d)

    def test_multi_component_error_names_count(self):
        with pytest.raises(PDError, match="2 components"):
            braid_closure(BraidWord(2, ()))
        with pytest.raises(PDError, match="3 components"):
            braid_closure(BraidWord(3, ()))

    def test_components_vs_strand_following(self):
        rng = random.Random(7)
        for _ in range(60):
            n = rng.randint(1, 4)
            length = rng.randint(0, 6)
            letters = tuple(
                rng.choice([i for i in range(-(n - 1), n) if i != 0])
                for _ in range(length)) if n > 1 else ()
            w = BraidWord(n, letters)
            # oracle: follow each strand through the letters, then the
            # closure identification, and count orbits
            succ = {}
            perm = list(range(n))
            for s in letters:
                i = abs(s) - 1
                perm[i], perm[i + 1] = perm[i + 1], perm[i]
            for pos, strand in enumerate(perm):
                succ[strand] = pos
            seen = set()
            comps = 0
            for s in range(n):
                if s in seen:
                    continue
                comps += 1
                cur = s
                while cur not in seen:
                    seen.add(cur)
                    cur = succ[cur]
            assert braid_components(w) == comps
            assert comps <= n

    def test_single_letter_closures(self):
        for n in range(2, 5):
            w = BraidWord(n, (1,))
            assert braid_components(w) == n - 1

    def test_braid_to_pd_agrees_with_direct_closure(self):
        rng = random.Random(11)
        cases = [BraidWord(2, (-1, -1, -1)), BraidWord(3, (1, -2, 1, -2))]
        while len(cases) < 10:
            n = rng.randint(2, 4)
            letters = tuple(
                rng.choice([i for i in range(-(n - 1), n) if i != 0])
                for _ in range(rng.randint(1, 7)))
            w = BraidWord(n, letters)
            if braid_components(w) == 1:
                cases.append(w)
        for w in cases:
            via_pd = resolve_crossings(parse_pd(braid_to_pd(w)))
            direct = braid_closure(w)
            assert via_pd.n_crossings == direct.n_crossings
            assert via_pd.n_arcs == direct.n_arcs
            assert alexander_polynomial(via_pd) == alexander_polynomial(direct)
            assert sorted(c.sign for c in via_pd.crossings) \
                == sorted(c.sign for c in direct.crossings)


class TestCatalog:
    def test_names(self):
        names = catalog_names()
        for expected in ("unknot", "unknot_r1", "unknot_r2", "trefoil",
                         "figure_eight", "5_1", "5_2",
                         "kinoshita_terasaka", "conway"):
            assert expected in names

    def test_unknown_name_lists_available(self):
        with pytest.raises(KeyError, match="trefoil"):
            catalog_get("nonsense_knot")

    def test_trefoil_shape(self):
        d = catalog_get("trefoil")
        assert d.n_arcs == 3
        assert d.n_crossings == 3

    def test_unknot_shape(self):
        d = catalog_get("unknot")
        assert d.n_arcs == 1
        assert d.n_crossings == 0

    def test_conway_eleven_crossings_trivial_delta(self):
        d = catalog_get("conway")
        assert d.n_crossings == 11
        assert alexander_polynomial(d) == parse_poly("1")

    def test_delta_at_one_all_entries(self, all_catalog):
        from quandlekit.rings import laurent_eval

        for name, d in all_catalog.items():
            assert laurent_eval(alexander_polynomial(d), 1) in (1, -1)

    def test_determinants_match_stored(self, all_catalog):
        from quandlekit.alexander import knot_determinant

        for name, d in all_catalog.items():
            assert knot_determinant(d) == catalog_entry(name)["determinant"]

    def test_crossing_counts_match_stored(self, all_catalog):
        for name, d in all_catalog.items():
            assert d.n_crossings == catalog_entry(name)["crossings"]

    def test_env_override_and_bad_data_rejected(self, tmp_path, monkeypatch):
        import json

        from quandlekit import diagram as diagram_mod

        path = tmp_path / "cat.json"
        path.write_text(json.dumps({
            "good": {"pd": TREFOIL_PD, "determinant": 3, "crossings": 3},
            "lies": {"pd": TREFOIL_PD, "determinant": 5, "crossings": 3},
        }))
        monkeypatch.setenv("QUANDLEKIT_CATALOG", str(path))
        diagram_mod._catalog_data.cache_clear()
        diagram_mod.catalog_get.cache_clear()
        try:
            assert catalog_get("good").n_crossings == 3
            with pytest.raises(PDError, match="determinant"):
                catalog_get("lies")
        finally:
            monkeypatch.delenv("QUANDLEKIT_CATALOG")
            diagram_mod._catalog_data.cache_clear()
            diagram_mod.catalog_get.cache_clear()
