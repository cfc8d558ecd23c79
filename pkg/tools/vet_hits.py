"""Dev tool: bucket the polyhedral-search hits and separate the mutant
pair by coloring counts over conjugation quandles of small groups."""

from __future__ import annotations

import json
import re
import sys
from itertools import permutations

sys.path.insert(0, "src")
sys.path.insert(0, "tools")

from build_catalog_data import normalized_bracket
from quandlekit.diagram import parse_pd, resolve_crossings
from quandlekit.quandle import FiniteQuandle, colorings
from quandlekit.rings import format_poly


def perm_mul(p, q):
    return tuple(p[q[i]] for i in range(len(p)))


def perm_inv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def sym_group(n):
    return [tuple(p) for p in permutations(range(n))]


def conj_class(g, rep):
    cls = set()
    for p in g:
        cls.add(perm_mul(perm_mul(p, rep), perm_inv(p)))
    return sorted(cls)


def conj_quandle(g, rep) -> FiniteQuandle:
    cls = conj_class(g, rep)
    idx = {c: i for i, c in enumerate(cls)}
    table = [[idx[perm_mul(perm_mul(a, b), perm_inv(a))] for b in cls]
             for a in cls]
    return FiniteQuandle.from_table(table)


def quandle_battery():
    s4 = sym_group(4)
    a4 = [p for p in s4 if sign_of(p) == 1]
    s5 = sym_group(5)
    a5 = [p for p in s5 if sign_of(p) == 1]
    batt = {}
    batt["S4_transpositions"] = conj_quandle(s4, (1, 0, 2, 3))
    batt["S4_4cycles"] = conj_quandle(s4, (1, 2, 3, 0))
    batt["A4_3cycles"] = conj_quandle(a4, (1, 2, 0, 3))
    batt["A5_5cycles"] = conj_quandle(a5, (1, 2, 3, 4, 0))
    batt["A5_3cycles"] = conj_quandle(a5, (1, 2, 0, 3, 4))
    return batt


def sign_of(p):
    n = len(p)
    seen = [False] * n
    sgn = 1
    for i in range(n):
        if not seen[i]:
            j = i
            ln = 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                ln += 1
            if ln % 2 == 0:
                sgn = -sgn
    return sgn


def main():
    hits = []
    with open("/tmp/polysearch.log") as fh:
        text = fh.read()
    for m in re.finditer(r"HIT \(genus (\d+)\): (X\[.*)", text):
        hits.append(m.group(2).strip())
    hits = list(dict.fromkeys(hits))
    print(f"{len(hits)} distinct hit PDs")

    batt = quandle_battery()
    for name, q in batt.items():
        print(name, "order", q.order)

    rows = []
    for pd_text in hits:
        d = resolve_crossings(parse_pd(pd_text))
        f = format_poly(normalized_bracket(pd_text))
        counts = tuple(len(colorings(d, q)) for q in batt.values())
        rows.append((f, counts, pd_text))
        print(counts, f[:40], pd_text[:50])

    print("\n--- buckets by (f, counts) ---")
    buckets = {}
    for f, counts, pd_text in rows:
        buckets.setdefault((f, counts), []).append(pd_text)
    for (f, counts), pds in buckets.items():
        print(f"f={f[:45]}..., counts={counts}: {len(pds)} diagrams")
    with open("/tmp/vetted.json", "w") as fh:
        json.dump(
            [{"f": f, "counts": counts, "pd": p} for f, counts, p in rows],
            fh, indent=1)


if __name__ == "__main__":
    main()
