"""Dev tool: search 6*-polyhedron (octahedral template) substitutions for
the 11-crossing mutant pair with trivial Alexander polynomial.

The octahedron graph is the smallest basic polyhedron; filling its six
4-valent vertices with small tangles (total 11 crossings) sweeps the
family the classical tables place the pair in.  Candidates pass a fast
integer prefilter (|Delta(-1)| = 1 and Delta(2) = +-2^k) before exact
certification.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from itertools import product

sys.path.insert(0, "src")
sys.path.insert(0, "tools")

from build_catalog_data import (
    Tangle, crossing, htwist, vtwist, tangle_sum, stack, _shift, _c,
    normalized_bracket, seifert_genus_of_diagram,
)
from quandlekit.alexander import alexander_polynomial
from quandlekit.diagram import parse_pd, resolve_crossings, PDError
from quandlekit.rings import LaurentPoly, format_poly

# planar octahedron: CCW neighbor lists per vertex (from an explicit
# straight-line embedding; outer face v1 v2 v3)
OCTA = {
    1: [3, 6, 5, 2],
    2: [1, 5, 4, 3],
    3: [2, 4, 6, 1],
    4: [5, 6, 3, 2],
    5: [1, 6, 4, 2],
    6: [5, 1, 3, 4],
}
CCW_CORNERS = ["SW", "SE", "NE", "NW"]


def refresh(t: Tangle) -> Tangle:
    """Fresh corner ids so one tangle can fill several slots."""
    mapping = {}

    def re(node):
        if node[0] != "c":
            return node
        if node not in mapping:
            mapping[node] = _c()
        return mapping[node]

    return Tangle(t.n, list(t.over), [(re(a), re(b)) for a, b in t.wires],
                  {k: re(v) for k, v in t.ends.items()})


def polyhedral_pd(slot_tangles: dict, rots: dict | None = None) -> str | None:
    """Insert tangles into the octahedron slots and emit a PD string."""
    rots = rots or {}
    slot_tangles = {v: refresh(t) for v, t in slot_tangles.items()}
    shift = {}
    total = 0
    over = []
    wires = []
    for v in sorted(slot_tangles):
        t = slot_tangles[v]
        shift[v] = total
        over.extend(t.over)
        wires.extend(
            (_shift(a, shift[v]), _shift(b, shift[v])) for a, b in t.wires)
        total += t.n

    def corner_node(v, nb):
        i = OCTA[v].index(nb)
        r = rots.get(v, 0)
        corner = CCW_CORNERS[(i + r) % 4]
        return _shift(slot_tangles[v].ends[corner], shift[v])

    done = set()
    for v, nbs in OCTA.items():
        for nb in nbs:
            key = frozenset((v, nb))
            if key in done:
                continue
            done.add(key)
            wires.append((corner_node(v, nb), corner_node(nb, v)))

    # walk (same logic as the open-tangle case, but no closure needed)
    adj: dict = {}
    for a, b in wires:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    def partner(port):
        prev, cur = port, adj[port][0]
        while cur[0] == "c":
            nxts = [x for x in adj[cur] if x != prev]
            if len(nxts) != 1:
                return None
            prev, cur = cur, nxts[0]
        return cur

    n = total
    for k in range(n):
        for i in range(4):
            if len(adj.get(("p", k, i), [])) != 1:
                return None

    start = ("p", 0, 0)
    passages = []
    cur = start
    seen = set()
    while True:
        _, k, i = cur
        if (k, i) in seen:
            return None
        seen.add((k, i))
        seen.add((k, (i + 2) % 4))
        passages.append((k, i))
        out = ("p", k, (i + 2) % 4)
        cur = partner(out)
        if cur is None:
            return None
        if cur == start:
            break
    if len(passages) != 2 * n:
        return None

    m = 2 * n
    entry_edge = {}
    exit_edge = {}
    for idx, (k, i) in enumerate(passages):
        entry_edge[(k, i)] = idx if idx > 0 else m
        exit_edge[(k, (i + 2) % 4)] = idx + 1
    tuples = []
    for k in range(n):
        edges = {}
        for i in range(4):
            if (k, i) in entry_edge:
                edges[i] = entry_edge[(k, i)]
            else:
                edges[i] = exit_edge[(k, i)]
        ov = over[k]
        under = 1 - ov
        uin = None
        for i in (under, under + 2):
            if (k, i) in entry_edge:
                uin = i
        tuples.append(tuple(edges[(uin + j) % 4] for j in range(4)))
    return " ".join(f"X[{a},{b},{c},{d}]" for a, b, c, d in tuples)


def quick_filter(pd_text: str) -> bool:
    """|Delta(-1)| == 1 and Delta(2) == +-2^k, via one cofactor."""
    try:
        d = resolve_crossings(parse_pd(pd_text))
    except PDError:
        return False
    n = d.n_arcs
    if n < 2:
        return False

    def cofactor_at(a_val: Fraction) -> Fraction:
        one_minus = 1 - a_val
        rows = []
        for x, y, z in d.resolved:
            row = [Fraction(0)] * n
            row[x] += one_minus
            row[y] += a_val
            row[z] -= 1
            rows.append(row[1:])
        rows = rows[1:]
        # fraction-free-ish Gaussian elimination over Q
        k = len(rows)
        det = Fraction(1)
        for col in range(k):
            piv = None
            for r in range(col, k):
                if rows[r][col]:
                    piv = r
                    break
            if piv is None:
                return Fraction(0)
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                det = -det
            det *= rows[col][col]
            inv = 1 / rows[col][col]
            for r in range(col + 1, k):
                if rows[r][col]:
                    f = rows[r][col] * inv
                    for cc in range(col, k):
                        rows[r][cc] -= f * rows[col][cc]
        return det

    d_minus1 = cofactor_at(Fraction(-1))
    if abs(d_minus1) != 1:
        return False
    v = abs(cofactor_at(Fraction(2)))
    if v == 0:
        return False
    num, den = v.numerator, v.denominator
    return num & (num - 1) == 0 and den & (den - 1) == 0


def tangle_variants(n: int, max_regions: int = 2):
    """Small planar tangles with n crossings (twists, sums, stacks)."""
    if n == 1:
        return [crossing(0), crossing(1)]
    out = []
    for diag in (0, 1):
        out.append(htwist(n, diag))
        out.append(vtwist(n, diag))
    if max_regions > 1:
        for i in range(1, n):
            for lt in tangle_variants(i, max_regions - 1):
                for rt in tangle_variants(n - i, 1):
                    out.append(tangle_sum(lt, rt))
                    out.append(stack(lt, rt))
    return out


def main():
    partitions = [
        (5, 2, 1, 1, 1, 1),
        (4, 3, 1, 1, 1, 1),
        (3, 3, 2, 1, 1, 1),
        (3, 2, 2, 2, 1, 1),
        (2, 2, 2, 2, 2, 1),
        (6, 1, 1, 1, 1, 1),
    ]
    from itertools import permutations

    hits = []
    seen = set()
    for part in partitions:
        print(f"partition {part}")
        variant_cache = {k: tangle_variants(k) for k in set(part)}
        slot_orders = sorted(set(permutations(part)))
        print(f"  {len(slot_orders)} slot assignments")
        checked = 0
        for assignment in slot_orders:
            pools = [variant_cache[k] for k in assignment]
            for combo in product(*pools):
                slot_tangles = {v + 1: combo[v] for v in range(6)}
                pd_text = polyhedral_pd(slot_tangles)
                checked += 1
                if pd_text is None or pd_text in seen:
                    continue
                seen.add(pd_text)
                if not quick_filter(pd_text):
                    continue
                d = resolve_crossings(parse_pd(pd_text))
                try:
                    delta = alexander_polynomial(d)
                except ValueError:
                    continue
                if delta != LaurentPoly.one():
                    continue
                f = normalized_bracket(pd_text)
                if f == LaurentPoly.one():
                    continue
                g = seifert_genus_of_diagram(pd_text)
                hits.append((pd_text, g, assignment))
                print(f"HIT (genus {g}): {pd_text}")
                print(f"    f = {format_poly(f)}")
        print(f"  checked {checked}")
        if hits:
            break
    print(f"{len(hits)} hits total")
    import json
    with open("/tmp/polyhits.json", "w") as fh:
        json.dump([{"pd": h[0], "genus": h[1]} for h in hits], fh, indent=1)


if __name__ == "__main__":
    main()
