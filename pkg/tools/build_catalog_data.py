"""Dev tool: assemble and certify the 11-crossing catalog entries.

Builds planar 2-string tangles (twist regions, sums, stacks, rotations),
closes them into knot diagrams, emits PD strings in the package
convention, and certifies candidates by exact invariants:

* Delta = 1 and determinant 1 (the property the pair is famous for),
* Kauffman-bracket normalization f != 1 (rules out unknot diagrams),
* mutation partnership (rotating the six-crossing tangle 180 degrees),
* Seifert-algorithm genus of the diagram (labels the genus-2 member).

Run:  python3 tools/build_catalog_data.py
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from itertools import count

sys.path.insert(0, "src")

from quandlekit.alexander import alexander_polynomial, knot_determinant
from quandlekit.diagram import parse_pd, resolve_crossings
from quandlekit.rings import LaurentPoly, format_poly, laurent_normalize

_corner_ids = count()


@dataclass
class Tangle:
    """Planar 2-string tangle.

    Each crossing has 4 ports in counterclockwise order; through-paths
    are the diagonals (ports 0-2 and 1-3); ``over[k]`` says which
    diagonal of crossing k is the over-strand (0 or 1).  Wires join
    ports/corner nodes; the 4 open ends are named NW/NE/SW/SE.
    """

    n: int
    over: list
    wires: list
    ends: dict


def _c(label=None):
    return ("c", next(_corner_ids))


def crossing(over_diag: int) -> Tangle:
    # ports CCW: 0=SW, 1=SE, 2=NE, 3=NW
    sw, se, ne, nw = _c(), _c(), _c(), _c()
    wires = [(sw, ("p", 0, 0)), (se, ("p", 0, 1)), (ne, ("p", 0, 2)),
             (nw, ("p", 0, 3))]
    return Tangle(1, [over_diag], wires,
                  {"NW": nw, "NE": ne, "SW": sw, "SE": se})


def zero_tangle() -> Tangle:
    nw, ne, sw, se = _c(), _c(), _c(), _c()
    return Tangle(0, [], [(nw, ne), (sw, se)],
                  {"NW": nw, "NE": ne, "SW": sw, "SE": se})


def inf_tangle() -> Tangle:
    nw, ne, sw, se = _c(), _c(), _c(), _c()
    return Tangle(0, [], [(nw, sw), (ne, se)],
                  {"NW": nw, "NE": ne, "SW": sw, "SE": se})


def _shift(node, k):
    if node[0] == "p":
        return ("p", node[1] + k, node[2])
    return node


def tangle_sum(t1: Tangle, t2: Tangle) -> Tangle:
    k = t1.n
    wires = list(t1.wires) + [
        (_shift(a, k), _shift(b, k)) for a, b in t2.wires]
    wires.append((t1.ends["NE"], _shift(t2.ends["NW"], k)))
    wires.append((t1.ends["SE"], _shift(t2.ends["SW"], k)))
    return Tangle(t1.n + t2.n, t1.over + t2.over, wires, {
        "NW": t1.ends["NW"], "SW": t1.ends["SW"],
        "NE": _shift(t2.ends["NE"], k), "SE": _shift(t2.ends["SE"], k)})


def stack(t1: Tangle, t2: Tangle) -> Tangle:
    """t1 on top of t2."""
    k = t1.n
    wires = list(t1.wires) + [
        (_shift(a, k), _shift(b, k)) for a, b in t2.wires]
    wires.append((t1.ends["SW"], _shift(t2.ends["NW"], k)))
    wires.append((t1.ends["SE"], _shift(t2.ends["NE"], k)))
    return Tangle(t1.n + t2.n, t1.over + t2.over, wires, {
        "NW": t1.ends["NW"], "NE": t1.ends["NE"],
        "SW": _shift(t2.ends["SW"], k), "SE": _shift(t2.ends["SE"], k)})


def rot180(t: Tangle) -> Tangle:
    """In-plane half turn: the standard mutation move."""
    return Tangle(t.n, list(t.over), list(t.wires), {
        "NW": t.ends["SE"], "SE": t.ends["NW"],
        "NE": t.ends["SW"], "SW": t.ends["NE"]})


def htwist(k: int, diag: int) -> Tangle:
    t = crossing(diag)
    for _ in range(abs(k) - 1):
        t = tangle_sum(t, crossing(diag))
    return t


def vtwist(k: int, diag: int) -> Tangle:
    t = crossing(diag)
    for _ in range(abs(k) - 1):
        t = stack(t, crossing(diag))
    return t


def close(t: Tangle, mode: str) -> list:
    """Numerator/denominator closure; returns wire list of the knot."""
    wires = list(t.wires)
    if mode == "N":
        wires.append((t.ends["NW"], t.ends["NE"]))
        wires.append((t.ends["SW"], t.ends["SE"]))
    else:
        wires.append((t.ends["NW"], t.ends["SW"]))
        wires.append((t.ends["NE"], t.ends["SE"]))
    return wires


def to_pd(t: Tangle, mode: str) -> str | None:
    """Walk the closed curve and emit a PD string; None if not a knot."""
    wires = close(t, mode)
    n = t.n
    if n == 0:
        return None

    adj: dict = {}
    for a, b in wires:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    def partner(port):
        # follow wires through degree-2 corner nodes to the next port
        prev, cur = port, adj[port][0]
        while cur[0] == "c":
            nxts = [x for x in adj[cur] if x != prev]
            if len(nxts) != 1:
                return None
            prev, cur = cur, nxts[0]
        return cur

    # every port must be wired exactly once
    for k in range(n):
        for i in range(4):
            if len(adj.get(("p", k, i), [])) != 1:
                return None

    start = ("p", 0, 0)
    passages = []  # (crossing, entry_port_index)
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
        return None  # more than one component

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
        over = t.over[k]
        under = 1 - over
        # under-in port: the under-diagonal port where the walk entered
        uin = None
        for i in (under, under + 2):
            if (k, i) in entry_edge:
                uin = i
        tuples.append(tuple(edges[(uin + j) % 4] for j in range(4)))
    return " ".join(f"X[{a},{b},{c},{d}]" for a, b, c, d in tuples)


# ---------------------------------------------------------------------------
# certification helpers


def bracket_from_pd(pd_text: str) -> LaurentPoly:
    pd = parse_pd(pd_text)
    n = pd.n_crossings
    a = LaurentPoly.A()
    a_inv = LaurentPoly.A(-1)
    delta = LaurentPoly({2: -1, -2: -1})
    total = LaurentPoly.zero()
    for state in range(1 << n):
        parent = list(range(2 * n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent[find(x)] = find(y)

        a_count = 0
        for k, (s0, s1, s2, s3) in enumerate(pd.crossings):
            if (state >> k) & 1 == 0:
                a_count += 1
                union(s0, s1)
                union(s2, s3)
            else:
                union(s0, s3)
                union(s1, s2)
        loops = len({find(e) for e in range(1, 2 * n + 1)})
        term = LaurentPoly.A(a_count - (n - a_count))
        for _ in range(loops - 1):
            term = term * delta
        total = total + term
    return total


def normalized_bracket(pd_text: str) -> LaurentPoly:
    """f(D) = (-A^3)^{-writhe} <D>; equals 1 exactly on unknot diagrams,
    so any other value certifies a nontrivial knot."""
    d = resolve_crossings(parse_pd(pd_text))
    w = sum(c.sign for c in d.crossings)
    br = bracket_from_pd(pd_text)
    coeff = 1 if w % 2 == 0 else -1
    return br * LaurentPoly({-3 * w: coeff})


def seifert_genus_of_diagram(pd_text: str) -> int:
    pd = parse_pd(pd_text)
    d = resolve_crossings(pd)
    n = pd.n_crossings
    parent = list(range(2 * n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    # oriented smoothing: under-in joins over-out, over-in joins under-out
    m = 2 * n
    for t in pd.crossings:
        a, b, c, cd = t
        if (cd - b) % m == 1:
            oin, oout = b, cd
        else:
            oin, oout = cd, b
        union(a, oout)
        union(oin, c)
    circles = len({find(e) for e in range(1, 2 * n + 1)})
    return (n - circles + 1) // 2


def certify(pd_text: str, label: str):
    d = resolve_crossings(parse_pd(pd_text))
    delta = alexander_polynomial(d)
    det = knot_determinant(d)
    f = laurent_normalize(normalized_bracket(pd_text))
    g = seifert_genus_of_diagram(pd_text)
    print(f"{label}: crossings={d.n_crossings} arcs={d.n_arcs} "
          f"Delta={format_poly(delta)} det={det} "
          f"f(D){'==1 (UNKNOT-LIKE!)' if f == LaurentPoly.one() else '!=1'} "
          f"seifert_genus={g}")
    return delta, det, f, g


def main():
    # calibration: bracket must be exactly 1 on unknot diagrams of both
    # kink signs, and nontrivial on the trefoil
    for name, pd in [("unknot_r1", "X[1,2,2,1]"),
                     ("unknot_r1b", "X[2,1,1,2]"),
                     ("unknot_r2", "X[2,3,3,4] X[1,1,2,4]")]:
        f = normalized_bracket(pd)
        assert f == LaurentPoly.one(), (name, format_poly(f))
    tre = normalized_bracket("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
    assert tre != LaurentPoly.one()
    print("bracket calibration ok; trefoil f =", format_poly(tre))

    # search: numerator closures of (pretzel tangle) + (5-crossing tangle)
    def small_tangles(n, max_regions=3):
        if n == 0:
            return []
        out = []
        for diag in (0, 1):
            out.append(("h", n, diag))
            out.append(("v", n, diag))
        if max_regions > 1:
            for i in range(1, n):
                for lt in small_tangles(i, max_regions - 1):
                    for rt in small_tangles(n - i, 1):
                        out.append(("sum", lt, rt))
                        out.append(("stack", lt, rt))
        return out

    def build(spec) -> Tangle:
        if spec[0] == "h":
            return htwist(spec[1], spec[2])
        if spec[0] == "v":
            return vtwist(spec[1], spec[2])
        if spec[0] == "sum":
            return tangle_sum(build(spec[1]), build(spec[2]))
        return stack(build(spec[1]), build(spec[2]))

    hits = []
    seen_pd = set()
    specs = small_tangles(5)
    print(f"searching {len(specs)} closing tangles x pretzel variants ...")
    for pa in (2, 3):
        pb = pa
        for d1 in (0, 1):
            for d2 in (0, 1):
                for pora in ("vv", "hh"):
                    if pora == "vv":
                        pz = tangle_sum(vtwist(pa, d1), vtwist(pb, d2))
                    else:
                        pz = stack(htwist(pa, d1), htwist(pb, d2))
                    if pa + pb == 6:
                        rsize = 5
                    else:
                        rsize = 11 - pa - pb
                    for spec in small_tangles(rsize):
                        r = build(spec)
                        for combine in ("sum", "stack"):
                            if combine == "sum":
                                t = tangle_sum(pz, r)
                            else:
                                t = stack(pz, r)
                            for mode in ("N", "D"):
                                pd_text = to_pd(t, mode)
                                if pd_text is None or pd_text in seen_pd:
                                    continue
                                seen_pd.add(pd_text)
                                try:
                                    dg = resolve_crossings(parse_pd(pd_text))
                                    delta = alexander_polynomial(dg)
                                except Exception:
                                    continue
                                if delta == LaurentPoly.one():
                                    f = laurent_normalize(
                                        normalized_bracket(pd_text))
                                    if f != LaurentPoly.one():
                                        g = seifert_genus_of_diagram(pd_text)
                                        hits.append(
                                            (pd_text, g,
                                             (pa, pb, d1, d2, pora,
                                              spec, combine, mode)))
                                        print("HIT", g, pd_text)
                                        print("   recipe:", hits[-1][2])
    print(f"{len(hits)} hits")


if __name__ == "__main__":
    main()
