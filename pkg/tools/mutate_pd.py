"""Dev tool: Conway mutation on PD codes.

Builds the face structure of the 4-valent planar map, enumerates
mutation circles (length-4 cycles in the dual that separate the
crossings), rotates the inner tangle half a turn, and re-emits a PD
string by rewalking the mutated curve.
"""

from __future__ import annotations

import sys

sys.path.insert(0, "src")

from quandlekit.diagram import parse_pd


def half_edges(pd):
    """incidences[label] = list of (crossing, slot)."""
    inc: dict = {}
    for k, t in enumerate(pd.crossings):
        for i, lab in enumerate(t):
            inc.setdefault(lab, []).append((k, i))
    return inc


def faces(pd):
    """Faces as tuples of directed edge-sides (crossing, slot, 'in'/'out').

    Walk keeping the face on the left: arriving into slot i, leave from
    slot (i+1) mod 4.
    """
    inc = half_edges(pd)
    # directed half-edge: (label, (k, i)) meaning the edge end at (k, i)
    # "next" for face traversal: at end (k,i), turn to slot (i+1)%4 and
    # travel that edge to its other end
    def other_end(lab, end):
        a, b = inc[lab]
        return b if end == a else a

    visited = set()
    out = []
    for lab, ends in inc.items():
        for end in ends:
            if (lab, end) in visited:
                continue
            face = []
            cur = (lab, end)
            while cur not in visited:
                visited.add(cur)
                face.append(cur)
                _, (k, i) = cur
                j = (i + 1) % 4
                lab2 = pd.crossings[k][j]
                end2 = other_end(lab2, (k, j))
                cur = (lab2, end2)
            out.append(tuple(face))
    return out


def mutation_circles(pd):
    """Length-4 dual cycles whose edge set separates the crossings.

    Returns (cyclically ordered cut edges, [smaller side, larger side]).
    """
    from itertools import combinations, permutations

    fs = faces(pd)
    n = pd.n_crossings
    edge_sides: dict = {}  # label -> [face index, face index]
    for fi, face in enumerate(fs):
        for lab, _ in face:
            edge_sides.setdefault(lab, []).append(fi)
    inc = half_edges(pd)

    def separates(cut):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for lab, ends in inc.items():
            if lab in cut:
                continue
            (k1, _), (k2, _) = ends
            parent[find(k1)] = find(k2)
        comps: dict = {}
        for k in range(n):
            comps.setdefault(find(k), []).append(k)
        if len(comps) != 2:
            return None
        return sorted(comps.values(), key=len)

    def cyclic_order(quad):
        # Eulerian circuit through the 4 dual edges: e0 f1 e1 f2 e2 f3 e3 f0
        for perm in permutations(quad):
            for flips in range(16):
                fseq = []
                ok = True
                for idx, e in enumerate(perm):
                    fa, fb = edge_sides[e]
                    if (flips >> idx) & 1:
                        fa, fb = fb, fa
                    fseq.append((fa, fb))
                for idx in range(4):
                    if fseq[idx][1] != fseq[(idx + 1) % 4][0]:
                        ok = False
                        break
                if ok:
                    return perm
        return None

    circles = []
    for quad in combinations(sorted(edge_sides), 4):
        sides = separates(set(quad))
        if sides is None or len(sides[0]) < 2:
            continue
        order = cyclic_order(quad)
        if order is not None:
            circles.append((order, sides))
    return circles


def mutate(pd_text: str, circle, sides) -> str | None:
    """Rotate the smaller side half a turn and re-emit the PD."""
    pd = parse_pd(pd_text)
    inc = half_edges(pd)
    inside = set(sides[0])
    e0, e1, e2, e3 = circle

    def side_end(lab, want_inside):
        for end in inc[lab]:
            if (end[0] in inside) == want_inside:
                return end
        return None

    ins = [side_end(e, True) for e in circle]
    outs = [side_end(e, False) for e in circle]
    if any(x is None for x in ins + outs):
        return None  # a cut edge has both ends on one side: not a tangle

    # connection map between crossing ends: each original edge joins its
    # two ends except the four cut edges, which are re-paired:
    # outside end of e_k joins inside end of e_{k+2}
    join: dict = {}
    for lab, ends in inc.items():
        if lab in circle:
            continue
        a, b = ends
        join[a] = b
        join[b] = a
    for k in range(4):
        a = outs[k]
        b = ins[(k + 2) % 4]
        join[a] = b
        join[b] = a

    # rewalk: enter a crossing at slot i, exit at (i+2)%4
    n = pd.n_crossings
    start = (0, 0)
    passages = []
    cur = start
    seen = set()
    while True:
        k, i = cur
        if (k, i) in seen or (k, (i + 2) % 4) in seen:
            return None
        seen.add((k, i))
        passages.append((k, i))
        nxt = join.get((k, (i + 2) % 4))
        if nxt is None:
            return None
        cur = nxt
        if cur == start:
            break
    if len(passages) != 2 * n:
        return None
    m = 2 * n
    entry = {}
    exitl = {}
    for idx, (k, i) in enumerate(passages):
        entry[(k, i)] = idx if idx > 0 else m
        exitl[(k, (i + 2) % 4)] = idx + 1
    tuples = []
    for k in range(n):
        edges = {}
        for i in range(4):
            edges[i] = entry.get((k, i), exitl.get((k, i)))
        # the under diagonal of the original tuple is slots {0, 2}
        uin = 0 if (k, 0) in entry else 2
        tuples.append(tuple(edges[(uin + j) % 4] for j in range(4)))
    return " ".join(f"X[{a},{b},{c},{d}]" for a, b, c, d in tuples)


def all_mutants(pd_text: str) -> list[str]:
    pd = parse_pd(pd_text)
    out = []
    for circle, sides in mutation_circles(pd):
        mut = mutate(pd_text, circle, sides)
        if mut is not None and mut != pd_text:
            out.append((mut, len(sides[0])))
    return out


if __name__ == "__main__":
    import json

    from build_catalog_data import normalized_bracket
    from quandlekit.alexander import alexander_polynomial, knot_determinant
    from quandlekit.diagram import resolve_crossings
    from quandlekit.rings import format_poly

    hits = json.load(open("/tmp/vetted.json"))
    f0 = hits[0]["f"]
    base = [h["pd"] for h in hits if h["f"] == f0][0]
    print("base:", base)
    muts = all_mutants(base)
    print(f"{len(muts)} mutants")
    uniq = {}
    for mut, size in muts:
        try:
            d = resolve_crossings(parse_pd(mut))
            delta = alexander_polynomial(d)
            det = knot_determinant(d)
            f = format_poly(normalized_bracket(mut))
        except Exception as exc:
            print("  invalid mutant:", exc)
            continue
        key = (format_poly(delta), det, f)
        uniq.setdefault((size, key), mut)
        print(f"  tangle size {size}: Delta={format_poly(delta)} det={det} "
              f"f==base: {f == f0} pd={mut[:50]}")
    with open("/tmp/mutants.json", "w") as fh:
        json.dump({"base": base,
                   "mutants": [m for (s, k), m in uniq.items()]}, fh, indent=1)
