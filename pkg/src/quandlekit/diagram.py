"""Knot diagrams: PD codes, braid closures, arcs and crossing relations.

PD convention
-------------
A crossing is a 4-tuple ``X[a,b,c,d]`` of *edge* labels (edges are the
segments between crossing passages, numbered 1..2n consecutively along
the knot's orientation).  The tuple starts at the incoming under-edge
``a`` and proceeds counterclockwise, so the outgoing under-edge is
``c = a+1 (mod 2n)`` and the over-strand occupies slots ``b`` and ``d``.
The over direction follows from edge succession: the over-strand enters
at whichever of ``b``/``d`` is the predecessor of the other.

Sign convention
---------------
With the under-strand drawn upward and the tuple counterclockwise, the
over-strand entering at slot ``d`` travels left-to-right, giving the
frame (over, under) positive orientation: sign +1.  Over-strand entering
at ``b`` gives sign -1.

Arcs are edge classes: the over-strand joins its two edges, under
passages cut.  Every crossing then yields one relation triple (x, y, z),
meaning "z is what the over-arc x does to y": positive crossings take
y = under-in, z = under-out; negative crossings swap the two, so the
triple is always in the same form.  On the standard trefoil PD this
reproduces the textbook presentation matrix row for row.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources


class PDError(ValueError):
    """Malformed or unusable planar-diagram input."""


@dataclass(frozen=True)
class PDCode:
    """Validated PD code: tuple of 4-tuples of edge labels."""

    crossings: tuple

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)


@dataclass(frozen=True)
class Crossing:
    """One sign-resolved crossing, in arc (not edge) labels."""

    over: int
    under_in: int
    under_out: int
    sign: int


@dataclass(frozen=True)
class Diagram:
    """Arcs plus sign-resolved crossings of an oriented knot diagram.

    ``resolved[i]`` is the relation triple (x, y, z) of ``crossings[i]``,
    already rewritten so that the same relation form applies at every
    crossing regardless of sign.
    """

    arcs: tuple
    crossings: tuple
    resolved: tuple

    @property
    def n_arcs(self) -> int:
        return len(self.arcs)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)


@dataclass(frozen=True)
class BraidWord:
    """Word in the braid generators: letters +-1 .. +-(strands-1)."""

    strands: int
    letters: tuple

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("braid needs at least one strand")
        for s in self.letters:
            if s == 0 or abs(s) >= self.strands:
                raise ValueError(f"letter {s} out of range for "
                                 f"{self.strands} strands")


@dataclass(frozen=True)
class WirtingerPresentation:
    """Knot group data: one generator per arc, relators x y x^-1 = z."""

    generators: tuple
    relators: tuple  # triples (x, y, z)


_PD_TUPLE = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_pd(text: str) -> PDCode:
    """Parse whitespace-separated ``X[a,b,c,d]`` tuples.

    The empty string is the crossingless unknot diagram.
    """
    s = text.strip()
    if not s:
        return PDCode(())
    crossings = []
    pos = 0
    while pos < len(s):
        m = _PD_TUPLE.match(s, pos)
        if not m:
            raise PDError(f"malformed PD code at {s[pos:pos + 24]!r}")
        crossings.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
        while pos < len(s) and s[pos] in " \t\n,":
            pos += 1
    n = len(crossings)
    counts: dict[int, int] = {}
    for t in crossings:
        for lab in t:
            counts[lab] = counts.get(lab, 0) + 1
    expected = set(range(1, 2 * n + 1))
    if set(counts) != expected or any(c != 2 for c in counts.values()):
        for t in crossings:
            for lab in t:
                if counts.get(lab, 0) != 2 or lab not in expected:
                    raise PDError(
                        f"edge label {lab} in X{list(t)} must appear exactly "
                        f"twice among labels 1..{2 * n} (single-component "
                        "knots only)")
        raise PDError("edge labels must be 1..2n, each exactly twice")
    return PDCode(tuple(crossings))


def resolve_crossings(pd: PDCode) -> Diagram:
    """Compute signs and emit one relation triple per crossing."""
    n = pd.n_crossings
    if n == 0:
        return Diagram(arcs=(0,), crossings=(), resolved=())
    n_edges = 2 * n

    def succ(e: int) -> int:
        return e % n_edges + 1

    # under-strand must run a -> c with consecutive labels
    for t in pd.crossings:
        a, b, c, d = t
        if succ(a) != c:
            raise PDError(
                f"orientation inconsistency in X{list(t)}: under-strand "
                f"must leave on edge {succ(a)}, found {c}")

    # over directions; ambiguity (both readings consecutive) only occurs
    # for tiny diagrams and is settled by the global head/tail audit
    choices = []
    for t in pd.crossings:
        a, b, c, d = t
        opts = []
        if succ(b) == d:
            opts.append((b, d))
        if succ(d) == b:
            opts.append((d, b))
        if not opts:
            raise PDError(
                f"orientation inconsistency in X{list(t)}: over-strand "
                "edges are not consecutive")
        choices.append(opts)

    def audit(assign) -> bool:
        # every edge must enter exactly one passage and leave exactly one
        heads = [0] * (n_edges + 1)
        tails = [0] * (n_edges + 1)
        for t, (oin, oout) in zip(pd.crossings, assign):
            heads[t[0]] += 1
            tails[t[2]] += 1
            heads[oin] += 1
            tails[oout] += 1
        return all(heads[e] == 1 and tails[e] == 1
                   for e in range(1, n_edges + 1))

    assign = None
    from itertools import product

    for cand in product(*choices):
        if audit(cand):
            assign = cand
            break
    if assign is None:
        raise PDError("orientation inconsistency: no consistent "
                      "over-strand directions exist")

    # arcs: union of edges joined by over-passages
    parent = list(range(n_edges + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for oin, oout in assign:
        union(oin, oout)
    reps = sorted({find(e) for e in range(1, n_edges + 1)})
    arc_of = {e: reps.index(find(e)) for e in range(1, n_edges + 1)}

    crossings = []
    resolved = []
    for t, (oin, oout) in zip(pd.crossings, assign):
        a, b, c, d = t
        sign = 1 if oin == d else -1
        over = arc_of[oin]
        u_in = arc_of[a]
        u_out = arc_of[c]
        crossings.append(Crossing(over, u_in, u_out, sign))
        if sign > 0:
            resolved.append((over, u_in, u_out))
        else:
            resolved.append((over, u_out, u_in))
    return Diagram(arcs=tuple(range(len(reps))),
                   crossings=tuple(crossings),
                   resolved=tuple(resolved))


# ---------------------------------------------------------------------------
# braid closures


_LETTER_RE = re.compile(r"s(\d+)(\^-1)?|([a-zA-Z])")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse ``s1 s2^-1 ...`` or compact letters ``aB`` (B = s2^-1)."""
    letters = []
    for tok in text.split():
        for m in _LETTER_RE.finditer(tok):
            if m.group(1) is not None:
                i = int(m.group(1))
                letters.append(-i if m.group(2) else i)
            else:
                ch = m.group(3)
                i = ord(ch.lower()) - ord("a") + 1
                letters.append(-i if ch.isupper() else i)
    if strands is None:
        strands = max((abs(x) for x in letters), default=0) + 1
    return BraidWord(strands, tuple(letters))


def braid_permutation(w: BraidWord) -> list[int]:
    """Where each starting position ends up after the whole word."""
    perm = list(range(w.strands))
    for s in w.letters:
        i = abs(s) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return perm


def braid_components(w: BraidWord) -> int:
    """Number of components of the closure (cycles of the permutation)."""
    # position i at the top reconnects to position i at the bottom
    end_at = [0] * w.strands
    perm = list(range(w.strands))
    for s in w.letters:
        i = abs(s) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    for pos, strand in enumerate(perm):
        end_at[strand] = pos
    seen = [False] * w.strands
    cycles = 0
    for s in range(w.strands):
        if not seen[s]:
            cycles += 1
            cur = s
            while not seen[cur]:
                seen[cur] = True
                cur = end_at[cur]
    return cycles


def braid_closure(w: BraidWord) -> Diagram:
    """Close a braid word into a knot diagram (one crossing per letter).

    A positive letter s_i crosses the strand at position i over the one
    at position i+1 (a positive crossing); both strands swap positions.
    """
    comps = braid_components(w)
    if comps != 1:
        raise PDError(f"braid closure has {comps} components, not a knot")
    next_arc = w.strands
    state = list(range(w.strands))
    crossings = []
    resolved = []
    for s in w.letters:
        i = abs(s) - 1
        if s > 0:
            over = state[i]
            under = state[i + 1]
            fresh = next_arc
            next_arc += 1
            crossings.append(Crossing(over, under, fresh, +1))
            resolved.append((over, under, fresh))
            state[i], state[i + 1] = fresh, over
        else:
            over = state[i + 1]
            under = state[i]
            fresh = next_arc
            next_arc += 1
            crossings.append(Crossing(over, under, fresh, -1))
            resolved.append((over, fresh, under))
            state[i], state[i + 1] = over, fresh

    # closure: the arc leaving the top of position j continues into the
    # arc that entered the bottom of position j
    parent = list(range(next_arc))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for j in range(w.strands):
        parent[find(state[j])] = find(j)
    reps = sorted({find(a) for a in range(next_arc)})
    arc_of = {a: reps.index(find(a)) for a in range(next_arc)}
    crossings = tuple(
        Crossing(arc_of[c.over], arc_of[c.under_in], arc_of[c.under_out],
                 c.sign) for c in crossings)
    resolved = tuple((arc_of[x], arc_of[y], arc_of[z])
                     for x, y, z in resolved)
    return Diagram(arcs=tuple(range(len(reps))), crossings=crossings,
                   resolved=resolved)


def braid_to_pd(w: BraidWord) -> str:
    """PD string of the braid closure (same crossings as braid_closure)."""
    comps = braid_components(w)
    if comps != 1:
        raise PDError(f"braid closure has {comps} components, not a knot")
    if not w.letters:
        return ""
    # walk the closed-up knot, recording passages (letter index, role);
    # the wrap from the last letter back to letter 0 is the closure
    passages = []
    pos, k = 0, 0
    while True:
        s = w.letters[k]
        i = abs(s) - 1
        if pos == i or pos == i + 1:
            if s > 0:
                role = "over" if pos == i else "under"
            else:
                role = "under" if pos == i else "over"
            passages.append((k, role))
            pos = i + 1 if pos == i else i
        k += 1
        if k == len(w.letters):
            k = 0
        if (pos, k) == (0, 0):
            break
    n_pass = len(passages)
    slots: dict[int, dict] = {}
    for idx, (k, role) in enumerate(passages):
        e_in = idx if idx > 0 else n_pass
        e_out = idx + 1
        rec = slots.setdefault(k, {})
        if role == "under":
            rec["a"], rec["c"] = e_in, e_out
        else:
            rec["oin"], rec["oout"] = e_in, e_out
    tuples = []
    for k, s in enumerate(w.letters):
        rec = slots[k]
        if s > 0:
            # positive: over-strand enters at slot d
            t = (rec["a"], rec["oout"], rec["c"], rec["oin"])
        else:
            t = (rec["a"], rec["oin"], rec["c"], rec["oout"])
        tuples.append(t)
    return " ".join(f"X[{a},{b},{c},{d}]" for a, b, c, d in tuples)


def wirtinger(d: Diagram) -> WirtingerPresentation:
    """One generator per arc, one relator x y x^-1 z^-1 per crossing."""
    return WirtingerPresentation(generators=d.arcs, relators=d.resolved)


# ---------------------------------------------------------------------------
# the bundled catalog


@lru_cache(maxsize=1)
def _catalog_data() -> dict:
    import os

    override = os.environ.get("QUANDLEKIT_CATALOG")
    if override:
        with open(override, "r", encoding="utf-8") as fh:
            return json.load(fh)
    text = resources.files("quandlekit").joinpath("data/catalog.json").read_text()
    return json.loads(text)


def catalog_names() -> list[str]:
    data = _catalog_data()
    return [k for k in data if not k.startswith("_")]


def catalog_entry(name: str) -> dict:
    data = _catalog_data()
    if name not in data or name.startswith("_"):
        raise KeyError(
            f"unknown catalog knot {name!r}; available: "
            + ", ".join(catalog_names()))
    return data[name]


@lru_cache(maxsize=None)
def catalog_get(name: str) -> Diagram:
    """Load, resolve, and validate a bundled diagram.

    Validation recomputes the Alexander data: the stored determinant must
    match |Delta(-1)| and Delta(1) must be +-1.  External data is never
    trusted silently.
    """
    entry = catalog_entry(name)
    d = resolve_crossings(parse_pd(entry["pd"]))
    from .alexander import alexander_polynomial, knot_determinant

    alexander_polynomial(d)  # raises unless Delta(1) = +-1
    det = knot_determinant(d)
    if det != entry["determinant"]:
        raise PDError(
            f"catalog entry {name!r} failed validation: determinant "
            f"{det} != expected {entry['determinant']}")
    return d
