"""Twin-width driver: black-domination witnesses with budget 4k^2 per packed
vertex, guided by a validated contraction sequence.

Two alternating steps.  While some non-Y vertex u has at most k black
neighbors, the low-black step deletes N[u] wholesale, pushes the entire
second neighborhood of u into Y, and on unwind packs u while paying its
neighborhood, one black contact per red neighbor, and one black contact (or
the vertex itself) per second-ring vertex that had only red edges into the
ring.  Otherwise every non-Y vertex has more than k black neighbors and the
next contraction of the sequence is performed; its unwind merely renames the
merged vertex back.  Deleting vertices keeps the remaining sequence valid,
so merges whose endpoints died become aliases instead of contractions.
"""

from __future__ import annotations

from fractions import Fraction

from .engine import (
    EngineError,
    RuleApplication,
    SequenceInvalid,
    WitnessPair,
    _check_budget,
    _ratio,
    _State,
    _validate_witness,
)
from .graph import Graph, Mode, XYInstance


def _black_neighbors(st: _State, v: int) -> set[int]:
    return {u for u in st.adj[v] if frozenset((u, v)) not in st.red}


def _lowblack_step(st: _State, k: int) -> RuleApplication | None:
    pick = None
    for u in sorted(st.adj):
        if u not in st.y and len(_black_neighbors(st, u)) <= k:
            pick = u
            break
    if pick is None:
        return None
    u = pick
    blacks = tuple(sorted(_black_neighbors(st, u)))
    reds = tuple(sorted(st.adj[u] - set(blacks)))
    ring = st.adj[u]
    second = set()
    for w in ring:
        second |= st.adj[w]
    second -= ring
    second.discard(u)
    s_black = []
    s_red = []
    for s in sorted(second):
        if any(frozenset((s, t)) not in st.red for t in st.adj[s] & ring):
            s_black.append(s)
        else:
            s_red.append(s)
    s_cover = []
    for s in s_red:
        bn = _black_neighbors(st, s)
        s_cover.append(min(bn) if bn else s)
    r_cover = []
    for r in reds:
        bn = _black_neighbors(st, r)
        if bn:
            r_cover.append(min(bn))
    return RuleApplication(
        "tww_lowblack",
        removed_vertices=(u,) + blacks + reds,
        y_added=tuple(sorted(second - st.y)),
        payload={
            "vertex": u,
            "blacks": blacks,
            "reds": reds,
            "s_black": tuple(s_black),
            "s_red": tuple(s_red),
            "s_cover": tuple(s_cover),
            "r_cover": tuple(r_cover),
        },
    )


def _contraction_step(st: _State, a: int, b: int, w: int) -> RuleApplication:
    black_edges = []
    red_edges = []
    for x in sorted(st.adj.keys() - {a, b}):
        xa = x in st.adj[a]
        xb = x in st.adj[b]
        if not (xa or xb):
            continue
        black_a = xa and frozenset((x, a)) not in st.red
        black_b = xb and frozenset((x, b)) not in st.red
        if black_a and black_b:
            black_edges.append((w, x) if w < x else (x, w))
        else:
            red_edges.append((w, x) if w < x else (x, w))
    both_y = a in st.y and b in st.y
    if both_y:
        rep = a
    else:
        rep = a if a not in st.y else b
    return RuleApplication(
        "tww_contract",
        removed_vertices=(a, b),
        added_vertices=(w,),
        added_edges=tuple(black_edges),
        added_red_edges=tuple(red_edges),
        y_added=(w,) if both_y else (),
        payload={"merged": (a, b), "into": w, "rep": rep, "both_y": both_y},
    )


def run_twinwidth(g: Graph, seq, k: int, y=()) -> WitnessPair:
    """Certified black-domination within 4k^2 of the packing, k >= 2."""
    from .families import validate_contraction_sequence

    if k < 2:
        raise SequenceInvalid("twin-width driver requires k >= 2")
    if not validate_contraction_sequence(g, seq, width=k):
        raise SequenceInvalid("contraction sequence is not valid at width k")
    y0 = g.check_vertex_set(y)
    st = _State.from_graph(g, y=y0, track_red=True)
    trace: list[RuleApplication] = []
    alias: dict[int, int] = {}
    merge_idx = 0
    constant = 4 * k * k

    def resolve(v: int) -> int:
        while v in alias:
            v = alias[v]
        return v

    while set(st.adj) - st.y:
        app = _lowblack_step(st, k)
        if app is None:
            while True:
                if merge_idx >= len(seq.merges):
                    raise SequenceInvalid(
                        "sequence exhausted with undominated vertices remaining"
                    )
                a, b, w = seq.merges[merge_idx]
                merge_idx += 1
                ra, rb = resolve(a), resolve(b)
                la, lb = ra in st.adj, rb in st.adj
                if la and lb:
                    app = _contraction_step(st, ra, rb, w)
                    break
                alias[w] = ra if la else rb
        st.apply(app)
        trace.append(app)

    d: set[int] = set()
    p: set[int] = set()
    for app in reversed(trace):
        pay = app.payload
        if app.rule_id == "tww_lowblack":
            p.add(pay["vertex"])
            d.add(pay["vertex"])
            d.update(pay["blacks"])
            d.update(pay["reds"])
            d.update(pay["s_cover"])
            d.update(pay["r_cover"])
        elif app.rule_id == "tww_contract":
            w, rep = pay["into"], pay["rep"]
            if w in d:
                d.discard(w)
                d.add(rep)
            if w in p:
                p.discard(w)
                p.add(rep)
        else:
            raise EngineError(f"unknown rule {app.rule_id}")
        _check_budget(d, p, constant, 0, trace, "twin-width")

    if not (d | p) <= set(g.vertices()):
        raise EngineError("merged vertex leaked into the witness")
    inst = XYInstance(g, y_set=y0, mode=Mode.BLACK)
    _validate_witness(inst, d, p, "twin-width", trace)
    return WitnessPair(
        frozenset(d), frozenset(p), "twin-width", Fraction(constant),
        tuple(trace), _ratio(d, p),
    )
