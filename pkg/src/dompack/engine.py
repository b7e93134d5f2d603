"""Certified reduction engine.

A driver runs a rewrite loop on a working (X,Y)-instance, recording one
RuleApplication per step (the exact deltas plus unwind data), then unwinds
the trace backwards to assemble a dominating set D and packing P for the
original instance.  Every unwind step re-asserts the driver's budget
inequality; the final pair is validated against the definitional checkers.
Vertex ids are stable throughout: deletions shrink an alive-set, they never
reindex, so witnesses refer to original ids directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph, Mode, XYInstance
from .oracles import check_xy_dominating, check_xy_packing


class EngineError(Exception):
    pass


class Stalled(EngineError):
    """No rule applies to a nonempty instance: the input is outside the
    driver's class (or a rule-coverage bug)."""

    def __init__(self, message, instance=None, trace=()):
        super().__init__(message)
        self.instance = instance
        self.trace = tuple(trace)


class GuaranteeViolated(EngineError):
    """An unwind step would break the driver's budget inequality."""

    def __init__(self, message, trace=()):
        super().__init__(message)
        self.trace = tuple(trace)


class CertificateInvalid(EngineError):
    pass


class SequenceInvalid(CertificateInvalid):
    pass


@dataclass(frozen=True)
class RuleApplication:
    """One rewrite step: deltas that turn the parent instance into the child,
    plus whatever the unwind needs to lift (D', P') back to the parent."""

    rule_id: str
    removed_vertices: tuple = ()
    removed_edges: tuple = ()
    added_vertices: tuple = ()
    added_edges: tuple = ()
    added_red_edges: tuple = ()
    x_added: tuple = ()
    x_removed: tuple = ()
    y_added: tuple = ()
    y_removed: tuple = ()
    payload: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        def clean(v):
            if isinstance(v, (set, frozenset)):
                return sorted(v)
            if isinstance(v, tuple):
                return list(v)
            if isinstance(v, dict):
                return {str(k): clean(x) for k, x in v.items()}
            return v

        return {"rule": self.rule_id, "payload": clean(dict(self.payload))}


@dataclass(frozen=True)
class WitnessPair:
    """A concrete (D, P) with a certified budget, plus the trace proving it."""

    d_set: frozenset[int]
    p_set: frozenset[int]
    class_tag: str
    certified_constant: Fraction
    trace: tuple[RuleApplication, ...]
    achieved_ratio: Fraction | None

    def to_json(self) -> str:
        c = self.certified_constant
        r = self.achieved_ratio
        doc = {
            "class": self.class_tag,
            "constant": f"{c.numerator}/{c.denominator}",
            "D": sorted(self.d_set),
            "P": sorted(self.p_set),
            "ratio": f"{r.numerator}/{r.denominator}" if r is not None else None,
            "trace": [app.to_json_obj() for app in self.trace],
        }
        return json.dumps(doc, separators=(",", ":"))


def _ratio(d, p) -> Fraction | None:
    return Fraction(len(d), len(p)) if p else None


# ---------------------------------------------------------------------------
# Working state
# ---------------------------------------------------------------------------


class _State:
    """Mutable sub-instance over original vertex ids (plus gadget ids)."""

    __slots__ = ("adj", "x", "y", "red")

    def __init__(self, adj, x, y, red=None):
        self.adj = adj
        self.x = x
        self.y = y
        self.red = red

    @classmethod
    def from_graph(cls, g: Graph, x=(), y=(), track_red=False):
        adj = {v: set(g.adj[v]) for v in g.vertices()}
        red = {frozenset(e) for e in g.red} if track_red else None
        return cls(adj, set(x), set(y), red)

    def alive(self):
        return self.adj.keys()

    def deg(self, v) -> int:
        return len(self.adj[v])

    def snapshot(self) -> tuple:
        edges = tuple(sorted((u, v) for u in self.adj for v in self.adj[u] if u < v))
        red = tuple(sorted(tuple(sorted(e)) for e in self.red)) if self.red is not None else None
        return (tuple(sorted(self.adj)), edges, tuple(sorted(self.x)), tuple(sorted(self.y)), red)

    def apply(self, app: RuleApplication) -> None:
        for u, v in app.removed_edges:
            self.adj[u].discard(v)
            self.adj[v].discard(u)
            if self.red is not None:
                self.red.discard(frozenset((u, v)))
        for v in app.removed_vertices:
            for w in self.adj[v]:
                self.adj[w].discard(v)
                if self.red is not None:
                    self.red.discard(frozenset((v, w)))
            del self.adj[v]
            self.x.discard(v)
            self.y.discard(v)
        for v in app.added_vertices:
            self.adj[v] = set()
        for u, v in app.added_edges:
            self.adj[u].add(v)
            self.adj[v].add(u)
        for u, v in app.added_red_edges:
            self.adj[u].add(v)
            self.adj[v].add(u)
            self.red.add(frozenset((u, v)))
        for v in app.x_removed:
            self.x.discard(v)
        self.x.update(app.x_added)
        for v in app.y_removed:
            self.y.discard(v)
        self.y.update(app.y_added)

    def describe(self) -> dict:
        return {
            "vertices": sorted(self.adj),
            "edges": sorted((u, v) for u in self.adj for v in self.adj[u] if u < v),
            "x": sorted(self.x),
            "y": sorted(self.y),
        }


def replay(g: Graph, trace, x=(), y=(), track_red=False):
    """Re-apply a trace's deltas from the original instance; yields the state
    snapshot after every step (the first yield is the initial instance)."""
    st = _State.from_graph(g, x, y, track_red)
    yield st.snapshot()
    for app in trace:
        st.apply(app)
        yield st.snapshot()


# ---------------------------------------------------------------------------
# Shared rules.  Scanning is in ascending id order throughout; the priority
# order (cost-free rules before cost-paying ones) is fixed by each driver.
# ---------------------------------------------------------------------------


def rule_isolated(st: _State) -> RuleApplication | None:
    for a in sorted(st.adj):
        if st.adj[a]:
            continue
        if a in st.y:
            case = "in_y"
        elif a in st.x:
            case = "in_x"
        else:
            case = "free"
        return RuleApplication(
            "isolated", removed_vertices=(a,), payload={"vertex": a, "case": case}
        )
    return None


def rule_y_pendant(st: _State) -> RuleApplication | None:
    # Members of X are excluded: deleting one must route through x_elim so
    # its neighborhood is compensated into Y.
    for a in sorted(st.y):
        if st.deg(a) <= 1 and a not in st.x:
            return RuleApplication("y_pendant", removed_vertices=(a,), payload={"vertex": a})
    return None


def rule_y_edge(st: _State) -> RuleApplication | None:
    for u in sorted(st.y):
        for v in sorted(st.adj[u]):
            if u < v and v in st.y:
                return RuleApplication(
                    "y_edge", removed_edges=((u, v),), payload={"edge": (u, v)}
                )
    return None


def rule_x_elim(st: _State) -> RuleApplication | None:
    if not st.x:
        return None
    a = min(st.x)
    fresh_y = tuple(sorted(st.adj[a] - st.y))
    return RuleApplication(
        "x_elim", removed_vertices=(a,), y_added=fresh_y, payload={"vertex": a}
    )


def rule_low_degree(st: _State, c: int) -> RuleApplication | None:
    """Delete a non-Y vertex of degree 1..c; its neighborhood becomes X and is
    paid into D while the vertex itself joins P."""
    assert not st.x, "low-degree rule requires X exhausted first"
    best = None
    for a in st.adj:
        d = st.deg(a)
        if a not in st.y and 1 <= d <= c:
            key = (d, a)
            if best is None or key < best:
                best = key
    if best is None:
        return None
    a = best[1]
    nbrs = tuple(sorted(st.adj[a]))
    return RuleApplication(
        "low_degree",
        removed_vertices=(a,),
        x_added=nbrs,
        payload={"vertex": a, "neighbors": nbrs, "budget": c},
    )


def _unwind_shared(app: RuleApplication, d: set, p: set) -> bool:
    """Unwind for the shared rules; returns False if the rule is unknown."""
    rid = app.rule_id
    if rid == "isolated":
        if app.payload["case"] == "free":
            v = app.payload["vertex"]
            d.add(v)
            p.add(v)
        return True
    if rid in ("y_pendant", "y_edge", "x_elim"):
        return True
    if rid == "low_degree":
        d.update(app.payload["neighbors"])
        p.add(app.payload["vertex"])
        return True
    return False


def _check_budget(d, p, constant, extra, trace, label):
    bound = constant * len(p) + extra
    if len(d) > bound:
        raise GuaranteeViolated(
            f"{label}: |D|={len(d)} exceeds {constant}*|P|+{extra}={bound}", trace
        )


def _validate_witness(inst: XYInstance, d, p, label, trace):
    if not check_xy_dominating(inst, d):
        raise EngineError(f"{label}: emitted D fails the dominating checker")
    if not check_xy_packing(inst, p):
        raise EngineError(f"{label}: emitted P fails the packing checker")


# ---------------------------------------------------------------------------
# Planar driver
# ---------------------------------------------------------------------------

PLANAR_CONSTANT = 10


def run_planar(g: Graph, embedding=None) -> WitnessPair:
    """Reduce with the generic rules, paying at most 10 per packed vertex.

    Planarity guarantees the loop never stalls; on non-planar input the loop
    either still succeeds (the witness is sound regardless) or raises Stalled.
    An embedding, when supplied, is validated up front.
    """
    if not g.is_plain():
        raise EngineError("planar driver expects a plain graph")
    if embedding is not None:
        from .families import validate_rotation_planarity

        if not validate_rotation_planarity(g, embedding):
            raise CertificateInvalid("rotation system fails the genus-0 face count")
    st = _State.from_graph(g)
    trace: list[RuleApplication] = []
    while st.adj:
        app = (
            rule_isolated(st)
            or rule_y_pendant(st)
            or rule_y_edge(st)
            or rule_x_elim(st)
            or rule_low_degree(st, PLANAR_CONSTANT)
        )
        if app is None:
            raise Stalled("planar rules stalled (non-planar input?)", st.describe(), trace)
        st.apply(app)
        trace.append(app)
    d: set[int] = set()
    p: set[int] = set()
    for app in reversed(trace):
        if not _unwind_shared(app, d, p):
            raise EngineError(f"unknown rule {app.rule_id}")
        _check_budget(d, p, PLANAR_CONSTANT, 0, trace, "planar")
    inst = XYInstance(g)
    _validate_witness(inst, d, p, "planar", trace)
    return WitnessPair(
        frozenset(d), frozenset(p), "planar", Fraction(PLANAR_CONSTANT),
        tuple(trace), _ratio(d, p),
    )


# ---------------------------------------------------------------------------
# Treewidth driver
# ---------------------------------------------------------------------------


def _simplicial(compl_adj: dict[int, set[int]], within=None) -> list[int]:
    """Vertices whose (restricted) completion neighborhood induces a clique."""
    verts = within if within is not None else compl_adj.keys()
    out = []
    for v in sorted(verts):
        nb = [u for u in compl_adj[v] if within is None or u in verts]
        if all(b in compl_adj[a] for i, a in enumerate(nb) for b in nb[i + 1 :]):
            out.append(v)
    return out


def _dist2_set(st: _State, v: int, targets) -> set[int]:
    """Targets at graph distance exactly 2 from v in the working graph."""
    ring1 = st.adj[v]
    ring2 = set()
    for u in ring1:
        ring2 |= st.adj[u]
    ring2 -= ring1
    ring2.discard(v)
    return {c for c in targets if c in ring2}


def _tw_class_step(st: _State, compl: dict[int, set[int]], k: int, trace) -> RuleApplication:
    a1 = _simplicial(compl)
    bad = [v for v in a1 if v not in st.y]
    if bad:
        raise Stalled(f"simplicial vertices {bad} escaped Y", st.describe(), trace)
    rest = set(compl) - set(a1)
    if not rest:
        raise Stalled("completion exhausted with instance nonempty", st.describe(), trace)
    a2 = _simplicial(compl, rest)
    if not a2:
        raise Stalled("no second-layer simplicial vertex", st.describe(), trace)
    v = a2[0]
    b = compl[v] & set(a1)
    if not b:
        raise Stalled(f"class-step vertex {v} has no first-layer neighbor", st.describe(), trace)
    c = compl[v] - set(a1)
    c1 = tuple(sorted(c & st.adj[v]))
    c2 = tuple(sorted(_dist2_set(st, v, c - st.adj[v])))
    c2_cover = tuple(
        sorted(min(st.adj[v] & st.adj[cv]) for cv in c2)
    )
    return RuleApplication(
        "tw_class_step",
        removed_vertices=(v,),
        x_added=c1,
        y_added=tuple(sorted(set(c2) - st.y)),
        payload={"vertex": v, "c1": c1, "c2": c2, "c2_cover": c2_cover, "k": k},
    )


def run_treewidth(g: Graph, chordal_completion: Graph, k: int) -> WitnessPair:
    """Certified gamma <= k*rho via a validated chordal completion of width k."""
    from .families import validate_tw_certificate

    if not g.is_plain():
        raise EngineError("treewidth driver expects a plain graph")
    if not validate_tw_certificate(g, chordal_completion, k):
        raise CertificateInvalid(
            "completion is not a chordal supergraph on the same vertices with clique number <= k+1"
        )
    st = _State.from_graph(g)
    compl = {v: set(chordal_completion.adj[v]) for v in chordal_completion.vertices()}
    trace: list[RuleApplication] = []
    while st.adj:
        app = (
            rule_isolated(st)
            or rule_y_pendant(st)
            or rule_y_edge(st)
            or rule_x_elim(st)
            or rule_low_degree(st, k)
            or _tw_class_step(st, compl, k, trace)
        )
        st.apply(app)
        for v in app.removed_vertices:
            for w in compl[v]:
                compl[w].discard(v)
            del compl[v]
        trace.append(app)
    d: set[int] = set()
    p: set[int] = set()
    for app in reversed(trace):
        if app.rule_id == "tw_class_step":
            pay = app.payload
            if pay["c1"] or pay["c2"]:
                addition = set(pay["c1"]) | set(pay["c2_cover"])
                if len(addition) > k:
                    raise GuaranteeViolated(
                        f"class step at {pay['vertex']} pays {len(addition)} > k={k}", trace
                    )
                d.update(addition)
            else:
                d.add(pay["vertex"])
            p.add(pay["vertex"])
        elif not _unwind_shared(app, d, p):
            raise EngineError(f"unknown rule {app.rule_id}")
        _check_budget(d, p, k, 0, trace, "treewidth")
    inst = XYInstance(g)
    _validate_witness(inst, d, p, "treewidth", trace)
    return WitnessPair(
        frozenset(d), frozenset(p), "treewidth", Fraction(k), tuple(trace), _ratio(d, p)
    )


# ---------------------------------------------------------------------------
# Distance-hereditary driver (total domination, budget 2)
# ---------------------------------------------------------------------------

DH_CONSTANT = 2


def _dh_y_prune(st: _State) -> RuleApplication | None:
    for a in sorted(st.y):
        if len(st.adj[a] - st.y) <= 1:
            return RuleApplication("dh_y_prune", removed_vertices=(a,), payload={"vertex": a})
    return None


def _dh_pendant(st: _State) -> RuleApplication | None:
    for u in sorted(st.adj):
        if u in st.y or st.deg(u) != 1:
            continue
        v = next(iter(st.adj[u]))
        fresh_y = tuple(sorted((st.adj[v] - {u}) - st.y))
        return RuleApplication(
            "dh_pendant",
            removed_vertices=(u, v),
            y_added=fresh_y,
            payload={"pendant": u, "support": v},
        )
    return None


def _dh_twins(st: _State) -> RuleApplication | None:
    verts = sorted(st.adj)
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            open_twin = st.adj[u] == st.adj[v]
            closed_twin = (v in st.adj[u]) and (st.adj[u] - {v}) == (st.adj[v] - {u})
            if not (open_twin or closed_twin):
                continue
            victim = u if u in st.y else (v if v in st.y else u)
            return RuleApplication(
                "dh_twin",
                removed_vertices=(victim,),
                payload={"pair": (u, v), "victim": victim},
            )
    return None


def run_distance_hereditary(g: Graph, y=()) -> WitnessPair:
    """Total-domination witness with |D| <= 2|P| via pendant/twin pruning.

    Stalls exactly when the pruning characterization fails, i.e. the input is
    not distance-hereditary.
    """
    if not g.is_plain():
        raise EngineError("distance-hereditary driver expects a plain graph")
    y0 = g.check_vertex_set(y)
    st = _State.from_graph(g, y=y0)
    trace: list[RuleApplication] = []
    while st.adj:
        # Pendants go first: pruning a Y-vertex whose only free neighbor is a
        # pendant would isolate that pendant in the child and lose its
        # total-domination obligation.
        app = rule_isolated(st) or _dh_pendant(st) or _dh_y_prune(st) or _dh_twins(st)
        if app is None:
            raise Stalled("pruning stalled (not distance-hereditary?)", st.describe(), trace)
        st.apply(app)
        trace.append(app)
    d: set[int] = set()
    p: set[int] = set()
    for app in reversed(trace):
        if app.rule_id == "dh_pendant":
            d.add(app.payload["pendant"])
            d.add(app.payload["support"])
            p.add(app.payload["pendant"])
        elif app.rule_id in ("dh_y_prune", "dh_twin"):
            pass
        elif not _unwind_shared(app, d, p):
            raise EngineError(f"unknown rule {app.rule_id}")
        _check_budget(d, p, DH_CONSTANT, 0, trace, "distance-hereditary")
    inst = XYInstance(g, y_set=y0, mode=Mode.TOTAL)
    _validate_witness(inst, d, p, "distance-hereditary", trace)
    return WitnessPair(
        frozenset(d), frozenset(p), "distance-hereditary", Fraction(DH_CONSTANT),
        tuple(trace), _ratio(d, p),
    )
