"""Recursive lower bound for the degree of the area relation of a
triangulated quadrilateral.

The recursion: eliminate mosquitos, delete subdivisions, then absorb
("kill") one triangle into the collinearity condition.  A kill with a
nonempty condition branches in two — contract the shared edge, or grow the
condition — and the bound adds the branches (growths containing mosquitos
are discarded).  States with nothing left to kill are linear and score 1.
Different kill choices give different valid bounds, so the search strategy
matters; the exhaustive strategy maximizes over every choice, optionally
augmented by condition-local diagonal flips that let the recursion reach
deeper (each flip preserves the area relation, so its bound still applies).
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import (
    BadParameters,
    BudgetExceeded,
    MonskyError,
    NotAQuadrilateral,
    NotNonSeparating,
)
from .moves import (
    delete_subdivision,
    eliminate_mosquito,
    flip_within_condition,
    kill,
    subdivision_regions,
)
from .triangulation import (
    Triangulation,
    canonical_key,
    edge_key,
    is_non_separating,
    killable_triangles,
    linearity_type,
    mosquitos,
    subdivisions,
)

logger = logging.getLogger(__name__)

KINDS = ("greedy", "exhaustive", "random")


@dataclass(frozen=True)
class Strategy:
    """Search configuration.

    kind: "greedy" follows the first admissible branch everywhere;
    "exhaustive" maximizes over all branches with memoization on canonical
    keys; "random" samples `restarts` uniformly random runs and keeps the
    best.  `use_trick` additionally branches on face-count-reducing diagonal
    flips inside the condition.  `max_nodes` / `max_seconds` bound the
    search; an exhausted budget downgrades to a greedy (still valid) bound.
    """

    kind: str = "exhaustive"
    restarts: int = 1
    seed: int | str = 0
    use_trick: bool = False
    max_nodes: int | None = None
    max_seconds: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadParameters(f"unknown strategy kind {self.kind!r}")
        if not isinstance(self.restarts, int) or self.restarts < 1:
            raise BadParameters("restarts must be a positive integer")
        if self.max_nodes is not None and self.max_nodes < 1:
            raise BadParameters("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise BadParameters("max_seconds must be positive")


@dataclass(frozen=True)
class TraceNode:
    """One step of a derivation.  kind is one of mosquito, subdivision, flip,
    kill, linear, discarded; `value` is the bound contributed by the subtree
    (1 at linear leaves, 0 at discarded leaves, the child sum at kills)."""

    kind: str
    value: int
    children: tuple["TraceNode", ...] = ()
    data: dict = field(default_factory=dict)


class DegreeResult(NamedTuple):
    d: int
    trace: TraceNode
    complete: bool


def _pairs(vmap: dict[int, int]) -> list[list[int]]:
    return [[a, b] for a, b in sorted(vmap.items())]


def _cert_json(cert):
    if cert is None:
        return None
    kind, payload = cert
    return [kind, list(payload) if isinstance(payload, tuple) else payload]


class _Budget:
    def __init__(self, max_nodes: int | None, max_seconds: float | None):
        self.max_nodes = max_nodes
        self.deadline = None if max_seconds is None else time.monotonic() + max_seconds
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded(f"node budget of {self.max_nodes} exhausted")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded("time budget exhausted")


_FREE = _Budget(None, None)


def _normalize(t: Triangulation):
    """Apply the two unary phases to a fixed point: eliminate the lowest
    mosquito (rescanning), then delete the innermost subdivision, returning
    to the mosquito scan after each deletion."""
    steps = []
    while True:
        ms = sorted(mosquitos(t))
        if ms:
            v = ms[0]
            t, vmap = eliminate_mosquito(t, v)
            steps.append(("mosquito", {"vertex": v, "vertex_map": _pairs(vmap)}))
            continue
        regions = subdivision_regions(t)
        if regions:
            tri, _region = min(regions, key=lambda pair: (len(pair[1]), pair[0]))
            t, vmap = delete_subdivision(t, tri)
            steps.append(("subdivision", {"triple": list(tri), "vertex_map": _pairs(vmap)}))
            continue
        return t, steps


def _flip_candidates(t: Triangulation) -> list[tuple[int, int, int, int]]:
    out = set()
    cx, c = t.complex, t.condition
    for e in cx.edges:
        fs = cx.edge_faces[e]
        if len(fs) != 2:
            continue
        quad = set(cx.triangles[fs[0]]) | set(cx.triangles[fs[1]])
        if len(quad) != 4 or not quad <= c:
            continue
        w, z = sorted(quad - set(e))
        if edge_key(w, z) in cx.edge_faces:
            continue
        out.add(tuple(sorted(quad)))
    return sorted(out)


def _productive_flips(t: Triangulation):
    """Flips whose result loses triangles after normalization; branching only
    on these keeps the recursion well-founded."""
    found = []
    for quad in _flip_candidates(t):
        flipped = flip_within_condition(t, quad)
        normalized, _ = _normalize(flipped)
        if len(normalized.complex.triangles) < len(t.complex.triangles):
            found.append((quad, flipped))
    return found


def _wrap(steps, node: TraceNode) -> TraceNode:
    for kind, data in reversed(steps):
        node = TraceNode(kind, node.value, (node,), data)
    return node


def _discarded_leaf(second: Triangulation) -> TraceNode:
    return TraceNode("discarded", 0, (), {"mosquitos": sorted(mosquitos(second))})


def _kill_node(delta, out, prime_node: TraceNode, second_node: TraceNode | None) -> TraceNode:
    children = (prime_node,) if second_node is None else (prime_node, second_node)
    value = sum(ch.value for ch in children if ch.kind != "discarded")
    data = {
        "triangle": sorted(delta),
        "edge": None if out.edge is None else list(out.edge),
        "vertex_map": _pairs(out.prime_map),
    }
    return TraceNode("kill", value, children, data)


def _flip_node(quad, t: Triangulation, child: TraceNode) -> TraceNode:
    identity = {v: v for v in range(t.complex.vertex_count)}
    return TraceNode("flip", child.value, (child,), {"quad": list(quad), "vertex_map": _pairs(identity)})


def _linear_leaf(t: Triangulation) -> TraceNode:
    return TraceNode("linear", 1, (), {"certificate": _cert_json(linearity_type(t))})


# --- exhaustive -----------------------------------------------------------


def _exhaustive_value(t: Triangulation, memo, budget: _Budget, use_trick: bool) -> int:
    norm, _steps = _normalize(t)
    key = canonical_key(norm)
    hit = memo.get(key)
    if hit is not None:
        return hit
    budget.tick()
    kills = killable_triangles(norm)
    values = []
    for delta in kills:
        out = kill(norm, delta)
        v = _exhaustive_value(out.prime, memo, budget, use_trick)
        if out.second is not None and not out.discarded:
            v += _exhaustive_value(out.second, memo, budget, use_trick)
        values.append(v)
    if not kills:
        values.append(1)
    if use_trick:
        for _quad, flipped in _productive_flips(norm):
            values.append(_exhaustive_value(flipped, memo, budget, use_trick))
    value = max(values)
    memo[key] = value
    return value


def _exhaustive_trace(t: Triangulation, memo, use_trick: bool) -> TraceNode:
    """Rebuild a maximizing run from the filled memo table, preferring kill
    branches (in enumeration order) over flips, and the plain linear stop
    over value-1 flips."""
    norm, steps = _normalize(t)

    def value_of(state):
        return _exhaustive_value(state, memo, _FREE, use_trick)

    scored = []
    kills = killable_triangles(norm)
    for delta in kills:
        out = kill(norm, delta)
        v = value_of(out.prime)
        if out.second is not None and not out.discarded:
            v += value_of(out.second)
        scored.append((v, "kill", delta, out))
    if not kills:
        scored.append((1, "linear", None, None))
    if use_trick:
        for quad, flipped in _productive_flips(norm):
            scored.append((value_of(flipped), "flip", quad, flipped))

    best = max(v for v, *_ in scored)
    for v, tag, arg, payload in scored:
        if v != best:
            continue
        if tag == "linear":
            return _wrap(steps, _linear_leaf(norm))
        if tag == "kill":
            out = payload
            prime_node = _exhaustive_trace(out.prime, memo, use_trick)
            second_node = None
            if out.second is not None:
                second_node = (
                    _discarded_leaf(out.second)
                    if out.discarded
                    else _exhaustive_trace(out.second, memo, use_trick)
                )
            return _wrap(steps, _kill_node(arg, out, prime_node, second_node))
        return _wrap(steps, _flip_node(arg, norm, _exhaustive_trace(payload, memo, use_trick)))
    raise AssertionError("unreachable: no branch matched its own maximum")


# --- greedy and random ----------------------------------------------------


def _run(t: Triangulation, use_trick: bool, budget: _Budget, chooser) -> TraceNode:
    """One complete derivation.  `chooser(options)` picks the branch index;
    options are kill branches in enumeration order, then (with no kills) the
    linear stop, then productive flips when the trick is enabled."""
    budget.tick()
    norm, steps = _normalize(t)
    kills = killable_triangles(norm)
    options: list[tuple] = [("kill", d) for d in kills]
    if not kills:
        options.append(("linear", None))
    if use_trick:
        options.extend(("flip", qf) for qf in _productive_flips(norm))
    tag, arg = options[chooser(len(options))]
    if tag == "linear":
        return _wrap(steps, _linear_leaf(norm))
    if tag == "kill":
        out = kill(norm, arg)
        prime_node = _run(out.prime, use_trick, budget, chooser)
        second_node = None
        if out.second is not None:
            second_node = (
                _discarded_leaf(out.second)
                if out.discarded
                else _run(out.second, use_trick, budget, chooser)
            )
        return _wrap(steps, _kill_node(arg, out, prime_node, second_node))
    quad, flipped = arg
    return _wrap(steps, _flip_node(quad, norm, _run(flipped, use_trick, budget, chooser)))


def _greedy(t: Triangulation, use_trick: bool) -> TraceNode:
    return _run(t, use_trick, _Budget(None, None), lambda n: 0)


def degree_lower_bound(
    t: Triangulation,
    strategy: Strategy = Strategy(),
    memo: dict | None = None,
) -> DegreeResult:
    """Compute a lower bound for the degree of the area relation, with a
    trace deriving it.  `memo` may be shared across calls to reuse
    exhaustive values between related instances."""
    if t.n != 4:
        raise NotAQuadrilateral(f"the bound is defined for quadrilaterals, not {t.n}-gons")
    if not is_non_separating(t):
        raise NotNonSeparating("the condition separates the complex")

    if strategy.kind == "greedy":
        node = _greedy(t, strategy.use_trick)
        return DegreeResult(node.value, node, True)

    if strategy.kind == "exhaustive":
        if memo is None:
            memo = {}
        budget = _Budget(strategy.max_nodes, strategy.max_seconds)
        try:
            value = _exhaustive_value(t, memo, budget, strategy.use_trick)
        except BudgetExceeded as exc:
            logger.info("exhaustive search stopped early (%s); reporting a greedy bound", exc)
            node = _greedy(t, strategy.use_trick)
            return DegreeResult(node.value, node, False)
        trace = _exhaustive_trace(t, memo, strategy.use_trick)
        assert trace.value == value
        return DegreeResult(value, trace, True)

    # random restarts
    budget = _Budget(strategy.max_nodes, strategy.max_seconds)
    best: TraceNode | None = None
    complete = True
    for i in range(strategy.restarts):
        rng = random.Random(f"{strategy.seed}:{i}")
        try:
            node = _run(t, strategy.use_trick, budget, lambda n: rng.randrange(n))
        except BudgetExceeded:
            complete = False
            break
        if best is None or node.value > best.value:
            best = node
    if best is None:
        best = _greedy(t, strategy.use_trick)
        complete = False
    return DegreeResult(best.value, best, complete)


# --- linearity shortcut ---------------------------------------------------


def is_linear(t: Triangulation):
    """The type D/X certificate of the normalized triangulation, or None.
    Present exactly when the exhaustive bound equals 1."""
    if t.n != 4:
        raise NotAQuadrilateral(f"linearity is defined for quadrilaterals, not {t.n}-gons")
    if not is_non_separating(t):
        raise NotNonSeparating("the condition separates the complex")
    norm, _ = _normalize(t)
    return linearity_type(norm)


# --- serialization and replay ---------------------------------------------


def trace_to_jsonable(node: TraceNode) -> dict:
    return {
        "kind": node.kind,
        "value": node.value,
        "data": node.data,
        "children": [trace_to_jsonable(ch) for ch in node.children],
    }


def trace_from_jsonable(obj) -> TraceNode:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise BadParameters("malformed trace node")
    return TraceNode(
        str(obj["kind"]),
        int(obj["value"]),
        tuple(trace_from_jsonable(ch) for ch in obj.get("children", [])),
        dict(obj.get("data", {})),
    )


def _fail(msg, *args) -> bool:
    logger.warning("replay: " + msg, *args)
    return False


def replay(node: TraceNode, t: Triangulation) -> bool:
    """Re-execute a derivation against `t`, verifying every precondition,
    recorded vertex map, and the value arithmetic.  Returns False (with a
    logged diagnostic) on the first mismatch."""
    try:
        return _replay(node, t)
    except MonskyError as exc:
        return _fail("move failed to re-execute: %s", exc)


def _replay(node: TraceNode, t: Triangulation) -> bool:
    if node.kind == "mosquito":
        v = node.data.get("vertex")
        if v not in mosquitos(t):
            return _fail("%s is not a mosquito here", v)
        t2, vmap = eliminate_mosquito(t, v)
        if _pairs(vmap) != node.data.get("vertex_map"):
            return _fail("mosquito elimination map mismatch at %s", v)
        return _unary_child(node, t2)

    if mosquitos(t):
        return _fail("%s node reached while mosquitos remain", node.kind)

    if node.kind == "subdivision":
        triple = tuple(node.data.get("triple", ()))
        if triple not in subdivisions(t.complex):
            return _fail("%s is not a subdivision here", triple)
        t2, vmap = delete_subdivision(t, triple)
        if _pairs(vmap) != node.data.get("vertex_map"):
            return _fail("subdivision deletion map mismatch at %s", triple)
        return _unary_child(node, t2)

    if subdivisions(t.complex):
        return _fail("%s node reached while subdivisions remain", node.kind)

    if node.kind == "flip":
        quad = tuple(node.data.get("quad", ()))
        t2 = flip_within_condition(t, quad)
        return _unary_child(node, t2)

    if node.kind == "kill":
        delta = tuple(node.data.get("triangle", ()))
        out = kill(t, delta)
        recorded_edge = node.data.get("edge")
        if (None if out.edge is None else list(out.edge)) != recorded_edge:
            return _fail("kill edge mismatch at %s", delta)
        if _pairs(out.prime_map) != node.data.get("vertex_map"):
            return _fail("kill vertex map mismatch at %s", delta)
        expected_children = 1 if out.second is None else 2
        if len(node.children) != expected_children:
            return _fail("kill at %s should have %d children", delta, expected_children)
        prime_node = node.children[0]
        if node.value != sum(ch.value for ch in node.children if ch.kind != "discarded"):
            return _fail("kill value arithmetic broken at %s", delta)
        if not _replay(prime_node, out.prime):
            return False
        if out.second is None:
            return True
        second_node = node.children[1]
        if out.discarded != (second_node.kind == "discarded"):
            return _fail("discard flag mismatch at %s", delta)
        if out.discarded:
            if second_node.value != 0:
                return _fail("discarded branch must contribute 0")
            if sorted(mosquitos(out.second)) != second_node.data.get("mosquitos"):
                return _fail("discarded mosquito set mismatch at %s", delta)
            return True
        return _replay(second_node, out.second)

    if node.kind == "linear":
        if killable_triangles(t):
            return _fail("linear leaf reached with killable triangles remaining")
        if node.value != 1:
            return _fail("linear leaf must have value 1")
        if _cert_json(linearity_type(t)) != node.data.get("certificate"):
            return _fail("linearity certificate mismatch")
        return True

    return _fail("unexpected node kind %r", node.kind)


def _unary_child(node: TraceNode, t2: Triangulation) -> bool:
    if len(node.children) != 1:
        return _fail("%s node must have one child", node.kind)
    if node.value != node.children[0].value:
        return _fail("%s node must propagate its child value", node.kind)
    return _replay(node.children[0], t2)
