"""Combinatorial model: triangulated disks with labeled corners and a
collinearity condition, together with every predicate the search needs.

Vertices are dense integer indices.  Triangles are stored counterclockwise
(with respect to the corner order on the boundary) and rotated so the
smallest vertex comes first; `validate` normalizes arbitrary input to that
convention.  All values here are immutable and safe to share.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    BadCondition,
    BadParameters,
    CountMismatch,
    NotADisk,
    NotAQuadrilateral,
    NotNonSeparating,
    OrientationError,
    PreconditionFailed,
)

VertexId = int
Triangle = tuple[int, int, int]
Edge = tuple[int, int]


def edge_key(a: int, b: int) -> Edge:
    """Unordered edge as a sorted pair."""
    return (a, b) if a < b else (b, a)


def _rotate_min_first(face: Triangle) -> Triangle:
    i = face.index(min(face))
    return face[i:] + face[:i]


@dataclass(frozen=True)
class DiskComplex:
    """A simplicial complex homeomorphic to a disk.

    `corners` lists the boundary vertices in counterclockwise cyclic order;
    every boundary vertex is a corner.  `labels`, when present, aligns with
    `triangles` and names each triangle (used when triangle areas feed
    polynomial variables).
    """

    vertex_count: int
    triangles: tuple[Triangle, ...]
    corners: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.corners)

    @cached_property
    def edge_faces(self) -> dict[Edge, tuple[int, ...]]:
        out: dict[Edge, list[int]] = {}
        for i, (a, b, c) in enumerate(self.triangles):
            for e in (edge_key(a, b), edge_key(b, c), edge_key(a, c)):
                out.setdefault(e, []).append(i)
        return {e: tuple(v) for e, v in out.items()}

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edge_faces))

    @cached_property
    def boundary_edges(self) -> frozenset[Edge]:
        return frozenset(e for e, fs in self.edge_faces.items() if len(fs) == 1)

    @cached_property
    def interior_vertices(self) -> frozenset[int]:
        return frozenset(range(self.vertex_count)) - frozenset(self.corners)

    @cached_property
    def neighbors(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {v: set() for v in range(self.vertex_count)}
        for a, b in self.edge_faces:
            out[a].add(b)
            out[b].add(a)
        return {v: frozenset(s) for v, s in out.items()}

    @cached_property
    def face_index(self) -> dict[frozenset[int], int]:
        return {frozenset(f): i for i, f in enumerate(self.triangles)}

    @cached_property
    def succ(self) -> dict[tuple[int, int], int]:
        """Rotation system: succ[(a, b)] is the third vertex of the triangle
        lying to the left of the directed edge a->b."""
        out: dict[tuple[int, int], int] = {}
        for a, b, c in self.triangles:
            out[(a, b)] = c
            out[(b, c)] = a
            out[(c, a)] = b
        return out

    @cached_property
    def pred(self) -> dict[tuple[int, int], int]:
        return {(v, w): u for (v, u), w in self.succ.items()}

    def fan(self, v: int, start: int, reverse: bool = False) -> list[int]:
        """Neighbors of v in rotation order, anchored at the neighbor `start`.

        For an interior vertex this is the full link cycle beginning at
        `start`; for a boundary vertex the walk is extended backwards so the
        whole link path is returned.
        """
        forward = self.pred if reverse else self.succ
        backward = self.succ if reverse else self.pred
        seq = [start]
        cur = start
        while True:
            nxt = forward.get((v, cur))
            if nxt is None or nxt == start:
                break
            seq.append(nxt)
            cur = nxt
        if forward.get((v, cur)) is None:  # boundary fan: walk the other way too
            cur = start
            while True:
                prv = backward.get((v, cur))
                if prv is None or prv in seq:
                    break
                seq.insert(0, prv)
                cur = prv
        return seq

    def link(self, v: int) -> list[int]:
        """Link of v in rotation order (cycle for interior, path for boundary)."""
        nbrs = self.neighbors[v]
        if not nbrs:
            return []
        if v in self.interior_vertices:
            return self.fan(v, min(nbrs))
        ends = [u for u in nbrs if self.pred.get((v, u)) is None]
        return self.fan(v, ends[0] if ends else min(nbrs))


@dataclass(frozen=True)
class Triangulation:
    """A disk complex together with a collinearity condition (possibly empty)."""

    complex: DiskComplex
    condition: frozenset[int] = frozenset()

    @property
    def n(self) -> int:
        return self.complex.n

    @property
    def corners(self) -> tuple[int, ...]:
        return self.complex.corners

    @property
    def triangles(self) -> tuple[Triangle, ...]:
        return self.complex.triangles

    @cached_property
    def condition_triangles(self) -> frozenset[Triangle]:
        c = self.condition
        return frozenset(f for f in self.complex.triangles if set(f) <= c)


def normalize_condition_members(members: Iterable[int]) -> frozenset[int]:
    """A vertex set smaller than any triangle cannot be a condition; collapse
    it to the empty condition."""
    s = frozenset(members)
    return s if len(s) >= 3 else frozenset()


# ---------------------------------------------------------------------------
# validation


def _structural_error(msg: str) -> NotADisk:
    return NotADisk(msg)


def _orient(vertex_count: int, faces: list[Triangle], corners: tuple[int, ...]) -> list[Triangle]:
    """Flip triangles to a consistent orientation whose induced boundary cycle
    traverses `corners` in order; raise if impossible."""
    directed: dict[Edge, list[tuple[int, tuple[int, int]]]] = {}
    for i, (a, b, c) in enumerate(faces):
        for u, v in ((a, b), (b, c), (c, a)):
            directed.setdefault(edge_key(u, v), []).append((i, (u, v)))

    flip: list[bool | None] = [None] * len(faces)
    flip[0] = False
    queue = deque([0])
    while queue:
        f = queue.popleft()
        for u, v in _directed_edges(faces[f]):
            occ = directed[edge_key(u, v)]
            if len(occ) != 2:
                continue
            (f1, d1), (f2, d2) = occ
            g, dg = (f2, d2) if f1 == f else (f1, d1)
            df = (u, v)
            same_direction = (df == dg)
            want = (not flip[f]) if same_direction else flip[f]
            if flip[g] is None:
                flip[g] = want
                queue.append(g)
            elif flip[g] != want:
                raise OrientationError("the triangles admit no consistent orientation")
    if any(s is None for s in flip):
        raise _structural_error("triangles do not form a single connected surface")

    def apply(global_flip: bool) -> list[Triangle]:
        out = []
        for face, s in zip(faces, flip):
            a, b, c = face
            out.append((a, c, b) if (s ^ global_flip) else (a, b, c))
        return out

    for global_flip in (False, True):
        oriented = apply(global_flip)
        cycle = _boundary_cycle(oriented)
        if cycle is not None and _matches_corner_order(cycle, corners):
            return [_rotate_min_first(f) for f in oriented]
    cycle = _boundary_cycle(apply(False))
    if cycle is None:
        raise _structural_error("boundary edges do not form a single cycle")
    raise _structural_error(
        f"boundary cycle {cycle} does not visit the corners {list(corners)} in order"
    )


def _directed_edges(face: Triangle) -> tuple[tuple[int, int], ...]:
    a, b, c = face
    return ((a, b), (b, c), (c, a))


def _boundary_cycle(faces: list[Triangle]) -> list[int] | None:
    count: dict[Edge, int] = {}
    direction: dict[Edge, tuple[int, int]] = {}
    for f in faces:
        for u, v in _directed_edges(f):
            e = edge_key(u, v)
            count[e] = count.get(e, 0) + 1
            direction[e] = (u, v)
    nxt: dict[int, int] = {}
    boundary = [e for e, c in count.items() if c == 1]
    for e in boundary:
        u, v = direction[e]
        if u in nxt:
            return None
        nxt[u] = v
    if not nxt:
        return None
    start = min(nxt)
    cycle = [start]
    cur = nxt[start]
    while cur != start:
        cycle.append(cur)
        if cur not in nxt or len(cycle) > len(boundary):
            return None
        cur = nxt[cur]
    if len(cycle) != len(boundary):
        return None
    return cycle


def _matches_corner_order(cycle: list[int], corners: tuple[int, ...]) -> bool:
    if set(cycle) != set(corners) or len(cycle) != len(corners):
        return False
    i = cycle.index(corners[0])
    rotated = cycle[i:] + cycle[:i]
    return tuple(rotated) == tuple(corners)


def _check_links(cx: DiskComplex) -> None:
    corner_set = set(cx.corners)
    for v in range(cx.vertex_count):
        incident = [f for f in cx.triangles if v in f]
        if not incident:
            raise _structural_error(f"vertex {v} lies in no triangle")
        degree: dict[int, int] = {}
        link_edges = 0
        for f in incident:
            a, b = (u for u in f if u != v)
            degree[a] = degree.get(a, 0) + 1
            degree[b] = degree.get(b, 0) + 1
            link_edges += 1
        nodes = set(cx.neighbors[v])
        if set(degree) != nodes:
            raise _structural_error(f"vertex {v} has an edge to a vertex outside its star")
        ones = sum(1 for d in degree.values() if d == 1)
        twos = sum(1 for d in degree.values() if d == 2)
        if v in corner_set:
            ok = ones == 2 and ones + twos == len(nodes) and link_edges == len(nodes) - 1
        else:
            ok = twos == len(nodes) and link_edges == len(nodes)
        if not ok:
            raise _structural_error(f"link of vertex {v} is not a single "
                                    + ("path" if v in corner_set else "cycle"))
        # connectivity of the link
        seen = {next(iter(nodes))}
        stack = [next(iter(nodes))]
        adj: dict[int, set[int]] = {u: set() for u in nodes}
        for f in incident:
            a, b = (u for u in f if u != v)
            adj[a].add(b)
            adj[b].add(a)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != nodes:
            raise _structural_error(f"link of vertex {v} is disconnected")


def _check_condition(cx: DiskComplex, members: frozenset[int]) -> None:
    if not members:
        return
    if not members <= set(range(cx.vertex_count)):
        raise BadCondition("condition references unknown vertices")
    if len(members & set(cx.corners)) > 2:
        raise BadCondition("a condition may contain at most two corners")
    inside = [f for f in cx.triangles if set(f) <= members]
    for comp in _dual_components(cx, inside):
        if set().union(*(set(cx.triangles[i]) for i in comp)) == members:
            return
    raise BadCondition(
        "condition is not the vertex set of a contiguous group of triangles"
    )


def _dual_components(cx: DiskComplex, faces: Sequence[Triangle]) -> list[list[int]]:
    idxs = [cx.face_index[frozenset(f)] for f in faces]
    idx_set = set(idxs)
    comps: list[list[int]] = []
    seen: set[int] = set()
    for start in idxs:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            f = stack.pop()
            a, b, c = cx.triangles[f]
            for e in (edge_key(a, b), edge_key(b, c), edge_key(a, c)):
                for g in cx.edge_faces[e]:
                    if g in idx_set and g not in seen:
                        seen.add(g)
                        comp.append(g)
                        stack.append(g)
        comps.append(sorted(comp))
    return comps


def validate(raw_complex, raw_condition: Iterable[int] = ()) -> Triangulation:
    """Check every structural invariant and return a normalized Triangulation.

    `raw_complex` is either a DiskComplex or a mapping with keys
    ``vertices`` (count), ``corners``, ``triangles`` and optionally
    ``labels``; `raw_condition` is an iterable of vertex indices.
    """
    if isinstance(raw_complex, DiskComplex):
        vertex_count = raw_complex.vertex_count
        corners = tuple(raw_complex.corners)
        triangles = [tuple(f) for f in raw_complex.triangles]
        labels = raw_complex.labels
    elif isinstance(raw_complex, Mapping):
        try:
            vertex_count = int(raw_complex["vertices"])
            corners = tuple(int(v) for v in raw_complex["corners"])
            triangles = [tuple(int(v) for v in f) for f in raw_complex["triangles"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise _structural_error(f"malformed complex data: {exc}") from exc
        raw_labels = raw_complex.get("labels")
        labels = tuple(str(s) for s in raw_labels) if raw_labels is not None else None
    else:
        raise _structural_error(f"cannot interpret {type(raw_complex).__name__} as a complex")

    if len(corners) < 3:
        raise _structural_error("at least three corners are required")
    if len(set(corners)) != len(corners):
        raise _structural_error("corners must be distinct")
    if not triangles:
        raise _structural_error("a disk needs at least one triangle")
    for f in triangles:
        if len(f) != 3 or len(set(f)) != 3:
            raise _structural_error(f"bad triangle {f}")
        if not all(0 <= v < vertex_count for v in f):
            raise _structural_error(f"triangle {f} references unknown vertices")
    if not all(0 <= v < vertex_count for v in corners):
        raise _structural_error("corners reference unknown vertices")
    if len({frozenset(f) for f in triangles}) != len(triangles):
        raise _structural_error("duplicate triangle")
    if labels is not None:
        if len(labels) != len(triangles):
            raise BadParameters("labels must align with triangles")
        if len(set(labels)) != len(labels):
            raise BadParameters("labels must be unique")

    probe = DiskComplex(vertex_count, tuple(triangles), corners, labels)
    for e, fs in probe.edge_faces.items():
        if len(fs) > 2:
            raise _structural_error(f"edge {e} lies in {len(fs)} triangles")

    oriented = _orient(vertex_count, triangles, corners)
    cx = DiskComplex(vertex_count, tuple(oriented), corners, labels)

    boundary_vertices = {v for e in cx.boundary_edges for v in e}
    if boundary_vertices != set(corners):
        raise _structural_error("every boundary vertex must be a corner")
    _check_links(cx)

    k = len(cx.interior_vertices)
    if len(cx.triangles) != 2 * k + cx.n - 2:
        raise CountMismatch(
            f"{len(cx.triangles)} triangles but 2k+n-2 = {2 * k + cx.n - 2}"
        )

    members = frozenset(int(v) for v in raw_condition)
    if members and len(members) < 3:
        raise BadCondition("a nonempty condition spans at least one triangle")
    _check_condition(cx, members)
    return Triangulation(cx, members)


# ---------------------------------------------------------------------------
# predicates


def triangles_of(t: Triangulation) -> set[Triangle]:
    """All triangles whose three vertices lie in the condition."""
    return set(t.condition_triangles)


def is_contiguous(cx: DiskComplex, triangle_set: Iterable[Triangle]) -> bool:
    """True iff the triangles induce a connected subgraph of the dual graph.
    The empty set counts as contiguous."""
    faces = [tuple(f) for f in triangle_set]
    for f in faces:
        if frozenset(f) not in cx.face_index:
            raise PreconditionFailed(f"{f} is not a triangle of the complex")
    if not faces:
        return True
    return len(_dual_components(cx, faces)) == 1


def is_non_separating(t: Triangulation) -> bool:
    """Every component of the subgraph on vertices outside the condition
    (edges with both endpoints outside) must contain a corner."""
    c = t.condition
    cx = t.complex
    outside = [v for v in range(cx.vertex_count) if v not in c]
    if not c:
        return True
    adj: dict[int, list[int]] = {v: [] for v in outside}
    for a, b in cx.edge_faces:
        if a not in c and b not in c:
            adj[a].append(b)
            adj[b].append(a)
    corner_set = set(cx.corners)
    seen: set[int] = set()
    for v in outside:
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        stack = [v]
        has_corner = v in corner_set
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
                    has_corner = has_corner or w in corner_set
        if not has_corner:
            return False
    return True


def mosquitos(t: Triangulation) -> set[int]:
    """Condition vertices all of whose neighbors are also in the condition."""
    c = t.condition
    return {v for v in c if t.complex.neighbors[v] <= c}


def subdivisions(cx: DiskComplex | Triangulation) -> list[tuple[int, int, int]]:
    """Vertex triples that span three edges but no triangle (and are not the
    corner set of a triangular boundary)."""
    if isinstance(cx, Triangulation):
        cx = cx.complex
    nbrs = cx.neighbors
    corner_set = frozenset(cx.corners)
    out = []
    for a in range(cx.vertex_count):
        for b in sorted(u for u in nbrs[a] if u > a):
            for c in sorted(u for u in (nbrs[a] & nbrs[b]) if u > b):
                triple = (a, b, c)
                if frozenset(triple) in cx.face_index:
                    continue
                if frozenset(triple) == corner_set:
                    continue
                out.append(triple)
    return out


def is_contractible(cx: DiskComplex | Triangulation, edge: Iterable[int]) -> bool:
    """Interior edge whose endpoints have exactly two common neighbors."""
    if isinstance(cx, Triangulation):
        cx = cx.complex
    a, b = edge
    e = edge_key(a, b)
    faces = cx.edge_faces.get(e)
    if faces is None or len(faces) != 2:
        return False
    return len(cx.neighbors[e[0]] & cx.neighbors[e[1]]) == 2


def contraction_sides(cx: DiskComplex | Triangulation, edge: Iterable[int]) -> tuple[int, int]:
    """The two common neighbors of a contractible edge, sorted."""
    if isinstance(cx, Triangulation):
        cx = cx.complex
    a, b = edge
    common = sorted(cx.neighbors[a] & cx.neighbors[b])
    if len(common) != 2:
        raise PreconditionFailed(f"edge {edge_key(a, b)} is not contractible")
    return common[0], common[1]


def good_edges(t: Triangulation) -> list[tuple[Edge, int]]:
    """Contractible edges usable for contraction, tagged 1 (both endpoints
    outside the condition) or 2 (both inside, exactly one side vertex inside).
    Edges joining two corners are never usable."""
    if not is_non_separating(t):
        raise NotNonSeparating("condition separates the complex")
    cx = t.complex
    c = t.condition
    corner_set = set(cx.corners)
    out: list[tuple[Edge, int]] = []
    for e in cx.edges:
        x, y = e
        if not is_contractible(cx, e):
            continue
        if x in corner_set and y in corner_set:
            continue
        if x not in c and y not in c:
            out.append((e, 1))
        elif x in c and y in c:
            w, z = contraction_sides(cx, e)
            if (w in c) != (z in c):
                out.append((e, 2))
    return out


def joined(x: int, y: int, t: Triangulation) -> bool:
    """Vertices are joined when equal, both in the condition, or adjacent."""
    if x == y:
        return True
    if x in t.condition and y in t.condition:
        return True
    return edge_key(x, y) in t.complex.edge_faces


def linearity_type(t: Triangulation):
    """Certificate that the area relation is linear: ("D", (corner, corner))
    when some pair of opposite corners is joined, else ("X", vertex) when a
    vertex is joined to all four corners, else None."""
    if t.n != 4:
        raise NotAQuadrilateral(f"{t.n} corners")
    p0, p1, p2, p3 = t.corners
    for a, b in ((p0, p2), (p1, p3)):
        if joined(a, b, t):
            return ("D", (a, b))
    for v in range(t.complex.vertex_count):
        if all(joined(v, c, t) for c in t.corners):
            return ("X", v)
    return None


def _kill_edge(t: Triangulation, triangle: Triangle) -> Edge | None:
    """The unique edge of `triangle` with both endpoints in the condition that
    is shared with a condition triangle; None when no such edge exists."""
    c = t.condition
    cond_faces = {frozenset(f) for f in t.condition_triangles}
    cx = t.complex
    found = []
    a, b, cc = triangle
    for e in (edge_key(a, b), edge_key(b, cc), edge_key(a, cc)):
        if e[0] in c and e[1] in c:
            for g in cx.edge_faces[e]:
                if frozenset(cx.triangles[g]) in cond_faces:
                    found.append(e)
                    break
    if len(found) != 1:
        return None
    return found[0]


def killable_triangles(t: Triangulation) -> list[Triangle]:
    """Triangles outside the condition region whose absorption leaves a valid
    non-separating condition.

    With a nonempty condition only triangles hanging off the region boundary
    along an edge inside the condition qualify, and that edge must be
    contractible (and not a corner-corner edge) because the search will
    contract it.
    """
    if not is_non_separating(t):
        raise NotNonSeparating("condition separates the complex")
    cx = t.complex
    c = t.condition
    corner_set = set(cx.corners)
    out = []
    if not c:
        for f in cx.triangles:
            if len(set(f) & corner_set) > 2:
                continue
            if is_non_separating(Triangulation(cx, frozenset(f))):
                out.append(f)
    else:
        cond_faces = {frozenset(f) for f in t.condition_triangles}
        for f in cx.triangles:
            if frozenset(f) in cond_faces:
                continue
            e = _kill_edge(t, f)
            if e is None:
                continue
            if e[0] in corner_set and e[1] in corner_set:
                continue
            if not is_contractible(cx, e):
                continue
            (v,) = set(f) - set(e)
            grown = c | {v}
            if len(grown & corner_set) > 2:
                continue
            try:
                _check_condition(cx, grown)
            except BadCondition:
                continue
            if not is_non_separating(Triangulation(cx, grown)):
                continue
            out.append(f)
    return sorted(out, key=lambda f: (min(f), tuple(sorted(f))))


# ---------------------------------------------------------------------------
# families


def make_diagonal(n: int) -> Triangulation:
    """The quadrilateral with n interior vertices strung along the corner
    diagonal, each fanned to the two off-diagonal corners; labels A1..A{n+1}
    on one side and B1..B{n+1} on the other.  n = 0 gives the two-triangle
    square."""
    if not isinstance(n, int) or n < 0:
        raise BadParameters("n must be a nonnegative integer")
    P, Q, R, S = 0, 1, 2, 3
    chain = [P] + [3 + i for i in range(1, n + 1)] + [R]
    faces = []
    labels = []
    for i in range(1, n + 2):
        faces.append((S, chain[i - 1], chain[i]))
        labels.append(f"A{i}")
    for i in range(1, n + 2):
        faces.append((Q, chain[i], chain[i - 1]))
        labels.append(f"B{i}")
    raw = {
        "vertices": n + 4,
        "corners": [P, Q, R, S],
        "triangles": [list(f) for f in faces],
        "labels": labels,
    }
    return validate(raw, ())


def make_exploded(n: int, k: int) -> Triangulation:
    """The diagonal family with k chain segments of length two pushed off the
    diagonal: each odd chain vertex p_{2i-1} (i <= k) acquires a twin, and the
    sliver between twin and chain is triangulated."""
    if not isinstance(n, int) or not isinstance(k, int) or n < 0 or k < 0 or 2 * k > n + 1:
        raise BadParameters("need 0 <= 2k <= n+1")
    P, Q, R, S = 0, 1, 2, 3
    chain = [P] + [3 + i for i in range(1, n + 1)] + [R]
    twin = {2 * i - 1: n + 3 + i for i in range(1, k + 1)}
    faces: list[Triangle] = []
    labels: list[str] = []
    for i in range(0, n + 1):
        faces.append((S, chain[i], chain[i + 1]))
        labels.append(f"A{i + 1}")
    for i in range(1, k + 1):
        j = 2 * i - 1
        faces.append((Q, twin[j], chain[2 * i - 2]))
        labels.append(f"BL{j}")
        faces.append((Q, chain[2 * i], twin[j]))
        labels.append(f"BR{j}")
    for i in range(2 * k, n + 1):
        faces.append((Q, chain[i + 1], chain[i]))
        labels.append(f"B{i + 1}")
    for i in range(1, k + 1):
        j = 2 * i - 1
        faces.append((chain[2 * i - 2], twin[j], chain[j]))
        labels.append(f"SL{j}")
        faces.append((chain[2 * i], chain[j], twin[j]))
        labels.append(f"SR{j}")
    raw = {
        "vertices": n + k + 4,
        "corners": [P, Q, R, S],
        "triangles": [list(f) for f in faces],
        "labels": labels,
    }
    return validate(raw, ())


# ---------------------------------------------------------------------------
# canonical form


def _framings(corners: tuple[int, ...]):
    n = len(corners)
    for r in range(n):
        rot = corners[r:] + corners[:r]
        yield rot, False
        yield (rot[0],) + tuple(reversed(rot[1:])), True


def _signature(t: Triangulation, frame: tuple[int, ...], mirrored: bool):
    cx = t.complex
    label: dict[int, int] = {frame[0]: 0}
    order = [frame[0]]
    anchor: dict[int, int] = {frame[0]: frame[1]}
    queue = deque([frame[0]])
    while queue:
        v = queue.popleft()
        for w in cx.fan(v, anchor[v], reverse=mirrored):
            if w not in label:
                label[w] = len(order)
                order.append(w)
                anchor[w] = v
                queue.append(w)
    faces = sorted(tuple(sorted(label[u] for u in f)) for f in cx.triangles)
    cond = tuple(sorted(label[v] for v in t.condition))
    frame_sig = tuple(label[c] for c in frame)
    key = (cx.n, cx.vertex_count, tuple(faces), cond, frame_sig)
    return key, label


def canonical_map(t: Triangulation):
    """(canonical key, relabeling dict) minimizing over the eight framings of
    the square; equal keys identify triangulations related by a symmetry of
    the corner cycle plus any renumbering of the other vertices."""
    if t.n != 4:
        raise NotAQuadrilateral("canonical form is defined for quadrilaterals")
    best = None
    for frame, mirrored in _framings(t.corners):
        key, label = _signature(t, frame, mirrored)
        if best is None or key < best[0]:
            best = (key, label)
    return best


def canonical_key(t: Triangulation):
    return canonical_map(t)[0]


def isomorphism(t1: Triangulation, t2: Triangulation) -> dict[int, int] | None:
    """A vertex bijection t1 -> t2 respecting triangles, corner frame, and
    condition, or None."""
    k1, m1 = canonical_map(t1)
    k2, m2 = canonical_map(t2)
    if k1 != k2:
        return None
    inv2 = {v: k for k, v in m2.items()}
    return {v: inv2[m1[v]] for v in m1}


# ---------------------------------------------------------------------------
# serialization


def to_jsonable(t: Triangulation) -> dict:
    out = {
        "vertices": t.complex.vertex_count,
        "corners": list(t.complex.corners),
        "triangles": [list(f) for f in t.complex.triangles],
        "condition": sorted(t.condition),
    }
    if t.complex.labels is not None:
        out["labels"] = list(t.complex.labels)
    return out


def to_json(t: Triangulation) -> str:
    return json.dumps(to_jsonable(t), indent=2, sort_keys=True) + "\n"


def from_jsonable(obj: Mapping) -> Triangulation:
    if not isinstance(obj, Mapping):
        raise NotADisk("triangulation file must hold a JSON object")
    return validate(obj, obj.get("condition", ()))


def from_json(text: str) -> Triangulation:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise NotADisk(f"invalid JSON: {exc}") from exc
    return from_jsonable(obj)


def with_labels(t: Triangulation, labels: Sequence[str]) -> Triangulation:
    """Copy of t with the given per-triangle labels (aligned with storage order)."""
    if len(labels) != len(t.complex.triangles):
        raise BadParameters("labels must align with triangles")
    return Triangulation(replace(t.complex, labels=tuple(labels)), t.condition)
