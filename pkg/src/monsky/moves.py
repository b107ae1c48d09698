"""State-changing operations on triangulations: edge contraction, mosquito
elimination, subdivision deletion, the kill step, and the condition-local
diagonal flip.

Every operation returns fresh validated values plus a VertexMap sending each
old vertex that still exists (possibly merged) to its new index, so callers
can transport coordinates, labels, or conditions across a chain of moves.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    ConditionMismatch,
    NotAMosquito,
    NotASubdivision,
    NotGoodEdge,
    NotKillable,
    PreconditionFailed,
)
from .triangulation import (
    DiskComplex,
    Edge,
    Triangle,
    Triangulation,
    contraction_sides,
    edge_key,
    good_edges,
    killable_triangles,
    mosquitos,
    normalize_condition_members,
    subdivisions,
    validate,
)

VertexMap = dict[int, int]


def identity_map(t: Triangulation) -> VertexMap:
    return {v: v for v in range(t.complex.vertex_count)}


def _finish(
    t: Triangulation,
    faces: list[Triangle],
    members,
    image: dict[int, int],
) -> tuple[Triangulation, VertexMap]:
    """Renumber to dense indices and validate.  `faces` and `members` use the
    representative ids recorded in `image` (old id -> surviving old id)."""
    used = sorted({v for f in faces for v in f})
    dense = {v: i for i, v in enumerate(used)}
    new_t = validate(
        {
            "vertices": len(used),
            "corners": [dense[image[c]] for c in t.corners],
            "triangles": [[dense[v] for v in f] for f in faces],
        },
        [dense[v] for v in members],
    )
    return new_t, {old: dense[rep] for old, rep in image.items()}


def contract(t: Triangulation, edge) -> tuple[Triangulation, VertexMap]:
    """Contract a good edge: drop its two triangles, merge the endpoints
    (keeping a corner when one endpoint is a corner), and restrict the
    condition to the vertices its surviving triangles still span."""
    e = edge_key(*edge)
    tagged = dict(good_edges(t))
    if e not in tagged:
        raise NotGoodEdge(f"edge {e} is not a good edge of this triangulation")
    x, y = e
    w, z = contraction_sides(t.complex, e)
    corner_set = set(t.corners)
    keep = x if x in corner_set else (y if y in corner_set else min(x, y))
    gone = y if keep == x else x

    dropped = {frozenset({w, x, y}), frozenset({x, y, z})}
    faces = [
        tuple(keep if v == gone else v for v in f)
        for f in t.complex.triangles
        if frozenset(f) not in dropped
    ]

    if t.condition <= {w, x, y, z}:
        members: set[int] = set()
    else:
        survivors = [set(f) for f in t.condition_triangles if frozenset(f) not in dropped]
        members = set().union(*survivors) if survivors else set()
        members = {keep if v == gone else v for v in members}
        members = set(normalize_condition_members(members))

    image = {v: (keep if v == gone else v) for v in range(t.complex.vertex_count)}
    return _finish(t, faces, members, image)


def eliminate_mosquito(t: Triangulation, v: int) -> tuple[Triangulation, VertexMap]:
    """Remove a mosquito and re-triangulate its link polygon by a fan.  The
    fan apex is the lowest-indexed link vertex whose fan avoids triangles the
    complex already has elsewhere (the next candidate is tried otherwise)."""
    if v not in mosquitos(t):
        raise NotAMosquito(f"vertex {v} is not a mosquito")
    cx = t.complex
    link = cx.link(v)
    keep_faces = [f for f in cx.triangles if v not in f]
    existing = {frozenset(f) for f in keep_faces}

    fan: list[Triangle] | None = None
    for anchor in sorted(link):
        i = link.index(anchor)
        cyc = link[i:] + link[:i]
        candidate = [(anchor, cyc[j], cyc[j + 1]) for j in range(1, len(cyc) - 1)]
        if not any(frozenset(f) in existing for f in candidate):
            fan = candidate
            break
    if fan is None:
        raise PreconditionFailed(f"no fan re-triangulation of the link of {v} is available")

    members = t.condition - {v}
    image = {u: u for u in range(cx.vertex_count) if u != v}
    return _finish(t, keep_faces + fan, members, image)


def _enclosed_region(cx: DiskComplex, triple: tuple[int, int, int]) -> list[int]:
    """Indices of the faces strictly inside the three edges of `triple`: the
    unique dual component, after cutting those edges, whose own boundary
    consists of cut edges only."""
    a, b, c = triple
    cut = {edge_key(a, b), edge_key(b, c), edge_key(a, c)}
    adj: dict[int, list[int]] = {i: [] for i in range(len(cx.triangles))}
    for e, fs in cx.edge_faces.items():
        if len(fs) == 2 and e not in cut:
            adj[fs[0]].append(fs[1])
            adj[fs[1]].append(fs[0])
    seen: set[int] = set()
    regions = []
    for start in range(len(cx.triangles)):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            f = stack.pop()
            for g in adj[f]:
                if g not in seen:
                    seen.add(g)
                    comp.append(g)
                    stack.append(g)
        edge_count: dict[Edge, int] = {}
        for i in comp:
            p, q, r = cx.triangles[i]
            for e in (edge_key(p, q), edge_key(q, r), edge_key(p, r)):
                edge_count[e] = edge_count.get(e, 0) + 1
        if all(e in cut for e, n in edge_count.items() if n == 1):
            regions.append(sorted(comp))
    if len(regions) != 1:
        raise NotASubdivision(f"{triple} does not enclose a unique region")
    return regions[0]


def subdivision_regions(t: Triangulation) -> list[tuple[tuple[int, int, int], list[int]]]:
    """Each subdivision paired with the face indices it encloses."""
    return [(s, _enclosed_region(t.complex, s)) for s in subdivisions(t.complex)]


def delete_subdivision(t: Triangulation, triple) -> tuple[Triangulation, VertexMap]:
    """Replace everything strictly inside the span of `triple` by the single
    triangle on those three vertices."""
    tri = tuple(sorted(int(v) for v in triple))
    if tri not in subdivisions(t.complex):
        raise NotASubdivision(f"{tri} is not a subdivision")
    if set(tri) <= t.condition:
        raise PreconditionFailed("cannot delete a subdivision spanned by the condition")
    cx = t.complex
    region = set(_enclosed_region(cx, tri))
    removed_vertices = {v for i in region for v in cx.triangles[i]} - set(tri)
    faces = [f for i, f in enumerate(cx.triangles) if i not in region] + [tri]

    survivors = set(range(cx.vertex_count)) - removed_vertices
    restricted = t.condition & survivors
    kept_cond = {frozenset(f) for f in t.condition_triangles} & {frozenset(f) for f in faces}
    spanned = {v for f in kept_cond for v in f}
    if normalize_condition_members(restricted) != normalize_condition_members(spanned):
        raise ConditionMismatch(
            f"deleting {tri}: surviving condition vertices {sorted(restricted)} "
            f"disagree with the span {sorted(spanned)} of surviving condition triangles"
        )
    members = normalize_condition_members(restricted)
    image = {v: v for v in survivors}
    return _finish(t, faces, members, image)


def _kill_edge(t: Triangulation, triangle: Triangle) -> Edge:
    c = t.condition
    cond_faces = {frozenset(f) for f in t.condition_triangles}
    for a, b in combinations(sorted(triangle), 2):
        if a in c and b in c:
            for g in t.complex.edge_faces[edge_key(a, b)]:
                if frozenset(t.complex.triangles[g]) in cond_faces:
                    return edge_key(a, b)
    raise NotKillable(f"{triangle} shares no condition edge with the condition region")


@dataclass(frozen=True)
class KillOutcome:
    """Result of absorbing one triangle into the condition.

    With an empty condition there is a single successor (`second` is None and
    `prime` is the same complex conditioned on the killed triangle).  With a
    nonempty condition, `prime` is the contraction along the shared edge and
    `second` grows the condition by the killed triangle's apex; `discarded`
    marks a `second` that contains mosquitos and contributes nothing.
    """

    prime: Triangulation
    prime_map: VertexMap
    second: Triangulation | None
    discarded: bool
    edge: Edge | None


def kill(t: Triangulation, triangle) -> KillOutcome:
    face = frozenset(int(v) for v in triangle)
    if face not in {frozenset(f) for f in killable_triangles(t)}:
        raise NotKillable(f"{tuple(sorted(face))} is not killable here")
    stored = t.complex.triangles[t.complex.face_index[face]]
    if not t.condition:
        prime = Triangulation(t.complex, frozenset(stored))
        return KillOutcome(prime, identity_map(t), None, False, None)
    e = _kill_edge(t, stored)
    second = Triangulation(t.complex, t.condition | face)
    discarded = bool(mosquitos(second))
    prime, vmap = contract(t, e)
    return KillOutcome(prime, vmap, second, discarded, e)


def flip_within_condition(t: Triangulation, quad) -> Triangulation:
    """Exchange the diagonal of a quadrilateral all four of whose vertices lie
    in the condition: triangles wxy, xyz become wxz, wyz.  The condition and
    all counts are unchanged, so degree bounds computed after flipping apply
    to the original."""
    q = frozenset(int(v) for v in quad)
    if len(q) != 4:
        raise PreconditionFailed("a flip needs exactly four vertices")
    if not q <= t.condition:
        raise PreconditionFailed("all four flip vertices must lie in the condition")
    cx = t.complex
    shared = []
    for a, b in combinations(sorted(q), 2):
        fs = cx.edge_faces.get(edge_key(a, b))
        if (
            fs is not None
            and len(fs) == 2
            and set(cx.triangles[fs[0]]) | set(cx.triangles[fs[1]]) == q
        ):
            shared.append(edge_key(a, b))
    if len(shared) != 1:
        raise PreconditionFailed(f"{sorted(q)} does not span two triangles over one edge")
    x, y = shared[0]
    w, z = sorted(q - {x, y})
    if edge_key(w, z) in cx.edge_faces:
        raise PreconditionFailed("the opposite diagonal already exists")
    dropped = {frozenset({w, x, y}), frozenset({x, y, z})}
    faces = [f for f in cx.triangles if frozenset(f) not in dropped] + [(w, x, z), (w, y, z)]
    return validate(
        {
            "vertices": cx.vertex_count,
            "corners": list(t.corners),
            "triangles": [list(f) for f in faces],
        },
        t.condition,
    )
