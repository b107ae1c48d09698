"""Exact rational drawings of conditioned triangulations.

A drawing places the four corners on the unit square, forces every
condition vertex onto one shared affine line, and scatters the remaining
interior vertices at random rational points.  All arithmetic is exact, so
collinearity and signed-area statements are checked with equality, never
with a tolerance.  Rendering produces deterministic SVG.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, NamedTuple

from .errors import (
    BadParameters,
    DegenerateAfterRetries,
    MissingVariable,
    NotAQuadrilateral,
    NotNonSeparating,
    PreconditionFailed,
)
from .poly import MultiPoly
from .triangulation import Triangulation, is_non_separating

Triangle = tuple[int, int, int]


class Point(NamedTuple):
    x: Fraction
    y: Fraction


@dataclass(frozen=True)
class Drawing:
    """Vertex placement plus the optional line carrying the condition."""

    placement: dict[int, Point]
    line: tuple[Point, Point] | None = None


@dataclass(frozen=True)
class AreaVector:
    """Signed areas of the non-degenerate triangles of one drawing."""

    values: dict[Triangle, Fraction]

    def total(self) -> Fraction:
        return sum(self.values.values(), Fraction(0))


@dataclass(frozen=True)
class VerifyReport:
    passed: bool
    samples: int
    failures: tuple[dict, ...] = ()


_SQUARE = (
    Point(Fraction(0), Fraction(0)),
    Point(Fraction(1), Fraction(0)),
    Point(Fraction(1), Fraction(1)),
    Point(Fraction(0), Fraction(1)),
)


def area(p1: Point, p2: Point, p3: Point) -> Fraction:
    """Signed area of the ordered triangle: half the cross product of the
    edge vectors; positive for counterclockwise order."""
    return ((p2.x - p1.x) * (p3.y - p1.y) - (p3.x - p1.x) * (p2.y - p1.y)) / 2


def _random_rational(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def _random_point(rng: random.Random, bound: int) -> Point:
    x = _random_rational(rng, bound)
    y = _random_rational(rng, bound)
    return Point(x, y)


def sample_drawing(
    t: Triangulation,
    seed: int | str = 0,
    bound: int = 64,
    attempts: int = 64,
) -> Drawing:
    """A random exact drawing: corners on the unit square, condition
    vertices collinear, every triangle outside the condition region with
    nonzero area.  Deterministic in `seed`; each failed attempt draws fresh
    randomness from a derived sub-seed."""
    if t.n != 4:
        raise NotAQuadrilateral(f"drawings fix a square boundary, not a {t.n}-gon")
    if not is_non_separating(t):
        raise NotNonSeparating("the condition separates the complex")
    if bound < 1:
        raise BadParameters("bound must be positive")
    cx = t.complex
    c = t.condition
    degenerate = {frozenset(f) for f in t.condition_triangles}
    corner_positions = dict(zip(cx.corners, _SQUARE))
    condition_corners = [v for v in cx.corners if v in c]

    for attempt in range(attempts):
        rng = random.Random(f"{seed}:{attempt}")
        placement = dict(corner_positions)
        line = None
        if c:
            if len(condition_corners) == 2:
                p1, p2 = (corner_positions[v] for v in condition_corners)
            elif len(condition_corners) == 1:
                p1 = corner_positions[condition_corners[0]]
                p2 = _random_point(rng, bound)
            else:
                p1 = _random_point(rng, bound)
                p2 = _random_point(rng, bound)
            if p1 == p2:
                continue
            line = (p1, p2)
            for v in sorted(c):
                if v in corner_positions:
                    continue
                s = _random_rational(rng, bound)
                placement[v] = Point(
                    s * p1.x + (1 - s) * p2.x, s * p1.y + (1 - s) * p2.y
                )
        for v in sorted(cx.interior_vertices):
            if v not in placement:
                placement[v] = _random_point(rng, bound)
        if all(
            area(*(placement[v] for v in f)) != 0
            for f in cx.triangles
            if frozenset(f) not in degenerate
        ):
            return Drawing(placement, line)
    raise DegenerateAfterRetries(f"no non-degenerate drawing in {attempts} attempts")


def areas(t: Triangulation, drawing: Drawing) -> AreaVector:
    """Signed areas of all triangles outside the condition region."""
    missing = [v for v in range(t.complex.vertex_count) if v not in drawing.placement]
    if missing:
        raise PreconditionFailed(f"drawing lacks vertices {missing}")
    degenerate = {frozenset(f) for f in t.condition_triangles}
    return AreaVector(
        {
            f: area(*(drawing.placement[v] for v in f))
            for f in t.complex.triangles
            if frozenset(f) not in degenerate
        }
    )


def polynomial_assignment(
    t: Triangulation, vector: AreaVector
) -> dict[str, Fraction]:
    """Label -> twice the signed area, the convention under which the sum of
    all doubled areas of an unconditioned drawing is exactly 2."""
    if t.complex.labels is None:
        raise PreconditionFailed("triangulation carries no triangle labels")
    by_face = dict(zip(t.complex.triangles, t.complex.labels))
    return {by_face[f]: 2 * value for f, value in vector.values.items()}


def verify_vanishing(
    poly: MultiPoly,
    t: Triangulation,
    sample_count: int = 50,
    seed: int | str = 0,
    bound: int = 64,
) -> VerifyReport:
    """Evaluate `poly` exactly on the doubled-area assignment of
    `sample_count` independent drawings; pass only if every value is 0."""
    if t.complex.labels is None:
        raise PreconditionFailed("triangulation carries no triangle labels")
    if sample_count < 1:
        raise BadParameters("sample_count must be positive")
    degenerate = {frozenset(f) for f in t.condition_triangles}
    live_labels = {
        label
        for f, label in zip(t.complex.triangles, t.complex.labels)
        if frozenset(f) not in degenerate
    }
    rogue = set(poly.variables) - live_labels
    if rogue:
        raise MissingVariable(
            f"variables {sorted(rogue)} name no non-degenerate triangle"
        )
    failures = []
    for i in range(sample_count):
        sample_seed = f"{seed}/{i}"
        try:
            drawing = sample_drawing(t, sample_seed, bound)
        except DegenerateAfterRetries as exc:
            raise DegenerateAfterRetries(f"sample seed {sample_seed}: {exc}") from exc
        assignment = polynomial_assignment(t, areas(t, drawing))
        value = poly.eval(assignment)
        if value != 0:
            failures.append({"sample": i, "value": str(value)})
    return VerifyReport(not failures, sample_count, tuple(failures))


# --- serialization ---------------------------------------------------------


def drawing_to_jsonable(drawing: Drawing) -> dict:
    out = {
        "placement": {
            str(v): [str(p.x), str(p.y)]
            for v, p in sorted(drawing.placement.items())
        },
        "line": None,
    }
    if drawing.line is not None:
        out["line"] = [[str(p.x), str(p.y)] for p in drawing.line]
    return out


def drawing_from_jsonable(obj) -> Drawing:
    try:
        placement = {
            int(v): Point(Fraction(p[0]), Fraction(p[1]))
            for v, p in obj["placement"].items()
        }
        line = None
        if obj.get("line") is not None:
            (a, b) = obj["line"]
            line = (
                Point(Fraction(a[0]), Fraction(a[1])),
                Point(Fraction(b[0]), Fraction(b[1])),
            )
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise BadParameters(f"malformed drawing data: {exc}") from exc
    return Drawing(placement, line)


# --- SVG rendering ---------------------------------------------------------


def _clip_line(p1: Point, p2: Point, lo_x, hi_x, lo_y, hi_y):
    """Exact parametric clipping of the infinite line through p1, p2 to a
    rectangle; returns two endpoints or None when the line misses it."""
    dx, dy = p2.x - p1.x, p2.y - p1.y
    checks = ((dx, lo_x - p1.x, hi_x - p1.x), (dy, lo_y - p1.y, hi_y - p1.y))
    span = [Fraction(-(10**9)), Fraction(10**9)]
    for d, lo, hi in checks:
        if d == 0:
            if lo > 0 or hi < 0:
                return None
            continue
        t1, t2 = lo / d, hi / d
        if t1 > t2:
            t1, t2 = t2, t1
        span[0] = max(span[0], t1)
        span[1] = min(span[1], t2)
    if span[0] >= span[1]:
        return None
    return tuple(
        Point(p1.x + s * dx, p1.y + s * dy) for s in span
    )


def render_svg(t: Triangulation, drawing: Drawing) -> str:
    """Deterministic SVG: shaded condition triangles, all edges, the
    condition line dashed, and labeled vertices."""
    missing = [v for v in range(t.complex.vertex_count) if v not in drawing.placement]
    if missing:
        raise PreconditionFailed(f"drawing lacks vertices {missing}")
    cx = t.complex
    pts = drawing.placement
    xs = [p.x for p in pts.values()]
    ys = [p.y for p in pts.values()]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    width = max(hi_x - lo_x, Fraction(1))
    height = max(hi_y - lo_y, Fraction(1))
    scale = 360 / float(max(width, height))
    margin = 30.0

    def place(p: Point) -> tuple[float, float]:
        return (
            margin + (float(p.x) - float(lo_x)) * scale,
            margin + (float(hi_y) - float(p.y)) * scale,
        )

    def fmt(v: float) -> str:
        return f"{v:.2f}"

    w = fmt(margin * 2 + float(width) * scale)
    h = fmt(margin * 2 + float(height) * scale)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" '
        f'width="{w}" height="{h}">'
    ]
    for f in t.condition_triangles:
        coords = " ".join(
            f"{fmt(x)},{fmt(y)}" for x, y in (place(pts[v]) for v in f)
        )
        out.append(f'  <polygon points="{coords}" fill="#c8c8c8" stroke="none"/>')
    boundary = cx.boundary_edges
    for a, b in sorted(cx.edges):
        (x1, y1), (x2, y2) = place(pts[a]), place(pts[b])
        stroke = 2 if (a, b) in boundary or (b, a) in boundary else 1
        out.append(
            f'  <line x1="{fmt(x1)}" y1="{fmt(y1)}" x2="{fmt(x2)}" y2="{fmt(y2)}" '
            f'stroke="#000000" stroke-width="{stroke}"/>'
        )
    if drawing.line is not None:
        clipped = _clip_line(*drawing.line, lo_x, hi_x, lo_y, hi_y)
        if clipped is not None:
            (x1, y1), (x2, y2) = place(clipped[0]), place(clipped[1])
            out.append(
                f'  <line x1="{fmt(x1)}" y1="{fmt(y1)}" x2="{fmt(x2)}" y2="{fmt(y2)}" '
                f'stroke="#b00000" stroke-width="1" stroke-dasharray="6 4"/>'
            )
    for v in sorted(pts):
        x, y = place(pts[v])
        r = 4 if v in cx.corners else 3
        fill = "#b00000" if v in t.condition else "#000000"
        out.append(f'  <circle cx="{fmt(x)}" cy="{fmt(y)}" r="{r}" fill="{fill}"/>')
        out.append(
            f'  <text x="{fmt(x + 6)}" y="{fmt(y - 6)}" '
            f'font-family="monospace" font-size="12">{v}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
