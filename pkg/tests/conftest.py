"""Shared fixtures: small hand-checked triangulations exercising every
predicate (contiguity, separation, mosquitos, subdivisions, killability).

All fixtures use corners P,Q,R,S = 0,1,2,3 unless noted.
"""

import pytest

from monsky.triangulation import Triangulation, validate, with_labels, make_diagonal


def build(vertices, corners, faces, condition=()):
    return validate(
        {"vertices": vertices, "corners": list(corners), "triangles": [list(f) for f in faces]},
        condition,
    )


# A quadrilateral fanned from one interior center (the smallest non-linear-free
# shape), with letter labels on its four triangles matching storage order.
@pytest.fixture
def lettered_fan():
    return with_labels(make_diagonal(1), ["B", "C", "A", "D"])


# Six triangles around a two-face diagonal, letters A..F.
@pytest.fixture
def lettered_two_fan():
    return with_labels(make_diagonal(2), ["D", "E", "F", "A", "B", "C"])


# 14-face complex, interior u,v,w,x,y,z = 4..9; condition on the two
# central triangles vxy, xyz.
HEXAD_FACES = [
    (0, 1, 5),   # P Q v
    (1, 2, 6),   # Q R w
    (2, 3, 9),   # R S z
    (3, 0, 4),   # S P u
    (0, 4, 5),   # P u v
    (1, 5, 6),   # Q v w
    (2, 6, 8),   # R w y
    (2, 8, 9),   # R y z
    (3, 9, 7),   # S z x
    (3, 7, 4),   # S x u
    (4, 5, 7),   # u v x
    (5, 6, 8),   # v w y
    (5, 7, 8),   # v x y
    (7, 8, 9),   # x y z
]


@pytest.fixture
def hexad():
    return build(10, (0, 1, 2, 3), HEXAD_FACES, (5, 7, 8, 9))


# The same complex with one extra interior vertex t = 10 splitting the
# two triangles at S into four.
HEXAD_PLUS_FACES = [f for f in HEXAD_FACES if f not in [(3, 9, 7), (3, 7, 4)]] + [
    (3, 9, 10),   # S z t
    (3, 10, 4),   # S t u
    (7, 4, 10),   # x u t
    (7, 10, 9),   # x t z
]


@pytest.fixture
def hexad_plus():
    return build(11, (0, 1, 2, 3), HEXAD_PLUS_FACES)


# Square ring of eight triangles around a central mosquito m = 8; the
# condition is the star of m plus its link square 4,5,6,7.
OCTAGON_STAR_FACES = [
    (0, 4, 1),
    (1, 5, 2),
    (2, 6, 3),
    (3, 7, 0),
    (4, 1, 5),
    (5, 2, 6),
    (6, 3, 7),
    (7, 0, 4),
    (4, 5, 8),
    (5, 6, 8),
    (6, 7, 8),
    (7, 4, 8),
]


@pytest.fixture
def octagon_star():
    return build(9, (0, 1, 2, 3), OCTAGON_STAR_FACES, (4, 5, 6, 7, 8))


# Seven vertices, eight faces: interior triangle x,y,z = 4,5,6 with each
# side fanned to the boundary.
WHEEL_FACES = [
    (0, 1, 5),   # P Q y
    (0, 5, 4),   # P y x
    (1, 2, 5),   # Q R y
    (2, 6, 5),   # R z y
    (2, 3, 6),   # R S z
    (3, 4, 6),   # S x z
    (3, 0, 4),   # S P x
    (4, 5, 6),   # x y z
]


@pytest.fixture
def wheel():
    return build(7, (0, 1, 2, 3), WHEEL_FACES)


# Two concentric hexagons (outer 4..9, inner 10..15) around a center 16.
# The twelve hexagon vertices form a valid condition whose removal strands
# the center: the canonical separating example.
def _ring_faces():
    faces = []
    for i in range(6):
        faces.append((16, 10 + i, 10 + (i + 1) % 6))
    for i in range(6):
        faces.append((4 + i, 4 + (i + 1) % 6, 10 + (i + 1) % 6))
        faces.append((4 + i, 10 + (i + 1) % 6, 10 + i))
    faces += [
        (0, 1, 5),
        (0, 5, 4),
        (0, 4, 9),
        (3, 0, 9),
        (3, 9, 8),
        (2, 3, 8),
        (2, 8, 7),
        (1, 2, 7),
        (1, 7, 6),
        (1, 6, 5),
    ]
    return faces


RING_FACES = _ring_faces()


@pytest.fixture
def ring():
    return build(17, (0, 1, 2, 3), RING_FACES, tuple(range(4, 16)))


# A chain 4..9 from P to Q, fanned below from vertex 6 and joined above to
# S (first half) and R (second half); condition = P, Q and the chain.
# No triangle is killable here, yet vertex 6 sees all four corners.
CROWN_FACES = [
    (3, 0, 4),   # S P c1
    (3, 4, 5),   # S c1 c2
    (3, 5, 6),   # S c2 c3
    (3, 6, 2),   # S c3 R
    (2, 6, 7),   # R c3 c4
    (2, 7, 8),   # R c4 c5
    (2, 8, 9),   # R c5 c6
    (2, 9, 1),   # R c6 Q
    (6, 7, 8),
    (6, 8, 9),
    (6, 9, 1),
    (6, 1, 0),
    (6, 0, 4),
    (6, 4, 5),
]

CROWN_CONDITION = (0, 1, 4, 5, 6, 7, 8, 9)


@pytest.fixture
def crown():
    return build(10, (0, 1, 2, 3), CROWN_FACES, CROWN_CONDITION)


# A square with diagonal corner fan through c = 4 where the triangle P,Q,c
# is subdivided by one interior vertex d = 5.
NESTED_FACES = [
    (3, 0, 4),   # S P c
    (3, 4, 2),   # S c R
    (1, 4, 5),   # Q c d
    (4, 0, 5),   # c P d
    (0, 1, 5),   # P Q d
    (1, 2, 4),   # Q R c
]


@pytest.fixture
def nested():
    return build(6, (0, 1, 2, 3), NESTED_FACES)


# Thirteen faces of a seven-vertex torus with one face removed: every local
# check (links, orientation, boundary) passes, but the face count betrays
# that the surface is not a disk.
TORUS_HOLE_FACES = [
    ((i + 1) % 7, i, (i + 3) % 7) for i in range(1, 7)
] + [(i, (i + 2) % 7, (i + 3) % 7) for i in range(7)]
