"""Shared fixture complexes and small categories used across the suites.

Edge face convention throughout: face 0 is the target vertex, face 1 the
source, matching the orientation 0 -> 1 inside an edge.
"""

import pytest

from pathobj.presentation import SSetPresentation, Simplex, presentation_from_json
from pathobj.ops import identity, sigma


def vert(g):
    return Simplex(g, identity(0))


def edge(g):
    return Simplex(g, identity(1))


@pytest.fixture
def interval():
    return presentation_from_json(
        {"generators": {"0": ["a", "b"], "1": ["e"]}, "faces": {"e": ["b", "a"]}},
        name="interval",
    )


@pytest.fixture
def circle():
    return presentation_from_json(
        {"generators": {"0": ["p"], "1": ["l"]}, "faces": {"l": ["p", "p"]}},
        name="circle",
    )


@pytest.fixture
def triangle():
    # the full 2-simplex on vertices v0 < v1 < v2
    return presentation_from_json(
        {
            "generators": {"0": ["v0", "v1", "v2"], "1": ["e01", "e02", "e12"], "2": ["t"]},
            "faces": {
                "e01": ["v1", "v0"],
                "e02": ["v2", "v0"],
                "e12": ["v2", "v1"],
                "t": ["e12", "e02", "e01"],
            },
        },
        name="triangle",
    )


@pytest.fixture
def cap():
    # a loop filled against a degenerate edge, exercising degenerate faces
    return presentation_from_json(
        {
            "generators": {"0": ["p"], "1": ["l"], "2": ["c"]},
            "faces": {"l": ["p", "p"], "c": ["l", "l", {"gen": "p", "degeneracy": [0]}]},
        },
        name="cap",
    )


ZIGZAG0_JSON = {
    "generators": {"0": ["x", "z1", "z2", "z3", "z4", "xp"], "1": ["f1", "f2", "f3", "f4", "f5"]},
    "faces": {
        "f1": ["z1", "x"],
        "f2": ["z2", "z1"],
        "f3": ["z2", "z3"],
        "f4": ["z4", "z3"],
        "f5": ["z4", "xp"],
    },
}


@pytest.fixture
def zigzag0():
    """Five edges strung x -> z1 -> z2 <- z3 -> z4 <- xp."""
    return presentation_from_json(ZIGZAG0_JSON, name="zigzag0")


ZIGZAG2_JSON = {
    "generators": {
        "0": ["x", "z1", "z2", "z3", "z4", "y", "xq", "w1", "w2", "yq"],
        "1": [
            "f1", "f2", "f3", "f4", "f5",
            "g1", "g2", "g3",
            "xi", "c1", "c2", "c3", "c4", "c5", "c6", "c7", "xip",
        ],
        "2": ["p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8"],
    },
    "faces": {
        "f1": ["z1", "x"],
        "f2": ["z2", "z1"],
        "f3": ["z2", "z3"],
        "f4": ["z4", "z3"],
        "f5": ["z4", "y"],
        "g1": ["w1", "xq"],
        "g2": ["w1", "w2"],
        "g3": ["yq", "w2"],
        "xi": ["xq", "x"],
        "c1": ["w1", "x"],
        "c2": ["w2", "x"],
        "c3": ["w2", "z1"],
        "c4": ["w2", "z2"],
        "c5": ["w2", "z3"],
        "c6": ["yq", "z3"],
        "c7": ["yq", "z4"],
        "xip": ["yq", "y"],
        "p1": ["g1", "c1", "xi"],
        "p2": ["g2", "c1", "c2"],
        "p3": ["c3", "c2", "f1"],
        "p4": ["c4", "c3", "f2"],
        "p5": ["c4", "c5", "f3"],
        "p6": ["g3", "c6", "c5"],
        "p7": ["c7", "c6", "f4"],
        "p8": ["c7", "xip", "f5"],
    },
}


@pytest.fixture
def zigzag2():
    """A homotopy between two edge zigzags, filled by eight triangles."""
    return presentation_from_json(ZIGZAG2_JSON, name="zigzag2")
