"""Traversals: signed vertex itineraries that shape zigzag paths.

A traversal of dimension n and length k assigns each step a vertex of [n] and
a direction.  A forward step at vertex x runs from face x+1 to face x of its
filling simplex; a backward step runs the other way.  Operators act on
traversals by replacing each step with one step per point of the vertex's
fiber, backward fibers in increasing order and forward fibers in decreasing
order, so that orientations are preserved.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import mutations
from .ops import SimplicialOperator, compose_ops, delta, sigma


PLUS = "+"
MINUS = "-"


@dataclass(frozen=True)
class Traversal:
    """dim is the simplex dimension n; entries are (vertex, sign) pairs.

    Steps are stored 0-indexed; documentation counts from 1.
    """

    dim: int
    entries: tuple[tuple[int, str], ...]

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError("negative dimension")
        for v, sign in self.entries:
            if not 0 <= v <= self.dim:
                raise ValueError(f"vertex {v} outside [{self.dim}]")
            if sign not in (PLUS, MINUS):
                raise ValueError(f"bad sign {sign!r}")

    @property
    def length(self) -> int:
        return len(self.entries)

    def vertex(self, i: int) -> int:
        return self.entries[i][0]

    def sign(self, i: int) -> str:
        return self.entries[i][1]

    def plus_face(self, i: int) -> int:
        """The face index of step i's far end (the step's i-th zeta)."""
        v, sign = self.entries[i]
        return v if sign == PLUS else v + 1

    def minus_face(self, i: int) -> int:
        """The face index of step i's near end (the step's (i-1)-th zeta)."""
        v, sign = self.entries[i]
        return v + 1 if sign == PLUS else v

    def __repr__(self) -> str:
        body = ",".join(f"{v}{s}" for v, s in self.entries)
        return f"Trav[{self.dim}]({body})"


def concat(a: Traversal, b: Traversal) -> Traversal:
    if a.dim != b.dim:
        raise ValueError("cannot concatenate traversals of different dimensions")
    return Traversal(a.dim, a.entries + b.entries)


def reverse(t: Traversal) -> Traversal:
    flipped = tuple((v, MINUS if s == PLUS else PLUS) for v, s in reversed(t.entries))
    return Traversal(t.dim, flipped)


def tail(t: Traversal, i: int) -> Traversal:
    return Traversal(t.dim, t.entries[i:])


def head(t: Traversal, i: int) -> Traversal:
    return Traversal(t.dim, t.entries[:i])


def collapse_op(t: Traversal, i: int) -> SimplicialOperator:
    """The degeneracy at step i's vertex, used to thicken a simplex into a
    constant filler for that step."""
    return sigma(t.vertex(i), t.dim)


def segment_operator(alpha: SimplicialOperator, b: int) -> SimplicialOperator:
    """The filler operator for the new step at domain point b.

    For alpha: [m] -> [n] this is the map [m+1] -> [n+1] that tracks alpha
    below b and shifts by one strictly above it.
    """
    m, n = alpha.domain_rank, alpha.rank
    if not 0 <= b <= m:
        raise ValueError(f"point {b} outside [{m}]")
    images = tuple(alpha(x) for x in range(b + 1)) + tuple(
        alpha(x - 1) + 1 for x in range(b + 1, m + 2)
    )
    return SimplicialOperator(n + 1, images)


def boundary_operator(alpha: SimplicialOperator, a: int, j: int) -> SimplicialOperator:
    """The cross-section operator [m] -> [n+1] between consecutive new steps.

    Valid for j ranging over p..q+1 where p..q is the fiber of a; its ends
    agree with delta_a o alpha and delta_{a+1} o alpha.
    """
    m, n = alpha.domain_rank, alpha.rank
    fiber = alpha.preimage(a)
    if not fiber.start <= j <= (fiber.stop if len(fiber) else fiber.start):
        raise ValueError(f"section index {j} outside fiber bounds of {a}")
    images = tuple(alpha(x) if x < j else alpha(x) + 1 for x in range(m + 1))
    return SimplicialOperator(n + 1, images)


@dataclass(frozen=True)
class Reindex:
    """How an acted traversal's steps map back onto the original's.

    ``parents[j]`` is the source step and ``ops[j]`` the operator carrying
    the source filler onto new filler j.
    """

    parents: tuple[int, ...]
    ops: tuple[SimplicialOperator, ...]

    def then(self, later: "Reindex") -> "Reindex":
        """The reindex of acting by this and then by ``later``."""
        parents = tuple(self.parents[p] for p in later.parents)
        ops = tuple(
            compose_ops(self.ops[p], op) for p, op in zip(later.parents, later.ops)
        )
        return Reindex(parents, ops)


def act_traversal(t: Traversal, alpha: SimplicialOperator) -> tuple[Traversal, Reindex]:
    """Pull a traversal back along alpha: [m] -> [n], with step provenance."""
    if alpha.rank != t.dim:
        raise ValueError(f"operator lands in [{alpha.rank}], traversal lives in [{t.dim}]")
    entries: list[tuple[int, str]] = []
    parents: list[int] = []
    ops: list[SimplicialOperator] = []
    flip = mutations.active("plus-mirror-flip")
    for i, (a, sign) in enumerate(t.entries):
        fiber = alpha.preimage(a)
        points = list(fiber)
        if sign == PLUS and not flip:
            points.reverse()
        for b in points:
            entries.append((b, sign))
            parents.append(i)
            ops.append(segment_operator(alpha, b))
    return Traversal(alpha.domain_rank, tuple(entries)), Reindex(tuple(parents), tuple(ops))


def shift_index(t: Traversal, alpha: SimplicialOperator, i: int) -> int:
    """Where the i-th cross-section of t lands after acting by alpha.

    Counts the new steps produced by the first i old steps, so i = 0 maps to
    0 and i = length maps to the new length.
    """
    return sum(len(alpha.preimage(t.vertex(j))) for j in range(i))


def traversal_to_json(t: Traversal) -> dict:
    return {"dim": t.dim, "entries": [[v, s] for v, s in t.entries]}


def traversal_from_json(data: dict) -> Traversal:
    return Traversal(int(data["dim"]), tuple((int(v), str(s)) for v, s in data["entries"]))
