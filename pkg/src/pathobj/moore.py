"""Zigzag paths with exact concatenation.

A path of dimension n over a simplicial object consists of a traversal, the
n-simplices it visits (one more than its length), and an (n+1)-simplex
filling each step.  The filler of a step must restrict to the visited
simplices on the two faces named by the traversal.  Everything here is
generic over the carrier: only ``act`` and ``eq`` of the base are used.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import mutations
from .ops import SimplicialOperator, delta
from .traversal import (
    Traversal,
    act_traversal,
    collapse_op,
    concat,
    head,
    reverse,
    shift_index,
    tail,
)


class PathDisciplineError(ValueError):
    """A zeta/phi family that does not satisfy the step equations."""


@dataclass
class MoorePath:
    """``zetas`` has length k+1 and ``phis`` length k for a length-k path."""

    base: object
    theta: Traversal
    zetas: tuple
    phis: tuple

    @property
    def dim(self) -> int:
        return self.theta.dim

    @property
    def length(self) -> int:
        return self.theta.length

    @property
    def source(self):
        return self.zetas[0]

    @property
    def target(self):
        return self.zetas[-1]

    def __repr__(self) -> str:
        return f"Path({self.theta!r}, {list(self.zetas)}, {list(self.phis)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, MoorePath) and path_eq(self, other)

    __hash__ = None


def path_eq(p: MoorePath, q: MoorePath) -> bool:
    if p.base is not q.base and p.base != q.base:
        return False
    if p.theta != q.theta:
        return False
    return all(p.base.eq(a, b) for a, b in zip(p.zetas, q.zetas)) and all(
        p.base.eq(a, b) for a, b in zip(p.phis, q.phis)
    )


def validate_path(p: MoorePath) -> None:
    k = p.theta.length
    if len(p.zetas) != k + 1 or len(p.phis) != k:
        raise PathDisciplineError(
            f"expected {k + 1} zetas and {k} phis, got {len(p.zetas)} and {len(p.phis)}"
        )
    n = p.dim
    for j in range(k):
        lo = p.base.act(p.phis[j], delta(p.theta.minus_face(j), n + 1))
        if not p.base.eq(lo, p.zetas[j]):
            raise PathDisciplineError(f"step {j}: near face does not match zeta {j}")
        hi = p.base.act(p.phis[j], delta(p.theta.plus_face(j), n + 1))
        if not p.base.eq(hi, p.zetas[j + 1]):
            raise PathDisciplineError(f"step {j}: far face does not match zeta {j + 1}")


def refl_path(base, x, dim: int) -> MoorePath:
    return MoorePath(base, Traversal(dim, ()), (x,), ())


def compose_paths(p: MoorePath, q: MoorePath) -> MoorePath:
    """q after p; the visited simplices share the junction."""
    if p.dim != q.dim:
        raise PathDisciplineError("cannot compose paths of different dimensions")
    if not p.base.eq(p.target, q.source):
        raise PathDisciplineError("paths do not meet")
    return MoorePath(p.base, concat(p.theta, q.theta), p.zetas + q.zetas[1:], p.phis + q.phis)


def reverse_path(p: MoorePath) -> MoorePath:
    return MoorePath(
        p.base,
        reverse(p.theta),
        tuple(reversed(p.zetas)),
        tuple(reversed(p.phis)),
    )


def tail_path(p: MoorePath, i: int) -> MoorePath:
    return MoorePath(p.base, tail(p.theta, i), p.zetas[i:], p.phis[i:])


def head_path(p: MoorePath, i: int) -> MoorePath:
    return MoorePath(p.base, head(p.theta, i), p.zetas[: i + 1], p.phis[:i])


def act_path(p: MoorePath, alpha: SimplicialOperator) -> MoorePath:
    """Pull a path back along alpha, recomputing and cross-checking zetas."""
    psi, re = act_traversal(p.theta, alpha)
    n = p.dim
    phis = tuple(p.base.act(p.phis[re.parents[j]], re.ops[j]) for j in range(psi.length))
    zetas = [p.base.act(p.zetas[0], alpha)]
    for j in range(psi.length):
        near = p.base.act(phis[j], delta(psi.minus_face(j), alpha.domain_rank + 1))
        if not p.base.eq(near, zetas[j]):
            raise PathDisciplineError(f"acted step {j} breaks the near-face equation")
        zetas.append(p.base.act(phis[j], delta(psi.plus_face(j), alpha.domain_rank + 1)))
    for i in range(p.length + 1):
        expected = p.base.act(p.zetas[i], alpha)
        if not p.base.eq(zetas[shift_index(p.theta, alpha, i)], expected):
            raise PathDisciplineError(f"acted path loses visited simplex {i}")
    return MoorePath(p.base, psi, tuple(zetas), phis)


def const_path(base, theta: Traversal, x) -> MoorePath:
    """The constant path of shape theta at a simplex x of the same dimension."""
    zetas = (x,) * (theta.length + 1)
    phis = tuple(base.act(x, collapse_op(theta, j)) for j in range(theta.length))
    return MoorePath(base, theta, zetas, phis)


def eta_path(p: MoorePath, path_base) -> MoorePath:
    """The path of tails: step j slides from the j-th tail to the (j+1)-th.

    ``path_base`` must be the path object over ``p.base``; the result lives
    there, one dimension level up in the path sense.
    """
    n = p.dim
    zetas = tuple(tail_path(p, i) for i in range(p.length + 1))
    phis = []
    for j in range(p.length):
        slide = act_path(tail_path(p, j), collapse_op(p.theta, j))
        if not mutations.active("eta-keep-first-segment"):
            slide = tail_path(slide, 1)
        phis.append(slide)
    return MoorePath(path_base, p.theta, zetas, tuple(phis))


def path_to_json(p: MoorePath, value_to_json) -> dict:
    from .traversal import traversal_to_json

    return {
        "traversal": traversal_to_json(p.theta),
        "zetas": [value_to_json(z) for z in p.zetas],
        "phis": [value_to_json(f) for f in p.phis],
    }


def path_from_json(base, data: dict, value_from_json) -> MoorePath:
    from .traversal import traversal_from_json

    return MoorePath(
        base,
        traversal_from_json(data["traversal"]),
        tuple(value_from_json(z) for z in data["zetas"]),
        tuple(value_from_json(f) for f in data["phis"]),
    )
