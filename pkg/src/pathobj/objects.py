"""Simplicial objects computed on demand.

Wrappers share a tiny interface: ``act`` and ``eq`` drive the path
machinery, ``enum``/``sample`` feed the law harness.  Products, pullbacks,
the terminal object, and path objects never materialize their simplices;
each dimension is produced when asked for.
"""

from __future__ import annotations

from abc import ABC, abstractmethod

from .moore import (
    MoorePath,
    act_path,
    path_eq,
    refl_path,
    reverse_path,
    validate_path,
)
from .ops import SimplicialOperator, delta, sigma
from .presentation import Simplex, SSetPresentation
from .traversal import MINUS, PLUS, Traversal, tail


class SimplicialObject(ABC):
    name: str = ""

    @abstractmethod
    def act(self, value, op: SimplicialOperator):
        """The contravariant action; op's codomain rank is the value's dimension."""

    @abstractmethod
    def eq(self, a, b) -> bool: ...

    @abstractmethod
    def validate(self, dim: int, value) -> None:
        """Raise ValueError when value is not a simplex of this dimension."""

    def enum(self, dim: int):
        """All simplices of a dimension, or None when not enumerable."""
        return None

    @abstractmethod
    def sample(self, rng, dim: int): ...

    def shrink(self, dim: int, value):
        return iter(())


class PresentedObject(SimplicialObject):
    def __init__(self, presentation: SSetPresentation):
        self.presentation = presentation
        self.name = presentation.name or "X"

    def __eq__(self, other):
        return isinstance(other, PresentedObject) and self.presentation is other.presentation

    def __hash__(self):
        return hash(id(self.presentation))

    def act(self, value, op):
        return self.presentation.act(value, op)

    def eq(self, a, b):
        return a == b

    def validate(self, dim, value):
        if not isinstance(value, Simplex):
            raise ValueError(f"not a simplex: {value!r}")
        if value.dim != dim:
            raise ValueError(f"simplex of dimension {value.dim}, expected {dim}")
        if value.gen not in self.presentation._dims:
            raise ValueError(f"unknown generator {value.gen!r}")
        if not value.deg.is_epi:
            raise ValueError(f"non-surjective degeneracy part in {value!r}")
        if value.deg.rank != self.presentation.dim_of(value.gen):
            raise ValueError(f"degeneracy rank mismatch in {value!r}")

    def enum(self, dim):
        return self.presentation.simplices(dim)

    def sample(self, rng, dim):
        return rng.choice(self.presentation.simplices(dim))


TERMINAL_POINT = "*"


class TerminalObject(SimplicialObject):
    name = "1"

    def __eq__(self, other):
        return isinstance(other, TerminalObject)

    def __hash__(self):
        return 1

    def act(self, value, op):
        return TERMINAL_POINT

    def eq(self, a, b):
        return True

    def validate(self, dim, value):
        if value != TERMINAL_POINT:
            raise ValueError(f"terminal object has only {TERMINAL_POINT!r}")

    def enum(self, dim):
        return [TERMINAL_POINT]

    def sample(self, rng, dim):
        return TERMINAL_POINT


class ProductObject(SimplicialObject):
    def __init__(self, left: SimplicialObject, right: SimplicialObject):
        self.left = left
        self.right = right
        self.name = f"({left.name}x{right.name})"

    def __eq__(self, other):
        return (
            isinstance(other, ProductObject)
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        return hash((ProductObject, self.left, self.right))

    def act(self, value, op):
        a, b = value
        return (self.left.act(a, op), self.right.act(b, op))

    def eq(self, u, v):
        return self.left.eq(u[0], v[0]) and self.right.eq(u[1], v[1])

    def validate(self, dim, value):
        if not isinstance(value, tuple) or len(value) != 2:
            raise ValueError("product simplices are pairs")
        self.left.validate(dim, value[0])
        self.right.validate(dim, value[1])

    def enum(self, dim):
        ls, rs = self.left.enum(dim), self.right.enum(dim)
        if ls is None or rs is None:
            return None
        return [(a, b) for a in ls for b in rs]

    def sample(self, rng, dim):
        return (self.left.sample(rng, dim), self.right.sample(rng, dim))

    def shrink(self, dim, value):
        a, b = value
        for a2 in self.left.shrink(dim, a):
            yield (a2, b)
        for b2 in self.right.shrink(dim, b):
            yield (a, b2)


class PullbackObject(SimplicialObject):
    """Pairs agreeing under two legs into a common object.

    ``left_leg``/``right_leg`` are (dim, value) -> value functions landing in
    ``mid``.  A custom ``sampler`` (rng, dim) -> value must be supplied when
    the components are not enumerable.
    """

    def __init__(self, left, right, left_leg, right_leg, mid, sampler=None, name=""):
        self.left = left
        self.right = right
        self.left_leg = left_leg
        self.right_leg = right_leg
        self.mid = mid
        self.sampler = sampler
        self.name = name or f"({left.name}x_{mid.name}{right.name})"

    def __eq__(self, other):
        return self is other or (
            isinstance(other, PullbackObject)
            and self.left == other.left
            and self.right == other.right
            and self.mid == other.mid
        )

    def __hash__(self):
        return hash((PullbackObject, self.left, self.right, self.mid))

    def act(self, value, op):
        a, b = value
        return (self.left.act(a, op), self.right.act(b, op))

    def eq(self, u, v):
        return self.left.eq(u[0], v[0]) and self.right.eq(u[1], v[1])

    def validate(self, dim, value):
        if not isinstance(value, tuple) or len(value) != 2:
            raise ValueError("pullback simplices are pairs")
        a, b = value
        self.left.validate(dim, a)
        self.right.validate(dim, b)
        if not self.mid.eq(self.left_leg(dim, a), self.right_leg(dim, b)):
            raise ValueError("pair does not agree under the pullback legs")

    def enum(self, dim):
        ls, rs = self.left.enum(dim), self.right.enum(dim)
        if ls is None or rs is None:
            return None
        return [
            (a, b)
            for a in ls
            for b in rs
            if self.mid.eq(self.left_leg(dim, a), self.right_leg(dim, b))
        ]

    def sample(self, rng, dim):
        if self.sampler is not None:
            return self.sampler(rng, dim)
        choices = self.enum(dim)
        if not choices:
            raise ValueError(f"cannot sample {self.name}: no enumeration and no sampler")
        return rng.choice(choices)


class PathObject(SimplicialObject):
    """Paths over a base; dimension-n simplices are n-dimensional paths."""

    def __init__(self, base: SimplicialObject, max_len: int = 4):
        self.base = base
        self.max_len = max_len
        self.name = f"M({base.name})"

    def __eq__(self, other):
        return isinstance(other, PathObject) and self.base == other.base

    def __hash__(self):
        return hash((PathObject, self.base))

    def act(self, value, op):
        return act_path(value, op)

    def eq(self, a, b):
        return path_eq(a, b)

    def validate(self, dim, value):
        if not isinstance(value, MoorePath):
            raise ValueError(f"not a path: {value!r}")
        if value.dim != dim:
            raise ValueError(f"path of dimension {value.dim}, expected {dim}")
        if not (value.base is self.base or value.base == self.base):
            raise ValueError("path lives over a different base")
        for i, z in enumerate(value.zetas):
            self.base.validate(dim, z)
        for i, f in enumerate(value.phis):
            self.base.validate(dim + 1, f)
        validate_path(value)

    def _extensions(self, rng, zeta, dim, minus_face):
        """Fillers whose near face is ``zeta``; degenerate one always present."""
        idx = min(minus_face, dim)
        cands = [self.base.act(zeta, sigma(idx, dim))]
        pool = self.base.enum(dim + 1)
        if pool is not None:
            cands += [
                f for f in pool if self.base.eq(self.base.act(f, delta(minus_face, dim + 1)), zeta)
            ]
        return cands

    def sample(self, rng, dim):
        length = rng.randrange(self.max_len + 1)
        return self._walk(rng, dim, length, self.base.sample(rng, dim))

    def _walk(self, rng, dim, length, start):
        zetas = [start]
        entries = []
        phis = []
        for _ in range(length):
            v = rng.randrange(dim + 1)
            sign = rng.choice((PLUS, MINUS))
            t = Traversal(dim, ((v, sign),))
            phi = rng.choice(self._extensions(rng, zetas[-1], dim, t.minus_face(0)))
            entries.append((v, sign))
            phis.append(phi)
            zetas.append(self.base.act(phi, delta(t.plus_face(0), dim + 1)))
        return MoorePath(self.base, Traversal(dim, tuple(entries)), tuple(zetas), tuple(phis))

    def sample_with_source(self, rng, dim, source):
        """A random path starting at the given simplex."""
        return self._walk(rng, dim, rng.randrange(self.max_len + 1), source)

    def sample_with_target(self, rng, dim, target):
        """A random path ending at the given simplex."""
        back = self._walk(rng, dim, rng.randrange(self.max_len + 1), target)
        return reverse_path(back)

    def shrink(self, dim, value):
        if value.length == 0:
            return
        yield refl_path(self.base, value.source, dim)
        yield MoorePath(
            self.base,
            Traversal(dim, value.theta.entries[:-1]),
            value.zetas[:-1],
            value.phis[:-1],
        )
        yield MoorePath(
            self.base,
            tail(value.theta, 1),
            value.zetas[1:],
            value.phis[1:],
        )
