"""Simplicial operators: order-preserving maps between finite ordinals.

An operator ``[m] -> [n]`` is stored densely as its image sequence
``(a(0), ..., a(m))`` together with the codomain rank ``n``.  This gives a
canonical representation (no delta/sigma words) with O(m) composition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


class RankMismatch(ValueError):
    """Raised when operators or simplices are composed at unequal ranks."""


@dataclass(frozen=True)
class SimplicialOperator:
    """An order-preserving map [m] -> [n].

    ``rank`` is the codomain rank n; the domain rank m is implicit in the
    length of ``images``.
    """

    rank: int
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rank < 0 or not self.images:
            raise ValueError(f"invalid operator data: rank={self.rank}, images={self.images}")
        prev = 0
        for v in self.images:
            if not 0 <= v <= self.rank:
                raise ValueError(f"image value {v} outside 0..{self.rank}")
            if v < prev:
                raise ValueError(f"images not weakly increasing: {self.images}")
            prev = v

    @property
    def domain_rank(self) -> int:
        return len(self.images) - 1

    def __call__(self, x: int) -> int:
        return self.images[x]

    @property
    def is_identity(self) -> bool:
        return self.rank == self.domain_rank and all(v == i for i, v in enumerate(self.images))

    @property
    def is_epi(self) -> bool:
        # surjective onto 0..n; by monotonicity it suffices to hit the ends
        # with unit steps
        return set(self.images) == set(range(self.rank + 1))

    @property
    def is_mono(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def preimage(self, value: int) -> range:
        """The fiber over ``value`` as a (possibly empty) range of domain points.

        For an empty fiber the returned range starts at the insertion point,
        so ``r.start`` is still meaningful as a boundary position.
        """
        lo = 0
        while lo < len(self.images) and self.images[lo] < value:
            lo += 1
        hi = lo
        while hi < len(self.images) and self.images[hi] == value:
            hi += 1
        return range(lo, hi)

    def __repr__(self) -> str:
        return f"Op({list(self.images)}->{self.rank})"


def identity(n: int) -> SimplicialOperator:
    return SimplicialOperator(n, tuple(range(n + 1)))


def delta(i: int, n: int) -> SimplicialOperator:
    """The face operator [n-1] -> [n] whose image omits i."""
    if not 0 <= i <= n or n < 1:
        raise ValueError(f"delta_{i} undefined with codomain [{n}]")
    return SimplicialOperator(n, tuple(v for v in range(n + 1) if v != i))


def sigma(i: int, n: int) -> SimplicialOperator:
    """The degeneracy operator [n+1] -> [n] whose image repeats i."""
    if not 0 <= i <= n:
        raise ValueError(f"sigma_{i} undefined with codomain [{n}]")
    return SimplicialOperator(n, tuple(sorted(tuple(range(n + 1)) + (i,))))


def compose_ops(outer: SimplicialOperator, inner: SimplicialOperator) -> SimplicialOperator:
    """The composite outer o inner, for inner: [l]->[m] and outer: [m]->[n]."""
    if inner.rank != outer.domain_rank:
        raise RankMismatch(
            f"cannot compose {outer!r} after {inner!r}: ranks {inner.rank} != {outer.domain_rank}"
        )
    return SimplicialOperator(outer.rank, tuple(outer.images[v] for v in inner.images))


def ez_factorize(op: SimplicialOperator) -> tuple[SimplicialOperator, SimplicialOperator]:
    """Split an operator as mono o epi (the unique epi-mono factorization)."""
    hit = sorted(set(op.images))
    index = {v: i for i, v in enumerate(hit)}
    epi = SimplicialOperator(len(hit) - 1, tuple(index[v] for v in op.images))
    mono = SimplicialOperator(op.rank, tuple(hit))
    return epi, mono


def all_epis(m: int, d: int) -> list[SimplicialOperator]:
    """All surjective operators [m] -> [d]."""
    if d > m or d < 0:
        return []
    out = []
    # choose which of the m steps are repeats (m - d of them)
    for repeats in combinations(range(1, m + 1), m - d):
        images = [0]
        for x in range(1, m + 1):
            images.append(images[-1] if x in repeats else images[-1] + 1)
        out.append(SimplicialOperator(d, tuple(images)))
    return out


def all_monos(m: int, n: int) -> list[SimplicialOperator]:
    """All injective operators [m] -> [n]."""
    if m > n:
        return []
    return [SimplicialOperator(n, c) for c in combinations(range(n + 1), m + 1)]


def all_operators(m: int, n: int) -> list[SimplicialOperator]:
    """All order-preserving maps [m] -> [n]."""
    out = []

    def build(prefix: list[int]) -> None:
        if len(prefix) == m + 1:
            out.append(SimplicialOperator(n, tuple(prefix)))
            return
        lo = prefix[-1] if prefix else 0
        for v in range(lo, n + 1):
            build(prefix + [v])

    build([])
    return out
