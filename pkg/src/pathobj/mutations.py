"""Deliberate fault injection for testing the law harness itself.

Each named mutant flips one structural choice that the laws are supposed to
pin down.  Activating one must make at least one law fail with a witness;
none of them may crash the harness.
"""

from __future__ import annotations

from contextlib import contextmanager

MUTANTS = (
    # act forward fibers in increasing instead of decreasing order
    "plus-mirror-flip",
    # keep the leading segment when building path-of-paths fillers
    "eta-keep-first-segment",
    # compose the retraction homotopy on the wrong side
    "pi-compose-order",
)

_active: set[str] = set()


def active(name: str) -> bool:
    return name in _active


def activate(name: str) -> None:
    if name not in MUTANTS:
        raise ValueError(f"unknown mutant {name!r}; known: {', '.join(MUTANTS)}")
    _active.add(name)


def deactivate(name: str) -> None:
    _active.discard(name)


def clear() -> None:
    _active.clear()


@contextmanager
def enabled(name: str):
    activate(name)
    try:
        yield
    finally:
        deactivate(name)
