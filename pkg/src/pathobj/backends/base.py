"""The abstract path object category.

A model provides finite limits, a path functor M with source/target/
reflexivity/composition/reversal structure, the unit-strength map, and the
tail map into iterated paths.  Everything downstream (factorization system,
identity types, law suites) is written against this interface only.

Elements are (stage, value) pairs: the stage is a simplicial dimension, a
chain degree, or the object/arrow level of a groupoid.  All morphisms are
stage-preserving.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, NamedTuple


class El(NamedTuple):
    stage: int
    value: object


@dataclass
class Mor:
    dom: object
    cod: object
    fn: Callable[[El], El]
    name: str = ""

    def __call__(self, e: El) -> El:
        return self.fn(e)

    def __repr__(self) -> str:
        return f"Mor({self.name or '?'})"


@dataclass
class ModelConfig:
    max_dim: int = 2
    max_len: int = 4


class Model(ABC):
    """One path object category; subclasses fix the ambient category."""

    backend = "abstract"
    enum_label = "exhaustive"

    def __init__(self, config: ModelConfig | None = None):
        self.config = config or ModelConfig()
        self._product_cache: dict = {}
        self._M_cache: dict = {}
        self._terminal = None

    # ambient category -----------------------------------------------------

    @abstractmethod
    def _terminal_object(self): ...

    @abstractmethod
    def _product_object(self, X, Y): ...

    @abstractmethod
    def _pullback_object(self, f: Mor, g: Mor, sampler): ...

    def terminal(self):
        if self._terminal is None:
            self._terminal = self._terminal_object()
        return self._terminal

    def product(self, X, Y):
        key = (id(X), id(Y))
        if key not in self._product_cache:
            self._product_cache[key] = self._product_object(X, Y)
        return self._product_cache[key]

    def pullback(self, f: Mor, g: Mor, sampler=None):
        if f.cod is not g.cod and f.cod != g.cod:
            raise ValueError("pullback legs must share a codomain")
        return self._pullback_object(f, g, sampler)

    def proj1(self, P) -> Mor:
        return Mor(P, P.left, lambda e: El(e.stage, e.value[0]), name="proj1")

    def proj2(self, P) -> Mor:
        return Mor(P, P.right, lambda e: El(e.stage, e.value[1]), name="proj2")

    def pair(self, f: Mor, g: Mor, into=None) -> Mor:
        cod = into if into is not None else self.product(f.cod, g.cod)
        return Mor(
            f.dom,
            cod,
            lambda e: El(e.stage, (f(e).value, g(e).value)),
            name=f"<{f.name},{g.name}>",
        )

    def identity(self, X) -> Mor:
        return Mor(X, X, lambda e: e, name="id")

    def compose(self, *mors: Mor) -> Mor:
        """Composite of morphisms listed outermost first."""
        if not mors:
            raise ValueError("empty composite")
        for outer, inner in zip(mors, mors[1:]):
            if outer.dom is not inner.cod and outer.dom != inner.cod:
                raise ValueError(f"cannot compose {outer!r} after {inner!r}")

        def run(e: El) -> El:
            for m in reversed(mors):
                e = m(e)
            return e

        return Mor(mors[-1].dom, mors[0].cod, run, name="o".join(m.name for m in mors))

    def bang(self, X) -> Mor:
        T = self.terminal()
        point = self._terminal_value
        return Mor(X, T, lambda e: El(e.stage, point(e.stage)), name="!")

    @abstractmethod
    def _terminal_value(self, stage: int): ...

    @abstractmethod
    def point(self, X, rng) -> Mor:
        """A global element 1 -> X."""

    def cross(self, f: Mor, g: Mor) -> Mor:
        """f x g between the cached product objects."""
        P = self.product(f.dom, g.dom)
        return self.pair(self.compose(f, self.proj1(P)), self.compose(g, self.proj2(P)),
                         into=self.product(f.cod, g.cod))

    # the path functor ------------------------------------------------------

    def M(self, X):
        key = id(X)
        if key not in self._M_cache:
            self._M_cache[key] = self._path_object(X)
        return self._M_cache[key]

    @abstractmethod
    def _path_object(self, X): ...

    @abstractmethod
    def Mmor(self, f: Mor) -> Mor: ...

    @abstractmethod
    def s(self, X) -> Mor: ...

    @abstractmethod
    def t(self, X) -> Mor: ...

    @abstractmethod
    def r(self, X) -> Mor: ...

    @abstractmethod
    def tau(self, X) -> Mor: ...

    def m_pb(self, X):
        """The object of composable path pairs (later, earlier)."""
        return self.pullback(self.s(X), self.t(X), sampler=self._m2_sampler(X))

    def _m2_sampler(self, X):
        return None

    def m3_pb(self, X):
        """Composable triples, nested as ((later, mid), earliest)."""
        P2 = self.m_pb(X)
        left = self.compose(self.s(X), self.proj2(P2))
        return self.pullback(left, self.t(X), sampler=self._m3_sampler(X))

    def _m3_sampler(self, X):
        return None

    def anchored_sampler(self, f: Mor):
        """Sampler for pullback(t_cod, f): pairs (path into cod, element of
        dom) whose path ends over the element.  None when rejection-free
        sampling is not needed (enumerable or solvable backends)."""
        return None

    @abstractmethod
    def m(self, X) -> Mor:
        """Concatenation m_pb(X) -> MX, first component after second."""

    @abstractmethod
    def alpha1(self, X) -> Mor:
        """The unit strength M1 x X -> M(1 x X)."""

    @abstractmethod
    def eta(self, X) -> Mor:
        """The tail map MX -> MMX."""

    @abstractmethod
    def zip_m(self, P, a: El, b: El) -> El:
        """Merge compatible path elements over the parts of P into a path
        over P; inverse to applying M to both projections."""

    # elements ---------------------------------------------------------------

    @abstractmethod
    def stages(self, X) -> list[int]: ...

    @abstractmethod
    def elements(self, X, stage: int):
        """All stage elements, or None when not enumerable."""

    @abstractmethod
    def sample_at(self, X, rng, stage: int) -> El: ...

    def sample(self, X, rng) -> El:
        return self.sample_at(X, rng, rng.choice(self.stages(X)))

    @abstractmethod
    def eq(self, X, a: El, b: El) -> bool: ...

    @abstractmethod
    def validate(self, X, e: El) -> None: ...

    def shrink(self, X, e: El):
        return iter(())

    def label(self, X) -> str:
        return getattr(X, "name", None) or str(X)

    # law-suite hooks --------------------------------------------------------

    def stock_objects(self) -> list:
        """Objects the law suites draw from; the first is the input object."""
        raise NotImplementedError

    def stock_morphisms(self) -> list[Mor]:
        """Plain morphisms between finitely presented objects, used as the
        test maps in naturality squares.  Keep path objects out of their
        domains so exhaustive runs stay enumerable."""
        raise NotImplementedError

    def to_jsonable(self, X, e: El):
        from ..jsonio import to_jsonable

        return {"stage": e.stage, "value": to_jsonable(e.value)}


# derived structure ----------------------------------------------------------


def m_apply(model: Model, X, later: El, earlier: El) -> El:
    assert later.stage == earlier.stage
    return model.m(X)(El(later.stage, (later.value, earlier.value)))


def const_elem(model: Model, X, omega: El, x: El) -> El:
    """The constant path at x whose shape is the terminal path omega."""
    T = model.terminal()
    P = model.product(T, X)
    a = model.alpha1(X)(El(x.stage, (omega.value, x.value)))
    return model.Mmor(model.proj2(P))(a)


def shape_of(model: Model, X, phi: El) -> El:
    """The image of a path in M1, its combinatorial shape."""
    return model.Mmor(model.bang(X))(phi)


def strength_mor(model: Model, X, Y) -> Mor:
    """The strength MX x Y -> M(X x Y), derived from the unit strength."""
    MX = model.M(X)
    P = model.product(MX, Y)
    XY = model.product(X, Y)

    def fn(e: El) -> El:
        phi_v, y_v = e.value
        phi = El(e.stage, phi_v)
        omega = shape_of(model, X, phi)
        cst = const_elem(model, Y, omega, El(e.stage, y_v))
        return model.zip_m(XY, phi, cst)

    return Mor(P, model.M(XY), fn, name="strength")
