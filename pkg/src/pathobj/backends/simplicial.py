"""The simplicial instance: path objects are zigzag path spaces."""

from __future__ import annotations

from ..moore import (
    MoorePath,
    compose_paths,
    const_path,
    eta_path,
    refl_path,
    reverse_path,
)
from ..objects import (
    PathObject,
    PresentedObject,
    ProductObject,
    PullbackObject,
    SimplicialObject,
    TERMINAL_POINT,
    TerminalObject,
)
from ..ops import SimplicialOperator
from ..presentation import SSetPresentation
from .base import El, Model, ModelConfig, Mor


class SimplicialModel(Model):
    backend = "sset"

    def __init__(self, presentation: SSetPresentation, config: ModelConfig | None = None):
        super().__init__(config)
        if isinstance(presentation, PresentedObject):
            self.X0 = presentation
        else:
            self.X0 = PresentedObject(presentation)

    # ambient category -----------------------------------------------------

    def _terminal_object(self):
        return TerminalObject()

    def _terminal_value(self, stage):
        return TERMINAL_POINT

    def _product_object(self, X, Y):
        return ProductObject(X, Y)

    def _pullback_object(self, f: Mor, g: Mor, sampler):
        return PullbackObject(
            f.dom,
            g.dom,
            lambda dim, v: f(El(dim, v)).value,
            lambda dim, v: g(El(dim, v)).value,
            f.cod,
            sampler=sampler,
        )

    def point(self, X, rng) -> Mor:
        v = X.sample(rng, 0)
        T = self.terminal()

        def fn(e: El) -> El:
            collapse = SimplicialOperator(0, (0,) * (e.stage + 1))
            return El(e.stage, X.act(v, collapse))

        return Mor(T, X, fn, name="pt")

    # the path functor ------------------------------------------------------

    def _path_object(self, X):
        return PathObject(X, max_len=self.config.max_len)

    def Mmor(self, f: Mor) -> Mor:
        MD, MC = self.M(f.dom), self.M(f.cod)

        def fn(e: El) -> El:
            p = e.value
            return El(
                e.stage,
                MoorePath(
                    MC.base,
                    p.theta,
                    tuple(f(El(e.stage, z)).value for z in p.zetas),
                    tuple(f(El(e.stage + 1, h)).value for h in p.phis),
                ),
            )

        return Mor(MD, MC, fn, name=f"M({f.name})")

    def s(self, X) -> Mor:
        return Mor(self.M(X), X, lambda e: El(e.stage, e.value.source), name="s")

    def t(self, X) -> Mor:
        return Mor(self.M(X), X, lambda e: El(e.stage, e.value.target), name="t")

    def r(self, X) -> Mor:
        return Mor(X, self.M(X), lambda e: El(e.stage, refl_path(X, e.value, e.stage)), name="r")

    def tau(self, X) -> Mor:
        MX = self.M(X)
        return Mor(MX, MX, lambda e: El(e.stage, reverse_path(e.value)), name="tau")

    def m(self, X) -> Mor:
        P = self.m_pb(X)

        def fn(e: El) -> El:
            later, earlier = e.value
            return El(e.stage, compose_paths(earlier, later))

        return Mor(P, self.M(X), fn, name="m")

    def _m2_sampler(self, X):
        MX = self.M(X)

        def sampler(rng, dim):
            earlier = MX.sample(rng, dim)
            later = MX.sample_with_source(rng, dim, earlier.target)
            return (later, earlier)

        return sampler

    def _m3_sampler(self, X):
        MX = self.M(X)
        pairs = self._m2_sampler(X)

        def sampler(rng, dim):
            later, mid = pairs(rng, dim)
            earliest = MX.sample_with_target(rng, dim, mid.source)
            return ((later, mid), earliest)

        return sampler

    def alpha1(self, X) -> Mor:
        T = self.terminal()
        P = self.product(T, X)
        M1 = self.M(T)

        def fn(e: El) -> El:
            omega, x = e.value
            return El(e.stage, const_path(P, omega.theta, (TERMINAL_POINT, x)))

        return Mor(self.product(M1, X), self.M(P), fn, name="alpha1")

    def eta(self, X) -> Mor:
        MX = self.M(X)
        MMX = self.M(MX)
        return Mor(MX, MMX, lambda e: El(e.stage, eta_path(e.value, MX)), name="eta")

    def zip_m(self, P, a: El, b: El) -> El:
        pa, pb = a.value, b.value
        if pa.theta != pb.theta:
            raise ValueError("cannot zip paths with different shapes")
        merged = MoorePath(
            P,
            pa.theta,
            tuple((za, zb) for za, zb in zip(pa.zetas, pb.zetas)),
            tuple((fa, fb) for fa, fb in zip(pa.phis, pb.phis)),
        )
        return El(a.stage, merged)

    # elements ---------------------------------------------------------------

    def stages(self, X):
        return list(range(self.config.max_dim + 1))

    def elements(self, X, stage):
        return X.enum(stage)

    def sample_at(self, X, rng, stage) -> El:
        return El(stage, X.sample(rng, stage))

    def eq(self, X, a: El, b: El) -> bool:
        return a.stage == b.stage and X.eq(a.value, b.value)

    def validate(self, X, e: El) -> None:
        X.validate(e.stage, e.value)

    def shrink(self, X, e: El):
        for v in X.shrink(e.stage, e.value):
            yield El(e.stage, v)

    # law-suite hooks --------------------------------------------------------

    def stock_objects(self):
        return [self.X0]

    def stock_morphisms(self):
        import random

        X = self.X0
        rng = random.Random(0)
        pt = self.point(X, rng)
        return [
            self.identity(X),
            self.bang(X),
            pt,
            self.compose(pt, self.bang(X)),
        ]

    def act_el(self, X, e: El, op: SimplicialOperator) -> El:
        if op.rank != e.stage:
            raise ValueError("operator does not act at this stage")
        return El(op.domain_rank, X.act(e.value, op))

    def anchored_sampler(self, f: Mor):
        MY = self.M(f.cod)

        def sampler(rng, dim):
            x = f.dom.sample(rng, dim)
            phi = MY.sample_with_target(rng, dim, f(El(dim, x)).value)
            return (phi, x)

        return sampler
