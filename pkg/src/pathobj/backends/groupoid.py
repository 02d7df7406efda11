"""The groupoid instance: the path object is the category of squares.

Path-objects of a finite groupoid X: objects are the arrows of X, and a
morphism between arrows f and g is a commuting square, stored as
(f, g, u, v) with v o f = g o u.  Constant paths are identity arrows, path
reversal is inversion, and concatenation is plain composition, so all laws
hold exactly and every check can run exhaustively at small sizes.
"""

from __future__ import annotations

from abc import ABC, abstractmethod

from .base import El, Model, ModelConfig, Mor

MAX_ENUM = 100000


class TooBig(Exception):
    pass


class Gpd(ABC):
    name = ""

    @abstractmethod
    def objects(self) -> list: ...

    @abstractmethod
    def arrows(self) -> list:
        """All arrows; may raise TooBig past the enumeration cap."""

    @abstractmethod
    def src(self, a): ...

    @abstractmethod
    def tgt(self, a): ...

    @abstractmethod
    def comp(self, g, f):
        """g o f, defined when src(g) == tgt(f)."""

    @abstractmethod
    def ident(self, x): ...

    @abstractmethod
    def inv(self, a): ...

    def hom(self, x, y) -> list:
        return [a for a in self.arrows() if self.src(a) == x and self.tgt(a) == y]

    def sample_object(self, rng):
        return rng.choice(self.objects())

    def sample_arrow(self, rng):
        return rng.choice(self.arrows())

    def has_object(self, x) -> bool:
        return x in self.objects()

    def has_arrow(self, a) -> bool:
        return a in self.arrows()


class PresentedGpd(Gpd):
    """A groupoid given by explicit tables, checked on construction."""

    def __init__(self, objects, arrows, src, tgt, comp, name=""):
        self.name = name
        self._objects = list(objects)
        self._arrows = list(arrows)
        self._src = dict(src)
        self._tgt = dict(tgt)
        self._comp = dict(comp)
        self._ident = {}
        self._inv = {}
        self._validate()

    def _validate(self):
        for a in self._arrows:
            if self._src.get(a) not in self._objects or self._tgt.get(a) not in self._objects:
                raise ValueError(f"arrow {a!r} has missing or unknown endpoints")
        for g in self._arrows:
            for f in self._arrows:
                composable = self._src[g] == self._tgt[f]
                if composable != ((g, f) in self._comp):
                    raise ValueError(f"composition table wrong on pair ({g!r}, {f!r})")
                if composable:
                    h = self._comp[(g, f)]
                    if self._src.get(h) != self._src[f] or self._tgt.get(h) != self._tgt[g]:
                        raise ValueError(f"composite {h!r} has wrong endpoints")
        for h in self._arrows:
            for g in self._arrows:
                for f in self._arrows:
                    if self._src[g] == self._tgt[f] and self._src[h] == self._tgt[g]:
                        if self._comp[(h, self._comp[(g, f)])] != self._comp[(self._comp[(h, g)], f)]:
                            raise ValueError("composition is not associative")
        for x in self._objects:
            endos = [
                e
                for e in self._arrows
                if self._src[e] == x and self._tgt[e] == x
                and all(
                    self._comp[(e, f)] == f
                    for f in self._arrows
                    if self._tgt[f] == x
                )
                and all(
                    self._comp[(f, e)] == f
                    for f in self._arrows
                    if self._src[f] == x
                )
            ]
            if len(endos) != 1:
                raise ValueError(f"object {x!r} lacks a unique identity")
            self._ident[x] = endos[0]
        for a in self._arrows:
            invs = [
                b
                for b in self._arrows
                if self._src[b] == self._tgt[a]
                and self._tgt[b] == self._src[a]
                and self._comp[(b, a)] == self._ident[self._src[a]]
                and self._comp[(a, b)] == self._ident[self._tgt[a]]
            ]
            if len(invs) != 1:
                raise ValueError(f"arrow {a!r} lacks a unique inverse")
            self._inv[a] = invs[0]

    def objects(self):
        return self._objects

    def arrows(self):
        return self._arrows

    def src(self, a):
        return self._src[a]

    def tgt(self, a):
        return self._tgt[a]

    def comp(self, g, f):
        return self._comp[(g, f)]

    def ident(self, x):
        return self._ident[x]

    def inv(self, a):
        return self._inv[a]


class TerminalGpd(Gpd):
    name = "1"

    def objects(self):
        return ["*"]

    def arrows(self):
        return ["*"]

    def src(self, a):
        return "*"

    def tgt(self, a):
        return "*"

    def comp(self, g, f):
        return "*"

    def ident(self, x):
        return "*"

    def inv(self, a):
        return "*"


class ProductGpd(Gpd):
    def __init__(self, left: Gpd, right: Gpd):
        self.left = left
        self.right = right
        self.name = f"({left.name}x{right.name})"

    def objects(self):
        return [(x, y) for x in self.left.objects() for y in self.right.objects()]

    def arrows(self):
        ls, rs = self.left.arrows(), self.right.arrows()
        if len(ls) * len(rs) > MAX_ENUM:
            raise TooBig(self.name)
        return [(a, b) for a in ls for b in rs]

    def src(self, a):
        return (self.left.src(a[0]), self.right.src(a[1]))

    def tgt(self, a):
        return (self.left.tgt(a[0]), self.right.tgt(a[1]))

    def comp(self, g, f):
        return (self.left.comp(g[0], f[0]), self.right.comp(g[1], f[1]))

    def ident(self, x):
        return (self.left.ident(x[0]), self.right.ident(x[1]))

    def inv(self, a):
        return (self.left.inv(a[0]), self.right.inv(a[1]))

    def sample_object(self, rng):
        return (self.left.sample_object(rng), self.right.sample_object(rng))

    def sample_arrow(self, rng):
        return (self.left.sample_arrow(rng), self.right.sample_arrow(rng))

    def has_object(self, x):
        return (
            isinstance(x, tuple)
            and len(x) == 2
            and self.left.has_object(x[0])
            and self.right.has_object(x[1])
        )

    def has_arrow(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == 2
            and self.left.has_arrow(a[0])
            and self.right.has_arrow(a[1])
        )


class PullbackGpd(Gpd):
    """Pairs agreeing under two functors with a common codomain."""

    def __init__(self, left_leg: Mor, right_leg: Mor, sampler=None):
        self.left = left_leg.dom
        self.right = right_leg.dom
        self.left_leg = left_leg
        self.right_leg = right_leg
        self.sampler = sampler
        self.name = f"({self.left.name}x_{self.right.name})"

    def _match(self, stage, a, b):
        return self.left_leg(El(stage, a)).value == self.right_leg(El(stage, b)).value

    def objects(self):
        rs = {}
        for y in self.right.objects():
            rs.setdefault(self.right_leg(El(0, y)).value, []).append(y)
        return [
            (x, y)
            for x in self.left.objects()
            for y in rs.get(self.left_leg(El(0, x)).value, ())
        ]

    def arrows(self):
        ls = self.left.arrows()
        rs = {}
        for b in self.right.arrows():
            rs.setdefault(self.right_leg(El(1, b)).value, []).append(b)
        if sum(len(rs.get(self.left_leg(El(1, a)).value, ())) for a in ls) > MAX_ENUM:
            raise TooBig(self.name)
        return [(a, b) for a in ls for b in rs.get(self.left_leg(El(1, a)).value, ())]

    def src(self, a):
        return (self.left.src(a[0]), self.right.src(a[1]))

    def tgt(self, a):
        return (self.left.tgt(a[0]), self.right.tgt(a[1]))

    def comp(self, g, f):
        return (self.left.comp(g[0], f[0]), self.right.comp(g[1], f[1]))

    def ident(self, x):
        return (self.left.ident(x[0]), self.right.ident(x[1]))

    def inv(self, a):
        return (self.left.inv(a[0]), self.right.inv(a[1]))

    def sample_object(self, rng):
        if self.sampler is not None:
            return self.sampler(rng, 0)
        return rng.choice(self.objects())

    def sample_arrow(self, rng):
        if self.sampler is not None:
            return self.sampler(rng, 1)
        return rng.choice(self.arrows())

    def has_object(self, x):
        return (
            isinstance(x, tuple)
            and len(x) == 2
            and self.left.has_object(x[0])
            and self.right.has_object(x[1])
            and self._match(0, x[0], x[1])
        )

    def has_arrow(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == 2
            and self.left.has_arrow(a[0])
            and self.right.has_arrow(a[1])
            and self._match(1, a[0], a[1])
        )


class SquaresGpd(Gpd):
    """Arrows of the base as objects, commuting squares as arrows."""

    def __init__(self, base: Gpd):
        self.base = base
        self.name = f"M({base.name})"

    def objects(self):
        return self.base.arrows()

    def square(self, f, g, u):
        """The square on f, g with left side u; the right side is forced."""
        B = self.base
        v = B.comp(B.comp(g, u), B.inv(f))
        return (f, g, u, v)

    def arrows(self):
        B = self.base
        fs = B.arrows()
        by_src = {}
        for u in fs:
            by_src.setdefault(B.src(u), []).append(u)
        total = 0
        out = []
        for f in fs:
            for g in fs:
                us = [u for u in by_src.get(B.src(f), ()) if B.tgt(u) == B.src(g)]
                total += len(us)
                if total > MAX_ENUM:
                    raise TooBig(self.name)
                out += [self.square(f, g, u) for u in us]
        return out

    def src(self, a):
        return a[0]

    def tgt(self, a):
        return a[1]

    def comp(self, g, f):
        return (f[0], g[1], self.base.comp(g[2], f[2]), self.base.comp(g[3], f[3]))

    def ident(self, x):
        e1 = self.base.ident(self.base.src(x))
        e2 = self.base.ident(self.base.tgt(x))
        return (x, x, e1, e2)

    def inv(self, a):
        f, g, u, v = a
        return (g, f, self.base.inv(u), self.base.inv(v))

    def sample_object(self, rng):
        return self.base.sample_arrow(rng)

    def sample_arrow(self, rng):
        B = self.base
        f = B.sample_arrow(rng)
        u = rng.choice([u for u in B.arrows() if B.src(u) == B.src(f)])
        g = rng.choice([g for g in B.arrows() if B.src(g) == B.tgt(u)])
        return self.square(f, g, u)

    def has_object(self, x):
        return self.base.has_arrow(x)

    def has_arrow(self, a):
        if not (isinstance(a, tuple) and len(a) == 4):
            return False
        f, g, u, v = a
        B = self.base
        if not all(B.has_arrow(w) for w in a):
            return False
        if B.src(u) != B.src(f) or B.tgt(u) != B.src(g):
            return False
        if B.src(v) != B.tgt(f) or B.tgt(v) != B.tgt(g):
            return False
        return B.comp(v, f) == B.comp(g, u)


def gpd_from_json(data, name="") -> PresentedGpd:
    """Build a groupoid from tables; identities and inverses are derived."""
    arrows = [a["name"] for a in data["arrows"]]
    return PresentedGpd(
        objects=list(data["objects"]),
        arrows=arrows,
        src={a["name"]: a["src"] for a in data["arrows"]},
        tgt={a["name"]: a["tgt"] for a in data["arrows"]},
        comp={(g, f): h for g, f, h in data["comp"]},
        name=name or data.get("name", ""),
    )


def gpd_to_json(G: PresentedGpd) -> dict:
    return {
        "objects": list(G.objects()),
        "arrows": [{"name": a, "src": G.src(a), "tgt": G.tgt(a)} for a in G.arrows()],
        "comp": [[g, f, h] for (g, f), h in sorted(G._comp.items())],
    }


def group_gpd(elements, mul, name="") -> PresentedGpd:
    """A one-object groupoid from a finite group given by its table."""
    comp = {(g, f): mul(g, f) for g in elements for f in elements}
    return PresentedGpd(
        objects=["*"],
        arrows=list(elements),
        src={g: "*" for g in elements},
        tgt={g: "*" for g in elements},
        comp=comp,
        name=name,
    )


def indiscrete_gpd(points, name="") -> PresentedGpd:
    """One arrow between every ordered pair of points."""
    points = list(points)
    arrows = [(x, y) for x in points for y in points]
    return PresentedGpd(
        objects=points,
        arrows=arrows,
        src={(x, y): x for x, y in arrows},
        tgt={(x, y): y for x, y in arrows},
        comp={(g, f): (f[0], g[1]) for g in arrows for f in arrows if g[0] == f[1]},
        name=name,
    )


class GroupoidModel(Model):
    backend = "groupoid"

    def __init__(self, groupoid: Gpd, config: ModelConfig | None = None):
        super().__init__(config)
        self.X0 = groupoid

    # ambient category -----------------------------------------------------

    def _terminal_object(self):
        return TerminalGpd()

    def _terminal_value(self, stage):
        return "*"

    def _product_object(self, X, Y):
        return ProductGpd(X, Y)

    def _pullback_object(self, f, g, sampler):
        return PullbackGpd(f, g, sampler=sampler)

    def point(self, X, rng) -> Mor:
        x = X.sample_object(rng)
        T = self.terminal()

        def fn(e: El) -> El:
            return El(e.stage, x if e.stage == 0 else X.ident(x))

        return Mor(T, X, fn, name="pt")

    # the path functor ------------------------------------------------------

    def _path_object(self, X):
        return SquaresGpd(X)

    def Mmor(self, f: Mor) -> Mor:
        MD, MC = self.M(f.dom), self.M(f.cod)

        def on_arrow(a):
            return f(El(1, a)).value

        def fn(e: El) -> El:
            if e.stage == 0:
                return El(0, on_arrow(e.value))
            fa, ga, u, v = e.value
            return El(1, (on_arrow(fa), on_arrow(ga), on_arrow(u), on_arrow(v)))

        return Mor(MD, MC, fn, name=f"M({f.name})")

    def s(self, X) -> Mor:
        def fn(e: El) -> El:
            if e.stage == 0:
                return El(0, X.src(e.value))
            return El(1, e.value[2])

        return Mor(self.M(X), X, fn, name="s")

    def t(self, X) -> Mor:
        def fn(e: El) -> El:
            if e.stage == 0:
                return El(0, X.tgt(e.value))
            return El(1, e.value[3])

        return Mor(self.M(X), X, fn, name="t")

    def r(self, X) -> Mor:
        def fn(e: El) -> El:
            if e.stage == 0:
                return El(0, X.ident(e.value))
            u = e.value
            return El(1, (X.ident(X.src(u)), X.ident(X.tgt(u)), u, u))

        return Mor(X, self.M(X), fn, name="r")

    def tau(self, X) -> Mor:
        MX = self.M(X)

        def fn(e: El) -> El:
            if e.stage == 0:
                return El(0, X.inv(e.value))
            f, g, u, v = e.value
            return El(1, (X.inv(f), X.inv(g), v, u))

        return Mor(MX, MX, fn, name="tau")

    def m(self, X) -> Mor:
        P = self.m_pb(X)

        def fn(e: El) -> El:
            later, earlier = e.value
            if e.stage == 0:
                return El(0, X.comp(later, earlier))
            lf, lg, lu, lv = later
            ef, eg, eu, ev = earlier
            return El(1, (X.comp(lf, ef), X.comp(lg, eg), eu, lv))

        return Mor(P, self.M(X), fn, name="m")

    def _m2_sampler(self, X):
        MX = self.M(X)

        def sampler(rng, stage):
            if stage == 0:
                earlier = X.sample_arrow(rng)
                outs = [g for g in X.arrows() if X.src(g) == X.tgt(earlier)]
                return (rng.choice(outs), earlier)
            earlier = MX.sample_arrow(rng)
            shared = earlier[3]
            fs = X.arrows()
            later_candidates = [
                MX.square(f, g, shared)
                for f in fs
                for g in fs
                if X.src(f) == X.src(shared) and X.src(g) == X.tgt(shared)
            ]
            return (rng.choice(later_candidates), earlier)

        return sampler

    def _m3_sampler(self, X):
        MX = self.M(X)
        pairs = self._m2_sampler(X)

        def sampler(rng, stage):
            later, mid = pairs(rng, stage)
            if stage == 0:
                ins = [f for f in X.arrows() if X.tgt(f) == X.src(mid)]
                return ((later, mid), rng.choice(ins))
            # a square whose right side equals the left side of mid
            w = mid[2]
            f = rng.choice([f for f in X.arrows() if X.tgt(f) == X.src(w)])
            u = rng.choice([u for u in X.arrows() if X.src(u) == X.src(f)])
            g = X.comp(X.comp(w, f), X.inv(u))
            return ((later, mid), (f, g, u, w))

        return sampler

    def alpha1(self, X) -> Mor:
        T = self.terminal()
        P = self.product(T, X)
        M1 = self.M(T)
        rP = self.r(P)

        def fn(e: El) -> El:
            omega, x = e.value
            return rP(El(e.stage, ("*", x)))

        return Mor(self.product(M1, X), self.M(P), fn, name="alpha1")

    def eta(self, X) -> Mor:
        MX = self.M(X)
        MMX = self.M(MX)

        def fn(e: El) -> El:
            if e.stage == 0:
                f = e.value
                eb = X.ident(X.tgt(f))
                return El(0, (f, eb, f, eb))
            f, g, u, v = e.value
            eb = X.ident(X.tgt(f))
            ed = X.ident(X.tgt(g))
            return El(
                1,
                ((f, eb, f, eb), (g, ed, g, ed), (f, g, u, v), (eb, ed, v, v)),
            )

        return Mor(MX, MMX, fn, name="eta")

    def zip_m(self, P, a: El, b: El) -> El:
        if a.stage == 0:
            return El(0, (a.value, b.value))
        f1, g1, u1, v1 = a.value
        f2, g2, u2, v2 = b.value
        return El(1, ((f1, f2), (g1, g2), (u1, u2), (v1, v2)))

    # elements ---------------------------------------------------------------

    def stages(self, X):
        return [0, 1]

    def elements(self, X, stage):
        try:
            return X.objects() if stage == 0 else X.arrows()
        except TooBig:
            return None

    def sample_at(self, X, rng, stage) -> El:
        return El(stage, X.sample_object(rng) if stage == 0 else X.sample_arrow(rng))

    def eq(self, X, a: El, b: El) -> bool:
        return a == b

    def validate(self, X, e: El) -> None:
        if e.stage == 0:
            if not X.has_object(e.value):
                raise ValueError(f"not an object of {X.name}: {e.value!r}")
        elif not X.has_arrow(e.value):
            raise ValueError(f"not an arrow of {X.name}: {e.value!r}")

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
