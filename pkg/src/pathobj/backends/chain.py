"""The chain-complex instance, exact over the rationals.

The path object of a complex A is degreewise A_n + A_{n+1} + A_n, carrying
a start vector, a connecting homotopy, and an end vector.  Vectors are
nested tuples of Fractions and the differential follows the row-vector
convention: matrices have shape d_n x d_{n-1} and act by v |-> v . M.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from fractions import Fraction

from .base import El, Model, ModelConfig, Mor


def vadd(u, v):
    if isinstance(u, tuple):
        return tuple(vadd(a, b) for a, b in zip(u, v))
    return u + v


def vsub(u, v):
    if isinstance(u, tuple):
        return tuple(vsub(a, b) for a, b in zip(u, v))
    return u - v


def vscale(c, u):
    if isinstance(u, tuple):
        return tuple(vscale(c, a) for a in u)
    return c * u


def flatten(u):
    if isinstance(u, tuple):
        out = []
        for a in u:
            out.extend(flatten(a))
        return out
    return [u]


def _combo(obj, n, coeffs, basis_vals):
    """The value of sum(c_i * b_i) in obj's nested-tuple representation."""
    acc = [Fraction(0)] * obj.flat_dim(n)
    for c, b in zip(coeffs, basis_vals):
        if c:
            for i, x in enumerate(flatten(b)):
                acc[i] += c * x
    return obj.unflatten(n, acc)


class ChainObj(ABC):
    name = ""

    @abstractmethod
    def stage_range(self) -> tuple[int, int]: ...

    @abstractmethod
    def zero(self, n: int): ...

    @abstractmethod
    def basis(self, n: int) -> list: ...

    @abstractmethod
    def unflatten(self, n: int, flat: list): ...

    @abstractmethod
    def boundary(self, n: int, v):
        """The value of the differential at degree n, landing in degree n-1."""

    def flat_dim(self, n: int) -> int:
        return len(flatten(self.zero(n)))

    def contains(self, n: int, v) -> bool:
        return True


class PresentedChain(ChainObj):
    """A bounded complex with explicit rational differentials."""

    def __init__(self, lo, hi, dims, diffs, name=""):
        self.lo = lo
        self.hi = hi
        self.dims = {n: dims.get(n, 0) for n in range(lo, hi + 1)}
        self.diffs = diffs
        self.name = name
        self._validate()

    def _validate(self):
        for n in range(self.lo, self.hi + 1):
            d = self.dim(n)
            dprev = self.dim(n - 1)
            M = self.diffs.get(n)
            if d and dprev:
                if M is None or len(M) != d or any(len(row) != dprev for row in M):
                    raise ValueError(f"differential at degree {n} has wrong shape")
            # d o d = 0
            Mprev = self.diffs.get(n - 1)
            if d and dprev and self.dim(n - 2) and M and Mprev:
                for i in range(d):
                    row = self._apply(Mprev, self._apply_row(M, i))
                    if any(x != 0 for x in row):
                        raise ValueError(f"differential does not square to zero at degree {n}")

    @staticmethod
    def _apply_row(M, i):
        return list(M[i])

    @staticmethod
    def _apply(M, v):
        if not M or not M[0]:
            return [Fraction(0)] * (len(M[0]) if M else 0)
        cols = len(M[0])
        return [sum((v[i] * M[i][j] for i in range(len(v))), Fraction(0)) for j in range(cols)]

    def dim(self, n):
        return self.dims.get(n, 0)

    def stage_range(self):
        return (self.lo, self.hi)

    def zero(self, n):
        return (Fraction(0),) * self.dim(n)

    def basis(self, n):
        d = self.dim(n)
        return [
            tuple(Fraction(1 if j == i else 0) for j in range(d))
            for i in range(d)
        ]

    def unflatten(self, n, flat):
        return tuple(flat[: self.dim(n)])

    def boundary(self, n, v):
        d, dprev = self.dim(n), self.dim(n - 1)
        if d == 0 or dprev == 0:
            return self.zero(n - 1)
        M = self.diffs[n]
        return tuple(
            sum((v[i] * M[i][j] for i in range(d)), Fraction(0)) for j in range(dprev)
        )


class ZeroChain(ChainObj):
    name = "0"

    def stage_range(self):
        return (0, 0)

    def zero(self, n):
        return ()

    def basis(self, n):
        return []

    def unflatten(self, n, flat):
        return ()

    def boundary(self, n, v):
        return ()


class ProductChain(ChainObj):
    def __init__(self, left, right):
        self.left = left
        self.right = right
        self.name = f"({left.name}+{right.name})"

    def stage_range(self):
        l1, h1 = self.left.stage_range()
        l2, h2 = self.right.stage_range()
        return (min(l1, l2), max(h1, h2))

    def zero(self, n):
        return (self.left.zero(n), self.right.zero(n))

    def basis(self, n):
        zl, zr = self.left.zero(n), self.right.zero(n)
        return [(b, zr) for b in self.left.basis(n)] + [(zl, b) for b in self.right.basis(n)]

    def unflatten(self, n, flat):
        k = self.left.flat_dim(n)
        return (self.left.unflatten(n, flat[:k]), self.right.unflatten(n, flat[k:]))

    def boundary(self, n, v):
        return (self.left.boundary(n, v[0]), self.right.boundary(n, v[1]))

    def contains(self, n, v):
        return self.left.contains(n, v[0]) and self.right.contains(n, v[1])


class MChain(ChainObj):
    """Degree n holds (start in A_n, homotopy in A_{n+1}, end in A_n)."""

    def __init__(self, base):
        self.base = base
        self.name = f"M({base.name})"

    def stage_range(self):
        return self.base.stage_range()

    def zero(self, n):
        return (self.base.zero(n), self.base.zero(n + 1), self.base.zero(n))

    def basis(self, n):
        za, zf = self.base.zero(n), self.base.zero(n + 1)
        out = [(b, zf, za) for b in self.base.basis(n)]
        out += [(za, b, za) for b in self.base.basis(n + 1)]
        out += [(za, zf, b) for b in self.base.basis(n)]
        return out

    def unflatten(self, n, flat):
        k = self.base.flat_dim(n)
        kf = self.base.flat_dim(n + 1)
        return (
            self.base.unflatten(n, flat[:k]),
            self.base.unflatten(n + 1, flat[k : k + kf]),
            self.base.unflatten(n, flat[k + kf :]),
        )

    def boundary(self, n, v):
        a, f, b = v
        return (
            self.base.boundary(n, a),
            vsub(vsub(b, a), self.base.boundary(n + 1, f)),
            self.base.boundary(n, b),
        )

    def contains(self, n, v):
        a, f, b = v
        return (
            self.base.contains(n, a)
            and self.base.contains(n + 1, f)
            and self.base.contains(n, b)
        )


class PullbackChain(ChainObj):
    """The degreewise kernel of (f, -g) inside a product."""

    def __init__(self, f: Mor, g: Mor, sampler=None):
        self.left = f.dom
        self.right = g.dom
        self.f = f
        self.g = g
        self.sampler = sampler
        self.name = f"({self.left.name}x_{self.right.name})"
        self._basis_cache: dict[int, list] = {}

    def stage_range(self):
        l1, h1 = self.left.stage_range()
        l2, h2 = self.right.stage_range()
        return (min(l1, l2), max(h1, h2))

    def zero(self, n):
        return (self.left.zero(n), self.right.zero(n))

    def basis(self, n):
        if n not in self._basis_cache:
            self._basis_cache[n] = self._kernel_basis(n)
        return self._basis_cache[n]

    def _kernel_basis(self, n):
        # nullspace coordinates live over the two leg bases, which for a
        # nested pullback are smaller than the ambient flat dimension, so
        # the coordinates must be expanded back into leg values
        from sympy import Matrix, Rational

        lbasis = self.left.basis(n)
        rbasis = self.right.basis(n)
        rows = []
        for b in lbasis:
            rows.append(flatten(self.f(El(n, b)).value))
        for b in rbasis:
            rows.append([-x for x in flatten(self.g(El(n, b)).value)])
        if not rows:
            return []
        if not rows[0]:
            # the shared target is zero at this degree, so the kernel is
            # the whole product of the two legs
            zl, zr = self.left.zero(n), self.right.zero(n)
            return [(b, zr) for b in lbasis] + [(zl, b) for b in rbasis]
        M = Matrix([[Rational(x.numerator, x.denominator) for x in row] for row in rows])
        out = []
        for col in M.T.nullspace():
            cs = [Fraction(int(x.p), int(x.q)) for x in col]
            out.append(
                (
                    _combo(self.left, n, cs[: len(lbasis)], lbasis),
                    _combo(self.right, n, cs[len(lbasis) :], rbasis),
                )
            )
        return out

    def unflatten(self, n, flat):
        k = self.left.flat_dim(n)
        return (self.left.unflatten(n, flat[:k]), self.right.unflatten(n, flat[k:]))

    def boundary(self, n, v):
        return (self.left.boundary(n, v[0]), self.right.boundary(n, v[1]))

    def contains(self, n, v):
        return flatten(self.f(El(n, v[0])).value) == flatten(self.g(El(n, v[1])).value)


SAMPLE_COEFFS = [Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-1, 3)]


class ChainModel(Model):
    backend = "chain"
    enum_label = "basis"

    def __init__(self, complex_: PresentedChain, config: ModelConfig | None = None):
        super().__init__(config)
        self.X0 = complex_

    # ambient category -----------------------------------------------------

    def _terminal_object(self):
        return ZeroChain()

    def _terminal_value(self, stage):
        return ()

    def _product_object(self, X, Y):
        return ProductChain(X, Y)

    def _pullback_object(self, f, g, sampler):
        return PullbackChain(f, g, sampler=sampler)

    def point(self, X, rng) -> Mor:
        T = self.terminal()
        return Mor(T, X, lambda e: El(e.stage, X.zero(e.stage)), name="pt")

    # the path functor ------------------------------------------------------

    def _path_object(self, X):
        return MChain(X)

    def Mmor(self, f: Mor) -> Mor:
        MD, MC = self.M(f.dom), self.M(f.cod)

        def fn(e: El) -> El:
            a, h, b = e.value
            return El(
                e.stage,
                (
                    f(El(e.stage, a)).value,
                    f(El(e.stage + 1, h)).value,
                    f(El(e.stage, b)).value,
                ),
            )

        return Mor(MD, MC, fn, name=f"M({f.name})")

    def s(self, X) -> Mor:
        return Mor(self.M(X), X, lambda e: El(e.stage, e.value[0]), name="s")

    def t(self, X) -> Mor:
        return Mor(self.M(X), X, lambda e: El(e.stage, e.value[2]), name="t")

    def r(self, X) -> Mor:
        return Mor(
            X,
            self.M(X),
            lambda e: El(e.stage, (e.value, X.zero(e.stage + 1), e.value)),
            name="r",
        )

    def tau(self, X) -> Mor:
        MX = self.M(X)
        return Mor(
            MX,
            MX,
            lambda e: El(e.stage, (e.value[2], vscale(-1, e.value[1]), e.value[0])),
            name="tau",
        )

    def m(self, X) -> Mor:
        P = self.m_pb(X)

        def fn(e: El) -> El:
            later, earlier = e.value
            return El(e.stage, (earlier[0], vadd(earlier[1], later[1]), later[2]))

        return Mor(P, self.M(X), fn, name="m")

    def _m2_sampler(self, X):
        MX = self.M(X)

        def sampler(rng, n):
            a = self._sample_vec(X, rng, n)
            mid = self._sample_vec(X, rng, n)
            b = self._sample_vec(X, rng, n)
            f1 = self._sample_vec(X, rng, n + 1)
            f2 = self._sample_vec(X, rng, n + 1)
            return ((mid, f2, b), (a, f1, mid))

        return sampler

    def _m3_sampler(self, X):
        pairs = self._m2_sampler(X)

        def sampler(rng, n):
            later, mid = pairs(rng, n)
            a = self._sample_vec(X, rng, n)
            h = self._sample_vec(X, rng, n + 1)
            return ((later, mid), (a, h, mid[0]))

        return sampler

    def alpha1(self, X) -> Mor:
        T = self.terminal()
        P = self.product(T, X)
        M1 = self.M(T)
        rP = self.r(P)

        def fn(e: El) -> El:
            omega, x = e.value
            return rP(El(e.stage, ((), x)))

        return Mor(self.product(M1, X), self.M(P), fn, name="alpha1")

    def eta(self, X) -> Mor:
        MX = self.M(X)
        MMX = self.M(MX)

        def fn(e: El) -> El:
            a, f, b = e.value
            za = X.zero(e.stage)
            zf1 = X.zero(e.stage + 1)
            zf2 = X.zero(e.stage + 2)
            return El(e.stage, ((a, f, b), (f, zf2, zf1), (b, zf1, b)))

        return Mor(MX, MMX, fn, name="eta")

    def zip_m(self, P, a: El, b: El) -> El:
        (la, lf, lb), (ra, rf, rb) = a.value, b.value
        return El(a.stage, ((la, ra), (lf, rf), (lb, rb)))

    # elements ---------------------------------------------------------------

    def stages(self, X):
        lo, hi = X.stage_range()
        return list(range(lo, hi + 1))

    def elements(self, X, stage):
        # laws here are identities of linear maps, so checking them on a
        # basis at every degree is the full matrix identity
        return list(X.basis(stage))

    def _sample_vec(self, X, rng, stage):
        v = X.zero(stage)
        for b in X.basis(stage):
            v = vadd(v, vscale(rng.choice(SAMPLE_COEFFS), b))
        return v

    def sample_at(self, X, rng, stage) -> El:
        if getattr(X, "sampler", None) is not None:
            return El(stage, X.sampler(rng, stage))
        return El(stage, self._sample_vec(X, rng, stage))

    def eq(self, X, a: El, b: El) -> bool:
        return a.stage == b.stage and flatten(a.value) == flatten(b.value)

    def validate(self, X, e: El) -> None:
        z = X.zero(e.stage)
        if len(flatten(e.value)) != len(flatten(z)):
            raise ValueError(f"wrong shape at degree {e.stage} of {X.name}")
        if not X.contains(e.stage, e.value):
            raise ValueError(f"value outside {X.name} at degree {e.stage}")

    def boundary_el(self, X, e: El) -> El:
        return El(e.stage - 1, X.boundary(e.stage, e.value))

    # law-suite hooks --------------------------------------------------------

    def stock_objects(self):
        return [self.X0]

    def stock_morphisms(self):
        X = self.X0
        double = Mor(X, X, lambda e: El(e.stage, vscale(Fraction(2), e.value)), name="x2")
        zero = Mor(X, X, lambda e: El(e.stage, X.zero(e.stage)), name="0")
        rng = random.Random(0)
        return [
            self.identity(X),
            self.bang(X),
            self.point(X, rng),
            double,
            zero,
        ]


def matrix_of(model: ChainModel, f: Mor, stage: int):
    """The matrix of a (necessarily linear) morphism at one degree, as rows."""
    return tuple(tuple(flatten(f(El(stage, b)).value)) for b in f.dom.basis(stage))


def chain_from_json(data, name="") -> PresentedChain:
    lo, hi = int(data["range"][0]), int(data["range"][1])
    dims = {int(k): int(v) for k, v in data["dims"].items()}
    diffs = {}
    for k, rows in data.get("differentials", {}).items():
        diffs[int(k)] = tuple(tuple(parse_rational(x) for x in row) for row in rows)
    return PresentedChain(lo, hi, dims, diffs, name=name)


def chain_to_json(X: PresentedChain) -> dict:
    return {
        "range": [X.lo, X.hi],
        "dims": {str(n): X.dim(n) for n in range(X.lo, X.hi + 1) if X.dim(n)},
        "differentials": {
            str(n): [[str(x) for x in row] for row in M] for n, M in X.diffs.items()
        },
    }


def parse_rational(x) -> Fraction:
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(str(x))
