"""The cloven factorization system generated by a model's path objects.

Any morphism f: X -> Y factors through the object Pf of pairs (path into Y,
element of X over its endpoint).  The first half lam_f is a strong
deformation retract inclusion, the second half rho_f carries a path-lifting
operator, and chosen diagonal fillers come from composing the two kinds of
structure.  Homotopies, whiskering, and the path-transport operator live
here too.

Lifting and transport are element-level operators, so reindexing a homotopy
along any morphism commutes with them by construction; no law restates
that.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import mutations
from .backends.base import El, Model, Mor, const_elem, m_apply, shape_of
from .laws import Counterexample, Domain, law


@dataclass(repr=False)
class Homotopy:
    """A morphism into M(target) with its two recorded endpoint maps."""

    target: object
    mor: Mor
    src: Mor
    tgt: Mor

    def __repr__(self):
        return f"Homotopy({self.mor.name or '?'})"


def refl_homotopy(model: Model, f: Mor) -> Homotopy:
    """The identity homotopy on f."""
    return Homotopy(f.cod, model.compose(model.r(f.cod), f), f, f)


def compose_homotopies(model: Model, later: Homotopy, earlier: Homotopy) -> Homotopy:
    """Vertical composite; earlier's target must be later's source."""
    Y = later.target

    def fn(e: El) -> El:
        return m_apply(model, Y, later.mor(e), earlier.mor(e))

    mor = Mor(later.mor.dom, model.M(Y), fn, name="hcomp")
    return Homotopy(Y, mor, earlier.src, later.tgt)


def whisker_left(model: Model, k: Mor, th: Homotopy) -> Homotopy:
    """Post-compose a homotopy by k out of its target object."""
    return Homotopy(
        k.cod,
        model.compose(model.Mmor(k), th.mor),
        model.compose(k, th.src),
        model.compose(k, th.tgt),
    )


def whisker_right(model: Model, th: Homotopy, e: Mor) -> Homotopy:
    """Pre-compose a homotopy by e into its stage object."""
    return Homotopy(
        th.target,
        model.compose(th.mor, e),
        model.compose(th.src, e),
        model.compose(th.tgt, e),
    )


def reverse_homotopy(model: Model, th: Homotopy) -> Homotopy:
    return Homotopy(
        th.target,
        model.compose(model.tau(th.target), th.mor),
        th.tgt,
        th.src,
    )


# --------------------------------------------------------------- factorizing


@dataclass
class Factorization:
    f: Mor
    mid: object
    d: Mor
    e: Mor
    lam: Mor
    rho: Mor

    def __repr__(self):
        return f"factorize({self.f.name or '?'})"


def factorize(model: Model, f: Mor) -> Factorization:
    """f = rho o lam through the object of paths ending over f."""
    Y = f.cod
    tY = model.t(Y)
    P = model.pullback(tY, f, sampler=model.anchored_sampler(f))
    d = Mor(P, model.M(Y), lambda e: El(e.stage, e.value[0]), name="d")
    e_ = Mor(P, f.dom, lambda e: El(e.stage, e.value[1]), name="e")
    rY = model.r(Y)

    def lam_fn(e: El) -> El:
        return El(e.stage, (rY(f(e)).value, e.value))

    lam = Mor(f.dom, P, lam_fn, name=f"lam({f.name})")
    rho = model.compose(model.s(Y), d)
    rho.name = f"rho({f.name})"
    return Factorization(f=f, mid=P, d=d, e=e_, lam=lam, rho=rho)


class LStructure:
    """Strong-deformation-retract data on f, validated on construction."""

    def __init__(self, model: Model, f: Mor, retract: Mor, theta: Homotopy,
                 probes: int = 4):
        self.f = f
        self.retract = retract
        self.theta = theta
        rng = random.Random("lstructure")
        Y = f.cod
        MY = model.M(Y)
        for _ in range(probes):
            x = model.sample(f.dom, rng)
            if not model.eq(f.dom, retract(f(x)), x):
                raise ValueError("L-structure law violated: retract o f = id")
            if not model.eq(MY, theta.mor(f(x)), model.r(Y)(f(x))):
                raise ValueError("L-structure law violated: homotopy trivial on the domain")
            y = model.sample(Y, rng)
            got = theta.mor(y)
            if not model.eq(Y, model.s(Y)(got), y):
                raise ValueError("L-structure law violated: homotopy starts at the identity")
            if not model.eq(Y, model.t(Y)(got), f(retract(y))):
                raise ValueError("L-structure law violated: homotopy ends at the retraction")

    def __repr__(self):
        return f"LStructure({self.f.name or '?'})"


@dataclass(repr=False)
class RStructure:
    """Path-lifting data on f: an element-level operator on pairs
    (path into the codomain, domain element over its endpoint)."""

    f: Mor
    op: object

    def lift_el(self, psi: El, x: El) -> El:
        return self.op(psi, x)

    def __repr__(self):
        return f"RStructure({self.f.name or '?'})"


def sigma(model: Model, fact: Factorization) -> LStructure:
    """The L-structure on lam_f: retract by e_f, contract along tails."""
    f, P = fact.f, fact.mid
    X = f.dom
    eta = model.eta(f.cod)

    def theta_fn(w: El) -> El:
        tails = eta(fact.d(w))
        omega = shape_of(model, model.M(f.cod), tails)
        cst = const_elem(model, X, omega, fact.e(w))
        return model.zip_m(P, tails, cst)

    theta = Homotopy(
        P,
        Mor(P, model.M(P), theta_fn, name="theta"),
        model.identity(P),
        model.compose(fact.lam, fact.e),
    )
    return LStructure(model, fact.lam, fact.e, theta)


def pi(model: Model, fact: Factorization) -> RStructure:
    """The R-structure on rho_f: prepend the new path to the stored one."""
    Y = fact.f.cod

    def op(psi: El, w: El) -> El:
        phi = El(w.stage, w.value[0])
        if mutations.active("pi-compose-order"):
            moved = m_apply(model, Y, psi, phi)
        else:
            moved = m_apply(model, Y, phi, psi)
        return El(w.stage, (moved.value, w.value[1]))

    return RStructure(fact.rho, op)


def closed_rstructure(model: Model, X) -> RStructure:
    """Constant-path lifting on X -> 1; every object is fibrant over 1."""
    return RStructure(model.bang(X), lambda psi, x: x)


def fill_p(model: Model, src: Factorization, dst: Factorization,
           h: Mor, k: Mor, probes: int = 4) -> Mor:
    """The functorial middle map Pf -> Pg of a square k o f = g o h."""
    rng = random.Random("fillp")
    for _ in range(probes):
        a = model.sample(src.f.dom, rng)
        if not model.eq(dst.f.cod, k(src.f(a)), dst.f(h(a))):
            raise ValueError("square does not commute on probes")
    Mk = model.Mmor(k)

    def fn(w: El) -> El:
        return El(w.stage, (Mk(El(w.stage, w.value[0])).value, h(El(w.stage, w.value[1])).value))

    return Mor(src.mid, dst.mid, fn, name=f"P({h.name},{k.name})")


def lift(model: Model, h: Mor, k: Mor, L: LStructure, R: RStructure) -> Mor:
    """The chosen diagonal filler of a square from an L-map to an R-map."""
    Mk = model.Mmor(k)

    def fn(b: El) -> El:
        return R.op(Mk(L.theta.mor(b)), h(L.retract(b)))

    return Mor(L.f.cod, R.f.dom, fn, name="lift")


def transport_mor(model: Model, R: RStructure) -> Mor:
    """R's operator as a morphism out of the factorization middle object."""
    F = factorize(model, R.f)

    def fn(w: El) -> El:
        return R.op(El(w.stage, w.value[0]), El(w.stage, w.value[1]))

    return Mor(F.mid, R.f.dom, fn, name="p"), F


def path_lift(model: Model, R: RStructure, hty: Homotopy, x_mor: Mor):
    """Transport a section along a homotopy into R's map and lift the
    homotopy itself; returns (transported section, lifted homotopy)."""
    p_mor, F = transport_mor(model, R)
    theta = sigma(model, F).theta
    Mp = model.Mmor(p_mor)

    def pair_fn(v: El) -> El:
        return El(v.stage, (hty.mor(v).value, x_mor(v).value))

    into = Mor(x_mor.dom, F.mid, pair_fn, name="pairing")
    star = model.compose(p_mor, into)
    lifted = Homotopy(
        R.f.dom,
        model.compose(Mp, theta.mor, into),
        star,
        x_mor,
    )
    return star, lifted


# --------------------------------------------------------------------- laws
#
# Case generators below draw factorizations and commuting squares from the
# model's stock morphisms, so every law runs on several distinct lifting
# problems per input object.


def _facts(model):
    return [factorize(model, f) for f in model.stock_morphisms()]


def _fact_cases(model):
    return [(F,) for F in _facts(model)]


def _square_cases(model):
    """Commuting squares (h, k): F.f -> G.f between stock factorizations."""
    out = []
    for f in model.stock_morphisms():
        F = factorize(model, f)
        out.append((F, F, model.identity(f.dom), model.identity(f.cod)))
        out.append((F, factorize(model, model.bang(f.cod)), f, model.bang(f.cod)))
        out.append((F, factorize(model, model.identity(f.cod)), f, model.identity(f.cod)))
    return out


def _compose_square_cases(model):
    """Composable square pairs F.f -> bang -> bang through stock maps."""
    mors = list(model.stock_morphisms())
    out = []
    for f in mors:
        F = factorize(model, f)
        G = factorize(model, model.bang(f.cod))
        one = G.f.cod
        for h2 in mors:
            if not (h2.dom is f.cod or h2.dom == f.cod):
                continue
            H = factorize(model, model.bang(h2.cod))
            out.append((F, G, H, f, model.bang(f.cod), h2, model.identity(one)))
    return out


def _lift_cases(model):
    """Squares from lam_f to rho_g given by middle maps q: Pf -> Pg."""
    out = []
    for F in _facts(model):
        L = sigma(model, F)
        R = pi(model, F)
        out.append((F, F, L, R, model.identity(F.mid)))
        out.append((F, F, L, R, model.compose(F.lam, F.e)))
        Gb = factorize(model, model.bang(F.f.cod))
        qx = fill_p(model, F, Gb, F.f, model.bang(F.f.cod))
        out.append((F, Gb, L, pi(model, Gb), qx))
    return out


def _lift_square(model, F, G, R, q):
    h = model.compose(q, F.lam)
    k = model.compose(G.rho, q)
    return h, k


def _pathlift_cases(model):
    out = []
    for F in _facts(model):
        R = pi(model, F)
        p_mor, G = transport_mor(model, R)
        theta = sigma(model, G).theta
        out.append((F, R, G, p_mor, theta, model.Mmor(p_mor)))
    return out


@law("wfs/rho-after-lambda", "wfs")
def law_rho_after_lambda(model, X):
    def check(F, x):
        got = F.rho(F.lam(x))
        want = F.f(x)
        if not model.eq(F.f.cod, got, want):
            raise Counterexample({"case": F, "x": x, "got": got, "want": want})

    return Domain(model, _fact_cases(model), lambda F: F.f.dom), check


@law("wfs/lambda-components", "wfs")
def law_lambda_components(model, X):
    def check(F, x):
        w = F.lam(x)
        Y = F.f.cod
        path = F.d(w)
        want = model.r(Y)(F.f(x))
        if not model.eq(model.M(Y), path, want):
            raise Counterexample({"case": F, "x": x, "got": path, "want": want})
        if not model.eq(F.f.dom, F.e(w), x):
            raise Counterexample({"case": F, "x": x, "got": F.e(w)})

    return Domain(model, _fact_cases(model), lambda F: F.f.dom), check


@law("wfs/mid-anchored", "wfs")
def law_mid_anchored(model, X):
    def check(F, w):
        Y = F.f.cod
        end = model.t(Y)(F.d(w))
        under = F.f(F.e(w))
        if not model.eq(Y, end, under):
            raise Counterexample({"case": F, "w": w, "end": end, "under": under})

    return Domain(model, _fact_cases(model), lambda F: F.mid), check


@law("wfs/sigma-retract", "wfs")
def law_sigma_retract(model, X):
    def check(F, x):
        L = sigma(model, F)
        got = L.retract(L.f(x))
        if not model.eq(F.f.dom, got, x):
            raise Counterexample({"case": F, "x": x, "got": got})

    return Domain(model, _fact_cases(model), lambda F: F.f.dom), check


@law("wfs/sigma-endpoints", "wfs")
def law_sigma_endpoints(model, X):
    def check(F, w):
        th = sigma(model, F).theta.mor(w)
        P = F.mid
        start = model.s(P)(th)
        if not model.eq(P, start, w):
            raise Counterexample({"case": F, "w": w, "start": start})
        end = model.t(P)(th)
        want = F.lam(F.e(w))
        if not model.eq(P, end, want):
            raise Counterexample({"case": F, "w": w, "end": end, "want": want})

    return Domain(model, _fact_cases(model), lambda F: F.mid), check


@law("wfs/sigma-trivial", "wfs")
def law_sigma_trivial(model, X):
    def check(F, x):
        th = sigma(model, F).theta
        got = th.mor(F.lam(x))
        want = model.r(F.mid)(F.lam(x))
        if not model.eq(model.M(F.mid), got, want):
            raise Counterexample({"case": F, "x": x, "got": got, "want": want})

    return Domain(model, _fact_cases(model), lambda F: F.f.dom), check


@law("wfs/pi-unit", "wfs")
def law_pi_unit(model, X):
    def check(F, w):
        R = pi(model, F)
        refl = model.r(F.f.cod)(F.rho(w))
        got = R.op(refl, w)
        if not model.eq(F.mid, got, w):
            raise Counterexample({"case": F, "w": w, "got": got})

    return Domain(model, _fact_cases(model), lambda F: F.mid), check


def _over_rho(model, F):
    return model.pullback(
        model.t(F.f.cod), F.rho, sampler=model.anchored_sampler(F.rho)
    )


@law("wfs/pi-over", "wfs")
def law_pi_over(model, X):
    def check(F, e):
        psi = El(e.stage, e.value[0])
        w = El(e.stage, e.value[1])
        Y = F.f.cod
        got = F.rho(pi(model, F).op(psi, w))
        want = model.s(Y)(psi)
        if not model.eq(Y, got, want):
            raise Counterexample({"case": F, "psi": psi, "w": w, "got": got, "want": want})

    return Domain(model, _fact_cases(model), lambda F: _over_rho(model, F)), check


@law("wfs/pi-into", "wfs")
def law_pi_into(model, X):
    def check(F, e):
        psi = El(e.stage, e.value[0])
        w = El(e.stage, e.value[1])
        got = pi(model, F).op(psi, w)
        try:
            model.validate(F.mid, got)
        except ValueError as exc:
            raise Counterexample({"case": F, "psi": psi, "w": w, "invalid": str(exc)})

    return Domain(model, _fact_cases(model), lambda F: _over_rho(model, F)), check


@law("wfs/fill-identity", "wfs")
def law_fill_identity(model, X):
    def check(F, w):
        q = fill_p(model, F, F, model.identity(F.f.dom), model.identity(F.f.cod))
        got = q(w)
        if not model.eq(F.mid, got, w):
            raise Counterexample({"case": F, "w": w, "got": got})

    return Domain(model, _fact_cases(model), lambda F: F.mid), check


@law("wfs/fill-lambda", "wfs")
def law_fill_lambda(model, X):
    def check(F, G, h, k, a):
        q = fill_p(model, F, G, h, k)
        got = q(F.lam(a))
        want = G.lam(h(a))
        if not model.eq(G.mid, got, want):
            raise Counterexample({"case": (F, G, h, k), "a": a, "got": got, "want": want})

    return Domain(model, _square_cases(model), lambda F, G, h, k: F.f.dom), check


@law("wfs/fill-rho", "wfs")
def law_fill_rho(model, X):
    def check(F, G, h, k, w):
        q = fill_p(model, F, G, h, k)
        got = G.rho(q(w))
        want = k(F.rho(w))
        if not model.eq(G.f.cod, got, want):
            raise Counterexample({"case": (F, G, h, k), "w": w, "got": got, "want": want})

    return Domain(model, _square_cases(model), lambda F, G, h, k: F.mid), check


@law("wfs/fill-compose", "wfs")
def law_fill_compose(model, X):
    def check(F, G, H, h1, k1, h2, k2, w):
        q1 = fill_p(model, F, G, h1, k1)
        q2 = fill_p(model, G, H, h2, k2)
        q12 = fill_p(model, F, H, model.compose(h2, h1), model.compose(k2, k1))
        got = q12(w)
        want = q2(q1(w))
        if not model.eq(H.mid, got, want):
            raise Counterexample({"case": (F, H), "w": w, "got": got, "want": want})

    return Domain(model, _compose_square_cases(model), lambda *case: case[0].mid), check


@law("wfs/lift-upper", "wfs")
def law_lift_upper(model, X):
    def check(F, G, L, R, q, a):
        h, k = _lift_square(model, F, G, R, q)
        j = lift(model, h, k, L, R)
        got = j(F.lam(a))
        want = h(a)
        if not model.eq(G.mid, got, want):
            raise Counterexample({"case": (F, G, q.name), "a": a, "got": got, "want": want})

    return Domain(model, _lift_cases(model), lambda F, G, L, R, q: F.f.dom), check


@law("wfs/lift-lower", "wfs")
def law_lift_lower(model, X):
    def check(F, G, L, R, q, b):
        h, k = _lift_square(model, F, G, R, q)
        j = lift(model, h, k, L, R)
        got = G.rho(j(b))
        want = k(b)
        if not model.eq(G.f.cod, got, want):
            raise Counterexample({"case": (F, G, q.name), "b": b, "got": got, "want": want})

    return Domain(model, _lift_cases(model), lambda F, G, L, R, q: F.mid), check


@law("wfs/lift-natural-left", "wfs")
def law_lift_natural_left(model, X):
    def check(Fs, Ft, u0, k0, b):
        v = fill_p(model, Fs, Ft, u0, k0)
        Lt = sigma(model, Ft)
        Ls = sigma(model, Fs)
        R = pi(model, Ft)
        h, k = _lift_square(model, Ft, Ft, R, model.identity(Ft.mid))
        j = lift(model, h, k, Lt, R)
        jj = lift(model, model.compose(h, u0), model.compose(k, v), Ls, R)
        got = jj(b)
        want = j(v(b))
        if not model.eq(Ft.mid, got, want):
            raise Counterexample({"case": (Fs, Ft), "b": b, "got": got, "want": want})

    return Domain(model, _square_cases(model), lambda Fs, Ft, u0, k0: Fs.mid), check


@law("wfs/lift-natural-right", "wfs")
def law_lift_natural_right(model, X):
    def check(Ft, Gt, h0, k0, b):
        w = fill_p(model, Ft, Gt, h0, k0)
        Lt = sigma(model, Ft)
        Rt = pi(model, Ft)
        Rg = pi(model, Gt)
        h, k = _lift_square(model, Ft, Ft, Rt, model.identity(Ft.mid))
        j = lift(model, h, k, Lt, Rt)
        jj = lift(model, model.compose(w, h), model.compose(k0, k), Lt, Rg)
        got = jj(b)
        want = w(j(b))
        if not model.eq(Gt.mid, got, want):
            raise Counterexample({"case": (Ft, Gt), "b": b, "got": got, "want": want})

    return Domain(model, _square_cases(model), lambda Ft, Gt, h0, k0: Ft.mid), check


@law("wfs/homotopy-compose", "wfs")
def law_homotopy_compose(model, X):
    def check(F, w):
        th = sigma(model, F).theta
        still = refl_homotopy(model, model.identity(F.mid))
        c = compose_homotopies(model, th, still)
        got = c.mor(w)
        want = th.mor(w)
        if not model.eq(model.M(F.mid), got, want):
            raise Counterexample({"case": F, "w": w, "got": got, "want": want})
        if not model.eq(F.mid, c.src(w), w):
            raise Counterexample({"case": F, "w": w, "src": c.src(w)})

    return Domain(model, _fact_cases(model), lambda F: F.mid), check


@law("wfs/homotopy-reverse", "wfs")
def law_homotopy_reverse(model, X):
    def check(F, w):
        P = F.mid
        th = sigma(model, F).theta
        rev = reverse_homotopy(model, th)
        got = rev.mor(w)
        if not model.eq(P, model.s(P)(got), F.lam(F.e(w))):
            raise Counterexample({"case": F, "w": w, "start": model.s(P)(got)})
        if not model.eq(P, model.t(P)(got), w):
            raise Counterexample({"case": F, "w": w, "end": model.t(P)(got)})
        back = reverse_homotopy(model, rev).mor(w)
        if not model.eq(model.M(P), back, th.mor(w)):
            raise Counterexample({"case": F, "w": w, "got": back, "want": th.mor(w)})

    return Domain(model, _fact_cases(model), lambda F: F.mid), check


@law("wfs/homotopy-whisker", "wfs")
def law_homotopy_whisker(model, X):
    def check(F, w):
        th = sigma(model, F).theta
        wl = whisker_left(model, F.e, th)
        got = wl.mor(w)
        Xd = F.f.dom
        want = F.e(w)
        if not model.eq(Xd, model.s(Xd)(got), want):
            raise Counterexample({"case": F, "w": w, "start": model.s(Xd)(got)})
        if not model.eq(Xd, model.t(Xd)(got), want):
            raise Counterexample({"case": F, "w": w, "end": model.t(Xd)(got)})
        if not model.eq(Xd, wl.src(w), want) or not model.eq(Xd, wl.tgt(w), want):
            raise Counterexample({"case": F, "w": w, "recorded": (wl.src(w), wl.tgt(w))})

    return Domain(model, _fact_cases(model), lambda F: F.mid), check


@law("wfs/pathlift-projects", "wfs")
def law_pathlift_projects(model, X):
    def check(F, R, G, p_mor, theta, Mp, e):
        lifted = Mp(theta.mor(e))
        got = model.Mmor(F.rho)(lifted)
        want = El(e.stage, e.value[0])
        if not model.eq(model.M(F.f.cod), got, want):
            raise Counterexample({"case": F, "e": e, "got": got, "want": want})

    return Domain(model, _pathlift_cases(model), lambda *case: case[2].mid), check


@law("wfs/pathlift-endpoints", "wfs")
def law_pathlift_endpoints(model, X):
    def check(F, R, G, p_mor, theta, Mp, e):
        P = F.mid
        lifted = Mp(theta.mor(e))
        star = p_mor(e)
        if not model.eq(P, model.s(P)(lifted), star):
            raise Counterexample({"case": F, "e": e, "start": model.s(P)(lifted), "star": star})
        tail = El(e.stage, e.value[1])
        if not model.eq(P, model.t(P)(lifted), tail):
            raise Counterexample({"case": F, "e": e, "end": model.t(P)(lifted), "want": tail})

    return Domain(model, _pathlift_cases(model), lambda *case: case[2].mid), check


@law("wfs/pathlift-identity", "wfs")
def law_pathlift_identity(model, X):
    def check(F, R, G, p_mor, theta, Mp, w):
        still = model.r(F.f.cod)(F.rho(w))
        e = El(w.stage, (still.value, w.value))
        star = p_mor(e)
        if not model.eq(F.mid, star, w):
            raise Counterexample({"case": F, "w": w, "star": star})
        lifted = Mp(theta.mor(e))
        want = model.r(F.mid)(w)
        if not model.eq(model.M(F.mid), lifted, want):
            raise Counterexample({"case": F, "w": w, "got": lifted, "want": want})

    return Domain(model, _pathlift_cases(model), lambda *case: case[0].mid), check


@law("wfs/pathlift-reindex", "wfs")
def law_pathlift_reindex(model, X):
    def check(F, R, G, p_mor, theta, Mp, w):
        Y = F.f.cod
        hty = Homotopy(
            Y, G.d, model.compose(model.s(Y), G.d), model.compose(F.rho, G.e)
        )
        star1, lifted1 = path_lift(model, R, hty, G.e)
        g = G.lam
        star2, lifted2 = path_lift(
            model, R, whisker_right(model, hty, g), model.compose(G.e, g)
        )
        if not model.eq(F.mid, star2(w), star1(g(w))):
            raise Counterexample({"case": F, "w": w, "got": star2(w), "want": star1(g(w))})
        if not model.eq(model.M(F.mid), lifted2.mor(w), lifted1.mor(g(w))):
            raise Counterexample({"case": F, "w": w, "got": lifted2.mor(w)})

    return Domain(model, _pathlift_cases(model), lambda *case: case[0].mid), check


@law("wfs/closed-type-lift", "wfs")
def law_closed_type_lift(model, X):
    def check(w):
        F = factorize(model, model.bang(X))
        R = closed_rstructure(model, X)
        psi, x = F.d(w), F.e(w)
        got = R.op(psi, x)
        if not model.eq(X, got, x):
            raise Counterexample({"w": w, "got": got, "want": x})
        one = F.f.cod
        if not model.eq(one, model.bang(X)(got), model.s(one)(psi)):
            raise Counterexample({"w": w, "over": model.bang(X)(got)})

    def carrier():
        return factorize(model, model.bang(X)).mid

    return Domain(model, [()], carrier), check


WFS_LAWS = (
    law_rho_after_lambda,
    law_lambda_components,
    law_mid_anchored,
    law_sigma_retract,
    law_sigma_endpoints,
    law_sigma_trivial,
    law_pi_unit,
    law_pi_over,
    law_pi_into,
    law_fill_identity,
    law_fill_lambda,
    law_fill_rho,
    law_fill_compose,
    law_lift_upper,
    law_lift_lower,
    law_lift_natural_left,
    law_lift_natural_right,
    law_homotopy_compose,
    law_homotopy_reverse,
    law_homotopy_whisker,
    law_pathlift_projects,
    law_pathlift_endpoints,
    law_pathlift_identity,
    law_pathlift_reindex,
    law_closed_type_lift,
)


def wfs_laws(model: Model):
    return list(WFS_LAWS)
