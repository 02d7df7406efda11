"""Equational law suites over any model instance.

Each law quantifies one element variable over a carrier object, optionally
crossed with finitely many fixed cases (stock morphisms, operators).  When
the carrier enumerates, the law runs exhaustively; otherwise it samples with
a per-law seeded generator, so reports are reproducible law by law.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .backends.base import El, Model, Mor, const_elem, m_apply, shape_of, strength_mor


class Counterexample(Exception):
    def __init__(self, details):
        super().__init__(str(details))
        self.details = details


@dataclass(frozen=True)
class Law:
    law_id: str
    group: str
    levels: frozenset
    build: Callable

    def __repr__(self):
        return f"Law({self.law_id})"


ALL_LEVELS = frozenset({"1", "1p", "1pp"})
UNITAL = frozenset({"1", "1p"})
FULL_ONLY = frozenset({"1"})


class Domain:
    """Fixed cases crossed with the elements of a per-case carrier."""

    def __init__(self, model: Model, cases, obj_of):
        self.model = model
        self.cases = list(cases)
        self.obj_of = obj_of

    def enum(self):
        out = []
        for case in self.cases:
            X = self.obj_of(*case)
            for stage in self.model.stages(X):
                els = self.model.elements(X, stage)
                if els is None:
                    return None
                out.extend(case + (El(stage, v),) for v in els)
        return out

    def sample(self, rng):
        case = self.cases[rng.randrange(len(self.cases))]
        X = self.obj_of(*case)
        return case + (self.model.sample(X, rng),)


def elements_of(model, X):
    return Domain(model, [()], lambda: X)


def law(law_id, group, levels=ALL_LEVELS):
    def wrap(build):
        return Law(law_id=law_id, group=group, levels=levels, build=build)

    return wrap


def _plain_stock(model):
    mors = list(model.stock_morphisms())
    if not mors:
        raise ValueError("model provides no stock morphisms")
    return mors


def _stock_cases(model):
    return [(f,) for f in _plain_stock(model)]


def _composable_stock(model):
    mors = _plain_stock(model)
    return [
        (g, f)
        for g in mors
        for f in mors
        if g.dom is f.cod or g.dom == f.cod
    ]


# ------------------------------------------------------------------ axiom 1


@law("axiom1/s-after-r", "axiom1")
def law_s_after_r(model, X):
    def check(x):
        got = model.s(X)(model.r(X)(x))
        if not model.eq(X, got, x):
            raise Counterexample({"x": x, "got": got})

    return elements_of(model, X), check


@law("axiom1/t-after-r", "axiom1")
def law_t_after_r(model, X):
    def check(x):
        got = model.t(X)(model.r(X)(x))
        if not model.eq(X, got, x):
            raise Counterexample({"x": x, "got": got})

    return elements_of(model, X), check


@law("axiom1/s-of-concat", "axiom1")
def law_s_of_concat(model, X):
    def check(e):
        later, earlier = e.value
        got = model.s(X)(model.m(X)(e))
        want = model.s(X)(El(e.stage, earlier))
        if not model.eq(X, got, want):
            raise Counterexample({"pair": e, "got": got, "want": want})

    return elements_of(model, model.m_pb(X)), check


@law("axiom1/t-of-concat", "axiom1")
def law_t_of_concat(model, X):
    def check(e):
        later, earlier = e.value
        got = model.t(X)(model.m(X)(e))
        want = model.t(X)(El(e.stage, later))
        if not model.eq(X, got, want):
            raise Counterexample({"pair": e, "got": got, "want": want})

    return elements_of(model, model.m_pb(X)), check


@law("axiom1/left-unit", "axiom1")
def law_left_unit(model, X):
    MX = model.M(X)

    def check(p):
        unit = model.r(X)(model.s(X)(p))
        got = m_apply(model, X, p, unit)
        if not model.eq(MX, got, p):
            raise Counterexample({"p": p, "got": got})

    return elements_of(model, MX), check


@law("axiom1/right-unit", "axiom1", levels=UNITAL)
def law_right_unit(model, X):
    MX = model.M(X)

    def check(p):
        unit = model.r(X)(model.t(X)(p))
        got = m_apply(model, X, unit, p)
        if not model.eq(MX, got, p):
            raise Counterexample({"p": p, "got": got})

    return elements_of(model, MX), check


@law("axiom1/assoc", "axiom1", levels=FULL_ONLY)
def law_assoc(model, X):
    MX = model.M(X)

    def check(e):
        (later, mid), earliest = e.value
        p, q, o = El(e.stage, later), El(e.stage, mid), El(e.stage, earliest)
        left = m_apply(model, X, m_apply(model, X, p, q), o)
        right = m_apply(model, X, p, m_apply(model, X, q, o))
        if not model.eq(MX, left, right):
            raise Counterexample({"triple": e, "left": left, "right": right})

    return elements_of(model, model.m3_pb(X)), check


@law("axiom1/s-after-tau", "axiom1")
def law_s_after_tau(model, X):
    def check(p):
        got = model.s(X)(model.tau(X)(p))
        want = model.t(X)(p)
        if not model.eq(X, got, want):
            raise Counterexample({"p": p, "got": got, "want": want})

    return elements_of(model, model.M(X)), check


@law("axiom1/t-after-tau", "axiom1")
def law_t_after_tau(model, X):
    def check(p):
        got = model.t(X)(model.tau(X)(p))
        want = model.s(X)(p)
        if not model.eq(X, got, want):
            raise Counterexample({"p": p, "got": got, "want": want})

    return elements_of(model, model.M(X)), check


@law("axiom1/tau-after-r", "axiom1")
def law_tau_after_r(model, X):
    MX = model.M(X)

    def check(x):
        rx = model.r(X)(x)
        got = model.tau(X)(rx)
        if not model.eq(MX, got, rx):
            raise Counterexample({"x": x, "got": got})

    return elements_of(model, X), check


@law("axiom1/tau-involution", "axiom1")
def law_tau_involution(model, X):
    MX = model.M(X)

    def check(p):
        got = model.tau(X)(model.tau(X)(p))
        if not model.eq(MX, got, p):
            raise Counterexample({"p": p, "got": got})

    return elements_of(model, MX), check


@law("axiom1/tau-antihom", "axiom1", levels=FULL_ONLY)
def law_tau_antihom(model, X):
    MX = model.M(X)

    def check(e):
        later, earlier = e.value
        tau = model.tau(X)
        left = tau(model.m(X)(e))
        right = m_apply(
            model, X, tau(El(e.stage, earlier)), tau(El(e.stage, later))
        )
        if not model.eq(MX, left, right):
            raise Counterexample({"pair": e, "left": left, "right": right})

    return elements_of(model, model.m_pb(X)), check


@law("axiom1/natural-s", "axiom1")
def law_natural_s(model, X):
    def check(f, p):
        got = model.s(f.cod)(model.Mmor(f)(p))
        want = f(model.s(f.dom)(p))
        if not model.eq(f.cod, got, want):
            raise Counterexample({"f": f, "p": p, "got": got, "want": want})

    return Domain(model, _stock_cases(model), lambda f: model.M(f.dom)), check


@law("axiom1/natural-t", "axiom1")
def law_natural_t(model, X):
    def check(f, p):
        got = model.t(f.cod)(model.Mmor(f)(p))
        want = f(model.t(f.dom)(p))
        if not model.eq(f.cod, got, want):
            raise Counterexample({"f": f, "p": p, "got": got, "want": want})

    return Domain(model, _stock_cases(model), lambda f: model.M(f.dom)), check


@law("axiom1/natural-r", "axiom1")
def law_natural_r(model, X):
    def check(f, x):
        got = model.Mmor(f)(model.r(f.dom)(x))
        want = model.r(f.cod)(f(x))
        if not model.eq(model.M(f.cod), got, want):
            raise Counterexample({"f": f, "x": x, "got": got, "want": want})

    return Domain(model, _stock_cases(model), lambda f: f.dom), check


@law("axiom1/natural-tau", "axiom1")
def law_natural_tau(model, X):
    def check(f, p):
        got = model.tau(f.cod)(model.Mmor(f)(p))
        want = model.Mmor(f)(model.tau(f.dom)(p))
        if not model.eq(model.M(f.cod), got, want):
            raise Counterexample({"f": f, "p": p, "got": got, "want": want})

    return Domain(model, _stock_cases(model), lambda f: model.M(f.dom)), check


@law("axiom1/natural-m", "axiom1")
def law_natural_m(model, X):
    def check(f, e):
        later, earlier = e.value
        Mf = model.Mmor(f)
        got = Mf(model.m(f.dom)(e))
        want = m_apply(
            model, f.cod, Mf(El(e.stage, later)), Mf(El(e.stage, earlier))
        )
        if not model.eq(model.M(f.cod), got, want):
            raise Counterexample({"f": f, "pair": e, "got": got, "want": want})

    return Domain(model, _stock_cases(model), lambda f: model.m_pb(f.dom)), check


@law("axiom1/functor-id", "axiom1")
def law_functor_id(model, X):
    MX = model.M(X)

    def check(p):
        got = model.Mmor(model.identity(X))(p)
        if not model.eq(MX, got, p):
            raise Counterexample({"p": p, "got": got})

    return elements_of(model, MX), check


@law("axiom1/functor-compose", "axiom1")
def law_functor_compose(model, X):
    cases = _composable_stock(model)

    def check(g, f, p):
        got = model.Mmor(model.compose(g, f))(p)
        want = model.Mmor(g)(model.Mmor(f)(p))
        if not model.eq(model.M(g.cod), got, want):
            raise Counterexample({"g": g, "f": f, "p": p, "got": got, "want": want})

    return Domain(model, cases, lambda g, f: model.M(f.dom)), check


# ------------------------------------------------------------------ axiom 2


@law("axiom2/strong-s", "axiom2")
def law_strong_s(model, X):
    Y = X
    P = model.product(model.M(X), Y)
    XY = model.product(X, Y)
    alpha = strength_mor(model, X, Y)

    def check(e):
        phi, y = e.value
        got = model.s(XY)(alpha(e))
        want = El(e.stage, (model.s(X)(El(e.stage, phi)).value, y))
        if not model.eq(XY, got, want):
            raise Counterexample({"e": e, "got": got, "want": want})

    return elements_of(model, P), check


@law("axiom2/strong-t", "axiom2")
def law_strong_t(model, X):
    Y = X
    P = model.product(model.M(X), Y)
    XY = model.product(X, Y)
    alpha = strength_mor(model, X, Y)

    def check(e):
        phi, y = e.value
        got = model.t(XY)(alpha(e))
        want = El(e.stage, (model.t(X)(El(e.stage, phi)).value, y))
        if not model.eq(XY, got, want):
            raise Counterexample({"e": e, "got": got, "want": want})

    return elements_of(model, P), check


@law("axiom2/strong-r", "axiom2")
def law_strong_r(model, X):
    Y = X
    XY = model.product(X, Y)
    alpha = strength_mor(model, X, Y)

    def check(e):
        x, y = e.value
        lifted = El(e.stage, (model.r(X)(El(e.stage, x)).value, y))
        got = alpha(lifted)
        want = model.r(XY)(e)
        if not model.eq(model.M(XY), got, want):
            raise Counterexample({"e": e, "got": got, "want": want})

    return elements_of(model, XY), check


@law("axiom2/strong-tau", "axiom2")
def law_strong_tau(model, X):
    Y = X
    P = model.product(model.M(X), Y)
    XY = model.product(X, Y)
    alpha = strength_mor(model, X, Y)

    def check(e):
        phi, y = e.value
        got = model.tau(XY)(alpha(e))
        flipped = El(e.stage, (model.tau(X)(El(e.stage, phi)).value, y))
        want = alpha(flipped)
        if not model.eq(model.M(XY), got, want):
            raise Counterexample({"e": e, "got": got, "want": want})

    return elements_of(model, P), check


@law("axiom2/strong-m", "axiom2")
def law_strong_m(model, X):
    Y = X
    P = model.product(model.m_pb(X), Y)
    XY = model.product(X, Y)
    alpha = strength_mor(model, X, Y)

    def check(e):
        (later, earlier), y = e.value
        cat = model.m(X)(El(e.stage, (later, earlier)))
        got = alpha(El(e.stage, (cat.value, y)))
        al = alpha(El(e.stage, (later, y)))
        ae = alpha(El(e.stage, (earlier, y)))
        want = m_apply(model, XY, al, ae)
        if not model.eq(model.M(XY), got, want):
            raise Counterexample({"e": e, "got": got, "want": want})

    return elements_of(model, P), check


@law("axiom2/alpha-natural", "axiom2")
def law_alpha_natural(model, X):
    mors = _plain_stock(model)
    cases = [(f, g) for f in mors for g in mors]

    def check(f, g, e):
        phi, y = e.value
        alpha_src = strength_mor(model, f.dom, g.dom)
        alpha_dst = strength_mor(model, f.cod, g.cod)
        fg = model.cross(f, g)
        got = model.Mmor(fg)(alpha_src(e))
        moved = El(
            e.stage,
            (model.Mmor(f)(El(e.stage, phi)).value, g(El(e.stage, y)).value),
        )
        want = alpha_dst(moved)
        if not model.eq(model.M(model.product(f.cod, g.cod)), got, want):
            raise Counterexample({"f": f, "g": g, "e": e, "got": got, "want": want})

    return Domain(
        model, cases, lambda f, g: model.product(model.M(f.dom), g.dom)
    ), check


@law("axiom2/constant-retract", "axiom2")
def law_constant_retract(model, X):
    M1 = model.M(model.terminal())
    P = model.product(M1, X)

    def check(e):
        omega, x = El(e.stage, e.value[0]), El(e.stage, e.value[1])
        c = const_elem(model, X, omega, x)
        back_len = shape_of(model, X, c)
        back_pt = model.t(X)(c)
        if not (model.eq(M1, back_len, omega) and model.eq(X, back_pt, x)):
            raise Counterexample({"e": e, "path": c, "len": back_len, "pt": back_pt})

    return elements_of(model, P), check


@law("axiom2/projection-square", "axiom2")
def law_projection_square(model, X):
    Y = X
    P = model.product(model.M(X), Y)
    XY = model.product(X, Y)
    alpha = strength_mor(model, X, Y)
    MY = model.M(Y)

    def check(e):
        phi, y = e.value
        out = alpha(e)
        left = model.Mmor(model.proj2(XY))(out)
        omega = shape_of(model, X, El(e.stage, phi))
        right = const_elem(model, Y, omega, El(e.stage, y))
        if not model.eq(MY, left, right):
            raise Counterexample({"e": e, "left": left, "right": right})

    return elements_of(model, P), check


@law("axiom2/strength-proj1", "axiom2")
def law_strength_proj1(model, X):
    Y = X
    P = model.product(model.M(X), Y)
    XY = model.product(X, Y)
    alpha = strength_mor(model, X, Y)
    MX = model.M(X)

    def check(e):
        phi, y = e.value
        got = model.Mmor(model.proj1(XY))(alpha(e))
        if not model.eq(MX, got, El(e.stage, phi)):
            raise Counterexample({"e": e, "got": got})

    return elements_of(model, P), check


@law("axiom2/zip-unzip", "axiom2")
def law_zip_unzip(model, X):
    Y = X
    XY = model.product(X, Y)
    MXY = model.M(XY)

    def check(w):
        a = model.Mmor(model.proj1(XY))(w)
        b = model.Mmor(model.proj2(XY))(w)
        back = model.zip_m(XY, a, b)
        if not model.eq(MXY, back, w):
            raise Counterexample({"w": w, "back": back})

    return elements_of(model, MXY), check


# ------------------------------------------------------------------ axiom 3


@law("axiom3/s-after-eta", "axiom3")
def law_eta_s(model, X):
    MX = model.M(X)

    def check(p):
        got = model.s(MX)(model.eta(X)(p))
        if not model.eq(MX, got, p):
            raise Counterexample({"p": p, "got": got})

    return elements_of(model, MX), check


@law("axiom3/t-after-eta", "axiom3")
def law_eta_t(model, X):
    MX = model.M(X)

    def check(p):
        got = model.t(MX)(model.eta(X)(p))
        want = model.r(X)(model.t(X)(p))
        if not model.eq(MX, got, want):
            raise Counterexample({"p": p, "got": got, "want": want})

    return elements_of(model, MX), check


@law("axiom3/Ms-after-eta", "axiom3")
def law_eta_Ms(model, X):
    MX = model.M(X)

    def check(p):
        got = model.Mmor(model.s(X))(model.eta(X)(p))
        if not model.eq(MX, got, p):
            raise Counterexample({"p": p, "got": got})

    return elements_of(model, MX), check


@law("axiom3/Mt-after-eta", "axiom3")
def law_eta_Mt(model, X):
    MX = model.M(X)

    def check(p):
        got = model.Mmor(model.t(X))(model.eta(X)(p))
        omega = shape_of(model, X, p)
        want = const_elem(model, X, omega, model.t(X)(p))
        if not model.eq(MX, got, want):
            raise Counterexample({"p": p, "got": got, "want": want})

    return elements_of(model, MX), check


@law("axiom3/eta-after-r", "axiom3")
def law_eta_r(model, X):
    MX = model.M(X)
    MMX = model.M(MX)

    def check(x):
        rx = model.r(X)(x)
        got = model.eta(X)(rx)
        want = model.r(MX)(rx)
        if not model.eq(MMX, got, want):
            raise Counterexample({"x": x, "got": got, "want": want})

    return elements_of(model, X), check


@law("axiom3/eta-natural", "axiom3")
def law_eta_natural(model, X):
    def check(f, p):
        Mf = model.Mmor(f)
        got = model.eta(f.cod)(Mf(p))
        want = model.Mmor(Mf)(model.eta(f.dom)(p))
        if not model.eq(model.M(model.M(f.cod)), got, want):
            raise Counterexample({"f": f, "p": p, "got": got, "want": want})

    return Domain(model, _stock_cases(model), lambda f: model.M(f.dom)), check


@law("axiom3/eta-strong", "axiom3")
def law_eta_strong(model, X):
    Y = X
    MX = model.M(X)
    P = model.product(MX, Y)
    XY = model.product(X, Y)
    alpha = strength_mor(model, X, Y)
    alpha_m = strength_mor(model, MX, Y)
    Malpha = model.Mmor(alpha)

    def check(e):
        phi, y = e.value
        got = model.eta(XY)(alpha(e))
        staged = El(e.stage, (model.eta(X)(El(e.stage, phi)).value, y))
        want = Malpha(alpha_m(staged))
        if not model.eq(model.M(model.M(XY)), got, want):
            raise Counterexample({"e": e, "got": got, "want": want})

    return elements_of(model, P), check


AXIOM_LAWS = (
    law_s_after_r,
    law_t_after_r,
    law_s_of_concat,
    law_t_of_concat,
    law_left_unit,
    law_right_unit,
    law_assoc,
    law_s_after_tau,
    law_t_after_tau,
    law_tau_after_r,
    law_tau_involution,
    law_tau_antihom,
    law_natural_s,
    law_natural_t,
    law_natural_r,
    law_natural_tau,
    law_natural_m,
    law_functor_id,
    law_functor_compose,
    law_strong_s,
    law_strong_t,
    law_strong_r,
    law_strong_tau,
    law_strong_m,
    law_alpha_natural,
    law_constant_retract,
    law_projection_square,
    law_strength_proj1,
    law_zip_unzip,
    law_eta_s,
    law_eta_t,
    law_eta_Ms,
    law_eta_Mt,
    law_eta_r,
    law_eta_natural,
    law_eta_strong,
)


# -------------------------------------------- backend stage-map compatibility


def _sset_ops_at(model, stage):
    from .ops import delta, sigma

    ops = []
    if stage >= 1:
        ops.extend(delta(i, stage) for i in range(stage + 1))
    if stage < model.config.max_dim:
        ops.extend(sigma(i, stage) for i in range(stage + 1))
    return ops


def _sset_action_law(tag, carrier_of, push):
    @law(f"action/op-compat-{tag}", "action")
    def lw(model, X):
        carrier = carrier_of(model, X)

        def check(e):
            for op in _sset_ops_at(model, e.stage):
                before = push(model, X, model.act_el(carrier, e, op))
                cod = before[1]
                after = model.act_el(cod, push(model, X, e)[0], op)
                if not model.eq(cod, before[0], after):
                    raise Counterexample({"e": e, "op": op, "moved": before[0],
                                          "acted": after})

        return elements_of(model, carrier), check

    return lw


def _chain_boundary_law(tag, carrier_of, push):
    @law(f"action/boundary-{tag}", "action")
    def lw(model, X):
        carrier = carrier_of(model, X)

        def check(e):
            out, cod = push(model, X, e)
            upper = model.boundary_el(cod, out)
            lower = push(model, X, model.boundary_el(carrier, e))[0]
            if not model.eq(cod, upper, lower):
                raise Counterexample({"e": e, "upper": upper, "lower": lower})

        return elements_of(model, carrier), check

    return lw


def _push_s(model, X, e):
    return model.s(X)(e), X


def _push_t(model, X, e):
    return model.t(X)(e), X


def _push_r(model, X, e):
    return model.r(X)(e), model.M(X)


def _push_tau(model, X, e):
    return model.tau(X)(e), model.M(X)


def _push_eta(model, X, e):
    return model.eta(X)(e), model.M(model.M(X))


def _push_m(model, X, e):
    return model.m(X)(e), model.M(X)


_PUSHES = (
    ("s", lambda model, X: model.M(X), _push_s),
    ("t", lambda model, X: model.M(X), _push_t),
    ("r", lambda model, X: X, _push_r),
    ("tau", lambda model, X: model.M(X), _push_tau),
    ("eta", lambda model, X: model.M(X), _push_eta),
    ("m", lambda model, X: model.m_pb(X), _push_m),
)

SSET_ACTION_LAWS = tuple(
    _sset_action_law(tag, carrier_of, push) for tag, carrier_of, push in _PUSHES
)

CHAIN_ACTION_LAWS = tuple(
    _chain_boundary_law(tag, carrier_of, push) for tag, carrier_of, push in _PUSHES
)


def axiom_laws(model: Model):
    laws = list(AXIOM_LAWS)
    if model.backend == "sset":
        laws.extend(SSET_ACTION_LAWS)
    elif model.backend == "chain":
        laws.extend(CHAIN_ACTION_LAWS)
    return laws


# -------------------------------------------------------------- the runner


@dataclass
class LawResult:
    law_id: str
    group: str
    mode: str
    checked: int
    status: str
    witness: dict | None = None

    def to_json(self):
        out = {
            "id": self.law_id,
            "group": self.group,
            "mode": self.mode,
            "checked": self.checked,
            "status": self.status,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def run_law(model: Model, lw: Law, X, seed, samples, force_sampled=False) -> LawResult:
    rng = random.Random(f"{seed}:{lw.law_id}")
    try:
        dom, check = lw.build(model, X)
    except Exception as exc:
        return LawResult(
            lw.law_id, lw.group, "sampled", 0, "fail",
            {"error": f"law setup failed: {exc!r}"},
        )
    if force_sampled:
        universe = None
    else:
        try:
            universe = dom.enum()
        except Exception:
            universe = None
    mode = model.enum_label if universe is not None else "sampled"
    checked = 0
    failure = None
    if universe is not None:
        for args in universe:
            checked += 1
            failure = _attempt(check, args)
            if failure is not None:
                break
    else:
        for _ in range(samples):
            try:
                args = dom.sample(rng)
            except Exception as exc:
                failure = ({"error": f"sampling failed: {exc!r}"}, None)
                break
            checked += 1
            failure = _attempt(check, args)
            if failure is not None:
                break
    if failure is None:
        return LawResult(lw.law_id, lw.group, mode, checked, "pass")
    details, args = failure
    if args is not None:
        carrier = dom.obj_of(*args[:-1])
        details, args = _shrink_failure(model, carrier, check, details, args)
    return LawResult(
        lw.law_id, lw.group, mode, checked, "fail",
        _witness_json(model, details, args),
    )


def _attempt(check, args):
    try:
        check(*args)
        return None
    except Counterexample as ce:
        return ce.details, args
    except Exception as exc:
        return {"error": repr(exc)}, args


def _shrink_failure(model, carrier, check, details, args, rounds=200):
    case, e = args[:-1], args[-1]
    budget = rounds
    improved = True
    while improved and budget > 0:
        improved = False
        try:
            candidates = list(model.shrink(carrier, e))
        except Exception:
            break
        for cand in candidates:
            budget -= 1
            outcome = _attempt(check, case + (cand,))
            if outcome is not None:
                details, e = outcome[0], cand
                improved = True
                break
            if budget <= 0:
                break
    return details, case + (e,)


def _witness_json(model, details, args):
    out = {k: _jsonable_arg(model, v) for k, v in (details or {}).items()}
    if args is not None:
        out["args"] = [_jsonable_arg(model, a) for a in args]
    return out


def _jsonable_arg(model, v):
    from .jsonio import to_jsonable

    if isinstance(v, El):
        return {"stage": v.stage, "value": to_jsonable(v.value)}
    if isinstance(v, Mor):
        return {"morphism": v.name}
    return to_jsonable(v)


def run_suite(model: Model, laws, seed=0, samples=200, weak="1", suite="axioms",
              force_sampled=False, extra=None) -> dict:
    X = model.stock_objects()[0]
    results = []
    for lw in laws:
        if weak not in lw.levels:
            results.append(LawResult(lw.law_id, lw.group, "skipped", 0, "skipped"))
            continue
        results.append(run_law(model, lw, X, seed, samples, force_sampled=force_sampled))
    failures = [r for r in results if r.status == "fail"]
    report = {
        "suite": suite,
        "backend": model.backend,
        "input": model.label(X),
        "seed": seed,
        "samples": samples,
        "weak": weak,
        "laws": [r.to_json() for r in results],
        "law_count": len(results),
        "failures": len(failures),
        "status": "fail" if failures else "pass",
    }
    if extra:
        report.update(extra)
    return report


def render_text(report: dict) -> str:
    lines = [
        f"suite: {report['suite']}  backend: {report['backend']}"
        f"  input: {report['input']}",
        f"seed: {report['seed']}  samples: {report['samples']}"
        f"  weak: {report['weak']}",
    ]
    for r in report["laws"]:
        if r["status"] == "skipped":
            lines.append(f"  skip  {r['id']}")
            continue
        flag = "ok  " if r["status"] == "pass" else "FAIL"
        lines.append(f"  {flag}  {r['id']}  [{r['mode']}, {r['checked']} checked]")
    lines.append(
        f"{report['status'].upper()}: {report['law_count'] - report['failures']}"
        f"/{report['law_count']} laws"
    )
    return "\n".join(lines)
