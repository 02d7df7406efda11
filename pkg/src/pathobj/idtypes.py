"""Identity types modeled by paths that stay inside one fiber.

A dependent type is a projection into a context together with chosen path
lifting.  Its identity type is carved out of the path object of the total
object: the paths whose image in the context is constant.  Reflexivity
factors the diagonal through that object, the inclusion carries a
strong-deformation-retract structure, the endpoints projection carries
path lifting, and the eliminator is the chosen diagonal filler between
the two.  Every operator is elementwise, so stability under substitution
is something the law suites can check by direct computation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .backends.base import El, Model, Mor, const_elem, m_apply, shape_of
from .laws import UNITAL, Counterexample, Domain, law
from .wfs import (
    Homotopy,
    LStructure,
    RStructure,
    closed_rstructure,
    factorize,
    fill_p,
    lift,
    path_lift,
    pi,
    reverse_homotopy,
    transport_mor,
    whisker_right,
)


@dataclass(repr=False)
class DependentType:
    """A projection into a context with chosen path lifting.

    The three optional samplers let law runs draw elements on backends
    whose carriers have no enumeration.  ``path_sampler`` yields paths in
    the total object that are constant over the context, ``pair_sampler``
    yields raw values of fiberwise pairs, and ``fiber_sample`` yields a
    total-object element over a given context element.  Each may be None.
    """

    projection: Mor
    rstruct: RStructure
    name: str = ""
    path_sampler: object = None
    pair_sampler: object = None
    fiber_sample: object = None

    @property
    def total(self):
        return self.projection.dom

    @property
    def context(self):
        return self.projection.cod

    def __repr__(self):
        return f"DependentType({self.name or self.projection.name or '?'})"


def closed_type(model: Model, X, name: str = "") -> DependentType:
    """X over the terminal context, with constant-path lifting."""
    MX = model.M(X)

    def path_sampler(rng, stage):
        return model.sample_at(MX, rng, stage)

    def pair_sampler(rng, stage):
        return (
            model.sample_at(X, rng, stage).value,
            model.sample_at(X, rng, stage).value,
        )

    def fiber_sample(rng, base_el):
        return model.sample_at(X, rng, base_el.stage)

    return DependentType(
        projection=model.bang(X),
        rstruct=closed_rstructure(model, X),
        name=name or f"closed({getattr(X, 'name', '?')})",
        path_sampler=path_sampler,
        pair_sampler=pair_sampler,
        fiber_sample=fiber_sample,
    )


class FiberwisePathObject:
    """Paths in a total object whose projection to the context is constant.

    Realized as one pullback against the path functor applied to the
    projection, so a member records its shape in the terminal path object,
    the context point it sits over, and the underlying path.  ``inc``
    sends a fiberwise-constant path to its member record, ``j`` recovers
    the path, and the two are mutually inverse on members.  Reflexivity
    into this object carries the contraction onto the target endpoint.
    """

    def __init__(self, model: Model, x: Mor, path_sampler=None):
        self.model = model
        self.x = x
        X, G = x.dom, x.cod
        T = model.terminal()
        self.shapes = model.product(model.M(T), G)
        one_g = model.product(T, G)
        self.const = model.compose(model.Mmor(model.proj2(one_g)), model.alpha1(G))
        self.const.name = "const"
        self.Mx = model.Mmor(x)
        MX = model.M(X)

        def member_value(phi: El):
            omega = shape_of(model, X, phi)
            c = model.s(G)(self.Mx(phi))
            return ((omega.value, c.value), phi.value)

        sampler = None
        if path_sampler is not None:
            def sampler(rng, stage):
                return member_value(path_sampler(rng, stage))

        self.obj = model.pullback(self.const, self.Mx, sampler=sampler)
        self.u = model.proj1(self.obj)
        self.u.name = "shape"
        self.j = model.proj2(self.obj)
        self.j.name = "path"
        self.inc = Mor(MX, self.obj, lambda e: El(e.stage, member_value(e)), name="inc")
        self.src = model.compose(model.s(X), self.j)
        self.src.name = "src"
        self.tgt = model.compose(model.t(X), self.j)
        self.tgt.name = "tgt"
        self.base = model.compose(model.proj2(self.shapes), self.u)
        self.base.name = "over"
        self.refl = model.compose(self.inc, model.r(X))
        self.refl.name = "refl"
        self.rev = model.compose(self.inc, model.tau(X), self.j)
        self.rev.name = "rev"
        contract = model.compose(model.Mmor(self.inc), model.eta(X), self.j)
        contract.name = "contract"
        self.theta = Homotopy(
            self.obj,
            contract,
            model.identity(self.obj),
            model.compose(self.refl, self.tgt),
        )
        self.lstruct = LStructure(model, self.refl, self.tgt, self.theta)

    def concat(self, later: El, earlier: El) -> El:
        """Join two members sharing an endpoint, later after earlier."""
        return self.inc(m_apply(self.model, self.x.dom, self.j(later), self.j(earlier)))

    def __repr__(self):
        return f"FiberwisePathObject({self.x.name or '?'})"


def fiberwise_path_object(model: Model, x, path_sampler=None) -> FiberwisePathObject:
    """The object of fiberwise-constant paths of a projection.

    Accepts either a bare projection morphism or a dependent type, in
    which case the type's path sampler is picked up automatically.
    """
    if isinstance(x, DependentType):
        path_sampler = path_sampler if path_sampler is not None else x.path_sampler
        x = x.projection
    return FiberwisePathObject(model, x, path_sampler)


def precart_delta(model: Model, A: DependentType, fib: FiberwisePathObject = None) -> Mor:
    """Straighten a path in the total object into its source fiber.

    The endpoint of the path is carried back along the projected path,
    and the straightened member runs from the source of the path to that
    carried endpoint.  Reflexivity straightens to fiber reflexivity.
    """
    if fib is None:
        fib = fiberwise_path_object(model, A)
    x = A.projection
    X = x.dom
    MX = model.M(X)
    carry, anchor = transport_mor(model, A.rstruct)
    Mx = model.Mmor(x)
    tX = model.t(X)

    def graph_fn(e: El) -> El:
        return El(e.stage, (Mx(e).value, tX(e).value))

    graph = Mor(MX, anchor.mid, graph_fn, name="graph")
    swap = model.compose(model.Mmor(model.tau(X)), model.tau(MX))
    out = model.compose(
        fib.inc,
        model.Mmor(carry),
        model.Mmor(graph),
        swap,
        model.eta(X),
        model.tau(X),
    )
    out.name = "straighten"
    return out


def psi_star(model: Model, A: DependentType, psi: El, w: El,
             fib: FiberwisePathObject = None, _carry=None) -> El:
    """Carry a fiber path along a context path ending at its base point.

    Raises ValueError when the context path does not end where the
    member sits.
    """
    if fib is None:
        fib = fiberwise_path_object(model, A)
    x = A.projection
    G = x.cod
    if not model.eq(G, model.t(G)(psi), fib.base(w)):
        raise ValueError("context path must end at the member's base point")
    carry, anchor = _carry if _carry is not None else transport_mor(model, A.rstruct)
    gamma = fib.j(w)
    omega = shape_of(model, x.dom, gamma)
    square = const_elem(model, model.M(G), omega, psi)
    moved = model.Mmor(carry)(model.zip_m(anchor.mid, square, gamma))
    return fib.inc(moved)


def r_structure_on_st(model: Model, A: DependentType,
                      fib: FiberwisePathObject = None,
                      pair_obj=None, ends: Mor = None) -> RStructure:
    """Path lifting on the endpoints projection of the fiber-path object.

    A path of endpoint pairs is handled in three moves: straighten each
    component path, carry the member along the projected motion, and join
    the three fiber paths.
    """
    if fib is None:
        fib = fiberwise_path_object(model, A)
    x = A.projection
    X, G = x.dom, x.cod
    if pair_obj is None:
        pair_obj = model.pullback(x, x, sampler=A.pair_sampler)
    if ends is None:
        ends = model.pair(fib.src, fib.tgt, into=pair_obj)
        ends.name = "ends"
    delta = precart_delta(model, A, fib)
    first = model.Mmor(model.proj1(pair_obj))
    second = model.Mmor(model.proj2(pair_obj))
    Mx = model.Mmor(x)
    carry, anchor = transport_mor(model, A.rstruct)
    MG = model.M(G)

    def move(psi: El, w: El) -> El:
        gamma = fib.j(w)
        omega = shape_of(model, X, gamma)
        square = const_elem(model, MG, omega, psi)
        return fib.inc(model.Mmor(carry)(model.zip_m(anchor.mid, square, gamma)))

    def op(big: El, w: El) -> El:
        phi1 = first(big)
        phi2 = second(big)
        mid = fib.concat(move(Mx(phi1), w), delta(phi1))
        return fib.concat(fib.rev(delta(phi2)), mid)

    return RStructure(ends, op)


class IdTypeData:
    """The identity type of a dependent type, with both lifting structures.

    Holds the factorization of the fiberwise diagonal: reflexivity into
    the fiber-path object followed by the endpoints projection.  The
    identity type itself is a dependent type over the pullback of the
    projection against itself.
    """

    def __init__(self, model: Model, A: DependentType):
        self.model = model
        self.type = A
        self.fib = fiberwise_path_object(model, A)
        x = A.projection
        self.pair_obj = model.pullback(x, x, sampler=A.pair_sampler)
        self.ends = model.pair(self.fib.src, self.fib.tgt, into=self.pair_obj)
        self.ends.name = "ends"
        ident = model.identity(A.total)
        self.diag = model.pair(ident, ident, into=self.pair_obj)
        self.diag.name = "diag"
        self.rstruct = r_structure_on_st(model, A, self.fib, self.pair_obj, self.ends)
        self.refl = self.fib.refl
        self.lstruct = self.fib.lstruct
        self.id_type = DependentType(
            projection=self.ends,
            rstruct=self.rstruct,
            name=f"Id({A.name or '?'})",
        )

    def __repr__(self):
        return f"IdTypeData({self.type.name or '?'})"


def diag_factor(model: Model, A: DependentType) -> IdTypeData:
    """Factor the fiberwise diagonal through the fiber-path object."""
    return IdTypeData(model, A)


def ext(A: DependentType):
    """Context extension by a dependent type: its total object."""
    return A.total


def id_type(model: Model, A: DependentType) -> DependentType:
    """The identity type of A as a dependent type over the pair object."""
    return diag_factor(model, A).id_type


def refl(model: Model, A: DependentType) -> Mor:
    """Reflexivity of A into its fiber-path object."""
    return diag_factor(model, A).refl


def subst(model: Model, A: DependentType, f: Mor, name: str = ""):
    """Reindex a dependent type along a map into its context.

    Returns the reindexed type together with the comparison map from its
    total object to the original one.  Lifting in the reindexed type is
    the unique operator whose comparison image is the original lifting.
    """
    x = A.projection
    fiber_sample = None
    total_sampler = None
    if A.fiber_sample is not None:
        def fiber_sample(rng, base_el):
            return El(base_el.stage, (base_el.value, A.fiber_sample(rng, f(base_el)).value))

        def total_sampler(rng, stage):
            d = model.sample_at(f.dom, rng, stage)
            return (d.value, A.fiber_sample(rng, f(d)).value)

    Y = model.pullback(f, x, sampler=total_sampler)
    y = model.proj1(Y)
    y.name = name or f"{A.name}[{f.name}]"
    g = model.proj2(Y)
    g.name = f"({f.name})+"
    op = _reindexed_op(model, A, f, Y)

    path_sampler = None
    pair_sampler = None
    T = model.terminal()
    if A.context is T and A.path_sampler is not None:
        def path_sampler(rng, stage):
            phi = A.path_sampler(rng, stage)
            d = model.sample_at(f.dom, rng, stage)
            omega = shape_of(model, x.dom, phi)
            cst = const_elem(model, f.dom, omega, d)
            return model.zip_m(Y, cst, phi)

    if A.context is T and A.pair_sampler is not None:
        def pair_sampler(rng, stage):
            a, b = A.pair_sampler(rng, stage)
            d = model.sample_at(f.dom, rng, stage).value
            return ((d, a), (d, b))

    sub = DependentType(
        projection=y,
        rstruct=RStructure(y, op),
        name=y.name,
        path_sampler=path_sampler,
        pair_sampler=pair_sampler,
        fiber_sample=fiber_sample,
    )
    return sub, g


def _reindexed_op(model: Model, A: DependentType, f: Mor, Y):
    """Lifting on a reindexed type: keep the context leg at the path's
    source, carry the original leg with the original operator."""
    Mf = model.Mmor(f)
    sD = model.s(f.dom)
    g = model.proj2(Y)

    def op(psi: El, e: El) -> El:
        moved = A.rstruct.op(Mf(psi), g(e))
        return El(e.stage, (sD(psi).value, moved.value))

    return op


@dataclass(repr=False)
class PulledLMap:
    """A retract-with-contraction pulled back along a dependent type."""

    total: object
    inclusion: Mor
    over: Mor
    retract: Mor
    lstruct: LStructure

    def __repr__(self):
        return f"PulledLMap({self.inclusion.name or '?'})"


def frobenius(model: Model, B: DependentType, i: Mor, istruct: LStructure) -> PulledLMap:
    """Pull a retract-with-contraction back along a projection.

    The base change of i along B's projection inherits the structure:
    the retraction carries each total element along the reversed
    contraction of its image, and the contraction itself is the lifted
    homotopy, reversed.
    """
    if i.cod is not B.context and i.cod != B.context:
        raise ValueError("map must land in the type's context")
    f = B.projection
    sampler = None
    if B.fiber_sample is not None:
        def sampler(rng, stage):
            xv = model.sample_at(i.dom, rng, stage)
            return (B.fiber_sample(rng, i(xv)).value, xv.value)

    barX = model.pullback(f, i, sampler=sampler)
    ibar = model.proj1(barX)
    ibar.name = f"({i.name})bar"
    over = model.proj2(barX)
    over.name = f"({f.name})bar"
    down = reverse_homotopy(model, whisker_right(model, istruct.theta, f))
    star, lifted = path_lift(model, B.rstruct, down, model.identity(B.total))
    kf = model.compose(istruct.retract, f)
    kbar = Mor(
        B.total,
        barX,
        lambda e: El(e.stage, (star(e).value, kf(e).value)),
        name=f"({istruct.retract.name})bar",
    )
    theta = Homotopy(
        B.total,
        model.compose(model.tau(B.total), lifted.mor),
        model.identity(B.total),
        model.compose(ibar, kbar),
    )
    return PulledLMap(barX, ibar, over, kbar, LStructure(model, ibar, kbar, theta))


@dataclass(repr=False)
class PulledRefl:
    """Reflexivity pulled back through a chain of parameter types."""

    steps: tuple
    inclusion: Mor
    lstruct: LStructure

    def __repr__(self):
        return f"PulledRefl({self.inclusion.name or '?'})"


def pulled_refl(model: Model, data: IdTypeData, chain) -> PulledRefl:
    """Iterate the base change of reflexivity through parameter types.

    Each entry must live over the total object of the previous one, the
    first over the fiber-path object itself.
    """
    cur_i, cur_L = data.refl, data.lstruct
    expected = data.fib.obj
    steps = []
    for B in chain:
        if B.context is not expected:
            raise ValueError("parameter chain does not extend the current context")
        pl = frobenius(model, B, cur_i, cur_L)
        steps.append(pl)
        cur_i, cur_L = pl.inclusion, pl.lstruct
        expected = B.total
    return PulledRefl(tuple(steps), cur_i, cur_L)


def _probe_square(model: Model, C: DependentType, d: Mor, left: Mor, probes: int = 4):
    rng = random.Random("elim-square")
    for _ in range(probes):
        e = model.sample(left.dom, rng)
        if not model.eq(left.cod, C.projection(d(e)), left(e)):
            raise ValueError("section is not placed over the reflexivity inclusion")


def j_elim(model: Model, A, C: DependentType, d: Mor, probes: int = 4) -> Mor:
    """Eliminate into a type over the fiber-path object.

    Given a section d over reflexivity, returns the chosen filler of the
    square, a section of C that restricts to d on reflexivity paths.
    Accepts the dependent type or its prepared identity-type data.
    """
    data = A if isinstance(A, IdTypeData) else diag_factor(model, A)
    _probe_square(model, C, d, data.refl, probes)
    out = lift(model, d, model.identity(data.fib.obj), data.lstruct, C.rstruct)
    out.name = "jelim"
    return out


@dataclass(repr=False)
class StrongElim:
    """A strong eliminator with its pulled reflexivity inclusion."""

    filler: Mor
    pulled: PulledRefl

    def __repr__(self):
        return f"StrongElim({self.filler.name or '?'})"


def strong_j(model: Model, A, chain, C: DependentType, d: Mor,
             pulled: PulledRefl = None, probes: int = 4) -> StrongElim:
    """Eliminate in the presence of a chain of extra parameter types.

    The chain extends the context of the identity type; reflexivity is
    pulled back through every entry and the filler is taken against the
    resulting structure.  The section d must live over the iterated
    inclusion, and the filler restricts to it there.
    """
    data = A if isinstance(A, IdTypeData) else diag_factor(model, A)
    if pulled is None:
        pulled = pulled_refl(model, data, chain)
    _probe_square(model, C, d, pulled.inclusion, probes)
    filler = lift(model, d, model.identity(pulled.inclusion.cod), pulled.lstruct, C.rstruct)
    filler.name = "strongj"
    return StrongElim(filler, pulled)


class StabilityData:
    """Comparison data for one substitution into a context.

    Packages both identity types of a reindexing situation, the
    comparison between the reindexed fiber-path object and the pullback
    of the original one, and the canonical map between the reindexed
    identity type and the identity type of the reindexed type.
    """

    def __init__(self, model: Model, A: DependentType, f: Mor):
        self.model = model
        self.type = A
        self.f = f
        self.data = diag_factor(model, A)
        self.sub, self.top = subst(model, A, f)
        self.data_sub = diag_factor(model, self.sub)
        fibG, fibD = self.data.fib, self.data_sub.fib
        x = A.projection
        X, D = x.dom, f.dom
        Y = self.sub.total
        self.push = model.compose(fibG.inc, model.Mmor(self.top), fibD.j)
        self.push.name = "push"

        can_sample = A.context is model.terminal() and A.path_sampler is not None

        def cmp_core(d_el: El, w: El) -> El:
            gamma = fibG.j(w)
            omega = shape_of(model, X, gamma)
            cst = const_elem(model, D, omega, d_el)
            return fibD.inc(model.zip_m(Y, cst, gamma))

        sampler = None
        if can_sample:
            def sampler(rng, stage):
                w = model.sample_at(fibG.obj, rng, stage)
                d = model.sample_at(D, rng, stage)
                return (d.value, w.value)

        self.pulled = model.pullback(f, fibG.base, sampler=sampler)
        self.compare = Mor(
            self.pulled,
            fibD.obj,
            lambda e: cmp_core(El(e.stage, e.value[0]), El(e.stage, e.value[1])),
            name="compare",
        )
        self.uncompare = Mor(
            fibD.obj,
            self.pulled,
            lambda v: El(v.stage, (fibD.base(v).value, self.push(v).value)),
            name="uncompare",
        )

        pairD, pairG = self.data_sub.pair_obj, self.data.pair_obj
        self.pair_push = Mor(
            pairD,
            pairG,
            lambda e: El(e.stage, (e.value[0][1], e.value[1][1])),
            name="pairpush",
        )
        idsamp = None
        if can_sample:
            def idsamp(rng, stage):
                w = model.sample_at(fibG.obj, rng, stage)
                a, b = self.data.ends(w).value
                d = model.sample_at(D, rng, stage).value
                return (((d, a), (d, b)), w.value)

        self.re_id = model.pullback(self.pair_push, self.data.ends, sampler=idsamp)
        self.re_op = _reindexed_op(model, self.data.id_type, self.pair_push, self.re_id)
        self.to_re = Mor(
            fibD.obj,
            self.re_id,
            lambda v: El(v.stage, (self.data_sub.ends(v).value, self.push(v).value)),
            name="align",
        )
        self.from_re = Mor(
            self.re_id,
            fibD.obj,
            lambda e: cmp_core(El(e.stage, e.value[0][0][0]), El(e.stage, e.value[1])),
            name="unalign",
        )

    def __repr__(self):
        return f"StabilityData({self.type.name or '?'}; {self.f.name or '?'})"


def stability_compare(model: Model, A: DependentType, f: Mor) -> StabilityData:
    """Build the comparison data for a substitution situation."""
    return StabilityData(model, A, f)


# --------------------------------------------------------------------- laws
#
# Case generators: every law runs over the closed type on the stock
# object and its reindexing along the terminal map; backends with an
# enumeration also get a type with genuinely moving transport, the path
# fibration of a point.


def _carriers_enumerate(model, X):
    """Whether derived carriers can be enumerated; types without samplers
    are only usable as law cases when they can."""
    try:
        return model.elements(model.M(X), 0) is not None
    except Exception:
        return False


def _stock_types(model, X):
    A0 = closed_type(model, X, name="A")
    out = [("closed", A0)]
    sub, _ = subst(model, A0, model.bang(X), name="A[!]")
    out.append(("reindexed", sub))
    if _carriers_enumerate(model, X):
        pt = model.point(X, random.Random("idtypes-stock"))
        F = factorize(model, pt)
        out.append(("lifted", DependentType(F.rho, pi(model, F), name="P(pt)")))
    return out


def _fiber_cases(model, X):
    return [
        (label, A, fiberwise_path_object(model, A))
        for label, A in _stock_types(model, X)
    ]


def _data_cases(model, X):
    return [(label, diag_factor(model, A)) for label, A in _stock_types(model, X)]


def _composable_carrier(model, fib):
    """Pairs of members sharing an endpoint, later paired with earlier."""
    sampler = None
    if fib.obj.sampler is not None:
        def sampler(rng, stage):
            w = El(stage, fib.obj.sampler(rng, stage))
            k = rng.randrange(3)
            if k == 0:
                return (fib.rev(w).value, w.value)
            if k == 1:
                return (fib.refl(fib.tgt(w)).value, w.value)
            return (w.value, fib.refl(fib.src(w)).value)

    return model.pullback(fib.src, fib.tgt, sampler=sampler)


def _anchored(model, f):
    """Paths into f's codomain paired with domain elements at their end."""
    return model.pullback(model.t(f.cod), f, sampler=model.anchored_sampler(f))


def _split(e: El):
    return El(e.stage, e.value[0]), El(e.stage, e.value[1])


@law("idmodel/member-roundtrip", "idmodel")
def law_member_roundtrip(model, X):
    def check(label, A, fib, w):
        model.validate(fib.obj, w)
        back = fib.inc(fib.j(w))
        if not model.eq(fib.obj, back, w):
            raise Counterexample({"case": label, "w": w, "rebuilt": back})

    return Domain(model, _fiber_cases(model, X), lambda label, A, fib: fib.obj), check


@law("idmodel/member-constant", "idmodel")
def law_member_constant(model, X):
    def check(label, A, fib, w):
        G = A.context
        gamma = fib.j(w)
        omega = shape_of(model, A.total, gamma)
        want = const_elem(model, G, omega, fib.base(w))
        got = fib.Mx(gamma)
        if not model.eq(model.M(G), got, want):
            raise Counterexample({"case": label, "w": w, "projected": got, "constant": want})

    return Domain(model, _fiber_cases(model, X), lambda label, A, fib: fib.obj), check


@law("idmodel/refl-member", "idmodel")
def law_refl_member(model, X):
    def check(label, A, fib, a):
        w = fib.refl(a)
        model.validate(fib.obj, w)
        if not model.eq(model.M(A.total), fib.j(w), model.r(A.total)(a)):
            raise Counterexample({"case": label, "a": a, "path": fib.j(w)})
        for end in (fib.src, fib.tgt):
            if not model.eq(A.total, end(w), a):
                raise Counterexample({"case": label, "a": a, "end": end(w)})
        if not model.eq(A.context, fib.base(w), A.projection(a)):
            raise Counterexample({"case": label, "a": a, "over": fib.base(w)})

    return Domain(model, _fiber_cases(model, X), lambda label, A, fib: A.total), check


@law("idmodel/concat-members", "idmodel")
def law_concat_members(model, X):
    cases = [
        (label, A, fib, _composable_carrier(model, fib))
        for label, A, fib in _fiber_cases(model, X)
    ]

    def check(label, A, fib, Q, pair):
        later, earlier = _split(pair)
        out = fib.concat(later, earlier)
        model.validate(fib.obj, out)
        want = m_apply(model, A.total, fib.j(later), fib.j(earlier))
        if not model.eq(model.M(A.total), fib.j(out), want):
            raise Counterexample({"case": label, "pair": pair, "joined": out})
        if not model.eq(A.total, fib.src(out), fib.src(earlier)):
            raise Counterexample({"case": label, "pair": pair, "src": fib.src(out)})
        if not model.eq(A.total, fib.tgt(out), fib.tgt(later)):
            raise Counterexample({"case": label, "pair": pair, "tgt": fib.tgt(out)})

    return Domain(model, cases, lambda label, A, fib, Q: Q), check


@law("idmodel/reverse-member", "idmodel")
def law_reverse_member(model, X):
    def check(label, A, fib, w):
        v = fib.rev(w)
        model.validate(fib.obj, v)
        if not model.eq(model.M(A.total), fib.j(v), model.tau(A.total)(fib.j(w))):
            raise Counterexample({"case": label, "w": w, "reversed": v})
        if not model.eq(A.total, fib.src(v), fib.tgt(w)):
            raise Counterexample({"case": label, "w": w, "src": fib.src(v)})
        if not model.eq(A.total, fib.tgt(v), fib.src(w)):
            raise Counterexample({"case": label, "w": w, "tgt": fib.tgt(v)})
        if not model.eq(fib.obj, fib.rev(v), w):
            raise Counterexample({"case": label, "w": w, "twice": fib.rev(v)})

    return Domain(model, _fiber_cases(model, X), lambda label, A, fib: fib.obj), check


@law("idmodel/contraction-endpoints", "idmodel")
def law_contraction_endpoints(model, X):
    def check(label, A, fib, w):
        path = fib.theta.mor(w)
        if not model.eq(fib.obj, model.s(fib.obj)(path), w):
            raise Counterexample({"case": label, "w": w, "start": model.s(fib.obj)(path)})
        want = fib.refl(fib.tgt(w))
        if not model.eq(fib.obj, model.t(fib.obj)(path), want):
            raise Counterexample({"case": label, "w": w, "end": model.t(fib.obj)(path)})

    return Domain(model, _fiber_cases(model, X), lambda label, A, fib: fib.obj), check


@law("idmodel/contraction-trivial", "idmodel")
def law_contraction_trivial(model, X):
    def check(label, A, fib, a):
        w = fib.refl(a)
        got = fib.theta.mor(w)
        want = model.r(fib.obj)(w)
        if not model.eq(model.M(fib.obj), got, want):
            raise Counterexample({"case": label, "a": a, "got": got, "want": want})

    return Domain(model, _fiber_cases(model, X), lambda label, A, fib: A.total), check


@law("idmodel/contraction-projects", "idmodel")
def law_contraction_projects(model, X):
    def check(label, A, fib, w):
        got = model.Mmor(fib.j)(fib.theta.mor(w))
        want = model.eta(A.total)(fib.j(w))
        if not model.eq(model.M(model.M(A.total)), got, want):
            raise Counterexample({"case": label, "w": w, "got": got, "want": want})

    return Domain(model, _fiber_cases(model, X), lambda label, A, fib: fib.obj), check


def _straighten_cases(model, X):
    out = []
    for label, A, fib in _fiber_cases(model, X):
        out.append((label, A, fib, precart_delta(model, A, fib)))
    return out


@law("idmodel/straighten-source", "idmodel")
def law_straighten_source(model, X):
    def check(label, A, fib, delta, phi):
        w = delta(phi)
        model.validate(fib.obj, w)
        if not model.eq(A.total, fib.src(w), model.s(A.total)(phi)):
            raise Counterexample({"case": label, "phi": phi, "src": fib.src(w)})
        want_base = A.projection(model.s(A.total)(phi))
        if not model.eq(A.context, fib.base(w), want_base):
            raise Counterexample({"case": label, "phi": phi, "over": fib.base(w)})

    return Domain(model, _straighten_cases(model, X),
                  lambda label, A, fib, delta: model.M(A.total)), check


@law("idmodel/straighten-target", "idmodel")
def law_straighten_target(model, X):
    def check(label, A, fib, delta, phi):
        w = delta(phi)
        carried = A.rstruct.op(fib.Mx(phi), model.t(A.total)(phi))
        if not model.eq(A.total, fib.tgt(w), carried):
            raise Counterexample({"case": label, "phi": phi, "tgt": fib.tgt(w), "carried": carried})

    return Domain(model, _straighten_cases(model, X),
                  lambda label, A, fib, delta: model.M(A.total)), check


@law("idmodel/straighten-refl", "idmodel")
def law_straighten_refl(model, X):
    def check(label, A, fib, delta, a):
        got = delta(model.r(A.total)(a))
        want = fib.refl(a)
        if not model.eq(fib.obj, got, want):
            raise Counterexample({"case": label, "a": a, "got": got, "want": want})

    return Domain(model, _straighten_cases(model, X),
                  lambda label, A, fib, delta: A.total), check


def _carry_cases(model, X):
    out = []
    for label, A, fib in _fiber_cases(model, X):
        carry = transport_mor(model, A.rstruct)
        out.append((label, A, fib, carry, _anchored(model, fib.base)))
    return out


@law("idmodel/carry-endpoints", "idmodel")
def law_carry_endpoints(model, X):
    def check(label, A, fib, carry, Q, e):
        psi, w = _split(e)
        v = psi_star(model, A, psi, w, fib=fib, _carry=carry)
        model.validate(fib.obj, v)
        G = A.context
        if not model.eq(G, fib.base(v), model.s(G)(psi)):
            raise Counterexample({"case": label, "e": e, "over": fib.base(v)})
        for end in (fib.src, fib.tgt):
            moved = A.rstruct.op(psi, end(w))
            if not model.eq(A.total, end(v), moved):
                raise Counterexample({"case": label, "e": e, "end": end(v), "moved": moved})
        got_shape = shape_of(model, A.total, fib.j(v))
        want_shape = shape_of(model, A.total, fib.j(w))
        if not model.eq(model.M(model.terminal()), got_shape, want_shape):
            raise Counterexample({"case": label, "e": e, "shape": got_shape})

    return Domain(model, _carry_cases(model, X),
                  lambda label, A, fib, carry, Q: Q), check


@law("idmodel/carry-identity", "idmodel")
def law_carry_identity(model, X):
    def check(label, A, fib, carry, Q, w):
        G = A.context
        psi = model.r(G)(fib.base(w))
        got = psi_star(model, A, psi, w, fib=fib, _carry=carry)
        if not model.eq(fib.obj, got, w):
            raise Counterexample({"case": label, "w": w, "got": got})

    return Domain(model, _carry_cases(model, X),
                  lambda label, A, fib, carry, Q: fib.obj), check


@law("idmodel/carry-refl", "idmodel")
def law_carry_refl(model, X):
    cases = []
    for label, A, fib in _fiber_cases(model, X):
        carry = transport_mor(model, A.rstruct)
        cases.append((label, A, fib, carry, _anchored(model, A.projection)))

    def check(label, A, fib, carry, Q, e):
        psi, a = _split(e)
        got = psi_star(model, A, psi, fib.refl(a), fib=fib, _carry=carry)
        want = fib.refl(A.rstruct.op(psi, a))
        if not model.eq(fib.obj, got, want):
            raise Counterexample({"case": label, "e": e, "got": got, "want": want})

    return Domain(model, cases, lambda label, A, fib, carry, Q: Q), check


def _filler_cases(model, X):
    out = []
    for label, data in _data_cases(model, X):
        out.append((label, data, _anchored(model, data.ends)))
    return out


@law("idmodel/filler-endpoints", "idmodel")
def law_filler_endpoints(model, X):
    def check(label, data, Q, e):
        big, w = _split(e)
        v = data.rstruct.op(big, w)
        model.validate(data.fib.obj, v)
        got = data.ends(v)
        want = model.s(data.pair_obj)(big)
        if not model.eq(data.pair_obj, got, want):
            raise Counterexample({"case": label, "e": e, "ends": got, "want": want})

    return Domain(model, _filler_cases(model, X), lambda label, data, Q: Q), check


@law("idmodel/filler-unit", "idmodel", levels=UNITAL)
def law_filler_unit(model, X):
    def check(label, data, Q, w):
        big = model.r(data.pair_obj)(data.ends(w))
        got = data.rstruct.op(big, w)
        if not model.eq(data.fib.obj, got, w):
            raise Counterexample({"case": label, "w": w, "got": got})

    return Domain(model, _filler_cases(model, X),
                  lambda label, data, Q: data.fib.obj), check


@law("idmodel/refl-diagonal", "idmodel")
def law_refl_diagonal(model, X):
    def check(label, data, a):
        got = data.ends(data.refl(a))
        want = data.diag(a)
        if not model.eq(data.pair_obj, got, want):
            raise Counterexample({"case": label, "a": a, "got": got, "want": want})

    return Domain(model, _data_cases(model, X), lambda label, data: data.type.total), check


def _constant_family(model, A: DependentType, base_obj, name: str):
    """A constant dependent type over base_obj with fibers from A."""
    fam, _ = subst(model, A, model.bang(base_obj), name=name)
    return fam


def _elim_cases(model, X):
    out = []
    for label, A in _stock_types(model, X):
        data = diag_factor(model, A)
        V = closed_type(model, A.total, name="V")
        C = _constant_family(model, V, data.fib.obj, name="C")
        d = Mor(
            A.total,
            C.total,
            lambda e, data=data: El(e.stage, (data.refl(e).value, e.value)),
            name="over-refl",
        )
        out.append((label, data, C, j_elim(model, data, C, d), d))
    return out


@law("idmodel/j-computation", "idmodel")
def law_j_computation(model, X):
    def check(label, data, C, J, d, a):
        got = J(data.refl(a))
        want = d(a)
        if not model.eq(C.total, got, want):
            raise Counterexample({"case": label, "a": a, "got": got, "want": want})

    return Domain(model, _elim_cases(model, X),
                  lambda label, data, C, J, d: data.type.total), check


@law("idmodel/j-section", "idmodel")
def law_j_section(model, X):
    def check(label, data, C, J, d, w):
        got = C.projection(J(w))
        if not model.eq(data.fib.obj, got, w):
            raise Counterexample({"case": label, "w": w, "under": got})

    return Domain(model, _elim_cases(model, X),
                  lambda label, data, C, J, d: data.fib.obj), check


def _strong_cases(model, X, depth):
    out = []
    for label, A in _stock_types(model, X):
        if label == "reindexed":
            # parameter chains over the reindexed base repeat the closed
            # case's structure but square the enumeration size; the base
            # itself is still covered by the plain eliminator laws
            continue
        data = diag_factor(model, A)
        V = closed_type(model, A.total, name="V")
        chain = []
        ctx = data.fib.obj
        for _ in range(depth):
            B = _constant_family(model, V, ctx, name="B")
            chain.append(B)
            ctx = B.total
        pulled = pulled_refl(model, data, chain)
        down = pulled.steps[0].over
        for step in pulled.steps[1:]:
            down = model.compose(down, step.over)
        C = _constant_family(model, V, ctx, name="C")
        d = Mor(
            pulled.inclusion.dom,
            C.total,
            lambda e, pulled=pulled, down=down: El(
                e.stage, (pulled.inclusion(e).value, down(e).value)
            ),
            name="over-pulled-refl",
        )
        se = strong_j(model, data, chain, C, d, pulled=pulled)
        out.append((label, data, C, se, d))
    return out


@law("idmodel/strong-j-one-computation", "idmodel")
def law_strong_j_one_computation(model, X):
    def check(label, data, C, se, d, e):
        got = se.filler(se.pulled.inclusion(e))
        want = d(e)
        if not model.eq(C.total, got, want):
            raise Counterexample({"case": label, "e": e, "got": got, "want": want})

    return Domain(model, _strong_cases(model, X, 1),
                  lambda label, data, C, se, d: se.pulled.inclusion.dom), check


@law("idmodel/strong-j-one-section", "idmodel")
def law_strong_j_one_section(model, X):
    def check(label, data, C, se, d, b):
        got = C.projection(se.filler(b))
        if not model.eq(se.pulled.inclusion.cod, got, b):
            raise Counterexample({"case": label, "b": b, "under": got})

    return Domain(model, _strong_cases(model, X, 1),
                  lambda label, data, C, se, d: se.pulled.inclusion.cod), check


@law("idmodel/strong-j-two-computation", "idmodel")
def law_strong_j_two_computation(model, X):
    def check(label, data, C, se, d, e):
        got = se.filler(se.pulled.inclusion(e))
        want = d(e)
        if not model.eq(C.total, got, want):
            raise Counterexample({"case": label, "e": e, "got": got, "want": want})

    return Domain(model, _strong_cases(model, X, 2),
                  lambda label, data, C, se, d: se.pulled.inclusion.dom), check


@law("idmodel/strong-j-two-section", "idmodel")
def law_strong_j_two_section(model, X):
    def check(label, data, C, se, d, b):
        got = C.projection(se.filler(b))
        if not model.eq(se.pulled.inclusion.cod, got, b):
            raise Counterexample({"case": label, "b": b, "under": got})

    return Domain(model, _strong_cases(model, X, 2),
                  lambda label, data, C, se, d: se.pulled.inclusion.cod), check


def _situations(model, X):
    A0 = closed_type(model, X, name="A")
    out = [("closed-terminal", A0, model.bang(X))]
    if _carriers_enumerate(model, X):
        pt = model.point(X, random.Random("idtypes-sit"))
        F = factorize(model, pt)
        A2 = DependentType(F.rho, pi(model, F), name="P(pt)")
        out.append(("lifted-point", A2, model.compose(pt, model.bang(X))))
    return out


def _subst_cases(model, X):
    out = []
    for label, A, f in _situations(model, X):
        sub, g = subst(model, A, f)
        out.append((label, A, f, sub, g, _anchored(model, sub.projection)))
    return out


@law("idmodel/subst-transport", "idmodel")
def law_subst_transport(model, X):
    cases = []
    for label, A, f, sub, g, Q in _subst_cases(model, X):
        F_y = factorize(model, sub.projection)
        F_x = factorize(model, A.projection)
        mid = fill_p(model, F_y, F_x, g, f)
        carry, _ = transport_mor(model, A.rstruct)
        cases.append((label, A, f, sub, g, mid, carry, Q))

    def check(label, A, f, sub, g, mid, carry, Q, e):
        psi, w = _split(e)
        got = sub.rstruct.op(psi, w)
        model.validate(sub.total, got)
        D = f.dom
        if not model.eq(D, sub.projection(got), model.s(D)(psi)):
            raise Counterexample({"case": label, "e": e, "under": sub.projection(got)})
        pushed = A.rstruct.op(model.Mmor(f)(psi), g(w))
        if not model.eq(A.total, g(got), pushed):
            raise Counterexample({"case": label, "e": e, "compared": g(got), "pushed": pushed})
        redone = carry(mid(e))
        if not model.eq(A.total, g(got), redone):
            raise Counterexample({"case": label, "e": e, "compared": g(got), "redone": redone})

    return Domain(model, cases,
                  lambda label, A, f, sub, g, mid, carry, Q: Q), check


@law("idmodel/subst-identity", "idmodel")
def law_subst_identity(model, X):
    cases = []
    for label, A, _f in _situations(model, X):
        ident = model.identity(A.context)
        sub, g = subst(model, A, ident)
        cases.append((label, A, sub, g, _anchored(model, sub.projection)))

    def check(label, A, sub, g, Q, e):
        psi, w = _split(e)
        got = sub.rstruct.op(psi, w)
        want = A.rstruct.op(psi, g(w))
        if not model.eq(A.total, g(got), want):
            raise Counterexample({"case": label, "e": e, "got": g(got), "want": want})

    return Domain(model, cases, lambda label, A, sub, g, Q: Q), check


def _frobenius_cases(model, X):
    out = []
    for label, A in _stock_types(model, X):
        data = diag_factor(model, A)
        V = closed_type(model, A.total, name="V")
        B = _constant_family(model, V, data.fib.obj, name="B")
        pl = frobenius(model, B, data.refl, data.lstruct)
        out.append((label, data, B, pl))
    return out


@law("idmodel/frobenius-retract", "idmodel")
def law_frobenius_retract(model, X):
    def check(label, data, B, pl, e):
        back = pl.retract(pl.inclusion(e))
        if not model.eq(pl.total, back, e):
            raise Counterexample({"case": label, "e": e, "back": back})
        left = data.refl(pl.over(e))
        under = B.projection(pl.inclusion(e))
        if not model.eq(B.context, under, left):
            raise Counterexample({"case": label, "e": e, "under": under, "left": left})
        got = pl.lstruct.theta.mor(pl.inclusion(e))
        want = model.r(B.total)(pl.inclusion(e))
        if not model.eq(model.M(B.total), got, want):
            raise Counterexample({"case": label, "e": e, "got": got, "want": want})

    return Domain(model, _frobenius_cases(model, X),
                  lambda label, data, B, pl: pl.total), check


@law("idmodel/frobenius-contraction", "idmodel")
def law_frobenius_contraction(model, X):
    def check(label, data, B, pl, b):
        path = pl.lstruct.theta.mor(b)
        if not model.eq(B.total, model.s(B.total)(path), b):
            raise Counterexample({"case": label, "b": b, "start": model.s(B.total)(path)})
        want = pl.inclusion(pl.retract(b))
        if not model.eq(B.total, model.t(B.total)(path), want):
            raise Counterexample({"case": label, "b": b, "end": model.t(B.total)(path)})

    return Domain(model, _frobenius_cases(model, X),
                  lambda label, data, B, pl: B.total), check


def _stability_cases(model, X):
    return [
        (label, stability_compare(model, A, f))
        for label, A, f in _situations(model, X)
    ]


@law("stability/compare-roundtrip", "stability")
def law_compare_roundtrip(model, X):
    def check(label, st, e):
        v = st.compare(e)
        model.validate(st.data_sub.fib.obj, v)
        back = st.uncompare(v)
        if not model.eq(st.pulled, back, e):
            raise Counterexample({"case": label, "e": e, "back": back})

    return Domain(model, _stability_cases(model, X), lambda label, st: st.pulled), check


@law("stability/compare-section", "stability")
def law_compare_section(model, X):
    def check(label, st, v):
        back = st.compare(st.uncompare(v))
        if not model.eq(st.data_sub.fib.obj, back, v):
            raise Counterexample({"case": label, "v": v, "back": back})

    return Domain(model, _stability_cases(model, X),
                  lambda label, st: st.data_sub.fib.obj), check


@law("stability/compare-refl", "stability")
def law_compare_refl(model, X):
    def check(label, st, e):
        lifted = El(
            e.stage,
            (st.sub.projection(e).value, st.data.fib.refl(st.top(e)).value),
        )
        got = st.compare(lifted)
        want = st.data_sub.fib.refl(e)
        if not model.eq(st.data_sub.fib.obj, got, want):
            raise Counterexample({"case": label, "e": e, "got": got, "want": want})

    return Domain(model, _stability_cases(model, X), lambda label, st: st.sub.total), check


@law("stability/endpoint-squares", "stability")
def law_endpoint_squares(model, X):
    def check(label, st, v):
        fibG, fibD = st.data.fib, st.data_sub.fib
        A = st.type
        for up, down in ((fibD.src, fibG.src), (fibD.tgt, fibG.tgt)):
            got = down(st.push(v))
            want = st.top(up(v))
            if not model.eq(A.total, got, want):
                raise Counterexample({"case": label, "v": v, "got": got, "want": want})
        got = fibG.base(st.push(v))
        want = st.f(fibD.base(v))
        if not model.eq(A.context, got, want):
            raise Counterexample({"case": label, "v": v, "over": got, "want": want})

    return Domain(model, _stability_cases(model, X),
                  lambda label, st: st.data_sub.fib.obj), check


@law("stability/refl-square", "stability")
def law_refl_square(model, X):
    def check(label, st, e):
        got = st.push(st.data_sub.fib.refl(e))
        want = st.data.fib.refl(st.top(e))
        if not model.eq(st.data.fib.obj, got, want):
            raise Counterexample({"case": label, "e": e, "got": got, "want": want})

    return Domain(model, _stability_cases(model, X), lambda label, st: st.sub.total), check


@law("stability/id-roundtrip", "stability")
def law_id_roundtrip(model, X):
    def check(label, st, v):
        aligned = st.to_re(v)
        model.validate(st.re_id, aligned)
        back = st.from_re(aligned)
        if not model.eq(st.data_sub.fib.obj, back, v):
            raise Counterexample({"case": label, "v": v, "back": back})

    return Domain(model, _stability_cases(model, X),
                  lambda label, st: st.data_sub.fib.obj), check


@law("stability/id-section", "stability")
def law_id_section(model, X):
    def check(label, st, e):
        back = st.to_re(st.from_re(e))
        if not model.eq(st.re_id, back, e):
            raise Counterexample({"case": label, "e": e, "back": back})

    return Domain(model, _stability_cases(model, X), lambda label, st: st.re_id), check


@law("stability/id-op", "stability")
def law_id_op(model, X):
    cases = [
        (label, st, _anchored(model, st.data_sub.ends))
        for label, st in _stability_cases(model, X)
    ]

    def check(label, st, Q, e):
        big, v = _split(e)
        got = st.to_re(st.data_sub.rstruct.op(big, v))
        want = st.re_op(big, st.to_re(v))
        if not model.eq(st.re_id, got, want):
            raise Counterexample({"case": label, "e": e, "got": got, "want": want})

    return Domain(model, cases, lambda label, st, Q: Q), check


@law("stability/contraction-natural", "stability")
def law_contraction_natural(model, X):
    def check(label, st, v):
        fibG, fibD = st.data.fib, st.data_sub.fib
        got = model.Mmor(st.push)(fibD.theta.mor(v))
        want = fibG.theta.mor(st.push(v))
        if not model.eq(model.M(fibG.obj), got, want):
            raise Counterexample({"case": label, "v": v, "got": got, "want": want})

    return Domain(model, _stability_cases(model, X),
                  lambda label, st: st.data_sub.fib.obj), check


@law("stability/j-square", "stability")
def law_j_square(model, X):
    cases = []
    for label, st in _stability_cases(model, X):
        A = st.type
        V = closed_type(model, A.total, name="V")
        C_g = _constant_family(model, V, st.data.fib.obj, name="C")
        d_g = Mor(
            A.total,
            C_g.total,
            lambda e, st=st: El(e.stage, (st.data.refl(e).value, e.value)),
            name="over-refl",
        )
        J_g = j_elim(model, st.data, C_g, d_g)
        C_d, _ = subst(model, C_g, st.push, name="C[push]")
        d_d = Mor(
            st.sub.total,
            C_d.total,
            lambda e, st=st, d_g=d_g: El(
                e.stage,
                (st.data_sub.fib.refl(e).value, d_g(st.top(e)).value),
            ),
            name="over-refl-sub",
        )
        J_d = j_elim(model, st.data_sub, C_d, d_d)
        cases.append((label, st, C_g, J_g, J_d))

    def check(label, st, C_g, J_g, J_d, v):
        got = El(v.stage, J_d(v).value[1])
        want = J_g(st.push(v))
        if not model.eq(C_g.total, got, want):
            raise Counterexample({"case": label, "v": v, "got": got, "want": want})

    return Domain(model, cases,
                  lambda label, st, C_g, J_g, J_d: st.data_sub.fib.obj), check


IDMODEL_LAWS = (
    law_member_roundtrip,
    law_member_constant,
    law_refl_member,
    law_concat_members,
    law_reverse_member,
    law_contraction_endpoints,
    law_contraction_trivial,
    law_contraction_projects,
    law_straighten_source,
    law_straighten_target,
    law_straighten_refl,
    law_carry_endpoints,
    law_carry_identity,
    law_carry_refl,
    law_filler_endpoints,
    law_filler_unit,
    law_refl_diagonal,
    law_j_computation,
    law_j_section,
    law_strong_j_one_computation,
    law_strong_j_one_section,
    law_strong_j_two_computation,
    law_strong_j_two_section,
    law_subst_transport,
    law_subst_identity,
    law_frobenius_retract,
    law_frobenius_contraction,
)

STABILITY_LAWS = (
    law_compare_roundtrip,
    law_compare_section,
    law_compare_refl,
    law_endpoint_squares,
    law_refl_square,
    law_id_roundtrip,
    law_id_section,
    law_id_op,
    law_contraction_natural,
    law_j_square,
)


def idmodel_laws(model: Model):
    return list(IDMODEL_LAWS)


def stability_laws(model: Model):
    return list(STABILITY_LAWS)
