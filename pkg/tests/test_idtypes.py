"""Identity types over each backend: membership, transport, elimination.

Law ids are pinned: report consumers key on them, so renames must surface
here.  The direct tests below the suite runs exercise the constructors on
concrete elements where the expected value can be written down by hand.
"""

import random

import pytest

from pathobj.backends.base import El, ModelConfig, Mor
from pathobj.backends.chain import ChainModel
from pathobj.backends.groupoid import GroupoidModel
from pathobj.backends.simplicial import SimplicialModel
from pathobj.idtypes import (
    IDMODEL_LAWS,
    STABILITY_LAWS,
    DependentType,
    closed_type,
    diag_factor,
    ext,
    fiberwise_path_object,
    id_type,
    idmodel_laws,
    j_elim,
    precart_delta,
    psi_star,
    pulled_refl,
    refl,
    stability_laws,
    subst,
)
from pathobj.laws import run_suite
from pathobj.wfs import factorize, pi

from test_backends import iso_pair, wedge_chain, z2

IDMODEL_IDS = (
    "idmodel/member-roundtrip",
    "idmodel/member-constant",
    "idmodel/refl-member",
    "idmodel/concat-members",
    "idmodel/reverse-member",
    "idmodel/contraction-endpoints",
    "idmodel/contraction-trivial",
    "idmodel/contraction-projects",
    "idmodel/straighten-source",
    "idmodel/straighten-target",
    "idmodel/straighten-refl",
    "idmodel/carry-endpoints",
    "idmodel/carry-identity",
    "idmodel/carry-refl",
    "idmodel/filler-endpoints",
    "idmodel/filler-unit",
    "idmodel/refl-diagonal",
    "idmodel/j-computation",
    "idmodel/j-section",
    "idmodel/strong-j-one-computation",
    "idmodel/strong-j-one-section",
    "idmodel/strong-j-two-computation",
    "idmodel/strong-j-two-section",
    "idmodel/subst-transport",
    "idmodel/subst-identity",
    "idmodel/frobenius-retract",
    "idmodel/frobenius-contraction",
)

STABILITY_IDS = (
    "stability/compare-roundtrip",
    "stability/compare-section",
    "stability/compare-refl",
    "stability/endpoint-squares",
    "stability/refl-square",
    "stability/id-roundtrip",
    "stability/id-section",
    "stability/id-op",
    "stability/contraction-natural",
    "stability/j-square",
)


def test_idmodel_registry_is_frozen():
    assert tuple(lw.law_id for lw in IDMODEL_LAWS) == IDMODEL_IDS
    assert len(set(IDMODEL_IDS)) == len(IDMODEL_IDS)
    assert all(lw.group == "idmodel" for lw in IDMODEL_LAWS)


def test_stability_registry_is_frozen():
    assert tuple(lw.law_id for lw in STABILITY_LAWS) == STABILITY_IDS
    assert all(lw.group == "stability" for lw in STABILITY_LAWS)


def test_groupoid_idmodel_suite_exhaustive():
    model = GroupoidModel(iso_pair())
    rep = run_suite(model, idmodel_laws(model), seed=11, samples=25, suite="idmodel")
    assert rep["status"] == "pass"
    assert rep["law_count"] == len(IDMODEL_IDS)
    assert all(r["mode"] == "exhaustive" for r in rep["laws"])
    assert all(r["checked"] > 0 for r in rep["laws"])


def test_groupoid_idmodel_suite_with_parallel_arrows():
    # z2 has a non-identity endomorphism, so transports genuinely move
    model = GroupoidModel(z2())
    rep = run_suite(model, idmodel_laws(model), seed=3, samples=25, suite="idmodel")
    assert rep["status"] == "pass"


def test_chain_idmodel_suite_on_basis():
    model = ChainModel(wedge_chain())
    rep = run_suite(model, idmodel_laws(model), seed=7, samples=25, suite="idmodel")
    assert rep["status"] == "pass"
    assert all(r["mode"] == "basis" for r in rep["laws"])


def test_sset_idmodel_suite_sampled(triangle):
    model = SimplicialModel(triangle, ModelConfig(max_dim=2, max_len=4))
    rep = run_suite(model, idmodel_laws(model), seed=11, samples=25, suite="idmodel")
    assert rep["status"] == "pass"
    # path-object carriers have no enumeration, so those laws sample
    assert any(r["mode"] == "sampled" for r in rep["laws"])


def test_groupoid_stability_suite():
    model = GroupoidModel(iso_pair())
    rep = run_suite(model, stability_laws(model), seed=11, samples=25, suite="stability")
    assert rep["status"] == "pass"
    assert rep["law_count"] == len(STABILITY_IDS)


def test_chain_stability_suite():
    model = ChainModel(wedge_chain())
    rep = run_suite(model, stability_laws(model), seed=7, samples=25, suite="stability")
    assert rep["status"] == "pass"


def test_sset_stability_suite(triangle):
    model = SimplicialModel(triangle, ModelConfig(max_dim=2, max_len=4))
    rep = run_suite(model, stability_laws(model), seed=11, samples=25, suite="stability")
    assert rep["status"] == "pass"


# ------------------------------------------------------------ direct tests


def test_groupoid_closed_identity_type_is_the_arrow_object():
    model = GroupoidModel(iso_pair())
    X = model.stock_objects()[0]
    A = closed_type(model, X)
    data = diag_factor(model, A)
    arrows = X.arrows()
    members = data.fib.obj.objects()
    assert len(members) == len(arrows)
    for m in members:
        w = El(0, m)
        f = data.fib.j(w)
        ends = data.ends(w)
        assert ends.value == (X.src(f.value), X.tgt(f.value))
    a = El(0, X.objects()[0])
    assert data.fib.j(data.refl(a)).value == X.ident(a.value)


def test_sset_refl_is_the_empty_path(triangle):
    model = SimplicialModel(triangle, ModelConfig(max_dim=2, max_len=4))
    X = model.stock_objects()[0]
    A = closed_type(model, X)
    fib = fiberwise_path_object(model, A)
    v = model.sample_at(X, random.Random(0), 0)
    w = fib.refl(v)
    model.validate(fib.obj, w)
    path = fib.j(w)
    assert path.value.length == 0
    assert model.eq(model.M(X), path, model.r(X)(v))


def test_straightening_a_closed_type_is_the_inclusion():
    model = GroupoidModel(iso_pair())
    X = model.stock_objects()[0]
    A = closed_type(model, X)
    fib = fiberwise_path_object(model, A)
    delta = precart_delta(model, A, fib)
    MX = model.M(X)
    for stage in model.stages(MX):
        for v in model.elements(MX, stage):
            phi = El(stage, v)
            assert model.eq(fib.obj, delta(phi), fib.inc(phi))


def test_straightening_moves_the_endpoint_on_a_lifted_type():
    model = GroupoidModel(iso_pair())
    X = model.stock_objects()[0]
    pt = model.point(X, random.Random(5))
    F = factorize(model, pt)
    A = DependentType(F.rho, pi(model, F), name="P(pt)")
    fib = fiberwise_path_object(model, A)
    delta = precart_delta(model, A, fib)
    MT = model.M(A.total)
    moved = 0
    for v in model.elements(MT, 0):
        phi = El(0, v)
        if not model.eq(A.total, fib.tgt(delta(phi)), model.t(A.total)(phi)):
            moved += 1
    assert moved > 0


def test_carrying_requires_a_matching_endpoint():
    model = GroupoidModel(iso_pair())
    X = model.stock_objects()[0]
    pt = model.point(X, random.Random(5))
    F = factorize(model, pt)
    A = DependentType(F.rho, pi(model, F), name="P(pt)")
    fib = fiberwise_path_object(model, A)
    a = El(0, A.total.objects()[0])
    w = fib.refl(a)
    bad = next(
        El(0, c)
        for c in X.objects()
        if not model.eq(X, El(0, c), fib.base(w))
    )
    psi = model.r(X)(bad)
    with pytest.raises(ValueError):
        psi_star(model, A, psi, w, fib=fib)


def test_j_elim_rejects_a_section_away_from_reflexivity():
    model = GroupoidModel(iso_pair())
    X = model.stock_objects()[0]
    A = closed_type(model, X)
    data = diag_factor(model, A)
    C, _ = subst(model, closed_type(model, X), model.bang(data.fib.obj))
    stray = next(
        El(0, m)
        for m in data.fib.obj.objects()
        if not model.eq(model.M(X), data.fib.j(El(0, m)), model.r(X)(data.fib.src(El(0, m))))
    )
    bad = Mor(X, C.total, lambda e: El(e.stage, (stray.value, e.value)), name="stray")
    with pytest.raises(ValueError):
        j_elim(model, data, C, bad)


def test_pulled_refl_rejects_a_detached_chain():
    model = GroupoidModel(iso_pair())
    X = model.stock_objects()[0]
    A = closed_type(model, X)
    data = diag_factor(model, A)
    B, _ = subst(model, closed_type(model, X), model.bang(X))  # over X, not the fiber object
    with pytest.raises(ValueError):
        pulled_refl(model, data, [B])


def test_reindexing_along_the_identity_matches_pointwise():
    model = GroupoidModel(iso_pair())
    X = model.stock_objects()[0]
    A = closed_type(model, X)
    T = model.terminal()
    sub, g = subst(model, A, model.identity(T))
    rng = random.Random(2)
    for _ in range(10):
        e = model.sample(sub.total, rng)
        psi = model.r(T)(sub.projection(e))
        got = sub.rstruct.op(psi, e)
        assert model.eq(A.total, g(got), A.rstruct.op(psi, g(e)))


def test_context_extension_and_wrappers():
    model = GroupoidModel(iso_pair())
    X = model.stock_objects()[0]
    A = closed_type(model, X)
    assert ext(A) is A.total
    idt = id_type(model, A)
    assert idt.projection.name == "ends"
    r = refl(model, A)
    assert r.dom is A.total
    assert model.validate(r.cod, r(El(0, X.objects()[0]))) is None
