"""Factorization, chosen fillers, and path transport over each backend.

Law ids are pinned: report consumers key on them, so renames must surface
here.  Direct unit tests cover the constructors' own validation, which the
law runner only sees as setup failures.
"""

import json
import random

import pytest

from pathobj import mutations
from pathobj.backends.base import El, ModelConfig
from pathobj.backends.chain import ChainModel
from pathobj.backends.groupoid import GroupoidModel
from pathobj.backends.simplicial import SimplicialModel
from pathobj.laws import run_suite
from pathobj.wfs import (
    WFS_LAWS,
    LStructure,
    closed_rstructure,
    compose_homotopies,
    factorize,
    fill_p,
    lift,
    path_lift,
    pi,
    refl_homotopy,
    reverse_homotopy,
    sigma,
    wfs_laws,
)

from test_backends import iso_pair, wedge_chain

WFS_IDS = (
    "wfs/rho-after-lambda",
    "wfs/lambda-components",
    "wfs/mid-anchored",
    "wfs/sigma-retract",
    "wfs/sigma-endpoints",
    "wfs/sigma-trivial",
    "wfs/pi-unit",
    "wfs/pi-over",
    "wfs/pi-into",
    "wfs/fill-identity",
    "wfs/fill-lambda",
    "wfs/fill-rho",
    "wfs/fill-compose",
    "wfs/lift-upper",
    "wfs/lift-lower",
    "wfs/lift-natural-left",
    "wfs/lift-natural-right",
    "wfs/homotopy-compose",
    "wfs/homotopy-reverse",
    "wfs/homotopy-whisker",
    "wfs/pathlift-projects",
    "wfs/pathlift-endpoints",
    "wfs/pathlift-identity",
    "wfs/pathlift-reindex",
    "wfs/closed-type-lift",
)


def stock_by_name(model, name):
    for f in model.stock_morphisms():
        if f.name == name:
            return f
    raise KeyError(name)


def test_wfs_registry_is_frozen():
    assert tuple(lw.law_id for lw in WFS_LAWS) == WFS_IDS
    assert len(set(WFS_IDS)) == len(WFS_IDS)
    assert all(lw.group == "wfs" for lw in WFS_LAWS)


def test_groupoid_wfs_suite_exhaustive():
    model = GroupoidModel(iso_pair())
    rep = run_suite(model, wfs_laws(model), seed=11, samples=30, suite="wfs")
    assert rep["status"] == "pass"
    assert rep["suite"] == "wfs"
    assert rep["law_count"] == len(WFS_IDS)
    assert all(r["mode"] == "exhaustive" for r in rep["laws"])
    assert all(r["checked"] > 0 for r in rep["laws"])


def test_chain_wfs_suite_on_basis():
    model = ChainModel(wedge_chain())
    rep = run_suite(model, wfs_laws(model), seed=7, samples=20, suite="wfs")
    assert rep["status"] == "pass"
    assert all(r["mode"] == "basis" for r in rep["laws"])


def test_sset_wfs_suite_passes(triangle):
    model = SimplicialModel(triangle, ModelConfig(max_dim=2, max_len=4))
    rep = run_suite(model, wfs_laws(model), seed=11, samples=20, suite="wfs")
    assert rep["status"] == "pass"
    assert rep["law_count"] == len(WFS_IDS)


def test_factorization_data(triangle):
    model = SimplicialModel(triangle, ModelConfig(max_dim=2, max_len=4))
    rng = random.Random(3)
    f = stock_by_name(model, "pto!")
    F = factorize(model, f)
    for _ in range(8):
        w = model.sample(F.mid, rng)
        # the stored path ends over the stored element
        end = model.t(f.cod)(F.d(w))
        assert model.eq(f.cod, end, f(F.e(w)))
        x = model.sample(f.dom, rng)
        assert model.eq(f.cod, F.rho(F.lam(x)), f(x))
        assert model.eq(f.dom, F.e(F.lam(x)), x)


def test_lift_solves_squares(triangle):
    model = SimplicialModel(triangle, ModelConfig(max_dim=2, max_len=4))
    rng = random.Random(5)
    f = stock_by_name(model, "id")
    F = factorize(model, f)
    L = sigma(model, F)
    R = pi(model, F)
    q = model.compose(F.lam, F.e)
    h = model.compose(q, F.lam)
    k = model.compose(F.rho, q)
    j = lift(model, h, k, L, R)
    for _ in range(8):
        x = model.sample(f.dom, rng)
        assert model.eq(F.mid, j(F.lam(x)), h(x))
        w = model.sample(F.mid, rng)
        assert model.eq(f.cod, F.rho(j(w)), k(w))


def test_lstructure_rejects_bad_retract():
    model = GroupoidModel(iso_pair())
    F = factorize(model, stock_by_name(model, "id"))
    good = sigma(model, F)
    collapse = model.compose(stock_by_name(model, "pto!"), F.e)
    with pytest.raises(ValueError):
        LStructure(model, F.lam, collapse, good.theta)


def test_fill_rejects_noncommuting_square():
    model = GroupoidModel(iso_pair())
    f = stock_by_name(model, "id")
    F = factorize(model, f)
    with pytest.raises(ValueError):
        fill_p(model, F, F, model.identity(f.dom), stock_by_name(model, "pto!"))


def test_transport_moves_fiber_point():
    # lifting along rho prepends the new path to the stored one
    model = GroupoidModel(iso_pair())
    rng = random.Random(2)
    F = factorize(model, stock_by_name(model, "id"))
    R = pi(model, F)
    X = model.X0
    for _ in range(10):
        psi = model.sample_at(model.M(X), rng, 0)
        x = model.t(X)(psi)
        w = F.lam(x)
        star = R.op(psi, w)
        assert model.eq(F.mid, star, El(0, (psi.value, x.value)))


def test_closed_transport_is_identity():
    model = ChainModel(wedge_chain())
    rng = random.Random(4)
    X = model.X0
    R = closed_rstructure(model, X)
    one = model.terminal()
    for stage in model.stages(X):
        x = model.sample_at(X, rng, stage)
        psi = model.r(one)(model.bang(X)(x))
        assert model.eq(X, R.op(psi, x), x)


def test_homotopy_ops_bookkeeping():
    model = GroupoidModel(iso_pair())
    rng = random.Random(6)
    X = model.X0
    still = refl_homotopy(model, model.identity(X))
    twice = compose_homotopies(model, still, still)
    back = reverse_homotopy(model, still)
    for _ in range(8):
        x = model.sample(X, rng)
        want = model.r(X)(x)
        assert model.eq(model.M(X), twice.mor(x), want)
        assert model.eq(model.M(X), back.mor(x), want)
        assert model.eq(X, twice.src(x), x)
        assert model.eq(X, back.tgt(x), x)


def test_path_lift_morphism_level(triangle):
    model = SimplicialModel(triangle, ModelConfig(max_dim=2, max_len=4))
    rng = random.Random(9)
    F = factorize(model, stock_by_name(model, "id"))
    R = pi(model, F)
    from pathobj.wfs import Homotopy, transport_mor

    p_mor, G = transport_mor(model, R)
    Y = F.f.cod
    hty = Homotopy(Y, G.d, model.compose(model.s(Y), G.d), model.compose(F.rho, G.e))
    star, lifted = path_lift(model, R, hty, G.e)
    Mrho = model.Mmor(F.rho)
    for _ in range(6):
        e = model.sample(G.mid, rng)
        # the lifted homotopy sits over the given one and joins the
        # transported point to the original
        assert model.eq(model.M(Y), Mrho(lifted.mor(e)), hty.mor(e))
        assert model.eq(F.mid, model.s(F.mid)(lifted.mor(e)), star(e))
        assert model.eq(F.mid, model.t(F.mid)(lifted.mor(e)), G.e(e))


def test_pi_mutant_breaks_suite_deterministically():
    def run():
        model = GroupoidModel(iso_pair())
        with mutations.enabled("pi-compose-order"):
            return run_suite(model, wfs_laws(model), seed=11, samples=20, suite="wfs")

    rep1, rep2 = run(), run()
    assert json.dumps(rep1) == json.dumps(rep2)
    assert rep1["status"] == "fail"
    failed = {r["id"]: r for r in rep1["laws"] if r["status"] == "fail"}
    assert "wfs/pi-unit" in failed
    assert failed["wfs/pi-unit"]["witness"]


def test_wfs_reports_deterministic(triangle):
    def run():
        model = SimplicialModel(triangle, ModelConfig(max_dim=2, max_len=4))
        return run_suite(model, wfs_laws(model), seed=13, samples=15, suite="wfs")

    assert json.dumps(run()) == json.dumps(run())
