"""Path arithmetic on hand-checked zigzags.

The two worked paths (a five-edge vertex itinerary and an eight-triangle
edge homotopy) were written down face by face before any of this code ran;
their behaviour under degeneracies, reversal, and the tail construction is
frozen here.
"""

import random

import pytest

from pathobj import mutations
from pathobj.moore import (
    MoorePath,
    PathDisciplineError,
    act_path,
    compose_paths,
    const_path,
    eta_path,
    head_path,
    path_eq,
    refl_path,
    reverse_path,
    tail_path,
    validate_path,
)
from pathobj.objects import PathObject, PresentedObject
from pathobj.ops import all_operators, compose_ops, delta, identity, sigma
from pathobj.presentation import Simplex
from pathobj.traversal import MINUS, PLUS, Traversal, shift_index


def vertex_path(X):
    """The length-5 itinerary x -> z1 -> z2 <- z3 -> z4 <- xp in zigzag0."""
    theta = Traversal(0, ((0, PLUS), (0, PLUS), (0, MINUS), (0, PLUS), (0, MINUS)))
    zetas = tuple(X.presentation.generator(g) for g in ("x", "z1", "z2", "z3", "z4", "xp"))
    phis = tuple(X.presentation.generator(g) for g in ("f1", "f2", "f3", "f4", "f5"))
    return MoorePath(X, theta, zetas, phis)


def homotopy_path(X):
    """The dimension-1 path of the eight filling triangles in zigzag2."""
    theta = Traversal(
        1,
        (
            (1, PLUS), (1, MINUS), (0, PLUS), (0, PLUS),
            (0, MINUS), (1, PLUS), (0, PLUS), (0, MINUS),
        ),
    )
    zetas = tuple(
        X.presentation.generator(g)
        for g in ("xi", "c1", "c2", "c3", "c4", "c5", "c6", "c7", "xip")
    )
    phis = tuple(X.presentation.generator(f"p{i}") for i in range(1, 9))
    return MoorePath(X, theta, zetas, phis)


@pytest.fixture
def Z0(zigzag0):
    return PresentedObject(zigzag0)


@pytest.fixture
def Z2(zigzag2):
    return PresentedObject(zigzag2)


@pytest.fixture
def T(triangle):
    return PresentedObject(triangle)


def test_worked_paths_validate(Z0, Z2):
    validate_path(vertex_path(Z0))
    validate_path(homotopy_path(Z2))


def test_validate_rejects_wrong_fillers(Z0):
    p = vertex_path(Z0)
    broken = MoorePath(Z0, p.theta, p.zetas, p.phis[:2] + (p.phis[3], p.phis[2], p.phis[4]))
    with pytest.raises(PathDisciplineError):
        validate_path(broken)
    with pytest.raises(PathDisciplineError):
        validate_path(MoorePath(Z0, p.theta, p.zetas[:-1], p.phis))


def test_vertex_path_degenerated_frozen(Z0):
    """The worked path pulled back along sigma_0: ten edge steps."""
    p = vertex_path(Z0)
    q = act_path(p, sigma(0, 0))
    validate_path(q)
    assert q.length == 10 and q.dim == 1
    gen = Z0.presentation.generator
    s0, s1 = sigma(0, 1), sigma(1, 1)
    expected_phis = (
        Z0.act(gen("f1"), s0), Z0.act(gen("f1"), s1),
        Z0.act(gen("f2"), s0), Z0.act(gen("f2"), s1),
        Z0.act(gen("f3"), s1), Z0.act(gen("f3"), s0),
        Z0.act(gen("f4"), s0), Z0.act(gen("f4"), s1),
        Z0.act(gen("f5"), s1), Z0.act(gen("f5"), s0),
    )
    assert q.phis == expected_phis
    assert q.source == Z0.act(gen("x"), sigma(0, 0))
    assert q.target == Z0.act(gen("xp"), sigma(0, 0))
    # the interior visits alternate degenerate vertices and genuine edges
    assert q.zetas[1] == gen("f1") and q.zetas[3] == gen("f2")


def test_homotopy_roundtrip_frozen(Z2):
    w = homotopy_path(Z2)
    loop = compose_paths(w, reverse_path(w))
    validate_path(loop)
    assert loop.length == 16
    assert Z2.eq(loop.source, w.source) and Z2.eq(loop.target, w.source)
    assert path_eq(reverse_path(reverse_path(w)), w)
    # source and target edges of the homotopy
    assert w.source == Z2.presentation.generator("xi")
    assert w.target == Z2.presentation.generator("xip")
    # both degeneracies of the edge homotopy validate
    for op in (sigma(0, 1), sigma(1, 1)):
        validate_path(act_path(w, op))


def test_compose_requires_meeting(Z0):
    p = vertex_path(Z0)
    with pytest.raises(PathDisciplineError):
        compose_paths(p, p)


def test_refl_compose_tail_head(Z2):
    w = homotopy_path(Z2)
    r = refl_path(Z2, w.source, 1)
    validate_path(r)
    assert path_eq(compose_paths(r, w), w)
    assert path_eq(compose_paths(w, refl_path(Z2, w.target, 1)), w)
    for i in range(w.length + 1):
        validate_path(tail_path(w, i))
        validate_path(head_path(w, i))
        assert path_eq(compose_paths(head_path(w, i), tail_path(w, i)), w)


def test_act_functorial_on_paths(Z2, T):
    rng = random.Random(7)
    MT = PathObject(T, max_len=3)
    pool = [homotopy_path(Z2)] + [MT.sample(rng, d) for d in (0, 1) for _ in range(6)]
    for p in pool:
        n = p.dim
        assert path_eq(act_path(p, identity(n)), p)
        for m in range(3):
            for alpha in all_operators(m, n):
                pa = act_path(p, alpha)
                validate_path(pa)
                for ln in range(2):
                    for beta in all_operators(ln, m):
                        assert path_eq(act_path(pa, beta), act_path(p, compose_ops(alpha, beta)))


def test_act_commutes_with_reverse_and_compose(Z2):
    w = homotopy_path(Z2)
    half = head_path(w, 4)
    rest = tail_path(w, 4)
    for m in range(3):
        for alpha in all_operators(m, 1):
            assert path_eq(act_path(reverse_path(w), alpha), reverse_path(act_path(w, alpha)))
            assert path_eq(
                act_path(w, alpha),
                compose_paths(act_path(half, alpha), act_path(rest, alpha)),
            )


def test_const_path(T):
    rng = random.Random(3)
    for dim in (0, 1):
        x = T.sample(rng, dim)
        theta = Traversal(dim, ((0, PLUS), (dim, MINUS), (0, MINUS)))
        c = const_path(T, theta, x)
        validate_path(c)
        assert all(T.eq(z, x) for z in c.zetas)
        for m in range(2):
            for alpha in all_operators(m, dim):
                assert path_eq(act_path(c, alpha), const_path(T, (act_path(c, alpha)).theta, T.act(x, alpha)))


def test_tail_shift_lemma(Z2, T):
    rng = random.Random(11)
    MT = PathObject(T, max_len=3)
    pool = [homotopy_path(Z2)] + [MT.sample(rng, 1) for _ in range(5)]
    for p in pool:
        for m in range(3):
            for alpha in all_operators(m, p.dim):
                q = act_path(p, alpha)
                for i in range(p.length + 1):
                    shifted = shift_index(p.theta, alpha, i)
                    assert path_eq(act_path(tail_path(p, i), alpha), tail_path(q, shifted))


def test_eta_tails_frozen(Z0):
    p = vertex_path(Z0)
    M = PathObject(Z0)
    e = eta_path(p, M)
    PathObject(M).validate(0, e)
    assert [z.length for z in e.zetas] == [5, 4, 3, 2, 1, 0]
    assert e.theta == p.theta
    assert path_eq(e.zetas[0], p)
    assert path_eq(e.zetas[-1], refl_path(Z0, p.target, 0))
    # each filler doubles its tail along the degeneracy, minus the cut segment
    for j, f in enumerate(e.phis):
        assert f.dim == 1
        assert f.length == 2 * (p.length - j) - 1


def test_eta_axiom3_equations(Z0, Z2, T):
    rng = random.Random(5)
    MT = PathObject(T, max_len=3)
    cases = [
        (Z0, vertex_path(Z0)),
        (Z2, homotopy_path(Z2)),
        (T, MT.sample(rng, 0)),
        (T, MT.sample(rng, 1)),
    ]
    for X, p in cases:
        M = PathObject(X)
        e = eta_path(p, M)
        validate_path(e)
        # source of the tail path is the path itself
        assert path_eq(e.source, p)
        # target is the empty path at the endpoint
        assert path_eq(e.target, refl_path(X, p.target, p.dim))
        # mapping source over every component recovers the path
        msrc = MoorePath(X, e.theta, tuple(z.source for z in e.zetas), tuple(f.source for f in e.phis))
        assert path_eq(msrc, p)
        # mapping target over every component is the constant path at the target
        mtgt = MoorePath(X, e.theta, tuple(z.target for z in e.zetas), tuple(f.target for f in e.phis))
        assert path_eq(mtgt, const_path(X, p.theta, p.target))
        # the empty path goes to the doubly empty path
        r = refl_path(X, p.source, p.dim)
        assert path_eq(eta_path(r, M), refl_path(M, r, p.dim))


def test_eta_simplicial(Z2, T):
    """Tail paths commute with the operator action."""
    rng = random.Random(13)
    MT = PathObject(T, max_len=3)
    pool = [homotopy_path(Z2)] + [MT.sample(rng, 1) for _ in range(4)]
    for p in pool:
        X = p.base
        M = PathObject(X)
        e = eta_path(p, M)
        for m in range(2):
            for alpha in all_operators(m, p.dim):
                lhs = act_path(e, alpha)
                rhs = eta_path(act_path(p, alpha), M)
                assert path_eq(lhs, rhs)


def test_eta_mutant_breaks_discipline(Z0):
    p = vertex_path(Z0)
    M = PathObject(Z0)
    with mutations.enabled("eta-keep-first-segment"):
        e = eta_path(p, M)
    with pytest.raises(PathDisciplineError):
        validate_path(e)


def test_path_object_sampling(T, Z2):
    rng = random.Random(42)
    for base in (T, PresentedObject(Z2.presentation)):
        M = PathObject(base, max_len=4)
        for dim in (0, 1):
            for _ in range(10):
                p = M.sample(rng, dim)
                M.validate(dim, p)
                tgt = base.sample(rng, dim)
                q = M.sample_with_target(rng, dim, tgt)
                M.validate(dim, q)
                assert base.eq(q.target, tgt)
                for small in M.shrink(dim, p):
                    M.validate(dim, small)


def test_sample_mixes_degenerate_and_not(T):
    rng = random.Random(1)
    M = PathObject(T, max_len=4)
    seen_nondeg = seen_deg = False
    for _ in range(40):
        p = M.sample(rng, 1)
        for f in p.phis:
            if f.is_degenerate:
                seen_deg = True
            else:
                seen_nondeg = True
    assert seen_deg and seen_nondeg
