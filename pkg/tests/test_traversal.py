"""Traversal action pinned against the brute-force oracle."""

import pytest

from oracles import all_traversals, oracle_act
from pathobj import mutations
from pathobj.ops import SimplicialOperator, all_operators, compose_ops, delta, identity, sigma
from pathobj.traversal import (
    MINUS,
    PLUS,
    Reindex,
    Traversal,
    act_traversal,
    boundary_operator,
    collapse_op,
    concat,
    head,
    reverse,
    segment_operator,
    shift_index,
    tail,
    traversal_from_json,
    traversal_to_json,
)


def test_face_index_conventions():
    t = Traversal(2, ((1, PLUS), (0, MINUS)))
    # a forward step at x runs from face x+1 down to face x
    assert t.minus_face(0) == 2 and t.plus_face(0) == 1
    assert t.minus_face(1) == 0 and t.plus_face(1) == 1


def test_validation():
    with pytest.raises(ValueError):
        Traversal(1, ((2, PLUS),))
    with pytest.raises(ValueError):
        Traversal(1, ((0, "x"),))
    with pytest.raises(ValueError):
        concat(Traversal(0, ()), Traversal(1, ()))


def test_reverse_concat_tail_head():
    t = Traversal(1, ((1, PLUS), (0, MINUS), (1, MINUS)))
    r = reverse(t)
    assert r.entries == ((1, PLUS), (0, PLUS), (1, MINUS))
    assert reverse(r) == t
    u = Traversal(1, ((0, PLUS),))
    assert concat(t, u).entries == t.entries + u.entries
    assert reverse(concat(t, u)) == concat(reverse(u), reverse(t))
    assert tail(t, 1).entries == t.entries[1:]
    assert head(t, 2).entries == t.entries[:2]
    assert concat(head(t, 2), tail(t, 2)) == t


def test_segment_operator_anchors():
    """g_b must restrict to the neighbouring cross-sections on both faces."""
    for n in range(3):
        for m in range(4):
            for alpha in all_operators(m, n):
                for a in range(n + 1):
                    fiber = alpha.preimage(a)
                    for b in fiber:
                        g = segment_operator(alpha, b)
                        low = boundary_operator(alpha, a, b)
                        high = boundary_operator(alpha, a, b + 1)
                        assert compose_ops(g, delta(b, m + 1)) == low
                        assert compose_ops(g, delta(b + 1, m + 1)) == high
                        # degeneracy compatibility: sigma_a o g_b = alpha o sigma_b
                        assert compose_ops(sigma(a, n), g) == compose_ops(alpha, sigma(b, m))
                    if len(fiber):
                        assert boundary_operator(alpha, a, fiber.start) == compose_ops(
                            delta(a, n + 1), alpha
                        )
                        assert boundary_operator(alpha, a, fiber.stop) == compose_ops(
                            delta(a + 1, n + 1), alpha
                        )
                    else:
                        assert compose_ops(delta(a, n + 1), alpha) == compose_ops(
                            delta(a + 1, n + 1), alpha
                        )


def test_act_matches_oracle_small():
    for n in range(3):
        ts = []
        for k in range(4):
            ts += all_traversals(n, k)
        for m in range(3):
            for alpha in all_operators(m, n):
                for t in ts:
                    psi, re = act_traversal(t, alpha)
                    exp_psi, exp_parents, exp_fillers = oracle_act(t, alpha)
                    assert psi == exp_psi
                    assert re.parents == exp_parents
                    assert tuple(op.images for op in re.ops) == exp_fillers


def test_act_functorial_with_reindex():
    for n in range(3):
        for t in all_traversals(n, 2) + all_traversals(n, 3):
            for m in range(3):
                for alpha in all_operators(m, n):
                    psi1, r1 = act_traversal(t, alpha)
                    for ln in range(3):
                        for beta in all_operators(ln, m):
                            psi2, r2 = act_traversal(psi1, beta)
                            psi3, r3 = act_traversal(t, compose_ops(alpha, beta))
                            assert psi2 == psi3
                            assert r1.then(r2) == r3


def test_act_identity():
    for n in range(3):
        for t in all_traversals(n, 3):
            psi, re = act_traversal(t, identity(n))
            assert psi == t
            assert re.parents == tuple(range(t.length))
            assert all(op.is_identity for op in re.ops)


def test_act_commutes_with_reverse():
    for n in range(3):
        for t in all_traversals(n, 3):
            for m in range(3):
                for alpha in all_operators(m, n):
                    assert act_traversal(reverse(t), alpha)[0] == reverse(
                        act_traversal(t, alpha)[0]
                    )


def test_shift_index_partitions():
    for n in range(3):
        for t in all_traversals(n, 3):
            for m in range(3):
                for alpha in all_operators(m, n):
                    psi, re = act_traversal(t, alpha)
                    assert shift_index(t, alpha, 0) == 0
                    assert shift_index(t, alpha, t.length) == psi.length
                    for i in range(t.length):
                        lo = shift_index(t, alpha, i)
                        hi = shift_index(t, alpha, i + 1)
                        assert re.parents[lo:hi] == (i,) * (hi - lo)


def test_vertex_traversal_degenerated_frozen():
    """A length-5 vertex itinerary pulled back along sigma_0, end to end."""
    t = Traversal(0, ((0, PLUS), (0, PLUS), (0, MINUS), (0, PLUS), (0, MINUS)))
    psi, re = act_traversal(t, sigma(0, 0))
    assert psi.entries == (
        (1, PLUS), (0, PLUS),
        (1, PLUS), (0, PLUS),
        (0, MINUS), (1, MINUS),
        (1, PLUS), (0, PLUS),
        (0, MINUS), (1, MINUS),
    )
    assert psi.length == 10
    assert re.parents == (0, 0, 1, 1, 2, 2, 3, 3, 4, 4)
    s0, s1 = sigma(0, 1), sigma(1, 1)
    assert re.ops == (s0, s1, s0, s1, s1, s0, s0, s1, s1, s0)


def test_collapse_op():
    t = Traversal(2, ((1, MINUS), (2, PLUS)))
    assert collapse_op(t, 0) == sigma(1, 2)
    assert collapse_op(t, 1) == sigma(2, 2)


def test_plus_mirror_mutant_changes_order():
    t = Traversal(0, ((0, PLUS),))
    with mutations.enabled("plus-mirror-flip"):
        psi, _ = act_traversal(t, sigma(0, 0))
    assert psi.entries == ((0, PLUS), (1, PLUS))
    psi2, _ = act_traversal(t, sigma(0, 0))
    assert psi2.entries == ((1, PLUS), (0, PLUS))


def test_json_roundtrip():
    t = Traversal(1, ((1, PLUS), (0, MINUS)))
    data = traversal_to_json(t)
    assert data == {"dim": 1, "entries": [[1, "+"], [0, "-"]]}
    assert traversal_from_json(data) == t


def test_boundary_operator_bounds():
    alpha = SimplicialOperator(1, (0, 0, 1))
    with pytest.raises(ValueError):
        boundary_operator(alpha, 0, 3)
    with pytest.raises(ValueError):
        segment_operator(alpha, 5)
