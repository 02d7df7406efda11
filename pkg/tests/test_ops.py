"""Operator arithmetic checked against brute-force oracles.

The oracle here treats an operator as a plain Python function on points and
re-derives every claimed identity by evaluating both sides pointwise, so the
dense-image implementation is never trusted to check itself.
"""

import pytest

from pathobj.ops import (
    RankMismatch,
    SimplicialOperator,
    all_epis,
    all_monos,
    all_operators,
    compose_ops,
    delta,
    ez_factorize,
    identity,
    sigma,
)


def pointwise_equal(f, g):
    assert f.rank == g.rank and f.domain_rank == g.domain_rank
    return all(f(x) == g(x) for x in range(f.domain_rank + 1))


def oracle_compose(outer, inner):
    return tuple(outer(inner(x)) for x in range(inner.domain_rank + 1))


# frozen small cases, written down before the implementation ran
DELTA_LITERALS = {
    (0, 1): (1,),
    (1, 1): (0,),
    (0, 2): (1, 2),
    (1, 2): (0, 2),
    (2, 2): (0, 1),
    (1, 3): (0, 2, 3),
}
SIGMA_LITERALS = {
    (0, 0): (0, 0),
    (0, 1): (0, 0, 1),
    (1, 1): (0, 1, 1),
    (1, 2): (0, 1, 1, 2),
}


def test_delta_sigma_literals():
    for (i, n), images in DELTA_LITERALS.items():
        assert delta(i, n).images == images
    for (i, n), images in SIGMA_LITERALS.items():
        assert sigma(i, n).images == images


def test_validation_rejects_bad_data():
    with pytest.raises(ValueError):
        SimplicialOperator(2, (1, 0))
    with pytest.raises(ValueError):
        SimplicialOperator(1, (0, 2))
    with pytest.raises(ValueError):
        SimplicialOperator(0, ())
    with pytest.raises(ValueError):
        delta(3, 2)
    with pytest.raises(ValueError):
        sigma(2, 1)
    with pytest.raises(RankMismatch):
        compose_ops(delta(0, 2), delta(0, 3))


def test_compose_matches_pointwise_oracle():
    for n in range(4):
        for m in range(4):
            for ln in range(3):
                for outer in all_operators(m, n):
                    for inner in all_operators(ln, m):
                        assert compose_ops(outer, inner).images == oracle_compose(outer, inner)


def test_cosimplicial_identities_exhaustive():
    # delta_j o delta_i = delta_i o delta_{j-1} for i < j
    for n in range(1, 5):
        for j in range(n + 2):
            for i in range(j):
                lhs = compose_ops(delta(j, n + 1), delta(i, n))
                rhs = compose_ops(delta(i, n + 1), delta(j - 1, n))
                assert pointwise_equal(lhs, rhs)
    # sigma_j o sigma_i = sigma_i o sigma_{j+1} for i <= j
    for n in range(4):
        for j in range(n + 1):
            for i in range(j + 1):
                lhs = compose_ops(sigma(j, n), sigma(i, n + 1))
                rhs = compose_ops(sigma(i, n), sigma(j + 1, n + 1))
                assert pointwise_equal(lhs, rhs)
    # mixed relations
    for n in range(1, 5):
        for j in range(n):
            for i in range(n + 1):
                lhs = compose_ops(sigma(j, n - 1), delta(i, n))
                if i < j:
                    rhs = compose_ops(delta(i, n - 1), sigma(j - 1, n - 2)) if n >= 2 else None
                    assert rhs is not None and pointwise_equal(lhs, rhs)
                elif i in (j, j + 1):
                    assert lhs.is_identity
                else:
                    rhs = compose_ops(delta(i - 1, n - 1), sigma(j, n - 2)) if n >= 2 else None
                    assert rhs is not None and pointwise_equal(lhs, rhs)


def test_epi_mono_predicates_against_definitions():
    for m in range(4):
        for n in range(4):
            for op in all_operators(m, n):
                image = {op(x) for x in range(m + 1)}
                assert op.is_epi == (image == set(range(n + 1)))
                assert op.is_mono == (len(image) == m + 1)


def test_ez_factorization_unique_against_enumeration():
    """Brute force: the epi-mono pair through the minimal middle rank is unique."""
    for m in range(4):
        for n in range(4):
            for op in all_operators(m, n):
                candidates = []
                for d in range(min(m, n) + 1):
                    for e in all_epis(m, d):
                        for mo in all_monos(d, n):
                            if oracle_compose(mo, e) == op.images:
                                candidates.append((e, mo))
                assert len(candidates) == 1
                epi, mono = ez_factorize(op)
                assert epi.is_epi and mono.is_mono
                assert (epi, mono) == candidates[0]


def test_ez_frozen_example():
    # [0,0,2] : [2] -> [2] splits as the mono (0,2) after the epi (0,0,1)
    epi, mono = ez_factorize(SimplicialOperator(2, (0, 0, 2)))
    assert epi.images == (0, 0, 1) and epi.rank == 1
    assert mono.images == (0, 2) and mono.rank == 2


def test_preimage_fibers():
    op = SimplicialOperator(3, (1, 1, 3))
    assert list(op.preimage(1)) == [0, 1]
    assert list(op.preimage(3)) == [2]
    empty = op.preimage(2)
    assert len(empty) == 0 and empty.start == 2
    before = op.preimage(0)
    assert len(before) == 0 and before.start == 0


def test_enumeration_counts():
    # |Hom([m],[n])| = C(m+n+1, m+1); epis/monos counted by binomials
    from math import comb

    for m in range(4):
        for n in range(4):
            assert len(all_operators(m, n)) == comb(m + n + 1, m + 1)
            assert len(all_monos(m, n)) == (comb(n + 1, m + 1) if m <= n else 0)
            assert len(all_epis(m, n)) == (comb(m, n) if n <= m else 0)


def test_identity_and_call():
    e = identity(3)
    assert e.is_identity and e.is_epi and e.is_mono
    assert [e(x) for x in range(4)] == [0, 1, 2, 3]
    assert not delta(0, 1).is_identity
    assert not sigma(0, 0).is_identity
