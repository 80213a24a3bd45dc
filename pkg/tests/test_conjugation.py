import pytest

from raagtools.conjugation import (
    are_conjugate, conjugate, conjugating_element, cyclic_orbit, cyclic_reduce,
    cyclings, decompose_conjugation, is_cyclic_conjugation, is_cyclically_reduced,
    is_left_cyclic, is_right_cyclic, split_cyclic,
)
from raagtools.element import Element, ball, disjointly_commutes, is_geodesic
from raagtools.errors import PreconditionError
from raagtools.lattice import gcd_right, is_prefix

from conftest import el


def _letters(graph):
    return [Element.generator(graph, v, s) for v in graph.vertices for s in (1, -1)]


def _left_cycling_sim(g, u, letters):
    """Whether ``u`` is a product of successive left cyclings of ``g``."""
    if u.is_identity():
        return True
    for x in letters:
        if is_prefix(x, u) and is_prefix(x, g):
            if _left_cycling_sim(conjugate(g, x), x.inverse() * u, letters):
                return True
    return False


def test_cyclic_reduce_examples(P4):
    g = el(P4, "v1^2 v2 v3 v4")
    cr = cyclic_reduce(g)
    assert cr.conjugator.is_identity() and cr.core == g
    cr = cyclic_reduce(el(P4, "v2^-1 v1 v2"))
    assert cr.conjugator == el(P4, "v2") and cr.core == el(P4, "v1")


def test_cyclic_reduce_invariants(P4):
    for g in ball(P4, 4):
        cr = cyclic_reduce(g)
        u, h = cr.conjugator, cr.core
        assert g == u.inverse() * h * u
        assert len(g) == 2 * len(u) + len(h)
        assert gcd_right(h, h.inverse()).is_identity()
        assert u == gcd_right(g, g.inverse())


def test_is_cyclically_reduced(P4):
    assert is_cyclically_reduced(Element.identity(P4))
    assert is_cyclically_reduced(el(P4, "v1^2 v2 v3 v4"))
    assert not is_cyclically_reduced(el(P4, "v2^-1 v1 v2"))
    for g in ball(P4, 4):
        a = is_cyclically_reduced(g)
        assert a == (len(g * g) == 2 * len(g)) == is_cyclically_reduced(g * g)


def test_cyclic_predicates_require_reduced(P4):
    with pytest.raises(PreconditionError):
        is_left_cyclic(el(P4, "v2^-1 v1 v2"), el(P4, "v1"))


def test_cyclic_type_examples(P4):
    g = el(P4, "v1^2 v2 v3 v4")
    one = Element.identity(P4)
    assert is_cyclic_conjugation(g, one) and is_left_cyclic(g, one) and is_right_cyclic(g, one)
    assert is_left_cyclic(g, el(P4, "v1"))


def test_left_cyclic_matches_simulation(P4):
    letters = _letters(P4)
    gs = [g for g in ball(P4, 4) if not g.is_identity() and is_cyclically_reduced(g)]
    us = ball(P4, 3)
    for g in gs[::3]:
        for u in us:
            assert is_left_cyclic(g, u) == _left_cycling_sim(g, u, letters)


def test_single_cycling_is_not_both_types(P4):
    for g in ball(P4, 4):
        if g.is_identity() or not is_cyclically_reduced(g):
            continue
        for x in _letters(P4):
            if is_cyclic_conjugation(g, x):
                assert is_left_cyclic(g, x) != is_right_cyclic(g, x)


def test_decompose_trivial_cases(P4):
    g = el(P4, "v1 v2")
    u = el(P4, "v4^-1")
    d = decompose_conjugation(el(P4, "v1"), el(P4, "v3 v4"))
    assert d.u1 == el(P4, "v3 v4") and d.u2.is_identity() and d.u3.is_identity()
    d = decompose_conjugation(g, el(P4, "v1"))
    assert d.u1.is_identity() and d.u2 == el(P4, "v1") and d.u3.is_identity()
    assert d.conjugated_core == el(P4, "v2 v1")
    d = decompose_conjugation(g, u)
    assert d.u1 * d.u2 * d.u3 == u


def test_decompose_random_p5(P5, rng):
    from raagtools.experiments import random_element

    for _ in range(300):
        g = random_element(P5, rng, rng.randint(1, 4))
        if not is_cyclically_reduced(g):
            continue
        u = random_element(P5, rng, rng.randint(0, 4))
        d = decompose_conjugation(g, u)
        assert d.u1 * d.u2 * d.u3 == u and is_geodesic([d.u1, d.u2, d.u3])
        assert disjointly_commutes(d.u1, g) and disjointly_commutes(d.u1, d.u2)
        assert is_cyclic_conjugation(g, d.u2)
        gu = conjugate(g, u)
        assert len(gu) == len(g) + 2 * len(d.u3)
        assert d.u3 == gcd_right(gu, gu.inverse())
        left, right = split_cyclic(g, d.u2)
        assert left * right == d.u2 and disjointly_commutes(left, right)
        assert is_left_cyclic(g, left) and is_right_cyclic(g, right)


def test_u2_maximality(P4, rng):
    letters = _letters(P4)
    gs = [g for g in ball(P4, 3) if not g.is_identity() and is_cyclically_reduced(g)]
    us = ball(P4, 4)
    for _ in range(300):
        g, u = rng.choice(gs), rng.choice(us)
        d = decompose_conjugation(g, u)
        rest = d.u1.inverse() * u
        for x in letters:
            ext = d.u2 * x
            if len(ext) == len(d.u2) + 1 and is_prefix(ext, rest):
                assert not is_cyclic_conjugation(g, ext)


def test_conjugacy(P4, rng):
    elems = ball(P4, 4)
    for _ in range(200):
        a, c = rng.choice(elems), rng.choice(elems)
        b = conjugate(a, c)
        assert are_conjugate(a, b)
        w = conjugating_element(a, b)
        assert conjugate(a, w) == b
    assert not are_conjugate(el(P4, "v1"), el(P4, "v2"))
    assert conjugating_element(el(P4, "v1"), el(P4, "v2")) is None


def test_orbit_is_cyclic_conjugates(P4):
    conj = ball(P4, 3)
    for h in ball(P4, 3):
        if h.is_identity() or not is_cyclically_reduced(h):
            continue
        orbit = set(cyclic_orbit(h))
        for k in orbit:
            assert len(k) == len(h) and k.support() == h.support()
        brute = {conjugate(h, c) for c in conj}
        brute = {k for k in brute if len(k) == len(h)}
        assert brute <= orbit
        for x, k in cyclings(h):
            assert k == conjugate(h, x)
