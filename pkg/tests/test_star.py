import random
import threading
from fractions import Fraction

import pytest

from raagtools.conjugation import cyclic_reduce, is_cyclically_reduced
from raagtools.element import Element, ball, ball_by_length, is_geodesic
from raagtools.errors import PreconditionError
from raagtools.lattice import is_prefix
from raagtools.star import (
    classify, is_loxodromic, is_star_word, star_decompose, star_distance,
    star_length, star_length_at_most, star_profile, translation_length_bounds,
)
from raagtools.experiments import random_element

from conftest import el


def test_star_word_examples(P5):
    assert is_star_word(Element.identity(P5))
    assert is_star_word(el(P5, "v1 v3 v5"))
    assert not is_star_word(el(P5, "v1 v3 v5 v2 v4"))


def test_star_length_examples(P5, P6):
    assert star_length(Element.identity(P5)) == 0
    assert star_length(el(P5, "v1 v3 v5 v2 v4")) == 2
    g = el(P6, "v1 v2 v3 v4")
    assert star_length(g) == 2
    assert star_length(g ** 3) == 2


def test_product_bound_sharpness(P5):
    a, b = el(P5, "v1 v2"), el(P5, "v3 v4")
    assert star_length(a * b) == star_length(a) + star_length(b)
    c = el(P5, "v2 v3 v4")
    assert star_length(c * c) == 2 * star_length(c) - 2


def test_star_length_matches_oracle_p5(P5, O5):
    for sphere in ball_by_length(P5, 5):
        for w in sphere:
            g = Element(P5, w, True)
            assert star_length(g) == O5.star_length(O5.from_codes(w)), str(g)


def test_decomposition_witnesses_length(P5, rng):
    for _ in range(200):
        g = random_element(P5, rng, rng.randint(0, 14))
        d = star_decompose(g)
        assert len(d) == star_length(g)
        assert d.product(P5) == g
        assert is_geodesic([f for f, _ in d.factors] or [Element.identity(P5)])
        for f, v in d.factors:
            assert f.support() <= P5.star(v)


def test_at_most_agrees(P5, rng):
    for _ in range(100):
        g = random_element(P5, rng, rng.randint(0, 20))
        s = star_length(g)
        assert star_length_at_most(g, s) and (s == 0 or not star_length_at_most(g, s - 1))


def test_product_bounds_random(P5, rng):
    for _ in range(300):
        a = random_element(P5, rng, rng.randint(0, 8))
        b = random_element(P5, rng, rng.randint(0, 8))
        if not is_geodesic([a, b]):
            continue
        s = star_length(a * b)
        assert star_length(a) + star_length(b) - 2 <= s <= star_length(a) + star_length(b)


def test_prefix_monotone_and_powers(P5, rng):
    for _ in range(100):
        g = random_element(P5, rng, rng.randint(1, 10))
        k = rng.randint(0, len(g))
        pre = Element(P5, g.word[:k])
        assert star_length(pre) <= star_length(g)
        if is_cyclically_reduced(g):
            prof = star_profile(g, 6)
            assert prof == sorted(prof)
            assert prof == [star_length(g ** n) for n in range(7)]


def test_strong_growth(P5, rng):
    seen = 0
    for _ in range(400):
        g = random_element(P5, rng, rng.randint(3, 10))
        if not is_cyclically_reduced(g) or star_length(g) < 3:
            continue
        seen += 1
        prof = star_profile(g, 8)
        assert all(prof[n] >= n + 2 for n in range(1, 9))
        assert classify(g).kind == "strongly_non_split"
    assert seen > 5


def test_short_prefix_stays_in_first_factor(P5, rng):
    seen = 0
    for _ in range(3000):
        g1 = random_element(P5, rng, rng.randint(2, 9))
        g2 = random_element(P5, rng, rng.randint(0, 4))
        if not is_geodesic([g1, g2]):
            continue
        k = rng.randint(0, len(g1) + len(g2))
        h = Element(P5, (g1 * g2).word[:k])
        if star_length(g1) >= star_length(h) + 2:
            seen += 1
            assert is_prefix(h, g1)
    assert seen > 20


def test_classify(P4, P6, P5):
    assert classify(el(P4, "v1 v3")).kind == "split"
    assert classify(el(P6, "v1 v2 v3 v4")).kind == "strongly_non_split"
    c = classify(el(P5, "v1"))
    assert c.kind == "non_split" and c.witness is not None
    with pytest.raises(PreconditionError):
        classify(Element.identity(P5))


def test_loxodromic(P4, P6, P5, rng):
    assert not is_loxodromic(Element.identity(P6))
    assert is_loxodromic(el(P6, "v1 v2 v3 v4"))
    assert not is_loxodromic(el(P4, "v1 v3"))
    for _ in range(150):
        g = random_element(P5, rng, rng.randint(1, 6))
        big = max(star_profile(cyclic_reduce(g).core, 6))
        assert is_loxodromic(g) == (big >= 3)


def test_translation_bounds(P6, P5):
    g = el(P6, "v1 v2 v3 v4")
    widths = []
    for n in range(1, 13):
        lo, hi = translation_length_bounds(g, n)
        assert isinstance(lo, Fraction) and lo <= hi
        widths.append(hi - lo)
    assert widths == sorted(widths, reverse=True)
    star = el(P5, "v1 v3")
    assert translation_length_bounds(star, 1) == (0, 1)
    assert translation_length_bounds(star, 10)[1] <= 1
    with pytest.raises(PreconditionError):
        translation_length_bounds(el(P5, "v2^-1 v1 v2"), 4)


def test_star_distance(P5):
    a, b = el(P5, "v1 v2 v3"), el(P5, "v4")
    assert star_distance(a, b) == star_length(a * b.inverse())
    assert star_distance(a, a) == 0


def test_concurrent_calls_agree(P5):
    words = [random_element(P5, random.Random(i), 18) for i in range(30)]
    want = [star_length(w) for w in words]
    out = [None] * 4

    def run(k):
        out[k] = [star_length(w) for w in words]

    threads = [threading.Thread(target=run, args=(k,)) for k in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(o == want for o in out)
