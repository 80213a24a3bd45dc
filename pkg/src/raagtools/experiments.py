"""Seeded instance generators, the worked-example checks and the invariant
suite behind ``raag paper-examples`` and ``raag verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import graph as graphs
from .conjugation import cyclic_reduce, is_cyclically_reduced
from .element import Element, ball_by_length, is_geodesic
from .errors import PreconditionError
from .lattice import is_prefix
from .powers import check_star_growth, power_prefix_decompose, power_prefix_normalize
from .quasiroot import is_primitive
from .stabilizer import acylindricity_constants
from .star import classify, is_loxodromic, is_star_word, star_length


@dataclass
class CheckRecord:
    check: str
    instance: str
    expected: object
    actual: object
    provenance: str  # "worked-example", "direct" or "brute-force"

    @property
    def status(self) -> str:
        return "pass" if self.expected == self.actual else "fail"

    def as_dict(self) -> dict:
        return {"check": self.check, "instance": self.instance,
                "expected": _plain(self.expected), "actual": _plain(self.actual),
                "status": self.status, "provenance": self.provenance}


def _plain(x):
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    return str(x)


def random_element(graph, rng: random.Random, length: int) -> Element:
    """Random reduced element of exactly the given length (uniform random
    letter extension, rejecting cancellations)."""
    g = Element.identity(graph)
    letters = [Element.generator(graph, v, s) for v in graph.vertices for s in (1, -1)]
    while len(g) < length:
        h = g * rng.choice(letters)
        if len(h) > len(g):
            g = h
    return g


def random_loxodromic(graph, rng: random.Random, lo: int, hi: int) -> Element:
    """Random cyclically reduced, primitive, strongly non-split element."""
    while True:
        g = random_element(graph, rng, rng.randint(lo, hi))
        if is_cyclically_reduced(g) and is_loxodromic(g) and is_primitive(g):
            return g


@dataclass(frozen=True)
class QuasiRootInstance:
    g: Element  # the short element a g1 a^-1
    w: Element  # a g1^n b
    r: int
    R: int
    a: Element
    g1: Element
    n: int
    b: Element


def quasi_root_instances(graph, count: int, seed: int):
    """Instances ``w = a g1^n b`` with ``g = a g1 a^-1`` short, ``w^-1 g w =
    b^-1 g1 b`` short and ``||w||_*`` past ``3r + 7``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g1 = random_loxodromic(graph, rng, 3, 5)
        a = random_element(graph, rng, rng.randint(0, 2))
        b = random_element(graph, rng, rng.randint(0, 2))
        g = a * g1 * a.inverse()
        if len(g) != 2 * len(a) + len(g1):
            continue
        r = max(star_length(g), star_length(b.inverse() * g1 * b))
        R = 3 * r + 7
        n = 1
        while True:
            w = a * g1 ** n * b
            if len(w) != len(a) + n * len(g1) + len(b):
                break
            if star_length(w) >= R:
                out.append(QuasiRootInstance(g, w, r, R, a, g1, n, b))
                break
            n += 1
    return out


@dataclass(frozen=True)
class StabilizerInstance:
    x: Element
    y: Element
    r: int
    seed: Element  # nontrivial member of xi(x, y; r)
    g1: Element
    n: int
    a: Element
    b: Element


def stabilizer_instances(graph, count: int, seed: int, r: int = 2):
    """Instances ``y = b g1^n a x`` with ``d_*(x, y) >= R(r)`` and the seed
    ``x^-1 a^-1 g1 a x`` in the quasi-stabilizer."""
    rng = random.Random(seed)
    R, _ = acylindricity_constants(graph, r, "star")
    out = []
    while len(out) < count:
        g1 = random_loxodromic(graph, rng, 3, 5)
        if star_length(g1) > r:
            continue
        a = random_element(graph, rng, rng.randint(0, 2))
        b = random_element(graph, rng, rng.randint(0, 2))
        if star_length(a.inverse() * g1 * a) > r or star_length(b * g1 * b.inverse()) > r:
            continue
        x = random_element(graph, rng, rng.randint(0, 2))
        step = g1 ** 8
        n, core = 8, step
        while star_length(b * core * a) < R:
            n, core = n + 8, core * step
        y = b * core * a * x
        s = x.inverse() * a.inverse() * g1 * a * x
        out.append(StabilizerInstance(x, y, r, s, g1, n, a, b))
    return out


# worked examples


def _p(graph, text):
    return Element.parse(graph, text)


def worked_example_checks():
    """Every worked example, as check records."""
    P4, P5, P6 = graphs.bundled("Pbar4"), graphs.bundled("Pbar5"), graphs.bundled("Pbar6")
    W = "worked-example"
    rec = []

    X = ["v1", "v2", "v3", "v4"]
    sub = P6.complement().induced_subgraph(X)
    rec.append(CheckRecord("graph.complement_induced_path", "Pbar6 X={v1..v4}",
                           [["v1", "v2"], ["v2", "v3"], ["v3", "v4"]],
                           sorted(sorted(e) for e in sub.edges), W))
    rec.append(CheckRecord("graph.diameter", "Pbar6 complement[v1..v4]", 3, sub.diameter(), W))

    lhs = _p(P5, "v2 v3 v4") * _p(P5, "v2 v3 v4")
    rhs = _p(P5, "v2 v3 v2") * _p(P5, "v4 v3 v4")
    rec.append(CheckRecord("element.equal", "Pbar5 v2v3v4.v2v3v4 = v2v3v2.v4v3v4", True, lhs == rhs, W))

    parts = [_p(P4, "v1^2 v2 v3"), _p(P4, "v1^2 v2"), _p(P4, "v1")]
    rec.append(CheckRecord("element.is_geodesic", "Pbar4 [v1^2v2v3, v1^2v2, v1]", True, is_geodesic(parts), W))

    g = _p(P4, "v1^2 v2 v3 v4")
    u = _p(P4, "v1^2 v2 v3 v1^2 v2 v1")
    rec.append(CheckRecord("lattice.is_prefix", "Pbar4 u <= g^3", True, is_prefix(u, g ** 3), W))
    rec.append(CheckRecord("lattice.is_prefix", "Pbar4 u <= g^2", False, is_prefix(u, g ** 2), W))
    rec.append(CheckRecord("lattice.is_prefix", "Pbar4 g <= u", False, is_prefix(g, u), W))
    rec.append(CheckRecord("conjugation.is_cyclically_reduced", "Pbar4 v1^2v2v3v4", True,
                           is_cyclically_reduced(g), W))
    dec = power_prefix_decompose(g, u, 3)
    rec.append(CheckRecord("powers.power_prefix_decompose.m", "Pbar4 g=v1^2v2v3v4", 3, dec.m, W))
    diam = P4.complement().induced_subgraph(g.support()).diameter()
    rec.append(CheckRecord("powers.m_sharpness", "Pbar4 m = diam = |V|-1", [3, 3, 3],
                           [dec.m, diam, len(P4.vertices) - 1], W))
    rec.append(CheckRecord("powers.prefix_star_bound", "Pbar4 ||u||_* <= ||g||_* + 1", True,
                           star_length(u) <= star_length(g) + 1, W))
    k, rest = power_prefix_normalize(g, u, 3)
    rec.append(CheckRecord("powers.power_prefix_normalize", "Pbar4 u", True,
                           k == 0 and rest == u and star_length(rest) <= star_length(g) + 1, W))

    rec.append(CheckRecord("star.is_star_word", "Pbar5 v1v3v5", True, is_star_word(_p(P5, "v1 v3 v5")), W))
    h = _p(P5, "v1 v3 v5 v2 v4")
    rec.append(CheckRecord("star.is_star_word", "Pbar5 v1v3v5v2v4", False, is_star_word(h), W))
    rec.append(CheckRecord("star.star_length", "Pbar5 v1v3v5v2v4", 2, star_length(h), W))
    g6 = _p(P6, "v1 v2 v3 v4")
    rec.append(CheckRecord("star.star_length", "Pbar6 v1v2v3v4", 2, star_length(g6), W))
    rec.append(CheckRecord("star.star_length", "Pbar6 (v1v2v3v4)^3", 2, star_length(g6 ** 3), W))
    for a_t, b_t, bound in (("v1 v2", "v3 v4", "upper"), ("v2 v3 v4", "v2 v3 v4", "lower")):
        a, b = _p(P5, a_t), _p(P5, b_t)
        want = star_length(a) + star_length(b) - (0 if bound == "upper" else 2)
        rec.append(CheckRecord(f"star.product_bound_{bound}", f"Pbar5 ({a_t}).({b_t})",
                               want, star_length(a * b), W))
    diam6 = P6.complement().induced_subgraph(g6.support()).diameter()
    rec.append(CheckRecord("powers.star_growth_sharpness", "Pbar6 3 = |V|-3 = diam", [2, 3, 3],
                           [star_length(g6 ** 3), len(P6.vertices) - 3, diam6], W))
    rec.append(CheckRecord("powers.check_star_growth", "Pbar6 v1v2v3v4 up to m=8", True,
                           check_star_growth(g6, 8).ok, W))
    bad = []
    for sphere in ball_by_length(P4, 5):
        for word in sphere:
            e = Element(P4, word, True)
            if (e.is_identity() or not is_cyclically_reduced(e) or classify(e).kind == "split"
                    or star_length(e) != 2):
                continue
            if star_length(e ** 2) < 3:
                bad.append(str(e))
    rec.append(CheckRecord("powers.square_star_length", "Pbar4 all qualifying g, |g| <= 5",
                           [], bad, W))
    R, N = acylindricity_constants(P5, 2, "star")
    rec.append(CheckRecord("stabilizer.acylindricity_constants", "Pbar5 star r=2", [42, 5], [R, N], W))
    return rec


def invariant_checks(budget: int = 3, samples: int = 50, seed: int = 0):
    """A smaller, seeded sweep of the structural invariants."""
    from .conjugation import decompose_conjugation
    from .egraph import check_quasi_isometry, sample_conjugators
    from .lattice import gcd_left, lcm_left
    from .quasiroot import extract_quasi_root

    D = "brute-force"
    rng = random.Random(seed)
    P4, P5 = graphs.bundled("Pbar4"), graphs.bundled("Pbar5")
    rec = []
    elems = [Element(P4, w, True) for s in ball_by_length(P4, budget) for w in s]
    bad = 0
    for _ in range(samples * 20):
        a, b = rng.choice(elems), rng.choice(elems)
        g = gcd_left(a, b)
        if not (is_prefix(g, a) and is_prefix(g, b)):
            bad += 1
        res = lcm_left(a, b)
        if res.exists and not (is_prefix(a, res.value) and is_prefix(b, res.value)
                               and res.value.support() == a.support() | b.support()):
            bad += 1
    rec.append(CheckRecord("lattice.gcd_lcm", f"Pbar4 random pairs |.| <= {budget}", 0, bad, D))
    bad = 0
    for g in elems:
        if g.is_identity():
            continue
        cr = cyclic_reduce(g)
        u = cr.conjugator
        if not (is_cyclically_reduced(cr.core) and cr.core == u * g * u.inverse()):
            bad += 1
    rec.append(CheckRecord("conjugation.cyclic_reduce", f"Pbar4 |g| <= {budget}", 0, bad, D))
    bad = 0
    crs = [g for g in elems if not g.is_identity() and is_cyclically_reduced(g)]
    for _ in range(samples * 20):
        g, u = rng.choice(crs), rng.choice(elems)
        d = decompose_conjugation(g, u)
        if d.u1 * d.u2 * d.u3 != u:
            bad += 1
    rec.append(CheckRecord("conjugation.decompose", f"Pbar4 random (g, u) |.| <= {budget}", 0, bad, D))
    bad = 0
    for _ in range(samples * 4):
        a = random_element(P5, rng, rng.randint(1, 6))
        b = random_element(P5, rng, rng.randint(1, 6))
        if len(a * b) != len(a) + len(b):
            continue
        s = star_length(a * b)
        if not star_length(a) + star_length(b) - 2 <= s <= star_length(a) + star_length(b):
            bad += 1
    rec.append(CheckRecord("star.product_bounds", "Pbar5 random geodesic pairs", 0, bad, D))
    bad = 0
    for inst in quasi_root_instances(P5, max(1, samples // 10), seed):
        d = extract_quasi_root(inst.g, inst.w, inst.r, inst.R)
        if d.compose() != inst.w:
            bad += 1
    rec.append(CheckRecord("quasiroot.extract", "Pbar5 seeded instances", 0, bad, D))
    rep = check_quasi_isometry(P5, 2, sample_conjugators(P5, 2, samples, seed))
    rec.append(CheckRecord("egraph.lower_bound", "Pbar5 L=2 samples", 0, len(rep.lower_violations), D))
    return rec
