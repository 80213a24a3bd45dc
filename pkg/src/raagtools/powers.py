"""Prefixes of powers of cyclically reduced elements."""

from __future__ import annotations

from dataclasses import dataclass, field

from .conjugation import is_cyclically_reduced
from .element import Element, masks_disjointly_commute
from .errors import InvariantViolation, PreconditionError
from .lattice import gcd_left, is_prefix
from .star import classify, star_length, star_profile


@dataclass(frozen=True)
class PrefixLadder:
    """``g = a[k] b[k]`` geodesic and ``a[0] ... a[k] = gcd(u, g^(k+1))``
    (lists are 0-based: ``a[0]`` is the first rung)."""
    a: tuple
    b: tuple


@dataclass(frozen=True)
class PowerPrefixDecomposition:
    """``parts = (g_m, ..., g_1, g_0)`` with ``g = g_m ... g_0`` geodesic."""
    parts: tuple
    m: int
    ladder: PrefixLadder
    complement: Element  # u' with g^m = u u' geodesic

    def part(self, k: int) -> Element:
        return self.parts[self.m - k]


@dataclass
class StarGrowthReport:
    star_lengths: dict = field(default_factory=dict)  # m -> ||g^m||_*
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _require_cr(g: Element):
    if not is_cyclically_reduced(g):
        raise PreconditionError(f"{g} is not cyclically reduced")


def _non_split(g: Element) -> bool:
    return not g.is_identity() and classify(g).kind != "split"


def prefix_ladder(g: Element, u: Element, m: int) -> PrefixLadder:
    _require_cr(g)
    if m < 1:
        raise ValueError("m must be at least 1")
    a, b = [], []
    prev = Element.identity(g.graph)
    gk = Element.identity(g.graph)
    for _ in range(m):
        gk = gk * g
        cur = gcd_left(u, gk)
        ak = prev.inverse() * cur
        a.append(ak)
        b.append(ak.inverse() * g)
        prev = cur
    for k in range(m):
        if len(a[k].word) + len(b[k].word) != len(g.word):
            raise InvariantViolation(f"rung {k + 1} does not split g geodesically")
    return PrefixLadder(tuple(a), tuple(b))


def minimal_power(g: Element, u: Element, m: int):
    """Least ``k <= m`` with ``u <= g^k``, or None."""
    gk = Element.identity(g.graph)
    for k in range(m + 1):
        if is_prefix(u, gk):
            return k
        gk = gk * g
    return None


def power_prefix_decompose(g: Element, u: Element, m: int) -> PowerPrefixDecomposition:
    """Decompose a prefix ``u`` of ``g^m`` that is not a prefix of a lower
    power and does not start with ``g``.  ``m`` is an upper bound; the least
    admissible power is used."""
    g._same(u)
    failures = []
    if not is_cyclically_reduced(g):
        failures.append("g is not cyclically reduced")
    if not _non_split(g):
        failures.append("g is split")
    if is_prefix(g, u):
        failures.append("g is a prefix of u")
    mm = minimal_power(g, u, m)
    if mm is None:
        failures.append(f"u is not a prefix of g^{m}")
    elif mm < 2:
        failures.append(f"u is a prefix of g^{max(mm, 1)}, need a least power of at least 2")
    if failures:
        raise PreconditionError(failures)
    m = mm
    ladder = prefix_ladder(g, u, m)
    a = list(ladder.a) + [Element.identity(g.graph)]
    parts = [a[k].inverse() * a[k - 1] for k in range(m, 0, -1)] + [ladder.b[0]]
    comp = Element.identity(g.graph)
    for bk in ladder.b:
        comp = comp * bk
    dec = PowerPrefixDecomposition(tuple(parts), m, ladder, comp)
    _validate(g, u, dec)
    return dec


def _validate(g: Element, u: Element, dec: PowerPrefixDecomposition):
    gr = g.graph
    m = dec.m
    problems = []
    prod = Element.identity(gr)
    for p in dec.parts:
        if p.is_identity():
            problems.append("a part is trivial")
        prod = prod * p
    if prod != g or sum(len(p.word) for p in dec.parts) != len(g.word):
        problems.append("parts do not multiply geodesically to g")
    for i in range(m + 1):
        for j in range(i + 2, m + 1):
            if not masks_disjointly_commute(gr, dec.part(i).support_mask, dec.part(j).support_mask):
                problems.append(f"g_{i} and g_{j} do not disjointly commute")
    if u * dec.complement != g ** m or len(u.word) + len(dec.complement.word) != m * len(g.word):
        problems.append("u u' is not a geodesic form of g^m")
    if problems:
        raise InvariantViolation("; ".join(problems))


def power_prefix_normalize(g: Element, u: Element, m: int):
    """``(k, a)`` with ``u = g^k a`` geodesic and ``k`` maximal."""
    _require_cr(g)
    if not _non_split(g):
        raise PreconditionError("g is split")
    if not is_prefix(u, g ** m):
        raise PreconditionError(f"u is not a prefix of g^{m}")
    k = 0
    rest = u
    while k < m and is_prefix(g, rest):
        rest = g.inverse() * rest
        k += 1
    return k, rest


def check_star_growth(g: Element, mmax: int) -> StarGrowthReport:
    """Star lengths of ``g^2 .. g^mmax`` for a cyclically reduced, non-split
    ``g`` of star length 2, with the growth guarantees checked."""
    _require_cr(g)
    if not _non_split(g):
        raise PreconditionError("g is split")
    if star_length(g) != 2:
        raise PreconditionError("g must have star length 2")
    gr = g.graph
    nv = len(gr.vertices)
    diam = gr.complement().induced_subgraph(g.support()).diameter()
    prof = star_profile(g, max(mmax, 2))
    rep = StarGrowthReport()
    for m in range(2, mmax + 1):
        s = prof[m]
        rep.star_lengths[m] = s
        if s == 2 and (m > nv - 3 or m > diam):
            rep.violations.append(f"||g^{m}||_* = 2 with |V| = {nv}, diam = {diam}")
    if nv <= 4 and prof[2] < 3:
        rep.violations.append("||g^2||_* < 3 on a graph with at most 4 vertices")
    return rep
