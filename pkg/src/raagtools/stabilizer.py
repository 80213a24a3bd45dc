"""Quasi-stabilizers for the action on (A(Gamma), d_*) and acylindricity
constants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .conjugation import conjugate, cyclic_reduce
from .element import Element, ball_by_length, invert_codes
from .errors import InvariantViolation, PreconditionError
from .quasiroot import _root_candidates, extract_quasi_root
from .star import is_loxodromic, star_length, star_length_at_most


@dataclass(frozen=True)
class QuasiStabilizerResult:
    generator: Optional[Element]
    k: int
    members: frozenset
    certified: bool
    hausdorff_witness: Optional[tuple] = None  # (n, epsilon, d_*(y, x g^(eps n)))


def _effective_v(graph) -> int:
    return max(4, len(graph.vertices))


def acylindricity_constants(graph, r: int, space: str = "star"):
    """``(R, N)`` for the action on the star metric space or on the
    extension graph."""
    if r < 1:
        raise PreconditionError("r must be positive")
    nv = len(graph.vertices)
    comp_connected = nv >= 2 and graph.complement().is_connected()
    if space == "star":
        if not comp_connected:
            raise PreconditionError("needs at least two vertices and a connected complement graph")
        V = _effective_v(graph)
        return (2 * V + 7) * r + 8, 2 * (V - 2) * (r - 1) - 1
    if space == "egraph":
        failures = []
        if nv < 4:
            failures.append("needs at least four vertices")
        if not graph.is_connected():
            failures.append("graph is disconnected")
        if not comp_connected:
            failures.append("complement graph is disconnected")
        if failures:
            raise PreconditionError(failures)
        D = graph.diameter()
        return D * (2 * nv + 7) * (r + 1) + 10 * D, 2 * (nv - 2) * r - 1
    raise ValueError("space must be 'star' or 'egraph'")


def in_xi(x: Element, y: Element, r: int, g: Element) -> bool:
    """``d_*(xg, x) <= r`` and ``d_*(yg, y) <= r``."""
    return (star_length_at_most(conjugate(g, x.inverse()), r)
            and star_length_at_most(conjugate(g, y.inverse()), r))


class _ConjugateFilter:
    """Cheap necessary test for ``||z g z^-1||_* <= r``.

    Write ``zg = A C`` and ``z = B C`` with ``C`` the common suffix.  Then
    ``z g z^-1 = A B^-1`` is geodesic, so its star length is at least
    ``||B||_* >= ||z||_* - ||C||``, and ``||C||`` follows from word lengths.
    """

    def __init__(self, z: Element):
        self.graph = z.graph
        self.z = z.word
        self.zinv = tuple(invert_codes(z.word))
        self.n = len(z.word)
        self.s = star_length(z)

    def may_pass(self, g: tuple, r: int) -> bool:
        k = self.graph.kernels
        nc = self.graph.noncomm
        zg = k.reduce_word(self.z + g, nc)
        h = k.reduced_length(zg + list(self.zinv), nc)
        common = (len(zg) + self.n - h) // 2
        return self.s - common <= r


def xi_brute_force(x: Element, y: Element, r: int, cap: int) -> frozenset:
    """Members of the quasi-stabilizer with word length at most ``cap``
    (a subset of the full, infinite-radius set)."""
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    gr = x.graph
    fx, fy = _ConjugateFilter(x), _ConjugateFilter(y)
    out = set()
    for sphere in ball_by_length(gr, cap):
        for w in sphere:
            if not (fx.may_pass(w, r) and fy.may_pass(w, r)):
                continue
            g = Element(gr, w, True)
            if in_xi(x, y, r, g):
                out.add(g)
    return frozenset(out)


def primitive_root(g: Element):
    """``(q, d)`` with ``g = q^d`` and ``q`` primitive."""
    if g.is_identity():
        raise PreconditionError("the identity has no primitive root")
    cr = cyclic_reduce(g)
    h = cr.core
    n = len(h.word)
    for d in range(n, 1, -1):
        if n % d:
            continue
        for q in sorted(_root_candidates(h, n // d)):
            if q ** d == h:
                return conjugate(q, cr.conjugator), d
    return g, 1


def xi_structure(x: Element, y: Element, r: int, seed: Element) -> QuasiStabilizerResult:
    """The quasi-stabilizer of a far-apart pair ``x, y`` containing the
    nontrivial element ``seed``: all powers ``g^j`` with ``|j| <= k`` of a
    loxodromic ``g``."""
    gr = x.graph
    R, N = acylindricity_constants(gr, r, "star")
    w = y * x.inverse()
    failures = []
    if star_length_at_most(w, R - 1):
        failures.append(f"d_*(x, y) < R = {R}")
    if seed.is_identity() or not in_xi(x, y, r, seed):
        failures.append("seed is not a nontrivial member")
    if failures:
        raise PreconditionError(failures)
    s = conjugate(seed, x.inverse())  # member of xi(1, w; r)
    g0, _ = primitive_root(s)
    if not in_xi(Element.identity(gr), w, r, g0):
        raise InvariantViolation("primitive root left the quasi-stabilizer")
    if not is_loxodromic(g0):
        raise InvariantViolation("primitive root is not loxodromic")
    V = _effective_v(gr)
    ceiling = (V - 2) * (r - 1)
    one = Element.identity(gr)
    k = 1
    power = g0
    while True:
        nxt = power * g0
        if not in_xi(one, w, r, nxt):
            break
        k += 1
        power = nxt
        if k >= ceiling:
            break
    if k > ceiling - 1:
        raise InvariantViolation(f"g0^{k} stays in the quasi-stabilizer past the ceiling")
    g = conjugate(g0, x)
    members = {one}
    p = one
    for _ in range(k):
        p = p * g
        members.add(p)
        members.add(p.inverse())
    if 2 * k + 1 > N:
        raise InvariantViolation(f"2k + 1 = {2 * k + 1} exceeds N = {N}")
    # y = b a x (g^eps)^n with ||ba||_* <= 2r + 3
    d = extract_quasi_root(g0, w, r, R, side="right")
    n = d.n
    shifted = x * (g ** (d.epsilon * n))
    dist = star_length(y * shifted.inverse())
    if dist > 2 * r + 3:
        raise InvariantViolation(f"orbit distance {dist} exceeds 2r + 3")
    return QuasiStabilizerResult(g, k, frozenset(members), True, (n, d.epsilon, dist))


def orbit_hausdorff_bound(x: Element, y: Element, g: Element, bound: int, nmax: int) -> bool:
    """Whether the ``<g>``-orbits of ``x`` and ``y`` are within Hausdorff
    distance ``bound``, looking for a witness shift ``|j| <= nmax``.

    By right invariance ``d_*(x g^n, y g^m) = ||x g^(n-m) y^-1||_*`` depends
    only on ``n - m``, so the Hausdorff distance of the full orbits is the
    minimum over shifts ``j`` of ``||x g^j y^-1||_*``."""
    yinv = y.inverse()
    for j in sorted(range(-nmax, nmax + 1), key=lambda t: (abs(t), t)):
        if star_length_at_most(x * (g ** j) * yinv, bound):
            return True
    return False
