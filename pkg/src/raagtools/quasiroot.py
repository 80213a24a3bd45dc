"""Quasi-root decompositions, primitivity and quasi-root extraction."""

from __future__ import annotations

from dataclasses import dataclass, field

from .conjugation import (
    conjugate, cyclic_reduce, decompose_conjugation, is_cyclically_reduced,
    is_left_cyclic, is_right_cyclic, are_conjugate,
)
from .element import Element
from .errors import InvariantViolation, PreconditionError
from .powers import power_prefix_normalize
from .star import classify, star_length


@dataclass(frozen=True)
class QuasiRootDecomposition:
    """``a (root^epsilon)^n b`` (side ``left``) or ``b (root^epsilon)^n a``
    (side ``right``), geodesic."""
    a: Element
    root: Element
    epsilon: int
    n: int
    b: Element
    side: str = "left"

    def signed_root(self) -> Element:
        return self.root if self.epsilon > 0 else self.root.inverse()

    def power(self) -> Element:
        return self.signed_root() ** self.n

    def compose(self) -> Element:
        if self.side == "left":
            return self.a * self.power() * self.b
        return self.b * self.power() * self.a

    def is_geodesic(self) -> bool:
        total = len(self.a.word) + self.n * len(self.root.word) + len(self.b.word)
        return len(self.compose().word) == total

    def extracted_conjugates(self):
        """``(a g a^-1, b^-1 g b)`` for the left form and the mirrored pair
        ``(a^-1 g a, b g b^-1)`` for the right form."""
        g = self.signed_root()
        if self.side == "left":
            return conjugate(g, self.a.inverse()), conjugate(g, self.b)
        return conjugate(g, self.a), conjugate(g, self.b.inverse())


@dataclass
class UniquenessVerdict:
    holds: bool
    failures: list = field(default_factory=list)


def _root_candidates(h: Element, length: int):
    """All prefixes of ``h`` of the given word length."""
    gr = h.graph
    k = gr.kernels
    frontier = {((), h.word)}
    for _ in range(length):
        nxt = set()
        for pre, rest in frontier:
            for x in k.starting_letters(rest, gr.noncomm, gr.full):
                r = list(rest)
                r.remove(x)
                nxt.add((k.normal_form(pre + (x,), gr.noncomm), tuple(r)))
        frontier = {(p, k.normal_form(r, gr.noncomm)) for p, r in nxt}
    return {Element(gr, p, True) for p, _ in frontier}


def is_primitive(g: Element) -> bool:
    if g.is_identity():
        raise PreconditionError("the identity is not primitive or imprimitive")
    h = cyclic_reduce(g).core
    n = len(h.word)
    for d in range(2, n + 1):
        if n % d:
            continue
        for q in _root_candidates(h, n // d):
            if q ** d == h:
                return False
    return True


def _check(cond, message):
    if not cond:
        raise InvariantViolation(message)


def extract_quasi_root(g: Element, w: Element, r: int, R: int, side: str = "left") -> QuasiRootDecomposition:
    """Quasi-root decomposition of ``w`` from a short element ``g`` whose
    conjugate by ``w`` (``w^-1 g w`` for the left side, ``w g w^-1`` for the
    right side) is also short."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    g._same(w)
    failures = []
    if g.is_identity():
        failures.append("g is trivial")
    if w.is_identity():
        failures.append("w is trivial")
    if not failures:
        if star_length(g) > r:
            failures.append(f"||g||_* > r = {r}")
        moved = conjugate(g, w) if side == "left" else conjugate(g, w.inverse())
        if star_length(moved) > r:
            failures.append(f"star length of the conjugate of g by w exceeds r = {r}")
        if star_length(w) < R:
            failures.append(f"||w||_* < R = {R}")
    if R < 3 * r + 7:
        failures.append("R < 3r + 7")
    if failures:
        raise PreconditionError(failures)
    if side == "left":
        return _extract_left(g, w, r)
    d = _extract_left(g, w.inverse(), r)
    out = QuasiRootDecomposition(d.a.inverse(), d.root, -d.epsilon, d.n, d.b.inverse(), "right")
    _check(out.compose() == w, "mirrored decomposition does not reconstruct w")
    return out


def _extract_left(g: Element, w: Element, r: int) -> QuasiRootDecomposition:
    cr = cyclic_reduce(g)
    a = cr.conjugator.inverse()  # g = a g1 a^-1
    g1 = cr.core
    dec = decompose_conjugation(g1, a.inverse() * w)
    w1, w2, w3 = dec.parts
    # the cyclic conjugator is long and of a single type
    _check(star_length(w2) >= 3, "cyclic part has star length below 3")
    left = is_left_cyclic(g1, w2)
    right = is_right_cyclic(g1, w2)
    _check(left != right, "cyclic part is not of exactly one type")
    # the root is strongly non-split, so nothing disjointly commutes with it
    _check(len(g1.support()) >= 2 and classify(g1).kind == "strongly_non_split",
           "reduced root is not strongly non-split")
    _check(w1.is_identity(), "commuting part is nontrivial")
    _check(2 * star_length(a) <= r + 2, "||a||_* exceeds r/2 + 1")
    _check(2 * star_length(w3) <= r + 2, "||w3||_* exceeds r/2 + 1")
    eps = 1 if left else -1
    base = g1 if left else g1.inverse()
    n, d = power_prefix_normalize(base, w2, len(w2.word))
    _check(star_length(d) <= star_length(g1) + 1, "power remainder is too long")
    _check(n >= 2, "fewer than two root factors")
    b = d * w3
    out = QuasiRootDecomposition(a, g1, eps, n, b, "left")
    _check(out.compose() == w and out.is_geodesic(), "decomposition is not a geodesic form of w")
    _check(2 * star_length(b) <= 3 * r + 4, "||b||_* exceeds 3r/2 + 2")
    _check(star_length(a * b) <= 2 * r + 3, "||ab||_* exceeds 2r + 3")
    _check(len(g.word) == 2 * len(a.word) + len(g1.word), "g = a g1 a^-1 is not geodesic")
    return out


def check_quasi_root_uniqueness(h: Element, d1: QuasiRootDecomposition,
                                d2: QuasiRootDecomposition, A: int, B: int, r: int) -> UniquenessVerdict:
    """Two primitive quasi-root decompositions of a long ``h`` with bounded
    parts must extract the same conjugates of their roots."""
    nv = len(h.graph.vertices)
    failures = []
    for name, d in (("first", d1), ("second", d2)):
        if d.side != "left":
            failures.append(f"{name} decomposition is not of left form")
            continue
        if d.compose() != h or not d.is_geodesic():
            failures.append(f"{name} decomposition is not a geodesic form of h")
        if d.root.is_identity() or not is_primitive(d.signed_root()):
            failures.append(f"{name} root is not primitive")
        if d.n >= 2 and not is_cyclically_reduced(d.root):
            failures.append(f"{name} root is not cyclically reduced")
        if star_length(d.a) > A or star_length(d.b) > B or star_length(d.root) > r:
            failures.append(f"{name} decomposition exceeds the (A, B, r) bounds")
    if star_length(h) < 2 * A + 2 * B + (2 * nv + 3) * r + 2:
        failures.append("||h||_* is below 2A + 2B + (2|V| + 3) r + 2")
    if failures:
        raise PreconditionError(failures)
    out = []
    (x1, y1), (x2, y2) = d1.extracted_conjugates(), d2.extracted_conjugates()
    if x1 != x2:
        out.append("a g a^-1 differs")
    if y1 != y2:
        out.append("b^-1 g b differs")
    if not are_conjugate(d1.signed_root(), d2.signed_root()):
        out.append("roots are not conjugate")
    return UniquenessVerdict(not out, out)
