"""Cyclic reduction, cyclic conjugations and conjugacy of elements."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .element import Element, masks_disjointly_commute, product_length
from .errors import BudgetExceeded, InvariantViolation, PreconditionError
from .lattice import (
    gcd_left, gcd_right, is_prefix, max_prefix_disjointly_commuting,
)


@dataclass(frozen=True)
class CyclicReduction:
    """``g = conjugator^-1 * core * conjugator`` with the product geodesic."""
    conjugator: Element
    core: Element


@dataclass(frozen=True)
class ConjugationDecomposition:
    u1: Element
    u2: Element
    u3: Element
    conjugated_core: Element

    @property
    def parts(self):
        return self.u1, self.u2, self.u3


def conjugate(g: Element, u: Element) -> Element:
    """``g^u = u^-1 g u``."""
    g._same(u)
    return Element(g.graph, u.inverse().word + g.word + u.word)


def cyclic_reduce(g: Element) -> CyclicReduction:
    u = gcd_right(g, g.inverse())
    return CyclicReduction(u, conjugate(g, u.inverse()))


def is_cyclically_reduced(g: Element) -> bool:
    return gcd_right(g, g.inverse()).is_identity()


def _require_cyclically_reduced(g: Element):
    if not is_cyclically_reduced(g):
        raise PreconditionError(f"{g} is not cyclically reduced")


def is_cyclic_conjugation(g: Element, u: Element) -> bool:
    _require_cyclically_reduced(g)
    if u.support_mask & ~g.support_mask:
        return False
    return product_length(g.graph, u.inverse().word, g.word, u.word) == len(g.word)


def _left_cyclic(g: Element, u: Element) -> bool:
    # u is left cyclic iff u is a prefix of some power of g, and the exponent
    # ||u|| always suffices
    if u.is_identity():
        return True
    if u.support_mask & ~g.support_mask:
        return False
    return is_prefix(u, g ** len(u.word))


def is_left_cyclic(g: Element, u: Element) -> bool:
    _require_cyclically_reduced(g)
    return _left_cyclic(g, u)


def is_right_cyclic(g: Element, u: Element) -> bool:
    _require_cyclically_reduced(g)
    return _left_cyclic(g.inverse(), u)


def split_cyclic(g: Element, u2: Element):
    """Split a cyclic conjugator ``u2`` of ``g`` as ``u2 = left * right``,
    geodesic, with ``left`` and ``right`` disjointly commuting, ``g^left``
    left cyclic and ``g^right`` right cyclic."""
    _require_cyclically_reduced(g)
    n = len(u2.word)
    left = gcd_left(u2, g ** n) if n else u2
    right = left.inverse() * u2
    if not (len(left.word) + len(right.word) == n
            and masks_disjointly_commute(g.graph, left.support_mask, right.support_mask)
            and _left_cyclic(g.inverse(), right)):
        raise InvariantViolation(f"cyclic conjugator {u2} of {g} does not split")
    return left, right


def decompose_conjugation(g: Element, u: Element) -> ConjugationDecomposition:
    """The unique geodesic decomposition ``u = u1 u2 u3`` with ``u1`` disjointly
    commuting with ``g``, ``g^u2`` a cyclic conjugation and
    ``g^u = u3^-1 g^u2 u3`` geodesic."""
    _require_cyclically_reduced(g)
    gu = conjugate(g, u)
    u3 = gcd_right(gu, gu.inverse())
    head = u * u3.inverse()
    u1 = max_prefix_disjointly_commuting(head, g)
    u2 = u1.inverse() * head
    core = conjugate(g, u2)
    n = len(u.word)
    problems = []
    if len(u1.word) + len(u2.word) + len(u3.word) != n:
        problems.append("u1 u2 u3 is not geodesic")
    if len(core.word) != len(g.word) or u2.support_mask & ~g.support_mask:
        problems.append("g^u2 is not a cyclic conjugation")
    if len(gu.word) != len(g.word) + 2 * len(u3.word):
        problems.append("g^u is not u3^-1 g^u2 u3 geodesically")
    if problems:
        raise InvariantViolation(f"decomposition of {u} against {g}: " + "; ".join(problems))
    return ConjugationDecomposition(u1, u2, u3, core)


def cyclings(h: Element):
    """Single cyclings of ``h``: yields ``(x, h^x)`` for each letter ``x``
    (as a one-letter Element) with ``x`` a prefix or ``x^-1`` a suffix of
    ``h``, in letter order."""
    gr = h.graph
    cands = set(h.starting_codes())
    cands.update(x ^ 1 for x in h.ending_codes())
    for x in sorted(cands):
        xe = Element(gr, (x,), True)
        yield xe, conjugate(h, xe)


def cyclic_orbit(h: Element, limit: Optional[int] = None) -> dict:
    """Breadth-first orbit of a cyclically reduced ``h`` under cyclings.

    Maps every cyclic conjugate ``h^c`` to the conjugator ``c`` found first."""
    seen = {h: Element.identity(h.graph)}
    queue = deque([h])
    while queue:
        cur = queue.popleft()
        c = seen[cur]
        for x, nxt in cyclings(cur):
            if nxt not in seen:
                seen[nxt] = c * x
                queue.append(nxt)
                if limit is not None and len(seen) > limit:
                    raise BudgetExceeded(f"cycling orbit exceeds {limit} elements")
    return seen


def conjugating_element(a: Element, b: Element) -> Optional[Element]:
    """Some ``w`` with ``w^-1 a w = b``, or None if ``a`` and ``b`` are not
    conjugate."""
    a._same(b)
    ra, rb = cyclic_reduce(a), cyclic_reduce(b)
    ha, hb = ra.core, rb.core
    if len(ha.word) != len(hb.word) or ha.support_mask != hb.support_mask:
        return None
    if ha == hb:
        c = Element.identity(a.graph)
    else:
        c = _search(ha, hb)
        if c is None:
            return None
    w = ra.conjugator.inverse() * c * rb.conjugator
    if conjugate(a, w) != b:
        raise InvariantViolation(f"conjugator {w} does not conjugate {a} to {b}")
    return w


def _search(ha: Element, hb: Element) -> Optional[Element]:
    seen = {ha: Element.identity(ha.graph)}
    queue = deque([ha])
    while queue:
        cur = queue.popleft()
        c = seen[cur]
        for x, nxt in cyclings(cur):
            if nxt not in seen:
                seen[nxt] = c * x
                if nxt == hb:
                    return seen[nxt]
                queue.append(nxt)
    return None


def are_conjugate(a: Element, b: Element) -> bool:
    return conjugating_element(a, b) is not None
