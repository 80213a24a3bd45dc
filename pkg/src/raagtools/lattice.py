"""Prefix and suffix orders, gcd/lcm, and constrained maximal prefixes."""

from __future__ import annotations

from typing import NamedTuple, Optional

from .element import Element, invert_codes, masks_disjointly_commute


class LcmResult(NamedTuple):
    exists: bool
    value: Optional[Element]

    def __bool__(self):
        return self.exists


def _elem(graph, codes) -> Element:
    return Element(graph, graph.kernels.normal_form(codes, graph.noncomm), True)


def is_prefix(a: Element, g: Element) -> bool:
    a._same(g)
    return g.graph.kernels.is_prefix(a.word, g.word, g.graph.noncomm)


def is_suffix(a: Element, g: Element) -> bool:
    a._same(g)
    return g.graph.kernels.is_prefix(invert_codes(a.word), invert_codes(g.word), g.graph.noncomm)


def gcd_left_split(a: Element, b: Element):
    """Return ``(g0, a', b')`` with ``a = g0 a'``, ``b = g0 b'`` geodesic and
    ``g0`` the gcd of ``a`` and ``b`` for the prefix order."""
    a._same(b)
    gr = a.graph
    g0, ra, rb = gr.kernels.gcd_left(a.word, b.word, gr.noncomm, gr.full)
    return _elem(gr, g0), _elem(gr, ra), _elem(gr, rb)


def gcd_left(a: Element, b: Element) -> Element:
    return gcd_left_split(a, b)[0]


def gcd_right_split(a: Element, b: Element):
    """Return ``(a', b', g0)`` with ``a = a' g0``, ``b = b' g0`` geodesic."""
    g0, ra, rb = gcd_left_split(a.inverse(), b.inverse())
    return ra.inverse(), rb.inverse(), g0.inverse()


def gcd_right(a: Element, b: Element) -> Element:
    return gcd_right_split(a, b)[2]


def lcm_left(a: Element, b: Element) -> LcmResult:
    """Least common right multiple for the prefix order."""
    g0, ra, rb = gcd_left_split(a, b)
    if not masks_disjointly_commute(a.graph, ra.support_mask, rb.support_mask):
        return LcmResult(False, None)
    return LcmResult(True, g0 * ra * rb)


def lcm_right(a: Element, b: Element) -> LcmResult:
    """Least common left multiple for the suffix order."""
    ra, rb, g0 = gcd_right_split(a, b)
    if not masks_disjointly_commute(a.graph, ra.support_mask, rb.support_mask):
        return LcmResult(False, None)
    return LcmResult(True, rb * ra * g0)


def max_prefix_in_mask(g: Element, allowed: int) -> Element:
    gr = g.graph
    pre, _ = gr.kernels.split_prefix(g.word, allowed, gr.noncomm)
    return _elem(gr, pre)


def split_prefix_in_mask(g: Element, allowed: int):
    """``(p, p^-1 g)`` with ``p`` the largest prefix supported in ``allowed``."""
    gr = g.graph
    pre, rest = gr.kernels.split_prefix(g.word, allowed, gr.noncomm)
    return _elem(gr, pre), _elem(gr, rest)


def split_suffix_in_mask(g: Element, allowed: int):
    """``(g s^-1, s)`` with ``s`` the largest suffix supported in ``allowed``."""
    gr = g.graph
    rest, suf = gr.kernels.split_suffix(g.word, allowed, gr.noncomm)
    return _elem(gr, rest), _elem(gr, suf)


def max_prefix_supported_in(g: Element, vertices) -> Element:
    return max_prefix_in_mask(g, g.graph.mask_of(vertices))


def max_suffix_supported_in(g: Element, vertices) -> Element:
    return split_suffix_in_mask(g, g.graph.mask_of(vertices))[1]


def disjoint_mask(h: Element) -> int:
    """Vertices that commute with, and are outside, the support of ``h``."""
    gr = h.graph
    return gr.full & ~gr.co_star_mask(h.support_mask)


def max_prefix_disjointly_commuting(g: Element, h: Element) -> Element:
    g._same(h)
    return max_prefix_in_mask(g, disjoint_mask(h))
