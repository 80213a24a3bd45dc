"""Star words, star length and the splitness classification.

Star length is computed by a layered search over remainders.  Starting from
``g``, one step strips the largest prefix supported in some star ``St(v)``.
Writing ``G = P r`` for the remainders ``r`` reached after ``k`` steps, every
prefix ``p`` of ``G`` with ``||p||_* <= k`` is a prefix of one of the ``P``
(induction on ``k``: if ``p = p' w`` with ``w`` a star word and ``p' <= P'``,
then the lcm of ``p`` and ``P'`` is ``P' t`` with ``t`` a suffix of ``w``,
hence ``t`` is a prefix of the star-supported part stripped from ``P'^-1 G``).
So the first layer containing the empty remainder gives ``||G||_*`` and
remainders dominated in the suffix order can be discarded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .element import Element, invert_codes
from .errors import PreconditionError
from .graph import DefiningGraph


@dataclass(frozen=True)
class StarDecomposition:
    """A geodesic factorization into star words; ``factors`` holds pairs
    ``(factor, v)`` with the factor supported in ``St(v)``."""
    factors: tuple

    def __len__(self):
        return len(self.factors)

    def product(self, graph: DefiningGraph) -> Element:
        out = Element.identity(graph)
        for f, _ in self.factors:
            out = out * f
        return out


@dataclass(frozen=True)
class SplitClass:
    kind: str  # "split", "non_split" or "strongly_non_split"
    partition: Optional[tuple] = None  # complement components when split
    witness: Optional[str] = None  # a vertex disjointly commuting with g

    def __str__(self):
        return self.kind


def is_star_word(g: Element) -> bool:
    s = g.support_mask
    return any(s & ~m == 0 for m in g.graph.star_masks) or s == 0


def star_witness(g: Element) -> Optional[str]:
    s = g.support_mask
    for i, m in enumerate(g.graph.star_masks):
        if s & ~m == 0:
            return g.graph.vertices[i]
    return None


def _suffix_of(graph, r1, r2) -> bool:
    """``r1 <=_R r2`` for reduced words."""
    return graph.kernels.is_prefix(invert_codes(r1), invert_codes(r2), graph.noncomm)


def _expand(graph, layer):
    """One search step.  ``layer`` maps canonical remainders to themselves;
    returns ``{child: (parent, v, stripped_prefix)}`` after pruning."""
    k = graph.kernels
    nc = graph.noncomm
    stars = graph.star_masks
    children = {}
    for r in layer:
        starts = 0
        for x in k.starting_letters(r, nc, graph.full):
            starts |= 1 << (x >> 1)
        for v, m in enumerate(stars):
            if not m & starts:
                continue
            pre, rest = k.split_prefix(r, m, nc)
            key = k.normal_form(rest, nc)
            if key not in children:
                children[key] = (r, v, pre)
    return _prune(graph, children)


def _prune(graph, children):
    keys = sorted(children, key=len)
    kept = []
    for key in keys:
        if any(len(q) < len(key) and _suffix_of(graph, q, key) for q in kept):
            continue
        kept.append(key)
    return {q: children[q] for q in kept}


def _search(graph: DefiningGraph, word: tuple, max_depth=None):
    """Yield successive layers ``(depth, {remainder: parent_info})``."""
    layer = {word: None}
    depth = 0
    while True:
        yield depth, layer
        if () in layer or (max_depth is not None and depth >= max_depth):
            return
        layer = _expand(graph, layer)
        depth += 1


@lru_cache(maxsize=1 << 16)
def _star_length(graph: DefiningGraph, word: tuple) -> int:
    for depth, layer in _search(graph, word):
        if () in layer:
            return depth
    raise AssertionError("unreachable")


def star_length(g: Element) -> int:
    return _star_length(g.graph, g.word)


def star_length_at_most(g: Element, bound: int) -> bool:
    """Whether ``||g||_* <= bound``, searching no deeper than ``bound``."""
    if bound < 0:
        return False
    for depth, layer in _search(g.graph, g.word, bound):
        if () in layer:
            return True
    return False


def star_decompose(g: Element) -> StarDecomposition:
    graph = g.graph
    history = []
    for depth, layer in _search(graph, g.word):
        history.append(layer)
        if () in layer:
            break
    factors = []
    key = ()
    for layer in reversed(history[1:]):
        parent, v, pre = layer[key]
        factors.append((Element(graph, pre), graph.vertices[v]))
        key = parent
    factors.reverse()
    return StarDecomposition(tuple(factors))


def star_distance(a: Element, b: Element) -> int:
    """``d_*(a, b) = ||a b^-1||_*``."""
    return star_length(a * b.inverse())


def star_profile(g: Element, n_max: int) -> list:
    """``[||g^0||_*, ||g^1||_*, ..., ||g^n_max||_*]`` for cyclically reduced
    ``g``, from a single search on ``g^n_max``."""
    graph = g.graph
    k = graph.kernels
    nc = graph.noncomm
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    powers = [(g ** j).word for j in range(n_max + 1)]
    top = powers[n_max]
    prof = [0] * (n_max + 1)
    done = 0
    for depth, layer in _search(graph, top):
        # g^n <= P with top = P r  iff  r is a suffix of g^(n_max - n)
        while done < n_max and any(
            _suffix_of(graph, r, powers[n_max - done - 1]) for r in layer
        ):
            done += 1
            prof[done] = depth
        if done == n_max:
            break
    return prof


def translation_length_bounds(g: Element, n_max: int):
    """Certified ``(lower, upper)`` bounds on the stable star length of a
    cyclically reduced ``g`` from the powers ``g^1..g^n_max``."""
    from .conjugation import is_cyclically_reduced

    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if not is_cyclically_reduced(g):
        raise PreconditionError(f"{g} is not cyclically reduced")
    prof = star_profile(g, n_max)
    upper = min(Fraction(prof[n], n) for n in range(1, n_max + 1))
    lower = max([Fraction(prof[n] - 2, n) for n in range(1, n_max + 1)] + [Fraction(0)])
    return lower, upper


def classify(g: Element) -> SplitClass:
    if g.is_identity():
        raise PreconditionError("the identity has no split class")
    graph = g.graph
    s = g.support_mask
    comps = graph.components_of(s, complement=True)
    if len(comps) > 1:
        return SplitClass("split", partition=tuple(graph.names_of(c) for c in comps))
    outside = graph.full & ~graph.co_star_mask(s)
    if outside:
        low = (outside & -outside).bit_length() - 1
        return SplitClass("non_split", witness=graph.vertices[low])
    return SplitClass("strongly_non_split")


def _require_loxodromic_setting(graph: DefiningGraph):
    if len(graph.vertices) < 2 or not graph.complement().is_connected():
        raise PreconditionError("needs at least two vertices and a connected complement graph")


def is_loxodromic(g: Element) -> bool:
    from .conjugation import cyclic_reduce

    _require_loxodromic_setting(g.graph)
    h = cyclic_reduce(g).core
    if bin(h.support_mask).count("1") < 2:
        return False
    return classify(h).kind == "strongly_non_split"
