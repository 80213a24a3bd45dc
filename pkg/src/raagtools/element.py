"""Letters, words and group elements held in canonical reduced form."""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .errors import GraphMismatchError, UnknownVertexError, WordSyntaxError
from .graph import DefiningGraph


class Letter(NamedTuple):
    vertex: str
    sign: int

    def __str__(self):
        return self.vertex if self.sign > 0 else f"{self.vertex}^-1"

    def inverse(self) -> Letter:
        return Letter(self.vertex, -self.sign)


def encode_letter(graph: DefiningGraph, letter) -> int:
    vertex, sign = letter
    if sign not in (1, -1):
        raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
    return 2 * graph.vertex_index(vertex) + (0 if sign > 0 else 1)


def decode_letter(graph: DefiningGraph, code: int) -> Letter:
    return Letter(graph.vertices[code >> 1], -1 if code & 1 else 1)


_TOKEN = re.compile(r"^([^\s^]+)(?:\^(-?\d+))?$")


def parse_codes(graph: DefiningGraph, text: str) -> list:
    """Parse word syntax into letter codes.

    Tokens are ``name`` or ``name^-1``; ``name^k`` for any integer ``k`` is
    accepted as shorthand for ``|k|`` repeated letters.  ``1`` or an empty
    string denotes the empty word.
    """
    codes = []
    tokens = text.split()
    if tokens == ["1"]:
        return codes
    for pos, tok in enumerate(tokens):
        m = _TOKEN.match(tok)
        if not m:
            raise WordSyntaxError(f"malformed token {tok!r}", pos)
        name, exp = m.group(1), m.group(2)
        if name not in graph.index:
            raise WordSyntaxError(f"unknown vertex {name!r}", pos)
        k = int(exp) if exp is not None else 1
        x = 2 * graph.index[name] + (1 if k < 0 else 0)
        codes.extend([x] * abs(k))
    return codes


def format_codes(graph: DefiningGraph, codes: Sequence[int]) -> str:
    names = graph.vertices
    return " ".join(
        names[x >> 1] + ("^-1" if x & 1 else "") for x in codes
    )


def invert_codes(codes: Sequence[int]) -> list:
    return [x ^ 1 for x in reversed(codes)]


class Element:
    """An element of the right-angled Artin group on ``graph``.

    ``word`` is the lexicographically least reduced word for the element, as
    a tuple of letter codes (see :mod:`raagtools._pykernels`).
    """

    __slots__ = ("graph", "word", "_supp")

    def __init__(self, graph: DefiningGraph, word: tuple, _canonical: bool = False):
        self.graph = graph
        self.word = tuple(word) if _canonical else graph.kernels.canon(word, graph.noncomm)
        self._supp = None

    @classmethod
    def parse(cls, graph: DefiningGraph, text: str) -> Element:
        return cls(graph, parse_codes(graph, text))

    @classmethod
    def from_letters(cls, graph: DefiningGraph, letters: Iterable) -> Element:
        return cls(graph, [encode_letter(graph, x) for x in letters])

    @classmethod
    def identity(cls, graph: DefiningGraph) -> Element:
        return cls(graph, (), True)

    @classmethod
    def generator(cls, graph: DefiningGraph, v: str, sign: int = 1) -> Element:
        return cls(graph, (encode_letter(graph, (v, sign)),), True)

    def _same(self, other: Element):
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.graph is not self.graph and other.graph != self.graph:
            raise GraphMismatchError("elements live over different graphs")

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.word == other.word and self.graph == other.graph

    def __hash__(self):
        return hash(self.word)

    def __lt__(self, other: Element):
        return (len(self.word), self.word) < (len(other.word), other.word)

    def __mul__(self, other: Element) -> Element:
        self._same(other)
        if not other.word:
            return self
        if not self.word:
            return other
        return Element(self.graph, self.word + other.word)

    def inverse(self) -> Element:
        g = self.graph
        return Element(g, g.kernels.normal_form(invert_codes(self.word), g.noncomm), True)

    __invert__ = inverse

    def __pow__(self, n: int) -> Element:
        if n < 0:
            return self.inverse() ** (-n)
        result = Element.identity(self.graph)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __len__(self):
        return len(self.word)

    @property
    def length(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return not self.word

    @property
    def support_mask(self) -> int:
        if self._supp is None:
            m = 0
            for x in self.word:
                m |= 1 << (x >> 1)
            self._supp = m
        return self._supp

    def support(self) -> frozenset:
        return self.graph.names_of(self.support_mask)

    def letters(self) -> list:
        return [decode_letter(self.graph, x) for x in self.word]

    def starting_codes(self) -> list:
        g = self.graph
        return g.kernels.starting_letters(self.word, g.noncomm, g.full)

    def ending_codes(self) -> list:
        g = self.graph
        return g.kernels.ending_letters(self.word, g.noncomm, g.full)

    def starting_letters(self) -> frozenset:
        return frozenset(decode_letter(self.graph, x) for x in self.starting_codes())

    def ending_letters(self) -> frozenset:
        return frozenset(decode_letter(self.graph, x) for x in self.ending_codes())

    def __str__(self):
        return format_codes(self.graph, self.word) if self.word else "1"

    def __repr__(self):
        return f"Element({str(self)!r})"


def reduce(graph: DefiningGraph, word) -> Element:
    """The element represented by ``word``: a string in word syntax, a
    sequence of :class:`Letter` or a sequence of letter codes."""
    if isinstance(word, str):
        return Element.parse(graph, word)
    word = list(word)
    if word and not isinstance(word[0], int):
        return Element.from_letters(graph, word)
    for x in word:
        if not 0 <= x < 2 * len(graph.vertices):
            raise UnknownVertexError(x)
    return Element(graph, word)


def multiply(a: Element, b: Element) -> Element:
    return a * b


def invert(a: Element) -> Element:
    return a.inverse()


def power(a: Element, n: int) -> Element:
    return a ** n


def word_length(a: Element) -> int:
    return len(a.word)


def support(a: Element) -> frozenset:
    return a.support()


def starting_letters(a: Element) -> frozenset:
    return a.starting_letters()


def ending_letters(a: Element) -> frozenset:
    return a.ending_letters()


def masks_disjointly_commute(graph: DefiningGraph, m1: int, m2: int) -> bool:
    return graph.co_star_mask(m1) & m2 == 0


def disjointly_commutes(a: Element, b: Element) -> bool:
    a._same(b)
    return masks_disjointly_commute(a.graph, a.support_mask, b.support_mask)


def product_length(graph: DefiningGraph, *words) -> int:
    """Word length of the product of the given code sequences."""
    joined = []
    for w in words:
        joined.extend(w)
    return graph.kernels.reduced_length(joined, graph.noncomm)


def is_geodesic(parts: Sequence[Element]) -> bool:
    if not parts:
        raise ValueError("is_geodesic needs at least one element")
    g = parts[0].graph
    for p in parts[1:]:
        parts[0]._same(p)
    return product_length(g, *(p.word for p in parts)) == sum(len(p.word) for p in parts)


@lru_cache(maxsize=64)
def ball_by_length(graph: DefiningGraph, radius: int) -> tuple:
    """Canonical words of all elements of word length ``<= radius``, grouped
    into spheres: ``result[k]`` is a tuple of the words of length ``k``."""
    k = graph.kernels
    nc = graph.noncomm
    letters = range(2 * len(graph.vertices))
    spheres = [((),)]
    for n in range(radius):
        nxt = set()
        for w in spheres[-1]:
            ends = set(k.ending_letters(w, nc, graph.full)) if w else set()
            for x in letters:
                if x ^ 1 in ends:
                    continue
                nxt.add(k.normal_form(w + (x,), nc))
        spheres.append(tuple(sorted(nxt)))
    return tuple(spheres)


def ball(graph: DefiningGraph, radius: int) -> list:
    """All elements of word length ``<= radius``, ordered by length then word."""
    out = []
    for sphere in ball_by_length(graph, radius):
        out.extend(Element(graph, w, True) for w in sphere)
    return out
