"""Finite simplicial defining graphs."""

from __future__ import annotations

import hashlib
import math
from importlib import resources
from itertools import combinations
from pathlib import Path
from typing import Iterable

from . import _kernels
from .errors import GraphFormatError, UnknownVertexError


class DefiningGraph:
    """An immutable simplicial graph with a fixed vertex order.

    The vertex order given at construction is the total order used for
    letters and canonical words everywhere downstream.
    """

    __slots__ = (
        "vertices", "edges", "index", "adj", "noncomm", "star_masks",
        "full", "kernels", "_hash", "_diam",
    )

    def __init__(self, vertices: Iterable[str], edges: Iterable[Iterable[str]] = ()):
        vertices = tuple(vertices)
        index = {}
        for i, v in enumerate(vertices):
            if v in index:
                raise GraphFormatError(f"duplicate vertex {v!r}")
            index[v] = i
        n = len(vertices)
        adj = [0] * n
        edge_set = set()
        for e in edges:
            pair = tuple(e)
            if len(pair) != 2:
                raise GraphFormatError(f"edge must have two endpoints: {pair!r}")
            a, b = pair
            for x in (a, b):
                if x not in index:
                    raise GraphFormatError(f"edge endpoint {x!r} is not a vertex")
            if a == b:
                raise GraphFormatError(f"loop at {a!r}")
            edge_set.add(frozenset((a, b)))
            adj[index[a]] |= 1 << index[b]
            adj[index[b]] |= 1 << index[a]
        full = (1 << n) - 1
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", frozenset(edge_set))
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "adj", tuple(adj))
        # vertices that do not commute with v, v included
        object.__setattr__(self, "noncomm", tuple(full & ~adj[i] for i in range(n)))
        object.__setattr__(self, "star_masks", tuple(adj[i] | (1 << i) for i in range(n)))
        object.__setattr__(self, "full", full)
        object.__setattr__(self, "kernels", _kernels.for_graph(n))
        object.__setattr__(self, "_hash", hash((vertices, self.edges)))
        object.__setattr__(self, "_diam", None)

    def __setattr__(self, name, value):
        raise AttributeError("DefiningGraph is immutable")

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, DefiningGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"DefiningGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def __len__(self):
        return len(self.vertices)

    # masks and names

    def vertex_index(self, v: str) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def mask_of(self, names: Iterable[str]) -> int:
        m = 0
        for v in names:
            m |= 1 << self.vertex_index(v)
        return m

    def names_of(self, mask: int) -> frozenset:
        return frozenset(self.vertices[i] for i in range(len(self.vertices)) if (mask >> i) & 1)

    def has_edge(self, a: str, b: str) -> bool:
        return (self.adj[self.vertex_index(a)] >> self.vertex_index(b)) & 1 == 1

    def commutes(self, a: str, b: str) -> bool:
        """Whether the generators ``a`` and ``b`` commute (equal or adjacent)."""
        return a == b or self.has_edge(a, b)

    # graph operations

    def complement(self) -> DefiningGraph:
        edges = [(a, b) for a, b in combinations(self.vertices, 2)
                 if frozenset((a, b)) not in self.edges]
        return DefiningGraph(self.vertices, edges)

    def star(self, v: str) -> frozenset:
        return self.names_of(self.star_masks[self.vertex_index(v)])

    def link(self, v: str) -> frozenset:
        return self.names_of(self.adj[self.vertex_index(v)])

    def star_mask_of_set(self, mask: int) -> int:
        out = 0
        i = 0
        while mask:
            if mask & 1:
                out |= self.star_masks[i]
            mask >>= 1
            i += 1
        return out

    def star_of_set(self, vs: Iterable[str]) -> frozenset:
        return self.names_of(self.star_mask_of_set(self.mask_of(vs)))

    def co_star_mask(self, mask: int) -> int:
        """Star of a vertex set in the complement graph, as a mask."""
        out = 0
        i = 0
        while mask:
            if mask & 1:
                out |= self.noncomm[i]
            mask >>= 1
            i += 1
        return out

    def induced_subgraph(self, vs: Iterable[str]) -> DefiningGraph:
        keep = self.mask_of(vs)
        verts = [v for i, v in enumerate(self.vertices) if (keep >> i) & 1]
        edges = [tuple(e) for e in self.edges if all((keep >> self.index[x]) & 1 for x in e)]
        return DefiningGraph(verts, edges)

    def _distances_from(self, i: int, within: int) -> dict:
        dist = {i: 0}
        frontier = 1 << i
        seen = frontier
        d = 0
        while frontier:
            d += 1
            nxt = 0
            j = 0
            f = frontier
            while f:
                if f & 1:
                    nxt |= self.adj[j]
                f >>= 1
                j += 1
            nxt &= within & ~seen
            seen |= nxt
            frontier = nxt
            j = 0
            while nxt:
                if nxt & 1:
                    dist[j] = d
                nxt >>= 1
                j += 1
        return dist

    def is_connected(self) -> bool:
        n = len(self.vertices)
        return n == 0 or len(self._distances_from(0, self.full)) == n

    def diameter(self):
        """Graph diameter; ``math.inf`` when disconnected."""
        if self._diam is None:
            n = len(self.vertices)
            best = 0
            for i in range(n):
                dist = self._distances_from(i, self.full)
                if len(dist) < n:
                    best = math.inf
                    break
                best = max(best, max(dist.values()))
            object.__setattr__(self, "_diam", best)
        return self._diam

    def is_join(self) -> bool:
        return len(self.vertices) >= 2 and not self.complement().is_connected()

    def components_of(self, mask: int, complement: bool = False) -> list:
        """Connected components (as masks) of the subgraph induced on ``mask``,
        in this graph or in its complement."""
        comps = []
        rest = mask
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                nxt = 0
                j = 0
                f = frontier
                while f:
                    if f & 1:
                        nxt |= (self.noncomm[j] & ~(1 << j)) if complement else self.adj[j]
                    f >>= 1
                    j += 1
                nxt &= rest & ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            rest &= ~comp
        return comps

    # text format

    def to_text(self) -> str:
        lines = ["vertices: " + " ".join(self.vertices)]
        order = self.index
        pairs = [tuple(sorted(e, key=order.__getitem__)) for e in self.edges]
        pairs.sort(key=lambda p: (order[p[0]], order[p[1]]))
        lines += [f"edge: {a} {b}" for a, b in pairs]
        return "\n".join(lines) + "\n"

    def fingerprint(self) -> str:
        return hashlib.sha256(self.to_text().encode()).hexdigest()[:16]

    @classmethod
    def parse(cls, text: str) -> DefiningGraph:
        vertices = None
        edges = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, rest = line.partition(":")
            key = key.strip()
            names = rest.split()
            if key == "vertices":
                if vertices is not None:
                    raise GraphFormatError(f"line {lineno}: second vertices line")
                vertices = names
            elif key == "edge":
                if vertices is None:
                    raise GraphFormatError(f"line {lineno}: edge before vertices line")
                if len(names) != 2:
                    raise GraphFormatError(f"line {lineno}: edge needs two endpoints")
                edges.append(names)
            else:
                raise GraphFormatError(f"line {lineno}: unexpected {key!r}")
        if vertices is None:
            raise GraphFormatError("missing vertices line")
        return cls(vertices, edges)

    @classmethod
    def load(cls, path) -> DefiningGraph:
        return cls.parse(Path(path).read_text(encoding="utf-8"))


def bundled_names() -> list:
    files = resources.files("raagtools") / "graphs"
    return sorted(p.name[:-4] for p in files.iterdir() if p.name.endswith(".txt"))


def bundled(name: str) -> DefiningGraph:
    """One of the graphs shipped with the package (``Pbar4``, ``Pbar5``,
    ``Pbar6``, ``C5``)."""
    path = resources.files("raagtools") / "graphs" / f"{name}.txt"
    if not path.is_file():
        raise GraphFormatError(f"no bundled graph named {name!r}")
    return DefiningGraph.parse(path.read_text(encoding="utf-8"))


def path_complement(vertices) -> DefiningGraph:
    """Complement of the path through ``vertices`` in the given order."""
    vs = list(vertices)
    edges = [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 2, len(vs))]
    return DefiningGraph(vs, edges)


def complement(g: DefiningGraph) -> DefiningGraph:
    return g.complement()


def star(g: DefiningGraph, v: str) -> frozenset:
    return g.star(v)


def link(g: DefiningGraph, v: str) -> frozenset:
    return g.link(v)


def star_of_set(g: DefiningGraph, vs) -> frozenset:
    return g.star_of_set(vs)


def induced_subgraph(g: DefiningGraph, vs) -> DefiningGraph:
    return g.induced_subgraph(vs)


def is_connected(g: DefiningGraph) -> bool:
    return g.is_connected()


def diameter(g: DefiningGraph):
    return g.diameter()


def is_join(g: DefiningGraph) -> bool:
    return g.is_join()
