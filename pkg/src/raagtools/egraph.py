"""Finite truncations of the extension graph and the quasi-isometry checks."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .conjugation import conjugate, is_cyclically_reduced
from .element import Element, ball_by_length, invert_codes
from .errors import BudgetExceeded, InvariantViolation, PreconditionError
from .star import is_loxodromic, star_length, translation_length_bounds

DEFAULT_VERTEX_CEILING = 200_000


@dataclass(frozen=True, eq=False)
class EVertex:
    """The conjugate ``base^conjugator``; identity is decided by ``key``."""
    base: str
    conjugator: Element
    key: Element

    def __eq__(self, other):
        return isinstance(other, EVertex) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __str__(self):
        return str(self.key)


def evertex(graph, v: str, g: Element) -> EVertex:
    return EVertex(v, g, conjugate(Element.generator(graph, v), g))


def action(ev: EVertex, g: Element) -> EVertex:
    """Right action ``(v^h) g = v^(hg)``."""
    h = ev.conjugator * g
    return EVertex(ev.base, h, conjugate(ev.key, g))


@dataclass
class EBall:
    graph: object
    radius: int
    vertices: list  # sorted by key
    index: dict  # key -> position
    adjacency: list  # position -> sorted list of positions

    @property
    def edges(self):
        return {(i, j) for i, nb in enumerate(self.adjacency) for j in nb if i < j}

    def __contains__(self, ev: EVertex):
        return ev.key in self.index

    def position(self, ev: EVertex) -> int:
        try:
            return self.index[ev.key]
        except KeyError:
            raise PreconditionError(f"{ev} is not in the ball") from None


def _check_setting(graph, strict: bool):
    failures = []
    if len(graph.vertices) < 4:
        failures.append("needs at least four vertices")
    if not graph.is_connected():
        failures.append("graph is disconnected")
    if not graph.complement().is_connected():
        failures.append("complement graph is disconnected")
    if failures and strict:
        raise PreconditionError(failures)
    return failures


def _commute(graph, a: tuple, b: tuple) -> bool:
    word = list(a) + list(b) + invert_codes(a) + invert_codes(b)
    return graph.kernels.reduced_length(word, graph.noncomm) == 0


def build_ball(graph, L: int, ceiling: int = DEFAULT_VERTEX_CEILING, strict: bool = True) -> EBall:
    """Vertices ``v^g`` with ``||g|| <= L`` and the commutation edges among
    them."""
    _check_setting(graph, strict)
    found = {}
    for sphere in ball_by_length(graph, L):
        for w in sphere:
            g = Element(graph, w, True)
            for v in graph.vertices:
                ev = evertex(graph, v, g)
                if ev.key not in found:
                    found[ev.key] = ev
                    if len(found) > ceiling:
                        raise BudgetExceeded(f"extension-graph ball exceeds {ceiling} vertices")
    keys = sorted(found, key=lambda e: (len(e.word), e.word))
    verts = [found[k] for k in keys]
    index = {k: i for i, k in enumerate(keys)}
    words = [k.word for k in keys]
    supp = [k.support_mask for k in keys]
    adj = [[] for _ in keys]
    n = len(keys)
    for i in range(n):
        wi = words[i]
        for j in range(i + 1, n):
            if _commute(graph, wi, words[j]):
                adj[i].append(j)
                adj[j].append(i)
    return EBall(graph, L, verts, index, adj)


def ball_distance(ball: EBall, p: EVertex, q: EVertex):
    """Path length inside the truncation (an upper bound for the distance in
    the extension graph), or None if unreachable inside the ball."""
    s, t = ball.position(p), ball.position(q)
    if s == t:
        return 0
    dist = {s: 0}
    queue = deque([s])
    while queue:
        i = queue.popleft()
        for j in ball.adjacency[i]:
            if j not in dist:
                dist[j] = dist[i] + 1
                if j == t:
                    return dist[j]
                queue.append(j)
    return None


def distances_from(ball: EBall, p: EVertex) -> dict:
    s = ball.position(p)
    dist = {s: 0}
    queue = deque([s])
    while queue:
        i = queue.popleft()
        for j in ball.adjacency[i]:
            if j not in dist:
                dist[j] = dist[i] + 1
                queue.append(j)
    return dist


@dataclass
class QuasiIsometryReport:
    samples: int = 0
    lower_violations: list = field(default_factory=list)
    upper_hits: int = 0
    unreachable: int = 0
    records: list = field(default_factory=list)  # (v, g, distance, star length)

    @property
    def upper_rate(self) -> float:
        return self.upper_hits / self.samples if self.samples else 1.0


def sample_conjugators(graph, L: int, count: int, seed: int = 0):
    """``count`` pairs ``(v, g)`` with ``||g|| <= L``, drawn uniformly from
    the conjugator ball with a seeded generator."""
    rng = random.Random(seed)
    pool = [w for sphere in ball_by_length(graph, L) for w in sphere]
    out = []
    for _ in range(count):
        w = rng.choice(pool)
        out.append((rng.choice(graph.vertices), Element(graph, w, True)))
    return out


def check_quasi_isometry(graph, L: int, samples, ball: EBall = None) -> QuasiIsometryReport:
    """For each sample ``(v, g)``: the lower bound ``d >= ||g||_* - 1`` is a
    hard requirement on the ball distance, the upper bound
    ``d <= D (||g||_* + 1)`` is recorded (it can fail inside a truncation)."""
    if ball is None:
        ball = build_ball(graph, L)
    D = graph.diameter()
    rep = QuasiIsometryReport()
    per_base = {}
    for v, g in samples:
        src = evertex(graph, v, Element.identity(graph))
        if v not in per_base:
            per_base[v] = distances_from(ball, src)
        tgt = evertex(graph, v, g)
        d = per_base[v].get(ball.position(tgt))
        s = star_length(g)
        rep.samples += 1
        rep.records.append((v, g, d, s))
        if d is None:
            rep.unreachable += 1
            continue
        if d < s - 1:
            rep.lower_violations.append((v, g, d, s))
        if d <= D * (s + 1):
            rep.upper_hits += 1
    return rep


def egraph_translation_bounds(g: Element, n_max: int):
    """Bounds on the translation length of ``g`` on the extension graph,
    transferred from the star metric."""
    graph = g.graph
    if not graph.is_connected():
        raise PreconditionError("graph is disconnected")
    if not is_cyclically_reduced(g):
        raise PreconditionError(f"{g} is not cyclically reduced")
    lower, upper = translation_length_bounds(g, n_max)
    nv = len(graph.vertices)
    if (nv >= 4 and graph.complement().is_connected() and is_loxodromic(g)
            and upper < Fraction(1, nv - 2)):
        raise InvariantViolation(f"star translation length of {g} is below 1/(|V| - 2)")
    return lower, graph.diameter() * upper


def export_ball(ball: EBall) -> str:
    lines = [f"v{i} := {ev.key}" for i, ev in enumerate(ball.vertices)]
    lines += [f"e: {i} {j}" for i, j in sorted(ball.edges)]
    return "\n".join(lines) + "\n"
