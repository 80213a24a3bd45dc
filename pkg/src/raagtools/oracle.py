"""Brute-force reference implementations for small instances.

Nothing here uses the word kernels or the lattice code.  Words are tuples of
``(vertex_index, sign)`` pairs with sign ``+1``/``-1``; commutation is read
straight from the graph's edge set.  Everything works by exhaustive search over
commutation classes, so it is only meant for words of a handful of letters.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from .errors import BudgetExceeded


@dataclass(frozen=True)
class EnumerationBudget:
    max_word_length: int = 10
    max_class_size: int = 50_000


class Oracle:
    def __init__(self, graph, budget: EnumerationBudget = EnumerationBudget()):
        self.graph = graph
        self.budget = budget
        names = graph.vertices
        self.n = len(names)
        edges = {frozenset(e) for e in graph.edges}
        self._comm = [[i != j and frozenset((names[i], names[j])) in edges
                       for j in range(self.n)] for i in range(self.n)]
        self._solved = {}

    # words

    def letters(self):
        return [(i, s) for i in range(self.n) for s in (1, -1)]

    def word_from_text(self, text: str) -> tuple:
        out = []
        for tok in text.split():
            name, _, exp = tok.partition("^")
            k = int(exp) if exp else 1
            out += [(self.graph.vertices.index(name), 1 if k > 0 else -1)] * abs(k)
        return tuple(out)

    def to_codes(self, word) -> tuple:
        """Translate to the letter codes used by the main package."""
        return tuple(2 * i + (0 if s > 0 else 1) for i, s in word)

    def from_codes(self, codes) -> tuple:
        return tuple((x >> 1, -1 if x & 1 else 1) for x in codes)

    def commute(self, x, y) -> bool:
        return self._comm[x[0]][y[0]]

    def _order_key(self, word):
        return tuple((i, 0 if s > 0 else 1) for i, s in word)

    def commutation_class(self, word) -> set:
        """All words obtained from ``word`` by swapping adjacent commuting
        letters."""
        word = tuple(word)
        seen = {word}
        queue = deque([word])
        while queue:
            w = queue.popleft()
            for k in range(len(w) - 1):
                if self.commute(w[k], w[k + 1]):
                    v = w[:k] + (w[k + 1], w[k]) + w[k + 2:]
                    if v not in seen:
                        seen.add(v)
                        if len(seen) > self.budget.max_class_size:
                            raise BudgetExceeded("commutation class too large")
                        queue.append(v)
        return seen

    def solve(self, word):
        """``(length, canonical word)`` of the element represented by ``word``,
        the canonical word being the least reduced word in letter order."""
        word = tuple(word)
        hit = self._solved.get(word)
        if hit is not None:
            return hit
        if len(word) > 2 * self.budget.max_word_length:
            raise BudgetExceeded("word too long for the oracle")
        cls = self.commutation_class(word)
        result = None
        for w in cls:
            for k in range(len(w) - 1):
                if w[k][0] == w[k + 1][0] and w[k][1] == -w[k + 1][1]:
                    result = self.solve(w[:k] + w[k + 2:])
                    break
            if result is not None:
                break
        if result is None:
            result = (len(word), min(cls, key=self._order_key))
        for w in cls:
            self._solved[w] = result
        return result

    def word_length(self, word) -> int:
        return self.solve(word)[0]

    def canonical(self, word) -> tuple:
        return self.solve(word)[1]

    def multiply(self, *words) -> tuple:
        out = ()
        for w in words:
            out += tuple(w)
        return self.canonical(out)

    def inverse(self, word) -> tuple:
        return tuple((i, -s) for i, s in reversed(word))

    def support(self, word) -> frozenset:
        return frozenset(i for i, _ in self.canonical(word))

    # enumeration

    def enumerate_elements(self, n: int) -> set:
        """Canonical words of all elements of length ``<= n``."""
        if n > self.budget.max_word_length:
            raise BudgetExceeded("enumeration radius exceeds the budget")
        layer = {()}
        out = {()}
        for _ in range(n):
            nxt = set()
            for w in layer:
                for x in self.letters():
                    c = self.canonical(w + (x,))
                    if len(c) == len(w) + 1:
                        nxt.add(c)
            out |= nxt
            layer = nxt
        return out

    # prefixes

    def prefixes(self, word) -> frozenset:
        """Canonical words of all prefixes: initial segments of the reduced
        words of the element."""
        c = self.canonical(word)
        out = set()
        for w in self.commutation_class(c):
            for k in range(len(w) + 1):
                out.add(w[:k])
        return frozenset(self.canonical(p) for p in out)

    def factorizations(self, word) -> set:
        """All geodesic factorizations ``(u1, u2, u3)`` in canonical words."""
        c = self.canonical(word)
        out = set()
        for w in self.commutation_class(c):
            for i in range(len(w) + 1):
                for j in range(i, len(w) + 1):
                    out.add((w[:i], w[i:j], w[j:]))
        return {tuple(self.canonical(p) for p in t) for t in out}

    def gcd_prefixes(self, a, b, pre_a=None, pre_b=None) -> tuple:
        """Greatest common prefix, checked to be unique."""
        pa = self.prefixes(a) if pre_a is None else pre_a
        pb = self.prefixes(b) if pre_b is None else pre_b
        common = pa & pb
        best = max(common, key=len)
        if any(len(p) == len(best) and p != best for p in common):
            raise AssertionError("common prefixes have no unique maximum")
        return best

    def disjointly_commute(self, a, b) -> bool:
        sa, sb = self.support(a), self.support(b)
        return all(i != j and self._comm[i][j] for i in sa for j in sb)

    def lcm_prefixes(self, a, b, pre_a=None, pre_b=None):
        """Least common right multiple or None.

        A common multiple contains both elements as order ideals of its heap,
        and a least one is their union.  Past the common part ``q`` the two
        ideals are disjoint, so no relation can link them: the remainders must
        disjointly commute, and then the union is ``q (q^-1 a) (q^-1 b)``."""
        q = self.gcd_prefixes(a, b, pre_a, pre_b)
        qi = self.inverse(q)
        s = self.multiply(qi, a)
        t = self.multiply(qi, b)
        if not self.disjointly_commute(s, t):
            return None
        m = self.multiply(q, s, t)
        if len(m) != len(q) + len(s) + len(t):
            raise AssertionError("heap union is not geodesic")
        return m

    # star length and conjugacy

    def _in_star(self, letters_set) -> bool:
        for v in range(self.n):
            if all(i == v or self._comm[v][i] for i in letters_set):
                return True
        return False

    def star_length(self, word) -> int:
        """Least number of consecutive star-supported segments over all
        reduced words of the element (geodesic star decompositions)."""
        c = self.canonical(word)
        if not c:
            return 0
        best = len(c)
        for w in self.commutation_class(c):
            count = 0
            k = 0
            while k < len(w):
                seg = set()
                while k < len(w) and self._in_star(seg | {w[k][0]}):
                    seg.add(w[k][0])
                    k += 1
                count += 1
            best = min(best, count)
        return best

    def conjugate(self, a, b, cap: int):
        """``(found, conjugator)``; a negative answer only covers conjugators
        of length ``<= cap``."""
        ca, cb = self.canonical(a), self.canonical(b)
        for c in sorted(self.enumerate_elements(cap), key=lambda w: (len(w), self._order_key(w))):
            if self.multiply(self.inverse(c), ca, c) == cb:
                return True, c
        return False, None

    def all_words(self, n: int):
        """Every word of length exactly ``n``."""
        return product(self.letters(), repeat=n)
