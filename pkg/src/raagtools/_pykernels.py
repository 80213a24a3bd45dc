"""Pure-Python word kernels.

Letters are small ints: ``2*vertex + (0 if positive else 1)``, so ``x ^ 1`` is
the inverse letter and ``x >> 1`` its vertex.  ``noncomm[v]`` is a bitmask of
the vertices that do not commute with ``v`` (``v`` itself included) and
``full`` is the mask of all vertices.
"""

from heapq import heapify, heappop, heappush


def reduce_word(word, noncomm):
    """Return a reduced word (as a list) for ``word``."""
    out = []
    for x in word:
        block = noncomm[x >> 1]
        j = len(out) - 1
        while j >= 0:
            if (block >> (out[j] >> 1)) & 1:
                break
            j -= 1
        if j >= 0 and out[j] == x ^ 1:
            del out[j]
        else:
            out.append(x)
    return out


def reduced_length(word, noncomm):
    return len(reduce_word(word, noncomm))


def normal_form(word, noncomm):
    """Lex-least rewriting of a reduced word, as a tuple."""
    n = len(word)
    if n < 2:
        return tuple(word)
    nv = len(noncomm)
    last = [-1] * nv
    succ = [[] for _ in range(n)]
    indeg = [0] * n
    for i in range(n):
        m = noncomm[word[i] >> 1]
        u = 0
        while m:
            if m & 1 and last[u] >= 0:
                succ[last[u]].append(i)
                indeg[i] += 1
            m >>= 1
            u += 1
        last[word[i] >> 1] = i
    heap = [(word[i], i) for i in range(n) if indeg[i] == 0]
    heapify(heap)
    out = []
    while heap:
        x, i = heappop(heap)
        out.append(x)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heappush(heap, (word[j], j))
    return tuple(out)


def canon(word, noncomm):
    return normal_form(reduce_word(word, noncomm), noncomm)


def starting_letters(word, noncomm, full):
    """Letters x with x <=_L word, for a reduced word, in order of appearance."""
    blocked = 0
    res = []
    for x in word:
        v = x >> 1
        if not (blocked >> v) & 1:
            res.append(x)
        blocked |= noncomm[v]
        if blocked == full:
            break
    return res


def ending_letters(word, noncomm, full):
    """Letters x with x <=_R word, for a reduced word."""
    blocked = 0
    res = []
    for k in range(len(word) - 1, -1, -1):
        x = word[k]
        v = x >> 1
        if not (blocked >> v) & 1:
            res.append(x)
        blocked |= noncomm[v]
        if blocked == full:
            break
    return res


def split_prefix(word, allowed, noncomm):
    """Split a reduced word into its largest prefix supported in ``allowed``
    and the remainder.  Both parts keep the relative order of ``word``."""
    blocked = 0
    pre = []
    rest = []
    for x in word:
        v = x >> 1
        if (allowed >> v) & 1 and not (blocked >> v) & 1:
            pre.append(x)
        else:
            rest.append(x)
            blocked |= noncomm[v]
    return pre, rest


def split_suffix(word, allowed, noncomm):
    """Mirror of :func:`split_prefix`: returns (remainder, suffix)."""
    blocked = 0
    suf = []
    rest = []
    for k in range(len(word) - 1, -1, -1):
        x = word[k]
        v = x >> 1
        if (allowed >> v) & 1 and not (blocked >> v) & 1:
            suf.append(x)
        else:
            rest.append(x)
            blocked |= noncomm[v]
    suf.reverse()
    rest.reverse()
    return rest, suf


def _remove_first(word, x):
    # x is a starting letter, so its first occurrence is the one to drop
    word.remove(x)


def gcd_left(a, b, noncomm, full):
    """Greatest common prefix of two reduced words.

    Returns ``(g, a', b')`` with ``a = g a'`` and ``b = g b'`` as words."""
    a = list(a)
    b = list(b)
    g = []
    while a and b:
        sb = set(starting_letters(b, noncomm, full))
        common = [x for x in starting_letters(a, noncomm, full) if x in sb]
        if not common:
            break
        for x in common:
            # the common letters pairwise commute, so they can all be peeled
            _remove_first(a, x)
            _remove_first(b, x)
            g.append(x)
    return g, a, b


def is_prefix(p, w, noncomm):
    """Whether reduced ``p`` is a prefix of reduced ``w``."""
    if len(p) > len(w):
        return False
    inv = [x ^ 1 for x in reversed(p)]
    return len(reduce_word(inv + list(w), noncomm)) == len(w) - len(p)
