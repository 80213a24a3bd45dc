# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled word kernels; same interface as ``_pykernels``.

Vertex masks are held in 64-bit words, so graphs are limited to 64 vertices.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t

ctypedef uint64_t mask_t

DEF MAXV = 64


cdef int _load_masks(object noncomm, mask_t* out) except -1:
    cdef Py_ssize_t n = len(noncomm), i
    if n > MAXV:
        raise ValueError("compiled kernels support at most 64 vertices")
    for i in range(n):
        out[i] = <mask_t>noncomm[i]
    return <int>n


cdef int* _load_word(object word, Py_ssize_t* n) except NULL:
    cdef Py_ssize_t k = len(word), i
    cdef int* buf = <int*>malloc((k + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    i = 0
    for x in word:
        buf[i] = <int>x
        i += 1
    n[0] = k
    return buf


cdef Py_ssize_t _reduce(int* w, Py_ssize_t n, mask_t* nc, int* out) nogil:
    cdef Py_ssize_t top = 0, i, j, k
    cdef int x
    cdef mask_t block
    for i in range(n):
        x = w[i]
        block = nc[x >> 1]
        j = top - 1
        while j >= 0:
            if (block >> (out[j] >> 1)) & 1:
                break
            j -= 1
        if j >= 0 and out[j] == (x ^ 1):
            for k in range(j, top - 1):
                out[k] = out[k + 1]
            top -= 1
        else:
            out[top] = x
            top += 1
    return top


cdef list _tolist(int* w, Py_ssize_t n):
    cdef Py_ssize_t i
    return [w[i] for i in range(n)]


def reduce_word(word, noncomm):
    cdef mask_t nc[MAXV]
    cdef Py_ssize_t n, m
    _load_masks(noncomm, nc)
    cdef int* w = _load_word(word, &n)
    cdef int* out = <int*>malloc((n + 1) * sizeof(int))
    try:
        m = _reduce(w, n, nc, out)
        return _tolist(out, m)
    finally:
        free(w)
        free(out)


def reduced_length(word, noncomm):
    cdef mask_t nc[MAXV]
    cdef Py_ssize_t n, m
    _load_masks(noncomm, nc)
    cdef int* w = _load_word(word, &n)
    cdef int* out = <int*>malloc((n + 1) * sizeof(int))
    try:
        m = _reduce(w, n, nc, out)
        return m
    finally:
        free(w)
        free(out)


cdef Py_ssize_t _normal_form(int* w, Py_ssize_t n, mask_t* nc, int nv, int* out) except -1:
    # Lex-least topological order of the dependency DAG.  Every letter depends
    # on the latest earlier letter of each non-commuting vertex; among the
    # available letters the least one is emitted.  Successor lists are stored
    # compactly: a first pass counts them, a second fills them.
    cdef int last[MAXV]
    cdef int* pred = <int*>malloc((n * nv + 1) * sizeof(int))
    cdef int* npred = <int*>malloc((n + 1) * sizeof(int))
    cdef int* start = <int*>malloc((n + 2) * sizeof(int))
    cdef int* succ = <int*>malloc((n * nv + 1) * sizeof(int))
    cdef int* fill = <int*>malloc((n + 1) * sizeof(int))
    cdef int* indeg = <int*>malloc((n + 1) * sizeof(int))
    cdef char* done = <char*>malloc(n + 1)
    cdef Py_ssize_t i, j, k, best
    cdef int u, v
    cdef mask_t m
    if (pred == NULL or npred == NULL or start == NULL or succ == NULL
            or fill == NULL or indeg == NULL or done == NULL):
        free(pred); free(npred); free(start); free(succ); free(fill); free(indeg); free(done)
        raise MemoryError()
    for u in range(nv):
        last[u] = -1
    for i in range(n + 1):
        start[i] = 0
    for i in range(n):
        done[i] = 0
        npred[i] = 0
        v = w[i] >> 1
        m = nc[v]
        u = 0
        while m:
            if (m & 1) and last[u] >= 0:
                pred[i * nv + npred[i]] = last[u]
                npred[i] += 1
                start[last[u] + 1] += 1
            m >>= 1
            u += 1
        last[v] = <int>i
        indeg[i] = npred[i]
    for i in range(n):
        start[i + 1] += start[i]
        fill[i] = start[i]
    for i in range(n):
        for j in range(npred[i]):
            u = pred[i * nv + j]
            succ[fill[u]] = <int>i
            fill[u] += 1
    k = 0
    while k < n:
        best = -1
        for i in range(n):
            if not done[i] and indeg[i] == 0:
                if best < 0 or w[i] < w[best]:
                    best = i
        done[best] = 1
        out[k] = w[best]
        k += 1
        for j in range(start[best], start[best + 1]):
            indeg[succ[j]] -= 1
    free(pred); free(npred); free(start); free(succ); free(fill); free(indeg); free(done)
    return n


def normal_form(word, noncomm):
    cdef mask_t nc[MAXV]
    cdef Py_ssize_t n, i
    cdef int nv = _load_masks(noncomm, nc)
    cdef int* w = _load_word(word, &n)
    cdef int* out = <int*>malloc((n + 1) * sizeof(int))
    try:
        _normal_form(w, n, nc, nv, out)
        return tuple([out[i] for i in range(n)])
    finally:
        free(w)
        free(out)


def canon(word, noncomm):
    cdef mask_t nc[MAXV]
    cdef Py_ssize_t n, m, i
    cdef int nv = _load_masks(noncomm, nc)
    cdef int* w = _load_word(word, &n)
    cdef int* red = <int*>malloc((n + 1) * sizeof(int))
    cdef int* out = <int*>malloc((n + 1) * sizeof(int))
    try:
        m = _reduce(w, n, nc, red)
        _normal_form(red, m, nc, nv, out)
        return tuple([out[i] for i in range(m)])
    finally:
        free(w)
        free(red)
        free(out)


def starting_letters(word, noncomm, full):
    cdef mask_t nc[MAXV]
    cdef mask_t blocked = 0, f = <mask_t>full
    cdef int v, x
    _load_masks(noncomm, nc)
    res = []
    for item in word:
        x = item
        v = x >> 1
        if not (blocked >> v) & 1:
            res.append(x)
        blocked |= nc[v]
        if blocked == f:
            break
    return res


def ending_letters(word, noncomm, full):
    cdef mask_t nc[MAXV]
    cdef mask_t blocked = 0, f = <mask_t>full
    cdef int v, x
    cdef Py_ssize_t k
    _load_masks(noncomm, nc)
    res = []
    for k in range(len(word) - 1, -1, -1):
        x = word[k]
        v = x >> 1
        if not (blocked >> v) & 1:
            res.append(x)
        blocked |= nc[v]
        if blocked == f:
            break
    return res


def split_prefix(word, allowed, noncomm):
    cdef mask_t nc[MAXV]
    cdef mask_t blocked = 0, al = <mask_t>allowed
    cdef int v, x
    _load_masks(noncomm, nc)
    pre = []
    rest = []
    for item in word:
        x = item
        v = x >> 1
        if (al >> v) & 1 and not (blocked >> v) & 1:
            pre.append(x)
        else:
            rest.append(x)
            blocked |= nc[v]
    return pre, rest


def split_suffix(word, allowed, noncomm):
    cdef mask_t nc[MAXV]
    cdef mask_t blocked = 0, al = <mask_t>allowed
    cdef int v, x
    cdef Py_ssize_t k
    _load_masks(noncomm, nc)
    suf = []
    rest = []
    for k in range(len(word) - 1, -1, -1):
        x = word[k]
        v = x >> 1
        if (al >> v) & 1 and not (blocked >> v) & 1:
            suf.append(x)
        else:
            rest.append(x)
            blocked |= nc[v]
    suf.reverse()
    rest.reverse()
    return rest, suf


cdef Py_ssize_t _starting(int* w, Py_ssize_t n, mask_t* nc, mask_t full, int* out) nogil:
    cdef mask_t blocked = 0
    cdef Py_ssize_t i, k = 0
    cdef int v
    for i in range(n):
        v = w[i] >> 1
        if not (blocked >> v) & 1:
            out[k] = w[i]
            k += 1
        blocked |= nc[v]
        if blocked == full:
            break
    return k


cdef Py_ssize_t _remove_first(int* w, Py_ssize_t n, int x) nogil:
    cdef Py_ssize_t i, j
    for i in range(n):
        if w[i] == x:
            for j in range(i, n - 1):
                w[j] = w[j + 1]
            return n - 1
    return n


def gcd_left(a, b, noncomm, full):
    cdef mask_t nc[MAXV]
    cdef mask_t f = <mask_t>full
    cdef Py_ssize_t na, nb, ng = 0, ka, kb, i, j
    cdef int sa[MAXV]
    cdef int sb[MAXV]
    cdef int found
    _load_masks(noncomm, nc)
    cdef int* wa = _load_word(a, &na)
    cdef int* wb = _load_word(b, &nb)
    cdef int* g = <int*>malloc((na + 1) * sizeof(int))
    try:
        while na > 0 and nb > 0:
            ka = _starting(wa, na, nc, f, sa)
            kb = _starting(wb, nb, nc, f, sb)
            found = 0
            for i in range(ka):
                for j in range(kb):
                    if sa[i] == sb[j]:
                        na = _remove_first(wa, na, sa[i])
                        nb = _remove_first(wb, nb, sa[i])
                        g[ng] = sa[i]
                        ng += 1
                        found = 1
                        break
            if not found:
                break
        return _tolist(g, ng), _tolist(wa, na), _tolist(wb, nb)
    finally:
        free(wa)
        free(wb)
        free(g)


def is_prefix(p, w, noncomm):
    cdef mask_t nc[MAXV]
    cdef Py_ssize_t np_ = len(p), nw = len(w), i, m
    if np_ > nw:
        return False
    _load_masks(noncomm, nc)
    cdef int* buf = <int*>malloc((np_ + nw + 1) * sizeof(int))
    cdef int* out = <int*>malloc((np_ + nw + 1) * sizeof(int))
    try:
        for i in range(np_):
            buf[i] = (<int>p[np_ - 1 - i]) ^ 1
        for i in range(nw):
            buf[np_ + i] = <int>w[i]
        m = _reduce(buf, np_ + nw, nc, out)
        return m == nw - np_
    finally:
        free(buf)
        free(out)
