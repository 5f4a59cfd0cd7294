# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the kernels in ``_pykernels``.

Coefficients stay Python objects; the speedup comes from typed loops over
exponent tuples and avoiding generator/zip overhead in the inner loops.
"""

from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM, PyTuple_GET_ITEM
from cpython.ref cimport Py_INCREF
from heapq import heappush, heappop, heapify

BACKEND = "cython"


cdef inline tuple _add(tuple a, tuple b, Py_ssize_t n):
    cdef tuple out = PyTuple_New(n)
    cdef Py_ssize_t i
    cdef object v
    for i in range(n):
        v = <long>(<object>PyTuple_GET_ITEM(a, i)) + <long>(<object>PyTuple_GET_ITEM(b, i))
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


cdef inline bint _divides(tuple a, tuple b, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        if <long>(<object>PyTuple_GET_ITEM(a, i)) > <long>(<object>PyTuple_GET_ITEM(b, i)):
            return False
    return True


cdef inline tuple _sub(tuple a, tuple b, Py_ssize_t n):
    cdef tuple out = PyTuple_New(n)
    cdef Py_ssize_t i
    cdef object v
    for i in range(n):
        v = <long>(<object>PyTuple_GET_ITEM(a, i)) - <long>(<object>PyTuple_GET_ITEM(b, i))
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


def mul_terms(dict f, dict g):
    if len(f) < len(g):
        f, g = g, f
    cdef dict out = {}
    cdef tuple ef, eg, e
    cdef object cf, cg, c
    cdef Py_ssize_t n
    if not f or not g:
        return out
    n = len(next(iter(f)))
    for eg, cg in g.items():
        for ef, cf in f.items():
            e = _add(ef, eg, n)
            c = out.get(e)
            if c is None:
                out[e] = cf * cg
            else:
                c = c + cf * cg
                if c:
                    out[e] = c
                else:
                    del out[e]
    return out


def normal_form(dict f, list basis, neg_key):
    cdef dict work = dict(f)
    cdef dict rem = {}
    cdef list heap = [(neg_key(e), e) for e in work]
    cdef tuple e, lead, q, m, te
    cdef list tail
    cdef object c, old, v, tc
    cdef Py_ssize_t n, k, nb = len(basis)
    cdef bint found
    if not work:
        return rem
    n = len(next(iter(work)))
    heapify(heap)
    while heap:
        e = heappop(heap)[1]
        c = work.pop(e, None)
        if c is None:
            continue
        found = False
        for k in range(nb):
            lead, tail = basis[k]
            if _divides(lead, e, n):
                found = True
                q = _sub(e, lead, n)
                for te, tc in tail:
                    m = _add(te, q, n)
                    old = work.get(m)
                    if old is None:
                        work[m] = -c * tc
                        heappush(heap, (neg_key(m), m))
                    else:
                        v = old - c * tc
                        if v:
                            work[m] = v
                        else:
                            del work[m]
                break
        if not found:
            rem[e] = c
    return rem


def standard_monomials(leads, Py_ssize_t nvars):
    cdef list bounds = [0] * nvars
    cdef tuple lead
    cdef Py_ssize_t i, cnt, idx
    for lead in leads:
        cnt = 0
        idx = -1
        for i in range(nvars):
            if lead[i]:
                cnt += 1
                idx = i
        if cnt == 1:
            if bounds[idx] == 0 or lead[idx] < bounds[idx]:
                bounds[idx] = lead[idx]
    if nvars == 0:
        return [] if len(leads) else [()]
    cdef list out = []
    _walk([], 0, list(leads), bounds, nvars, out)
    return out


cdef void _walk(list prefix, Py_ssize_t i, list active, list bounds,
                Py_ssize_t nvars, list out):
    cdef long a, bound
    cdef list nxt
    cdef tuple l
    cdef bint killed, rest_zero
    cdef Py_ssize_t j
    if i == nvars:
        out.append(tuple(prefix))
        return
    bound = bounds[i]
    for a in range(bound):
        prefix.append(a)
        nxt = []
        killed = False
        for l in active:
            if <long>l[i] <= a:
                nxt.append(l)
                rest_zero = True
                for j in range(i + 1, nvars):
                    if l[j]:
                        rest_zero = False
                        break
                if rest_zero:
                    killed = True
                    break
        if not killed:
            _walk(prefix, i + 1, nxt, bounds, nvars, out)
        prefix.pop()


def count_standard(leads, Py_ssize_t nvars):
    return len(standard_monomials(leads, nvars))


def sparse_rank(rows):
    cdef dict pivots = {}
    cdef dict row, piv
    cdef object col, c, v, w, inv, k
    for r in rows:
        row = {k: v for k, v in r.items() if v}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                inv = 1 / row[col]
                pivots[col] = {k: v * inv for k, v in row.items()}
                break
            c = row[col]
            for k, v in piv.items():
                w = row.get(k)
                if w is None:
                    w = -c * v
                else:
                    w = w - c * v
                if w:
                    row[k] = w
                else:
                    row.pop(k, None)
    return len(pivots)
