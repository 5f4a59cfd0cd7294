"""Pure-Python versions of the hot kernels.

Terms are ``dict`` objects mapping exponent tuples to nonzero coefficients.
Coefficients only need ``+ - * /`` and truthiness, so the same code serves
rationals and rational functions. ``_ckernels.pyx`` mirrors these functions
one for one.
"""

import heapq

BACKEND = "python"


def mul_terms(f, g):
    """Product of two term dicts."""
    if len(f) < len(g):
        f, g = g, f
    out = {}
    get = out.get
    for eg, cg in g.items():
        for ef, cf in f.items():
            e = tuple([a + b for a, b in zip(ef, eg)])
            c = get(e)
            if c is None:
                out[e] = cf * cg
            else:
                c = c + cf * cg
                if c:
                    out[e] = c
                else:
                    del out[e]
    return out


def normal_form(f, basis, neg_key):
    """Fully reduce ``f`` by a list of monic ``(lead, tail)`` pairs.

    ``tail`` is a list of ``(exp, coeff)`` for the non-leading terms and
    ``neg_key`` maps an exponent to a key whose ascending order is the
    descending monomial order. Returns the remainder as a term dict.
    """
    work = dict(f)
    heap = [(neg_key(e), e) for e in work]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = work.pop(e, None)
        if c is None:
            continue
        for lead, tail in basis:
            for a, b in zip(lead, e):
                if a > b:
                    break
            else:
                q = [b - a for a, b in zip(lead, e)]
                for te, tc in tail:
                    m = tuple([x + y for x, y in zip(te, q)])
                    old = work.get(m)
                    if old is None:
                        work[m] = -c * tc
                        heapq.heappush(heap, (neg_key(m), m))
                    else:
                        v = old - c * tc
                        if v:
                            work[m] = v
                        else:
                            del work[m]
                break
        else:
            rem[e] = c
    return rem


def _divisible_by_any(e, leads):
    for lead in leads:
        for a, b in zip(lead, e):
            if a > b:
                break
        else:
            return True
    return False


def standard_monomials(leads, nvars):
    """Exponents outside the monomial ideal generated by ``leads``.

    The caller guarantees a pure power of every variable is among ``leads``.
    Output is in lexicographic order of exponent tuples.
    """
    bounds = [0] * nvars
    for lead in leads:
        nz = [i for i, a in enumerate(lead) if a]
        if len(nz) == 1:
            i = nz[0]
            if bounds[i] == 0 or lead[i] < bounds[i]:
                bounds[i] = lead[i]
    out = []

    def walk(prefix, i, active):
        if i == nvars:
            out.append(tuple(prefix))
            return
        for a in range(bounds[i]):
            prefix.append(a)
            # leads still able to divide some completion of this prefix
            nxt = [l for l in active if l[i] <= a]
            if not any(not any(l[i + 1:]) for l in nxt):
                walk(prefix, i + 1, nxt)
            prefix.pop()

    if nvars == 0:
        return [] if any(True for _ in leads) else [()]
    walk([], 0, list(leads))
    return out


def count_standard(leads, nvars):
    return len(standard_monomials(leads, nvars))


def sparse_rank(rows):
    """Rank of a list of sparse rows (``dict`` column -> value) over a field."""
    pivots = {}
    for row in rows:
        row = {k: v for k, v in row.items() if v}
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
                w = -c * v if w is None else w - c * v
                if w:
                    row[k] = w
                else:
                    row.pop(k, None)
    return len(pivots)
