"""Independent oracles built on plain linear algebra over truncated
polynomial spaces. Nothing here calls the Groebner engine."""

from fractions import Fraction


def monomials(nvars, degree):
    if nvars == 0:
        return [()] if degree == 0 else []
    return [
        (a,) + rest for a in range(degree, -1, -1) for rest in monomials(nvars - 1, degree - a)
    ]


def monomials_below(nvars, n):
    return [e for d in range(n) for e in monomials(nvars, d)]


def _mul_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


class Echelon:
    """Row-echelon basis of a subspace of ``span(columns)``; coefficients from
    any exact field (Fraction or rational functions)."""

    def __init__(self):
        self.rows = {}  # pivot column -> row dict with row[pivot] == 1

    def reduce(self, row):
        # stored rows are fully reduced, so one pass over pivots suffices
        row = {k: v for k, v in row.items() if v != 0}
        for col in [c for c in row if c in self.rows]:
            c = row.get(col)
            if not c:
                continue
            for k, v in self.rows[col].items():
                nv = row.get(k, 0) - c * v
                if nv == 0:
                    row.pop(k, None)
                else:
                    row[k] = nv
        return row

    def add(self, row):
        row = self.reduce(row)
        if not row:
            return False
        col = min(row)
        pivot = row[col]
        inv = 1 / (Fraction(pivot) if isinstance(pivot, int) else pivot)
        row = {k: v * inv for k, v in row.items()}
        for other in self.rows.values():
            c = other.get(col)
            if c is not None and c != 0:
                for k, v in row.items():
                    nv = other.get(k, 0) - c * v
                    if nv == 0:
                        other.pop(k, None)
                    else:
                        other[k] = nv
        self.rows[col] = row
        return True

    def contains(self, row):
        return not self.reduce(row)

    def __len__(self):
        return len(self.rows)


def truncated_ideal_space(gens, nvars, n):
    """Span of ``m * g`` for all monomials ``m``, truncated below degree ``n``."""
    index = {e: i for i, e in enumerate(monomials_below(nvars, n))}
    space = Echelon()
    for g in gens:
        for m in monomials_below(nvars, n):
            row = {}
            for e, c in g.items():
                me = _mul_exp(m, e)
                if sum(me) < n:
                    row[index[me]] = row.get(index[me], 0) + c
            if row:
                space.add(row)
    return space, index


def vectorize(f, index, n):
    row = {}
    for e, c in f.items():
        if sum(e) < n:
            row[index[e]] = row.get(index[e], 0) + c
    return row


def truncated_length(gens, nvars, n):
    """``dim R/(J + m^n)``."""
    space, index = truncated_ideal_space(gens, nvars, n)
    return len(index) - len(space)


def truncated_member(f, gens, nvars, n):
    space, index = truncated_ideal_space(gens, nvars, n)
    return space.contains(vectorize(f, index, n))


def terms(p):
    return dict(p.terms)


def mul_terms(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = _mul_exp(ea, eb)
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def colon_space(j_gens, k_gens, nvars, n):
    """Basis of ``(J : K) / m^n`` inside ``R/m^n`` for ``J ⊇ m^n``:
    solve ``f * k in J + m^n`` for every ``k`` by linear algebra."""
    space, index = truncated_ideal_space(j_gens, nvars, n)
    basis = monomials_below(nvars, n)
    # image of each basis monomial under multiplication by every k, reduced mod J
    images = []
    for b in basis:
        parts = []
        for k in k_gens:
            parts.append(space.reduce(vectorize(mul_terms({b: 1}, k), index, n)))
        images.append(parts)
    # kernel of the map f -> (f*k_1, ..., f*k_r) mod J
    width = len(index)
    combos = []
    kernel = []
    for i, parts in enumerate(images):
        row = {}
        for j, part in enumerate(parts):
            for col, v in part.items():
                row[j * width + col] = v
        tag = {("t", i): Fraction(1)}
        combos.append((row, tag))
    # Gaussian elimination tracking combinations
    reduced = []
    for row, tag in combos:
        row, tag = dict(row), dict(tag)
        for prow, ptag, pcol in reduced:
            c = row.get(pcol)
            if c:
                for k, v in prow.items():
                    nv = row.get(k, 0) - c * v
                    if nv == 0:
                        row.pop(k, None)
                    else:
                        row[k] = nv
                for k, v in ptag.items():
                    nv = tag.get(k, 0) - c * v
                    if nv == 0:
                        tag.pop(k, None)
                    else:
                        tag[k] = nv
        if row:
            pcol = min(row)
            pivot = row[pcol]
            inv = 1 / (Fraction(pivot) if isinstance(pivot, int) else pivot)
            row = {k: v * inv for k, v in row.items()}
            tag = {k: v * inv for k, v in tag.items()}
            reduced.append((row, tag, pcol))
        else:
            kernel.append({basis[k[1]]: v for k, v in tag.items()})
    return kernel


def hilbert_function(gens, nvars, d):
    """``dim (R/I)_d`` for homogeneous generators, by the degree-d Macaulay matrix."""
    mons = monomials(nvars, d)
    index = {e: i for i, e in enumerate(mons)}
    space = Echelon()
    for g in gens:
        gd = sum(next(iter(g)))
        if gd > d:
            continue
        for m in monomials(nvars, d - gd):
            space.add({index[_mul_exp(m, e)]: c for e, c in g.items()})
    return len(mons) - len(space)


def homogeneous_member(f, gens, nvars):
    """Exact membership for homogeneous generators: test each graded piece."""
    by_deg = {}
    for e, c in f.items():
        by_deg.setdefault(sum(e), {})[e] = c
    for d, piece in by_deg.items():
        mons = monomials(nvars, d)
        index = {e: i for i, e in enumerate(mons)}
        space = Echelon()
        for g in gens:
            gd = sum(next(iter(g)))
            if gd > d:
                continue
            for m in monomials(nvars, d - gd):
                space.add({index[_mul_exp(m, e)]: c for e, c in g.items()})
        if not space.contains({index[e]: c for e, c in piece.items()}):
            return False
    return True


def macaulay_member(f, gens, nvars, degree):
    """``f`` is a combination ``sum h_i g_i`` with ``deg(h_i g_i) <= degree``."""
    mons = monomials_below(nvars, degree + 1)
    index = {e: i for i, e in enumerate(mons)}
    space = Echelon()
    for g in gens:
        gd = max(sum(e) for e in g)
        for m in monomials_below(nvars, degree - gd + 1):
            space.add({index[_mul_exp(m, e)]: c for e, c in g.items()})
    if any(sum(e) > degree for e in f):
        return False
    return space.contains({index[e]: c for e, c in f.items()})


def min_gens_linear_algebra(gens, nvars, n):
    """``len R/(mJ + m^n) - len R/(J + m^n)``; equals ``dim J/mJ`` when ``J ⊇ m^(n-1)``."""
    mj = []
    for g in gens:
        for i in range(nvars):
            e = tuple(1 if j == i else 0 for j in range(nvars))
            mj.append({_mul_exp(k, e): c for k, c in g.items()})
    return truncated_length(mj, nvars, n) - truncated_length(gens, nvars, n)


def binomial_poly_value(coeffs, t):
    return sum(c * t**i for i, c in enumerate(coeffs))
