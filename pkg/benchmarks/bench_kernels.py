"""Compare the compiled and pure-Python kernels on the workloads that
dominate colon, saturation and length computations.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import random
import timeit
from fractions import Fraction

from lcistruct import Ideal, kernels
from lcistruct.construct import ConstructionPlan, closed_form
from lcistruct.poly import GREVLEX, PolyRing


def random_poly(rnd, ring, degree, nterms):
    out = {}
    for _ in range(nterms):
        e = [0] * ring.nvars
        for _ in range(rnd.randint(0, degree)):
            e[rnd.randrange(ring.nvars)] += 1
        out[tuple(e)] = Fraction(rnd.randint(-9, 9) or 1, rnd.randint(1, 4))
    return ring.from_terms(out)


def workloads(rnd):
    R = PolyRing(["x", "y", "z"], order=GREVLEX)
    gens = [random_poly(rnd, R, 3, 4) for _ in range(3)]
    gb = Ideal(R, gens).groebner(GREVLEX)
    polys = [random_poly(rnd, R, 7, 12).terms for _ in range(40)]
    entries = gb._entries
    key = GREVLEX.neg_key

    chain = closed_form(ConstructionPlan(6, "B", codim=4), 7)
    cgb = chain.groebner(GREVLEX)
    leads = cgb.leading_monomials
    nv = chain.ring.nvars

    pairs = [(random_poly(rnd, R, 4, 10).terms, random_poly(rnd, R, 4, 10).terms) for _ in range(40)]
    rows = [{rnd.randrange(60): Fraction(rnd.randint(-5, 5) or 1) for _ in range(6)} for _ in range(80)]

    return {
        "normal_form": lambda k: [k.normal_form(dict(p), entries, key) for p in polys],
        "mul_terms": lambda k: [k.mul_terms(a, b) for a, b in pairs],
        "count_standard": lambda k: k.count_standard(leads, nv),
        "sparse_rank": lambda k: k.sparse_rank([dict(r) for r in rows]),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the Python backend is available")
    work = workloads(random.Random(0))
    print(f"{'kernel':<16}" + "".join(f"{name:>12}" for name in backends) + "     speedup")
    for label, fn in work.items():
        results = {name: fn(mod) for name, mod in backends.items()}
        if len(results) == 2:
            assert results["python"] == results["cython"], f"{label}: backends disagree"
        times = {
            name: min(timeit.repeat(lambda m=mod: fn(m), number=args.number, repeat=args.repeat)) / args.number
            for name, mod in backends.items()
        }
        line = f"{label:<16}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times.values())
        if "cython" in times:
            line += f"  {times['python'] / times['cython']:>8.2f}x"
        print(line)


if __name__ == "__main__":
    main()
