"""Compare the compiled polynomial kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Times sparse multiplication, exact division by the Vandermonde polynomial,
and end-to-end Schur polynomial construction under both backends, and
checks that the two backends return identical results.
"""

import argparse
import timeit

from schurkit import kernels, polynomials
from schurkit.kernels import Packing
from schurkit.polynomials import alternant, generator_product, staircase, vandermonde


def _packed(p, layout):
    return layout.pack_terms(p.terms)


def cases():
    n = 5
    f = generator_product("h", (3, 2, 2), n)
    g = generator_product("e", (3, 2), n)
    layout = Packing.for_degree(n, 20)
    a, b = _packed(f, layout), _packed(g, layout)
    yield "mul h(3,2,2)*e(3,2), n=5", lambda k: k.mul(a, b)

    lam = (4, 3, 2, 1, 0)
    num = alternant(tuple(x + y for x, y in zip(lam, staircase(n))), n)
    layout = Packing.for_degree(n, num.degree())
    p, q = _packed(num, layout), _packed(vandermonde(n), layout)
    yield "divexact a_(delta+(4,3,2,1)) / Vandermonde, n=5", lambda k: k.divexact(p, q, layout.guard)


def schur_case(native):
    def run():
        polynomials._schur_poly.cache_clear()
        saved = kernels._native
        kernels._native = native
        try:
            return polynomials.schur_poly((3, 2, 2, 1), 5)
        finally:
            kernels._native = saved
    return run


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--number", type=int, default=3)
    args = parser.parse_args()

    native = kernels._native
    if native is None:
        raise SystemExit("compiled kernels are not available; build with: pip install -e . --no-build-isolation")

    py = kernels._pykernels
    rows = []
    for name, op in cases():
        assert op(native) == op(py), f"backends disagree on {name}"
        t_c = min(timeit.repeat(lambda: op(native), repeat=args.repeat, number=args.number)) / args.number
        t_p = min(timeit.repeat(lambda: op(py), repeat=args.repeat, number=args.number)) / args.number
        rows.append((name, t_c, t_p))

    fast, slow = schur_case(native), schur_case(None)
    assert fast() == slow(), "backends disagree on schur_poly"
    t_c = min(timeit.repeat(fast, repeat=args.repeat, number=1))
    t_p = min(timeit.repeat(slow, repeat=args.repeat, number=1))
    rows.append(("schur_poly (3,2,2,1), n=5", t_c, t_p))

    width = max(len(r[0]) for r in rows)
    print(f"{'case':<{width}}  {'cython ms':>10}  {'python ms':>10}  {'speedup':>8}")
    for name, t_c, t_p in rows:
        print(f"{name:<{width}}  {t_c * 1e3:>10.2f}  {t_p * 1e3:>10.2f}  {t_p / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
