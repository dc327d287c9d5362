"""Pure-Python sparse polynomial kernels over packed exponent keys.

A key packs a monomial into one integer: fixed-width fields, total degree
in the top field, then the exponents of X_0, X_1, ... in decreasing
significance.  Integer order on keys is then graded lexicographic order,
and adding keys multiplies monomials as long as no field overflows.  Every
field keeps its top bit clear; ``guard`` has exactly those bits set, which
lets ``divides`` test all fields at once.
"""

import heapq


def divides(a, b, guard):
    """Whether monomial ``a`` divides monomial ``b``."""
    return ((b | guard) - a) & guard == guard


def mul(a, b):
    out = {}
    get = out.get
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def divexact(p, q, guard):
    """Quotient ``p / q`` if ``q`` divides ``p`` exactly over the integers, else None.

    Leading-term elimination: the remainder's largest key must be divisible
    by the divisor's, coefficient included, at every step.
    """
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    lead = max(q)
    lc = q[lead]
    rest = [(k - lead, c) for k, c in q.items()]
    rem = dict(p)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    quot = {}
    while heap:
        k = -heapq.heappop(heap)
        c = rem.get(k)
        if not c:
            continue
        if not divides(lead, k, guard) or c % lc:
            return None
        t = c // lc
        m = k - lead
        quot[m] = t
        for dk, qc in rest:
            key = k + dk
            old = rem.get(key)
            new = (old or 0) - t * qc
            if new:
                rem[key] = new
                if old is None:
                    heapq.heappush(heap, -key)
            elif old is not None:
                del rem[key]
    return quot
