"""Cross-module property suites behind ``schurkit verify``.

Each suite returns one :class:`CheckResult` per property; a failing
property carries the first counterexample found.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .polynomials import (
    MultiPoly,
    generator_poly,
    generator_product,
    schur_poly,
    series_truncation_check,
    spread,
    substitute_zero,
)
from .shapes import (
    Partition,
    SkewShape,
    beta_window,
    compositions,
    conjugate,
    contains,
    dominance_leq,
    edge_sequence,
    partition_from_edges,
    partitions,
    ribbon_check,
    ribbon_height_by_diagram,
    strip_check,
)
from .symfunc import kostka, normalize_s
from .tableaux import (
    binary_encoding,
    col_sums,
    count_matrices,
    count_ssyt,
    decode_binary,
    decode_integral,
    enumerate_matrices,
    enumerate_ssyt,
    enumerate_ssyt_bounded,
    integral_encoding,
    row_sums,
    transpose_tableau,
)

SUITES = ("shapes", "tableaux", "series", "schur", "kostka")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    checked: int
    counterexample: Optional[str] = None

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.name} ({self.checked} cases)"
        return f"FAIL {self.name}: counterexample {self.counterexample}"


def check(name: str, cases: Iterable, predicate: Callable) -> CheckResult:
    count = 0
    for case in cases:
        count += 1
        if not predicate(case):
            return CheckResult(name, False, count, repr(case))
    return CheckResult(name, True, count)


def all_partitions(max_size: int) -> list[Partition]:
    return [lam for d in range(max_size + 1) for lam in partitions(d)]


def skew_pairs(max_size: int) -> list[tuple[Partition, Partition]]:
    parts = all_partitions(max_size)
    return [(mu, lam) for lam in parts for mu in parts if mu.size <= lam.size and contains(mu, lam)]


def kostka_weights(k: int) -> Iterable[tuple[int, ...]]:
    """Weights used for skew shapes of size ``k``: all of N^k summing to k."""
    return compositions(k, k)


# -- shapes ----------------------------------------------------------------

def _edge_complement(lam: Partition) -> bool:
    e = edge_sequence(lam)
    lt = conjugate(lam)
    window = beta_window(lt, max(len(lt), e.stop + 1)).window
    expected = {-1 - b for b in window} & set(range(e.offset, e.stop))
    return set(e.zeros()) == expected


def shapes_suite(max_size: int = 10, max_ribbon: int = 8) -> list[CheckResult]:
    parts = all_partitions(max_size)
    pairs = skew_pairs(max_size)
    out = [
        check("conjugate is an involution preserving size", parts,
              lambda lam: conjugate(conjugate(lam)) == lam and conjugate(lam).size == lam.size),
        check("horizontal strip <-> vertical strip of conjugates", pairs,
              lambda ml: strip_check(ml[0], ml[1], "horizontal") == strip_check(conjugate(ml[0]), conjugate(ml[1]), "vertical")),
        check("edge-sequence zeros are the complement set", parts, _edge_complement),
        check("edge sequence round trip", parts, lambda lam: partition_from_edges(edge_sequence(lam)) == lam),
        check("ribbon: beta sets agree with the diagram definition",
              ((mu, lam, k) for mu, lam in pairs for k in range(1, max_ribbon + 1)),
              lambda c: ribbon_check(*c) == ribbon_height_by_diagram(*c)),
    ]

    def dominance_is_order(d):
        ps = list(partitions(d))
        rel = {(a, b): dominance_leq(a, b) for a in ps for b in ps}
        return (all(rel[a, a] for a in ps)
                and all(a == b for a in ps for b in ps if rel[a, b] and rel[b, a])
                and all(rel[a, c] for a in ps for b in ps for c in ps if rel[a, b] and rel[b, c]))

    out.append(check("dominance is a partial order", range(min(max_size, 8) + 1), dominance_is_order))
    return out


# -- tableaux ----------------------------------------------------------------

def all_ssyt(max_outer: int):
    """Every column-strict tableau of every skew shape with ``|outer| <= max_outer``
    whose entries are below the number of cells."""
    for mu, lam in skew_pairs(max_outer):
        shape = SkewShape(lam, mu)
        yield from enumerate_ssyt_bounded(shape, shape.size)


def _encodings_ok(t) -> bool:
    m, b = integral_encoding(t), binary_encoding(t)
    return (
        decode_integral(m, t.inner) == t
        and decode_binary(b, t.inner) == t
        and row_sums(m) == t.outer - t.inner
        and col_sums(m) == t.weight
        and row_sums(b) == t.weight
        and col_sums(b) == conjugate(t.outer) - conjugate(t.inner)
        and b == integral_encoding(transpose_tableau(t)).transpose()
    )


def tableaux_suite(max_size: int = 6) -> list[CheckResult]:
    tabs = list(all_ssyt(max_size))
    return [
        check("encode/decode round trips and margins", tabs, _encodings_ok),
        check("transpose is a weight-preserving involution", tabs,
              lambda t: transpose_tableau(transpose_tableau(t)) == t and transpose_tableau(t).weight == t.weight),
    ]


# -- series ----------------------------------------------------------------

def _matrix_expansion(kind: str, beta, n: int) -> bool:
    poly = generator_product(kind, beta, n)
    binary = kind == "e"
    return all(
        poly.coeff(alpha) == count_matrices(alpha, beta, binary)
        for alpha in compositions(sum(beta), n)
    )


def double_series(kind: str, n: int, m: int, max_deg: int) -> bool:
    """Three readings of the two-alphabet series agree up to X-degree ``max_deg``.

    X_i sits at variable 2i and Y_j at 2j+1.  Compared: the sum of
    ``e_beta[X] Y^beta`` (or ``h_beta``), the sum over (binary) matrices of
    ``X^row Y^col``, and the product of ``1 + X_i Y_j`` (or of geometric
    series in ``X_i Y_j``).
    """
    nv = 2 * max(n, m)
    binary = kind == "e"

    def xdeg(e):
        return sum(e[0::2])

    def cut(p):
        return MultiPoly({e: c for e, c in p.terms.items() if xdeg(e) <= max_deg}, nv)

    def y_mono(beta):
        return MultiPoly.monomial(tuple(v for b in beta for v in (0, b)), 1, nv)

    by_generators = MultiPoly(nvars=nv)
    for d in range(max_deg + 1):
        for beta in compositions(d, m):
            by_generators = by_generators + spread(generator_product(kind, beta, n), 2) * y_mono(beta)

    by_matrices: dict[tuple[int, ...], int] = {}
    for d in range(max_deg + 1):
        for alpha in compositions(d, n):
            for beta in compositions(d, m):
                for mat in enumerate_matrices(alpha, beta, binary):
                    r, c = row_sums(mat).padded(n), col_sums(mat).padded(m)
                    e = [0] * nv
                    for i, v in enumerate(r):
                        e[2 * i] = v
                    for j, v in enumerate(c):
                        e[2 * j + 1] = v
                    by_matrices[tuple(e)] = by_matrices.get(tuple(e), 0) + 1
    by_matrices_poly = MultiPoly(by_matrices, nv)

    product = MultiPoly.constant(1, nv)
    for i in range(n):
        for j in range(m):
            xy = MultiPoly.variable(2 * i, nv) * MultiPoly.variable(2 * j + 1, nv)
            if kind == "e":
                factor = 1 + xy
            else:
                factor = sum((xy ** k for k in range(max_deg + 1)), MultiPoly(nvars=nv))
            product = cut(product * factor)
    return by_generators == by_matrices_poly == product


def series_suite(max_deg: int = 5, max_vars: int = 4) -> list[CheckResult]:
    betas = [tuple(b) for d in range(max_deg + 2) for b in compositions(d, max_vars)]
    return [
        check("generating series truncations (e, h, p)",
              itertools.product("ehp", range(1, 4), [max_deg]),
              lambda c: series_truncation_check(*c)),
        check("e_beta monomial coefficients count binary matrices",
              ((b, n) for b in betas for n in range(1, max_vars + 1)),
              lambda c: _matrix_expansion("e", c[0], c[1])),
        check("h_beta monomial coefficients count integral matrices",
              ((b, n) for b in betas for n in range(1, max_vars + 1)),
              lambda c: _matrix_expansion("h", c[0], c[1])),
        check("two-alphabet series (e and h) at 3+3 variables", "eh",
              lambda k: double_series(k, 3, 3, max_deg)),
    ]


# -- schur ----------------------------------------------------------------

def schur_grid(max_part: int, max_len: int):
    for length in range(max_len + 1):
        for alpha in itertools.product(range(max_part + 1), repeat=length):
            if not alpha or alpha[-1]:
                yield alpha


def stable(alpha, n: int) -> bool:
    return substitute_zero(schur_poly(alpha, n + 1), n) == schur_poly(alpha, n)


def normalization_consistent(alpha, n: int) -> bool:
    signed = normalize_s(alpha)
    if signed.sign == 0:
        return not schur_poly(alpha, n)
    return schur_poly(alpha, n) == schur_poly(signed.partition, n) * signed.sign


def schur_suite(max_size: int = 5, max_vars: int = 4) -> list[CheckResult]:
    grid = list(schur_grid(max_size, max_vars))
    return [
        check("stability under X_n := 0",
              ((a, n) for a in grid for n in range(max_vars + 1)),
              lambda c: stable(*c)),
        check("normalisation matches the alternant quotient",
              ((a, max_vars) for a in grid),
              lambda c: normalization_consistent(*c)),
    ]


# -- kostka ----------------------------------------------------------------

def kostka_suite(max_size: int = 6) -> list[CheckResult]:
    cases = [(lam, mu, w) for mu, lam in skew_pairs(max_size) for w in kostka_weights(lam.size - mu.size)]
    return [
        check("<h_alpha, s_lam/mu> counts semistandard tableaux", cases,
              lambda c: kostka(c[0], c[1], c[2]) == count_ssyt(SkewShape(c[0], c[1]), c[2])),
        check("K'_{lam/mu} = K_{lam^t/mu^t}", cases,
              lambda c: kostka(c[0], c[1], c[2], primed=True) == kostka(conjugate(c[0]), conjugate(c[1]), c[2])),
    ]


def run_suite(name: str, max_size: Optional[int] = None, max_vars: int = 4, max_deg: int = 5) -> list[CheckResult]:
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, max_size, max_vars, max_deg)]
    if name == "shapes":
        return shapes_suite(10 if max_size is None else max_size)
    if name == "tableaux":
        return tableaux_suite(6 if max_size is None else max_size)
    if name == "series":
        return series_suite(max_deg, max_vars)
    if name == "schur":
        return schur_suite(5 if max_size is None else max_size, max_vars)
    if name == "kostka":
        return kostka_suite(6 if max_size is None else max_size)
    raise ValueError(f"unknown suite {name!r}")
