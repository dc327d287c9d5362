"""Exact sparse multivariate polynomials over the integers.

A :class:`MultiPoly` maps exponent vectors (stored without trailing zeros)
to nonzero integer coefficients.  Multiplication and exact division run in
the kernels of :mod:`schurkit.kernels`.
"""

from __future__ import annotations

import itertools
import json
import re
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Optional, Sequence

from . import kernels
from .shapes import Composition, Partition, inversion_count

__all__ = [
    "MultiPoly",
    "poly_add",
    "poly_mul",
    "coeff_of",
    "substitute_zero",
    "is_symmetric",
    "is_alternating",
    "monomial_symmetric",
    "generator_poly",
    "generator_product",
    "series_truncation_check",
    "alternant",
    "alternant_det",
    "vandermonde",
    "vandermonde_product",
    "staircase",
    "exact_divide",
    "schur_poly",
    "signed_permutations",
    "spread",
]


def _canon(exps: Iterable[int]) -> tuple[int, ...]:
    e = tuple(exps)
    end = len(e)
    while end and e[end - 1] == 0:
        end -= 1
    if any(x < 0 for x in e):
        raise ValueError(f"negative exponent in {e}")
    return e[:end]


class MultiPoly:
    """Sparse polynomial in X_0, ..., X_{nvars-1} with integer coefficients.

    ``nvars`` is only an upper bound on the variables in use; equality and
    hashing look at the terms alone, so ``X_0`` is the same polynomial
    whether it is regarded in two variables or in five.
    """

    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms: Optional[Mapping[Sequence[int], int]] = None, nvars: Optional[int] = None):
        clean: dict[tuple[int, ...], int] = {}
        for e, c in (terms or {}).items():
            e = _canon(e)
            clean[e] = clean.get(e, 0) + int(c)
        self._terms = {e: c for e, c in clean.items() if c}
        width = max((len(e) for e in self._terms), default=0)
        if nvars is None:
            nvars = width
        elif nvars < width:
            raise ValueError(f"terms use {width} variables but nvars={nvars}")
        self.nvars = nvars
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "MultiPoly":
        # Trusted constructor: canonical keys, no zero coefficients.
        self = cls.__new__(cls)
        self._terms = terms
        self.nvars = nvars
        self._hash = None
        return self

    @classmethod
    def constant(cls, c: int, nvars: int = 0) -> "MultiPoly":
        return cls({(): c}, nvars)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1, nvars: Optional[int] = None) -> "MultiPoly":
        return cls({tuple(exps): coeff}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: Optional[int] = None) -> "MultiPoly":
        return cls.monomial((0,) * i + (1,), 1, nvars)

    @property
    def terms(self) -> Mapping[tuple[int, ...], int]:
        return self._terms

    def coeff(self, exps: Sequence[int]) -> int:
        return self._terms.get(_canon(exps), 0)

    def degree(self) -> Optional[int]:
        """Total degree, or None for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=None)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> "MultiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other) -> "MultiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, -other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            if other == 0:
                return MultiPoly(nvars=self.nvars)
            return MultiPoly._raw({e: c * other for e, c in self._terms.items()}, self.nvars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in graded lexicographic order, largest first, X_0 > X_1 > ..."""
        n = self.nvars
        return sorted(
            self._terms.items(),
            key=lambda ec: (sum(ec[0]), ec[0] + (0,) * (n - len(ec[0]))),
            reverse=True,
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for k, (e, c) in enumerate(self.sorted_terms()):
            factors = [str(abs(c))] + [f"X{i}^{a}" for i, a in enumerate(e) if a]
            body = "*".join(factors)
            if k == 0:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r}, nvars={self.nvars})"

    @classmethod
    def parse(cls, text: str, nvars: Optional[int] = None) -> "MultiPoly":
        """Inverse of ``str``; also accepts bare ``X1`` and omitted unit coefficients."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        terms: dict[tuple[int, ...], int] = {}
        pos = 0
        for m in re.finditer(r"([+-])([^+-]+)", s):
            if m.start() != pos:
                raise ValueError(f"cannot parse polynomial {text!r}")
            pos = m.end()
            coeff, exps = 1, {}
            for f in m.group(2).split("*"):
                v = re.fullmatch(r"X(\d+)(?:\^(\d+))?", f)
                if v:
                    i = int(v.group(1))
                    exps[i] = exps.get(i, 0) + int(v.group(2) or 1)
                elif re.fullmatch(r"\d+", f):
                    coeff *= int(f)
                else:
                    raise ValueError(f"bad factor {f!r} in {text!r}")
            e = tuple(exps.get(i, 0) for i in range(max(exps, default=-1) + 1))
            e = _canon(e)
            terms[e] = terms.get(e, 0) + (coeff if m.group(1) == "+" else -coeff)
        if pos != len(s):
            raise ValueError(f"cannot parse polynomial {text!r}")
        return cls(terms, nvars)

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "exp": list(e)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data, nvars: Optional[int] = None) -> "MultiPoly":
        if isinstance(data, str):
            data = json.loads(data)
        terms: dict[tuple[int, ...], int] = {}
        for t in data:
            e = _canon(t["exp"])
            terms[e] = terms.get(e, 0) + int(t["coeff"])
        return cls(terms, nvars)


def _coerce(x):
    if isinstance(x, MultiPoly):
        return x
    if isinstance(x, int):
        return MultiPoly.constant(x)
    return NotImplemented


def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    out = dict(p.terms)
    for e, c in q.terms.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return MultiPoly._raw(out, max(p.nvars, q.nvars))


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    n = max(p.nvars, q.nvars)
    if not p or not q:
        return MultiPoly(nvars=n)
    layout = kernels.Packing.for_degree(n, p.degree() + q.degree())
    prod = kernels.mul(layout.pack_terms(p.terms), layout.pack_terms(q.terms), layout)
    return MultiPoly._raw(layout.unpack_terms(prod), n)


def coeff_of(p: MultiPoly, alpha: Sequence[int]) -> int:
    return p.coeff(alpha)


def substitute_zero(p: MultiPoly, i: int) -> MultiPoly:
    """Set X_i := 0."""
    return MultiPoly._raw({e: c for e, c in p.terms.items() if i >= len(e) or e[i] == 0}, p.nvars)


def spread(p: MultiPoly, stride: int, offset: int = 0) -> MultiPoly:
    """Rename X_i to X_{stride*i + offset}; used to put two alphabets in one variable space."""
    terms = {}
    for e, c in p.terms.items():
        v = [0] * (stride * len(e) + offset)
        for i, a in enumerate(e):
            v[stride * i + offset] = a
        terms[tuple(v)] = c
    return MultiPoly(terms, stride * p.nvars + offset)


def _orbit_size(key: Sequence[int]) -> int:
    size = factorial(len(key))
    for _, grp in itertools.groupby(sorted(key)):
        size //= factorial(len(list(grp)))
    return size


def is_symmetric(p: MultiPoly, n: int) -> bool:
    """Coefficients are constant on every Sym_n orbit of exponent vectors."""
    groups: dict[tuple[int, ...], list[int]] = {}
    for e, c in p.terms.items():
        if len(e) > n:
            return False
        key = tuple(sorted(e + (0,) * (n - len(e)), reverse=True))
        groups.setdefault(key, []).append(c)
    return all(len(cs) == _orbit_size(k) and len(set(cs)) == 1 for k, cs in groups.items())


def is_alternating(p: MultiPoly, n: int) -> bool:
    """``c_{sigma.alpha} = sign(sigma) c_alpha``; forces ``c_alpha = 0`` on repeated exponents."""
    groups: dict[tuple[int, ...], set[int]] = {}
    for e, c in p.terms.items():
        if len(e) > n:
            return False
        full = e + (0,) * (n - len(e))
        if len(set(full)) < n:
            return False
        key = tuple(sorted(full, reverse=True))
        sign = -1 if inversion_count(full) % 2 else 1
        groups.setdefault(key, set()).add(sign * c)
    counts: dict[tuple[int, ...], int] = {}
    for e in p.terms:
        key = tuple(sorted(e + (0,) * (n - len(e)), reverse=True))
        counts[key] = counts.get(key, 0) + 1
    return all(len(v) == 1 and counts[k] == factorial(n) for k, v in groups.items())


def _distinct_permutations(values: Sequence[int]) -> Iterable[tuple[int, ...]]:
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    keys = sorted(counts, reverse=True)
    n = len(values)
    out = [0] * n

    def rec(pos):
        if pos == n:
            yield tuple(out)
            return
        for v in keys:
            if counts[v]:
                counts[v] -= 1
                out[pos] = v
                yield from rec(pos + 1)
                counts[v] += 1

    yield from rec(0)


def monomial_symmetric(lam: Iterable[int], n: int) -> MultiPoly:
    """Sum of the distinct monomials in the Sym_n orbit of X^lam."""
    lam = Partition(sorted(Composition(lam), reverse=True))
    if len(lam) > n:
        return MultiPoly(nvars=n)
    return MultiPoly({e: 1 for e in _distinct_permutations(lam.padded(n))}, n)


def generator_poly(kind: str, d: int, n: int) -> MultiPoly:
    """``e_d``, ``h_d`` or ``p_d`` in the variables X_0..X_{n-1}."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    terms: dict[tuple[int, ...], int] = {}
    if kind == "e":
        for idx in itertools.combinations(range(n), d):
            v = [0] * n
            for i in idx:
                v[i] = 1
            terms[tuple(v)] = 1
    elif kind == "h":
        for idx in itertools.combinations_with_replacement(range(n), d):
            v = [0] * n
            for i in idx:
                v[i] += 1
            terms[tuple(v)] = terms.get(tuple(v), 0) + 1
    elif kind == "p":
        if d == 0:
            raise ValueError("power sums are indexed by d > 0")
        for i in range(n):
            terms[(0,) * i + (d,)] = 1
    else:
        raise ValueError(f"unknown generator kind {kind!r}")
    return MultiPoly(terms, n)


def generator_product(kind: str, beta: Iterable[int], n: int) -> MultiPoly:
    """``e_beta``, ``h_beta`` or ``p_beta`` as a product over the parts of ``beta``."""
    out = MultiPoly.constant(1, n)
    for b in Composition(beta):
        if b == 0:
            if kind == "p":
                raise ValueError("power sums are indexed by d > 0")
            continue
        out = out * generator_poly(kind, b, n)
    return out


def _truncate(p: MultiPoly, var: int, max_exp: int) -> MultiPoly:
    return MultiPoly._raw({e: c for e, c in p.terms.items() if (e[var] if var < len(e) else 0) <= max_exp}, p.nvars)


def series_truncation_check(kind: str, n: int, D: int) -> bool:
    """Compare the generating series of ``e``, ``h`` or ``p`` with the generators, mod T^(D+1).

    X_i lives at variable 2i and T at variable 1.
    """
    if D < 0:
        raise ValueError("truncation degree must be nonnegative")
    t = 1
    nv = 2 * n
    T = MultiPoly.variable(t, nv)
    xs = [MultiPoly.variable(2 * i, nv) for i in range(n)]
    if kind == "e":
        series = MultiPoly.constant(1, nv)
        for x in xs:
            series = _truncate(series * (1 + x * T), t, D)
    elif kind == "h":
        series = MultiPoly.constant(1, nv)
        for x in xs:
            geom = sum(((x * T) ** k for k in range(D + 1)), MultiPoly(nvars=nv))
            series = _truncate(series * geom, t, D)
    elif kind == "p":
        series = MultiPoly(nvars=nv)
        for x in xs:
            series = series + sum(((x * T) ** k for k in range(1, D + 1)), MultiPoly(nvars=nv))
    else:
        raise ValueError(f"unknown generator kind {kind!r}")
    for d in range(D + 1):
        coeff = MultiPoly(
            {e[:t] + (0,) + e[t + 1:]: c for e, c in series.terms.items() if (e[t] if t < len(e) else 0) == d},
            nv,
        )
        if kind == "p" and d == 0:
            expected = MultiPoly(nvars=nv)
        else:
            expected = spread(generator_poly(kind, d, n), 2)
        if coeff != expected:
            return False
    return True


def staircase(n: int) -> tuple[int, ...]:
    """``(n-1, n-2, ..., 1, 0)``."""
    return tuple(range(n - 1, -1, -1))


@lru_cache(maxsize=16)
def signed_permutations(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Every permutation of ``range(n)`` with its sign."""
    return tuple(
        (perm, -1 if inversion_count(perm, descending=False) % 2 else 1)
        for perm in itertools.permutations(range(n))
    )


def _fit(alpha: Iterable[int], n: int) -> tuple[int, ...]:
    alpha = Composition(alpha)
    if len(alpha) > n:
        raise ValueError(f"{tuple(alpha)} has a nonzero part at index >= {n}")
    return alpha.padded(n)


def alternant(alpha: Iterable[int], n: int) -> MultiPoly:
    """Signed orbit sum of X^alpha over Sym_n."""
    a = _fit(alpha, n)
    if len(set(a)) < n:
        return MultiPoly(nvars=n)
    terms = {}
    for perm, sign in signed_permutations(n):
        terms[_canon(a[j] for j in perm)] = sign
    return MultiPoly._raw(terms, n)


def alternant_det(alpha: Iterable[int], n: int) -> MultiPoly:
    """``det(X_i^{alpha_j})`` by fraction-free elimination; an independent check on :func:`alternant`."""
    a = _fit(alpha, n)
    m = [[MultiPoly.monomial((0,) * i + (a[j],), 1, n) for j in range(n)] for i in range(n)]
    return _bareiss(m, n)


def _bareiss(m: list[list[MultiPoly]], n: int) -> MultiPoly:
    if n == 0:
        return MultiPoly.constant(1)
    sign, prev = 1, MultiPoly.constant(1, n)
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((r for r in range(k + 1, n) if m[r][k]), None)
            if swap is None:
                return MultiPoly(nvars=n)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                q = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev)
                assert q is not None, "Bareiss step must divide exactly"
                m[i][j] = q
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


@lru_cache(maxsize=32)
def vandermonde(n: int) -> MultiPoly:
    return alternant(staircase(n), n)


def vandermonde_product(n: int) -> MultiPoly:
    """``prod_{i<j} (X_i - X_j)`` multiplied out."""
    out = MultiPoly.constant(1, n)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (MultiPoly.variable(i, n) - MultiPoly.variable(j, n))
    return out


def exact_divide(p: MultiPoly, q: MultiPoly) -> Optional[MultiPoly]:
    """``r`` with ``p == q * r`` if one exists over the integers, else None."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    n = max(p.nvars, q.nvars)
    if not p:
        return MultiPoly(nvars=n)
    layout = kernels.Packing.for_degree(n, max(p.degree(), q.degree()))
    quot = kernels.divexact(layout.pack_terms(p.terms), layout.pack_terms(q.terms), layout)
    if quot is None:
        return None
    return MultiPoly._raw(layout.unpack_terms(quot), n)


@lru_cache(maxsize=4096)
def _schur_poly(alpha: tuple[int, ...], n: int) -> MultiPoly:
    if len(alpha) > n:
        return MultiPoly(nvars=n)
    delta = staircase(n)
    shifted = tuple(delta[i] + alpha[i] if i < len(alpha) else delta[i] for i in range(n))
    q = exact_divide(alternant(shifted, n), vandermonde(n))
    assert q is not None, "alternants are divisible by the Vandermonde determinant"
    return q


def schur_poly(alpha: Iterable[int], n: int) -> MultiPoly:
    """``s_alpha[X_n] = a_{delta_n + alpha} / a_{delta_n}``, or 0 when alpha is not in N^n."""
    return _schur_poly(tuple(Composition(alpha)), n)


