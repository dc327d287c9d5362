"""The ring of symmetric functions, stored in the Schur basis.

Conversions go through polynomials in finitely many variables: an element
of degree d is realised in at least d variables, multiplied by the
Vandermonde determinant, and read off on the alternant basis.  Because
Schur functions are orthonormal, the scalar product and the normalisation
of ``s_alpha`` for arbitrary compositions are cheap in this basis.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Optional

from .polynomials import (
    MultiPoly,
    generator_product,
    is_symmetric,
    monomial_symmetric,
    schur_poly,
    staircase,
)
from .tableaux import count_matrices
from .shapes import (
    Composition,
    Partition,
    beta_window,
    contains,
    format_composition,
    inversion_count,
    partitions,
)

__all__ = [
    "SymFunc",
    "SignedPartition",
    "normalize_s",
    "schur_expand",
    "basis_element",
    "basis_by_polynomial",
    "multiply",
    "scalar",
    "skew_schur",
    "kostka",
    "h_to_schur_table",
    "e_to_schur_table",
    "MAX_TABLE_DEGREE",
]

MAX_TABLE_DEGREE = int(os.environ.get("SCHURKIT_MAX_DEGREE", "12"))


class SymFunc:
    """Finite integer combination of Schur functions ``s_lambda``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Iterable[int], int]] = None):
        clean: dict[Partition, int] = {}
        for lam, c in (terms or {}).items():
            lam = Partition(lam)
            clean[lam] = clean.get(lam, 0) + int(c)
        self._terms = {lam: c for lam, c in clean.items() if c}

    @classmethod
    def schur(cls, lam: Iterable[int]) -> "SymFunc":
        return cls({Partition(lam): 1})

    @classmethod
    def one(cls) -> "SymFunc":
        return cls({Partition(): 1})

    @property
    def terms(self) -> Mapping[Partition, int]:
        return self._terms

    def coeff(self, lam: Iterable[int]) -> int:
        return self._terms.get(Partition(lam), 0)

    def degree(self) -> Optional[int]:
        """Largest degree with a nonzero coefficient; None for zero."""
        return max((lam.size for lam in self._terms), default=None)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "SymFunc") -> "SymFunc":
        out = dict(self._terms)
        for lam, c in other._terms.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunc(out)

    def __neg__(self) -> "SymFunc":
        return SymFunc({lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __mul__(self, other) -> "SymFunc":
        if isinstance(other, int):
            return SymFunc({lam: c * other for lam, c in self._terms.items()})
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def realize(self, n: int) -> MultiPoly:
        """Image in the symmetric polynomials of ``n`` variables."""
        out = MultiPoly(nvars=n)
        for lam, c in self._terms.items():
            out = out + schur_poly(lam, n) * c
        return out

    def sorted_terms(self) -> list[tuple[Partition, int]]:
        """Terms in reverse lexicographic order of the partitions."""
        return sorted(self._terms.items(), key=lambda t: tuple(t[0]), reverse=True)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for k, (lam, c) in enumerate(self.sorted_terms()):
            name = f"s[{format_composition(lam)}]"
            body = name if c == 1 else f"{abs(c)}*{name}" if k else f"{c}*{name}"
            if k == 0:
                pieces.append(body)
            else:
                pieces.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"SymFunc({str(self)!r})"

    def to_json(self) -> dict:
        return {"terms": [{"lambda": list(lam), "coeff": c} for lam, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data) -> "SymFunc":
        if isinstance(data, str):
            data = json.loads(data)
        out: dict[Partition, int] = {}
        for t in data["terms"]:
            lam = Partition(t["lambda"])
            out[lam] = out.get(lam, 0) + int(t["coeff"])
        return cls(out)


@dataclass(frozen=True)
class SignedPartition:
    """``s_alpha`` normalised: 0, or ``sign * s_partition``."""

    sign: int
    partition: Optional[Partition] = None

    def __post_init__(self):
        if self.sign not in (-1, 0, 1) or (self.sign == 0) != (self.partition is None):
            raise ValueError(f"inconsistent signed partition {self.sign}, {self.partition}")

    def as_symfunc(self) -> SymFunc:
        if self.sign == 0:
            return SymFunc()
        return SymFunc({self.partition: self.sign})


def normalize_s(alpha: Iterable[int]) -> SignedPartition:
    """Rewrite ``s_alpha`` as 0 or ``±s_lambda`` by sorting the beta sequence of ``alpha``.

    Beyond the stored parts the beta sequence is ``-1-i``, below every
    stored value, so only the stored window needs sorting.
    """
    beta = beta_window(Composition(alpha)).window
    if len(set(beta)) < len(beta):
        return SignedPartition(0)
    ordered = sorted(beta, reverse=True)
    sign = -1 if inversion_count(beta) % 2 else 1
    return SignedPartition(sign, Partition(b + 1 + i for i, b in enumerate(ordered)))


def _alternant_coeff(coeff: Callable[[tuple], int], lam: Partition, n: int) -> int:
    # Coefficient of X^(delta+lam) in p * Delta_n, where coeff(e) is the
    # coefficient of X^e in p.  Only Vandermonde terms X^v with
    # v <= delta+lam contribute; v is built from the last variable up,
    # where the bound is tightest.
    target = [d + lam[i] for i, d in enumerate(staircase(n))]
    used = [False] * n
    v = [0] * n
    total = 0

    def rec(i):
        nonlocal total
        if i < 0:
            c = coeff(tuple(t - x for t, x in zip(target, v)))
            if c:
                total += -c if inversion_count(v) % 2 else c
            return
        for x in range(min(target[i], n - 1), -1, -1):
            if not used[x]:
                used[x] = True
                v[i] = x
                rec(i - 1)
                used[x] = False

    rec(n - 1)
    return total


def schur_expand(p: MultiPoly, n: int) -> SymFunc:
    """Schur coordinates of a symmetric polynomial in ``n`` variables.

    Requires ``n`` at least the degree of ``p`` so that no partition of an
    occurring degree is lost.
    """
    if any(len(e) > n for e in p.terms):
        raise ValueError(f"polynomial uses more than {n} variables")
    if not is_symmetric(p, n):
        raise ValueError("schur_expand needs a symmetric polynomial")
    degrees = {sum(e) for e in p.terms}
    if degrees and max(degrees) > n:
        raise ValueError(f"{n} variables cannot represent degree {max(degrees)} faithfully")
    return _expand(p, n)


def _expand(p: MultiPoly, n: int) -> SymFunc:
    # Caller guarantees every s_lam in the answer has at most n parts.
    degrees = {sum(e) for e in p.terms}
    out = {}
    for d in sorted(degrees):
        for lam in partitions(d, max_len=n):
            c = _alternant_coeff(p.coeff, lam, n)
            if c:
                out[lam] = c
    return SymFunc(out)


@lru_cache(maxsize=None)
def _power_count(remaining: tuple[int, ...], parts: tuple[int, ...]) -> int:
    # Ways to send each part to a row so that row i receives remaining[i].
    if not parts:
        return 0 if any(remaining) else 1
    b, total = parts[0], 0
    for i, r in enumerate(remaining):
        if r >= b:
            rest = remaining[:i] + (r - b,) + remaining[i + 1:]
            total += _power_count(tuple(sorted((x for x in rest if x), reverse=True)), parts[1:])
    return total


def _monomial_coeff(kind: str, lam: Partition) -> Callable[[tuple], int]:
    """Coefficient of X^e in the realised m_lam, e_lam, h_lam or p_lam.

    These polynomials are symmetric, so only the sorted exponent matters:
    it is 1 or 0 for m, the number of binary (e) or natural (h) matrices
    with row sums e and column sums lam, and for p the number of ways to
    place the parts of lam into rows with sums e.
    """
    def sorted_key(e):
        return tuple(sorted((x for x in e if x), reverse=True))

    if kind == "m":
        target = tuple(lam)
        return lambda e: int(sorted_key(e) == target)
    if kind in ("e", "h"):
        return lambda e: count_matrices(sorted_key(e), lam, kind == "e")
    return lambda e: _power_count(sorted_key(e), tuple(lam))


@lru_cache(maxsize=None)
def _basis(kind: str, lam: Partition) -> SymFunc:
    # Realised at |lam| + 1 variables.  The polynomial is never expanded:
    # the alternant extraction only reads its coefficients.
    n = lam.size + 1
    coeff = _monomial_coeff(kind, lam)
    out = {}
    for nu in partitions(lam.size):
        c = _alternant_coeff(coeff, nu, n)
        if c:
            out[nu] = c
    return SymFunc(out)


def basis_by_polynomial(kind: str, index: Iterable[int], n: Optional[int] = None) -> SymFunc:
    """Reference path for :func:`basis_element`: expand the polynomial in
    ``n`` variables (default ``|index| + 1``) and call :func:`schur_expand`."""
    lam = Partition(sorted(Composition(index), reverse=True))
    n = lam.size + 1 if n is None else n
    if kind == "m":
        poly = monomial_symmetric(lam, n)
    else:
        poly = generator_product(kind, lam, n)
    return schur_expand(poly, n)


def basis_element(kind: str, index: Iterable[int]) -> SymFunc:
    """``m``, ``e``, ``h``, ``p`` or ``s`` indexed by a composition, in Schur coordinates.

    ``m``, ``e``, ``h`` and ``p`` depend only on the sorted index; ``s``
    goes through :func:`normalize_s`.
    """
    alpha = Composition(index)
    if kind == "s":
        return normalize_s(alpha).as_symfunc()
    if kind not in ("m", "e", "h", "p"):
        raise ValueError(f"unknown basis kind {kind!r}")
    if kind == "p" and 0 in alpha:
        raise ValueError("power sums are indexed by positive parts")
    return _basis(kind, Partition(sorted(alpha, reverse=True)))


@lru_cache(maxsize=None)
def _schur_product(lam: Partition, mu: Partition) -> SymFunc:
    # Every s_nu in s_lam * s_mu has at most len(lam) + len(mu) parts, and
    # restricting to that many variables keeps exactly those s_nu.
    n = len(lam) + len(mu)
    return _expand(schur_poly(lam, n) * schur_poly(mu, n), n)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in the ring of symmetric functions.

    Each pair of Schur terms is realised in ``len(lam) + len(mu)`` variables,
    multiplied, and expanded back; pair products are cached.
    """
    out: dict[Partition, int] = {}
    for lam, a in f.terms.items():
        for mu, b in g.terms.items():
            key = (lam, mu) if tuple(lam) <= tuple(mu) else (mu, lam)
            for nu, c in _schur_product(*key).terms.items():
                out[nu] = out.get(nu, 0) + a * b * c
    return SymFunc(out)


def scalar(f: SymFunc, g: SymFunc) -> int:
    return sum(c * g.coeff(lam) for lam, c in f.terms.items())


@lru_cache(maxsize=None)
def _skew(lam: Partition, mu: Partition) -> SymFunc:
    if not contains(mu, lam):
        return SymFunc()
    out = {}
    for nu in partitions(lam.size - mu.size):
        if not contains(nu, lam):
            continue
        c = multiply(SymFunc.schur(mu), SymFunc.schur(nu)).coeff(lam)
        if c:
            out[nu] = c
    return SymFunc(out)


def skew_schur(lam: Iterable[int], mu: Iterable[int]) -> SymFunc:
    """``s_{lam/mu}``: the coefficient of ``s_nu`` is ``<s_mu s_nu, s_lam>``."""
    return _skew(Partition(lam), Partition(mu))


def kostka(lam: Iterable[int], mu: Iterable[int], alpha: Iterable[int], primed: bool = False) -> int:
    """``<h_alpha, s_{lam/mu}>``, or ``<e_alpha, s_{lam/mu}>`` when ``primed``."""
    return scalar(basis_element("e" if primed else "h", alpha), skew_schur(lam, mu))


def _table(kind: str, d: int) -> dict[Partition, dict[Partition, int]]:
    if d < 0 or d > MAX_TABLE_DEGREE:
        raise ValueError(f"table degree must lie in [0, {MAX_TABLE_DEGREE}]")
    return {alpha: dict(basis_element(kind, alpha).terms) for alpha in partitions(d)}


def h_to_schur_table(d: int) -> dict[Partition, dict[Partition, int]]:
    """Schur expansion of every ``h_alpha`` with ``alpha`` a partition of ``d``."""
    return _table("h", d)


def e_to_schur_table(d: int) -> dict[Partition, dict[Partition, int]]:
    return _table("e", d)
