"""Natural-number matrices with prescribed margins, semistandard tableaux
as chains of partitions, and the integral/binary matrix encodings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .shapes import Composition, Partition, SkewShape, conjugate, strip_check

__all__ = [
    "NatMatrix",
    "SemistandardTableau",
    "StripError",
    "row_sums",
    "col_sums",
    "enumerate_matrices",
    "count_matrices",
    "tableau_from_chain",
    "enumerate_ssyt",
    "enumerate_ssyt_bounded",
    "count_ssyt",
    "integral_encoding",
    "binary_encoding",
    "decode_integral",
    "decode_binary",
    "transpose_tableau",
    "render_tableau",
]


class StripError(ValueError):
    """A chain step is not the required strip; ``index`` names the failing step."""

    def __init__(self, index: int, message: str):
        super().__init__(f"step {index}: {message}")
        self.index = index


class NatMatrix:
    """Finitely supported matrix with natural entries.

    Entries are indexed by ``(row, col)``; unstored entries are 0.
    """

    __slots__ = ("_entries", "binary")

    def __init__(self, entries: Optional[Mapping[tuple[int, int], int]] = None, binary: bool = False):
        clean = {}
        for (i, j), v in (entries or {}).items():
            v = int(v)
            if v < 0 or i < 0 or j < 0:
                raise ValueError(f"negative index or entry at {(i, j)}")
            if binary and v > 1:
                raise ValueError(f"binary matrix has entry {v} at {(i, j)}")
            if v:
                clean[(i, j)] = v
        self._entries = clean
        self.binary = binary

    @classmethod
    def _trusted(cls, entries: dict, binary: bool = False) -> "NatMatrix":
        # No validation: ``entries`` maps index pairs to positive naturals.
        self = object.__new__(cls)
        self._entries = entries
        self.binary = binary
        return self

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], binary: bool = False) -> "NatMatrix":
        return cls({(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)}, binary)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self._entries.get(ij, 0)

    @property
    def entries(self) -> Mapping[tuple[int, int], int]:
        return self._entries

    @property
    def shape(self) -> tuple[int, int]:
        """Bounding box of the nonzero entries."""
        if not self._entries:
            return (0, 0)
        return (max(i for i, _ in self._entries) + 1, max(j for _, j in self._entries) + 1)

    def to_rows(self, nrows: Optional[int] = None, ncols: Optional[int] = None) -> list[list[int]]:
        r, c = self.shape
        r = r if nrows is None else max(r, nrows)
        c = c if ncols is None else max(c, ncols)
        return [[self[i, j] for j in range(c)] for i in range(r)]

    def transpose(self) -> "NatMatrix":
        return NatMatrix._trusted({(j, i): v for (i, j), v in self._entries.items()}, self.binary)

    def total(self) -> int:
        return sum(self._entries.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, NatMatrix):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(frozenset(self._entries.items()))

    def __repr__(self) -> str:
        return f"NatMatrix({self.to_text()!r}{', binary=True' if self.binary else ''})"

    def to_text(self) -> str:
        if not self._entries:
            return "0"
        return ";".join(",".join(str(v) for v in row) for row in self.to_rows())

    @classmethod
    def parse(cls, text: str, binary: bool = False) -> "NatMatrix":
        text = text.strip()
        if not text:
            return cls(binary=binary)
        try:
            rows = [[int(v) for v in row.split(",")] for row in text.split(";")]
        except ValueError:
            raise ValueError(f"matrix text must be ';'-separated rows of ','-separated naturals, got {text!r}") from None
        return cls.from_rows(rows, binary)


def _margin(m: NatMatrix, axis: int) -> Composition:
    sums: dict[int, int] = {}
    for ij, v in m.entries.items():
        k = ij[axis]
        sums[k] = sums.get(k, 0) + v
    if not sums:
        return Composition()
    return Composition._trusted(tuple(sums.get(k, 0) for k in range(max(sums) + 1)))


def row_sums(m: NatMatrix) -> Composition:
    return _margin(m, 0)


def col_sums(m: NatMatrix) -> Composition:
    return _margin(m, 1)


def _row_fillings(total: int, caps: Sequence[int], unit: bool) -> Iterator[tuple[int, ...]]:
    # Vectors v <= caps (entrywise, and <= 1 if unit) with sum(v) == total, lexicographic order.
    n = len(caps)
    suffix = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix[j] = suffix[j + 1] + (min(caps[j], 1) if unit else caps[j])
    out = [0] * n

    def rec(j, rest):
        if j == n:
            if rest == 0:
                yield tuple(out)
            return
        top = min(rest, caps[j], 1 if unit else rest)
        low = max(0, rest - suffix[j + 1])
        for v in range(low, top + 1):
            out[j] = v
            yield from rec(j + 1, rest - v)
        out[j] = 0

    yield from rec(0, total)


def enumerate_matrices(alpha: Iterable[int], beta: Iterable[int], binary: bool = False) -> Iterator[NatMatrix]:
    """Every matrix with row sums ``alpha`` and column sums ``beta``, each once.

    Rows are filled top to bottom; a row may only use what is left of each
    column sum, and for binary matrices a column needing more ones than
    there are rows left is pruned.  Output is in lexicographic order of the
    row-major entries.
    """
    alpha, beta = Composition(alpha), Composition(beta)
    if alpha.size != beta.size:
        return
    rows, ncols = len(alpha), len(beta)
    chosen: list[tuple[int, ...]] = []

    def rec(i, remaining):
        if i == rows:
            if not any(remaining):
                yield NatMatrix.from_rows(chosen, binary)
            return
        if binary and any(r > rows - i for r in remaining):
            return
        for row in _row_fillings(alpha[i], remaining, binary):
            chosen.append(row)
            yield from rec(i + 1, tuple(r - v for r, v in zip(remaining, row)))
            chosen.pop()

    yield from rec(0, tuple(beta.padded(ncols)))


def count_matrices(alpha: Iterable[int], beta: Iterable[int], binary: bool = False) -> int:
    """``|M(alpha, beta)|`` (or its binary version), by the same row recursion with memoised column state."""
    alpha, beta = Composition(alpha), Composition(beta)
    if alpha.size != beta.size:
        return 0
    return _count(tuple(alpha), tuple(beta), binary)


@lru_cache(maxsize=None)
def _count(alpha: tuple[int, ...], remaining: tuple[int, ...], binary: bool) -> int:
    if not alpha:
        return 0 if any(remaining) else 1
    if binary and any(r > len(alpha) for r in remaining):
        return 0
    total = 0
    for row in _row_fillings(alpha[0], remaining, binary):
        rest = tuple(sorted((r - v for r, v in zip(remaining, row) if r - v), reverse=True))
        total += _count(alpha[1:], rest, binary)
    return total


@dataclass(frozen=True)
class SemistandardTableau:
    """Chain of partitions joined by strips.

    ``mode`` is ``"col"`` for column-strict tableaux (horizontal strips)
    and ``"row"`` for row-strict ones (vertical strips).  The stored chain
    never ends in two equal partitions, except that a one-element chain is
    the empty-weight tableau.
    """

    chain: tuple[Partition, ...]
    mode: str = "col"

    def __post_init__(self):
        if self.mode not in ("col", "row"):
            raise ValueError(f"mode must be 'col' or 'row', got {self.mode!r}")
        chain = tuple(Partition(p) for p in self.chain)
        if not chain:
            raise ValueError("a tableau needs at least one partition")
        kind = "horizontal" if self.mode == "col" else "vertical"
        for i in range(len(chain) - 1):
            if not strip_check(chain[i], chain[i + 1], kind):
                raise StripError(i, f"{tuple(chain[i + 1])}/{tuple(chain[i])} is not a {kind} strip")
        end = len(chain)
        while end > 1 and chain[end - 1] == chain[end - 2]:
            end -= 1
        object.__setattr__(self, "chain", chain[:end])

    @classmethod
    def _trusted(cls, chain: tuple, mode: str) -> "SemistandardTableau":
        # Skips validation: ``chain`` holds Partitions joined by valid strips.
        end = len(chain)
        while end > 1 and chain[end - 1] == chain[end - 2]:
            end -= 1
        self = object.__new__(cls)
        object.__setattr__(self, "chain", tuple(chain[:end]))
        object.__setattr__(self, "mode", mode)
        return self

    @property
    def inner(self) -> Partition:
        return self.chain[0]

    @property
    def outer(self) -> Partition:
        return self.chain[-1]

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.outer, self.inner)

    @property
    def weight(self) -> Composition:
        return Composition(self.chain[i + 1].size - self.chain[i].size for i in range(len(self.chain) - 1))

    def entries(self) -> dict[tuple[int, int], int]:
        """Map each cell of the shape to its entry (the index of the strip holding it)."""
        out = {}
        for k in range(len(self.chain) - 1):
            lo, hi = self.chain[k], self.chain[k + 1]
            for i in range(len(hi)):
                for j in range(lo[i], hi[i]):
                    out[(i, j)] = k
        return out

    def to_json(self) -> dict:
        return {"chain": [list(p) for p in self.chain], "mode": self.mode}

    @classmethod
    def from_json(cls, data) -> "SemistandardTableau":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(Partition(p) for p in data["chain"]), data.get("mode", "col"))


def tableau_from_chain(chain: Sequence[Iterable[int]], mode: str = "col") -> SemistandardTableau:
    return SemistandardTableau(tuple(Partition(p) for p in chain), mode)


def _horizontal_strips(mu: Partition, outer: Partition, size: int) -> list[Partition]:
    # All nu with mu <=h nu, nu inside outer and |nu/mu| == size.
    n = len(outer)
    caps = [min(outer[i], mu[i - 1]) - mu[i] if i else outer[0] - mu[0] for i in range(n)]
    found = []
    base = tuple(mu) + (0,) * (n - len(mu))
    for add in _row_fillings(size, caps, False):
        nu = [b + v for b, v in zip(base, add)]
        while nu and not nu[-1]:
            nu.pop()
        found.append(Partition._trusted(tuple(nu)))
    return sorted(found)


def enumerate_ssyt(shape: SkewShape, weight: Iterable[int]) -> Iterator[SemistandardTableau]:
    """Column-strict tableaux of ``shape`` and ``weight``, in lexicographic order of their chains."""
    weight = Composition(weight)
    if weight.size != shape.size:
        return
    outer = shape.outer
    chain = [shape.inner]

    def rec(i):
        if i == len(weight):
            if chain[-1] == outer:
                yield SemistandardTableau._trusted(tuple(chain), "col")
            return
        for nu in _horizontal_strips(chain[-1], outer, weight[i]):
            chain.append(nu)
            yield from rec(i + 1)
            chain.pop()

    yield from rec(0)


def enumerate_ssyt_bounded(shape: SkewShape, entries: int) -> Iterator[SemistandardTableau]:
    """Column-strict tableaux of ``shape`` with every entry below ``entries``, any weight.

    Each tableau appears once.  A column with ``c`` empty cells left needs
    at least ``c`` more strips, which prunes the search.
    """
    outer = shape.outer
    outer_t = conjugate(outer)
    chain = [shape.inner]

    def rec(i):
        mu = chain[-1]
        if mu == outer:
            yield SemistandardTableau._trusted(tuple(chain), "col")
            return
        if i == entries:
            return
        mu_t = conjugate(mu)
        if max(b - (mu_t[j] if j < len(mu_t) else 0) for j, b in enumerate(outer_t)) > entries - i:
            return
        for size in range(outer.size - mu.size + 1):
            for nu in _horizontal_strips(mu, outer, size):
                chain.append(nu)
                yield from rec(i + 1)
                chain.pop()

    yield from rec(0)


def count_ssyt(shape: SkewShape, weight: Iterable[int]) -> int:
    return sum(1 for _ in enumerate_ssyt(shape, weight))


def integral_encoding(t: SemistandardTableau) -> NatMatrix:
    """``M[i, j] = (chain[j+1] - chain[j])_i``: row i counts the entries j in row i of the tableau."""
    entries = {}
    chain = t.chain
    for j in range(len(chain) - 1):
        lo = chain[j]
        for i, b in enumerate(chain[j + 1]):
            v = b - (lo[i] if i < len(lo) else 0)
            if v:
                entries[(i, j)] = v
    return NatMatrix._trusted(entries)


def binary_encoding(t: SemistandardTableau) -> NatMatrix:
    """``M'[i, j] = (chain[i+1]^t - chain[i]^t)_j``: at most one entry i per column j."""
    if t.mode != "col":
        raise ValueError("the binary encoding is defined for column-strict tableaux")
    entries = {}
    conj = [conjugate(p) for p in t.chain]
    for i in range(len(conj) - 1):
        lo = conj[i]
        for j, b in enumerate(conj[i + 1]):
            v = b - (lo[j] if j < len(lo) else 0)
            if v:
                entries[(i, j)] = v
    return NatMatrix._trusted(entries, binary=True)


def _decode(steps: list, start: Partition, transposed: bool) -> SemistandardTableau:
    # Column-strict chains only.  Steps are nonnegative, so containment is
    # automatic.  Without transposing, a step adds step[i] cells to row i
    # and the new shape must be a partition whose row i+1 stays under the
    # old row i.  Transposed, a step adds step[j] <= 1 cells to column j,
    # which is a vertical strip in the conjugate as soon as the new column
    # lengths form a partition.
    current = tuple(conjugate(start) if transposed else start)
    chain = [start]
    for k, step in enumerate(steps):
        n = max(len(current), len(step))
        nxt = [(current[i] if i < len(current) else 0) + (step[i] if i < len(step) else 0) for i in range(n)]
        while nxt and not nxt[-1]:
            nxt.pop()
        for i in range(len(nxt) - 1):
            if nxt[i] < nxt[i + 1]:
                raise StripError(k, f"{tuple(nxt)} is not a partition")
            if not transposed and i < len(current) and nxt[i + 1] > current[i]:
                raise StripError(k, f"{tuple(nxt)}/{current} is not a horizontal strip")
            if not transposed and i >= len(current) and nxt[i + 1]:
                raise StripError(k, f"{tuple(nxt)}/{current} is not a horizontal strip")
        current = tuple(nxt)
        nu = Partition._trusted(current)
        chain.append(conjugate(nu) if transposed else nu)
    return SemistandardTableau._trusted(tuple(chain), "col")


def decode_integral(m: NatMatrix, inner: Iterable[int]) -> SemistandardTableau:
    """Rebuild a column-strict tableau from its integral encoding and its inner shape."""
    cols = m.shape[1]
    rows = m.to_rows()
    steps = [tuple(row[j] for row in rows) for j in range(cols)]
    return _decode(steps, Partition(inner), transposed=False)


def decode_binary(m: NatMatrix, inner: Iterable[int]) -> SemistandardTableau:
    if any(v > 1 for v in m.entries.values()):
        raise ValueError("a binary encoding has entries in {0, 1} only")
    steps = m.to_rows()
    return _decode(steps, Partition(inner), transposed=True)


def transpose_tableau(t: SemistandardTableau) -> SemistandardTableau:
    return SemistandardTableau._trusted(tuple(conjugate(p) for p in t.chain), "row" if t.mode == "col" else "col")


def render_tableau(t: SemistandardTableau, blank: str = "·") -> str:
    """Rows of entries, with ``blank`` for cells of the inner shape.

    Entries are written as single digits when all are below 10 and
    space-separated otherwise.
    """
    if t.mode != "col":
        raise ValueError("only column-strict tableaux are rendered")
    cells = t.entries()
    wide = any(v >= 10 for v in cells.values())
    lines = []
    for i in range(len(t.outer)):
        row = [blank] * t.inner[i] + [str(cells[(i, j)]) for j in range(t.inner[i], t.outer[i])]
        lines.append((" " if wide else "").join(row))
    return "\n".join(lines)
