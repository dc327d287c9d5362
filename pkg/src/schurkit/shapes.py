"""Compositions, partitions and the relations between Young diagrams.

Everything here is an immutable value.  Compositions are stored without
trailing zeros and read as zero beyond their stored prefix, so
``Composition((3, 1, 0)) == Composition((3, 1))`` and ``alpha[10] == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "Composition",
    "Partition",
    "SkewShape",
    "BetaSequence",
    "EdgeSequence",
    "Permutation",
    "SizeMismatchError",
    "ones",
    "inversion_count",
    "partitions",
    "compositions",
    "sort_to_partition",
    "apply_permutation",
    "conjugate",
    "contains",
    "strip_check",
    "dominance_leq",
    "beta_window",
    "edge_sequence",
    "partition_from_edges",
    "ribbon_check",
    "ribbon_height_by_diagram",
    "parse_composition",
    "parse_partition",
    "parse_skew",
    "format_composition",
]


class SizeMismatchError(ValueError):
    """Raised when two partitions must have the same size but do not."""


class Composition(tuple):
    """A finitely supported sequence of natural numbers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if type(parts) is cls:
            return parts
        parts = tuple(map(int, parts))
        if parts and min(parts) < 0:
            raise ValueError(f"negative part in {parts}")
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        return tuple.__new__(cls, parts[:end])

    @classmethod
    def _trusted(cls, parts: tuple):
        # No validation: ``parts`` is already a valid, trimmed tuple.
        return tuple.__new__(cls, parts)

    def __getitem__(self, i):
        if isinstance(i, int) and i >= len(self):
            return 0
        return tuple.__getitem__(self, i)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({tuple(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    def is_binary(self) -> bool:
        return all(p < 2 for p in self)

    def padded(self, n: int) -> tuple[int, ...]:
        """The first ``n`` parts as a plain tuple; fails if a nonzero part is cut off."""
        if len(self) > n:
            raise ValueError(f"{self!r} has a nonzero part at index >= {n}")
        return tuple(self) + (0,) * (n - len(self))

    def __add__(self, other):
        a, b = tuple(self), tuple(other)
        n = max(len(a), len(b))
        a, b = a + (0,) * (n - len(a)), b + (0,) * (n - len(b))
        return Composition(map(int.__add__, a, b))

    def __sub__(self, other):
        a, b = tuple(self), tuple(other)
        n = max(len(a), len(b))
        a, b = a + (0,) * (n - len(a)), b + (0,) * (n - len(b))
        return Composition(map(int.__sub__, a, b))


class Partition(Composition):
    """A weakly decreasing composition."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if type(parts) is cls:
            return parts
        self = super().__new__(cls, parts)
        t = tuple(self)
        for i in range(len(t) - 1):
            if t[i] < t[i + 1]:
                raise ValueError(f"parts of {tuple(self)} are not weakly decreasing")
        return self

    @property
    def t(self) -> "Partition":
        return conjugate(self)


def ones(d: int) -> Partition:
    """The binary partition 1^d."""
    return Partition((1,) * d)


def partitions(d: int, max_part: Optional[int] = None, max_len: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of ``d`` in decreasing lexicographic order."""
    if max_part is None:
        max_part = d
    if max_len is None:
        max_len = d

    def rec(rest, bound, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, bound), 0, -1):
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    for p in rec(d, max_part, max_len):
        yield Partition(p)


def compositions(d: int, length: int, max_part: Optional[int] = None) -> Iterator[Composition]:
    """All elements of N^length summing to ``d``, in lexicographic order of the padded vectors."""
    if max_part is None:
        max_part = d

    def rec(rest, slots):
        if slots == 0:
            if rest == 0:
                yield ()
            return
        for first in range(0, min(rest, max_part) + 1):
            for tail in rec(rest - first, slots - 1):
                yield (first,) + tail

    for c in rec(d, length):
        yield Composition(c)


def inversion_count(seq: Sequence[int], descending: bool = True) -> int:
    """Count pairs that a stable sort into the given direction has to swap."""

    def rec(xs):
        if len(xs) < 2:
            return list(xs), 0
        mid = len(xs) // 2
        left, a = rec(xs[:mid])
        right, b = rec(xs[mid:])
        merged, count = [], a + b
        i = j = 0
        while i < len(left) and j < len(right):
            out_of_order = right[j] > left[i] if descending else right[j] < left[i]
            if out_of_order:
                merged.append(right[j])
                count += len(left) - i
                j += 1
            else:
                merged.append(left[i])
                i += 1
        merged.extend(left[i:])
        merged.extend(right[j:])
        return merged, count

    return rec(list(seq))[1]


@dataclass(frozen=True)
class Permutation:
    """A permutation of N fixing every index at or beyond ``len(images)``.

    ``images[i]`` is the image of ``i``.
    """

    images: tuple[int, ...] = ()

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a bijection of range({len(images)})")
        end = len(images)
        while end and images[end - 1] == end - 1:
            end -= 1
        object.__setattr__(self, "images", images[:end])

    @classmethod
    def identity(cls) -> "Permutation":
        return cls(())

    @classmethod
    def transposition(cls, i: int, j: int) -> "Permutation":
        images = list(range(max(i, j) + 1))
        images[i], images[j] = j, i
        return cls(tuple(images))

    @classmethod
    def cycle(cls, *elems: int) -> "Permutation":
        """The cyclic permutation sending ``elems[k]`` to ``elems[k+1]``."""
        if len(set(elems)) != len(elems):
            raise ValueError(f"repeated element in cycle {elems}")
        images = list(range(max(elems, default=-1) + 1))
        for k, e in enumerate(elems):
            images[e] = elems[(k + 1) % len(elems)]
        return cls(tuple(images))

    def __call__(self, i: int) -> int:
        return self.images[i] if i < len(self.images) else i

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def sign(self) -> int:
        return -1 if inversion_count(self.images, descending=False) % 2 else 1


def sort_to_partition(alpha: Iterable[int], signed: bool = True) -> tuple[Partition, int]:
    """Return ``alpha^+`` together with the sign of a sorting permutation.

    The sign is the parity of the stable descending sort of the stored
    parts.  Pass ``signed=False`` to skip that computation; the sign is
    then reported as 0.
    """
    alpha = Composition(alpha)
    lam = Partition(sorted(alpha, reverse=True))
    if not signed:
        return lam, 0
    return lam, (-1 if inversion_count(alpha) % 2 else 1)


def apply_permutation(sigma: Permutation, alpha: Iterable[int]) -> Composition:
    """``sigma(alpha)_i = alpha_{sigma^{-1}(i)}``."""
    if not isinstance(sigma, Permutation):
        sigma = Permutation(tuple(sigma))
    alpha = Composition(alpha)
    inv = sigma.inverse()
    n = max(len(alpha), len(sigma.images))
    return Composition(alpha[inv(i)] for i in range(n))


def conjugate(lam: Iterable[int]) -> Partition:
    return _conjugate(Partition(lam))


@lru_cache(maxsize=1 << 16)
def _conjugate(lam: Partition) -> Partition:
    if not lam:
        return lam
    return Partition._trusted(tuple(sum(1 for p in lam if p > j) for j in range(lam[0])))


def contains(mu: Iterable[int], lam: Iterable[int]) -> bool:
    """Diagram inclusion ``[mu] ⊆ [lam]``."""
    mu, lam = Partition(mu), Partition(lam)
    return len(mu) <= len(lam) and all(a <= b for a, b in zip(mu, lam))


def strip_check(mu: Iterable[int], lam: Iterable[int], kind: str) -> bool:
    """Whether ``lam/mu`` is a horizontal or a vertical strip."""
    mu, lam = Partition(mu), Partition(lam)
    if not contains(mu, lam):
        return False
    m = tuple(mu) + (0,) * (len(lam) - len(mu))
    if kind == "vertical":
        return all(b - a < 2 for a, b in zip(m, lam))
    if kind == "horizontal":
        return all(b <= a for a, b in zip(m, lam[1:]))
    raise ValueError(f"unknown strip kind {kind!r}")


def dominance_leq(mu: Iterable[int], lam: Iterable[int]) -> bool:
    mu, lam = Partition(mu), Partition(lam)
    if mu.size != lam.size:
        raise SizeMismatchError(f"dominance compares partitions of equal size, got {mu.size} and {lam.size}")
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += mu[i]
        b += lam[i]
        if a > b:
            return False
    return True


@dataclass(frozen=True)
class BetaSequence:
    """Prefix of the sequence ``alpha_i - 1 - i``; beyond the window it continues as ``-1 - i``."""

    window: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.window[i] if i < len(self.window) else -1 - i

    def __len__(self) -> int:
        return len(self.window)


def beta_window(alpha: Iterable[int], length: Optional[int] = None) -> BetaSequence:
    alpha = Composition(alpha)
    if length is None:
        length = len(alpha)
    if length < len(alpha):
        raise ValueError(f"window of length {length} is shorter than {alpha!r}")
    return BetaSequence(tuple(alpha[i] - 1 - i for i in range(length)))


@dataclass(frozen=True)
class EdgeSequence:
    """A doubly infinite bit sequence, stored on the window starting at ``offset``.

    Bits left of the window are 1 and bits right of it are 0.
    """

    offset: int
    bits: str

    def __post_init__(self):
        if set(self.bits) - {"0", "1"}:
            raise ValueError(f"edge word {self.bits!r} contains characters other than 0 and 1")

    @property
    def stop(self) -> int:
        """First coordinate past the stored window."""
        return self.offset + len(self.bits)

    def bit(self, d: int) -> int:
        if d < self.offset:
            return 1
        if d >= self.stop:
            return 0
        return int(self.bits[d - self.offset])

    def ones(self) -> list[int]:
        """Stored 1-coordinates, decreasing."""
        return [d for d in range(self.stop - 1, self.offset - 1, -1) if self.bit(d)]

    def zeros(self) -> list[int]:
        """Stored 0-coordinates, increasing."""
        return [d for d in range(self.offset, self.stop) if not self.bit(d)]

    def charge(self) -> int:
        """Ones at nonnegative coordinates minus zeros at negative ones; 0 exactly for partitions."""
        lo, hi = min(self.offset, 0), max(self.stop, 0)
        return sum(self.bit(d) for d in range(0, hi)) - sum(1 - self.bit(d) for d in range(lo, 0))

    def to_text(self) -> str:
        return f"@{self.offset}:{self.bits}"

    @classmethod
    def parse(cls, text: str) -> "EdgeSequence":
        text = text.strip()
        if not text.startswith("@") or ":" not in text:
            raise ValueError(f"edge sequence must look like '@-9:1101...', got {text!r}")
        off, bits = text[1:].split(":", 1)
        return cls(int(off), bits)


def edge_sequence(lam: Iterable[int], lo: Optional[int] = None, hi: Optional[int] = None) -> EdgeSequence:
    """Edge sequence of ``lam`` on the inclusive coordinate window ``[lo, hi]``.

    The default window ``[-(len+1), lam_0+1]`` holds every non-tail bit; a
    caller-supplied window may be wider but not narrower.
    """
    lam = Partition(lam)
    need_lo, need_hi = -len(lam), lam[0] - 1
    if lo is None:
        lo = -(len(lam) + 1)
    if hi is None:
        hi = lam[0] + 1
    if lo > need_lo or hi < need_hi:
        raise ValueError(f"window [{lo}, {hi}] must contain [{need_lo}, {need_hi}] for {lam!r}")
    beta = set(beta_window(lam, max(len(lam), -lo)).window)
    bits = "".join("1" if d in beta or d < -len(lam) else "0" for d in range(lo, hi + 1))
    return EdgeSequence(lo, bits)


def partition_from_edges(edges: EdgeSequence) -> Partition:
    if edges.charge() != 0:
        raise ValueError(f"edge word {edges.to_text()} does not come from a partition (charge {edges.charge()})")
    lo, hi = min(edges.offset, 0), max(edges.stop, 0)
    ones = [d for d in range(hi - 1, lo - 1, -1) if edges.bit(d)]
    return Partition(d + 1 + i for i, d in enumerate(ones))


def ribbon_check(mu: Iterable[int], lam: Iterable[int], k: int) -> Optional[int]:
    """Height of ``lam/mu`` if it is a ``k``-ribbon, else None.

    One beta value of ``mu`` moves up by exactly ``k`` and all others stay;
    the height is the difference of the two row indices involved.
    """
    mu, lam = Partition(mu), Partition(lam)
    if k <= 0:
        raise ValueError("ribbon length must be positive")
    length = max(len(mu), len(lam))
    bm = beta_window(mu, length).window
    bl = beta_window(lam, length).window
    gone = set(bm) - set(bl)
    new = set(bl) - set(bm)
    if len(gone) != 1 or len(new) != 1:
        return None
    (x,), (y,) = gone, new
    if x + k != y:
        return None
    return bm.index(x) - bl.index(y)


def ribbon_height_by_diagram(mu: Iterable[int], lam: Iterable[int], k: int) -> Optional[int]:
    """Same contract as :func:`ribbon_check`, read straight off the cells of the diagram."""
    mu, lam = Partition(mu), Partition(lam)
    if not contains(mu, lam) or lam.size - mu.size != k:
        return None
    cells = [(i, j) for i in range(len(lam)) for j in range(mu[i], lam[i])]
    by_diag = {j - i: i for i, j in cells}
    if len(by_diag) != k:
        return None
    lo, hi = min(by_diag), max(by_diag)
    if hi - lo != k - 1:
        return None
    return by_diag[lo] - by_diag[hi]


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not contains(self.inner, self.outer):
            raise ValueError(f"{tuple(self.inner)} is not contained in {tuple(self.outer)}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(len(self.outer)) for j in range(self.inner[i], self.outer[i])]

    def transpose(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))

    def to_text(self) -> str:
        if not self.inner:
            return format_composition(self.outer)
        return f"{format_composition(self.outer)}/{format_composition(self.inner)}"


def parse_composition(text: str) -> Composition:
    text = text.strip()
    if not text:
        return Composition()
    try:
        return Composition(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated naturals, got {text!r}") from None


def parse_partition(text: str) -> Partition:
    return Partition(parse_composition(text))


def parse_skew(text: str) -> SkewShape:
    outer, _, inner = text.partition("/")
    return SkewShape(parse_partition(outer), parse_partition(inner))


def format_composition(alpha: Iterable[int]) -> str:
    return ",".join(str(p) for p in alpha)
