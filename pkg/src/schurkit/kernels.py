"""Backend selection for the sparse polynomial kernels.

The compiled extension is used when it imported and the packed keys fit in
64 bits; on OverflowError the pure-Python kernel reruns the operation with
arbitrary-precision integers.  Set ``SCHURKIT_PURE_PYTHON=1`` to force the
fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from . import _pykernels

_native = None
if not os.environ.get("SCHURKIT_PURE_PYTHON"):
    try:
        from . import _ckernels as _native
    except ImportError:
        _native = None

BACKEND = "cython" if _native is not None else "python"


@dataclass(frozen=True)
class Packing:
    """Layout for packing exponent vectors of ``nvars`` variables.

    ``width`` bits per field; one extra field on top holds the total
    degree, so integer order on keys is graded lexicographic order.
    """

    nvars: int
    width: int

    @classmethod
    def for_degree(cls, nvars: int, max_degree: int) -> "Packing":
        width = 8
        while max_degree >= 1 << (width - 1):
            width *= 2
        return cls(nvars, width)

    @property
    def guard(self) -> int:
        g = 1 << (self.width - 1)
        return sum(g << (f * self.width) for f in range(self.nvars + 1))

    @property
    def native_ok(self) -> bool:
        return _native is not None and (self.nvars + 1) * self.width <= 64

    def pack(self, exps) -> int:
        w = self.width
        key = sum(exps)
        for i in range(self.nvars):
            key = (key << w) | (exps[i] if i < len(exps) else 0)
        return key

    def unpack(self, key: int) -> tuple[int, ...]:
        w, mask = self.width, (1 << self.width) - 1
        out = [0] * self.nvars
        for i in range(self.nvars - 1, -1, -1):
            out[i] = key & mask
            key >>= w
        end = self.nvars
        while end and out[end - 1] == 0:
            end -= 1
        return tuple(out[:end])

    def pack_terms(self, terms) -> dict[int, int]:
        return {self.pack(e): c for e, c in terms.items()}

    def unpack_terms(self, packed) -> dict[tuple[int, ...], int]:
        return {self.unpack(k): c for k, c in packed.items()}


def mul(a: dict, b: dict, layout: Packing) -> dict:
    if layout.native_ok:
        try:
            return _native.mul(a, b)
        except OverflowError:
            pass
    return _pykernels.mul(a, b)


def divexact(p: dict, q: dict, layout: Packing):
    if layout.native_ok:
        try:
            return _native.divexact(p, q, layout.guard)
        except OverflowError:
            pass
    return _pykernels.divexact(p, q, layout.guard)
