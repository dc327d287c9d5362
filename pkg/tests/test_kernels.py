import itertools

import pytest
from hypothesis import given, strategies as st

from schurkit import _pykernels, kernels
from schurkit.kernels import Packing

native = kernels._native
needs_native = pytest.mark.skipif(native is None, reason="compiled kernels not built")

exps3 = st.tuples(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
terms3 = st.dictionaries(exps3, st.integers(-50, 50).filter(bool), max_size=8)


def grlex_key(e):
    return (sum(e), e)


class TestPacking:
    def test_width_grows_with_degree(self):
        assert Packing.for_degree(3, 127).width == 8
        assert Packing.for_degree(3, 128).width == 16
        # nine 8-bit fields no longer fit in 64 bits
        assert not Packing(8, 8).native_ok
        assert Packing(7, 8).native_ok == (native is not None)

    def test_round_trip(self):
        layout = Packing(4, 8)
        for e in itertools.product(range(3), repeat=4):
            unpacked = layout.unpack(layout.pack(e))
            assert unpacked + (0,) * (4 - len(unpacked)) == e

    def test_key_order_is_graded_lex(self):
        layout = Packing(3, 8)
        es = list(itertools.product(range(4), repeat=3))
        assert sorted(es, key=layout.pack) == sorted(es, key=grlex_key)

    def test_divides(self):
        layout = Packing(3, 8)
        for a, b in itertools.product(itertools.product(range(3), repeat=3), repeat=2):
            expected = all(x <= y for x, y in zip(a, b))
            assert _pykernels.divides(layout.pack(a), layout.pack(b), layout.guard) == expected


class TestPythonKernels:
    @given(terms3, terms3)
    def test_mul_then_divide(self, a, b):
        layout = Packing(3, 8)
        pa, pb = layout.pack_terms(a), layout.pack_terms(b)
        prod = _pykernels.mul(pa, pb)
        if pb:
            assert _pykernels.divexact(prod, pb, layout.guard) == {k: c for k, c in pa.items() if c}

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            _pykernels.divexact({1: 1}, {}, Packing(1, 8).guard)


@needs_native
class TestCompiledTwin:
    @given(terms3, terms3)
    def test_mul_agrees(self, a, b):
        layout = Packing(3, 8)
        pa, pb = layout.pack_terms(a), layout.pack_terms(b)
        assert native.mul(pa, pb) == _pykernels.mul(pa, pb)

    @given(terms3, terms3, terms3)
    def test_divexact_agrees(self, a, b, c):
        layout = Packing(3, 8)
        pa, pb, pc = (layout.pack_terms(x) for x in (a, b, c))
        if not pb:
            return
        p = _pykernels.mul(pa, pb)
        for k, v in pc.items():
            p[k] = p.get(k, 0) + v
        p = {k: v for k, v in p.items() if v}
        assert native.divexact(p, pb, layout.guard) == _pykernels.divexact(p, pb, layout.guard)

    def test_overflow_raises(self):
        big = (1 << 62)
        with pytest.raises(OverflowError):
            native.mul({1: big}, {1: 4})
        with pytest.raises(OverflowError):
            native.mul({1: 1 << 64}, {1: 1})

    def test_dispatch_falls_back(self):
        layout = Packing(1, 8)
        big = 1 << 40
        out = kernels.mul({1: big}, {1: big}, layout)
        assert out == {2: big * big}

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            native.divexact({1: 1}, {}, Packing(1, 8).guard)
