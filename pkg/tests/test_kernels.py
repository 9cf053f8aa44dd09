"""The pure and compiled kernel lanes are interchangeable."""

import random

import pytest

from opfold import _corepy

_corefast = pytest.importorskip(
    "opfold._corefast", reason="compiled kernel lane not built")


def _rand_pair(rng):
    m = rng.randrange(1, 400)
    return rng.getrandbits(m), rng.getrandbits(m), m


def test_unary_and_binary_op_parity():
    rng = random.Random(2024)
    for _ in range(500):
        x, y, m = _rand_pair(rng)
        a = _corepy.from_int(x)
        b = _corepy.from_int(y)
        assert _corefast.add(a, b) == _corepy.add(a, b)
        hi, lo = (a, b) if x >= y else (b, a)
        assert _corefast.sub(hi, lo) == _corepy.sub(hi, lo)
        s = rng.randrange(0, 140)
        assert _corefast.shl(a, s) == _corepy.shl(a, s)
        start = rng.randrange(0, m + 8)
        count = rng.randrange(0, m + 8)
        assert _corefast.extract(a, start, count) == _corepy.extract(a, start, count)
        assert _corefast.band(a, b) == _corepy.band(a, b)
        assert _corefast.bor(a, b) == _corepy.bor(a, b)
        assert _corefast.bxor(a, b) == _corepy.bxor(a, b)
        assert _corefast.popcount(a) == _corepy.popcount(a)
        assert _corefast.bit_length(a) == _corepy.bit_length(a)
        i = rng.randrange(0, m + 40)
        assert _corefast.bit(a, i) == _corepy.bit(a, i)
        assert _corefast.cmp(a, b) == _corepy.cmp(a, b)
        assert _corefast.is_canonical(a) and _corepy.is_canonical(a)


def test_multiply_parity_including_ledgers():
    rng = random.Random(77)
    for _ in range(300):
        x, y, m = _rand_pair(rng)
        k = rng.randrange(1, 9)
        a = _corepy.from_int(x)
        b = _corepy.from_int(y)
        assert _corefast.fold_multiply(a, b, m, k) == _corepy.fold_multiply(a, b, m, k)
        assert _corefast.classical_multiply(a, b) == _corepy.classical_multiply(a, b)


def test_zero_edge_parity():
    zero = ()
    one = (1,)
    for lane in (_corepy, _corefast):
        assert lane.add(zero, zero) == zero
        assert lane.sub(zero, zero) == zero
        assert lane.shl(zero, 50) == zero
        assert lane.popcount(zero) == 0
        assert lane.bit_length(zero) == 0
        assert lane.bit(zero, 0) == 0
        assert lane.extract(one, 0, 0) == zero
        assert lane.classical_multiply(one, zero) == (zero, 0)
        assert lane.classical_multiply(zero, (0b1011,)) == (zero, 3)
        assert lane.fold_multiply(zero, zero, 8, 2)[0] == zero


def test_sub_underflow_parity():
    for lane in (_corepy, _corefast):
        with pytest.raises(ValueError):
            lane.sub((1,), (2,))
