"""Value-semantic arbitrary-precision unsigned integers with bit addressing.

BitNum stores 32-bit limb tuples in canonical form (no trailing zero limbs,
zero keeps no limbs) and routes arithmetic through the selected kernel lane.
Host integers appear only at the parse/format boundary, so oracle tests
against native big integers compare two genuinely independent routes.
"""

import numpy as np

from . import _kernel as _k


class UnderflowError(ArithmeticError):
    """Subtraction result would be negative."""


class BitNum:
    """Immutable unsigned integer; bit 0 is the least significant bit."""

    __slots__ = ("_limbs",)

    def __init__(self, value=0):
        if isinstance(value, BitNum):
            self._limbs = value._limbs
        elif isinstance(value, int):
            if value < 0:
                raise ValueError("BitNum is unsigned")
            self._limbs = _k.from_int(value)
        else:
            raise TypeError(f"cannot build BitNum from {type(value).__name__}")

    @classmethod
    def _wrap(cls, limbs):
        out = object.__new__(cls)
        out._limbs = limbs
        return out

    @classmethod
    def parse(cls, text):
        """Parse "0b…", "0x…", or decimal text; round-trips with the
        matching formatter exactly."""
        s = text.strip()
        if s.startswith(("0b", "0B")):
            value = int(s[2:], 2)
        elif s.startswith(("0x", "0X")):
            value = int(s[2:], 16)
        else:
            if s.startswith(("+", "-")):
                raise ValueError(f"unsigned value required: {text!r}")
            value = int(s, 10)
        return cls(value)

    @property
    def limbs(self):
        """Internal little-endian 32-bit word tuple (canonical form)."""
        return self._limbs

    def to_int(self):
        return _k.to_int(self._limbs)

    def to_bin(self):
        v = _k.to_int(self._limbs)
        return "0b" + format(v, "b")

    def to_hex(self):
        v = _k.to_int(self._limbs)
        return "0x" + format(v, "x")

    def to_dec(self):
        return str(_k.to_int(self._limbs))

    def bit(self, i):
        """Bit i as 0 or 1; defined (and 0) for i >= bit_length."""
        if i < 0:
            raise IndexError("negative bit index")
        return _k.bit(self._limbs, i)

    def bit_length(self):
        return _k.bit_length(self._limbs)

    def weight(self):
        return _k.popcount(self._limbs)

    def is_canonical(self):
        return _k.is_canonical(self._limbs)

    def is_zero(self):
        return not self._limbs

    def __add__(self, other):
        if not isinstance(other, BitNum):
            return NotImplemented
        return BitNum._wrap(_k.add(self._limbs, other._limbs))

    def __sub__(self, other):
        if not isinstance(other, BitNum):
            return NotImplemented
        if _k.cmp(self._limbs, other._limbs) < 0:
            raise UnderflowError("subtraction would be negative")
        return BitNum._wrap(_k.sub(self._limbs, other._limbs))

    def __lshift__(self, s):
        if s < 0:
            raise ValueError("negative shift")
        return BitNum._wrap(_k.shl(self._limbs, s))

    def __and__(self, other):
        if not isinstance(other, BitNum):
            return NotImplemented
        return BitNum._wrap(_k.band(self._limbs, other._limbs))

    def __or__(self, other):
        if not isinstance(other, BitNum):
            return NotImplemented
        return BitNum._wrap(_k.bor(self._limbs, other._limbs))

    def __xor__(self, other):
        if not isinstance(other, BitNum):
            return NotImplemented
        return BitNum._wrap(_k.bxor(self._limbs, other._limbs))

    def __eq__(self, other):
        if not isinstance(other, BitNum):
            return NotImplemented
        return self._limbs == other._limbs

    def __lt__(self, other):
        return _k.cmp(self._limbs, other._limbs) < 0

    def __le__(self, other):
        return _k.cmp(self._limbs, other._limbs) <= 0

    def __gt__(self, other):
        return _k.cmp(self._limbs, other._limbs) > 0

    def __ge__(self, other):
        return _k.cmp(self._limbs, other._limbs) >= 0

    def __hash__(self):
        return hash(self._limbs)

    def __bool__(self):
        return bool(self._limbs)

    def __int__(self):
        return self.to_int()

    def __repr__(self):
        return f"BitNum({self.to_bin()})"


ZERO = BitNum(0)
ONE = BitNum(1)


def add(x, y):
    """x + y."""
    return x + y


def sub(x, y):
    """x - y; raises UnderflowError when y > x."""
    return x - y


def shl(x, s):
    """x * 2**s."""
    return x << s


def weight(x):
    """Number of set bits (Hamming weight)."""
    return x.weight()


def random_bitnum(m, rng_seed):
    """Uniform value over m independent bits; deterministic per seed.

    rng_seed may be an int, a seed sequence list, or a numpy Generator.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return ZERO
    rng = rng_seed if isinstance(rng_seed, np.random.Generator) \
        else np.random.default_rng(rng_seed)
    data = rng.bytes((m + 7) // 8)
    value = int.from_bytes(data, "little") & ((1 << m) - 1)
    return BitNum(value)
