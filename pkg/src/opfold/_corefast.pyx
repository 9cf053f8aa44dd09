# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled arithmetic kernel; same surface as _corepy over 32-bit limb tuples."""

from libc.stdlib cimport calloc, free

KERNEL_NAME = "compiled"

cdef extern from *:
    int __builtin_popcount(unsigned int x) nogil
    int __builtin_clz(unsigned int x) nogil

ctypedef unsigned int u32
ctypedef unsigned long long u64


cdef u32* _load(object a, Py_ssize_t size) except NULL:
    # size >= len(a); zero-filled buffer
    cdef u32* buf = <u32*> calloc(size if size > 0 else 1, sizeof(u32))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(len(a)):
        buf[i] = <u32> a[i]
    return buf


cdef object _pack(u32* buf, Py_ssize_t size):
    while size > 0 and buf[size - 1] == 0:
        size -= 1
    cdef list out = []
    cdef Py_ssize_t i
    for i in range(size):
        out.append(buf[i])
    return tuple(out)


cdef inline Py_ssize_t _limb_bits(u32 x) nogil:
    if x == 0:
        return 0
    return 32 - __builtin_clz(x)


cdef inline void _add_into(u32* dst, u32* src, Py_ssize_t nsrc) nogil:
    # dst += src; caller guarantees dst capacity covers the result
    cdef u64 carry = 0
    cdef u64 s
    cdef Py_ssize_t i = 0
    while i < nsrc:
        s = <u64> dst[i] + src[i] + carry
        dst[i] = <u32> s
        carry = s >> 32
        i += 1
    while carry:
        s = <u64> dst[i] + carry
        dst[i] = <u32> s
        carry = s >> 32
        i += 1


def from_int(x):
    if x < 0:
        raise ValueError("negative value")
    limbs = []
    while x:
        limbs.append(x & 0xFFFFFFFF)
        x >>= 32
    return tuple(limbs)


def to_int(a):
    x = 0
    for limb in reversed(a):
        x = (x << 32) | limb
    return x


def is_canonical(a):
    if a and a[len(a) - 1] == 0:
        return False
    for limb in a:
        if limb < 0 or limb > 0xFFFFFFFF:
            return False
    return True


def bit_length(a):
    cdef Py_ssize_t la = len(a)
    if la == 0:
        return 0
    return 32 * (la - 1) + _limb_bits(<u32> a[la - 1])


def popcount(a):
    cdef Py_ssize_t total = 0
    for limb in a:
        total += __builtin_popcount(<u32> limb)
    return total


def bit(a, i):
    cdef Py_ssize_t w = i // 32
    if w >= len(a):
        return 0
    return (<u32> a[w] >> (i % 32)) & 1


def cmp(a, b):
    cdef Py_ssize_t la = len(a), lb = len(b)
    if la != lb:
        return -1 if la < lb else 1
    cdef Py_ssize_t i
    cdef u32 x, y
    for i in range(la - 1, -1, -1):
        x = <u32> a[i]
        y = <u32> b[i]
        if x != y:
            return -1 if x < y else 1
    return 0


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef u32* ra = _load(a, la + 1)
    cdef u32* rb = _load(b, lb)
    _add_into(ra, rb, lb)
    out = _pack(ra, la + 1)
    free(ra)
    free(rb)
    return out


def sub(a, b):
    # a >= b
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef u32* ra = _load(a, la if la > 0 else 1)
    cdef u32* rb = _load(b, la if la > 0 else 1)
    cdef u64 borrow = 0
    cdef u64 d
    cdef Py_ssize_t i
    for i in range(la):
        d = <u64> ra[i] - rb[i] - borrow
        ra[i] = <u32> d
        borrow = (d >> 32) & 1
    if borrow:
        free(ra)
        free(rb)
        raise ValueError("underflow")
    out = _pack(ra, la)
    free(ra)
    free(rb)
    return out


def shl(a, s):
    cdef Py_ssize_t la = len(a)
    if la == 0 or s == 0:
        return a
    cdef Py_ssize_t words = s // 32
    cdef int rem = s % 32
    cdef Py_ssize_t size = la + words + 1
    cdef u32* buf = <u32*> calloc(size, sizeof(u32))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    cdef u32 carry = 0, limb
    for i in range(la):
        limb = <u32> a[i]
        if rem == 0:
            buf[words + i] = limb
        else:
            buf[words + i] = (limb << rem) | carry
            carry = limb >> (32 - rem)
    if rem and carry:
        buf[words + la] = carry
    out = _pack(buf, size)
    free(buf)
    return out


def extract(a, start, count):
    # bits [start, start + count)
    if count <= 0:
        return ()
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t words = start // 32
    cdef int rem = start % 32
    cdef Py_ssize_t nlimbs = (count + 31) // 32
    cdef u32* src = _load(a, la if la > 0 else 1)
    cdef u32* buf = <u32*> calloc(nlimbs, sizeof(u32))
    if buf == NULL:
        free(src)
        raise MemoryError()
    cdef Py_ssize_t i, w
    cdef u32 lo
    for i in range(nlimbs):
        w = words + i
        lo = src[w] >> rem if w < la else 0
        if rem and w + 1 < la:
            lo |= src[w + 1] << (32 - rem)
        buf[i] = lo
    cdef int tail = count % 32
    if tail:
        buf[nlimbs - 1] &= (<u32> 1 << tail) - 1
    out = _pack(buf, nlimbs)
    free(src)
    free(buf)
    return out


def band(a, b):
    if len(a) > len(b):
        a, b = b, a
    cdef Py_ssize_t la = len(a)
    cdef u32* buf = _load(a, la if la > 0 else 1)
    cdef Py_ssize_t i
    for i in range(la):
        buf[i] &= <u32> b[i]
    out = _pack(buf, la)
    free(buf)
    return out


def bor(a, b):
    if len(a) < len(b):
        a, b = b, a
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef u32* buf = _load(a, la if la > 0 else 1)
    cdef Py_ssize_t i
    for i in range(lb):
        buf[i] |= <u32> b[i]
    out = _pack(buf, la)
    free(buf)
    return out


def bxor(a, b):
    if len(a) < len(b):
        a, b = b, a
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef u32* buf = _load(a, la if la > 0 else 1)
    cdef Py_ssize_t i
    for i in range(lb):
        buf[i] ^= <u32> b[i]
    out = _pack(buf, la)
    free(buf)
    return out


def classical_multiply(a, b):
    """Shift-and-add product; returns (limbs, add count)."""
    cdef Py_ssize_t bl = bit_length(b)
    cdef Py_ssize_t al = bit_length(a)
    if bl == 0:
        return (), 0
    if al == 0:
        # zero multiplicand still costs one addition per set multiplier bit
        return (), popcount(b)
    cdef Py_ssize_t size = (al + bl + 31) // 32 + 1
    cdef u32* acc = <u32*> calloc(size, sizeof(u32))
    cdef u32* addend = _load(a, size)
    cdef u32* bbuf = _load(b, len(b))
    if acc == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, t
    cdef Py_ssize_t adds = 0
    cdef u32 carry
    cdef u64 v
    for i in range(bl):
        if (bbuf[i >> 5] >> (i & 31)) & 1:
            _add_into(acc, addend, size)
            adds += 1
        carry = 0
        for t in range(size):
            v = (<u64> addend[t] << 1) | carry
            addend[t] = <u32> v
            carry = <u32> (v >> 32)
    out = _pack(acc, size)
    free(acc)
    free(addend)
    free(bbuf)
    return out, adds


def fold_multiply(a, b, m, k):
    """Fused folded multiply; returns (product, accumulate_adds,
    combine_adds, horner_adds, shifts, peak_cell_bits)."""
    cdef Py_ssize_t mm = m, kk = k
    cdef Py_ssize_t n = (mm + kk - 1) // kk
    cdef Py_ssize_t cell_limbs = (mm + n + 31) // 32 + 1
    cdef Py_ssize_t ncells = (<Py_ssize_t> 1) << kk
    cdef Py_ssize_t prod_limbs = (2 * mm + 31) // 32 + 1
    cdef u32* bank = <u32*> calloc(ncells * cell_limbs, sizeof(u32))
    cdef u32* ax = _load(a, cell_limbs)
    cdef u32* bbuf = _load(b, len(b))
    cdef u32* p = <u32*> calloc(prod_limbs, sizeof(u32))
    cdef Py_ssize_t blimbs = len(b)
    if bank == NULL or p == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, t, pos, w, base, idx
    cdef Py_ssize_t col
    cdef Py_ssize_t acc_adds = 0, comb_adds = 0, horner_adds = 0, shifts = 0
    cdef u32 carry
    cdef u64 v
    for i in range(n):
        col = 0
        for j in range(kk):
            pos = j * n + i
            w = pos >> 5
            if w < blimbs and (bbuf[w] >> (pos & 31)) & 1:
                col |= (<Py_ssize_t> 1) << j
        if col:
            _add_into(bank + col * cell_limbs, ax, cell_limbs)
            acc_adds += 1
        carry = 0
        for t in range(cell_limbs):
            v = (<u64> ax[t] << 1) | carry
            ax[t] = <u32> v
            carry = <u32> (v >> 32)
        shifts += 1
    for i in range(kk, 0, -1):
        base = (<Py_ssize_t> 1) << (i - 1)
        for j in range(1, base):
            _add_into(bank + base * cell_limbs, bank + (base + j) * cell_limbs, cell_limbs)
            _add_into(bank + j * cell_limbs, bank + (base + j) * cell_limbs, cell_limbs)
            comb_adds += 2
    cdef Py_ssize_t peak = 0, wbits
    for idx in range(1, ncells):
        for t in range(cell_limbs - 1, -1, -1):
            if bank[idx * cell_limbs + t]:
                wbits = 32 * t + _limb_bits(bank[idx * cell_limbs + t])
                if wbits > peak:
                    peak = wbits
                break
    base = (<Py_ssize_t> 1) << (kk - 1)
    for t in range(cell_limbs):
        p[t] = bank[base * cell_limbs + t]
    cdef Py_ssize_t words = n // 32
    cdef int rem = <int> (n % 32)
    for i in range(kk - 1, 0, -1):
        if rem == 0:
            for t in range(prod_limbs - 1, words - 1, -1):
                p[t] = p[t - words]
        else:
            for t in range(prod_limbs - 1, words, -1):
                p[t] = (p[t - words] << rem) | (p[t - words - 1] >> (32 - rem))
            p[words] = p[words - words] << rem
        for t in range(words):
            p[t] = 0
        shifts += 1
        _add_into(p, bank + ((<Py_ssize_t> 1) << (i - 1)) * cell_limbs, cell_limbs)
        horner_adds += 1
    out = _pack(p, prod_limbs)
    free(bank)
    free(ax)
    free(bbuf)
    free(p)
    return out, acc_adds, comb_adds, horner_adds, shifts, peak
