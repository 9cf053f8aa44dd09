"""Operand-folding multiplication.

The multiplier B is split into k parts of n = ceil(m/k) bits viewed as a
k x n bit array. One pass over the n columns adds the shifted multiplicand
into one of 2**k - 1 accumulator cells keyed by the column pattern
(accumulate). A fixed schedule of 2**(k+1) - 2k - 2 additions then turns
cell 2**(j-1) into A x B_j for every part (combine), and a Horner pass of
k - 1 shift-by-n adds reassembles the full product.

`multiply` runs the fused kernel and reports a per-phase addition ledger;
`accumulate` / `combine` / `horner_assemble` expose the same phases over
BitNum values for inspection, and `trace_multiply` snapshots them.
"""

from dataclasses import dataclass, field

from . import _kernel as _k
from .bitnum import BitNum

# accumulator cell key: int in 1 .. 2**k - 1, bit j-1 set means part j has
# a 1 in the column
CharacteristicIndex = int

MAX_K = 24  # bank of 2**k - 1 cells must stay allocatable


@dataclass(frozen=True)
class Decomposition:
    """B as k zero-padded n-bit parts, parts[0] = B_1 (least significant)."""

    m: int
    k: int
    n: int
    parts: tuple

    def part(self, j):
        """1-based part accessor: part(1) = B_1 ... part(k) = B_k."""
        return self.parts[j - 1]

    def reassemble(self):
        """Sum of 2**(n*(j-1)) * B_j over all parts."""
        total = BitNum(0)
        for j in range(self.k, 0, -1):
            total = (total << self.n) + self.parts[j - 1]
        return total


@dataclass(frozen=True)
class AccumulatorBank:
    """The 2**k - 1 working cells C_(1) .. C_(2**k - 1)."""

    k: int
    cells: tuple

    @classmethod
    def zero(cls, k):
        return cls(k=k, cells=tuple(BitNum(0) for _ in range((1 << k) - 1)))

    def cell(self, v):
        if not 1 <= v < (1 << self.k):
            raise IndexError(f"cell index {v} outside 1..{(1 << self.k) - 1}")
        return self.cells[v - 1]

    def replace(self, updates):
        cells = list(self.cells)
        for v, value in updates.items():
            cells[v - 1] = value
        return AccumulatorBank(k=self.k, cells=tuple(cells))


@dataclass(frozen=True)
class CostLedger:
    """Addition counts per phase; shifts and peak width are diagnostics
    and excluded from total."""

    accumulate_adds: int
    combine_adds: int
    horner_adds: int
    shifts: int = 0
    peak_cell_bits: int = 0

    @property
    def total(self):
        return self.accumulate_adds + self.combine_adds + self.horner_adds


def combine_add_count(k):
    """The fixed combination budget 2**(k+1) - 2k - 2."""
    return (1 << (k + 1)) - 2 * k - 2


def split(B, m, k):
    """Split B into k parts of n = ceil(m/k) bits, B_k holding the pad."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if B.bit_length() > m:
        raise ValueError(
            f"operand has {B.bit_length()} bits, exceeds m = {m}")
    n = (m + k - 1) // k
    parts = tuple(
        BitNum._wrap(_k.extract(B.limbs, j * n, n)) for j in range(k))
    return Decomposition(m=m, k=k, n=n, parts=parts)


def _column_pattern(parts, i):
    col = 0
    for j, p in enumerate(parts):
        if p.bit(i):
            col |= 1 << j
    return col


def characteristic_vectors(d, include_zero=False):
    """Indicator vectors of the column patterns, keyed by pattern.

    Bit r of vectors[v] is 1 iff column r of the part array equals the
    binary pattern v. Inspection/testing aid only: the multiply path never
    materializes these.
    """
    npatterns = 1 << d.k
    limb_rows = [[0] * ((d.n + 31) // 32) for _ in range(npatterns)]
    for i in range(d.n):
        col = _column_pattern(d.parts, i)
        limb_rows[col][i // 32] |= 1 << (i % 32)
    out = {}
    start = 0 if include_zero else 1
    for v in range(start, npatterns):
        row = limb_rows[v]
        while row and row[-1] == 0:
            row.pop()
        out[v] = BitNum._wrap(tuple(row))
    return out


def accumulate(A, d):
    """Algorithm phase 2 over BitNum values.

    Walks columns i = 0 .. n-1 with a working copy of A shifted left once
    per column; nonzero patterns receive one addition each. Returns the
    filled bank and the addition count.
    """
    cells = {v: BitNum(0) for v in range(1, 1 << d.k)}
    ax = A
    count = 0
    for i in range(d.n):
        col = _column_pattern(d.parts, i)
        if col:
            cells[col] = cells[col] + ax
            count += 1
        ax = ax << 1
    bank = AccumulatorBank.zero(d.k).replace(cells)
    return bank, count


def combine(bank, k):
    """Decremental combination: after this, cell(2**(j-1)) = A x B_j.

    Rounds run i = k .. 1; round i folds each upper cell 2**(i-1) + j into
    both 2**(i-1) and j. The schedule always performs (and the ledger
    always counts) 2**(k+1) - 2k - 2 additions, zeros included.
    """
    if bank.k != k:
        raise ValueError(f"bank built for k = {bank.k}, combine called with {k}")
    cells = {v: bank.cell(v) for v in range(1, 1 << k)}
    for i in range(k, 0, -1):
        base = 1 << (i - 1)
        for j in range(1, base):
            cells[base] = cells[base] + cells[base + j]
            cells[j] = cells[j] + cells[base + j]
    return bank.replace(cells)


def horner_assemble(bank, n, k):
    """Fold the part products together: k-1 shifts by n, k-1 additions."""
    p = bank.cell(1 << (k - 1))
    for i in range(k - 1, 0, -1):
        p = (p << n) + bank.cell(1 << (i - 1))
    return p


def _validate_multiply(A, B, m, k):
    if not 1 <= k <= MAX_K:
        raise ValueError(f"k must be in 1..{MAX_K}, got {k}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if A.bit_length() > m:
        raise ValueError(
            f"multiplicand has {A.bit_length()} bits, exceeds m = {m}")
    if B.bit_length() > m:
        raise ValueError(
            f"multiplier has {B.bit_length()} bits, exceeds m = {m}")


def multiply(A, B, m, k):
    """Folded product of two m-bit operands with degree k.

    Returns (product, ledger). For k = 1 the path degenerates to classical
    accumulate-and-add and the ledger is (weight(B), 0, 0).
    """
    _validate_multiply(A, B, m, k)
    limbs, acc, comb, horn, shifts, peak = _k.fold_multiply(
        A.limbs, B.limbs, m, k)
    ledger = CostLedger(
        accumulate_adds=acc,
        combine_adds=comb,
        horner_adds=horn,
        shifts=shifts,
        peak_cell_bits=peak,
    )
    return BitNum._wrap(limbs), ledger


@dataclass(frozen=True)
class MultiplyTrace:
    """Phase-by-phase snapshot of one folded multiplication."""

    a: BitNum
    b: BitNum
    m: int
    k: int
    decomposition: Decomposition
    vectors: dict = field(repr=False)
    bank_accumulated: AccumulatorBank = field(repr=False)
    bank_combined: AccumulatorBank = field(repr=False)
    product: BitNum = BitNum(0)
    ledger: CostLedger = CostLedger(0, 0, 0)


def trace_multiply(A, B, m, k):
    """Run the phased reference path, snapshotting every stage."""
    _validate_multiply(A, B, m, k)
    d = split(B, m, k)
    vectors = characteristic_vectors(d)
    bank_acc, acc_count = accumulate(A, d)
    bank_comb = combine(bank_acc, k)
    product = horner_assemble(bank_comb, d.n, k)
    peak = max(
        (bank_comb.cell(v).bit_length() for v in range(1, 1 << k)),
        default=0)
    ledger = CostLedger(
        accumulate_adds=acc_count,
        combine_adds=combine_add_count(k),
        horner_adds=k - 1,
        shifts=d.n + k - 1,
        peak_cell_bits=peak,
    )
    return MultiplyTrace(
        a=A, b=B, m=m, k=k,
        decomposition=d,
        vectors=vectors,
        bank_accumulated=bank_acc,
        bank_combined=bank_comb,
        product=product,
        ledger=ledger,
    )


def _pad_bits(x, width):
    return format(x.to_int(), f"0{width}b") if width > 0 else "0"


def format_trace(trace):
    """Human-readable rendering of a MultiplyTrace."""
    d = trace.decomposition
    k, n = trace.k, d.n
    lines = []
    lines.append(f"operands (m={trace.m}, k={k}, n={n})")
    lines.append(f"  A = {trace.a.to_bin()}")
    lines.append(f"  B = {trace.b.to_bin()}")
    lines.append("parts (B_1 = least significant)")
    for j in range(1, k + 1):
        lines.append(f"  B_{j} = {_pad_bits(d.part(j), n)}")
    lines.append("characteristic vectors")
    for v in sorted(trace.vectors):
        label = format(v, f"0{k}b")
        lines.append(f"  B_({label}) = {_pad_bits(trace.vectors[v], n)}")
    for title, bank in (("bank after accumulate", trace.bank_accumulated),
                        ("bank after combine", trace.bank_combined)):
        lines.append(title)
        for v in range(1, 1 << k):
            label = format(v, f"0{k}b")
            lines.append(f"  C_({label}) = {bank.cell(v).to_bin()}")
    lines.append("product")
    lines.append(f"  {trace.product.to_bin()} (dec {trace.product.to_dec()})")
    led = trace.ledger
    lines.append("ledger")
    lines.append(f"  accumulate_adds = {led.accumulate_adds}")
    lines.append(f"  combine_adds    = {led.combine_adds}")
    lines.append(f"  horner_adds     = {led.horner_adds}")
    lines.append(f"  total           = {led.total}")
    lines.append(f"  shifts          = {led.shifts} (excluded from total)")
    lines.append(f"  peak_cell_bits  = {led.peak_cell_bits}")
    return "\n".join(lines)
