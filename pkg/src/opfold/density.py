"""Density dynamics of recursive operand splitting.

Halving a block of length b and 1-bit density d produces three child
blocks of length b/2: the two lineage halves with the shared pattern
removed (density d*(1-d) each) and the shared pattern itself (density
d**2). Extracting the shared block saves its weight once per lineage that
reuses it, and the lineage densities follow the logistic map
d <- d*(1-d).

`simulate_tree` walks the binary lineage frontier and reports per-level
gain in two accountings:

- "nodes-only": each shared block is harvested once; it still costs its
  own weight to process, so cumulative gain approaches (b/2)*d0.
- "full-recursive": shared blocks are modeled as completely recursed in
  turn, so each is harvested at its full ledger multiplicity of 2 (parent
  weight = w(b10) + w(b01) + 2*w(b11)); residual weight is then exactly
  the frontier weight, which decays with the logistic iterates toward 0,
  and cumulative gain approaches the whole initial weight.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernel as _k
from .bitnum import BitNum
from .folding import characteristic_vectors, split

MODES = ("nodes-only", "full-recursive")


@dataclass(frozen=True)
class DensityState:
    """Block-level model state: density and block length."""

    delta: float
    length_b: int


@dataclass(frozen=True)
class SplitOutcome:
    """The three children of one halving split with measured densities."""

    b10: BitNum
    b01: BitNum
    b11: BitNum
    density10: float
    density01: float
    density11: float


def logistic_step(delta):
    """One density iterate delta * (1 - delta)."""
    if not 0.0 <= delta <= 1.0:
        raise ValueError(f"density {delta} outside [0, 1]")
    return delta * (1.0 - delta)


def iterates(delta0, count):
    """[delta_0, delta_1, ..., delta_count]."""
    out = [delta0]
    d = delta0
    for _ in range(count):
        d = logistic_step(d)
        out.append(d)
    return out


def telescoping_sum(delta0, n):
    """Direct summation of delta_i**2 for i = 0 .. n-1.

    Algebraically equals delta_0 - delta_n; the direct sum is kept so the
    identity stays testable.
    """
    if not 0.0 <= delta0 <= 0.5:
        raise ValueError(f"initial density {delta0} outside [0, 1/2]")
    total = 0.0
    d = delta0
    for _ in range(n):
        total += d * d
        d = logistic_step(d)
    return total


def split_gain(delta, b):
    """Expected weight of the shared block: delta**2 * b / 2."""
    return delta * delta * b / 2.0


def tree_gain(delta0, b, j):
    """Expected nodes-only gain after j levels: (b/2) * (delta_0 - delta_j)."""
    if j < 0:
        raise ValueError(f"level must be >= 0, got {j}")
    d = delta0
    for _ in range(j):
        d = logistic_step(d)
    return (b / 2.0) * (delta0 - d)


def full_gain(delta0, b, j):
    """Expected full-recursive gain after j levels: b * (delta_0 - delta_j)."""
    return 2.0 * tree_gain(delta0, b, j)


def simulate_split(parent, b):
    """Split a b-bit block in half and return the three children.

    The children are the k=2 characteristic vectors of the halves, so
    weight(parent) = weight(b10) + weight(b01) + 2*weight(b11) exactly.
    """
    if b < 2 or b % 2:
        raise ValueError(f"block length must be even and >= 2, got {b}")
    if parent.bit_length() > b:
        raise ValueError(
            f"block has {parent.bit_length()} bits, exceeds b = {b}")
    vecs = characteristic_vectors(split(parent, b, 2))
    half = b // 2
    return SplitOutcome(
        b10=vecs[2],
        b01=vecs[1],
        b11=vecs[3],
        density10=vecs[2].weight() / half,
        density01=vecs[1].weight() / half,
        density11=vecs[3].weight() / half,
    )


@dataclass(frozen=True)
class LevelStats:
    """Per-level accounting of one tree walk."""

    level: int
    harvested: int
    cumulative_gain: int
    residual_weight: int
    frontier_weight: int
    frontier_density: float


@dataclass(frozen=True)
class TreeReport:
    """Gain report of simulate_tree."""

    mode: str
    b: int
    depth: int
    initial_weight: int
    levels: tuple

    @property
    def gain(self):
        return self.levels[-1].cumulative_gain

    @property
    def residual(self):
        return self.levels[-1].residual_weight


def simulate_tree(B, b, depth, mode="nodes-only"):
    """Split B recursively for `depth` levels and account the gains.

    Level r holds 2**r lineage blocks of b/2**r bits. Each level's
    harvested weight is the summed weight of the shared blocks produced by
    splitting the previous frontier, counted once (nodes-only) or twice
    (full-recursive); residual = initial - cumulative gain, exactly.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    if b < 1 or b % (1 << depth):
        raise ValueError(
            f"depth {depth} exceeds log2 of the block length {b}")
    if B.bit_length() > b:
        raise ValueError(f"input has {B.bit_length()} bits, exceeds b = {b}")
    factor = 1 if mode == "nodes-only" else 2
    w0 = B.weight()
    frontier = [B.limbs]
    size = b
    cumulative = 0
    levels = [LevelStats(
        level=0,
        harvested=0,
        cumulative_gain=0,
        residual_weight=w0,
        frontier_weight=w0,
        frontier_density=w0 / b,
    )]
    for level in range(1, depth + 1):
        half = size // 2
        harvested = 0
        frontier_weight = 0
        children = []
        for v in frontier:
            lo = _k.extract(v, 0, half)
            hi = _k.extract(v, half, half)
            shared = _k.band(hi, lo)
            harvested += _k.popcount(shared)
            c_hi = _k.bxor(hi, shared)
            c_lo = _k.bxor(lo, shared)
            frontier_weight += _k.popcount(c_hi) + _k.popcount(c_lo)
            children.append(c_hi)
            children.append(c_lo)
        cumulative += factor * harvested
        frontier = children
        size = half
        levels.append(LevelStats(
            level=level,
            harvested=harvested,
            cumulative_gain=cumulative,
            residual_weight=w0 - cumulative,
            frontier_weight=frontier_weight,
            frontier_density=frontier_weight / b,
        ))
    return TreeReport(
        mode=mode, b=b, depth=depth, initial_weight=w0, levels=tuple(levels))


def bernoulli_block(b, delta, rng):
    """Random b-bit block with independent Bernoulli(delta) bits."""
    if b < 0:
        raise ValueError(f"block length must be >= 0, got {b}")
    if not 0.0 <= delta <= 1.0:
        raise ValueError(f"density {delta} outside [0, 1]")
    if b == 0:
        return BitNum(0)
    bits = (rng.random(b) < delta).astype(np.uint8)
    data = np.packbits(bits, bitorder="little").tobytes()
    return BitNum(int.from_bytes(data, "little"))


def exact_weight_block(b, w, rng):
    """Random b-bit block with exactly w set bits (variance reduction)."""
    if not 0 <= w <= b:
        raise ValueError(f"weight {w} outside 0..{b}")
    positions = rng.choice(b, size=w, replace=False)
    limbs = [0] * ((b + 31) // 32)
    for pos in positions:
        p = int(pos)
        limbs[p // 32] |= 1 << (p % 32)
    while limbs and limbs[-1] == 0:
        limbs.pop()
    return BitNum._wrap(tuple(limbs))


def _sample_block(b, delta, rng, exact_weight):
    if exact_weight:
        return exact_weight_block(b, round(delta * b), rng)
    return bernoulli_block(b, delta, rng)


def _series_stats(samples_by_level, predicted, trials, seed):
    rows = []
    for level, (samples, pred) in enumerate(zip(samples_by_level, predicted)):
        mean = sum(samples) / trials
        if trials > 1:
            var = sum((s - mean) ** 2 for s in samples) / (trials - 1)
            stderr = math.sqrt(var / trials)
        else:
            stderr = 0.0
        rows.append({
            "depth_or_iter": level,
            "predicted": pred,
            "measured": mean,
            "stderr": stderr,
            "trials": trials,
            "seed": seed,
        })
    return rows


def gain_series(b, depth, delta0, trials, seed, mode="nodes-only",
                exact_weight=False):
    """Cumulative gain per level, measured against the closed form."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    samples = [[] for _ in range(depth + 1)]
    for t in range(trials):
        rng = np.random.default_rng([seed, b, t])
        block = _sample_block(b, delta0, rng, exact_weight)
        report = simulate_tree(block, b, depth, mode)
        for level in range(depth + 1):
            samples[level].append(report.levels[level].cumulative_gain)
    form = tree_gain if mode == "nodes-only" else full_gain
    predicted = [form(delta0, b, j) for j in range(depth + 1)]
    return _series_stats(samples, predicted, trials, seed)


def density_series(b, depth, delta0, trials, seed, exact_weight=False):
    """Frontier density per level, measured against the logistic iterates."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    samples = [[] for _ in range(depth + 1)]
    for t in range(trials):
        rng = np.random.default_rng([seed, b, t])
        block = _sample_block(b, delta0, rng, exact_weight)
        report = simulate_tree(block, b, depth, "nodes-only")
        for level in range(depth + 1):
            samples[level].append(report.levels[level].frontier_density)
    predicted = iterates(delta0, depth)
    return _series_stats(samples, predicted, trials, seed)


SERIES_COLUMNS = ("depth_or_iter", "predicted", "measured",
                  "stderr", "trials", "seed")
