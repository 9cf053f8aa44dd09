"""Density recursion model and the splitting simulator that validates it."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from opfold.bitnum import BitNum
from opfold.density import (
    MODES,
    SERIES_COLUMNS,
    bernoulli_block,
    density_series,
    exact_weight_block,
    full_gain,
    gain_series,
    iterates,
    logistic_step,
    simulate_split,
    simulate_tree,
    split_gain,
    telescoping_sum,
    tree_gain,
)

TOY = BitNum(0b101010100011)


# --- logistic recursion ------------------------------------------------------

def test_logistic_step_values():
    assert logistic_step(0.0) == 0.0
    assert logistic_step(0.5) == 0.25
    assert logistic_step(1.0) == 0.0


def test_logistic_step_rejects():
    with pytest.raises(ValueError):
        logistic_step(-0.1)
    with pytest.raises(ValueError):
        logistic_step(1.1)


def test_iterates_shape_and_decay():
    seq = iterates(0.5, 10000)
    assert len(seq) == 10001
    assert seq[0] == 0.5 and seq[1] == 0.25
    for prev, cur in zip(seq[1:], seq[2:]):
        assert 0 < cur < prev
    # the iterate decays like 1/i
    assert 0.9 <= seq[10000] * 10000 <= 1.1


def test_telescoping_examples():
    assert telescoping_sum(0.0, 50) == 0.0
    assert telescoping_sum(0.5, 1) == 0.25


def test_telescoping_identity_grid():
    for delta0 in (0.05, 0.1, 0.25, 0.4, 0.5):
        for n in (1, 10, 100, 10000):
            seq = iterates(delta0, n)
            assert abs(telescoping_sum(delta0, n) - (delta0 - seq[n])) <= 1e-12


def test_telescoping_rejects():
    with pytest.raises(ValueError):
        telescoping_sum(0.6, 10)
    with pytest.raises(ValueError):
        telescoping_sum(-0.1, 10)


def test_split_gain_values():
    assert split_gain(0.0, 100) == 0.0
    assert split_gain(0.5, 12) == 1.5


def test_tree_gain_limit():
    assert tree_gain(0.5, 4096, 0) == 0.0
    # gap to the limit b*d0/2 is exactly (b/2)*delta_j
    for j in (1, 10, 100, 10000):
        d_j = iterates(0.5, j)[j]
        gap = 4096 * 0.5 / 2 - tree_gain(0.5, 4096, j)
        assert abs(gap - 2048 * d_j) <= 1e-9
    assert 4096 * 0.5 / 2 - tree_gain(0.5, 4096, 10000) <= 2048 * 1.1 / 10000


def test_tree_gain_rejects_negative_level():
    with pytest.raises(ValueError):
        tree_gain(0.5, 16, -1)


def test_full_gain_doubles_tree_gain():
    for j in (0, 1, 5):
        assert full_gain(0.5, 256, j) == 2 * tree_gain(0.5, 256, j)


# --- one split ------------------------------------------------------------------

def test_simulate_split_toy():
    out = simulate_split(TOY, 12)
    assert out.b10 == BitNum(0b001000)
    assert out.b01 == BitNum(0b000001)
    assert out.b11 == BitNum(0b100010)
    assert out.density11 == 2 / 6


def test_simulate_split_zero_parent():
    out = simulate_split(BitNum(0), 8)
    assert out.b10.is_zero() and out.b01.is_zero() and out.b11.is_zero()


def test_simulate_split_rejects():
    with pytest.raises(ValueError):
        simulate_split(TOY, 13)
    with pytest.raises(ValueError):
        simulate_split(TOY, 0)
    with pytest.raises(ValueError):
        simulate_split(TOY, 10)  # 12-bit input


@given(st.integers(min_value=1, max_value=128),
       st.integers(min_value=0, max_value=(1 << 256) - 1))
def test_split_weight_conservation(half, x):
    b = 2 * half
    parent = BitNum(x & ((1 << b) - 1))
    out = simulate_split(parent, b)
    assert (out.b10.weight() + out.b01.weight() + 2 * out.b11.weight()
            == parent.weight())
    assert (out.b10 & out.b01 & out.b11).is_zero()
    assert out.b10.bit_length() <= half
    assert out.density10 == out.b10.weight() / half


def test_split_density_grid():
    # 2000 Bernoulli parents per cell; child densities vs d(1-d), d**2
    for delta in (0.2, 0.3, 0.5):
        for b in (256, 1024):
            s10, s01, s11 = [], [], []
            for t in range(2000):
                rng = np.random.default_rng([0, b, t])
                out = simulate_split(bernoulli_block(b, delta, rng), b)
                s10.append(out.density10)
                s01.append(out.density01)
                s11.append(out.density11)
            for samples, target in ((s10, delta * (1 - delta)),
                                    (s01, delta * (1 - delta)),
                                    (s11, delta * delta)):
                arr = np.asarray(samples)
                se = arr.std(ddof=1) / np.sqrt(len(arr))
                assert abs(arr.mean() - target) <= 3 * se


# --- tree walk -------------------------------------------------------------------

def test_simulate_tree_depth_zero():
    report = simulate_tree(TOY, 12, 0)
    assert report.depth == 0 and len(report.levels) == 1
    assert report.gain == 0
    assert report.residual == report.initial_weight == 6


def test_simulate_tree_rejects():
    with pytest.raises(ValueError):
        simulate_tree(TOY, 12, 3)  # 12 not divisible by 8
    with pytest.raises(ValueError):
        simulate_tree(TOY, 12, -1)
    with pytest.raises(ValueError):
        simulate_tree(TOY, 12, 2, mode="both")
    with pytest.raises(ValueError):
        simulate_tree(BitNum(1 << 13), 12, 2)


@given(st.integers(min_value=0, max_value=5),
       st.integers(min_value=0, max_value=(1 << 512) - 1))
def test_tree_accounting_identities(depth, x):
    b = 512
    block = BitNum(x)
    nodes = simulate_tree(block, b, depth, "nodes-only")
    full = simulate_tree(block, b, depth, "full-recursive")
    w0 = block.weight()
    assert nodes.initial_weight == full.initial_weight == w0
    for mode_report, factor in ((nodes, 1), (full, 2)):
        cum = 0
        for lv in mode_report.levels:
            cum += factor * lv.harvested if lv.level else 0
            assert lv.cumulative_gain == cum
            assert lv.residual_weight == w0 - cum
    for prev, cur in zip(nodes.levels, nodes.levels[1:]):
        # each split moves 2*harvested out of the frontier
        assert cur.frontier_weight == prev.frontier_weight - 2 * cur.harvested
    # harvesting every shared block twice accounts for the whole input:
    # what is not in the frontier has been banked
    assert full.residual == full.levels[-1].frontier_weight
    assert nodes.residual == nodes.levels[-1].frontier_weight + nodes.gain


def test_tree_gain_monte_carlo():
    rows = gain_series(4096, 8, 0.5, trials=400, seed=0)
    assert rows[0]["measured"] == 0.0
    for r in rows[1:]:
        assert abs(r["measured"] - r["predicted"]) <= 3 * r["stderr"]
    # measured gain grows level over level
    gains = [r["measured"] for r in rows]
    assert all(b > a for a, b in zip(gains, gains[1:]))


def test_full_recursive_gain_monte_carlo():
    rows = gain_series(4096, 8, 0.5, trials=400, seed=0, mode="full-recursive")
    for r in rows[1:]:
        assert abs(r["measured"] - r["predicted"]) <= 3 * r["stderr"]


def test_density_series_follows_logistic():
    rows = density_series(4096, 8, 0.5, trials=400, seed=0)
    assert [r["predicted"] for r in rows] == iterates(0.5, 8)
    for r in rows:
        assert abs(r["measured"] - r["predicted"]) <= 3 * r["stderr"] + 1e-12


def test_full_recursive_residual_decays_to_frontier():
    rng = np.random.default_rng([0, 1 << 16])
    block = exact_weight_block(1 << 16, 1 << 15, rng)
    report = simulate_tree(block, 1 << 16, 10, "full-recursive")
    ratio = report.residual / report.initial_weight
    d = iterates(0.5, 10)
    assert abs(ratio - d[10] / d[0]) <= 0.01
    assert ratio < 0.15
    residuals = [lv.residual_weight for lv in report.levels]
    assert all(b < a for a, b in zip(residuals, residuals[1:]))


# --- block samplers ------------------------------------------------------------

def test_bernoulli_block_shape():
    rng = np.random.default_rng(5)
    blk = bernoulli_block(4096, 0.3, rng)
    assert blk.bit_length() <= 4096
    w = blk.weight()
    # binomial 3 sigma
    assert abs(w - 4096 * 0.3) <= 3 * (4096 * 0.3 * 0.7) ** 0.5
    assert bernoulli_block(0, 0.5, rng) == BitNum(0)
    assert bernoulli_block(64, 0.0, rng) == BitNum(0)
    assert bernoulli_block(64, 1.0, rng) == BitNum((1 << 64) - 1)


def test_bernoulli_block_rejects():
    rng = np.random.default_rng(5)
    with pytest.raises(ValueError):
        bernoulli_block(-1, 0.5, rng)
    with pytest.raises(ValueError):
        bernoulli_block(8, 1.5, rng)


def test_exact_weight_block():
    rng = np.random.default_rng(6)
    for w in (0, 1, 17, 64):
        blk = exact_weight_block(64, w, rng)
        assert blk.weight() == w
        assert blk.bit_length() <= 64
    with pytest.raises(ValueError):
        exact_weight_block(8, 9, rng)


def test_series_determinism_and_schema():
    a = gain_series(64, 3, 0.5, trials=5, seed=11)
    b = gain_series(64, 3, 0.5, trials=5, seed=11)
    assert a == b
    for r in a:
        assert tuple(r) == SERIES_COLUMNS
    with pytest.raises(ValueError):
        gain_series(64, 3, 0.5, trials=0, seed=1)
    with pytest.raises(ValueError):
        density_series(64, 3, 0.5, trials=0, seed=1)
    assert MODES == ("nodes-only", "full-recursive")
