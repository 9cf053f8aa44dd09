"""Kernel lane comparison: python -m opfold.benchmark.

Times the fused fold multiply, the classical multiply, and plain addition
in the pure lane and (when built) the compiled lane, after checking that
both lanes return identical results on the same inputs.
"""

import argparse
import time

import numpy as np

from . import _corepy
from .bitnum import random_bitnum

try:
    from . import _corefast
except ImportError:
    _corefast = None


def _operands(m, count, seed):
    pairs = []
    for t in range(count):
        rng = np.random.default_rng([seed, m, t])
        pairs.append((random_bitnum(m, rng).limbs,
                      random_bitnum(m, rng).limbs))
    return pairs


def _time(fn, pairs, repeat):
    t0 = time.perf_counter()
    for _ in range(repeat):
        for a, b in pairs:
            fn(a, b)
    return (time.perf_counter() - t0) / (repeat * len(pairs))


def main(argv=None):
    parser = argparse.ArgumentParser(prog="python -m opfold.benchmark")
    parser.add_argument("--m", type=int, default=1024)
    parser.add_argument("--k", type=int, default=5)
    parser.add_argument("--pairs", type=int, default=32)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    pairs = _operands(args.m, args.pairs, args.seed)
    lanes = [("pure", _corepy)]
    if _corefast is not None:
        lanes.append(("compiled", _corefast))
    else:
        print("compiled lane not built; timing the pure lane only")

    for a, b in pairs[: min(8, len(pairs))]:
        want_fold = _corepy.fold_multiply(a, b, args.m, args.k)
        want_classical = _corepy.classical_multiply(a, b)
        want_add = _corepy.add(a, b)
        for name, lane in lanes[1:]:
            if lane.fold_multiply(a, b, args.m, args.k) != want_fold:
                raise SystemExit(f"{name} lane fold_multiply mismatch")
            if lane.classical_multiply(a, b) != want_classical:
                raise SystemExit(f"{name} lane classical_multiply mismatch")
            if lane.add(a, b) != want_add:
                raise SystemExit(f"{name} lane add mismatch")
    print(f"lane outputs identical on {min(8, len(pairs))} operand pairs")
    print(f"m = {args.m}, k = {args.k}, "
          f"{len(pairs)} pairs x {args.repeat} repeats")

    results = {}
    for name, lane in lanes:
        results[name] = {
            "fold_multiply": _time(
                lambda a, b: lane.fold_multiply(a, b, args.m, args.k),
                pairs, args.repeat),
            "classical_multiply": _time(
                lane.classical_multiply, pairs, args.repeat),
            "add": _time(lane.add, pairs, args.repeat),
        }

    header = f"{'operation':<20}" + "".join(
        f"{name + ' (us)':>16}" for name, _ in lanes)
    if len(lanes) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for op in ("fold_multiply", "classical_multiply", "add"):
        line = f"{op:<20}"
        for name, _ in lanes:
            line += f"{results[name][op] * 1e6:>16.2f}"
        if len(lanes) == 2:
            line += f"{results['pure'][op] / results['compiled'][op]:>10.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
