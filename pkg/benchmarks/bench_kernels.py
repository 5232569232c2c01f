"""Compare the numba kernel against the pure-NumPy fallback.

The JIT switch is read at import time, so each configuration runs in a
fresh subprocess.  Usage:

    python benchmarks/bench_kernels.py [--k 5] [--also-k6]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = """
import json, time
import bitableaux as bt

bt.monomial_expansion_sweep(3)  # warmup (includes any compile time)
results = {"jit": bt.jit_enabled()}
for k in KS:
    t0 = time.perf_counter()
    rows = bt.monomial_expansion_sweep(k)
    elapsed = time.perf_counter() - t0
    assert all(r[3] == r[4] for r in rows)
    results["k=%d" % k] = round(elapsed, 3)
print(json.dumps(results))
"""


def run(jit: bool, ks: list[int]) -> dict:
    env = dict(os.environ, BITABLEAUX_JIT="1" if jit else "0")
    out = subprocess.run(
        [sys.executable, "-c", WORKLOAD.replace("KS", repr(ks))],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=5, help="largest sweep size to time")
    parser.add_argument("--also-k6", action="store_true", help="include the k=6 sweep")
    args = parser.parse_args()
    ks = sorted({4, args.k} | ({6} if args.also_k6 else set()))

    fast = run(True, ks)
    slow = run(False, ks)
    if not fast["jit"]:
        print("note: numba unavailable, both runs used the fallback")
    header = f"{'sweep':>8} {'numba':>10} {'fallback':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for k in ks:
        key = f"k={k}"
        ratio = slow[key] / fast[key] if fast[key] else float("inf")
        print(f"{key:>8} {fast[key]:>9.3f}s {slow[key]:>9.3f}s {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
